//! Finite truncation towers `A_{d_1} → A_{d_2} → …` and their coherence checks.

use std::sync::Arc;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::exactmath::Matrix;
use crate::freetrunc::TruncatedFreeAlgebra;
use crate::morphism::{Homomorphism, InducedMultHom};

use super::builders::{build_alternating, build_sandwich, build_wiwi, build_xixi, build_xwi, build_xwz};
use super::power_series::{y_xy_yx_geometric, y_xyz_element};
use super::report::{ReportBuilder, ScenarioReport};

/// One stage of a tower, with the family's distinguished element if it has one.
pub struct Stage {
    pub degree: usize,
    pub algebra: Arc<Algebra>,
    pub element: Option<Element>,
    pub witness: usize,
    free: Option<TruncatedFreeAlgebra>,
}

/// Families that have truncation towers, what their witness measures, and
/// whether it must strictly increase with the degree. The `y-xyz` rank is
/// `ceil((d-1)/2)`, so it only grows on every second degree.
pub const TOWER_FAMILIES: &[(&str, &str, bool)] = &[
    ("y-xyz", "right-coefficient rank of y_d", false),
    ("y-xy-yx", "rank of the (1 + x)^(-1-i) coefficient family", true),
    ("xixi", "weak nilpotence index N1", true),
    ("y-xy", "weak nilpotence index N1", true),
    ("y-yy", "weak nilpotence index N1", true),
    ("alternating", "weak nilpotence index N1", true),
];

fn sum_of_ws(a: &Algebra, offset: usize) -> Element {
    (offset..a.dim()).fold(a.zero_element(), |acc, i| acc.add(&a.basis_element(i)))
}

fn weak_index(a: &Algebra) -> usize {
    a.weak_series().vanishing_index.unwrap_or(usize::MAX)
}

pub fn build_stage(family: &str, degree: usize, max_dim: usize) -> Result<Stage> {
    let plain = |algebra: Algebra, element: Option<Element>| {
        if algebra.dim() > max_dim {
            return Err(Error::DimensionLimit { dim: algebra.dim(), limit: max_dim });
        }
        let witness = weak_index(&algebra);
        Ok(Stage { degree, algebra: Arc::new(algebra), element, witness, free: None })
    };
    match family {
        "y-xyz" | "y-xy-yx" => {
            let (a, y, rank) = if family == "y-xyz" {
                let a = build_xwz(degree, max_dim)?;
                let y = y_xyz_element(&a)?;
                let rank = a.right_coefficient_profile(&y, 'x', 'w', 'z')?.rank;
                (a, y, rank)
            } else {
                let a = build_sandwich(degree, max_dim)?;
                let y = y_xy_yx_geometric(&a)?;
                let rank = a.right_coefficient_profile(&y, 'x', 'w', 'x')?.rank;
                (a, y, rank)
            };
            Ok(Stage { degree, algebra: a.algebra().clone(), element: Some(y), witness: rank, free: Some(a) })
        }
        "xixi" => plain(build_xixi(degree)?, None),
        "y-xy" => {
            let a = build_xwi(degree)?;
            let y = sum_of_ws(&a, 1);
            plain(a, Some(y))
        }
        "y-yy" => {
            let a = build_wiwi(degree)?;
            let y = sum_of_ws(&a, 0);
            plain(a, Some(y))
        }
        "alternating" => plain(build_alternating(degree)?, None),
        _ => Err(Error::UnknownScenario {
            name: family.to_string(),
            registered: TOWER_FAMILIES.iter().map(|(n, _, _)| n.to_string()).collect(),
        }),
    }
}

/// The truncation `from → to`; for the structure-constant families the
/// smaller stage is spanned by the leading basis vectors.
pub fn projection(from: &Stage, to: &Stage) -> Result<Homomorphism> {
    if let (Some(a), Some(b)) = (&from.free, &to.free) {
        return a.map_onto(b);
    }
    let (m, n) = (to.algebra.dim(), from.algebra.dim());
    if m > n {
        return Err(Error::InvalidArgument("cannot project onto a larger stage".into()));
    }
    let mut matrix = Matrix::zero(from.algebra.field(), m, n);
    for i in 0..m {
        matrix.set(i, i, from.algebra.field().one());
    }
    Homomorphism::new(from.algebra.clone(), to.algebra.clone(), &matrix)
}

/// `M(h ∘ g) = M(h) M(g)` on the generators of `M(A)`, with `M(g)` and `M(h)` surjective.
pub fn functoriality_holds(g: &Homomorphism, h: &Homomorphism) -> Result<bool> {
    let mg = InducedMultHom::new(g)?;
    let mh = InducedMultHom::new(h)?;
    let mhg = InducedMultHom::new(&h.compose(g)?)?;
    if !mg.is_surjective()? || !mh.is_surjective()? {
        return Ok(false);
    }
    for u in mg.domain_mult().generators() {
        if mhg.apply(u)? != mh.apply(&mg.apply(u)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the stages at `degrees` and checks `f_{ji} ∘ p_i = p_j`, compatibility
/// of the distinguished elements, growth of the witness, and optionally functoriality
/// of `M` along consecutive truncations.
pub fn run_tower(family: &str, degrees: &[usize], max_dim: usize, functoriality: bool) -> Result<ScenarioReport> {
    if degrees.is_empty() {
        return Err(Error::InvalidArgument("a tower needs at least one degree".into()));
    }
    let mut sorted: Vec<usize> = degrees.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.dedup();
    let mut r = ReportBuilder::new(&format!("tower {family}"));
    r.param("degrees", &sorted);
    let stages = sorted.iter().map(|&d| build_stage(family, d, max_dim)).collect::<Result<Vec<_>>>()?;
    let top = &stages[0];
    let from_top = stages.iter().map(|s| projection(top, s)).collect::<Result<Vec<_>>>()?;

    let mut coherent = true;
    for i in 0..stages.len() {
        for j in i + 1..stages.len() {
            let f = projection(&stages[i], &stages[j])?;
            coherent &= f.compose(&from_top[i])?.matrix() == from_top[j].matrix();
        }
    }
    r.holds("f_ji ∘ p_i = p_j for all stages", "the truncations form an inverse system", coherent);

    if let Some(y_top) = &top.element {
        let mut compatible = true;
        for (s, p) in stages.iter().zip(&from_top) {
            compatible &= Some(p.apply(y_top)?) == s.element;
        }
        r.holds(
            "distinguished elements are compatible",
            "a compatible family defines an element of the inverse limit",
            compatible,
        );
    }

    // ascending order for the growth curve
    let curve: Vec<(usize, usize)> = stages.iter().rev().map(|s| (s.degree, s.witness)).collect();
    let (what, strict) = TOWER_FAMILIES.iter().find(|(n, _, _)| *n == family).map_or(("", false), |(_, w, s)| (*w, *s));
    r.holds("witness nondecreasing along the tower", what, curve.windows(2).all(|w| w[0].1 <= w[1].1));
    if strict {
        r.holds("witness strictly increasing along the tower", what, curve.windows(2).all(|w| w[0].1 < w[1].1));
    }
    if family == "y-xyz" {
        let formula = curve.iter().all(|&(d, rank)| rank == (d - 1).div_ceil(2));
        r.holds("rank = ceil((d-1)/2) at every stage", what, formula);
        if curve.windows(2).all(|w| w[1].0 >= w[0].0 + 2) {
            r.holds("rank strictly increasing across steps of two", what, curve.windows(2).all(|w| w[0].1 < w[1].1));
        }
    }

    if functoriality && stages.len() > 1 {
        let mut ok = true;
        for i in 1..stages.len() {
            let g = &from_top[i - 1];
            let h = projection(&stages[i - 1], &stages[i])?;
            ok &= functoriality_holds(g, &h)?;
        }
        r.holds("M(h) surjective and M(hg) = M(h) M(g)", "a surjection h induces M(h) with M(h)(u) ∘ h = h ∘ u", ok);
    }
    r.witness("curve", &curve).witness("witness", what);
    Ok(r.finish())
}
