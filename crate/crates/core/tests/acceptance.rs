//! Acceptance suite: nine criteria, each with its own time budget. Prints
//! one pass/fail line per criterion and exits non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nilplab::algebra::{Algebra, Element};
use nilplab::exactmath::Field;
use nilplab::freetrunc::TruncatedFreeAlgebra;
use nilplab::morphism::InducedMultHom;
use nilplab::multiplication::{
    left_op, nilpotence_report, power_image, right_op, stable_image, LinearOperator, OperatorAlgebra,
};
use nilplab::scenarios::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

const MAX_DIM: usize = 512;

fn extremal_indices() -> Outcome {
    for n in 2..=7usize {
        let r = nilpotence_report(&build_xixi(n).map_err(err)?).map_err(err)?;
        let expected = (Some(n), Some((1 << (n - 2)) + 1), Some((n - 1).max(1)));
        ensure!((r.n1, r.n2, r.n3) == expected, "n = {n}: got {:?}, expected {expected:?}", (r.n1, r.n2, r.n3));
    }
    Ok("n = 2..7".into())
}

fn equivalence_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut nilpotent, total) = (0, 240);
    for case in 0..total {
        let t = common::random_table(&mut rng);
        let a = t.algebra();
        let r = nilpotence_report(&a).map_err(|e| format!("case {case} {t:?}: {e}"))?;
        let weak = a.weak_series();
        let strong = a.strong_series();
        ensure!(weak.dims() == t.weak_dims(), "case {case}: weak dims {:?} vs oracle {:?}", weak.dims(), t.weak_dims());
        ensure!(r.n1 == weak.vanishing_index && r.is_nilpotent == r.n1.is_some(), "case {case}: n1 mismatch");
        if let (Some(n1), Some(n2), Some(n3)) = (r.n1, r.n2, r.n3) {
            nilpotent += 1;
            ensure!(n3 == n1.saturating_sub(1).max(1), "case {case}: n3 = {n3}, n1 = {n1}");
            ensure!(n1 <= n2 && (n1 < 2 || n2 <= (1 << (n1 - 2)) + 1), "case {case}: n2 = {n2}, n1 = {n1}");
        } else {
            ensure!(r.n1.is_none() && r.n2.is_none() && r.n3.is_none(), "case {case}: partial verdict {r:?}");
        }
        let top = weak.terms.len() + 2;
        let m = OperatorAlgebra::mult_algebra(&a);
        for n in 1..=top {
            ensure!(weak.term(n).is_subspace_of(strong.term(n)), "case {case}: A_[{n}] not in A_({n})");
            if n >= 2 {
                let k = (1usize << (n - 2)) + 1;
                ensure!(strong.term(k).is_subspace_of(weak.term(n)), "case {case}: A_({k}) not in A_[{n}]");
            }
            ensure!(power_image(&m, &a, n) == *weak.term(n + 1), "case {case}: M(A)^{n}(A) != A_[{}]", n + 1);
        }
        ensure!(stable_image(&a).0.is_zero() == r.is_nilpotent, "case {case}: stable image disagrees");
    }
    Ok(format!("{total} random algebras, {nilpotent} nilpotent"))
}

fn lie_collapse() -> Outcome {
    for field in [Field::rationals(), Field::prime(2).map_err(err)?] {
        for n in 3..=6 {
            let a = build_upper_triangular_lie(n, field).map_err(err)?;
            a.require_lie().map_err(err)?;
            let (weak, strong) = (a.weak_series(), a.strong_series());
            let top = weak.terms.len().max(strong.terms.len()) + 1;
            ensure!((1..=top).all(|k| weak.term(k) == strong.term(k)), "n = {n} over {field}: series differ");
            ensure!(weak.vanishing_index == Some(n), "n = {n} over {field}: N1 = {:?}", weak.vanishing_index);
        }
    }
    Ok("n = 3..6 over Q and F_2".into())
}

/// Splits `x^j m t` into `(j, t)`.
fn split_at_marker(word: &str, prefix: char, marker: char) -> Option<(usize, String)> {
    let pos = word.find(marker)?;
    let (head, tail) = word.split_at(pos);
    head.chars().all(|c| c == prefix).then(|| (head.len(), tail[1..].to_string()))
}

/// Rank of the coefficient matrix of `e` with rows `x^j w` and columns the tails.
fn oracle_rank(a: &TruncatedFreeAlgebra, e: &Element, prefix: char, marker: char) -> Result<usize, String> {
    let mut cells: BTreeMap<(usize, String), i64> = BTreeMap::new();
    for (w, c) in a.terms(e) {
        let (j, tail) = split_at_marker(&w.to_string(), prefix, marker).ok_or(format!("unexpected term {w}"))?;
        cells.insert((j, tail), c.to_string().parse().map_err(err)?);
    }
    let rows: Vec<usize> =
        cells.keys().map(|(j, _)| *j).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let cols: Vec<String> =
        cells.keys().map(|(_, t)| t.clone()).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let matrix: Vec<Vec<i64>> =
        rows.iter().map(|j| cols.iter().map(|t| *cells.get(&(*j, t.clone())).unwrap_or(&0)).collect()).collect();
    Ok(common::rational_rank(&matrix))
}

fn unipotent(a: &TruncatedFreeAlgebra, left: char, right: char, sign: i64) -> Result<LinearOperator, String> {
    let alg = a.algebra();
    let l = left_op(alg, &a.word(&left.to_string()).map_err(err)?).map_err(err)?;
    let r = right_op(alg, &a.word(&right.to_string()).map_err(err)?).map_err(err)?;
    let id = LinearOperator::identity(a.field(), a.dim());
    Ok(if sign > 0 { id.sub(&l.compose(&r)) } else { id.sub(&l).add(&r) })
}

fn y_xyz() -> Outcome {
    let mut ranks = Vec::new();
    for d in [4usize, 6, 8, 10] {
        let a = build_xwz(d, MAX_DIM).map_err(err)?;
        let y = y_xyz_element(&a).map_err(err)?;
        let w = a.word("w").map_err(err)?;
        ensure!(unipotent(&a, 'x', 'z', 1)?.apply(&y) == w, "d = {d}: (1 - l_x r_z)(y) != w");
        ensure!(a.truncated_ideal(&w).map_err(err)?.contains(&y), "d = {d}: y not in (w)");
        let mut expected: Vec<String> =
            (0..).take_while(|i| 2 * i + 1 < d).map(|i| format!("{}w{}", "x".repeat(i), "z".repeat(i))).collect();
        let mut got: Vec<String> = a.terms(&y).into_iter().map(|(w, c)| format!("{c}*{w}")).collect();
        expected.iter_mut().for_each(|s| *s = format!("1*{s}"));
        expected.sort();
        got.sort();
        ensure!(got == expected, "d = {d}: expansion {got:?} vs {expected:?}");
        let rank = y_xyz_rank(d, MAX_DIM).map_err(err)?;
        let oracle = oracle_rank(&a, &y, 'x', 'w')?;
        ensure!(rank == oracle && rank == (d - 1).div_ceil(2), "d = {d}: rank {rank}, oracle {oracle}");
        ensure!(run_y_xyz(d, MAX_DIM).map_err(err)?.passed(), "d = {d}: scenario verdict failed");
        ranks.push(rank);
    }
    ensure!(ranks.windows(2).all(|w| w[0] < w[1]), "ranks not strictly increasing: {ranks:?}");
    Ok(format!("ranks {ranks:?} at d = 4, 6, 8, 10"))
}

fn y_xy_yx() -> Outcome {
    let mut ranks = Vec::new();
    for d in [4usize, 6, 8] {
        let a = build_sandwich(d, MAX_DIM).map_err(err)?;
        let g = y_xy_yx_geometric(&a).map_err(err)?;
        let b = y_xy_yx_binomial(&a).map_err(err)?;
        ensure!(g == b, "d = {d}: geometric and binomial computations differ");
        let w = a.word("w").map_err(err)?;
        ensure!(unipotent(&a, 'x', 'x', -1)?.apply(&g) == w, "d = {d}: (1 - l_x + r_x)(y) != w");
        for (word, c) in a.terms(&g) {
            let (i, tail) = split_at_marker(&word.to_string(), 'x', 'w').ok_or(format!("unexpected term {word}"))?;
            let k = tail.len() as u64;
            let sign: i64 = if k.is_multiple_of(2) { 1 } else { -1 };
            let expected = common::binomial(i as u64 + k, k) * sign;
            ensure!(
                c.to_string() == expected.to_string(),
                "d = {d}: coefficient of {word} is {c}, expected {expected}"
            );
        }
        let nonzero = a.terms(&g).len();
        ensure!(nonzero == d * (d - 1) / 2, "d = {d}: {nonzero} terms, expected {}", d * (d - 1) / 2);
        let rank = y_xy_yx_rank(d, MAX_DIM).map_err(err)?;
        let oracle = oracle_rank(&a, &g, 'x', 'w')?;
        ensure!(rank == oracle && rank == d - 1, "d = {d}: rank {rank}, oracle {oracle}");
        ensure!(run_y_xy_yx(d, MAX_DIM).map_err(err)?.passed(), "d = {d}: scenario verdict failed");
        ranks.push(rank);
    }
    ensure!(ranks.windows(2).all(|w| w[0] < w[1]), "ranks not strictly increasing: {ranks:?}");
    Ok(format!("ranks {ranks:?} at d = 4, 6, 8"))
}

fn nonassociative_families() -> Outcome {
    let a = build_xwi(6).map_err(err)?;
    let right = OperatorAlgebra::mult_algebra_right(&a).nilpotency_index();
    let left = OperatorAlgebra::mult_algebra_left(&a).nilpotency_index();
    ensure!(right.is_some_and(|k| k <= 2), "xw_i: M_r index {right:?}");
    ensure!(left.is_some_and(|k| k >= 6), "xw_i: M_l index {left:?}");
    ensure!(run_xwi(6).map_err(err)?.passed(), "xw_i scenario failed");

    let b = build_alternating(8).map_err(err)?;
    let bl = OperatorAlgebra::mult_algebra_left(&b).nilpotency_index();
    let br = OperatorAlgebra::mult_algebra_right(&b).nilpotency_index();
    ensure!(bl.is_some() && br.is_some(), "alternating: M_l {bl:?}, M_r {br:?}");
    let n1: Vec<Option<usize>> = (1..=8)
        .map(|d| build_alternating(d).map(|b| b.weak_series().vanishing_index))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    ensure!(n1.windows(2).all(|w| w[0] < w[1]), "alternating: N1 not increasing {n1:?}");
    ensure!(run_alternating(8).map_err(err)?.passed(), "alternating scenario failed");

    let c = build_wiwi(6).map_err(err)?;
    let closure = c.ideal_closure(&[c.basis_element(0)]);
    ensure!((0..6).all(|j| closure.depth_of(&c.basis_element(j)) == Some(j)), "w_i w_i: depths wrong");
    let y = (0..6).fold(c.zero_element(), |acc, i| acc.add(&c.basis_element(i)));
    let q = c.quotient(&c.span(&[c.basis_element(5)])).map_err(err)?;
    let yq = q.projection.apply(&y).map_err(err)?;
    let lhs = yq.sub(&q.algebra.multiply(&yq, &yq).map_err(err)?);
    ensure!(lhs == q.projection.apply(&c.basis_element(0)).map_err(err)?, "w_i w_i: y - y^2 != w_0 in the quotient");
    ensure!(run_wiwi(6).map_err(err)?.passed(), "w_i w_i scenario failed");
    Ok(format!("M_l index {} at d = 6; alternating M_l {}, M_r {}", left.unwrap(), bl.unwrap(), br.unwrap()))
}

fn modp_lie() -> Outcome {
    for p in [2u64, 3, 5, 7] {
        let b = build_modp_lie(p).map_err(err)?;
        ensure!(b.jacobi_witness().is_none() && b.is_anticommutative(), "p = {p}: not a Lie algebra");
        ensure!(b.dim() == p as usize + 2, "p = {p}: dim {}", b.dim());
        let derived = b.derived_series();
        ensure!(
            derived.vanishing_index == Some(3) && !derived.term(2).is_zero(),
            "p = {p}: derived dims {:?}",
            derived.dims()
        );
        let b1 = b.subalgebra(derived.term(1)).map_err(err)?;
        ensure!(!b1.is_nilpotent(), "p = {p}: B^(1) is nilpotent");
        let (d, y0) = (b.named("D").ok_or("no D")?, b.named("Y0").ok_or("no Y0")?);
        ensure!(b.multiply(&d, &y0).map_err(err)? == y0, "p = {p}: [D, Y_0] != Y_0");
        ensure!(run_modp_lie(p).map_err(err)?.passed(), "p = {p}: scenario failed");
    }
    Ok("p = 2, 3, 5, 7".into())
}

fn intertwines(h: &nilplab::morphism::Homomorphism) -> Result<bool, String> {
    let induced = InducedMultHom::new(h).map_err(err)?;
    if !induced.is_surjective().map_err(err)? {
        return Ok(false);
    }
    for u in induced.domain_mult().generators() {
        let v = induced.apply(u).map_err(err)?;
        if v.map().compose(h.map()) != h.map().compose(u.map()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn functoriality() -> Outcome {
    let towers: [(&str, &[usize]); 3] = [("xixi", &[3, 4, 5, 6, 7]), ("y-xyz", &[4, 6, 8]), ("y-xy-yx", &[4, 6, 8])];
    for (family, degrees) in towers {
        let stages = degrees
            .iter()
            .rev()
            .map(|&d| build_stage(family, d, MAX_DIM))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        for i in 0..stages.len() {
            for j in i + 1..stages.len() {
                let h = projection(&stages[i], &stages[j]).map_err(err)?;
                ensure!(intertwines(&h)?, "{family}: v ∘ h != h ∘ u for {} → {}", stages[i].degree, stages[j].degree);
                for k in j + 1..stages.len() {
                    let g = h.clone();
                    let h2 = projection(&stages[j], &stages[k]).map_err(err)?;
                    ensure!(functoriality_holds(&g, &h2).map_err(err)?, "{family}: M(hg) != M(h)M(g)");
                }
            }
        }
        ensure!(run_tower(family, degrees, MAX_DIM, false).map_err(err)?.passed(), "{family}: tower report failed");
    }
    Ok("xixi, y-xyz, y-xy-yx towers".into())
}

fn quotients_nilpotent(a: &Algebra, ideals: &[Vec<Element>]) -> Result<usize, String> {
    let mut count = 0;
    for gens in ideals {
        let ideal = a.ideal_closure(gens).ideal;
        let q = a.quotient(&ideal).map_err(err)?;
        ensure!(q.algebra.is_nilpotent(), "quotient of dimension {} is not nilpotent", q.algebra.dim());
        nilpotence_report(&q.algebra).map_err(err)?;
        count += 1;
    }
    Ok(count)
}

fn principal(a: &Algebra) -> Vec<Vec<Element>> {
    a.basis().into_iter().map(|e| vec![e]).collect()
}

fn finite_stage_quotients() -> Outcome {
    let mut count = 0;
    for d in 2..=8 {
        let a = build_xwz(d, MAX_DIM).map_err(err)?;
        let y = y_xyz_element(&a).map_err(err)?;
        let mut ideals = vec![vec![a.word("w").map_err(err)?], vec![y]];
        if d <= 6 {
            ideals.extend(principal(a.algebra()));
        }
        count += quotients_nilpotent(a.algebra(), &ideals)?;
    }
    for d in 2..=7 {
        let a = build_sandwich(d, MAX_DIM).map_err(err)?;
        let y = y_xy_yx_geometric(&a).map_err(err)?;
        count += quotients_nilpotent(a.algebra(), &[vec![a.word("w").map_err(err)?], vec![y]])?;
    }
    for d in 2..=5 {
        let a = build_free_xy(d).map_err(err)?;
        let q = a.field();
        let r = a.combination(&[("y", q.one()), ("xyyx", q.from_i64(-1))]).map_err(err)?;
        let ideals = vec![vec![r], vec![a.word("y").map_err(err)?], vec![a.word("x").map_err(err)?]];
        count += quotients_nilpotent(a.algebra(), &ideals)?;
    }
    for d in 1..=8 {
        for a in [build_xwi(d), build_wiwi(d), build_alternating(d)] {
            let a = a.map_err(err)?;
            let y = a.basis().into_iter().skip(a.dim().saturating_sub(d)).fold(a.zero_element(), |s, e| s.add(&e));
            let mut ideals = principal(&a);
            ideals.push(vec![y]);
            count += quotients_nilpotent(&a, &ideals)?;
        }
    }
    for n in 2..=7 {
        let a = build_xixi(n).map_err(err)?;
        count += quotients_nilpotent(&a, &principal(&a))?;
    }
    Ok(format!("{count} quotients"))
}

struct Criterion {
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion {
            name: "extremal indices of x_m x_m = x_{m+1}",
            budget: Some(Duration::from_secs(1)),
            run: extremal_indices,
        },
        Criterion {
            name: "equivalence of nilpotence criteria",
            budget: Some(Duration::from_secs(30)),
            run: equivalence_suite,
        },
        Criterion { name: "Lie series collapse", budget: Some(Duration::from_secs(5)), run: lie_collapse },
        Criterion { name: "y = w + xyz reproduction", budget: Some(Duration::from_secs(10)), run: y_xyz },
        Criterion { name: "y = w + xy - yx reproduction", budget: Some(Duration::from_secs(10)), run: y_xy_yx },
        Criterion {
            name: "nonassociative families",
            budget: Some(Duration::from_secs(5)),
            run: nonassociative_families,
        },
        Criterion { name: "mod-p solvable Lie algebra", budget: Some(Duration::from_secs(5)), run: modp_lie },
        Criterion { name: "functoriality of M", budget: Some(Duration::from_secs(5)), run: functoriality },
        Criterion { name: "finite-stage quotients nilpotent", budget: None, run: finite_stage_quotients },
    ];
    let mut failures = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (o, _) => o,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(d) => ("FAIL", d.clone()),
        };
        failures += usize::from(outcome.is_err());
        println!("criterion {}: {status}  {}  [{elapsed:.2?}]  {detail}", i + 1, c.name);
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
