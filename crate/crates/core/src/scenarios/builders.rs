//! Structure-constant constructors for the named example algebras.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactmath::{Field, Scalar};
use crate::freetrunc::{build_truncated, ForbiddenSet, Presentation, Sandwich, TruncatedFreeAlgebra, Word};

fn q() -> Field {
    Field::rationals()
}

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::InvalidArgument(format!("{name} must be at least {min}, got {value}")));
    }
    Ok(())
}

fn ones(entries: impl IntoIterator<Item = (usize, usize, usize)>, field: Field) -> Vec<(usize, usize, usize, Scalar)> {
    entries.into_iter().map(|(i, j, k)| (i, j, k, field.one())).collect()
}

/// Basis `x_1 .. x_{n-1}` with `x_m x_m = x_{m+1}` (and `x_{n-1}^2 = 0`).
pub fn build_xixi(n: usize) -> Result<Algebra> {
    at_least("n", n, 2)?;
    let labels = (1..n).map(|m| format!("x{m}")).collect();
    Algebra::new(q(), n - 1, labels, ones((0..n - 2).map(|m| (m, m, m + 1)), q()))
}

fn x_and_ws(d: usize) -> Vec<String> {
    std::iter::once("x".to_string()).chain((0..d).map(|i| format!("w{i}"))).collect()
}

/// Basis `x, w_0 .. w_{d-1}` with `x w_i = w_{i+1}`.
pub fn build_xwi(d: usize) -> Result<Algebra> {
    at_least("degree", d, 1)?;
    Algebra::new(q(), d + 1, x_and_ws(d), ones((0..d - 1).map(|i| (0, i + 1, i + 2)), q()))
}

/// Basis `w_0 .. w_{d-1}` with `w_i w_i = w_{i+1}`.
pub fn build_wiwi(d: usize) -> Result<Algebra> {
    at_least("degree", d, 1)?;
    let labels = (0..d).map(|i| format!("w{i}")).collect();
    Algebra::new(q(), d, labels, ones((0..d - 1).map(|i| (i, i, i + 1)), q()))
}

/// Basis `x, w_0 .. w_{d-1}` with `x w_{2i} = w_{2i+1}` and `w_{2i+1} x = w_{2i+2}`.
pub fn build_alternating(d: usize) -> Result<Algebra> {
    at_least("degree", d, 1)?;
    // w_j sits at index j + 1
    let entries = (0..d - 1).map(|j| if j % 2 == 0 { (0, j + 1, j + 2) } else { (j + 1, 0, j + 2) });
    Algebra::new(q(), d + 1, x_and_ws(d), ones(entries, q()))
}

/// The `(p+2)`-dimensional Lie algebra over `F_p` with basis `D, XD, Y_0 .. Y_{p-1}`
/// (`Y_n` is multiplication by `x^n e^x`), from the relations
/// `[D, XD] = D`, `[D, Y_n] = n Y_{n-1} + Y_n`, `[XD, Y_n] = n Y_n + Y_{n+1}` with `Y_p = 0`.
pub fn build_modp_lie(p: u64) -> Result<Algebra> {
    let field = Field::prime(p)?;
    let p = p as usize;
    let (d, xd, y) = (0usize, 1usize, |n: usize| n + 2);
    let mut brackets: Vec<(usize, usize, usize, Scalar)> = vec![(d, xd, d, field.one())];
    for n in 0..p {
        let coeff = field.from_i64(n as i64);
        if n > 0 && !coeff.is_zero() {
            brackets.push((d, y(n), y(n - 1), coeff.clone()));
        }
        brackets.push((d, y(n), y(n), field.one()));
        if !coeff.is_zero() {
            brackets.push((xd, y(n), y(n), coeff));
        }
        if n + 1 < p {
            brackets.push((xd, y(n), y(n + 1), field.one()));
        }
    }
    // antisymmetrize: each entry of [a, b] also gives [b, a] = -[a, b]
    let mut entries = Vec::new();
    for (i, j, k, c) in brackets {
        entries.push((j, i, k, -&c));
        entries.push((i, j, k, c));
    }
    let mut labels = vec!["D".to_string(), "XD".to_string()];
    labels.extend((0..p).map(|n| format!("Y{n}")));
    let algebra = Algebra::new(field, p + 2, labels, entries)?;
    algebra.require_lie()?;
    Ok(algebra)
}

/// `[x, y] = y` over `Q`.
pub fn build_two_dim_solvable() -> Result<Algebra> {
    Algebra::from_i64(q(), &["x", "y"], &[(0, 1, 1, 1), (1, 0, 1, -1)])
}

fn matrix_units(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Strictly upper-triangular `n × n` matrices under the matrix product.
pub fn build_upper_triangular(n: usize, field: Field) -> Result<Algebra> {
    let units = matrix_units(n);
    let index = |ij: (usize, usize)| units.iter().position(|&u| u == ij).expect("matrix unit");
    let labels = units.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    let mut entries = Vec::new();
    for &(i, j) in &units {
        for &(k, l) in &units {
            if j == k {
                entries.push((index((i, j)), index((k, l)), index((i, l)), field.one()));
            }
        }
    }
    Algebra::new(field, units.len(), labels, entries)
}

/// Strictly upper-triangular `n × n` matrices under the commutator.
pub fn build_upper_triangular_lie(n: usize, field: Field) -> Result<Algebra> {
    let lie = build_upper_triangular(n, field)?.commutator_algebra();
    lie.require_lie()?;
    Ok(lie)
}

fn presentation(alphabet: &str, forbidden: ForbiddenSet, degree: usize) -> Result<Presentation> {
    Presentation::new(q(), alphabet.chars().collect(), forbidden, degree)
}

/// Monomial relations whose surviving words are the subwords of `x^i w z^j`.
pub fn xwz_presentation(degree: usize) -> Result<Presentation> {
    let literals = ["xz", "wx", "ww", "zw", "zx"].into_iter().map(Word::from).collect();
    presentation("xwz", ForbiddenSet { literals, sandwiches: vec![] }, degree)
}

/// Relations `w x^i w = 0` for all `i ≥ 0`, as one sandwich rule.
pub fn sandwich_presentation(degree: usize) -> Result<Presentation> {
    let rule = Sandwich { left: 'w', middle: ['x'].into(), right: 'w' };
    presentation("xw", ForbiddenSet { literals: Default::default(), sandwiches: vec![rule] }, degree)
}

/// The free algebra on `x, y` with no relations.
pub fn free_xy_presentation(degree: usize) -> Result<Presentation> {
    presentation("xy", ForbiddenSet::default(), degree)
}

pub fn build_xwz(degree: usize, max_dim: usize) -> Result<TruncatedFreeAlgebra> {
    TruncatedFreeAlgebra::build(&xwz_presentation(degree)?, max_dim)
}

pub fn build_sandwich(degree: usize, max_dim: usize) -> Result<TruncatedFreeAlgebra> {
    TruncatedFreeAlgebra::build(&sandwich_presentation(degree)?, max_dim)
}

/// Default-capped variant used by tests and examples.
pub fn build_free_xy(degree: usize) -> Result<TruncatedFreeAlgebra> {
    build_truncated(&free_xy_presentation(degree)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplication::OperatorAlgebra;

    #[test]
    fn xixi_small_cases() {
        assert!(build_xixi(1).is_err());
        let a = build_xixi(2).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.basis_product(0, 0).is_zero());
    }

    #[test]
    fn xwi_one_sided_indices() {
        for d in 1..=7 {
            let a = build_xwi(d).unwrap();
            assert_eq!(a.weak_series().vanishing_index, Some(d + 1), "d={d}");
            assert_eq!(OperatorAlgebra::mult_algebra_left(&a).nilpotency_index(), Some(d));
            let right = OperatorAlgebra::mult_algebra_right(&a).nilpotency_index();
            assert_eq!(right, Some(if d == 1 { 1 } else { 2 }));
        }
    }

    #[test]
    fn alternating_indices() {
        for d in 4..=9 {
            let a = build_alternating(d).unwrap();
            assert_eq!(a.weak_series().vanishing_index, Some(d + 1));
            assert_eq!(OperatorAlgebra::mult_algebra_left(&a).nilpotency_index(), Some(3));
            assert_eq!(OperatorAlgebra::mult_algebra_right(&a).nilpotency_index(), Some(3));
        }
    }

    #[test]
    fn wiwi_is_a_squares_chain() {
        let a = build_wiwi(5).unwrap();
        assert_eq!(a.products(), build_xixi(6).unwrap().products());
    }

    #[test]
    fn modp_lie_brackets() {
        let b = build_modp_lie(3).unwrap();
        assert_eq!(b.dim(), 5);
        let f = Field::prime(3).unwrap();
        // [D, Y_2] = 2 Y_1 + Y_2, [XD, Y_2] = 2 Y_2 (Y_3 = 0)
        assert_eq!(
            b.multiply(&b.basis_element(0), &b.basis_element(4)).unwrap(),
            b.element_from_i64(&[0, 0, 0, 2, 1]).unwrap()
        );
        assert_eq!(
            b.multiply(&b.basis_element(1), &b.basis_element(4)).unwrap(),
            b.element_from_i64(&[0, 0, 0, 0, 2]).unwrap()
        );
        assert_eq!(b.field(), f);
        assert!(build_modp_lie(4).is_err());
    }

    #[test]
    fn upper_triangular_builders() {
        let a = build_upper_triangular(4, q()).unwrap();
        assert_eq!(a.dim(), 6);
        assert!(a.is_associative());
        assert!(build_upper_triangular_lie(1, q()).unwrap().dim() == 0);
        let h = build_upper_triangular_lie(3, Field::prime(2).unwrap()).unwrap();
        assert!(h.structure_checks().lie);
    }

    #[test]
    fn presentations_build() {
        assert_eq!(build_xwz(8, 512).unwrap().dim(), 42);
        assert_eq!(build_sandwich(4, 512).unwrap().dim(), 2 + 3 + 4);
        assert_eq!(build_free_xy(4).unwrap().dim(), 14);
    }
}
