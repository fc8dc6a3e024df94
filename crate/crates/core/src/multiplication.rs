//! Multiplication operators and the operator algebras they generate.
//!
//! `M(A)` is the nonunital subalgebra of `End_k(A)` generated by all `l_x`
//! and `r_x`; `M_l`, `M_r` and `M_a` use the left, right and associator maps
//! instead. Since `x ↦ l_x`, `x ↦ r_x` are linear and `(x, z) ↦ a_{x,z}` is
//! bilinear, basis elements already give generating sets.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Element, Subspace};
use crate::error::{Error, Result};
use crate::exactmath::{Field, LinearMap, Matrix, RowSpace, Scalar, SparseVec};

/// Square linear map on the coordinate space of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOperator {
    map: LinearMap,
}

impl LinearOperator {
    pub fn from_map(map: LinearMap) -> LinearOperator {
        assert_eq!(map.rows(), map.cols(), "operators are square");
        LinearOperator { map }
    }

    pub fn from_matrix(m: &Matrix) -> Result<LinearOperator> {
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
        }
        Ok(LinearOperator { map: LinearMap::from_matrix(m) })
    }

    pub fn identity(field: Field, dim: usize) -> LinearOperator {
        LinearOperator { map: LinearMap::identity(field, dim) }
    }

    pub fn zero(field: Field, dim: usize) -> LinearOperator {
        LinearOperator { map: LinearMap::zero(field, dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.map.cols()
    }

    pub fn field(&self) -> Field {
        self.map.field()
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn matrix(&self) -> Matrix {
        self.map.to_matrix()
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }

    pub fn apply(&self, e: &Element) -> Element {
        assert_eq!(e.dim(), self.dim(), "operator and element dimensions differ");
        Element::from_parts(e.field(), e.dim(), self.map.apply(e.coords()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearOperator) -> LinearOperator {
        LinearOperator { map: self.map.compose(&other.map) }
    }

    pub fn add(&self, other: &LinearOperator) -> LinearOperator {
        LinearOperator { map: self.map.add(&other.map) }
    }

    pub fn sub(&self, other: &LinearOperator) -> LinearOperator {
        LinearOperator { map: self.map.sub(&other.map) }
    }

    pub fn scale(&self, c: &Scalar) -> LinearOperator {
        LinearOperator { map: self.map.scale(c) }
    }

    pub fn power(&self, k: usize) -> LinearOperator {
        LinearOperator { map: self.map.power(k) }
    }

    /// Smallest `k ≥ 1` with `u^k = 0`.
    pub fn nilpotency_index(&self) -> Option<usize> {
        self.map.nilpotency_index()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.matrix().to_strings()
    }

    fn flatten(&self) -> SparseVec {
        self.map.flatten()
    }
}

fn check_same(a: &LinearOperator, b: &LinearOperator) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch { left: a.field().to_string(), right: b.field().to_string() });
    }
    Ok(())
}

/// `l_x`: `y ↦ xy`.
pub fn left_op(a: &Algebra, x: &Element) -> Result<LinearOperator> {
    a.check(x)?;
    let columns = (0..a.dim()).map(|j| a.mul_vec(x.coords(), &SparseVec::unit(j, a.field()))).collect();
    Ok(LinearOperator { map: LinearMap::from_columns(a.field(), a.dim(), columns) })
}

/// `r_x`: `y ↦ yx`.
pub fn right_op(a: &Algebra, x: &Element) -> Result<LinearOperator> {
    a.check(x)?;
    let columns = (0..a.dim()).map(|j| a.mul_vec(&SparseVec::unit(j, a.field()), x.coords())).collect();
    Ok(LinearOperator { map: LinearMap::from_columns(a.field(), a.dim(), columns) })
}

/// `a_{x,z}`: `y ↦ x(yz) - (xy)z`.
pub fn associator_op(a: &Algebra, x: &Element, z: &Element) -> Result<LinearOperator> {
    a.check(x)?;
    a.check(z)?;
    let columns = (0..a.dim())
        .map(|j| {
            let y = SparseVec::unit(j, a.field());
            let left = a.mul_vec(x.coords(), &a.mul_vec(&y, z.coords()));
            let right = a.mul_vec(&a.mul_vec(x.coords(), &y), z.coords());
            left.sub(&right)
        })
        .collect();
    Ok(LinearOperator { map: LinearMap::from_columns(a.field(), a.dim(), columns) })
}

/// Quasimultiplication `u * v = u + v + uv`.
pub fn quasi_mult(u: &LinearOperator, v: &LinearOperator) -> Result<LinearOperator> {
    check_same(u, v)?;
    Ok(u.add(v).add(&u.compose(v)))
}

/// The quasiinverse `(1 + u)^{-1} - 1`, defined whenever `1 + u` is invertible.
pub fn quasiinverse(u: &LinearOperator) -> Result<LinearOperator> {
    let one = LinearOperator::identity(u.field(), u.dim());
    let shifted = one.add(u).matrix();
    match shifted.inverse()? {
        Some(inv) => Ok(LinearOperator::from_matrix(&inv)?.sub(&one)),
        None => Err(Error::NotQuasiInvertible { determinant: shifted.determinant()?.to_string() }),
    }
}

/// Finite-dimensional subalgebra of `End_k(A)` generated by a set of operators.
#[derive(Clone, Debug)]
pub struct OperatorAlgebra {
    field: Field,
    acting_dim: usize,
    generators: Vec<LinearOperator>,
    span: RowSpace,
}

/// Dimensions of `M ⊇ M^2 ⊇ …` and the first vanishing exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerFiltration {
    pub dims: Vec<usize>,
    pub nilpotency_index: Option<usize>,
}

impl OperatorAlgebra {
    /// Closure of `span(generators)` under composition.
    ///
    /// Only left composition by generators is performed: every element of the
    /// generated algebra is a combination of words `g_1 ∘ … ∘ g_k`, and each
    /// word is `g_1 ∘ (shorter word)`. A worklist of the vectors that actually
    /// enlarged the span is enough because composition is linear.
    pub fn generate(field: Field, acting_dim: usize, generators: Vec<LinearOperator>) -> OperatorAlgebra {
        let n2 = acting_dim * acting_dim;
        let mut span = RowSpace::new(field, n2);
        let mut work: Vec<LinearOperator> = Vec::new();
        for g in &generators {
            assert_eq!(g.dim(), acting_dim, "generator acts on the wrong space");
            if span.insert(&g.flatten()) {
                work.push(g.clone());
            }
        }
        while let Some(m) = work.pop() {
            for g in &generators {
                let p = g.compose(&m);
                if span.insert(&p.flatten()) {
                    work.push(p);
                }
            }
        }
        let algebra = OperatorAlgebra { field, acting_dim, generators, span };
        assert!(algebra.closed_under_generators(), "operator closure is not closed under generators");
        algebra
    }

    fn closed_under_generators(&self) -> bool {
        let basis = self.basis();
        self.generators.iter().all(|g| basis.iter().all(|b| self.span.contains(&g.compose(b).flatten())))
    }

    /// Exhaustive check that the product of any two basis elements stays in the span.
    pub fn is_closed_under_composition(&self) -> bool {
        let basis = self.basis();
        basis.iter().all(|a| basis.iter().all(|b| self.span.contains(&a.compose(b).flatten())))
    }

    /// `M(A)`, generated by `l_{e_i}` and `r_{e_i}`.
    pub fn mult_algebra(a: &Algebra) -> OperatorAlgebra {
        let mut gens = left_generators(a);
        gens.extend(right_generators(a));
        Self::generate(a.field(), a.dim(), gens)
    }

    /// `M_l(A)`, generated by left multiplications.
    pub fn mult_algebra_left(a: &Algebra) -> OperatorAlgebra {
        Self::generate(a.field(), a.dim(), left_generators(a))
    }

    /// `M_r(A)`, generated by right multiplications.
    pub fn mult_algebra_right(a: &Algebra) -> OperatorAlgebra {
        Self::generate(a.field(), a.dim(), right_generators(a))
    }

    /// `M_a(A)`, generated by the associator maps `a_{e_i, e_j}`.
    pub fn mult_algebra_assoc(a: &Algebra) -> OperatorAlgebra {
        let basis = a.basis();
        let mut gens = Vec::new();
        for x in &basis {
            for z in &basis {
                let op = associator_op(a, x, z).expect("basis elements belong to the algebra");
                if !op.is_zero() {
                    gens.push(op);
                }
            }
        }
        Self::generate(a.field(), a.dim(), gens)
    }

    pub fn dim(&self) -> usize {
        self.span.rank()
    }

    pub fn acting_dim(&self) -> usize {
        self.acting_dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> &[LinearOperator] {
        &self.generators
    }

    /// Basis in rref order of the flattened operators.
    pub fn basis(&self) -> Vec<LinearOperator> {
        self.span
            .rows()
            .map(|r| LinearOperator { map: LinearMap::unflatten(self.field, self.acting_dim, self.acting_dim, r) })
            .collect()
    }

    pub fn contains(&self, u: &LinearOperator) -> bool {
        u.dim() == self.acting_dim && self.span.contains(&u.flatten())
    }

    /// Whether `ops` span exactly this algebra.
    pub fn is_spanned_by(&self, ops: &[LinearOperator]) -> bool {
        let mut span = RowSpace::new(self.field, self.acting_dim * self.acting_dim);
        for u in ops {
            if u.dim() != self.acting_dim {
                return false;
            }
            span.insert(&u.flatten());
        }
        span == self.span
    }

    /// Same span of operators.
    pub fn same_span(&self, other: &OperatorAlgebra) -> bool {
        self.span == other.span
    }

    /// Basis of `M^n`, using `M^{k+1} = span{g ∘ m : g generator, m ∈ M^k}`.
    pub fn power(&self, n: usize) -> Vec<LinearOperator> {
        assert!(n >= 1, "powers start at 1");
        let mut level = self.basis();
        for _ in 1..n {
            level = self.next_power(&level).0;
        }
        level
    }

    fn next_power(&self, level: &[LinearOperator]) -> (Vec<LinearOperator>, RowSpace) {
        let mut span = RowSpace::new(self.field, self.acting_dim * self.acting_dim);
        for m in level {
            for g in &self.generators {
                span.insert(&g.compose(m).flatten());
            }
        }
        let basis = span
            .rows()
            .map(|r| LinearOperator { map: LinearMap::unflatten(self.field, self.acting_dim, self.acting_dim, r) })
            .collect();
        (basis, span)
    }

    /// Walks the power filtration until it reaches zero or stops shrinking.
    pub fn power_filtration(&self) -> PowerFiltration {
        let mut dims = vec![self.dim()];
        let mut level = self.basis();
        let mut span = self.span.clone();
        loop {
            if span.is_zero() {
                return PowerFiltration { nilpotency_index: Some(dims.len()), dims };
            }
            let (next, next_span) = self.next_power(&level);
            if next_span == span {
                return PowerFiltration { dims, nilpotency_index: None };
            }
            dims.push(next_span.rank());
            level = next;
            span = next_span;
        }
    }

    /// Smallest `n` with `M^n = 0`.
    pub fn nilpotency_index(&self) -> Option<usize> {
        self.power_filtration().nilpotency_index
    }

    /// `span{u(v) : u ∈ operators, v ∈ V}`.
    pub fn apply_span(operators: &[LinearOperator], v: &Subspace) -> Subspace {
        let mut out = RowSpace::new(v.field(), v.ambient_dim());
        for u in operators {
            for r in v.rows() {
                out.insert(&u.map().apply(r));
            }
        }
        Subspace::from_space(out)
    }
}

fn left_generators(a: &Algebra) -> Vec<LinearOperator> {
    a.basis().iter().map(|x| left_op(a, x).expect("basis element")).collect()
}

fn right_generators(a: &Algebra) -> Vec<LinearOperator> {
    a.basis().iter().map(|x| right_op(a, x).expect("basis element")).collect()
}

/// `n3` of an operator algebra: smallest `n` with `M^n = 0`.
pub fn operator_algebra_nilpotence(m: &OperatorAlgebra) -> Option<usize> {
    m.nilpotency_index()
}

/// The three nilpotence indices: `n1` from the weak series, `n2` from the
/// strong series, `n3` from the power filtration of `M(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotenceReport {
    pub n1: Option<usize>,
    pub n2: Option<usize>,
    pub n3: Option<usize>,
    pub is_nilpotent: bool,
}

/// Computes all three indices and checks `n3 = max(1, n1 - 1)` and
/// `n1 ≤ n2 ≤ 2^(n1-2) + 1`; any disagreement is reported as an invariant error.
pub fn nilpotence_report(a: &Algebra) -> Result<NilpotenceReport> {
    let n1 = a.weak_series().vanishing_index;
    let n2 = a.strong_series().vanishing_index;
    let n3 = OperatorAlgebra::mult_algebra(a).nilpotency_index();
    match (n1, n2, n3) {
        (Some(n1v), Some(n2v), Some(n3v)) => {
            if n3v != n1v.saturating_sub(1).max(1) {
                return Err(Error::Invariant(format!("n3 = {n3v} but n1 = {n1v}")));
            }
            if n1v > n2v || (n1v >= 2 && n2v > (1usize << (n1v - 2)) + 1) {
                return Err(Error::Invariant(format!("n2 = {n2v} outside [n1, 2^(n1-2)+1] with n1 = {n1v}")));
            }
            Ok(NilpotenceReport { n1, n2, n3, is_nilpotent: true })
        }
        (None, None, None) => Ok(NilpotenceReport { n1, n2, n3, is_nilpotent: false }),
        _ => Err(Error::Invariant(format!("nilpotence criteria disagree: n1 = {n1:?}, n2 = {n2:?}, n3 = {n3:?}"))),
    }
}

/// The limit of `V_0 = A`, `V_{k+1} = span{g(v) : g generator of M(A), v ∈ V_k}`,
/// together with the first `k` at which `V_{k+1} = V_k`.
pub fn stable_image(a: &Algebra) -> (Subspace, usize) {
    let mut gens = left_generators(a);
    gens.extend(right_generators(a));
    let mut current = a.full_space();
    let mut step = 0;
    loop {
        let next = OperatorAlgebra::apply_span(&gens, &current);
        if next == current {
            return (current, step);
        }
        current = next;
        step += 1;
    }
}

/// `M(A)^n(A)`: the span of all `u(a)` with `u ∈ M(A)^n`.
pub fn power_image(m: &OperatorAlgebra, a: &Algebra, n: usize) -> Subspace {
    OperatorAlgebra::apply_span(&m.power(n), &a.full_space())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn chain(n: usize) -> Algebra {
        let labels = (1..n).map(|m| format!("x{m}")).collect();
        Algebra::new(q(), n - 1, labels, (0..n.saturating_sub(2)).map(|m| (m, m, m + 1, q().one()))).unwrap()
    }

    /// basis x, w_0..w_{d-1}; x w_i = w_{i+1}
    fn xw(d: usize) -> Algebra {
        let mut labels = vec!["x".to_string()];
        labels.extend((0..d).map(|i| format!("w{i}")));
        let entries = (0..d.saturating_sub(1)).map(|i| (0, i + 1, i + 2, q().one()));
        Algebra::new(q(), d + 1, labels, entries).unwrap()
    }

    #[test]
    fn left_and_right_of_zero() {
        let a = chain(4);
        assert!(left_op(&a, &a.zero_element()).unwrap().is_zero());
        assert!(right_op(&a, &a.zero_element()).unwrap().is_zero());
    }

    #[test]
    fn shift_operators() {
        let a = xw(4);
        let x = a.basis_element(0);
        let l = left_op(&a, &x).unwrap();
        for i in 0..3 {
            assert_eq!(l.apply(&a.basis_element(i + 1)), a.basis_element(i + 2));
        }
        assert!(l.apply(&a.basis_element(4)).is_zero());
        assert!(l.apply(&x).is_zero());
        assert!(right_op(&a, &x).unwrap().is_zero());
    }

    #[test]
    fn associator_vanishes_when_associative() {
        // a·b = b, b·a = 0, a·a = a, b·b = 0 : the 2-dim associative algebra of matrices [[*,*],[0,0]]
        let a = Algebra::from_i64(q(), &["a", "b"], &[(0, 0, 0, 1), (0, 1, 1, 1)]).unwrap();
        assert!(a.is_associative());
        for x in a.basis() {
            for z in a.basis() {
                assert!(associator_op(&a, &x, &z).unwrap().is_zero());
            }
        }
        let c = chain(5);
        assert!(associator_op(&c, &c.zero_element(), &c.basis_element(0)).unwrap().is_zero());
    }

    #[test]
    fn associator_in_squares_chain() {
        // With x = z = x1 in the chain n=5: a(y) = x1(y x1) - (x1 y) x1.
        // y = x1: x1 x2 - x2 x1 = 0.  Every other basis y gives y x1 = x1 y = 0.
        let c = chain(5);
        let x1 = c.basis_element(0);
        assert!(associator_op(&c, &x1, &x1).unwrap().is_zero());
        // x = x1, z = x2: y = x1 gives x1(x1 x2) - (x1 x1) x2 = 0 - x2 x2 = -x3.
        let op = associator_op(&c, &x1, &c.basis_element(1)).unwrap();
        assert_eq!(op.apply(&x1), c.basis_element(2).neg());
    }

    #[test]
    fn trivial_generated_algebras() {
        let empty = OperatorAlgebra::generate(q(), 3, vec![]);
        assert_eq!(empty.dim(), 0);
        assert_eq!(empty.nilpotency_index(), Some(1));
        let id = OperatorAlgebra::generate(q(), 3, vec![LinearOperator::identity(q(), 3)]);
        assert_eq!(id.dim(), 1);
        assert_eq!(id.nilpotency_index(), None);
    }

    #[test]
    fn squares_chain_mult_algebra() {
        let a = chain(4);
        let m = OperatorAlgebra::mult_algebra(&a);
        assert!(m.is_closed_under_composition());
        assert!(!m.power(2).is_empty());
        assert!(m.power(3).is_empty());
        assert_eq!(m.nilpotency_index(), Some(3));
    }

    #[test]
    fn reports_for_chains() {
        let r = nilpotence_report(&chain(4)).unwrap();
        assert_eq!((r.n1, r.n2, r.n3), (Some(4), Some(5), Some(3)));
        let r = nilpotence_report(&chain(6)).unwrap();
        assert_eq!((r.n1, r.n2, r.n3), (Some(6), Some(17), Some(5)));
        let r = nilpotence_report(&Algebra::zero_algebra(q())).unwrap();
        assert_eq!((r.n1, r.n2, r.n3), (Some(1), Some(1), Some(1)));
    }

    #[test]
    fn idempotent_blocks_nilpotence() {
        let a = Algebra::from_i64(q(), &["e"], &[(0, 0, 0, 1)]).unwrap();
        let m = OperatorAlgebra::mult_algebra(&a);
        assert_eq!(operator_algebra_nilpotence(&m), None);
        let r = nilpotence_report(&a).unwrap();
        assert!(!r.is_nilpotent);
        assert_eq!(stable_image(&a).0, a.full_space());
    }

    #[test]
    fn quasi_inverse_cases() {
        let a = xw(3);
        let u = left_op(&a, &a.basis_element(0)).unwrap();
        let zero = LinearOperator::zero(q(), a.dim());
        assert_eq!(quasi_mult(&u, &zero).unwrap(), u);
        assert_eq!(quasi_mult(&zero, &zero).unwrap(), zero);
        assert_eq!(quasiinverse(&zero).unwrap(), zero);
        let v = quasiinverse(&u).unwrap();
        assert!(quasi_mult(&u, &v).unwrap().is_zero());
        assert!(quasi_mult(&v, &u).unwrap().is_zero());
        // u^2 = 0 gives quasiinverse -u
        let sq = left_op(&a, &a.basis_element(0)).unwrap();
        let b = xw(2);
        let u2 = left_op(&b, &b.basis_element(0)).unwrap();
        assert!(u2.power(2).is_zero());
        assert_eq!(quasiinverse(&u2).unwrap(), u2.scale(&q().from_i64(-1)));
        assert_eq!(sq.nilpotency_index(), Some(3));
    }

    #[test]
    fn minus_one_is_not_quasiinvertible() {
        let minus_id = LinearOperator::identity(q(), 2).scale(&q().from_i64(-1));
        assert_eq!(quasiinverse(&minus_id).unwrap_err(), Error::NotQuasiInvertible { determinant: "0".into() });
    }

    #[test]
    fn stable_images() {
        let (c, _) = stable_image(&chain(5));
        assert!(c.is_zero());
        let lie = Algebra::from_i64(q(), &["x", "y"], &[(0, 1, 1, 1), (1, 0, 1, -1)]).unwrap();
        let (c, step) = stable_image(&lie);
        assert_eq!(c, lie.span(&[lie.basis_element(1)]));
        assert_eq!(step, 1);
    }

    #[test]
    fn one_sided_algebras_of_shift_family() {
        let a = xw(4);
        assert_eq!(OperatorAlgebra::mult_algebra_right(&a).nilpotency_index(), Some(2));
        assert_eq!(OperatorAlgebra::mult_algebra_left(&a).nilpotency_index(), Some(4));
        let z = Algebra::zero_algebra(q());
        for m in [
            OperatorAlgebra::mult_algebra(&z),
            OperatorAlgebra::mult_algebra_left(&z),
            OperatorAlgebra::mult_algebra_right(&z),
            OperatorAlgebra::mult_algebra_assoc(&z),
        ] {
            assert_eq!(m.dim(), 0);
        }
    }
}
