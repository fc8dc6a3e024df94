use crate::algebra::{Algebra, Element, SeriesKind};
use crate::error::Result;
use crate::exactmath::Field;
use crate::multiplication::{left_op, nilpotence_report, right_op, LinearOperator, OperatorAlgebra};

use super::builders::{
    build_alternating, build_modp_lie, build_two_dim_solvable, build_upper_triangular, build_upper_triangular_lie,
    build_wiwi, build_xixi, build_xwi,
};
use super::report::{ReportBuilder, ScenarioReport};

/// Partial sums `Σ_{i<d} w_i` where `w_i` sits at `offset + i`.
fn sum_of_ws(a: &Algebra, offset: usize, d: usize) -> Element {
    (0..d).fold(a.zero_element(), |acc, i| acc.add(&a.basis_element(offset + i)))
}

/// Proper quotients by each principal ideal of a basis element are nilpotent.
fn principal_quotients_nilpotent(a: &Algebra) -> Result<bool> {
    for e in a.basis() {
        let ideal = a.ideal_closure(&[e]).ideal;
        if !a.quotient(&ideal)?.algebra.is_nilpotent() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn run_xixi(n: usize) -> Result<ScenarioReport> {
    let mut r = ReportBuilder::new("xixi");
    r.param("n", n);
    let a = build_xixi(n)?;
    let report = nilpotence_report(&a)?;
    let cite = "x_m x_m = x_{m+1}: N_1 = n, N_2 = 2^(n-2)+1, N_3 = max(1, N_1 - 1)";
    r.check("weak index N1 = n", cite, Some(n), report.n1);
    r.check("strong index N2 = 2^(n-2)+1", cite, Some((1usize << (n - 2)) + 1), report.n2);
    r.check("M(A) index N3 = max(1, n-1)", cite, Some((n - 1).max(1)), report.n3);
    let weak = a.weak_series();
    let strong = a.strong_series();
    let top = strong.terms.len() + 1;
    let contained = (1..=top).all(|k| weak.term(k).is_subspace_of(strong.term(k)));
    r.holds("A_[k] ⊆ A_(k) for every k", "the weak series lies inside the strong series", contained);
    r.witness("weak_dims", weak.dims()).witness("strong_dims", strong.dims());
    Ok(r.finish())
}

pub fn run_xwi(d: usize) -> Result<ScenarioReport> {
    let mut r = ReportBuilder::new("y-xy");
    r.param("degree", d);
    let a = build_xwi(d)?;
    let ml = OperatorAlgebra::mult_algebra_left(&a);
    let mr = OperatorAlgebra::mult_algebra_right(&a);
    let right_index = mr.nilpotency_index();
    let left_index = ml.nilpotency_index();
    r.holds("M_r(A)^2 = 0", "x w_i = w_{i+1}: (AA)A = 0, so M_r(A)^2 = 0", right_index.is_some_and(|k| k <= 2));
    r.check(
        "M_l(A) has index d at stage d",
        "x w_i = w_{i+1}: M_l(A)^n ≠ 0 for all n in the limit; l_x^(d-1) w_0 = w_{d-1} at stage d",
        Some(d),
        left_index,
    );
    r.check(
        "N1 = d + 1",
        "weak series of x w_i = w_{i+1} drops one w per step",
        Some(d + 1),
        a.weak_series().vanishing_index,
    );

    let w0 = a.basis_element(1);
    let closure = a.ideal_closure(std::slice::from_ref(&w0));
    let ws = a.span(&(1..=d).map(|i| a.basis_element(i)).collect::<Vec<_>>());
    r.holds(
        "(w_0) = span{w_0 .. w_{d-1}}",
        "the ideal (w_0) consists of the finite sums of the w_i",
        closure.ideal == ws,
    );
    let depths: Vec<Option<usize>> = (0..d).map(|j| closure.depth_of(&a.basis_element(j + 1))).collect();
    r.check(
        "depth(w_j) = j",
        "w_j = l_x^j w_0 enters the ideal filtration at step j",
        (0..d).map(Some).collect(),
        depths,
    );

    let y = sum_of_ws(&a, 1, d);
    let x = a.basis_element(0);
    let lhs = y.sub(&a.multiply(&x, &y)?);
    r.holds("y - xy = w_0 for y = Σ w_i", "y = (1 - l_x)^(-1) w_0 satisfies y - xy = w_0", lhs == w0);
    r.holds(
        "y ∈ (w_0) at the finite stage",
        "finite stages contain y; only the limit excludes it",
        closure.ideal.contains(&y),
    );
    r.holds(
        "principal quotients are nilpotent",
        "every quotient of a nilpotent stage is nilpotent",
        principal_quotients_nilpotent(&a)?,
    );
    r.witness("left_index", left_index).witness("right_index", right_index).witness("dim", a.dim());
    Ok(r.finish())
}

pub fn run_wiwi(d: usize) -> Result<ScenarioReport> {
    let mut r = ReportBuilder::new("y-yy");
    r.param("degree", d);
    let a = build_wiwi(d)?;
    let y = sum_of_ws(&a, 0, d);
    let w0 = a.basis_element(0);
    let y2 = a.multiply(&y, &y)?;
    r.holds("y - y^2 = w_0", "w_i w_i = w_{i+1}: y = Σ w_i satisfies y - y^2 = w_0", y.sub(&y2) == w0);

    let top = a.span(&[a.basis_element(d - 1)]);
    let quotient = a.quotient(&top)?;
    let p = &quotient.projection;
    let (yq, w0q) = (p.apply(&y)?, p.apply(&w0)?);
    let yq2 = quotient.algebra.multiply(&yq, &yq)?;
    r.holds(
        "y - y^2 = w_0 in A / span{w_{d-1}}",
        "the identity survives the quotient by the top-degree term",
        yq.sub(&yq2) == w0q,
    );
    let closure = a.ideal_closure(std::slice::from_ref(&w0));
    let depths: Vec<Option<usize>> = (0..d).map(|j| closure.depth_of(&a.basis_element(j))).collect();
    r.check(
        "depth(w_j) = j",
        "(w_0) consists of the finite sums of the w_i, filled one square at a time",
        (0..d).map(Some).collect(),
        depths,
    );
    r.holds(
        "y ∈ (w_0) at the finite stage",
        "finite stages contain y; only the limit excludes it",
        closure.ideal.contains(&y),
    );
    r.check("N1 = d + 1", "w_i w_i = w_{i+1} on w_0 .. w_{d-1}", Some(d + 1), a.weak_series().vanishing_index);
    r.holds(
        "principal quotients are nilpotent",
        "every quotient of a nilpotent stage is nilpotent",
        principal_quotients_nilpotent(&a)?,
    );
    r.witness("dim", a.dim());
    Ok(r.finish())
}

pub fn run_alternating(d: usize) -> Result<ScenarioReport> {
    let mut r = ReportBuilder::new("alternating");
    r.param("degree", d);
    let a = build_alternating(d)?;
    let left_index = OperatorAlgebra::mult_algebra_left(&a).nilpotency_index();
    let right_index = OperatorAlgebra::mult_algebra_right(&a).nilpotency_index();
    let cite = "x w_{2i} = w_{2i+1}, w_{2i+1} x = w_{2i+2}: left and right nilpotent without being nilpotent";
    r.holds("M_l(A) nilpotent", cite, left_index.is_some());
    r.holds("M_r(A) nilpotent", cite, right_index.is_some());

    let x = a.basis_element(0);
    let (lx, rx) = (left_op(&a, &x)?, right_op(&a, &x)?);
    let step = rx.compose(&lx);
    let w = |j: usize| a.basis_element(j + 1);
    let hits = (0..=(d - 1) / 2).all(|k| step.power(k).apply(&w(0)) == w(2 * k));
    r.holds("(r_x ∘ l_x)^k w_0 = w_{2k}", "alternating left and right multiplication by x walks up the w_i", hits);
    let mut word = LinearOperator::identity(a.field(), a.dim());
    for j in 0..d - 1 {
        word = if j % 2 == 0 { lx.compose(&word) } else { rx.compose(&word) };
    }
    r.holds(
        "an alternating word of length d-1 sends w_0 to w_{d-1}",
        "M(A)^(d-1) ≠ 0, so the two-sided index grows with d",
        word.apply(&w(0)) == w(d - 1),
    );
    let growth: Vec<Option<usize>> =
        (1..=d).map(|k| build_alternating(k).map(|b| b.weak_series().vanishing_index)).collect::<Result<_>>()?;
    r.check("N1(k) = k + 1 for k ≤ d", cite, (1..=d).map(|k| Some(k + 1)).collect(), growth.clone());
    r.holds("N1 strictly increasing in the degree", cite, growth.windows(2).all(|w| w[0] < w[1]));
    r.holds(
        "nilpotence criteria agree",
        "N_3 = max(1, N_1 - 1), N_1 ≤ N_2 ≤ 2^(N_1-2)+1",
        nilpotence_report(&a).is_ok(),
    );
    r.witness("left_index", left_index).witness("right_index", right_index).witness("n1_growth", growth);
    Ok(r.finish())
}

pub fn run_modp_lie(p: u64) -> Result<ScenarioReport> {
    let mut r = ReportBuilder::new("modp-lie");
    r.param("prime", p);
    let b = build_modp_lie(p)?;
    let cite = "D, XD and x^n e^x reduced mod p give a (p+2)-dimensional solvable Lie algebra";
    r.holds("Jacobi identity on all basis triples", cite, b.structure_checks().lie);
    r.check("dim B = p + 2", cite, p as usize + 2, b.dim());
    let derived = b.derived_series();
    r.check("derived length 3", "B^(3) = 0 and B is solvable", Some(3), derived.vanishing_index);
    let b2 = derived.term(2).clone();
    r.holds("B^(2) ≠ 0", "B^(2) keeps the x^n e^x", !b2.is_zero());
    let b1 = derived.term(1).clone();
    let xd = b.basis_element(1);
    r.holds("B^(1) loses XD", "B^(1) again loses the operator XD", !b1.contains(&xd));
    r.holds("B^(2) loses D", "B^(2) likewise loses D", !b2.contains(&b.basis_element(0)));
    let sub2 = b.subalgebra(&b2)?;
    r.holds("B^(2) is abelian", "B^(2) has zero bracket operation", sub2.entries().next().is_none());
    let sub1 = b.subalgebra(&b1)?;
    r.holds("B^(1) is not nilpotent", "[D, X^0 Y] = X^0 Y shows that B^(1) is not nilpotent", !sub1.is_nilpotent());
    let (d, y0) = (b.basis_element(0), b.basis_element(2));
    r.holds("[D, Y_0] = Y_0", "[D, X^0 Y] = X^0 Y", b.multiply(&d, &y0)? == y0);
    r.witness("dim", b.dim()).witness("derived_dims", derived.dims());
    Ok(r.finish())
}

pub fn run_two_dim_solvable() -> Result<ScenarioReport> {
    let mut r = ReportBuilder::new("two-dim-solvable");
    let a = build_two_dim_solvable()?;
    let cite = "the 2-dimensional Lie algebra [x, y] = y is solvable but not nilpotent";
    r.holds("Lie algebra", cite, a.structure_checks().lie);
    let derived = a.derived_series();
    r.check("derived length 2", cite, Some(2), derived.vanishing_index);
    r.holds("not nilpotent", cite, !a.is_nilpotent());
    let y = a.span(&[a.basis_element(1)]);
    let weak = a.weak_series();
    r.holds("weak series stabilizes at span{y}", cite, weak.stabilized && *weak.last() == y);
    let commutator = a.subalgebra(derived.term(1))?;
    r.holds(
        "commutator ideal is nilpotent",
        "for solvable Lie algebras in characteristic 0 the commutator ideal is nilpotent",
        commutator.is_nilpotent(),
    );
    r.witness("derived_dims", derived.dims()).witness("weak_dims", weak.dims());
    Ok(r.finish())
}

/// Terms of two series agree at every index up to where both are constant.
pub fn series_agree(a: &Algebra) -> bool {
    let weak = a.series(SeriesKind::Weak);
    let strong = a.series(SeriesKind::Strong);
    let top = weak.terms.len().max(strong.terms.len()) + 1;
    (1..=top).all(|k| weak.term(k) == strong.term(k))
}

pub fn run_upper_triangular(n: usize, field: Field) -> Result<ScenarioReport> {
    let mut r = ReportBuilder::new("upper-triangular");
    r.param("n", n).param("field", field.to_string());
    let lie = build_upper_triangular_lie(n, field)?;
    let cite = "for Lie algebras A_[p] A_[q] ⊆ A_[p+q], so the weak and strong series coincide";
    r.holds("Lie algebra (including e·e = 0)", cite, lie.structure_checks().lie);
    r.holds("A_[k] = A_(k) for all k", cite, series_agree(&lie));
    r.check(
        "N1 = n",
        "strictly upper-triangular n × n matrices are nilpotent of class n - 1",
        Some(n.max(1)),
        lie.weak_series().vanishing_index,
    );
    let assoc = build_upper_triangular(n, field)?;
    r.holds(
        "matrix product is associative",
        "associative algebras have A_[n] = A_(n) = A^n",
        assoc.is_associative() && series_agree(&assoc),
    );
    r.holds(
        "nilpotence criteria agree",
        "N_3 = max(1, N_1 - 1), N_1 ≤ N_2 ≤ 2^(N_1-2)+1",
        nilpotence_report(&lie).is_ok(),
    );
    r.witness("dim", lie.dim()).witness("weak_dims", lie.weak_series().dims());
    Ok(r.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_pass(r: &ScenarioReport) {
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn structure_constant_scenarios_pass() {
        for n in 2..=7 {
            assert_pass(&run_xixi(n).unwrap());
        }
        for d in [1, 2, 5, 6] {
            assert_pass(&run_xwi(d).unwrap());
            assert_pass(&run_wiwi(d).unwrap());
            assert_pass(&run_alternating(d).unwrap());
        }
        for p in [2, 3, 5, 7] {
            assert_pass(&run_modp_lie(p).unwrap());
        }
        assert_pass(&run_two_dim_solvable().unwrap());
        for n in 1..=5 {
            assert_pass(&run_upper_triangular(n, Field::rationals()).unwrap());
            assert_pass(&run_upper_triangular(n, Field::prime(2).unwrap()).unwrap());
        }
    }

    #[test]
    fn left_index_at_five() {
        let r = run_xwi(5).unwrap();
        assert_eq!(r.witness("left_index"), Some(&serde_json::json!(5)));
        assert_eq!(r.witness("right_index"), Some(&serde_json::json!(2)));
    }
}
