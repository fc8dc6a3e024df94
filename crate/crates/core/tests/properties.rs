mod common;

use nilplab::algebra::Algebra;
use nilplab::exactmath::{Field, Matrix};
use nilplab::freetrunc::TruncatedFreeAlgebra;
use nilplab::morphism::InducedMultHom;
use nilplab::multiplication::{
    left_op, nilpotence_report, power_image, quasi_mult, quasiinverse, right_op, stable_image, OperatorAlgebra,
};
use nilplab::scenarios::{build_upper_triangular_lie, build_xwz, sandwich_presentation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn table(seed: u64) -> common::Table {
    common::random_table(&mut ChaCha8Rng::seed_from_u64(seed))
}

fn small_field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::rationals()),
        Just(Field::prime(2).unwrap()),
        Just(Field::prime(3).unwrap()),
        Just(Field::prime(7).unwrap())
    ]
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (small_field(), 0usize..5, 0usize..5).prop_flat_map(|(f, r, c)| {
        proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
            let rows: Vec<&[i64]> = if c == 0 { vec![&[]; r] } else { v.chunks(c).collect() };
            let mut m = Matrix::from_i64(f, &rows);
            if c == 0 {
                m = Matrix::zero(f, r, 0);
            }
            m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn weak_series_matches_brute_force(seed in any::<u64>()) {
        let t = table(seed);
        prop_assert_eq!(t.algebra().weak_series().dims(), t.weak_dims());
    }

    #[test]
    fn nilpotence_criteria_agree(seed in any::<u64>()) {
        let t = table(seed);
        let a = t.algebra();
        let r = nilpotence_report(&a).unwrap();
        prop_assert_eq!(r.n1.is_some(), r.is_nilpotent);
        prop_assert_eq!(r.n2.is_some(), r.is_nilpotent);
        prop_assert_eq!(r.n3.is_some(), r.is_nilpotent);
        prop_assert_eq!(stable_image(&a).0.is_zero(), r.is_nilpotent);
        prop_assert_eq!(a.is_nilpotent(), t.weak_dims().last() == Some(&0));
    }

    #[test]
    fn series_containments(seed in any::<u64>()) {
        let a = table(seed).algebra();
        let (weak, strong) = (a.weak_series(), a.strong_series());
        let m = OperatorAlgebra::mult_algebra(&a);
        for n in 1..=weak.terms.len() + 1 {
            prop_assert!(weak.term(n).is_subspace_of(strong.term(n)));
            if n >= 2 {
                prop_assert!(strong.term((1 << (n - 2)) + 1).is_subspace_of(weak.term(n)));
            }
            prop_assert_eq!(&power_image(&m, &a, n), weak.term(n + 1));
        }
        let dims = strong.dims();
        prop_assert!(dims.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn mult_algebra_is_closed(seed in any::<u64>()) {
        let a = table(seed).algebra();
        prop_assert!(OperatorAlgebra::mult_algebra(&a).is_closed_under_composition());
    }

    #[test]
    fn nilpotent_elements_are_quasiinvertible(seed in any::<u64>(), coords in proptest::collection::vec(0i64..3, 4)) {
        let t = table(seed);
        let a = t.algebra();
        prop_assume!(a.is_nilpotent() && a.dim() > 0);
        let x = a.element_from_i64(&coords[..a.dim()]).unwrap();
        for u in [left_op(&a, &x).unwrap(), right_op(&a, &x).unwrap()] {
            let q = quasiinverse(&u).unwrap();
            prop_assert!(quasi_mult(&u, &q).unwrap().is_zero());
            prop_assert!(quasi_mult(&q, &u).unwrap().is_zero());
        }
    }

    #[test]
    fn quotients_by_principal_ideals(seed in any::<u64>(), pick in 0usize..4) {
        let a = table(seed).algebra();
        prop_assume!(a.dim() > 0);
        let g = a.basis_element(pick % a.dim());
        let ideal = a.ideal_closure(&[g]).ideal;
        prop_assert!(a.is_ideal(&ideal));
        let q = a.quotient(&ideal).unwrap();
        prop_assert_eq!(q.algebra.dim() + ideal.dim(), a.dim());
        prop_assert!(q.projection.is_surjective());
        prop_assert_eq!(q.projection.kernel(), ideal);
        prop_assert!(InducedMultHom::new(&q.projection).unwrap().is_surjective().unwrap());
        if a.is_nilpotent() {
            prop_assert!(q.algebra.is_nilpotent());
        }
    }

    #[test]
    fn json_round_trip(seed in any::<u64>()) {
        let a = table(seed).algebra();
        let back = Algebra::from_json(&a.to_json()).unwrap();
        prop_assert_eq!(back.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect::<Vec<_>>(),
                        a.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect::<Vec<_>>());
    }

    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let r = m.rref();
        prop_assert_eq!(r.reduced.rref().reduced, r.reduced.clone());
        prop_assert_eq!(r.rank, r.pivot_columns.len());
    }

    #[test]
    fn rank_of_transpose(m in matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_recovers_a_preimage(m in matrix(), x in proptest::collection::vec(-3i64..4, 5)) {
        let f = m.field();
        let x: Vec<_> = x[..m.cols()].iter().map(|&v| f.from_i64(v)).collect();
        let b = m.mul_vec(&x).unwrap();
        let y = m.solve(&b).unwrap().expect("b lies in the column space");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn rank_agrees_with_oracle(m in proptest::collection::vec(proptest::collection::vec(-3i64..4, 4), 0..5)) {
        let rows: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
        let mat = if rows.is_empty() { Matrix::zero(Field::rationals(), 0, 4) } else { Matrix::from_i64(Field::rationals(), &rows) };
        prop_assert_eq!(mat.rank(), common::rational_rank(&m));
    }

    #[test]
    fn lie_quotients_have_collapsing_series(n in 3usize..6, p2 in any::<bool>(), picks in proptest::collection::vec(0usize..15, 0..3)) {
        let field = if p2 { Field::prime(2).unwrap() } else { Field::rationals() };
        let a = build_upper_triangular_lie(n, field).unwrap();
        let gens: Vec<_> = picks.iter().map(|&i| a.basis_element(i % a.dim())).collect();
        let q = a.quotient(&a.ideal_closure(&gens).ideal).unwrap();
        let b = &q.algebra;
        prop_assert!(b.require_lie().is_ok());
        let (weak, strong) = (b.weak_series(), b.strong_series());
        for k in 1..=weak.terms.len().max(strong.terms.len()) + 1 {
            prop_assert_eq!(weak.term(k), strong.term(k));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn truncated_words_avoid_forbidden_patterns(d in 1usize..8) {
        let p = sandwich_presentation(d).unwrap();
        let a = TruncatedFreeAlgebra::build(&p, 512).unwrap();
        for w in a.words() {
            prop_assert!(w.len() < d);
            prop_assert!(!p.forbidden.forbids(w));
        }
    }

    #[test]
    fn truncation_maps_compose(d in 3usize..8, k in 1usize..3, l in 1usize..3) {
        prop_assume!(d > k + l);
        let a = build_xwz(d, 512).unwrap();
        let direct = a.truncate_map(d - k - l).unwrap();
        let b = build_xwz(d - k, 512).unwrap();
        let two_step = b.truncate_map(d - k - l).unwrap().compose(&a.truncate_map(d - k).unwrap()).unwrap();
        prop_assert_eq!(direct.matrix(), two_step.matrix());
        prop_assert!(direct.is_surjective());
    }
}
