use qwhittaker::corealg::partitions_in_box;
use qwhittaker::demazure::{
    prefactor_check, verify_braid, verify_character_shape, verify_demazure_whittaker, verify_form_invariance,
    verify_idempotence, verify_invariant_linearity, verify_opposite_sign,
};

#[test]
fn operator_laws() {
    for rank in 1..=3 {
        let out = verify_idempotence(rank, 50, 7 + rank as u64).unwrap();
        assert!(out.passed(), "{out:?}");
        let out = verify_form_invariance(rank, 100, 8, 11).unwrap();
        assert!(out.passed(), "{out:?}");
        let out = verify_invariant_linearity(rank, 10, 13).unwrap();
        assert!(out.passed(), "{out:?}");
    }
    for rank in 2..=3 {
        let out = verify_braid(rank, 20, 17).unwrap();
        assert!(out.passed(), "{out:?}");
    }
}

#[test]
fn characters_are_symmetric_and_positive() {
    for n in 2..=3 {
        let out = verify_character_shape(n, 0, 3).unwrap();
        assert!(out.passed(), "{out:?}");
    }
}

#[test]
fn prefactor_has_opposite_sign() {
    let lambdas: Vec<Vec<i64>> =
        vec![vec![-1, 1], vec![-2, 2], vec![-3, 3], vec![-2, 3], vec![0, 1, 2], vec![-1, 1, 2], vec![0, 0, 3]];
    let out = verify_opposite_sign(&lambdas).unwrap();
    assert!(out.passed(), "{out:?}");
}

#[test]
fn opposite_sign_on_boxes() {
    for n in 2..=3 {
        let lambdas: Vec<Vec<i64>> = partitions_in_box(n, 0, 4)
            .into_iter()
            .map(|p| {
                let mut v = p.into_parts();
                v.reverse();
                v
            })
            .collect();
        let out = verify_opposite_sign(&lambdas).unwrap();
        assert!(out.passed(), "{out:?}");
    }
}

#[test]
fn stated_sign_only_holds_on_trivial_prefactor() {
    let out = verify_demazure_whittaker(2, 0, 4).unwrap();
    assert_eq!((out.cases, out.failures), (15, 6));
    let r = prefactor_check(&[-2, 2]).unwrap();
    assert_eq!((r.stated_exponent, r.observed_exponent, r.holds), (4, Some(-4), false));
}
