use qwhittaker::qtorus::{
    verify_associativity, verify_f_degrees, verify_matrix_element, verify_proof_identity, verify_q_binomial,
    verify_vacuum,
};

#[test]
fn q_binomial_up_to_six() {
    let out = verify_q_binomial(6).unwrap();
    assert_eq!(out.cases, 7);
    assert!(out.passed(), "{out:?}");
}

#[test]
fn matrix_element_equals_whittaker() {
    for n in 2..=3 {
        let out = verify_matrix_element(n, 0, 4).unwrap();
        assert!(out.passed(), "{out:?}");
    }
}

#[test]
fn binomial_recursion_identity() {
    let out = verify_proof_identity(2, 3).unwrap();
    assert!(out.passed(), "{out:?}");
}

#[test]
fn algebra_laws() {
    for rank in 1..=2 {
        let out = verify_associativity(rank, 100, 5).unwrap();
        assert!(out.passed(), "{out:?}");
        let out = verify_vacuum(rank, 20, 6).unwrap();
        assert!(out.passed(), "{out:?}");
        let out = verify_f_degrees(rank).unwrap();
        assert!(out.passed(), "{out:?}");
    }
}
