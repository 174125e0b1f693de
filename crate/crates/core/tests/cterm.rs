use qwhittaker::corealg::Partition;
use qwhittaker::cterm::{
    check_t0_recursion, constant_term, constant_term_of_product, expand_delta_t0, norm_prime_t0_series,
    scalar_product_prime_t0, verify_t0_recursion, TruncSeries,
};
use qwhittaker::macdonald::macdonald_t0;

const N: usize = 8;

#[test]
fn rank_one_recursion() {
    for l1 in 0..=4 {
        let out = check_t0_recursion(&[l1], N).unwrap();
        assert!(out.passed(), "{out:?}");
    }
}

#[test]
fn rank_two_recursion() {
    for lambda in [[2, 1], [3, 1]] {
        let out = check_t0_recursion(&lambda, N).unwrap();
        assert_eq!(out.cases, 3);
        assert!(out.passed(), "{out:?}");
    }
    assert!(verify_t0_recursion(&[1, 0], N).unwrap());
}

#[test]
fn product_constant_term_matches_full_product() {
    let d = expand_delta_t0(2, 4);
    let p = macdonald_t0(&Partition::new(vec![2, 1]).unwrap(), 2).unwrap();
    let p = TruncSeries::from_poly(&p.poly, 4).unwrap().invert_vars(&[0, 1]);
    assert_eq!(constant_term(&d.mul(&p), &[0]), constant_term_of_product(&d, &p, &[0]));
    assert_eq!(constant_term(&d.mul(&p), &[0, 1]), constant_term_of_product(&d, &p, &[0, 1]));
}

#[test]
fn constant_term_norms_match_closed_form() {
    for lambda in [vec![1, 0], vec![2, 0], vec![2, 1], vec![1, 0, 0], vec![1, 1, 0]] {
        let n = lambda.len();
        let p = macdonald_t0(&Partition::new(lambda.clone()).unwrap(), n).unwrap();
        let p = TruncSeries::from_poly(&p.poly, 6).unwrap();
        let ct = scalar_product_prime_t0(&p, &p, 6);
        assert_eq!(ct, norm_prime_t0_series(&lambda, 6).unwrap(), "λ = {lambda:?}");
    }
}
