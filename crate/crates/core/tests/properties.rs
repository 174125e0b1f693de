use proptest::collection::vec;
use proptest::prelude::*;

use qwhittaker::cli::serial::{parse, serialize};
use qwhittaker::corealg::{
    enumerate_gz, interlacing_rows, monomial_symmetric, power_sum, q_binomial, rat, LaurentPoly, Partition, QLaurent,
    QRatio, Rational, Ring,
};
use qwhittaker::cterm::{constant_term, TruncSeries};
use qwhittaker::demazure::{bilinear_form, demazure_op, weyl_apply, AffineWeight, CharSum};
use qwhittaker::macdonald::{macdonald_numeric, macdonald_t0};
use qwhittaker::qtoda::{whittaker_gz, whittaker_normalized};
use qwhittaker::qtorus::TorusElem;

fn qlaurent() -> impl Strategy<Value = QLaurent> {
    vec((-4i64..=4, -5i64..=5, 1i64..=4), 0..4)
        .prop_map(|ts| QLaurent::from_terms(ts.into_iter().map(|(k, n, d)| (k, rat(n, d)))))
}

fn poly(nvars: usize) -> impl Strategy<Value = LaurentPoly<QLaurent>> {
    vec((vec(-2i64..=3, nvars), qlaurent()), 0..5).prop_map(move |ts| LaurentPoly::from_terms(nvars, ts))
}

fn rational_poly(nvars: usize) -> impl Strategy<Value = LaurentPoly<Rational>> {
    vec((vec(-3i64..=3, nvars), -9i64..=9, 1i64..=7), 0..6)
        .prop_map(move |ts| LaurentPoly::from_terms(nvars, ts.into_iter().map(|(e, n, d)| (e, rat(n, d)))))
}

fn partition(nvars: usize, max: i64) -> impl Strategy<Value = Partition> {
    vec(0..=max, nvars).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn weight(rank: usize) -> impl Strategy<Value = AffineWeight> {
    (vec(-3i64..=3, rank + 1), -2i64..=2, -3i64..=3).prop_map(|(f, l, d)| AffineWeight::new(f, l, d))
}

fn charsum(rank: usize) -> impl Strategy<Value = CharSum> {
    vec((weight(rank), -3i64..=3), 0..5).prop_map(CharSum::from_terms)
}

fn torus(rank: usize) -> impl Strategy<Value = TorusElem> {
    let g = rank * (rank + 1) / 2;
    vec((vec(0i64..=2, g), vec(0i64..=2, g), qlaurent()), 0..3).prop_map(move |ts| {
        let mut out = TorusElem::zero(rank);
        for (x, t, c) in ts {
            out.add_term(x, t, LaurentPoly::constant(rank + 1, c));
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_independent_of_construction(a in poly(2), b in poly(2), c in poly(2)) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn serialization_round_trips(p in poly(3), r in rational_poly(2)) {
        prop_assert_eq!(parse::<QLaurent>(&serialize(&p)).unwrap(), p.clone());
        prop_assert_eq!(parse::<Rational>(&serialize(&r)).unwrap(), r.clone());
        prop_assert_eq!(serialize(&parse::<QLaurent>(&serialize(&p)).unwrap()), serialize(&p));
    }

    #[test]
    fn q_binomial_shape(n in 0i64..=9, m in 0i64..=9) {
        prop_assume!(m <= n);
        let b = q_binomial(n, m);
        prop_assert!(b.is_nonneg_integer_poly());
        prop_assert_eq!(b.max_exp(), Some(2 * m * (n - m)));
        prop_assert_eq!(b, q_binomial(n, n - m));
    }

    #[test]
    fn symmetric_bases_are_symmetric(lam in partition(3, 3), perm in permutation(3)) {
        let m: LaurentPoly<Rational> = monomial_symmetric(&lam, 3);
        let p: LaurentPoly<Rational> = power_sum(&lam.trimmed(), 3);
        prop_assert_eq!(m.permute_vars(&perm), m);
        prop_assert_eq!(p.permute_vars(&perm), p);
    }

    #[test]
    fn macdonald_is_symmetric_and_positive_at_t0(lam in partition(3, 3), perm in permutation(3)) {
        let p = macdonald_numeric(&lam, 3, &rat(1, 3), &rat(1, 5)).unwrap().poly;
        prop_assert_eq!(p.permute_vars(&perm), p);
        let p0 = macdonald_t0(&lam, 3).unwrap().poly;
        for (_, c) in p0.terms() {
            let poly = c.to_laurent().expect("polynomial in q");
            prop_assert!(poly.is_nonneg_integer_poly());
        }
    }

    #[test]
    fn whittaker_vanishes_off_dominant(p in vec(-2i64..=4, 3)) {
        let psi = whittaker_gz(&p).unwrap();
        let dominant = p.windows(2).all(|w| w[0] >= w[1]);
        prop_assert_eq!(psi.is_zero(), !dominant);
    }

    #[test]
    fn whittaker_translation(p in vec(-2i64..=3, 2), k in -1i64..=2) {
        let shifted: Vec<i64> = p.iter().map(|x| x + k).collect();
        let a = whittaker_normalized(&shifted).unwrap();
        let b = whittaker_normalized(&p).unwrap().mul_monomial(&[k, k]);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn constant_term_commutes_with_y_free_factors(
        a in vec((vec(-2i64..=2, 3), 0usize..=3, -4i64..=4), 0..6),
        f in vec((-2i64..=2, 0usize..=3, -4i64..=4), 0..4),
    ) {
        let order = 4;
        let build = |ts: Vec<(Vec<i64>, usize, i64)>| {
            ts.into_iter().fold(TruncSeries::zero(3, order), |acc, (e, k, c)| {
                acc.add(&TruncSeries::monomial(e, k, rat(c, 1), order))
            })
        };
        let s = build(a);
        // f depends on x (variable 0) only; y are variables 1 and 2.
        let f = build(f.into_iter().map(|(e, k, c)| (vec![e, 0, 0], k, c)).collect());
        let f_x = constant_term(&f, &[1, 2]);
        prop_assert_eq!(constant_term(&s.mul(&f), &[1, 2]), constant_term(&s, &[1, 2]).mul(&f_x));
    }

    #[test]
    fn demazure_operators_are_idempotent(c in charsum(2), i in 0usize..=2) {
        let once = demazure_op(i, &c).unwrap();
        prop_assert_eq!(demazure_op(i, &once).unwrap(), once);
    }

    #[test]
    fn weyl_action_preserves_the_form(
        a in weight(2), b in weight(2), word in vec(0usize..=2, 0..=8),
    ) {
        let wa = weyl_apply(&word, &a).unwrap();
        let wb = weyl_apply(&word, &b).unwrap();
        prop_assert_eq!(bilinear_form(&wa, &wb), bilinear_form(&a, &b));
    }

    #[test]
    fn torus_product_is_associative(a in torus(2), b in torus(2), c in torus(2)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}

fn brute_force_gz_count(top: &[i64]) -> usize {
    if top.len() <= 1 {
        return 1;
    }
    let (lo, hi) = (*top.iter().min().unwrap(), *top.iter().max().unwrap());
    let n = top.len() - 1;
    let mut count = 0;
    let mut row = vec![lo; n];
    loop {
        let interlaces = (0..n).all(|i| top[i] >= row[i] && row[i] >= top[i + 1]);
        if interlaces {
            count += brute_force_gz_count(&row);
        }
        let mut j = 0;
        while j < n && row[j] == hi {
            row[j] = lo;
            j += 1;
        }
        if j == n {
            break;
        }
        row[j] += 1;
    }
    count
}

#[test]
fn gz_count_matches_brute_force() {
    for n in 1..=4 {
        for lam in qwhittaker::corealg::partitions_in_box(n, 0, 4) {
            assert_eq!(enumerate_gz(&lam).len(), brute_force_gz_count(lam.parts()), "{lam}");
        }
    }
    assert_eq!(interlacing_rows(&[2, 0]).len(), 3);
}

#[test]
fn macdonald_t0_coefficients_are_q_polynomials() {
    let p = macdonald_t0(&Partition::new(vec![2, 1, 0]).unwrap(), 3).unwrap().poly;
    let c: QRatio = p.coeff(&[1, 1, 1]);
    assert_eq!(c.to_laurent().unwrap(), QLaurent::int(2).add(&QLaurent::q_pow(1)));
}
