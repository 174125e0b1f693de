//! Closed forms of the two norms of `P_λ` in `ℓ` variables: `⟨P,P⟩` for
//! the combinatorial scalar product and `⟨P,P⟩'` for the constant-term one.
//!
//! `⟨P,P⟩'` is an infinite product; it is cut after the factor `n = N`.
//! At `t = 0` this is exact mod `q^{N+1}`.

use super::series::q_vector;
use crate::corealg::{Field, Partition, QRatio, Rational, Ring};
use crate::error::{Error, Result};
use crate::macdonald::{norm_closed_form, SpecPoint};

/// `t^k` with `t^0 = 1` even at `t = 0`.
fn tpow<C: Ring>(t: &C, k: i64) -> C {
    t.pow(k as u64)
}

/// `∏_{i<j} ∏_{n=0}^{N} (1−t^{j−i}q^{d+n})(1−t^{j−i}q^{d+n+1}) /
/// ((1−t^{j−i+1}q^{d+n})(1−t^{j−i−1}q^{d+n+1}))`, `d = λ_i − λ_j`.
pub fn norm_prime_truncated<C: Field>(lambda: &[i64], q: &C, t: &C, order: usize) -> Result<C> {
    let qp = |e: i64| q.powi(e).ok_or_else(|| Error::DivisionByZero("q = 0".into()));
    let mut acc = C::one();
    let l = lambda.len();
    for i in 0..l {
        for j in i + 1..l {
            let k = (j - i) as i64;
            let d = lambda[i] - lambda[j];
            for n in 0..=order as i64 {
                let num =
                    C::one().sub(&tpow(t, k).mul(&qp(d + n)?)).mul(&C::one().sub(&tpow(t, k).mul(&qp(d + n + 1)?)));
                let den = C::one()
                    .sub(&tpow(t, k + 1).mul(&qp(d + n)?))
                    .mul(&C::one().sub(&tpow(t, k - 1).mul(&qp(d + n + 1)?)));
                acc = acc
                    .mul(&num)
                    .div_exact(&den)
                    .ok_or_else(|| Error::Pole(format!("⟨P,P⟩' of {lambda:?}: factor n={n}, (i,j)=({i},{j})")))?;
            }
        }
    }
    Ok(acc)
}

/// `(⟨P,P⟩, ⟨P,P⟩')` at `spec`; the second is cut after `n = order`.
/// At `t = 0` the values are rational functions of `q`; see
/// [`norm_prime_t0_series`] for the series form.
pub fn norm_formulas(lambda: &[i64], spec: &SpecPoint, order: usize) -> Result<(QRatio, QRatio)> {
    let part = Partition::new(lambda.to_vec())?;
    match spec {
        SpecPoint::Numeric { q, t } => {
            let a: Rational = norm_closed_form(&part, q, t)?;
            let b: Rational = norm_prime_truncated(lambda, q, t, order)?;
            Ok((QRatio::from_rational(&a), QRatio::from_rational(&b)))
        }
        _ => {
            let (q, t) = spec.symbolic().ok_or_else(|| Error::InvalidInput("unsupported specialization".into()))?;
            Ok((norm_closed_form(&part, &q, &t)?, norm_prime_truncated(lambda, &q, &t, order)?))
        }
    }
}

/// `⟨P,P⟩'_{t=0} = ∏_{i<ℓ} ∏_{m≥1} 1/(1−q^{λ_i−λ_{i+1}+m})` as a `q`-vector mod `q^{N+1}`.
pub fn norm_prime_t0_series(lambda: &[i64], order: usize) -> Result<Vec<Rational>> {
    let (_, b) = norm_formulas(lambda, &SpecPoint::TZero, order)?;
    q_vector(&b.series(2 * order as i64), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corealg::{rat, QLaurent};

    #[test]
    fn t0_examples() {
        let (a, _) = norm_formulas(&[0, 0], &SpecPoint::TZero, 4).unwrap();
        assert_eq!(a, QRatio::one());
        let (a, b) = norm_formulas(&[1], &SpecPoint::TZero, 4).unwrap();
        assert_eq!(a, QRatio::from(QLaurent::one_minus_q_pow(1)));
        assert_eq!(b, QRatio::one());
        let (a, _) = norm_formulas(&[2, 1], &SpecPoint::TZero, 4).unwrap();
        assert_eq!(a, QRatio::from(QLaurent::one_minus_q_pow(1).mul(&QLaurent::one_minus_q_pow(1))));
    }

    #[test]
    fn t0_prime_is_inverse_partial_euler() {
        // λ = (0,0): 1/(q;q)_∞ = partition numbers
        let v = norm_prime_t0_series(&[0, 0], 6).unwrap();
        let p: Vec<Rational> = [1, 1, 2, 3, 5, 7, 11].iter().map(|&k| rat(k, 1)).collect();
        assert_eq!(v, p);
        // λ = (1,0): (1−q)/(q;q)_∞
        let v = norm_prime_t0_series(&[1, 0], 6).unwrap();
        let expect: Vec<Rational> = [1, 0, 1, 1, 2, 2, 4].iter().map(|&k| rat(k, 1)).collect();
        assert_eq!(v, expect);
    }

    #[test]
    fn numeric_spec_values() {
        let spec = SpecPoint::numeric(rat(1, 3), rat(1, 5));
        let (a, b) = norm_formulas(&[1, 0], &spec, 3).unwrap();
        // (1 − q)/(1 − t q^0)·… : single factor k = i = 1, n = 1
        assert_eq!(a, QRatio::from_rational(&(rat(2, 3) / rat(4, 5))));
        assert!(!b.is_zero());
    }
}
