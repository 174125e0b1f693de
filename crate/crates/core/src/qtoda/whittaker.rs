//! Whittaker values `Ψ(p)` as Gelfand–Zetlin sums and by row recursion,
//! and the normalized `Ψ̃(p) = Δ(p)·Ψ(p)` with `Δ(p) = ∏ (p_i − p_{i+1})_q!`.

use rayon::prelude::*;

use crate::corealg::{enumerate_gz, interlacing_rows, LaurentPoly, Partition, QLaurent, QRatio, Ring};
use crate::error::{Error, Result};
use crate::macdonald::Table;

pub fn is_dominant(p: &[i64]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

fn qfact(n: i64) -> QLaurent {
    QLaurent::q_factorial(n as u64)
}

fn inv_qfact(n: i64) -> QRatio {
    QRatio::one().div_exact(&QRatio::from(qfact(n))).expect("(n)_q! is nonzero")
}

/// `Δ(p) = ∏_{i} (p_i − p_{i+1})_q!` for dominant `p`.
pub fn delta(p: &[i64]) -> QLaurent {
    p.windows(2).fold(QLaurent::one(), |acc, w| acc.mul(&qfact(w[0] - w[1])))
}

fn check_rank(p: &[i64]) -> Result<()> {
    if p.is_empty() {
        Err(Error::InvalidInput("lattice point needs at least one coordinate".into()))
    } else {
        Ok(())
    }
}

/// `Ψ(p)` as the sum over Gelfand–Zetlin patterns with top row `p`; zero off
/// the dominant domain.
pub fn whittaker_gz(p: &[i64]) -> Result<LaurentPoly<QRatio>> {
    check_rank(p)?;
    let n = p.len();
    let mut out = LaurentPoly::zero(n);
    if !is_dominant(p) {
        return Ok(out);
    }
    for pat in enumerate_gz(&Partition::new(p.to_vec())?) {
        let rows = &pat.rows;
        let sums: Vec<i64> = rows.iter().map(|r| r.iter().sum()).collect();
        let exp: Vec<i64> = (0..n).map(|k| sums[k] - if k == 0 { 0 } else { sums[k - 1] }).collect();
        let mut num = QLaurent::one();
        for row in rows.iter().take(n - 1).skip(1) {
            for w in row.windows(2) {
                num = num.mul(&qfact(w[0] - w[1]));
            }
        }
        let mut den = QLaurent::one();
        for k in 0..n - 1 {
            for i in 0..=k {
                den = den.mul(&qfact(rows[k + 1][i] - rows[k][i]));
                den = den.mul(&qfact(rows[k][i] - rows[k + 1][i + 1]));
            }
        }
        out.add_term(exp, QRatio::new(num, den).expect("nonzero denominator"));
    }
    Ok(out)
}

/// `Ψ(p)` by the recursion over the interlacing row below `p`, with kernel
/// `Q(p, p') = 1/∏ (p_i − p'_i)_q! (p'_i − p_{i+1})_q!` and measure `Δ(p')`.
pub fn whittaker_recursive(p: &[i64]) -> Result<LaurentPoly<QRatio>> {
    check_rank(p)?;
    let n = p.len();
    if !is_dominant(p) {
        return Ok(LaurentPoly::zero(n));
    }
    if n == 1 {
        return Ok(LaurentPoly::monomial(vec![p[0]], QRatio::one()));
    }
    let top: i64 = p.iter().sum();
    let mut out = LaurentPoly::zero(n);
    for row in interlacing_rows(p) {
        let lower = whittaker_recursive(&row)?;
        let mut coef = QRatio::from(delta(&row));
        for i in 0..n - 1 {
            coef = coef.mul(&inv_qfact(p[i] - row[i])).mul(&inv_qfact(row[i] - p[i + 1]));
        }
        let zlast = top - row.iter().sum::<i64>();
        for (e, c) in lower.terms() {
            let mut e = e.clone();
            e.push(zlast);
            out.add_term(e, c.mul(&coef));
        }
    }
    Ok(out)
}

/// `Ψ̃(p) = Δ(p)·Ψ(p)`; every coefficient must land in `ℤ[q]`.
pub fn normalize_whittaker(p: &[i64], psi: &LaurentPoly<QRatio>) -> Result<LaurentPoly<QLaurent>> {
    if !is_dominant(p) {
        return Err(Error::InvalidInput(format!("{p:?} is not dominant")));
    }
    let d = QRatio::from(delta(p));
    psi.try_map_coeffs(|c| {
        let l = c.mul(&d).to_laurent()?;
        l.is_integral_in_q().then_some(l)
    })
    .ok_or_else(|| Error::Internal(format!("Ψ̃{p:?} has a coefficient outside ℤ[q]")))
}

/// `Ψ̃(p)` from the Gelfand–Zetlin sum; zero off the dominant domain.
pub fn whittaker_normalized(p: &[i64]) -> Result<LaurentPoly<QLaurent>> {
    if !is_dominant(p) {
        check_rank(p)?;
        return Ok(LaurentPoly::zero(p.len()));
    }
    normalize_whittaker(p, &whittaker_gz(p)?)
}

/// Every point of `[lo, hi]^n`.
pub fn box_points(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `Ψ` on the whole box `[lo, hi]^n`, zeros included.
pub fn whittaker_table(n: usize, lo: i64, hi: i64) -> Result<Table<LaurentPoly<QRatio>>> {
    box_points(n, lo, hi).into_par_iter().map(|p| whittaker_gz(&p).map(|v| (p, v))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_examples() {
        let psi = whittaker_gz(&[1, 0]).unwrap();
        let c = QRatio::one().div_exact(&QRatio::from(QLaurent::one_minus_q_pow(1))).unwrap();
        assert_eq!(psi, LaurentPoly::from_terms(2, [(vec![1, 0], c.clone()), (vec![0, 1], c)]));
        assert!(whittaker_gz(&[0, 1]).unwrap().is_zero());
        let t = whittaker_normalized(&[2, 0]).unwrap();
        let one_q = QLaurent::int(1).add(&QLaurent::q_pow(1));
        let expect = LaurentPoly::from_terms(
            2,
            [(vec![2, 0], QLaurent::one()), (vec![1, 1], one_q), (vec![0, 2], QLaurent::one())],
        );
        assert_eq!(t, expect);
    }

    #[test]
    fn rank_one_and_trivial() {
        assert_eq!(whittaker_gz(&[3]).unwrap(), LaurentPoly::monomial(vec![3], QRatio::one()));
        assert_eq!(whittaker_normalized(&[0, 0]).unwrap(), LaurentPoly::one(2));
        assert!(whittaker_gz(&[]).is_err());
    }

    #[test]
    fn recursion_matches_sum() {
        for p in box_points(3, -1, 2) {
            assert_eq!(whittaker_gz(&p).unwrap(), whittaker_recursive(&p).unwrap(), "{p:?}");
        }
    }
}
