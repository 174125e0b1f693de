//! Suite-level checks: operator spectra, orthogonality, norms, self-duality.

use rayon::prelude::*;

use crate::check::CheckOutcome;
use crate::corealg::{partitions_in_box, partitions_of, Partition, QRatio, Rational, Ring};
use crate::error::{Error, Result};

use super::gram::{macdonald_numeric, macdonald_stable, norm_closed_form};
use super::operators::{eigenvalue_c, macdonald_op_apply};
use super::phi::{dual_point, phi};
use super::symfunc::{scalar_product, scalar_product_qt};

/// Partitions of weight at most `max_weight` with at most `nvars` parts, padded.
pub fn shapes(max_weight: i64, nvars: usize) -> Vec<Partition> {
    (0..=max_weight).flat_map(|d| partitions_of(d, Some(nvars))).map(|p| p.padded(nvars).expect("fits")).collect()
}

/// `H_r P_λ = c_r(q^λ) P_λ` for all `r`, `|λ| ≤ max_weight`, `1 ≤ n ≤ max_vars`.
pub fn verify_spectrum(q: &Rational, t: &Rational, max_weight: i64, max_vars: usize) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("macdonald spectrum q={q} t={t}"));
    let cases: Vec<(usize, Partition)> =
        (1..=max_vars).flat_map(|n| shapes(max_weight, n).into_iter().map(move |l| (n, l))).collect();
    let results: Vec<_> = cases
        .par_iter()
        .flat_map_iter(|(n, lam)| {
            let p = macdonald_numeric(lam, *n, q, t);
            (1..=*n).map(move |r| {
                let res = p.as_ref().map_err(Clone::clone).and_then(|p| {
                    let h = macdonald_op_apply(r, &p.poly, q, t)?;
                    let c = eigenvalue_c(r, lam.parts(), q, t)?;
                    Ok((h, p.poly.scale(&c)))
                });
                (format!("n={n} r={r} λ={lam}"), res)
            })
        })
        .collect();
    out.compare_all(results);
    Ok(out)
}

/// `⟨P_λ, P_μ⟩ = 0` for `λ ≠ μ` of equal weight `≤ max_weight`.
pub fn verify_orthogonality(q: &Rational, t: &Rational, max_weight: i64) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("macdonald orthogonality q={q} t={t}"));
    for d in 0..=max_weight {
        let ps: Vec<_> = partitions_of(d, None)
            .into_par_iter()
            .map(|l| macdonald_stable(&l, q, t).map(|p| (l, p)))
            .collect::<Result<_>>()?;
        for (i, (la, pa)) in ps.iter().enumerate() {
            for (lb, pb) in &ps[i + 1..] {
                let r = scalar_product(pa, pb, q, t).map(|v| (v, Rational::zero()));
                out.compare_all([(format!("{la} {lb}"), r)]);
            }
        }
    }
    Ok(out)
}

/// `⟨P_λ, P_λ⟩` by the scalar product against the closed form, `|λ| ≤ max_weight`.
pub fn verify_norms(q: &Rational, t: &Rational, max_weight: i64) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("macdonald norms q={q} t={t}"));
    let n = max_weight.max(1) as usize;
    let results: Vec<_> = shapes(max_weight, n)
        .into_par_iter()
        .map(|lam| {
            let r = macdonald_numeric(&lam, n, q, t)
                .and_then(|p| Ok((scalar_product_qt(&p.poly, &p.poly, q, t)?, norm_closed_form(&lam, q, t)?)));
            (format!("λ={lam}"), r)
        })
        .collect();
    out.compare_all(results);
    Ok(out)
}

/// `Φ_λ(q^{μ−kρ}) = Φ_μ(q^{λ−kρ})` for all `λ, μ` in `[0, max_part]^n`.
pub fn verify_self_duality(n: usize, k: i64, max_part: i64) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("self-duality n={n} k={k}"));
    let lams = partitions_in_box(n, 0, max_part);
    let phis: Vec<_> = lams.par_iter().map(|l| phi(l, k)).collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..lams.len()).flat_map(|i| (i..lams.len()).map(move |j| (i, j))).collect();
    let results: Vec<_> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (lams[i].parts(), lams[j].parts());
            let eval = |f: &crate::corealg::LaurentPoly<QRatio>, at: &[i64]| -> Result<QRatio> {
                f.evaluate(&dual_point(at, k)).ok_or_else(|| Error::DivisionByZero(format!("Φ at {at:?}")))
            };
            let r = eval(&phis[i], b).and_then(|l| Ok((l, eval(&phis[j], a)?)));
            (format!("λ={} μ={}", lams[i], lams[j]), r)
        })
        .collect();
    out.compare_all(results);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corealg::rat;

    #[test]
    fn small_suites() {
        let (q, t) = (rat(1, 3), rat(1, 5));
        assert!(verify_spectrum(&q, &t, 2, 2).unwrap().passed());
        assert!(verify_orthogonality(&q, &t, 3).unwrap().passed());
        assert!(verify_norms(&q, &t, 2).unwrap().passed());
        assert!(verify_self_duality(2, 1, 1).unwrap().passed());
    }
}
