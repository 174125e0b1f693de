//! Normalized Macdonald polynomials `Φ_λ` at `t = q^{-k}`, self-duality and
//! the dual eigenproblem.
//!
//! `Φ_λ = t^{Σλ_iρ_i} ∏_{i<j} (t^{j−i+1}q^{λ_i−λ_j}; q)_∞ / (t^{j−i}q^{λ_i−λ_j}; q)_∞ · P_λ`.
//! For `k ≥ 1` both `P_λ` and the normalization can be singular at
//! `t = q^{-k}`; `Φ_λ` is then obtained as a limit along the curve
//! `t^{1/2} = q^{-k/2}(1 + ε)` with `q` fixed.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::corealg::{monomial_symmetric, partitions_of, LaurentPoly, Partition, QLaurent, QRatio, Ring};
use crate::error::{Error, Result};

use super::eps::EpsSeries;
use super::gram::{macdonald_qpow, MacdonaldPoly};
use super::operators::{dual_macdonald_apply, macdonald_op_apply, two_rho, Table};

type Eps = EpsSeries<QRatio>;

/// `Φ_λ = factor · P_λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedMacdonald {
    pub p: MacdonaldPoly<QRatio>,
    pub factor: QRatio,
    pub phi: LaurentPoly<QRatio>,
}

fn sum_lambda_two_rho(lambda: &[i64]) -> i64 {
    lambda.iter().zip(two_rho(lambda.len())).map(|(l, r)| l * r).sum()
}

/// The normalization factor of `Φ_λ` at `t = q^{-k}`, with the infinite
/// product telescoped: for `k > 0` each `(i,j)` contributes
/// `∏_{n<k}(1 − q^{λ_i−λ_j−k(j−i+1)+n})`, for `k < 0` the reciprocal of
/// `∏_{n<|k|}(1 − q^{λ_i−λ_j+|k|(j−i)+n})`.
pub fn normalization_factor(lambda: &[i64], k: i64) -> Result<QRatio> {
    if k == 0 {
        return Err(Error::Pole("t = 1: the normalization has a vanishing denominator".into()));
    }
    let n = lambda.len();
    // t^{Σλρ} = q^{-k Σλρ} = s^{-k Σλ·2ρ}
    let mut num = QLaurent::s_pow(-k * sum_lambda_two_rho(lambda));
    let mut den = QLaurent::one();
    for i in 0..n {
        for j in i + 1..n {
            let d = lambda[i] - lambda[j];
            let gap = (j - i) as i64;
            if k > 0 {
                for m in 0..k {
                    let e = d - k * (gap + 1) + m;
                    if e == 0 {
                        return Err(Error::Pole(format!(
                            "normalization factor vanishes at (i,j,n) = ({},{},{m})",
                            i + 1,
                            j + 1
                        )));
                    }
                    num = num.mul(&QLaurent::one_minus_q_pow(e));
                }
            } else {
                for m in 0..-k {
                    den = den.mul(&QLaurent::one_minus_q_pow(d - k * gap + m));
                }
            }
        }
    }
    QRatio::new(num, den).ok_or_else(|| Error::Internal("zero denominator".into()))
}

/// `normalization_factor · P_λ` for `P` computed at `t = q^{-k}`.
pub fn normalize_phi(p: &MacdonaldPoly<QRatio>) -> Result<NormalizedMacdonald> {
    let super::gram::SpecPoint::QPow { k } = p.spec else {
        return Err(Error::InvalidInput(format!("normalization needs t = q^(-k), got {}", p.spec)));
    };
    let factor = normalization_factor(p.lambda.parts(), k)?;
    Ok(NormalizedMacdonald { phi: p.poly.scale(&factor), factor, p: p.clone() })
}

/// The curve `q = s², t^{1/2} = s^{-k}(1 + ε)`.
struct Curve {
    q: Eps,
    u: Eps,
    t: Eps,
}

fn curve(k: i64) -> Curve {
    let q = Eps::constant(QRatio::q_pow(1));
    let u = Eps::linear(QRatio::s_pow(-k), QRatio::s_pow(-k));
    let t = u.mul(&u);
    Curve { q, u, t }
}

/// `H_1` in the monomial basis of symmetric polynomials in `n` variables of
/// degree `d`, along the curve.
struct CurveMatrix {
    parts: Vec<Partition>,
    /// `a[μ][ν]`: coefficient of `m_ν` in `H_1 m_μ`.
    a: Vec<Vec<Eps>>,
}

fn curve_matrix(d: i64, n: usize, k: i64) -> Result<Arc<CurveMatrix>> {
    type Cache = Mutex<HashMap<(i64, usize, i64), Arc<CurveMatrix>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&(d, n, k)) {
        return Ok(m.clone());
    }
    let c = curve(k);
    let parts: Vec<Partition> = partitions_of(d, Some(n)).into_iter().map(|p| p.padded(n).unwrap()).collect();
    let mut a = Vec::with_capacity(parts.len());
    for mu in &parts {
        let h = macdonald_op_apply(1, &monomial_symmetric::<Eps>(mu, n), &c.q, &c.t)?;
        a.push(parts.iter().map(|nu| h.coeff(nu.parts())).collect());
    }
    let m = Arc::new(CurveMatrix { parts, a });
    Ok(cache.lock().unwrap().entry((d, n, k)).or_insert(m).clone())
}

/// `Φ_λ` along the curve for a partition with nonnegative parts.
fn phi_curve_base(lambda: &Partition, k: i64) -> Result<LaurentPoly<Eps>> {
    let n = lambda.len();
    let c = curve(k);
    let d = lambda.weight();
    let mat = curve_matrix(d, n, k)?;
    let energy = |mu: &Partition| -> Eps {
        let mut e = Eps::zero();
        for (i, &p) in mu.parts().iter().enumerate() {
            e = e.add(&c.q.pow(p as u64).mul(&c.t.pow((n - 1 - i) as u64)));
        }
        e
    };
    let top = mat.parts.iter().position(|p| p == lambda).expect("λ among its degree");
    let e_top = energy(lambda);
    let mut coeffs: Vec<Option<Eps>> = vec![None; mat.parts.len()];
    coeffs[top] = Some(Eps::one());
    for nu in top + 1..mat.parts.len() {
        if !lambda.dominates(&mat.parts[nu]) {
            continue;
        }
        let mut acc = Eps::zero();
        for mu in top..nu {
            if let Some(cm) = &coeffs[mu] {
                let a = &mat.a[mu][nu];
                if !a.is_zero() {
                    acc = acc.add(&cm.mul(a));
                }
            }
        }
        let gap = e_top.sub(&energy(&mat.parts[nu]));
        let v = acc
            .div_exact(&gap)
            .ok_or_else(|| Error::Internal(format!("degenerate spectrum at {lambda} vs {}", mat.parts[nu])))?;
        coeffs[nu] = Some(v);
    }
    let mut poly = LaurentPoly::zero(n);
    for (mu, cm) in mat.parts.iter().zip(&coeffs) {
        if let Some(cm) = cm {
            poly = poly.add(&monomial_symmetric::<Eps>(mu, n).scale(cm));
        }
    }
    // N'(λ) = u^{Σλ·2ρ} ∏_{i<j} (t^{j−i}; q)_d / (t^{j−i+1}; q)_d
    let l = lambda.parts();
    let mut norm = c.u.powi(sum_lambda_two_rho(l)).expect("u invertible");
    for i in 0..n {
        for j in i + 1..n {
            let gap = (j - i) as u64;
            let (a, b) = (c.t.pow(gap), c.t.pow(gap + 1));
            for m in 0..(l[i] - l[j]) as u64 {
                let qm = c.q.pow(m);
                let num = Eps::one().sub(&a.mul(&qm));
                let den = Eps::one().sub(&b.mul(&qm));
                norm = norm.mul(&num).div_exact(&den).expect("nonzero along the curve");
            }
        }
    }
    // λ-independent constant, telescoped: ∏_{i<j} ∏_{n<k} (1 − q^{−k(j−i+1)+n})
    let mut t0 = QLaurent::one();
    for i in 0..n {
        for j in i + 1..n {
            for m in 0..k {
                t0 = t0.mul(&QLaurent::one_minus_q_pow(-k * ((j - i) as i64 + 1) + m));
            }
        }
    }
    let scale = norm.mul(&Eps::constant(QRatio::from_laurent(t0)));
    Ok(poly.scale(&scale))
}

/// `Φ_λ` along the curve `t^{1/2} = q^{-k/2}(1+ε)`, `k ≥ 1`, for a
/// generalized partition (`Φ_{λ+c·1} = (∏x)^c Φ_λ`).
pub fn phi_on_curve(lambda: &Partition, k: i64) -> Result<LaurentPoly<Eps>> {
    if k < 1 {
        return Err(Error::InvalidInput(format!("curve limit needs k ≥ 1, got {k}")));
    }
    let n = lambda.len();
    if n == 0 {
        return Err(Error::InvalidInput("need at least one variable".into()));
    }
    let shift = lambda.parts()[n - 1];
    let base = phi_curve_base(&lambda.shifted(-shift), k)?;
    Ok(base.mul_monomial(&vec![shift; n]))
}

/// `ε → 0` limit of a series that must be regular there.
pub fn eps_limit(x: &Eps) -> Result<QRatio> {
    if let Some(v) = x.valuation() {
        if v < 0 {
            return Err(Error::Pole(format!("ε^{v} survives in the limit")));
        }
    }
    if x.precision().is_some_and(|p| p < 1) {
        return Err(Error::PrecisionExhausted("constant term unknown".into()));
    }
    Ok(x.coeff(0).unwrap())
}

/// `Φ_λ(x; q, q^{-k})` for `k ≥ 1` as the limit along the curve.
pub fn phi_limit(lambda: &Partition, k: i64) -> Result<LaurentPoly<QRatio>> {
    let curve_poly = phi_on_curve(lambda, k)?;
    let mut out = LaurentPoly::zero(lambda.len());
    for (e, c) in curve_poly.terms() {
        out.add_term(e.clone(), eps_limit(c)?);
    }
    Ok(out)
}

/// `Φ_λ(x; q, q^{-k})`: the curve limit for `k ≥ 1`, the exact
/// Gram–Schmidt value times the telescoped normalization for `k < 0`.
pub fn phi(lambda: &Partition, k: i64) -> Result<LaurentPoly<QRatio>> {
    if k >= 1 {
        phi_limit(lambda, k)
    } else {
        let p = macdonald_qpow(lambda, lambda.len(), k)?;
        Ok(normalize_phi(&p)?.phi)
    }
}

/// The point `q^{μ − kρ}`, i.e. `x_i = s^{2μ_i − k·2ρ_i}`.
pub fn dual_point(mu: &[i64], k: i64) -> Vec<QRatio> {
    mu.iter().zip(two_rho(mu.len())).map(|(m, r)| QRatio::s_pow(2 * m - k * r)).collect()
}

/// `Φ_λ(q^{μ−kρ}) = Φ_μ(q^{λ−kρ})` given both polynomials.
pub fn self_duality_holds(
    lambda: &[i64],
    phi_lambda: &LaurentPoly<QRatio>,
    mu: &[i64],
    phi_mu: &LaurentPoly<QRatio>,
    k: i64,
) -> Result<bool> {
    let lhs = phi_lambda.evaluate(&dual_point(mu, k)).ok_or_else(|| Error::DivisionByZero("evaluation".into()))?;
    let rhs = phi_mu.evaluate(&dual_point(lambda, k)).ok_or_else(|| Error::DivisionByZero("evaluation".into()))?;
    Ok(lhs == rhs)
}

/// Self-duality for one pair, computing both `Φ` from scratch.
pub fn self_duality_check(lambda: &Partition, mu: &Partition, k: i64) -> Result<bool> {
    if lambda.len() != mu.len() {
        return Err(Error::InvalidInput("λ and μ need the same length".into()));
    }
    self_duality_holds(lambda.parts(), &phi(lambda, k)?, mu.parts(), &phi(mu, k)?, k)
}

/// Table of `Φ_λ` along the curve on the dominant part of `[lo, hi]^n`;
/// non-dominant points of the box are zero.
pub fn phi_curve_table(n: usize, lo: i64, hi: i64, k: i64) -> Result<Table<LaurentPoly<Eps>>> {
    let mut table = Table::new();
    let mut idx = vec![lo; n];
    loop {
        let val = if idx.windows(2).all(|w| w[0] >= w[1]) {
            phi_on_curve(&Partition::new(idx.clone())?, k)?
        } else {
            LaurentPoly::zero(n)
        };
        table.insert(idx.clone(), val);
        let Some(pos) = (0..n).rev().find(|&i| idx[i] < hi) else { break };
        idx[pos] += 1;
        for x in idx.iter_mut().skip(pos + 1) {
            *x = lo;
        }
    }
    Ok(table)
}

/// Residual `H^∨_r Φ_λ − t^{rℓ/2} e_r(x) Φ_λ` along the curve.
pub fn dual_residual_on_curve(
    r: usize,
    table: &Table<LaurentPoly<Eps>>,
    lambda: &[i64],
    k: i64,
) -> Result<LaurentPoly<Eps>> {
    let n = lambda.len();
    let c = curve(k);
    let lhs = dual_macdonald_apply(r, table, lambda, &c.q, &c.u)?;
    let xs: Vec<LaurentPoly<Eps>> = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
    let er = elementary_poly(r, &xs, n);
    let phi_l = table.get(lambda).ok_or_else(|| Error::MissingEntry(format!("{lambda:?}")))?;
    let pref = c.u.pow((r * (n - 1)) as u64);
    Ok(lhs.sub(&er.mul(phi_l).scale(&pref)))
}

fn elementary_poly<C: Ring>(r: usize, xs: &[LaurentPoly<C>], n: usize) -> LaurentPoly<C> {
    let mut acc = LaurentPoly::zero(n);
    for sub in crate::corealg::symmetric::subsets(xs.len(), r) {
        acc = acc.add(&sub.iter().fold(LaurentPoly::one(n), |a, &i| a.mul(&xs[i])));
    }
    acc
}

/// True when every coefficient vanishes through order `ε^0`.
pub fn vanishes_in_limit(p: &LaurentPoly<Eps>) -> bool {
    p.terms().all(|(_, c)| c.is_zero_to_precision() && c.precision().is_none_or(|pr| pr >= 1))
}

/// Dual eigenproblem on the dominant part of `[0, hi]^n`, verified along the
/// curve (degenerate `λ` included).
pub fn verify_dual_on_curve(n: usize, hi: i64, k: i64) -> Result<bool> {
    let table = phi_curve_table(n, 0, hi + 1, k)?;
    for r in 1..=n {
        for (lam, _) in table.iter().filter(|(l, _)| l.iter().all(|&x| x <= hi) && l.windows(2).all(|w| w[0] >= w[1])) {
            if !vanishes_in_limit(&dual_residual_on_curve(r, &table, lam, k)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Dual eigenproblem with exact values `t^{1/2} = s^{-k}`, at a point `λ`
/// where the coefficients are finite.
pub fn dual_residual_exact(
    r: usize,
    table: &Table<LaurentPoly<QRatio>>,
    lambda: &[i64],
    k: i64,
) -> Result<LaurentPoly<QRatio>> {
    let n = lambda.len();
    let q = QRatio::q_pow(1);
    let u = QRatio::s_pow(-k);
    let lhs = dual_macdonald_apply(r, table, lambda, &q, &u)?;
    let xs: Vec<LaurentPoly<QRatio>> = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
    let er = elementary_poly(r, &xs, n);
    let phi_l = table.get(lambda).ok_or_else(|| Error::MissingEntry(format!("{lambda:?}")))?;
    Ok(lhs.sub(&er.mul(phi_l).scale(&u.pow((r * (n - 1)) as u64))))
}
