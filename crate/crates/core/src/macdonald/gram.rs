//! Macdonald polynomials by Gram–Schmidt in the power-sum coordinates.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::corealg::{product, Field, LaurentPoly, Partition, QRatio, Rational, Ring};
use crate::error::{Error, Result};

use super::symfunc::{restrict, transition, z_lambda, SymFunc};

/// Where `(q, t)` sits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpecPoint {
    /// Exact rational values.
    Numeric { q: Rational, t: Rational },
    /// Symbolic `q`, `t = 0`; coefficients in `ℚ(q^{1/2})`.
    TZero,
    /// Symbolic `q`, `t = q^{-k}`.
    QPow { k: i64 },
}

impl SpecPoint {
    pub fn numeric(q: Rational, t: Rational) -> Self {
        SpecPoint::Numeric { q, t }
    }

    /// `(q, t)` as symbolic scalars; `None` for numeric points.
    pub fn symbolic(&self) -> Option<(QRatio, QRatio)> {
        match self {
            SpecPoint::Numeric { .. } => None,
            SpecPoint::TZero => Some((QRatio::q_pow(1), QRatio::zero())),
            SpecPoint::QPow { k } => Some((QRatio::q_pow(1), QRatio::q_pow(-k))),
        }
    }

    /// `(q, t)` as rationals; `None` for symbolic points.
    pub fn rational(&self) -> Option<(Rational, Rational)> {
        match self {
            SpecPoint::Numeric { q, t } => Some((q.clone(), t.clone())),
            _ => None,
        }
    }
}

impl fmt::Display for SpecPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecPoint::Numeric { q, t } => write!(f, "q={q}, t={t}"),
            SpecPoint::TZero => write!(f, "t=0"),
            SpecPoint::QPow { k } => write!(f, "t=q^{}", -k),
        }
    }
}

/// `P_λ` in `nvars` variables together with its stable monomial expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct MacdonaldPoly<C> {
    pub lambda: Partition,
    pub nvars: usize,
    pub poly: LaurentPoly<C>,
    /// Stable expansion of the underlying partition `λ − λ_n·1` (polynomial part).
    pub stable: SymFunc<C>,
    pub spec: SpecPoint,
}

/// One orthogonalized element in both coordinate systems.
struct Orth<C> {
    m: Vec<C>,
    /// `z_ρ · p_ρ(P) / ⟨P,P⟩`, ready for projections.
    weighted: Option<Vec<C>>,
}

/// Gram–Schmidt in degree `d` for the partitions selected by `keep`, in
/// lexicographically increasing order. Returns the m-coordinates of each `P_μ`.
fn gram_schmidt_family<C: Field>(
    d: i64,
    keep: impl Fn(&Partition) -> bool,
    q: &C,
    t: &C,
) -> Result<Vec<Option<Result<Vec<C>>>>> {
    let tr = transition(d);
    let n = tr.len();
    let z: Vec<Result<C>> = tr.parts.iter().map(|rho| z_lambda(rho, q, t)).collect();
    let to_p = |m: &[C]| -> Vec<C> {
        let mut out = vec![C::zero(); n];
        for (mu, c) in m.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (rho, k) in tr.to_p[mu].iter().enumerate() {
                if !Ring::is_zero(k) {
                    out[rho] = out[rho].add(&c.mul(&C::from_rational(k)));
                }
            }
        }
        out
    };
    let mut done: Vec<Option<Orth<C>>> = (0..n).map(|_| None).collect();
    let mut results: Vec<Option<Result<Vec<C>>>> = (0..n).map(|_| None).collect();
    for idx in (0..n).rev() {
        let lam = &tr.parts[idx];
        if !keep(lam) {
            continue;
        }
        let mut m = vec![C::zero(); n];
        m[idx] = C::one();
        let mut failure = None;
        for (j, orth) in done.iter().enumerate().skip(idx + 1) {
            let Some(orth) = orth else { continue };
            if !lam.dominates(&tr.parts[j]) {
                continue;
            }
            let Some(w) = &orth.weighted else {
                failure = Some(Error::SingularGram(format!("⟨P,P⟩ vanishes for {} below {lam}", tr.parts[j])));
                break;
            };
            let mut c = C::zero();
            for (rho, k) in tr.to_p[idx].iter().enumerate() {
                if !Ring::is_zero(k) && !w[rho].is_zero() {
                    c = c.add(&w[rho].mul(&C::from_rational(k)));
                }
            }
            if c.is_zero() {
                continue;
            }
            for (a, b) in m.iter_mut().zip(&orth.m) {
                if !b.is_zero() {
                    *a = a.sub(&c.mul(b));
                }
            }
        }
        if let Some(e) = failure {
            results[idx] = Some(Err(e));
            done[idx] = Some(Orth { m: m.clone(), weighted: None });
            continue;
        }
        let p = to_p(&m);
        let mut norm = C::zero();
        let mut zerr = None;
        for rho in 0..n {
            if p[rho].is_zero() {
                continue;
            }
            match &z[rho] {
                Ok(zr) => norm = norm.add(&p[rho].mul(&p[rho]).mul(zr)),
                Err(e) => zerr = Some(e.clone()),
            }
        }
        if let Some(e) = zerr {
            return Err(e);
        }
        let weighted = norm.inv().map(|inv| {
            p.iter()
                .enumerate()
                .map(|(rho, x)| if x.is_zero() { C::zero() } else { x.mul(z[rho].as_ref().unwrap()).mul(&inv) })
                .collect()
        });
        results[idx] = Some(Ok(m.clone()));
        done[idx] = Some(Orth { m, weighted });
    }
    Ok(results)
}

fn to_symfunc<C: Ring>(d: i64, m: &[C]) -> SymFunc<C> {
    let tr = transition(d);
    m.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (tr.parts[i].clone(), c.clone())).collect()
}

/// Stable `P_λ` for an ordinary partition at arbitrary `(q, t)` in a field.
pub fn macdonald_stable<C: Field>(lambda: &Partition, q: &C, t: &C) -> Result<SymFunc<C>> {
    if !lambda.is_nonnegative() {
        return Err(Error::InvalidInput(format!("{lambda} has negative parts")));
    }
    let lam = lambda.trimmed();
    let d = lam.weight();
    let tr = transition(d);
    let idx = tr.index[&lam];
    let family = gram_schmidt_family(d, |mu| lam.dominates(mu), q, t)?;
    let m = family[idx].clone().expect("λ is in its own ideal")?;
    Ok(to_symfunc(d, &m))
}

/// Stable `P_λ(·; q, 0)`, cached per degree.
pub fn macdonald_stable_t0(lambda: &Partition) -> Result<SymFunc<QRatio>> {
    type Family = Arc<Vec<Option<Result<Vec<QRatio>>>>>;
    static CACHE: OnceLock<Mutex<HashMap<i64, Family>>> = OnceLock::new();
    if !lambda.is_nonnegative() {
        return Err(Error::InvalidInput(format!("{lambda} has negative parts")));
    }
    let lam = lambda.trimmed();
    let d = lam.weight();
    let cache = CACHE.get_or_init(Default::default);
    let cached = cache.lock().unwrap().get(&d).cloned();
    let family = match cached {
        Some(f) => f,
        None => {
            let f = Arc::new(gram_schmidt_family(d, |_| true, &QRatio::q_pow(1), &QRatio::zero())?);
            cache.lock().unwrap().entry(d).or_insert(f).clone()
        }
    };
    let idx = transition(d).index[&lam];
    let m = family[idx].clone().expect("full family")?;
    Ok(to_symfunc(d, &m))
}

fn check_shape(lambda: &Partition, nvars: usize) -> Result<Partition> {
    if lambda.len() > nvars && lambda.parts()[nvars..].iter().any(|&p| p != 0) {
        return Err(Error::InvalidInput(format!("{lambda} has more than {nvars} parts")));
    }
    let mut v = lambda.parts().to_vec();
    v.resize(nvars, 0);
    if nvars > lambda.len() && v.iter().any(|&p| p < 0) {
        return Err(Error::InvalidInput(format!("cannot pad {lambda} with zeros")));
    }
    Partition::new(v)
}

/// `P_λ` in `nvars` variables at a given field point; `λ` may be generalized
/// (negative parts), in which case `P_λ = (∏x)^{λ_n} P_{λ − λ_n·1}`.
pub fn gram_schmidt_macdonald<C: Field>(
    lambda: &Partition,
    nvars: usize,
    q: &C,
    t: &C,
    spec: SpecPoint,
) -> Result<MacdonaldPoly<C>> {
    extend_generalized(lambda, nvars, spec, |mu| macdonald_stable(mu, q, t))
}

/// `P_λ` at a rational point.
pub fn macdonald_numeric(
    lambda: &Partition,
    nvars: usize,
    q: &Rational,
    t: &Rational,
) -> Result<MacdonaldPoly<Rational>> {
    gram_schmidt_macdonald(lambda, nvars, q, t, SpecPoint::numeric(q.clone(), t.clone()))
}

/// `P_λ(·; q, 0)` with symbolic `q`.
pub fn macdonald_t0(lambda: &Partition, nvars: usize) -> Result<MacdonaldPoly<QRatio>> {
    extend_generalized(lambda, nvars, SpecPoint::TZero, macdonald_stable_t0)
}

/// `P_λ(·; q, q^{-k})` with symbolic `q`; fails with a singular Gram matrix
/// when `P_λ` has a pole there.
pub fn macdonald_qpow(lambda: &Partition, nvars: usize, k: i64) -> Result<MacdonaldPoly<QRatio>> {
    let (q, t) = SpecPoint::QPow { k }.symbolic().unwrap();
    gram_schmidt_macdonald(lambda, nvars, &q, &t, SpecPoint::QPow { k })
}

/// `P_λ = (∏ x_j^{λ_n}) · P_{λ − λ_n·1}` for a generalized partition, with the
/// polynomial part supplied by `build`.
pub fn extend_generalized<C: Ring>(
    lambda: &Partition,
    nvars: usize,
    spec: SpecPoint,
    build: impl FnOnce(&Partition) -> Result<SymFunc<C>>,
) -> Result<MacdonaldPoly<C>> {
    if nvars == 0 {
        return Err(Error::InvalidInput("need at least one variable".into()));
    }
    let lam = check_shape(lambda, nvars)?;
    let shift = lam.parts()[nvars - 1];
    let base = lam.shifted(-shift);
    let stable = build(&base)?;
    let poly = restrict(&stable, nvars).mul_monomial(&vec![shift; nvars]);
    Ok(MacdonaldPoly { lambda: lam, nvars, poly, stable, spec })
}

/// Closed form of `⟨P_λ, P_λ⟩_{q,t}` for `λ` with `n` parts (`λ_{n+1} = 0`):
/// `∏_{i≤k≤n} ∏_{m=1}^{λ_k−λ_{k+1}} (1−t^{k−i}q^{λ_i−λ_{k+1}+1−m}) / (1−t^{k+1−i}q^{λ_i−λ_{k+1}−m})`.
pub fn norm_closed_form<C: Field>(lambda: &Partition, q: &C, t: &C) -> Result<C> {
    if !lambda.is_nonnegative() {
        return Err(Error::InvalidInput(format!("{lambda} has negative parts")));
    }
    let l = lambda.parts();
    let n = l.len();
    let part = |i: usize| if i < n { l[i] } else { 0 };
    let qp = |e: i64| q.powi(e).ok_or_else(|| Error::DivisionByZero("q = 0".into()));
    let mut num = Vec::new();
    let mut den = Vec::new();
    for i in 0..n {
        for k in i..n {
            for m in 1..=part(k) - part(k + 1) {
                let a = part(i) - part(k + 1);
                num.push(C::one().sub(&t.pow((k - i) as u64).mul(&qp(a + 1 - m)?)));
                den.push(C::one().sub(&t.pow((k + 1 - i) as u64).mul(&qp(a - m)?)));
            }
        }
    }
    product(num)
        .div_exact(&product(den))
        .ok_or_else(|| Error::Pole(format!("norm of P_{lambda} has a vanishing denominator")))
}
