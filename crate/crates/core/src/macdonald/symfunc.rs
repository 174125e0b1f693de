//! Symmetric functions in the monomial basis, the power-sum transition and the
//! `(q,t)` scalar product.
//!
//! Elements are stable (infinitely many variables): a map from partitions to
//! coefficients of `m_μ`. Polynomials in `n` variables are lifted by reading
//! off the coefficients of their dominant monomials.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::corealg::{monomial_symmetric, partitions_of, Field, LaurentPoly, Partition, Rational, Ring};
use crate::error::{Error, Result};

/// Stable symmetric function `Σ c_μ m_μ`; keys are trimmed partitions.
pub type SymFunc<C> = BTreeMap<Partition, C>;

/// Monomial/power-sum transition data for one degree.
#[derive(Debug)]
pub struct Transition {
    /// Partitions of the degree, lexicographically decreasing.
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `p_ρ = Σ_μ to_m[ρ][μ] m_μ`.
    pub to_m: Vec<Vec<i64>>,
    /// `m_μ = Σ_ρ to_p[μ][ρ] p_ρ`.
    pub to_p: Vec<Vec<Rational>>,
}

/// Number of ways to distribute the parts of `rho` into blocks with sums `mu`.
fn distributions(rho: &[i64], mu: &[i64]) -> i64 {
    fn rec(rho: &[i64], rest: &mut Vec<i64>, memo: &mut HashMap<(usize, Vec<i64>), i64>) -> i64 {
        if rho.is_empty() {
            return i64::from(rest.iter().all(|&r| r == 0));
        }
        let key = (rho.len(), rest.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for j in 0..rest.len() {
            if rest[j] >= rho[0] {
                rest[j] -= rho[0];
                total += rec(&rho[1..], rest, memo);
                rest[j] += rho[0];
            }
        }
        memo.insert(key, total);
        total
    }
    rec(rho, &mut mu.to_vec(), &mut HashMap::new())
}

impl Transition {
    fn build(d: i64) -> Self {
        let parts = partitions_of(d, None);
        let n = parts.len();
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let to_m: Vec<Vec<i64>> =
            parts.iter().map(|rho| parts.iter().map(|mu| distributions(rho.parts(), mu.parts())).collect()).collect();
        // to_m is lower triangular (μ coarser than ρ comes first); its inverse,
        // by forward substitution, is exactly the m → p matrix.
        let mut to_p = vec![vec![Rational::zero(); n]; n];
        for col in 0..n {
            for row in col..n {
                let mut acc = if row == col { Rational::one() } else { Rational::zero() };
                for k in col..row {
                    if to_m[row][k] != 0 {
                        acc = acc.sub(&Rational::from_i64(to_m[row][k]).mul(&to_p[k][col]));
                    }
                }
                to_p[row][col] = acc.mul(&Rational::from_i64(to_m[row][row]).inv().unwrap());
            }
        }
        Transition { parts, index, to_m, to_p }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Cached transition table for degree `d`.
pub fn transition(d: i64) -> Arc<Transition> {
    static CACHE: OnceLock<Mutex<HashMap<i64, Arc<Transition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&d) {
        return t.clone();
    }
    let t = Arc::new(Transition::build(d));
    cache.lock().unwrap().entry(d).or_insert(t).clone()
}

/// `z_λ(q,t) = ∏ n^{m_n} m_n! · ∏_{λ_k≠0} (1−q^{λ_k})/(1−t^{λ_k})`.
pub fn z_lambda<C: Field>(lambda: &Partition, q: &C, t: &C) -> Result<C> {
    if !lambda.is_nonnegative() {
        return Err(Error::InvalidInput(format!("z_λ needs nonnegative parts, got {lambda}")));
    }
    let mut acc = C::one();
    for (n, m) in lambda.multiplicities() {
        let fact: i64 = (1..=m as i64).product();
        acc = acc.mul(&C::from_i64(n.pow(m as u32) * fact));
    }
    for &p in lambda.parts().iter().filter(|&&p| p != 0) {
        let num = C::one().sub(&q.pow(p as u64));
        let den = C::one().sub(&t.pow(p as u64));
        let f =
            num.div_exact(&den).ok_or_else(|| Error::DivisionByZero(format!("1 − t^{p} vanishes in z_{lambda}")))?;
        acc = acc.mul(&f);
    }
    Ok(acc)
}

/// Coordinates of a homogeneous symmetric function of degree `d` in the power-sum basis.
pub fn to_power_sums<C: Ring>(f: &SymFunc<C>, tr: &Transition) -> Vec<C> {
    let mut out = vec![C::zero(); tr.len()];
    for (mu, c) in f {
        let i = tr.index[mu];
        for (rho, k) in tr.to_p[i].iter().enumerate() {
            if !Ring::is_zero(k) {
                out[rho] = out[rho].add(&c.mul(&C::from_rational(k)));
            }
        }
    }
    out
}

/// `⟨f, g⟩_{q,t}` on stable symmetric functions.
pub fn scalar_product<C: Field>(f: &SymFunc<C>, g: &SymFunc<C>, q: &C, t: &C) -> Result<C> {
    let mut by_degree: BTreeMap<i64, (SymFunc<C>, SymFunc<C>)> = BTreeMap::new();
    for (mu, c) in f {
        by_degree.entry(mu.weight()).or_default().0.insert(mu.clone(), c.clone());
    }
    for (mu, c) in g {
        by_degree.entry(mu.weight()).or_default().1.insert(mu.clone(), c.clone());
    }
    let mut acc = C::zero();
    for (d, (fd, gd)) in by_degree {
        if fd.is_empty() || gd.is_empty() {
            continue;
        }
        let tr = transition(d);
        let fp = to_power_sums(&fd, &tr);
        let gp = to_power_sums(&gd, &tr);
        for (i, rho) in tr.parts.iter().enumerate() {
            if fp[i].is_zero() || gp[i].is_zero() {
                continue;
            }
            acc = acc.add(&fp[i].mul(&gp[i]).mul(&z_lambda(rho, q, t)?));
        }
    }
    Ok(acc)
}

/// Lift a symmetric polynomial to its stable monomial expansion.
pub fn lift<C: Ring>(f: &LaurentPoly<C>) -> Result<SymFunc<C>> {
    if !f.is_symmetric() {
        return Err(Error::InvalidInput("polynomial is not symmetric".into()));
    }
    let mut out = SymFunc::new();
    for (e, c) in f.terms() {
        if e.iter().any(|&x| x < 0) {
            return Err(Error::InvalidInput("scalar product needs a polynomial, got negative exponents".into()));
        }
        if e.windows(2).all(|w| w[0] >= w[1]) {
            out.insert(Partition::new(e.clone())?.trimmed(), c.clone());
        }
    }
    Ok(out)
}

/// Restrict a stable symmetric function to `n` variables.
pub fn restrict<C: Ring>(f: &SymFunc<C>, nvars: usize) -> LaurentPoly<C> {
    let mut out = LaurentPoly::zero(nvars);
    for (mu, c) in f {
        if mu.len() <= nvars {
            out = out.add(&monomial_symmetric::<C>(mu, nvars).scale(c));
        }
    }
    out
}

/// `⟨f, g⟩_{q,t}` for symmetric polynomials, through their stable lifts.
pub fn scalar_product_qt<C: Field>(f: &LaurentPoly<C>, g: &LaurentPoly<C>, q: &C, t: &C) -> Result<C> {
    if f.nvars() != g.nvars() {
        return Err(Error::InvalidInput("variable count mismatch".into()));
    }
    scalar_product(&lift(f)?, &lift(g)?, q, t)
}
