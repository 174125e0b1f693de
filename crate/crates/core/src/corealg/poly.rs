//! Multivariate Laurent polynomials over any [`Ring`].

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

use super::ring::Ring;

/// Sparse polynomial in `nvars` variables with integer (possibly negative)
/// exponents. Terms are kept in lexicographic order of exponent vectors and
/// zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<C> {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, C>,
}

impl<C: Ring> LaurentPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn monomial(exp: Vec<i64>, c: C) -> Self {
        let nvars = exp.len();
        let mut p = Self::zero(nvars);
        p.add_term(exp, c);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Vec<i64>, C> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i64]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: C) {
        assert_eq!(exp.len(), self.nvars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.mul(c));
        }
        out
    }

    pub fn mul_monomial(&self, exp: &[i64]) -> Self {
        assert_eq!(exp.len(), self.nvars);
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> Option<D>) -> Option<LaurentPoly<D>> {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Some(out)
    }

    /// `x_i -> c·x_i`: each term picks up `c^{e_i}`. Negative exponents need
    /// an exact inverse of `c`.
    pub fn scale_var(&self, i: usize, c: &C) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            let f = c.powi(e[i]).ok_or_else(|| Error::DivisionByZero(format!("scaling x{} by a non-unit", i + 1)))?;
            out.add_term(e.clone(), x.mul(&f));
        }
        Ok(out)
    }

    /// Variable permutation: variable `i` of `self` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &p) in perm.iter().enumerate() {
                f[p] = e[i];
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Value at a point; `None` when a negative power meets a non-unit.
    pub fn evaluate(&self, point: &[C]) -> Option<C> {
        assert_eq!(point.len(), self.nvars);
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k != 0 {
                    t = t.mul(&x.powi(k)?);
                }
            }
            acc = acc.add(&t);
        }
        Some(acc)
    }

    /// Per-variable minimum exponents (zeros for the zero polynomial).
    pub fn min_exps(&self) -> Vec<i64> {
        let mut m: Option<Vec<i64>> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(v) => v.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    pub fn max_exps(&self) -> Vec<i64> {
        let mut m: Option<Vec<i64>> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(v) => v.iter().zip(e).map(|(a, b)| *a.max(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    pub fn total_degree_range(&self) -> Option<(i64, i64)> {
        let degs: Vec<i64> = self.terms.keys().map(|e| e.iter().sum()).collect();
        Some((*degs.iter().min()?, *degs.iter().max()?))
    }

    pub fn leading_term(&self) -> Option<(&Vec<i64>, &C)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor` in the Laurent ring; fails loudly on a
    /// nonzero remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero("polynomial division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let fmin = self.min_exps();
        let gmin = divisor.min_exps();
        let neg: Vec<i64> = fmin.iter().map(|x| -x).collect();
        let mut rem = self.mul_monomial(&neg);
        let gneg: Vec<i64> = gmin.iter().map(|x| -x).collect();
        let g = divisor.mul_monomial(&gneg);
        let (glead_e, glead_c) = g.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&glead_e).any(|(a, b)| a < b) {
                return Err(Error::InexactDivision(format!("leading monomial {e:?} not divisible by {glead_e:?}")));
            }
            let qc = c
                .div_exact(&glead_c)
                .ok_or_else(|| Error::InexactDivision("leading coefficient not divisible".into()))?;
            let qe: Vec<i64> = e.iter().zip(&glead_e).map(|(a, b)| a - b).collect();
            let mut step = g.mul_monomial(&qe).scale(&qc);
            // The leading monomial cancels by construction; drop it outright so
            // coefficients that are only zero to finite precision cannot stall.
            rem.terms.remove(&e);
            step.terms.remove(&e);
            rem = rem.sub(&step);
            quot.add_term(qe, qc);
        }
        let shift: Vec<i64> = fmin.iter().zip(&gmin).map(|(a, b)| a - b).collect();
        Ok(quot.mul_monomial(&shift))
    }

    /// Invariance under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..self.nvars).collect();
            perm.swap(i, i + 1);
            self.permute_vars(&perm) == *self
        })
    }

    /// Restrict to the first `n` variables by setting the rest to zero.
    /// Terms with a negative exponent in a dropped variable are an error.
    pub fn drop_vars_to_zero(&self, n: usize) -> Self {
        let mut out = LaurentPoly::zero(n);
        for (e, c) in &self.terms {
            assert!(e[n..].iter().all(|&k| k >= 0));
            if e[n..].iter().all(|&k| k == 0) {
                out.add_term(e[..n].to_vec(), c.clone());
            }
        }
        out
    }
}

impl<C: Ring + fmt::Display> LaurentPoly<C> {
    /// Human-readable form with variables named `{prefix}1, {prefix}2, …`.
    pub fn display_with(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms.iter().rev() {
            let mut s = format!("({c})");
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => s.push_str(&format!("*{prefix}{}", i + 1)),
                    k => s.push_str(&format!("*{prefix}{}^{}", i + 1, k)),
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

impl<C: Ring + fmt::Display> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl<C: fmt::Debug> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corealg::{QLaurent, Rational};

    type P = LaurentPoly<Rational>;

    fn x(i: usize) -> P {
        P::var(2, i)
    }

    #[test]
    fn difference_of_squares() {
        let s = x(0).add(&x(1));
        let d = x(0).sub(&x(1));
        let prod = s.mul(&d);
        let expect = x(0).mul(&x(0)).sub(&x(1).mul(&x(1)));
        assert_eq!(prod, expect);
        assert_eq!(prod.exact_div(&d).unwrap(), s);
    }

    #[test]
    fn inexact_division_fails() {
        let s = x(0).add(&x(1));
        let one = P::one(2);
        assert!(matches!(one.exact_div(&s), Err(Error::InexactDivision(_))));
    }

    #[test]
    fn laurent_division() {
        let f = x(0).sub(&x(1)).mul_monomial(&[-2, 1]);
        let g = x(0).sub(&x(1));
        assert_eq!(f.exact_div(&g).unwrap(), P::monomial(vec![-2, 1], Rational::from_integer(1.into())));
    }

    #[test]
    fn scale_var_by_q() {
        let p: LaurentPoly<QLaurent> = LaurentPoly::monomial(vec![1, 1], QLaurent::int(1));
        let shifted = p.scale_var(0, &QLaurent::q_pow(1)).unwrap();
        assert_eq!(shifted, LaurentPoly::monomial(vec![1, 1], QLaurent::q_pow(1)));
    }
}
