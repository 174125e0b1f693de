//! The quantum torus algebra with generators `X_{k,i}, T_{k,i}`,
//! `1 ≤ i ≤ k ≤ ℓ`, subject to `T_{k,i} X_{k,i} = q X_{k,i} T_{k,i}`; all
//! other pairs commute. Coefficients are Laurent polynomials in central
//! variables `z_1..z_{ℓ+1}` over `ℚ[q^{±1/2}]`.
//!
//! Elements are kept in normal order, every `X` to the left of every `T`.

use std::collections::BTreeMap;

use crate::corealg::{LaurentPoly, QLaurent, Ring};
use crate::error::{Error, Result};

type Coeff = LaurentPoly<QLaurent>;

/// Position of the generator pair `(k, i)` (1-based) in exponent vectors.
pub fn generator_index(k: usize, i: usize) -> usize {
    (k - 1) * k / 2 + (i - 1)
}

pub fn generator_count(rank: usize) -> usize {
    rank * (rank + 1) / 2
}

#[derive(Clone, Debug, PartialEq)]
pub struct TorusElem {
    rank: usize,
    /// `(X-exponents, T-exponents) → coefficient`.
    terms: BTreeMap<(Vec<i64>, Vec<i64>), Coeff>,
}

impl TorusElem {
    pub fn zero(rank: usize) -> Self {
        TorusElem { rank, terms: BTreeMap::new() }
    }

    /// A central element `c · 1`.
    pub fn scalar(rank: usize, c: Coeff) -> Self {
        let g = generator_count(rank);
        let mut out = TorusElem::zero(rank);
        out.add_term(vec![0; g], vec![0; g], c);
        out
    }

    pub fn one(rank: usize) -> Self {
        TorusElem::scalar(rank, LaurentPoly::one(rank + 1))
    }

    /// `z_j` (1-based) as a central element.
    pub fn z(rank: usize, j: usize) -> Self {
        TorusElem::scalar(rank, LaurentPoly::var(rank + 1, j - 1))
    }

    fn generator(rank: usize, k: usize, i: usize, is_t: bool) -> Result<Self> {
        if !(1..=rank).contains(&k) || !(1..=k).contains(&i) {
            return Err(Error::InvalidInput(format!("generator ({k},{i}) outside rank {rank}")));
        }
        let g = generator_count(rank);
        let mut e = vec![0; g];
        e[generator_index(k, i)] = 1;
        let (x, t) = if is_t { (vec![0; g], e) } else { (e, vec![0; g]) };
        let mut out = TorusElem::zero(rank);
        out.add_term(x, t, LaurentPoly::one(rank + 1));
        Ok(out)
    }

    pub fn x(rank: usize, k: usize, i: usize) -> Result<Self> {
        TorusElem::generator(rank, k, i, false)
    }

    pub fn t(rank: usize, k: usize, i: usize) -> Result<Self> {
        TorusElem::generator(rank, k, i, true)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<i64>, Vec<i64>), &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, x: Vec<i64>, t: Vec<i64>, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let key = (x, t);
        let sum = match self.terms.remove(&key) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for ((x, t), c) in &other.terms {
            out.add_term(x.clone(), t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = TorusElem::zero(self.rank);
        for ((x, t), d) in &self.terms {
            out.add_term(x.clone(), t.clone(), d.mul(c));
        }
        out
    }

    /// Normal-ordered product: `T^a X^b = q^{a·b} X^b T^a` generator-wise.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        let mut out = TorusElem::zero(self.rank);
        for ((xa, ta), ca) in &self.terms {
            for ((xb, tb), cb) in &other.terms {
                let swap: i64 = ta.iter().zip(xb).map(|(a, b)| a * b).sum();
                let x = xa.iter().zip(xb).map(|(a, b)| a + b).collect();
                let t = ta.iter().zip(tb).map(|(a, b)| a + b).collect();
                let c = ca.mul(cb).scale(&QLaurent::q_pow(swap));
                out.add_term(x, t, c);
            }
        }
        out
    }

    /// `self^n` by binary powering.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = TorusElem::one(self.rank);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Whether every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|(x, t)| x.iter().chain(t).all(|&e| e >= 0))
    }
}

/// `⟨v_−| a |v_+⟩` with `T|v_+⟩ = |v_+⟩`, `⟨v_−|X = ⟨v_−|`: the sum of the
/// coefficients of the normal form.
pub fn matrix_element(a: &TorusElem) -> Coeff {
    a.terms().fold(LaurentPoly::zero(a.rank() + 1), |acc, (_, c)| acc.add(c))
}

/// `f_{n,i}`: `f_{n,0} = 1`, `f_{n,n} = z_1⋯z_n` and
/// `f_{n,i} = f_{n−1,i} X_{n−1,i} + z_n f_{n−1,i−1} T_{n−1,i}`.
pub fn f_poly(rank: usize, n: usize, i: usize) -> Result<TorusElem> {
    if n == 0 || n > rank + 1 || i > n {
        return Err(Error::InvalidInput(format!("f_({n},{i}) outside rank {rank}")));
    }
    if i == 0 {
        return Ok(TorusElem::one(rank));
    }
    if i == n {
        let mut e = vec![0; rank + 1];
        for c in e.iter_mut().take(n) {
            *c = 1;
        }
        return Ok(TorusElem::scalar(rank, LaurentPoly::monomial(e, QLaurent::one())));
    }
    let left = f_poly(rank, n - 1, i)?.mul(&TorusElem::x(rank, n - 1, i)?);
    let right = TorusElem::z(rank, n).mul(&f_poly(rank, n - 1, i - 1)?).mul(&TorusElem::t(rank, n - 1, i)?);
    Ok(left.add(&right))
}

/// `∏_{k=1}^{ℓ+1} f_{ℓ+1,k}^{p_k − p_{k+1}}` (ascending `k`, `p_{ℓ+2} = 0`).
/// Only the central last factor may carry a negative exponent.
pub fn whittaker_product(p: &[i64]) -> Result<TorusElem> {
    let n = p.len();
    if n < 2 {
        return Err(Error::InvalidInput("need at least two coordinates".into()));
    }
    let rank = n - 1;
    let mut acc = TorusElem::one(rank);
    for k in 1..=n {
        let e = p[k - 1] - if k < n { p[k] } else { 0 };
        if k < n && e < 0 {
            return Err(Error::InvalidInput(format!("{p:?} is not dominant")));
        }
        let f = if k == n && e < 0 {
            let mut m = vec![0; n];
            m.iter_mut().for_each(|c| *c = e);
            TorusElem::scalar(rank, LaurentPoly::monomial(m, QLaurent::one()))
        } else {
            f_poly(rank, n, k)?.pow(e as u64)
        };
        acc = acc.mul(&f);
    }
    Ok(acc)
}

/// `Ψ̃(p)` as the matrix element of [`whittaker_product`].
pub fn whittaker_matrix_element(p: &[i64]) -> Result<Coeff> {
    let prod = whittaker_product(p)?;
    debug_assert!(prod.is_polynomial());
    Ok(matrix_element(&prod))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Coeff {
        LaurentPoly::constant(2, QLaurent::q_pow(1))
    }

    #[test]
    fn commutation() {
        let x = TorusElem::x(1, 1, 1).unwrap();
        let t = TorusElem::t(1, 1, 1).unwrap();
        assert_eq!(t.mul(&x), x.mul(&t).scale(&q()));
        let s = x.add(&t);
        let expect = x.mul(&x).add(&x.mul(&t).scale(&LaurentPoly::one(2).add(&q()))).add(&t.mul(&t));
        assert_eq!(s.mul(&s), expect);
    }

    #[test]
    fn small_f_polys() {
        let z1 = TorusElem::z(1, 1);
        let z2 = TorusElem::z(1, 2);
        assert_eq!(f_poly(1, 1, 1).unwrap(), z1);
        let f21 = z1.mul(&TorusElem::x(1, 1, 1).unwrap()).add(&z2.mul(&TorusElem::t(1, 1, 1).unwrap()));
        assert_eq!(f_poly(1, 2, 1).unwrap(), f21);
        assert_eq!(f_poly(1, 2, 2).unwrap(), z1.mul(&z2));
    }

    #[test]
    fn matrix_elements() {
        assert_eq!(matrix_element(&TorusElem::one(1)), LaurentPoly::one(2));
        let m = whittaker_matrix_element(&[1, 0]).unwrap();
        assert_eq!(m, LaurentPoly::var(2, 0).add(&LaurentPoly::var(2, 1)));
        let m = whittaker_matrix_element(&[2, 0]).unwrap();
        let z1 = LaurentPoly::<QLaurent>::var(2, 0);
        let z2 = LaurentPoly::<QLaurent>::var(2, 1);
        let expect = z1.mul(&z1).add(&z1.mul(&z2).mul(&LaurentPoly::one(2).add(&q()))).add(&z2.mul(&z2));
        assert_eq!(m, expect);
    }
}
