//! Truncated Laurent series in a formal parameter `ε` with precision tracking.
//!
//! Used to approach the singular specializations `t = q^{-k}` along a curve
//! and read off limits: a value `Σ c_i ε^i + O(ε^p)` records exactly which
//! coefficients are known.

use crate::corealg::{Field, Rational, Ring};

/// Relative number of coefficients kept when an exact quotient is not a polynomial.
pub const DEFAULT_RELATIVE_PRECISION: i64 = 8;

/// `Σ coeffs[i] ε^{val+i} + O(ε^{prec})`; `prec = None` means exact.
#[derive(Clone, PartialEq, Debug)]
pub struct EpsSeries<C> {
    val: i64,
    coeffs: Vec<C>,
    prec: Option<i64>,
}

impl<C: Field> EpsSeries<C> {
    pub fn exact(val: i64, coeffs: Vec<C>) -> Self {
        Self::normalized(val, coeffs, None)
    }

    pub fn constant(c: C) -> Self {
        Self::exact(0, vec![c])
    }

    /// `c_0 + c_1 ε` with both given.
    pub fn linear(c0: C, c1: C) -> Self {
        Self::exact(0, vec![c0, c1])
    }

    fn normalized(mut val: i64, mut coeffs: Vec<C>, prec: Option<i64>) -> Self {
        if let Some(p) = prec {
            let keep = (p - val).max(0) as usize;
            coeffs.truncate(keep);
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        val += lead as i64;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            val = prec.unwrap_or(0);
        }
        EpsSeries { val, coeffs, prec }
    }

    pub fn precision(&self) -> Option<i64> {
        self.prec
    }

    /// Exponent of the first known nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    fn val_lower_bound(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            self.prec
        } else {
            Some(self.val)
        }
    }

    /// Coefficient of `ε^i`; `None` when beyond the known precision.
    pub fn coeff(&self, i: i64) -> Option<C> {
        if self.prec.is_some_and(|p| i >= p) {
            return None;
        }
        let k = i - self.val;
        if k < 0 || k >= self.coeffs.len() as i64 {
            Some(C::zero())
        } else {
            Some(self.coeffs[k as usize].clone())
        }
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero_to_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn dense_range(&self, lo: i64, hi: i64) -> Vec<C> {
        (lo..hi)
            .map(|i| {
                let k = i - self.val;
                if k < 0 || k >= self.coeffs.len() as i64 {
                    C::zero()
                } else {
                    self.coeffs[k as usize].clone()
                }
            })
            .collect()
    }

    fn last_exp(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

impl<C: Field> Ring for EpsSeries<C> {
    fn zero() -> Self {
        EpsSeries { val: 0, coeffs: Vec::new(), prec: None }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.prec.is_none()
    }
    fn add(&self, other: &Self) -> Self {
        let prec = min_opt(self.prec, other.prec);
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return Self::normalized(0, Vec::new(), prec);
        }
        let lo = match (self.valuation(), other.valuation()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!(),
        };
        let mut hi = self.last_exp().max(other.last_exp());
        if let Some(p) = prec {
            hi = hi.min(p);
        }
        if hi <= lo {
            return Self::normalized(0, Vec::new(), prec);
        }
        let a = self.dense_range(lo, hi);
        let b = other.dense_range(lo, hi);
        Self::normalized(lo, a.iter().zip(&b).map(|(x, y)| x.add(y)).collect(), prec)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let pa = self.prec.map(|p| p + other.val_lower_bound().unwrap());
        let pb = other.prec.map(|p| p + self.val_lower_bound().unwrap());
        let prec = min_opt(pa, pb);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::normalized(0, Vec::new(), prec);
        }
        let val = self.val + other.val;
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(p) = prec {
            len = len.min((p - val).max(0) as usize);
        }
        let mut out = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::normalized(val, out, prec)
    }
    fn neg(&self) -> Self {
        EpsSeries { val: self.val, coeffs: self.coeffs.iter().map(|c| c.neg()).collect(), prec: self.prec }
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(C::from_rational(r))
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let vb = other.valuation()?;
        let b = &other.coeffs;
        let b0inv = b[0].inv()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let rel_b = other.prec.map(|p| p - vb);
        let va_lb = self.val_lower_bound().unwrap();
        let rel_a = self.prec.map(|p| p - va_lb);
        let rel = match min_opt(rel_a, rel_b) {
            Some(r) => r,
            None => {
                if let Some(q) = exact_poly_div(&self.coeffs, b, &b0inv) {
                    return Some(Self::normalized(self.val - vb, q, None));
                }
                DEFAULT_RELATIVE_PRECISION
            }
        };
        let val = va_lb - vb;
        let prec = val + rel;
        if self.coeffs.is_empty() || rel <= 0 {
            return Some(Self::normalized(0, Vec::new(), Some(prec)));
        }
        let a = self.dense_range(va_lb, va_lb + rel);
        let mut out: Vec<C> = Vec::with_capacity(rel as usize);
        for i in 0..rel as usize {
            let mut acc = a[i].clone();
            for j in 1..=i.min(b.len() - 1) {
                acc = acc.sub(&b[j].mul(&out[i - j]));
            }
            out.push(acc.mul(&b0inv));
        }
        Some(Self::normalized(val, out, Some(prec)))
    }
}

impl<C: Field> Field for EpsSeries<C> {}

/// Exact polynomial quotient `a / b` in `ε`, if it exists.
fn exact_poly_div<C: Field>(a: &[C], b: &[C], b0inv: &C) -> Option<Vec<C>> {
    if a.len() < b.len() {
        return (b.len() == 1).then(|| a.iter().map(|x| x.mul(b0inv)).collect());
    }
    let n = a.len() - b.len() + 1;
    let mut r = a.to_vec();
    let mut q = Vec::with_capacity(n);
    for i in 0..n {
        let c = r[i].mul(b0inv);
        for (j, bj) in b.iter().enumerate() {
            r[i + j] = r[i + j].sub(&c.mul(bj));
        }
        q.push(c);
    }
    r.iter().all(|x| x.is_zero()).then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corealg::rat;

    type E = EpsSeries<Rational>;

    #[test]
    fn geometric_inverse() {
        let one_minus = E::linear(rat(1, 1), rat(-1, 1));
        let inv = E::one().div_exact(&one_minus).unwrap();
        assert_eq!(inv.precision(), Some(DEFAULT_RELATIVE_PRECISION));
        for i in 0..DEFAULT_RELATIVE_PRECISION {
            assert_eq!(inv.coeff(i), Some(rat(1, 1)));
        }
        assert_eq!(inv.coeff(DEFAULT_RELATIVE_PRECISION), None);
    }

    #[test]
    fn pole_then_cancel() {
        let eps = E::exact(1, vec![rat(1, 1)]);
        let one_plus = E::linear(rat(1, 1), rat(1, 1));
        let x = one_plus.div_exact(&eps).unwrap();
        assert_eq!(x.valuation(), Some(-1));
        assert_eq!(x.mul(&eps), one_plus);
    }

    #[test]
    fn precision_propagates() {
        let x = E::one().div_exact(&E::linear(rat(1, 1), rat(1, 1))).unwrap();
        let eps2 = E::exact(2, vec![rat(1, 1)]);
        let y = x.div_exact(&eps2).unwrap();
        assert_eq!(y.precision(), Some(DEFAULT_RELATIVE_PRECISION - 2));
        let z = y.sub(&y);
        assert!(z.is_zero_to_precision() && !z.is_zero());
    }
}
