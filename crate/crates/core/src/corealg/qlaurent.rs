//! Laurent polynomials in `s`, where `s² = q`.
//!
//! Every power of `q` in the crate is stored as a power of `s`, so
//! half-integer exponents such as `q^{ρ_i}` need no separate type.

use std::fmt;

use num_traits::Signed;

use super::ring::Ring;
use super::{upoly, Rational};

/// Canonical dense form: `coeffs[i]` is the coefficient of `s^(lo+i)`;
/// first and last coefficients are nonzero; zero is `lo = 0`, no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    lo: i64,
    coeffs: Vec<Rational>,
}

impl QLaurent {
    pub fn from_dense(lo: i64, coeffs: Vec<Rational>) -> Self {
        let mut coeffs = upoly::trim(coeffs);
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::default();
        }
        coeffs.drain(..lead);
        QLaurent { lo: lo + lead as i64, coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let terms: Vec<(i64, Rational)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::default();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_dense(0, vec![c])
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    /// `c·s^k`.
    pub fn monomial(k: i64, c: Rational) -> Self {
        Self::from_dense(k, vec![c])
    }

    pub fn s_pow(k: i64) -> Self {
        Self::monomial(k, Rational::one())
    }

    pub fn q_pow(k: i64) -> Self {
        Self::s_pow(2 * k)
    }

    /// `1 - q^k`.
    pub fn one_minus_q_pow(k: i64) -> Self {
        Self::int(1).sub(&Self::q_pow(k))
    }

    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms `(s-exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.lo + i as i64, c))
    }

    pub fn coeff(&self, k: i64) -> Rational {
        let i = k - self.lo;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.lo)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    pub fn as_monomial(&self) -> Option<(i64, &Rational)> {
        (self.coeffs.len() == 1).then(|| (self.lo, &self.coeffs[0]))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 if self.lo == 0 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        QLaurent { lo: self.lo + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_dense(self.lo, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// True when no exponent of `s` is odd, i.e. a Laurent polynomial in `q`.
    pub fn is_integral_in_q(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    /// True when every coefficient is a nonnegative integer and every exponent is ≥ 0.
    pub fn is_nonneg_integer_poly(&self) -> bool {
        self.terms().all(|(e, c)| e >= 0 && c.is_integer() && !c.is_negative())
    }

    /// Value at a rational `s`; `None` when a negative power meets `s = 0`.
    pub fn eval(&self, s: &Rational) -> Option<Rational> {
        if self.coeffs.is_empty() {
            return Some(Rational::zero());
        }
        if s.is_zero() {
            return if self.lo > 0 {
                Some(Rational::zero())
            } else if self.lo == 0 {
                Some(self.coeffs[0].clone())
            } else {
                None
            };
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * s + c;
        }
        Some(acc * pow_rat(s, self.lo))
    }

    /// Substitute `s -> s^m` (m ≥ 1).
    pub fn dilate(&self, m: i64) -> Self {
        assert!(m >= 1);
        Self::from_terms(self.terms().map(|(e, c)| (e * m, c.clone())))
    }

    pub(crate) fn dense(&self) -> (i64, &[Rational]) {
        (self.lo, &self.coeffs)
    }

    /// `(1 - q)…(1 - q^n)`.
    pub fn q_factorial(n: u64) -> Self {
        (1..=n as i64).fold(Self::int(1), |acc, j| acc.mul(&Self::one_minus_q_pow(j)))
    }

    /// Gaussian binomial; zero outside `0 ≤ m ≤ n`.
    pub fn q_binomial(n: i64, m: i64) -> Self {
        if n < 0 || m < 0 || m > n {
            return Self::default();
        }
        let num = Self::q_factorial(n as u64);
        let den = Self::q_factorial(m as u64).mul(&Self::q_factorial((n - m) as u64));
        num.div_exact(&den).expect("q-binomial: inexact division signals an arithmetic bug")
    }

    /// `(a; q)_n = ∏_{j<n} (1 - a q^j)` for a given `a`.
    pub fn q_pochhammer(a: &QLaurent, n: u64) -> Self {
        (0..n as i64).fold(Self::int(1), |acc, j| acc.mul(&Self::int(1).sub(&a.mul(&Self::q_pow(j)))))
    }
}

pub(crate) fn pow_rat(s: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    let base = if e < 0 { Rational::one() / s } else { s.clone() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl Ring for QLaurent {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::int(1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() {
            return other.clone();
        }
        if other.coeffs.is_empty() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut out = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[(self.lo - lo) as usize + k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            out[(other.lo - lo) as usize + k] += c;
        }
        Self::from_dense(lo, out)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::default();
        }
        Self::from_dense(self.lo + other.lo, upoly::mul(&self.coeffs, &other.coeffs))
    }
    fn neg(&self) -> Self {
        QLaurent { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.coeffs.is_empty() {
            return None;
        }
        if self.coeffs.is_empty() {
            return Some(Self::default());
        }
        let (q, r) = upoly::divrem(&self.coeffs, &other.coeffs);
        r.is_empty().then(|| Self::from_dense(self.lo - other.lo, q))
    }
}

/// Formats with `q` and half powers, e.g. `1 - q + 2*q^(3/2)`.
impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let qpart = match e {
                0 => String::new(),
                2 => "q".to_string(),
                e if e % 2 == 0 => format!("q^{}", e / 2),
                e => format!("q^({}/2)", e),
            };
            if qpart.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{qpart}")?;
            } else {
                write!(f, "{a}*{qpart}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({self})")
    }
}

/// Laurent polynomials are not a field, but `div_exact` makes them usable
/// wherever only exact quotients by known divisors occur.
impl QLaurent {
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn factorial_values() {
        assert_eq!(QLaurent::q_factorial(0), QLaurent::int(1));
        assert_eq!(QLaurent::q_factorial(1), QLaurent::one_minus_q_pow(1));
        let f3 = QLaurent::one_minus_q_pow(1).mul(&QLaurent::one_minus_q_pow(2)).mul(&QLaurent::one_minus_q_pow(3));
        assert_eq!(QLaurent::q_factorial(3), f3);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(QLaurent::q_binomial(5, 0), QLaurent::int(1));
        assert_eq!(QLaurent::q_binomial(2, 1), QLaurent::from_terms([(0, r(1)), (2, r(1))]));
        let b42 = QLaurent::from_terms([(0, r(1)), (2, r(1)), (4, r(2)), (6, r(1)), (8, r(1))]);
        assert_eq!(QLaurent::q_binomial(4, 2), b42);
        assert!(QLaurent::q_binomial(3, 4).is_zero());
        assert!(QLaurent::q_binomial(3, -1).is_zero());
    }

    #[test]
    fn exact_division_and_failure() {
        let a = QLaurent::one_minus_q_pow(6);
        let b = QLaurent::one_minus_q_pow(2);
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q.mul(&b), a);
        assert!(b.div_exact(&a).is_none());
        let m = QLaurent::s_pow(-3);
        assert_eq!(a.div_exact(&m).unwrap(), a.shift(3));
    }

    #[test]
    fn display_half_powers() {
        let x = QLaurent::from_terms([(0, r(1)), (2, r(-1)), (3, r(2))]);
        assert_eq!(x.to_string(), "1 - q + 2*q^(3/2)");
    }

    #[test]
    fn eval_matches_terms() {
        let x = QLaurent::from_terms([(-1, r(2)), (2, r(3))]);
        let s = Rational::new(2.into(), 3.into());
        let expect = r(2) * Rational::new(3.into(), 2.into()) + r(3) * &s * &s;
        assert_eq!(x.eval(&s), Some(expect));
    }
}
