//! Rational functions in `s` (`s² = q`), kept in lowest terms.

use std::fmt;

use super::qlaurent::QLaurent;
use super::ring::{Field, Ring};
use super::{upoly, Rational};

/// `num / den` with `den` a monic polynomial in `s` with nonzero constant
/// term and `gcd(num, den) = 1`; identical values have identical fields.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRatio {
    num: QLaurent,
    den: QLaurent,
}

impl QRatio {
    pub fn new(num: QLaurent, den: QLaurent) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    fn normalize(num: QLaurent, den: QLaurent) -> Self {
        if num.is_zero() {
            return Self::from_laurent(QLaurent::default());
        }
        let (dlo, dc) = den.dense();
        let (nlo, nc) = num.dense();
        let g = upoly::gcd(nc, dc);
        let (nq, dq) = if upoly::is_one(&g) {
            (nc.to_vec(), dc.to_vec())
        } else {
            (upoly::divrem(nc, &g).0, upoly::divrem(dc, &g).0)
        };
        let lead = dq.last().unwrap().clone();
        let (nq, dq) = if lead.is_one() {
            (nq, dq)
        } else {
            let inv = Rational::one() / &lead;
            (nq.into_iter().map(|c| c * &inv).collect(), dq.into_iter().map(|c| c * &inv).collect())
        };
        QRatio { num: QLaurent::from_dense(nlo - dlo, nq), den: QLaurent::from_dense(0, dq) }
    }

    pub fn from_laurent(num: QLaurent) -> Self {
        QRatio { num, den: QLaurent::int(1) }
    }

    pub fn int(n: i64) -> Self {
        Self::from_laurent(QLaurent::int(n))
    }

    pub fn s_pow(k: i64) -> Self {
        Self::from_laurent(QLaurent::s_pow(k))
    }

    pub fn q_pow(k: i64) -> Self {
        Self::from_laurent(QLaurent::q_pow(k))
    }

    pub fn num(&self) -> &QLaurent {
        &self.num
    }

    pub fn den(&self) -> &QLaurent {
        &self.den
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_laurent(&self) -> Option<QLaurent> {
        self.is_laurent().then(|| self.num.clone())
    }

    pub fn eval(&self, s: &Rational) -> Option<Rational> {
        let d = self.den.eval(s)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(s)? / d)
    }

    /// Power series in `s` up to and including `s^order`; requires a
    /// denominator with nonzero constant term (always true in canonical form).
    pub fn series(&self, order: i64) -> QLaurent {
        let (dlo, dc) = self.den.dense();
        debug_assert_eq!(dlo, 0);
        let Some(nlo) = self.num.min_exp() else {
            return QLaurent::default();
        };
        if nlo > order {
            return QLaurent::default();
        }
        let len = (order - nlo + 1) as usize;
        let d0inv = Rational::one() / &dc[0];
        let (_, nc) = self.num.dense();
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        for i in 0..len {
            let mut acc = nc.get(i).cloned().unwrap_or_else(Rational::zero);
            for j in 1..dc.len().min(i + 1) {
                if !dc[j].is_zero() {
                    acc -= &dc[j] * &out[i - j];
                }
            }
            out.push(acc * &d0inv);
        }
        QLaurent::from_dense(nlo, out)
    }
}

impl From<QLaurent> for QRatio {
    fn from(x: QLaurent) -> Self {
        Self::from_laurent(x)
    }
}

impl Ring for QRatio {
    fn zero() -> Self {
        Self::from_laurent(QLaurent::default())
    }
    fn one() -> Self {
        Self::int(1)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            if self.is_laurent() {
                return Self::from_laurent(self.num.add(&other.num));
            }
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&other.den))
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_laurent() && other.is_laurent() {
            return Self::from_laurent(self.num.mul(&other.num));
        }
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        QRatio { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_rational(r: &Rational) -> Self {
        Self::from_laurent(QLaurent::constant(r.clone()))
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        Some(Self::normalize(self.num.mul(&other.den), self.den.mul(&other.num)))
    }
}

impl Field for QRatio {}

impl fmt::Display for QRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRatio({self})")
    }
}

impl Default for QRatio {
    fn default() -> Self {
        Self::zero()
    }
}
