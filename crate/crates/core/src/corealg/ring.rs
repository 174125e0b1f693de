//! Minimal ring abstraction shared by every coefficient type.
//!
//! Method names deliberately mirror the arithmetic operators; the operator
//! traits are never imported next to `Ring`, so there is no ambiguity.

use std::fmt::Debug;

use super::Rational;

pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// `Some(a / b)` when the quotient exists in the ring, `None` otherwise.
    fn div_exact(&self, other: &Self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents need an exact inverse.
    fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            Self::one().div_exact(self).map(|inv| inv.pow(e.unsigned_abs()))
        }
    }
}

/// Rings in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self> {
        Self::one().div_exact(self)
    }
}

pub fn sum<C: Ring>(items: impl IntoIterator<Item = C>) -> C {
    items.into_iter().fold(C::zero(), |a, b| a.add(&b))
}

pub fn product<C: Ring>(items: impl IntoIterator<Item = C>) -> C {
    items.into_iter().fold(C::one(), |a, b| a.mul(&b))
}

impl Ring for Rational {
    fn zero() -> Self {
        <Rational as num_traits::Zero>::zero()
    }
    fn one() -> Self {
        <Rational as num_traits::One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rational as num_traits::Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Ring::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
}

impl Field for Rational {}
