//! Exact coefficient arithmetic and combinatorial foundations.
//!
//! - [`Rational`]: arbitrary-precision rationals.
//! - [`QLaurent`]: Laurent polynomials in `s = q^{1/2}`.
//! - [`QRatio`]: rational functions in `s`, reduced by polynomial gcd.
//! - [`LaurentPoly`]: multivariate Laurent polynomials over any [`Ring`].
//! - partitions, Gelfand–Zetlin patterns, symmetric polynomials.

pub mod gz;
pub mod partition;
pub mod poly;
pub mod qlaurent;
pub mod qratio;
pub mod ring;
pub mod symmetric;
mod upoly;

pub use gz::{enumerate_gz, interlacing_rows, GZPattern};
pub use partition::{partitions_in_box, partitions_of, Partition};
pub use poly::LaurentPoly;
pub use qlaurent::QLaurent;
pub use qratio::QRatio;
pub use ring::{product, sum, Field, Ring};
pub use symmetric::{elementary, monomial_symmetric, power_sum};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn q_factorial(n: u64) -> QLaurent {
    QLaurent::q_factorial(n)
}

pub fn q_binomial(n: i64, m: i64) -> QLaurent {
    QLaurent::q_binomial(n, m)
}
