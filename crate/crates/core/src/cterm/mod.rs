//! Truncated formal series in `q` and constant-term extraction at `t = 0`.
//!
//! Contour integrals over small circles become `y^0`-coefficient
//! extraction; the infinite expansions of the kernel are capped by a
//! [`DegreeBudget`] derived from the polynomial part of the integrand.

pub mod norms;
pub mod recursion;
pub mod series;

pub use norms::{norm_formulas, norm_prime_t0_series, norm_prime_truncated};
pub use recursion::{
    check_t0_recursion, required_budget, scalar_product_prime_t0, t0_recursion_lhs, t0_recursion_rhs,
    verify_t0_recursion,
};
pub use series::{
    constant_term, constant_term_of_product, expand_delta_t0, expand_kernel_t0, gamma_q_truncated, DegreeBudget,
    TruncSeries,
};
