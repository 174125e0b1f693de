//! The `t = 0` recursion `gl_ℓ → gl_{ℓ+1}` for `P_λ(x; q, 0)` as a
//! constant term:
//!
//! `P_λ(x) ≡ (A_ℓ/ℓ!) · CT_y[C(x, y^{−1}) P_λ(y) Δ(y)]  mod q^{N+1}`,
//! `A_ℓ = (q;q)_∞^{ℓ−1} (λ_ℓ)_q!`.
//!
//! Variables are ordered `x_1..x_{ℓ+1}, y_1..y_ℓ`. The kernel term
//! `y_j^{−m}` can only pair with a term of `P(y)Δ(y)` of `y_j`-degree `m`,
//! so capping the kernel at those degrees loses nothing.

use super::series::{constant_term_of_product, expand_delta_t0, expand_kernel_t0, DegreeBudget, TruncSeries};
use crate::check::CheckOutcome;
use crate::cli::serial::serialize;
use crate::corealg::{Partition, QLaurent, Rational, Ring};
use crate::error::{Error, Result};
use crate::macdonald::macdonald_t0;

fn check_lambda(lambda: &[i64]) -> Result<()> {
    if lambda.is_empty() || lambda.iter().any(|&l| l < 0) || lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(format!("{lambda:?} is not a partition with at least one part")));
    }
    Ok(())
}

/// `P_λ(y)Δ(y|q,0)` in the `2ℓ+1` variables of the recursion.
fn integrand(lambda: &[i64], order: usize) -> Result<TruncSeries> {
    let l = lambda.len();
    let p = macdonald_t0(&Partition::new(lambda.to_vec())?, l)?;
    let p = TruncSeries::from_poly(&p.poly, order)?;
    let map: Vec<usize> = (0..l).map(|j| l + 1 + j).collect();
    Ok(p.mul(&expand_delta_t0(l, order)).embed(2 * l + 1, &map))
}

/// Smallest budget for which the truncated kernel is exact: the largest
/// `y_j`-degree of `P_λ(y)Δ(y)`.
pub fn required_budget(lambda: &[i64], order: usize) -> Result<DegreeBudget> {
    check_lambda(lambda)?;
    let l = lambda.len();
    let yvars: Vec<usize> = (l + 1..=2 * l).collect();
    Ok(DegreeBudget { max_degree: integrand(lambda, order)?.max_degrees(&yvars) })
}

/// `(q;q)_N^{ℓ−1} (λ_ℓ)_q!` as a `q`-vector; exact mod `q^{N+1}`.
fn a_factor(lambda: &[i64], order: usize) -> Result<Vec<Rational>> {
    let l = lambda.len();
    let mut a = QLaurent::q_factorial(lambda[l - 1] as u64);
    for _ in 1..l {
        a = a.mul(&QLaurent::q_factorial(order as u64));
    }
    super::series::q_vector(&a, order)
}

/// Right-hand side of the recursion, in `x_1..x_{ℓ+1}`. With `budget`
/// given, fails if it is below the required one.
pub fn t0_recursion_rhs(lambda: &[i64], order: usize, budget: Option<&DegreeBudget>) -> Result<TruncSeries> {
    check_lambda(lambda)?;
    let l = lambda.len();
    let f = integrand(lambda, order)?;
    let yvars: Vec<usize> = (l + 1..=2 * l).collect();
    let needed = f.max_degrees(&yvars);
    let budget = match budget {
        Some(b) => {
            if b.max_degree.len() != l || b.max_degree.iter().zip(&needed).any(|(have, need)| have < need) {
                return Err(Error::BudgetExhausted(format!(
                    "y-degrees up to {needed:?} needed, budget {:?}",
                    b.max_degree
                )));
            }
            b.clone()
        }
        None => DegreeBudget { max_degree: needed },
    };
    let kernel = expand_kernel_t0(l + 1, l, order, &budget)?.invert_vars(&yvars);
    let ct = constant_term_of_product(&kernel, &f, &yvars);
    let fact: u64 = (1..=l as u64).product();
    Ok(ct.mul_q_series(&a_factor(lambda, order)?).scale(&Rational::new(1.into(), fact.into())))
}

/// `P_{(λ,0)}(x; q, 0)` in `ℓ+1` variables, truncated.
pub fn t0_recursion_lhs(lambda: &[i64], order: usize) -> Result<TruncSeries> {
    check_lambda(lambda)?;
    let mut parts = lambda.to_vec();
    parts.push(0);
    let p = macdonald_t0(&Partition::new(parts)?, lambda.len() + 1)?;
    TruncSeries::from_poly(&p.poly, order)
}

/// Whether both sides of the recursion agree mod `q^{N+1}`.
pub fn verify_t0_recursion(lambda: &[i64], order: usize) -> Result<bool> {
    Ok(t0_recursion_lhs(lambda, order)? == t0_recursion_rhs(lambda, order, None)?)
}

/// The recursion at `λ`, plus the two stability checks: a budget enlarged
/// by 2 and a truncation raised by 4 give the same series up to `q^N`.
pub fn check_t0_recursion(lambda: &[i64], order: usize) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("t0 recursion {lambda:?}"));
    let lhs = t0_recursion_lhs(lambda, order)?;
    let rhs = t0_recursion_rhs(lambda, order, None)?;
    let budget = required_budget(lambda, order)?.enlarged(2);
    let wide = t0_recursion_rhs(lambda, order, Some(&budget))?;
    let deep = t0_recursion_rhs(lambda, order + 4, None)?.truncate(order);
    for (case, other) in [("recursion", &lhs), ("budget +2", &wide), ("order +4", &deep)] {
        let a = rhs.to_poly();
        let b = other.to_poly();
        if a == b {
            out.pass();
        } else {
            out.fail(format!("{case} λ={lambda:?} N={order}"), serialize(&a), serialize(&b));
        }
    }
    Ok(out)
}

/// `(1/n!) CT_x[f(x) g(x^{−1}) Δ(x|q,0)]` as a `q`-vector mod `q^{N+1}`.
pub fn scalar_product_prime_t0(f: &TruncSeries, g: &TruncSeries, order: usize) -> Vec<Rational> {
    let n = f.nvars();
    let vars: Vec<usize> = (0..n).collect();
    let fd = f.mul(&expand_delta_t0(n, order));
    let ct = constant_term_of_product(&fd, &g.invert_vars(&vars), &vars);
    let fact: u64 = (1..=n as u64).product();
    let inv = Rational::new(1.into(), fact.into());
    let mut v = vec![Rational::from_integer(0.into()); order + 1];
    if let Some((_, c)) = ct.terms().next() {
        for (a, b) in v.iter_mut().zip(c) {
            *a = b * &inv;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corealg::{LaurentPoly, QLaurent};

    #[test]
    fn rank_one_examples() {
        let rhs = t0_recursion_rhs(&[1], 6, None).unwrap();
        let expect = LaurentPoly::from_terms(2, [(vec![1, 0], QLaurent::one()), (vec![0, 1], QLaurent::one())]);
        assert_eq!(rhs.to_poly(), expect);
        assert_eq!(t0_recursion_rhs(&[0], 6, None).unwrap().to_poly(), LaurentPoly::one(2));
    }

    #[test]
    fn small_budget_is_reported() {
        let b = DegreeBudget::uniform(1, 0);
        assert!(matches!(t0_recursion_rhs(&[2], 4, Some(&b)), Err(Error::BudgetExhausted(_))));
    }

    #[test]
    fn constant_term_norm_of_one() {
        for n in [2, 3] {
            let one = TruncSeries::one(n, 6);
            let ct = scalar_product_prime_t0(&one, &one, 6);
            let closed = super::super::norms::norm_prime_t0_series(&vec![0; n], 6).unwrap();
            assert_eq!(ct, closed, "n = {n}");
        }
    }
}
