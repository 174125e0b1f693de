//! Macdonald difference operators `H_r` and their duals acting on tables.
//!
//! Operators of the shape `Σ_I pref · ∏_{i∈I, j∉I} num(i,j)/(x_i − x_j) · ∏_{i∈I} T_{x_i}`
//! are applied over the common denominator `∏_{a<b}(x_a − x_b)`; the final
//! division is asserted exact.

use std::collections::BTreeMap;

use crate::corealg::symmetric::subsets;
use crate::corealg::{Field, LaurentPoly, Ring};
use crate::error::{Error, Result};

pub(crate) fn linear<C: Ring>(n: usize, a: usize, ca: C, b: usize, cb: C) -> LaurentPoly<C> {
    let mut p = LaurentPoly::zero(n);
    let mut e = vec![0; n];
    e[a] = 1;
    p.add_term(e, ca);
    let mut e = vec![0; n];
    e[b] = 1;
    p.add_term(e, cb);
    p
}

/// `Σ_{|I|=r} pref · ∏_{i∈I,j∉I} num(i,j)/(x_i−x_j) · (∏_{i∈I} T_{x_i} f)`.
pub fn apply_subset_operator<C: Ring>(
    r: usize,
    f: &LaurentPoly<C>,
    q: &C,
    pref: &C,
    num: impl Fn(usize, usize) -> LaurentPoly<C>,
) -> Result<LaurentPoly<C>> {
    let n = f.nvars();
    if r == 0 || r > n {
        return Err(Error::InvalidInput(format!("operator index {r} out of range 1..={n}")));
    }
    let mut total = LaurentPoly::zero(n);
    for sub in subsets(n, r) {
        let inside: Vec<bool> = (0..n).map(|i| sub.contains(&i)).collect();
        let mut term = f.clone();
        for &i in &sub {
            term = term.scale_var(i, q)?;
        }
        let mut sign = false;
        for a in 0..n {
            for b in a + 1..n {
                if inside[a] == inside[b] {
                    term = term.mul(&linear(n, a, C::one(), b, C::one().neg()));
                } else if inside[b] {
                    sign = !sign;
                }
            }
        }
        for &i in &sub {
            for j in (0..n).filter(|&j| !inside[j]) {
                term = term.mul(&num(i, j));
            }
        }
        let term = term.scale(pref);
        total = if sign { total.sub(&term) } else { total.add(&term) };
    }
    for a in 0..n {
        for b in a + 1..n {
            total = total.exact_div(&linear(n, a, C::one(), b, C::one().neg()))?;
        }
    }
    Ok(total)
}

/// Macdonald operator `H_r = Σ_I t^{r(r−1)/2} ∏ (t x_i − x_j)/(x_i − x_j) ∏ T_{x_i}`.
pub fn macdonald_op_apply<C: Ring>(r: usize, f: &LaurentPoly<C>, q: &C, t: &C) -> Result<LaurentPoly<C>> {
    let n = f.nvars();
    let pref = t.pow((r * r.saturating_sub(1) / 2) as u64);
    apply_subset_operator(r, f, q, &pref, |i, j| linear(n, i, t.clone(), j, C::one().neg()))
}

/// `Σ_{|I|=r} ∏_{i∈I} q^{λ_i} t^{ϱ_i}` with `ϱ_i = n − i` (1-based `i`).
pub fn eigenvalue_c<C: Ring>(r: usize, lambda: &[i64], q: &C, t: &C) -> Result<C> {
    let n = lambda.len();
    let mut acc = C::zero();
    for sub in subsets(n, r) {
        let mut term = C::one();
        for &i in &sub {
            let qi = q.powi(lambda[i]).ok_or_else(|| Error::DivisionByZero("q = 0".into()))?;
            term = term.mul(&qi).mul(&t.pow((n - 1 - i) as u64));
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// `2ρ_i = ℓ + 2 − 2i` (1-based `i`), as integers.
pub fn two_rho(n: usize) -> Vec<i64> {
    (0..n).map(|i| n as i64 - 1 - 2 * i as i64).collect()
}

/// `ϱ_i = ℓ + 1 − i` (1-based `i`).
pub fn varrho(n: usize) -> Vec<i64> {
    (0..n).map(|i| (n - 1 - i) as i64).collect()
}

/// Table of values indexed by weight vectors.
pub type Table<V> = BTreeMap<Vec<i64>, V>;

/// Dual Macdonald operator `H^∨_r(q^λ) = H_r(q^λ t^ρ)` applied to a table at
/// `λ`: `Σ_I t^{r(r−1)/2} ∏ (t x_i − x_j)/(x_i − x_j) F(λ + e_I)` with
/// `x_i = q^{λ_i} t^{ρ_i}`. Takes `t^{1/2}` so that `t^{ρ_i}` is available.
pub fn dual_macdonald_apply<C: Field>(
    r: usize,
    table: &Table<LaurentPoly<C>>,
    lambda: &[i64],
    q: &C,
    t_half: &C,
) -> Result<LaurentPoly<C>> {
    let n = lambda.len();
    if r == 0 || r > n {
        return Err(Error::InvalidInput(format!("operator index {r} out of range 1..={n}")));
    }
    let t = t_half.mul(t_half);
    let rho2 = two_rho(n);
    let x: Vec<C> = (0..n)
        .map(|i| {
            let qi = q.powi(lambda[i]).ok_or_else(|| Error::DivisionByZero("q = 0".into()))?;
            let th = t_half.powi(rho2[i]).ok_or_else(|| Error::DivisionByZero("t = 0".into()))?;
            Ok(qi.mul(&th))
        })
        .collect::<Result<_>>()?;
    let pref = t.pow((r * (r - 1) / 2) as u64);
    let mut acc: Option<LaurentPoly<C>> = None;
    for sub in subsets(n, r) {
        let mut coef = pref.clone();
        for &i in &sub {
            for j in (0..n).filter(|j| !sub.contains(j)) {
                let den = x[i].sub(&x[j]);
                let f = t
                    .mul(&x[i])
                    .sub(&x[j])
                    .div_exact(&den)
                    .ok_or_else(|| Error::Pole(format!("x_{} = x_{} at λ = {lambda:?}", i + 1, j + 1)))?;
                coef = coef.mul(&f);
            }
        }
        let mut key = lambda.to_vec();
        for &i in &sub {
            key[i] += 1;
        }
        let val = table.get(&key).ok_or_else(|| Error::MissingEntry(format!("{key:?}")))?;
        let term = val.scale(&coef);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    Ok(acc.expect("at least one subset"))
}

/// Elementary symmetric function `e_r` of the given values.
pub fn elementary_values<C: Ring>(r: usize, x: &[C]) -> C {
    let mut acc = C::zero();
    for sub in subsets(x.len(), r) {
        acc = acc.add(&sub.iter().fold(C::one(), |a, &i| a.mul(&x[i])));
    }
    acc
}
