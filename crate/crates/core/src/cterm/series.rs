//! Power series in `q` truncated after `q^N`, with Laurent-polynomial
//! coefficients in a fixed set of variables.
//!
//! Each monomial carries a dense vector of its `q^0..=q^N` coefficients.
//! Products are re-truncated, so arithmetic is exact modulo `q^{N+1}`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::corealg::{LaurentPoly, QLaurent, QRatio, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    nvars: usize,
    order: usize,
    terms: BTreeMap<Vec<i64>, Vec<Rational>>,
}

fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn mul_into(acc: &mut [Rational], a: &[Rational], b: &[Rational]) {
    let n = acc.len();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                acc[i + j] += x * y;
            }
        }
    }
}

impl TruncSeries {
    pub fn zero(nvars: usize, order: usize) -> Self {
        TruncSeries { nvars, order, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, order: usize) -> Self {
        Self::monomial(vec![0; nvars], 0, Rational::one(), order)
    }

    /// `c · x^exp · q^qpow`; zero when `qpow` exceeds the order.
    pub fn monomial(exp: Vec<i64>, qpow: usize, c: Rational, order: usize) -> Self {
        let mut s = Self::zero(exp.len(), order);
        if qpow <= order && !c.is_zero() {
            let mut v = vec![Rational::zero(); order + 1];
            v[qpow] = c;
            s.terms.insert(exp, v);
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Vec<Rational>)> {
        self.terms.iter()
    }

    fn add_vec(&mut self, exp: Vec<i64>, v: &[Rational]) {
        let order = self.order;
        let slot = self.terms.entry(exp.clone()).or_insert_with(|| vec![Rational::zero(); order + 1]);
        for (a, b) in slot.iter_mut().zip(v) {
            *a += b;
        }
        if is_zero_vec(slot) {
            self.terms.remove(&exp);
        }
    }

    /// A polynomial whose coefficients are power series in `q`; rational
    /// coefficients are expanded, odd or negative powers of `s` rejected.
    pub fn from_poly(p: &LaurentPoly<QRatio>, order: usize) -> Result<Self> {
        let mut s = Self::zero(p.nvars(), order);
        for (e, c) in p.terms() {
            let series = c.series(2 * order as i64);
            s.add_vec(e.clone(), &q_vector(&series, order)?);
        }
        Ok(s)
    }

    pub fn from_laurent_poly(p: &LaurentPoly<QLaurent>, order: usize) -> Result<Self> {
        Self::from_poly(&p.map_coeffs(|c| QRatio::from(c.clone())), order)
    }

    /// The truncated value as a polynomial with `ℤ[q]`-style coefficients.
    pub fn to_poly(&self) -> LaurentPoly<QLaurent> {
        LaurentPoly::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, v)| {
                (e.clone(), QLaurent::from_terms(v.iter().enumerate().map(|(k, c)| (2 * k as i64, c.clone()))))
            }),
        )
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let mut out = Self::zero(self.nvars, order);
        for (e, v) in &self.terms {
            let w = v[..=order].to_vec();
            if !is_zero_vec(&w) {
                out.terms.insert(e.clone(), w);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.truncate(other.order);
        for (e, v) in &other.terms {
            out.add_vec(e.clone(), &v[..=out.order]);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            for c in v.iter_mut() {
                *c = -c.clone();
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            for x in v.iter_mut() {
                *x *= c;
            }
        }
        out
    }

    /// Product truncated at the smaller order; the left factor's terms are
    /// processed in parallel.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let order = self.order.min(other.order);
        let left: Vec<_> = self.terms.iter().collect();
        let partial: Vec<HashMap<Vec<i64>, Vec<Rational>>> = left
            .par_chunks(16.max(left.len() / 64 + 1))
            .map(|chunk| {
                let mut acc: HashMap<Vec<i64>, Vec<Rational>> = HashMap::new();
                for (ea, va) in chunk {
                    for (eb, vb) in &other.terms {
                        let e: Vec<i64> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                        let slot = acc.entry(e).or_insert_with(|| vec![Rational::zero(); order + 1]);
                        mul_into(slot, &va[..=order], &vb[..=order]);
                    }
                }
                acc
            })
            .collect();
        let mut out = Self::zero(self.nvars, order);
        for m in partial {
            for (e, v) in m {
                out.add_vec(e, &v);
            }
        }
        out
    }

    /// Multiply by a `y`-free power series in `q` alone.
    pub fn mul_q_series(&self, c: &[Rational]) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        for (e, v) in &self.terms {
            let mut acc = vec![Rational::zero(); self.order + 1];
            mul_into(&mut acc, v, c);
            out.add_vec(e.clone(), &acc);
        }
        out
    }

    /// `x_i → x_i^{-1}` for the given variables.
    pub fn invert_vars(&self, vars: &[usize]) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        for (e, v) in &self.terms {
            let mut f = e.clone();
            for &i in vars {
                f[i] = -f[i];
            }
            out.terms.insert(f, v.clone());
        }
        out
    }

    /// Re-embed into `nvars` variables; variable `i` becomes `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(nvars, self.order);
        for (e, v) in &self.terms {
            let mut f = vec![0; nvars];
            for (i, &m) in map.iter().enumerate() {
                f[m] = e[i];
            }
            out.add_vec(f, v);
        }
        out
    }

    /// Largest exponent of each listed variable over all terms (0 if none is positive).
    pub fn max_degrees(&self, vars: &[usize]) -> Vec<i64> {
        vars.iter().map(|&i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0).max(0)).collect()
    }
}

/// Dense `q^0..=q^N` coefficients of a power series in `s` with even exponents.
pub fn q_vector(series: &QLaurent, order: usize) -> Result<Vec<Rational>> {
    let mut v = vec![Rational::zero(); order + 1];
    for (e, c) in series.terms() {
        if e < 0 || e % 2 != 0 {
            return Err(Error::InvalidInput(format!("coefficient has the s-power {e}; need a power series in q")));
        }
        let k = (e / 2) as usize;
        if k <= order {
            v[k] = c.clone();
        }
    }
    Ok(v)
}

fn split_exp(e: &[i64], yvars: &[usize], rest: &[usize]) -> (Vec<i64>, Vec<i64>) {
    (yvars.iter().map(|&i| e[i]).collect(), rest.iter().map(|&i| e[i]).collect())
}

fn other_vars(nvars: usize, yvars: &[usize]) -> Vec<usize> {
    (0..nvars).filter(|i| !yvars.contains(i)).collect()
}

/// Terms with exponent zero in every `y` variable, as a series in the
/// remaining variables (kept in their original order).
pub fn constant_term(series: &TruncSeries, yvars: &[usize]) -> TruncSeries {
    let rest = other_vars(series.nvars, yvars);
    let mut out = TruncSeries::zero(rest.len(), series.order);
    for (e, v) in &series.terms {
        let (y, x) = split_exp(e, yvars, &rest);
        if y.iter().all(|&k| k == 0) {
            out.add_vec(x, v);
        }
    }
    out
}

/// `constant_term(a · b)` without forming the full product: terms are paired
/// by opposite `y`-exponents.
pub fn constant_term_of_product(a: &TruncSeries, b: &TruncSeries, yvars: &[usize]) -> TruncSeries {
    assert_eq!(a.nvars, b.nvars);
    let order = a.order.min(b.order);
    let rest = other_vars(a.nvars, yvars);
    type Rest<'a> = Vec<(Vec<i64>, &'a Vec<Rational>)>;
    let mut index: HashMap<Vec<i64>, Rest> = HashMap::new();
    for (e, v) in &b.terms {
        let (y, x) = split_exp(e, yvars, &rest);
        index.entry(y).or_default().push((x, v));
    }
    let mut out = TruncSeries::zero(rest.len(), order);
    for (e, va) in &a.terms {
        let (y, x) = split_exp(e, yvars, &rest);
        let neg: Vec<i64> = y.iter().map(|k| -k).collect();
        if let Some(list) = index.get(&neg) {
            for (xb, vb) in list {
                let f: Vec<i64> = x.iter().zip(xb).map(|(p, q)| p + q).collect();
                let mut acc = vec![Rational::zero(); order + 1];
                mul_into(&mut acc, &va[..=order], &vb[..=order]);
                out.add_vec(f, &acc);
            }
        }
    }
    out
}

/// Per-variable caps on the positive exponent of each `y` variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBudget {
    pub max_degree: Vec<i64>,
}

impl DegreeBudget {
    pub fn uniform(ny: usize, d: i64) -> Self {
        DegreeBudget { max_degree: vec![d; ny] }
    }

    pub fn enlarged(&self, by: i64) -> Self {
        DegreeBudget { max_degree: self.max_degree.iter().map(|d| d + by).collect() }
    }
}

/// `1/(q;q)_m` as a truncated `q`-vector.
pub fn inv_q_factorial(m: usize, order: usize) -> Vec<Rational> {
    let r = QRatio::one().div_exact(&QRatio::from(QLaurent::q_factorial(m as u64))).unwrap();
    q_vector(&r.series(2 * order as i64), order).expect("power series in q")
}

/// `Δ(x|q,0) = ∏_{i≠j} ∏_{n≥0} (1 − x_i x_j^{−1} q^n)` modulo `q^{N+1}`.
pub fn expand_delta_t0(nvars: usize, order: usize) -> TruncSeries {
    let mut acc = TruncSeries::one(nvars, order);
    for i in 0..nvars {
        for j in 0..nvars {
            if i == j {
                continue;
            }
            let mut e = vec![0; nvars];
            e[i] = 1;
            e[j] = -1;
            for n in 0..=order {
                let f =
                    TruncSeries::one(nvars, order).sub(&TruncSeries::monomial(e.clone(), n, Rational::one(), order));
                acc = acc.mul(&f);
            }
        }
    }
    acc
}

/// `Γ_q(u) = 1/∏_{j≥0}(1 − u q^j) = Σ_m u^m/(q;q)_m` for `u = x^exp · q^qpow`,
/// keeping `m ≤ max_m`; `None` stands for `u = 0`.
pub fn gamma_q_truncated(arg: Option<(&[i64], usize)>, nvars: usize, order: usize, max_m: usize) -> TruncSeries {
    let Some((exp, qpow)) = arg else {
        return TruncSeries::one(nvars, order);
    };
    let mut out = TruncSeries::zero(nvars, order);
    for m in 0..=max_m {
        if m * qpow > order {
            break;
        }
        let e: Vec<i64> = exp.iter().map(|k| k * m as i64).collect();
        let mut v = vec![Rational::zero(); order + 1];
        for (k, c) in inv_q_factorial(m, order).into_iter().enumerate() {
            if k + m * qpow <= order {
                v[k + m * qpow] = c;
            }
        }
        out.add_vec(e, &v);
    }
    out
}

/// `C(x, y|q, 0) = ∏_{i,j} Γ_q(x_i y_j)` in variables `x_1..x_nx, y_1..y_ny`
/// (in that order), keeping for each `y_j` only terms of total degree at most
/// the budget.
pub fn expand_kernel_t0(nx: usize, ny: usize, order: usize, budget: &DegreeBudget) -> Result<TruncSeries> {
    if budget.max_degree.len() != ny || budget.max_degree.iter().any(|&d| d < 0) {
        return Err(Error::InvalidInput(format!("budget {:?} does not fit {ny} variables", budget.max_degree)));
    }
    let n = nx + ny;
    let mut acc = TruncSeries::one(n, order);
    for j in 0..ny {
        let cap = budget.max_degree[j];
        let mut column = TruncSeries::one(n, order);
        for i in 0..nx {
            let mut e = vec![0; n];
            e[i] = 1;
            e[nx + j] = 1;
            let factor = gamma_q_truncated(Some((&e, 0)), n, order, cap as usize);
            column = column.mul(&factor);
            column.terms.retain(|k, _| k[nx + j] <= cap);
        }
        acc = acc.mul(&column);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corealg::rat;

    #[test]
    fn delta_trivial_and_lowest_order() {
        assert_eq!(expand_delta_t0(1, 3), TruncSeries::one(1, 3));
        let d = expand_delta_t0(2, 0);
        let expect = LaurentPoly::from_terms(
            2,
            [(vec![0, 0], QLaurent::int(2)), (vec![1, -1], QLaurent::int(-1)), (vec![-1, 1], QLaurent::int(-1))],
        );
        assert_eq!(d.to_poly(), expect);
    }

    #[test]
    fn delta_matches_naive_product() {
        let order = 2;
        let mut naive = LaurentPoly::<QLaurent>::one(2);
        for n in 0..=order as i64 {
            for (a, b) in [(1, -1), (-1, 1)] {
                let f = LaurentPoly::one(2).sub(&LaurentPoly::monomial(vec![a, b], QLaurent::q_pow(n)));
                naive = naive.mul(&f);
            }
        }
        let naive = TruncSeries::from_laurent_poly(&naive, order).unwrap();
        assert_eq!(expand_delta_t0(2, order), naive);
    }

    #[test]
    fn gamma_coefficients() {
        let g = gamma_q_truncated(Some((&[1], 0)), 1, 6, 4);
        let coeff = |m: i64| g.terms().find(|(e, _)| e[0] == m).map(|(_, v)| v.clone()).unwrap();
        assert_eq!(coeff(0), TruncSeries::one(1, 6).terms().next().unwrap().1.clone());
        assert_eq!(coeff(1), inv_q_factorial(1, 6));
        assert_eq!(coeff(1)[3], rat(1, 1));
        assert_eq!(coeff(2), inv_q_factorial(2, 6));
        assert_eq!(gamma_q_truncated(None, 1, 6, 4), TruncSeries::one(1, 6));
    }

    #[test]
    fn kernel_is_product_of_gammas() {
        let (nx, ny, order) = (2, 1, 4);
        let budget = DegreeBudget::uniform(ny, 3);
        let k = expand_kernel_t0(nx, ny, order, &budget).unwrap();
        let mut g = TruncSeries::one(3, order);
        for i in 0..nx {
            let mut e = vec![0; 3];
            e[i] = 1;
            e[2] = 1;
            g = g.mul(&gamma_q_truncated(Some((&e, 0)), 3, order, 3));
        }
        g.terms.retain(|e, _| e[2] <= 3);
        assert_eq!(k, g);
    }

    #[test]
    fn constant_term_examples() {
        let p = LaurentPoly::from_terms(2, [(vec![0, 0], QLaurent::one()), (vec![1, -1], QLaurent::one())]);
        let s = TruncSeries::from_laurent_poly(&p, 3).unwrap();
        assert_eq!(constant_term(&s, &[1]).to_poly(), LaurentPoly::one(1));
        // (Σ_m x^m y^{-m}/(q)_m) · y  →  x/(1−q)
        let g = gamma_q_truncated(Some((&[1, -1], 0)), 2, 5, 4);
        let y = TruncSeries::monomial(vec![0, 1], 0, Rational::one(), 5);
        let ct = constant_term(&g.mul(&y), &[1]);
        let expect = TruncSeries::monomial(vec![1], 0, Rational::one(), 5).mul_q_series(&inv_q_factorial(1, 5));
        assert_eq!(ct, expect);
        assert_eq!(constant_term_of_product(&g, &y, &[1]), expect);
    }
}
