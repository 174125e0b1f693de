//! Formal characters, Demazure operators and the homomorphism `π`.

use std::collections::BTreeMap;

use crate::corealg::{LaurentPoly, QLaurent, Ring};
use crate::error::{Error, Result};

use super::weights::{bilinear_form, simple_root, weyl_reflect, AffineWeight};

/// A finite sum `Σ c_μ e^μ` with nonzero integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharSum {
    terms: BTreeMap<AffineWeight, i64>,
}

impl CharSum {
    pub fn zero() -> Self {
        CharSum::default()
    }

    /// `e^μ`.
    pub fn exp(mu: AffineWeight) -> Self {
        let mut c = CharSum::zero();
        c.add_term(mu, 1);
        c
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (AffineWeight, i64)>) -> Self {
        let mut c = CharSum::zero();
        for (mu, k) in terms {
            c.add_term(mu, k);
        }
        c
    }

    pub fn add_term(&mut self, mu: AffineWeight, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(mu.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&mu);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineWeight, &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), *c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        CharSum::from_terms(self.terms.iter().map(|(mu, c)| (mu.clone(), c * k)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = CharSum::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.add(b), x * y);
            }
        }
        out
    }
}

/// `𝒟_i e^μ = (e^μ − e^{−α_i} e^{s_i μ})/(1 − e^{−α_i})`, summed in closed
/// form: with `m = (μ, α_i)`, `Σ_{j=0}^{m} e^{μ−jα_i}` for `m ≥ 0`, zero for
/// `m = −1` and `−Σ_{j=1}^{−m−1} e^{μ+jα_i}` for `m ≤ −2`.
pub fn demazure_op(i: usize, c: &CharSum) -> Result<CharSum> {
    let mut out = CharSum::zero();
    for (mu, k) in c.terms() {
        let a = simple_root(mu.rank(), i)?;
        let m = bilinear_form(mu, &a);
        if m >= 0 {
            for j in 0..=m {
                out.add_term(mu.add_scaled(&a, -j), *k);
            }
        } else {
            for j in 1..-m {
                out.add_term(mu.add_scaled(&a, j), -*k);
            }
        }
    }
    Ok(out)
}

/// `𝒟_{i_1} ⋯ 𝒟_{i_r} e^ω` (rightmost first). The word must be reduced
/// for `ω`: every step has to lower the extremal weight.
pub fn demazure_character(omega: &AffineWeight, word: &[usize]) -> Result<CharSum> {
    let mut extremal = omega.clone();
    let mut c = CharSum::exp(omega.clone());
    for &i in word.iter().rev() {
        let a = simple_root(omega.rank(), i)?;
        if bilinear_form(&extremal, &a) <= 0 {
            return Err(Error::NonReducedWord(format!("{word:?} at letter s_{i}, extremal weight {extremal}")));
        }
        extremal = weyl_reflect(i, &extremal)?;
        c = demazure_op(i, &c)?;
    }
    Ok(c)
}

/// `π(e^μ) = q^{deg μ} ∏ z_i^{μ_i}`: `e^{ω_i} ↦ z_1⋯z_i`, `e^{ω_0} ↦ 1`, `e^δ ↦ q`.
pub fn pi_homomorphism(c: &CharSum) -> LaurentPoly<QLaurent> {
    let n = c.terms().next().map(|(mu, _)| mu.fin.len()).unwrap_or(0);
    let mut out = LaurentPoly::zero(n);
    for (mu, k) in c.terms() {
        out.add_term(mu.fin.clone(), QLaurent::q_pow(mu.deg).mul(&QLaurent::int(*k)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demazure::weights::{fundamental_weight, null_root};

    #[test]
    fn three_cases() {
        let mu = AffineWeight::new(vec![1, 0], 1, 0);
        let d = demazure_op(1, &CharSum::exp(mu.clone())).unwrap();
        assert_eq!(d, CharSum::from_terms([(mu.clone(), 1), (weyl_reflect(1, &mu).unwrap(), 1)]));
        let minus_one = AffineWeight::new(vec![0, 1], 0, 0);
        assert!(demazure_op(1, &CharSum::exp(minus_one)).unwrap().is_empty());
        let fixed = AffineWeight::new(vec![2, 2], 1, 3);
        assert_eq!(demazure_op(1, &CharSum::exp(fixed.clone())).unwrap(), CharSum::exp(fixed));
    }

    #[test]
    fn closed_form_clears_denominator() {
        // (1 − e^{−α}) 𝒟 e^μ = e^μ − e^{−α} e^{s μ}
        for rank in 1..=2 {
            for i in 0..=rank {
                let a = simple_root(rank, i).unwrap();
                for x in -3..=3 {
                    let mut fin = vec![0; rank + 1];
                    fin[0] = x;
                    fin[rank] = 1 - x / 2;
                    let mu = AffineWeight::new(fin, 1, x);
                    let lhs = CharSum::from_terms([(AffineWeight::zero(rank), 1), (a.neg(), -1)])
                        .mul(&demazure_op(i, &CharSum::exp(mu.clone())).unwrap());
                    let rhs = CharSum::from_terms([(mu.clone(), 1), (weyl_reflect(i, &mu).unwrap().add(&a.neg()), -1)]);
                    assert_eq!(lhs, rhs, "i = {i}, μ = {mu}");
                }
            }
        }
    }

    #[test]
    fn generator_images() {
        let z1 = LaurentPoly::<QLaurent>::var(2, 0);
        assert_eq!(pi_homomorphism(&CharSum::exp(fundamental_weight(1, 1).unwrap())), z1);
        assert_eq!(pi_homomorphism(&CharSum::exp(fundamental_weight(1, 0).unwrap())), LaurentPoly::one(2));
        assert_eq!(pi_homomorphism(&CharSum::exp(null_root(1))), LaurentPoly::constant(2, QLaurent::q_pow(1)));
    }

    #[test]
    fn non_reduced_word_is_rejected() {
        let w = fundamental_weight(1, 0).unwrap();
        assert!(matches!(demazure_character(&w, &[1]), Err(Error::NonReducedWord(_))));
        assert!(matches!(demazure_character(&w, &[0, 0]), Err(Error::NonReducedWord(_))));
        assert_eq!(demazure_character(&w, &[]).unwrap(), CharSum::exp(w));
    }
}
