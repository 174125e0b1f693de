//! Weights of affine `gl(ℓ+1)` in the basis `e_1..e_{ℓ+1}, e_−, e_+` with
//! `(e_i, e_j) = δ_ij`, `(e_+, e_−) = 1`, `(e_±, e_±) = 0`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AffineWeight {
    /// Coefficients of `e_1..e_{ℓ+1}`.
    pub fin: Vec<i64>,
    /// Coefficient of `e_−`.
    pub level: i64,
    /// Coefficient of `e_+`, i.e. of `δ`.
    pub deg: i64,
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}; level {}, deg {})", self.fin, self.level, self.deg)
    }
}

impl AffineWeight {
    pub fn new(fin: Vec<i64>, level: i64, deg: i64) -> Self {
        AffineWeight { fin, level, deg }
    }

    pub fn zero(rank: usize) -> Self {
        AffineWeight::new(vec![0; rank + 1], 0, 0)
    }

    /// `ℓ`, with `ℓ + 1` finite coordinates.
    pub fn rank(&self) -> usize {
        self.fin.len() - 1
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, 1)
    }

    /// `self + c · other`.
    pub fn add_scaled(&self, other: &Self, c: i64) -> Self {
        assert_eq!(self.fin.len(), other.fin.len());
        AffineWeight {
            fin: self.fin.iter().zip(&other.fin).map(|(a, b)| a + c * b).collect(),
            level: self.level + c * other.level,
            deg: self.deg + c * other.deg,
        }
    }

    pub fn neg(&self) -> Self {
        AffineWeight::zero(self.rank()).add_scaled(self, -1)
    }
}

pub fn bilinear_form(a: &AffineWeight, b: &AffineWeight) -> i64 {
    assert_eq!(a.fin.len(), b.fin.len());
    a.fin.iter().zip(&b.fin).map(|(x, y)| x * y).sum::<i64>() + a.level * b.deg + a.deg * b.level
}

fn check_index(i: usize, max: usize) -> Result<()> {
    if i > max {
        return Err(Error::InvalidInput(format!("index {i} out of range 0..={max}")));
    }
    Ok(())
}

/// `α_i = e_i − e_{i+1}` for `1 ≤ i ≤ ℓ`, `α_0 = e_+ − e_1 + e_{ℓ+1}`.
pub fn simple_root(rank: usize, i: usize) -> Result<AffineWeight> {
    check_index(i, rank)?;
    let mut w = AffineWeight::zero(rank);
    if i == 0 {
        w.fin[0] = -1;
        w.fin[rank] += 1;
        w.deg = 1;
    } else {
        w.fin[i - 1] = 1;
        w.fin[i] = -1;
    }
    Ok(w)
}

/// `ω_i = e_1 + … + e_i + e_−`, so `ω_0 = e_−`; `i = ℓ+1` gives `e_1+…+e_{ℓ+1}+e_−`.
pub fn fundamental_weight(rank: usize, i: usize) -> Result<AffineWeight> {
    check_index(i, rank + 1)?;
    let mut w = AffineWeight::zero(rank);
    for c in w.fin.iter_mut().take(i) {
        *c = 1;
    }
    w.level = 1;
    Ok(w)
}

/// `δ = e_+`.
pub fn null_root(rank: usize) -> AffineWeight {
    AffineWeight::new(vec![0; rank + 1], 0, 1)
}

/// `s_i μ = μ − (μ, α_i) α_i` (all simple roots have square length 2).
pub fn weyl_reflect(i: usize, mu: &AffineWeight) -> Result<AffineWeight> {
    let a = simple_root(mu.rank(), i)?;
    Ok(mu.add_scaled(&a, -bilinear_form(mu, &a)))
}

/// Apply a word `s_{i_1} ⋯ s_{i_r}` (rightmost first).
pub fn weyl_apply(word: &[usize], mu: &AffineWeight) -> Result<AffineWeight> {
    word.iter().rev().try_fold(mu.clone(), |m, &i| weyl_reflect(i, &m))
}

/// The orbit data of a finite weight at level 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitData {
    pub k: i64,
    pub i: usize,
    /// `w` with `w · (ω_0 + λ̇_{k,i})` projecting to the input.
    pub word: Vec<usize>,
    /// The `δ`-coefficient of `w · (ω_0 + λ̇_{k,i})`.
    pub deg: i64,
}

/// `ω_0 + λ̇_{k,i}` with `λ̇_{k,i} = k·(1,…,1) + (e_1 + … + e_i)`.
pub fn orbit_base(rank: usize, k: i64, i: usize) -> AffineWeight {
    let mut w = fundamental_weight(rank, i).expect("index in range");
    for c in w.fin.iter_mut() {
        *c += k;
    }
    w
}

/// Finds `(k, i)` and a reduced word `w` carrying `ω_0 + λ̇_{k,i}` to a
/// weight whose finite part is `lambda`.
///
/// Starting from `lambda` at level 1, the smallest `s_j` with negative
/// pairing is applied until the weight is dominant; each such step raises
/// the length by one, which is asserted by the descent criterion.
pub fn orbit_representative(lambda: &[i64]) -> Result<OrbitData> {
    if lambda.is_empty() {
        return Err(Error::InvalidInput("empty weight".into()));
    }
    let rank = lambda.len() - 1;
    let mut mu = AffineWeight::new(lambda.to_vec(), 1, 0);
    let mut steps = Vec::new();
    loop {
        let mut next = None;
        for j in 0..=rank {
            let p = bilinear_form(&mu, &simple_root(rank, j)?);
            if p < 0 {
                next = Some(j);
                break;
            }
        }
        let Some(j) = next else { break };
        mu = weyl_reflect(j, &mu)?;
        steps.push(j);
    }
    let n = rank as i64 + 1;
    let total: i64 = lambda.iter().sum();
    let (k, i) = (total.div_euclid(n), total.rem_euclid(n) as usize);
    let base = orbit_base(rank, k, i);
    if mu.fin != base.fin || mu.level != 1 {
        return Err(Error::Internal(format!("dominant weight {mu} is not ω_0 + λ̇_({k},{i})")));
    }
    // target = s_{j_1} ⋯ s_{j_r} (dominant)
    let word = steps;
    if !is_reduced(&word, &base)? {
        return Err(Error::NonReducedWord(format!("{word:?}")));
    }
    let image = weyl_apply(&word, &base)?;
    debug_assert_eq!(image.fin, lambda);
    Ok(OrbitData { k, i, deg: image.deg, word })
}

/// Descent criterion for a word acting on a regular-enough dominant weight:
/// applying letters right to left, each letter must move the weight down
/// (negative pairing after reflection).
pub fn is_reduced(word: &[usize], dominant: &AffineWeight) -> Result<bool> {
    let mut mu = dominant.clone();
    for &i in word.iter().rev() {
        let a = simple_root(mu.rank(), i)?;
        if bilinear_form(&mu, &a) <= 0 {
            return Ok(false);
        }
        mu = weyl_reflect(i, &mu)?;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(rank: usize, i: usize) -> AffineWeight {
        let mut w = AffineWeight::zero(rank);
        w.fin[i] = 1;
        w
    }

    #[test]
    fn form_on_basis() {
        let plus = AffineWeight::new(vec![0, 0], 0, 1);
        let minus = AffineWeight::new(vec![0, 0], 1, 0);
        assert_eq!(bilinear_form(&e(1, 0), &e(1, 0)), 1);
        assert_eq!(bilinear_form(&plus, &minus), 1);
        assert_eq!(bilinear_form(&plus, &plus), 0);
    }

    #[test]
    fn roots_and_weights() {
        for rank in 1..=3 {
            let delta = null_root(rank);
            for j in 0..=rank {
                let a = simple_root(rank, j).unwrap();
                assert_eq!(bilinear_form(&a, &a), 2);
                assert_eq!(bilinear_form(&delta, &a), 0);
                for i in 0..=rank {
                    let w = fundamental_weight(rank, i).unwrap();
                    assert_eq!(bilinear_form(&w, &a), (i == j) as i64, "ω_{i}, α_{j}");
                }
            }
        }
    }

    #[test]
    fn explicit_reflections() {
        let mu = AffineWeight::new(vec![3, 1, -2], 1, 0);
        assert_eq!(weyl_reflect(0, &mu).unwrap().fin, vec![-1, 1, 2]);
        assert_eq!(weyl_reflect(1, &mu).unwrap().fin, vec![1, 3, -2]);
        assert_eq!(weyl_reflect(2, &mu).unwrap().fin, vec![3, -2, 1]);
        let s: i64 = weyl_reflect(0, &mu).unwrap().fin.iter().sum();
        assert_eq!(s, 2);
    }

    #[test]
    fn rank_one_orbits() {
        assert_eq!(orbit_representative(&[0, 0]).unwrap().word, Vec::<usize>::new());
        for m in 1..=3usize {
            let o = orbit_representative(&[-(m as i64), m as i64]).unwrap();
            assert_eq!((o.k, o.i), (0, 0));
            assert_eq!(o.word, [1, 0].repeat(m));
            let o = orbit_representative(&[-(m as i64), m as i64 + 1]).unwrap();
            assert_eq!((o.k, o.i), (0, 1));
            let mut w = vec![1];
            w.extend([0, 1].repeat(m));
            assert_eq!(o.word, w);
        }
    }
}
