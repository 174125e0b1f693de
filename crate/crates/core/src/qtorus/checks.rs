//! Identities in the torus algebra and the matrix-element formula for `Ψ̃`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::check::{Canonical, CheckOutcome};
use crate::cli::serial::serialize;
use crate::corealg::{partitions_in_box, q_binomial, LaurentPoly, QLaurent, Ring};
use crate::error::Result;
use crate::qtoda::whittaker_normalized;

use super::algebra::{f_poly, generator_count, matrix_element, whittaker_matrix_element, TorusElem};

impl Canonical for TorusElem {
    fn canonical(&self) -> String {
        let parts: Vec<String> =
            self.terms().map(|((x, t), c)| format!("X^{x:?} T^{t:?} · {}", serialize(c))).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn scalar(rank: usize, c: QLaurent) -> TorusElem {
    TorusElem::scalar(rank, LaurentPoly::constant(rank + 1, c))
}

/// `(X + T)^n = Σ_m binom(n, m)_q X^m T^{n−m}` for `X = X_{1,1}`, `T = T_{1,1}`.
pub fn q_binomial_identity_check(n: u64) -> Result<bool> {
    let x = TorusElem::x(1, 1, 1)?;
    let t = TorusElem::t(1, 1, 1)?;
    let lhs = x.add(&t).pow(n);
    let mut rhs = TorusElem::zero(1);
    for m in 0..=n {
        let term = x.pow(m).mul(&t.pow(n - m)).mul(&scalar(1, q_binomial(n as i64, m as i64)));
        rhs = rhs.add(&term);
    }
    Ok(lhs == rhs)
}

pub fn verify_q_binomial(nmax: u64) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("torus q-binomial");
    for n in 0..=nmax {
        out.compare(format!("n={n}"), &q_binomial_identity_check(n)?, &true);
    }
    Ok(out)
}

/// The matrix element against `Ψ̃` at every dominant point of `[lo, hi]^n`.
pub fn verify_matrix_element(n: usize, lo: i64, hi: i64) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("torus matrix element n={n}"));
    for p in partitions_in_box(n, lo, hi) {
        let p = p.into_parts();
        let r = whittaker_matrix_element(&p).and_then(|a| whittaker_normalized(&p).map(|b| (a, b)));
        out.compare_all([(format!("{p:?}"), r)]);
    }
    Ok(out)
}

/// `Σ_{m=0}^{N} z^{N−m} binom(N, m)_q g^{a+N−m} f^m X^m T^{N−m} = g^a (f X + z g T)^N`
/// with `f = f_{ℓ,k}`, `g = f_{ℓ,k−1}`, `X = X_{ℓ,k}`, `T = T_{ℓ,k}`, `z = z_{ℓ+1}`.
pub fn proof_identity_check(l: usize, k: usize, n: u64, a: u64) -> Result<bool> {
    let rank = l;
    let f = f_poly(rank, l, k)?;
    let g = f_poly(rank, l, k - 1)?;
    let x = TorusElem::x(rank, l, k)?;
    let t = TorusElem::t(rank, l, k)?;
    let z = TorusElem::z(rank, l + 1);
    let mut lhs = TorusElem::zero(rank);
    for m in 0..=n {
        let term = z
            .pow(n - m)
            .mul(&scalar(rank, q_binomial(n as i64, m as i64)))
            .mul(&g.pow(a + n - m))
            .mul(&f.pow(m))
            .mul(&x.pow(m))
            .mul(&t.pow(n - m));
        lhs = lhs.add(&term);
    }
    let rhs = g.pow(a).mul(&f.mul(&x).add(&z.mul(&g).mul(&t)).pow(n));
    Ok(lhs == rhs)
}

pub fn verify_proof_identity(lmax: usize, nmax: u64) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("torus binomial recursion");
    for l in 1..=lmax {
        for k in 1..=l {
            for n in 0..=nmax {
                for a in 0..=1 {
                    out.compare(format!("ℓ={l} k={k} N={n} a={a}"), &proof_identity_check(l, k, n, a)?, &true);
                }
            }
        }
    }
    Ok(out)
}

/// `deg_z f_{n,i} = i` in every term.
pub fn verify_f_degrees(rank: usize) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("torus f degrees rank {rank}"));
    for n in 1..=rank + 1 {
        for i in 0..=n {
            let f = f_poly(rank, n, i)?;
            let ok = f.terms().all(|(_, c)| c.terms().all(|(e, _)| e.iter().sum::<i64>() == i as i64));
            out.compare(format!("f_({n},{i})"), &ok, &true);
        }
    }
    Ok(out)
}

fn random_elem(rng: &mut StdRng, rank: usize) -> TorusElem {
    let g = generator_count(rank);
    let mut out = TorusElem::zero(rank);
    for _ in 0..rng.gen_range(1..=3) {
        let x: Vec<i64> = (0..g).map(|_| rng.gen_range(0..=2)).collect();
        let t: Vec<i64> = (0..g).map(|_| rng.gen_range(0..=2)).collect();
        let z: Vec<i64> = (0..=rank).map(|_| rng.gen_range(0..=1)).collect();
        let c = QLaurent::q_pow(rng.gen_range(-1..=1)).mul(&QLaurent::int(rng.gen_range(1..=3)));
        out.add_term(x, t, LaurentPoly::monomial(z, c));
    }
    out
}

/// `(ab)c = a(bc)` on random elements.
pub fn verify_associativity(rank: usize, samples: usize, seed: u64) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("torus associativity rank {rank}"));
    let mut rng = StdRng::seed_from_u64(seed);
    for s in 0..samples {
        let (a, b, c) = (random_elem(&mut rng, rank), random_elem(&mut rng, rank), random_elem(&mut rng, rank));
        out.compare(format!("sample {s}"), &a.mul(&b).mul(&c), &a.mul(&b.mul(&c)));
    }
    Ok(out)
}

/// `⟨X^a T^b⟩ = ⟨X^a⟩⟨T^b⟩ = 1`, including when the `X` and `T` factors
/// are given as separate products.
pub fn verify_vacuum(rank: usize, samples: usize, seed: u64) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("torus vacuum rank {rank}"));
    let mut rng = StdRng::seed_from_u64(seed);
    let one = LaurentPoly::one(rank + 1);
    for s in 0..samples {
        let mut xs = TorusElem::one(rank);
        let mut ts = TorusElem::one(rank);
        for k in 1..=rank {
            for i in 1..=k {
                xs = xs.mul(&TorusElem::x(rank, k, i)?.pow(rng.gen_range(0..=3)));
                ts = ts.mul(&TorusElem::t(rank, k, i)?.pow(rng.gen_range(0..=3)));
            }
        }
        let prod = matrix_element(&xs.mul(&ts));
        out.compare(format!("sample {s}"), &prod, &matrix_element(&xs).mul(&matrix_element(&ts)));
        out.compare(format!("sample {s} unit"), &prod, &one);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_binomial_small() {
        for n in 0..=4 {
            assert!(q_binomial_identity_check(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn matrix_element_rank_one() {
        assert!(verify_matrix_element(2, 0, 3).unwrap().passed());
    }

    #[test]
    fn proof_identity_rank_one() {
        assert!(proof_identity_check(1, 1, 3, 1).unwrap());
    }
}
