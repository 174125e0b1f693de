//! Exact verification of the Whittaker eigenproblems, symmetries and
//! bridges to Macdonald polynomials at `t = 0`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::check::CheckOutcome;
use crate::corealg::symmetric::permutations;
use crate::corealg::{elementary, partitions_in_box, LaurentPoly, QLaurent, QRatio, Ring};
use crate::error::Result;
use crate::macdonald::{macdonald_t0, Table};

use super::hamiltonians::*;
use super::whittaker::*;

fn q() -> QRatio {
    QRatio::q_pow(1)
}

fn to_ratio(p: &LaurentPoly<QLaurent>) -> LaurentPoly<QRatio> {
    p.map_coeffs(|c| QRatio::from(c.clone()))
}

fn dominant_points(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    box_points(n, lo, hi).into_iter().filter(|p| is_dominant(p)).collect()
}

/// Gelfand–Zetlin sum against the row recursion on dominant points of the box.
pub fn verify_gz_recursive(n: usize, lo: i64, hi: i64) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("whittaker-recursion n={n} box={lo}..{hi}"));
    let res: Vec<_> = dominant_points(n, lo, hi)
        .into_par_iter()
        .map(|p| (format!("p={p:?}"), whittaker_gz(&p).and_then(|a| Ok((a, whittaker_recursive(&p)?)))))
        .collect();
    out.compare_all(res);
    Ok(out)
}

/// `H_r Ψ = e_r(z) Ψ` for all `r` at every point whose shifts stay in the box,
/// including points off the dominant domain.
pub fn verify_toda_eigen(n: usize, lo: i64, hi: i64) -> Result<CheckOutcome> {
    let table = whittaker_table(n, lo, hi)?;
    let q = q();
    let cases: Vec<(usize, Vec<i64>)> =
        box_points(n, lo, hi - 1).into_iter().flat_map(|p| (1..=n).map(move |r| (r, p.clone()))).collect();
    let res: Vec<_> = cases
        .into_par_iter()
        .map(|(r, p)| {
            let v = toda_apply_at(r, &table, &p, &q).map(|lhs| (lhs, table[&p].mul(&elementary(r, n))));
            (format!("r={r} p={p:?}"), v)
        })
        .collect();
    let mut out = CheckOutcome::new(format!("toda-eigen n={n} box={lo}..{hi}"));
    out.compare_all(res);
    Ok(out)
}

/// The lattice Hamiltonian equals `ℋ_r(x)` under `x_i = q^{p_{ℓ+2−i}+ϱ_{ℓ+2−i}}`.
pub fn verify_change_of_variables(n: usize, lo: i64, hi: i64) -> Result<CheckOutcome> {
    let table = whittaker_table(n, lo, hi)?;
    let q = q();
    let mut out = CheckOutcome::new(format!("toda-x-form n={n} box={lo}..{hi}"));
    for p in box_points(n, lo, hi - 1) {
        for r in 1..=n {
            let v = toda_apply_at(r, &table, &p, &q).and_then(|a| Ok((a, toda_dual_x_table_at(r, &table, &p, &q)?)));
            out.compare_all([(format!("r={r} p={p:?}"), v)]);
        }
    }
    Ok(out)
}

/// `Ψ̃(p + k·1) = (∏ z_i)^k Ψ̃(p)`.
pub fn verify_translation(n: usize, lo: i64, hi: i64, ks: &[i64]) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("whittaker-translation n={n} box={lo}..{hi}"));
    for p in dominant_points(n, lo, hi) {
        for &k in ks {
            let shifted: Vec<i64> = p.iter().map(|x| x + k).collect();
            let v = whittaker_normalized(&shifted)
                .and_then(|a| Ok((a, whittaker_normalized(&p)?.mul_monomial(&vec![k; n]))));
            out.compare_all([(format!("p={p:?} k={k}"), v)]);
        }
    }
    Ok(out)
}

/// `Ψ(p)` is invariant under every permutation of `z`.
pub fn verify_symmetry(n: usize, lo: i64, hi: i64) -> Result<CheckOutcome> {
    let perms = permutations(n);
    let mut out = CheckOutcome::new(format!("whittaker-symmetry n={n} box={lo}..{hi}"));
    let res: Vec<_> = dominant_points(n, lo, hi).into_par_iter().map(|p| (p.clone(), whittaker_gz(&p))).collect();
    for (p, v) in res {
        let v = v?;
        for s in &perms {
            out.compare(format!("p={p:?} σ={s:?}"), &v.permute_vars(s), &v);
        }
    }
    Ok(out)
}

/// `Ψ̃(k+1,…,k+1,k,…,k) = (∏ z_i)^k e_r(z)` with `r` leading entries `k+1`.
pub fn verify_fundamental_characters(n: usize, ks: &[i64]) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("fundamental-characters n={n}"));
    for &k in ks {
        for r in 0..=n {
            let p: Vec<i64> = (0..n).map(|i| if i < r { k + 1 } else { k }).collect();
            let v = whittaker_normalized(&p).map(|a| (a, elementary::<QLaurent>(r, n).mul_monomial(&vec![k; n])));
            out.compare_all([(format!("p={p:?}"), v)]);
        }
    }
    Ok(out)
}

fn sl2_restrict(p: &LaurentPoly<QRatio>) -> LaurentPoly<QRatio> {
    let mut out = LaurentPoly::zero(1);
    for (e, c) in p.terms() {
        out.add_term(vec![e[0] - e[1]], c.clone());
    }
    out
}

/// The rank-one difference equations in `n = p_1 − p_2` with `z_1 = z`,
/// `z_2 = z^{−1}`, for `Ψ` and for `Ψ̃`.
pub fn verify_sl2_discrete(nmax: i64) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("sl2-discrete");
    let psi = |m: i64| -> Result<LaurentPoly<QRatio>> { whittaker_gz(&[m, 0]).map(|p| sl2_restrict(&p)) };
    let tilde = |m: i64| -> Result<LaurentPoly<QRatio>> {
        if m < 0 {
            return Ok(LaurentPoly::zero(1));
        }
        Ok(psi(m)?.scale(&QRatio::from(QLaurent::q_factorial(m as u64))))
    };
    let zz = LaurentPoly::from_terms(1, [(vec![1], QRatio::one()), (vec![-1], QRatio::one())]);
    for m in 0..=nmax {
        let one_minus = |e: i64| QRatio::one().sub(&QRatio::q_pow(e));
        let lhs = psi(m - 1)?.add(&psi(m + 1)?.scale(&one_minus(m + 1)));
        out.compare(format!("Ψ n={m}"), &lhs, &psi(m)?.mul(&zz));
        let lhs = tilde(m - 1)?.scale(&one_minus(m)).add(&tilde(m + 1)?);
        out.compare(format!("Ψ̃ n={m}"), &lhs, &tilde(m)?.mul(&zz));
    }
    Ok(out)
}

/// `Ψ̃(p) = P_p(z; q, 0)` for every dominant `p` in the box, generalized
/// partitions included.
pub fn verify_macdonald_bridge(n: usize, lo: i64, hi: i64) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("whittaker-macdonald-t0 n={n} box={lo}..{hi}"));
    let res: Vec<_> = dominant_points(n, lo, hi)
        .into_par_iter()
        .map(|p| {
            let v = whittaker_normalized(&p).and_then(|w| {
                let lam = crate::corealg::Partition::new(p.clone())?;
                Ok((to_ratio(&w), macdonald_t0(&lam, n)?.poly))
            });
            (format!("p={p:?}"), v)
        })
        .collect();
    out.compare_all(res);
    Ok(out)
}

/// `P_λ(x; q, 0)` for every partition with `n` parts in `[0, hi]`.
pub fn t0_table(n: usize, hi: i64) -> Result<Table<LaurentPoly<QRatio>>> {
    partitions_in_box(n, 0, hi).into_par_iter().map(|l| macdonald_t0(&l, n).map(|p| (l.into_parts(), p.poly))).collect()
}

/// Both `t = 0` dual relations for `Ψ̂_λ = P_λ(x; q, 0)`, `λ_1 ≤ lam_max`:
/// `Ĥ_r(x) Ψ̂_λ = q^{λ_{ℓ+2−r}+…+λ_{ℓ+1}} Ψ̂_λ` and `Ĥ^∨_r Ψ̂_λ = e_r(x) Ψ̂_λ`.
pub fn verify_dual_t0(n: usize, lam_max: i64) -> Result<CheckOutcome> {
    let table = t0_table(n, lam_max + 1)?;
    let q = q();
    let cases: Vec<(usize, Vec<i64>)> = partitions_in_box(n, 0, lam_max)
        .into_iter()
        .flat_map(|l| (1..=n).map(move |r| (r, l.parts().to_vec())))
        .collect();
    let res: Vec<_> = cases
        .par_iter()
        .flat_map(|(r, l)| {
            let p = &table[l];
            let a = hat_x_apply(*r, p, &q).and_then(|h| Ok((h, p.scale(&hat_x_eigenvalue(*r, l, &q)?))));
            let b = hat_dual_apply(*r, &table, l, &q).map(|h| (h, p.mul(&elementary(*r, n))));
            vec![(format!("Ĥ_{r} λ={l:?}"), a), (format!("Ĥ∨_{r} λ={l:?}"), b)]
        })
        .collect();
    let mut out = CheckOutcome::new(format!("dual-t0 n={n} λ1≤{lam_max}"));
    out.compare_all(res);
    Ok(out)
}

fn random_table(rng: &mut StdRng, n: usize, hi: i64, nvars: usize) -> Table<LaurentPoly<QRatio>> {
    let mut t = Table::new();
    for p in box_points(n, 0, hi) {
        let mut v = LaurentPoly::zero(nvars);
        for _ in 0..rng.gen_range(1..=3) {
            let e: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-2..=2)).collect();
            v.add_term(e, QRatio::int(rng.gen_range(-5..=5)));
        }
        t.insert(p, v);
    }
    t
}

/// Operator identities between the `t → 0` limits and the Toda forms on
/// random tables: `Ĥ_r(x) = q^{−r(r−1)/2} ℋ^∨_r(x)` and
/// `Ĥ^∨_r(q^λ) = Δ(q^λ) ℋ_r(q^{λ_{ℓ+1}+ϱ_{ℓ+1}}, …, q^{λ_1+ϱ_1}) Δ(q^λ)^{−1}`.
pub fn verify_operator_identities(n: usize, ntables: usize, seed: u64) -> Result<CheckOutcome> {
    let hi = 4;
    let q = q();
    let mut rng = StdRng::seed_from_u64(seed);
    let tables: Vec<_> = (0..ntables).map(|_| random_table(&mut rng, n, hi, n)).collect();
    let mut out = CheckOutcome::new(format!("limit-operator-identities n={n}"));
    for (ti, f) in tables.iter().enumerate() {
        let g: Table<LaurentPoly<QRatio>> = f
            .iter()
            .map(|(p, v)| {
                let w = if is_dominant(p) {
                    v.scale(&QRatio::one().div_exact(&QRatio::from(delta(p))).unwrap())
                } else {
                    LaurentPoly::zero(n)
                };
                (p.clone(), w)
            })
            .collect();
        for lam in box_points(n, 0, hi - 1) {
            for r in 1..=n {
                if (0..n).all(|i| (i + 1..n).all(|j| lam[i] != lam[j])) {
                    let v = hat_x_table_at(r, f, &lam, &q).and_then(|a| {
                        let b = toda_dual_lambda_at(r, f, &lam, &q)?;
                        let c = q.powi(-((r * (r - 1) / 2) as i64)).unwrap();
                        Ok((a, b.scale(&c)))
                    });
                    out.compare_all([(format!("table={ti} Ĥ_{r} λ={lam:?}"), v)]);
                }
                if is_dominant(&lam) {
                    let v = hat_dual_apply(r, f, &lam, &q).and_then(|a| {
                        let b = toda_dual_x_table_at(r, &g, &lam, &q)?.scale(&QRatio::from(delta(&lam)));
                        Ok((a, b))
                    });
                    out.compare_all([(format!("table={ti} Ĥ∨_{r} λ={lam:?}"), v)]);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for o in [
            verify_toda_eigen(2, -1, 3).unwrap(),
            verify_sl2_discrete(4).unwrap(),
            verify_fundamental_characters(3, &[-1, 0, 2]).unwrap(),
            verify_operator_identities(2, 3, 7).unwrap(),
        ] {
            assert!(o.passed(), "{o:?}");
            assert!(o.cases > 0);
        }
    }
}
