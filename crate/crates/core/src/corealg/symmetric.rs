//! Monomial, power-sum and elementary symmetric polynomials.

use super::partition::Partition;
use super::poly::LaurentPoly;
use super::ring::Ring;

/// Distinct permutations of `v` in lexicographic order.
pub fn distinct_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut cur = v.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

/// `m_λ` in `nvars` variables: each distinct rearrangement once.
/// Zero if λ has more than `nvars` nonzero parts.
pub fn monomial_symmetric<C: Ring>(lambda: &Partition, nvars: usize) -> LaurentPoly<C> {
    let Some(l) = lambda.padded(nvars) else {
        return LaurentPoly::zero(nvars);
    };
    LaurentPoly::from_terms(nvars, distinct_permutations(l.parts()).into_iter().map(|e| (e, C::one())))
}

/// `π_n = Σ_k x_k^n`.
pub fn power_sum_single<C: Ring>(n: i64, nvars: usize) -> LaurentPoly<C> {
    let mut p = LaurentPoly::zero(nvars);
    for k in 0..nvars {
        let mut e = vec![0; nvars];
        e[k] = n;
        p.add_term(e, C::one());
    }
    p
}

/// `π_λ = ∏ π_{λ_i}` over nonzero parts.
pub fn power_sum<C: Ring>(lambda: &Partition, nvars: usize) -> LaurentPoly<C> {
    lambda
        .parts()
        .iter()
        .filter(|&&p| p != 0)
        .fold(LaurentPoly::one(nvars), |acc, &p| acc.mul(&power_sum_single(p, nvars)))
}

/// Elementary symmetric polynomial `e_r`.
pub fn elementary<C: Ring>(r: usize, nvars: usize) -> LaurentPoly<C> {
    if r > nvars {
        return LaurentPoly::zero(nvars);
    }
    let mut v = vec![0; nvars - r];
    v.extend(std::iter::repeat_n(1, r));
    LaurentPoly::from_terms(nvars, distinct_permutations(&v).into_iter().map(|e| (e, C::one())))
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r <= n {
        rec(0, n, r, &mut Vec::new(), &mut out);
    }
    out
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let v: Vec<i64> = (0..n as i64).collect();
    distinct_permutations(&v).into_iter().map(|p| p.into_iter().map(|x| x as usize).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corealg::Rational;

    type P = LaurentPoly<Rational>;

    fn part(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn monomials() {
        let m11: P = monomial_symmetric(&part(&[1, 1]), 2);
        assert_eq!(m11, P::monomial(vec![1, 1], Rational::from_integer(1.into())));
        let m21: P = monomial_symmetric(&part(&[2, 1]), 2);
        assert_eq!(m21.len(), 2);
        let m10: P = monomial_symmetric(&part(&[1, 0]), 2);
        assert_eq!(m10, P::var(2, 0).add(&P::var(2, 1)));
    }

    #[test]
    fn power_sums() {
        let p11: P = power_sum(&part(&[1, 1]), 2);
        let s = P::var(2, 0).add(&P::var(2, 1));
        assert_eq!(p11, s.mul(&s));
        let empty: P = power_sum(&part(&[]), 3);
        assert_eq!(empty, P::one(3));
    }

    #[test]
    fn elementary_counts() {
        let e2: P = elementary(2, 4);
        assert_eq!(e2.len(), 6);
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(permutations(3).len(), 6);
    }
}
