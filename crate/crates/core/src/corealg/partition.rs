//! Partitions and generalized (possibly negative) partitions.

use std::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing integer vector; entries may be negative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn zeros(n: usize) -> Self {
        Partition(vec![0; n])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&p| p != 0).count()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&p| p >= 0)
    }

    /// Drop trailing zeros.
    pub fn trimmed(&self) -> Self {
        let mut v = self.0.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        Partition(v)
    }

    /// Pad with zeros to `n` entries; `None` if more than `n` nonzero parts.
    pub fn padded(&self, n: usize) -> Option<Self> {
        let t = self.trimmed();
        if t.0.len() > n {
            return None;
        }
        let mut v = t.0;
        v.resize(n, 0);
        Some(Partition(v))
    }

    /// `λ + k·(1,…,1)`.
    pub fn shifted(&self, k: i64) -> Self {
        Partition(self.0.iter().map(|p| p + k).collect())
    }

    /// Dominance `self ≥ other` for equal weights; shorter vectors are
    /// padded with zeros.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let n = self.0.len().max(other.0.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..n {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicities `m_n = #{k : λ_k = n}` of the positive parts.
    pub fn multiplicities(&self) -> Vec<(i64, usize)> {
        let mut out: Vec<(i64, usize)> = Vec::new();
        for &p in self.0.iter().filter(|&&p| p > 0) {
            match out.iter_mut().find(|(v, _)| *v == p) {
                Some(e) => e.1 += 1,
                None => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `d` with positive parts (trimmed), at most `maxlen` parts,
/// in lexicographically decreasing order.
pub fn partitions_of(d: i64, maxlen: Option<usize>) -> Vec<Partition> {
    fn rec(d: i64, maxpart: i64, left: Option<usize>, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if d == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if left == Some(0) {
            return;
        }
        for first in (1..=d.min(maxpart)).rev() {
            cur.push(first);
            rec(d - first, first, left.map(|l| l - 1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d >= 0 {
        rec(d, d, maxlen, &mut Vec::new(), &mut out);
    }
    out
}

/// Weakly decreasing vectors of length `n` with entries in `[lo, hi]`.
pub fn partitions_in_box(n: usize, lo: i64, hi: i64) -> Vec<Partition> {
    fn rec(n: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if cur.len() == n {
            out.push(Partition(cur.clone()));
            return;
        }
        let top = cur.last().copied().unwrap_or(hi);
        for v in (lo..=top).rev() {
            cur.push(v);
            rec(n, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, lo, hi, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(partitions_of(4, None).len(), 5);
        assert_eq!(partitions_of(6, Some(3)).len(), 7);
        assert_eq!(partitions_of(0, None), vec![Partition(vec![])]);
    }

    #[test]
    fn dominance() {
        let a = Partition::new(vec![3, 1]).unwrap();
        let b = Partition::new(vec![2, 2]).unwrap();
        let c = Partition::new(vec![2, 1, 1]).unwrap();
        assert!(a.dominates(&b) && b.dominates(&c) && a.dominates(&c));
        assert!(!c.dominates(&a));
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![0, 1]).is_err());
    }
}
