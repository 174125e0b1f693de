//! Gelfand–Zetlin patterns.

use super::partition::Partition;

/// Triangular array `rows[k-1] = (p_{k,1},…,p_{k,k})`, `k = 1..=n`, with
/// `p_{k+1,i} ≥ p_{k,i} ≥ p_{k+1,i+1}`. The last row is the top row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GZPattern {
    pub rows: Vec<Vec<i64>>,
}

impl GZPattern {
    pub fn top(&self) -> &[i64] {
        self.rows.last().map(|r| r.as_slice()).unwrap_or(&[])
    }

    pub fn is_valid(&self) -> bool {
        self.rows.iter().enumerate().all(|(k, r)| r.len() == k + 1)
            && self.rows.windows(2).all(|w| {
                let (lower, upper) = (&w[0], &w[1]);
                lower.iter().enumerate().all(|(i, &p)| upper[i] >= p && p >= upper[i + 1])
            })
    }
}

/// Rows `r` of length `n-1` interlacing `top`: `top[i] ≥ r[i] ≥ top[i+1]`,
/// in lexicographically increasing order.
pub fn interlacing_rows(top: &[i64]) -> Vec<Vec<i64>> {
    let n = top.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n - 1);
    fn rec(top: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let i = cur.len();
        if i + 1 == top.len() {
            out.push(cur.clone());
            return;
        }
        for v in top[i + 1]..=top[i] {
            cur.push(v);
            rec(top, cur, out);
            cur.pop();
        }
    }
    rec(top, &mut cur, &mut out);
    out
}

/// Every pattern with the given top row, exactly once, in a deterministic
/// order. A non-decreasing top row yields nothing.
pub fn enumerate_gz(top: &Partition) -> Vec<GZPattern> {
    let top = top.parts().to_vec();
    if top.windows(2).any(|w| w[0] < w[1]) {
        return Vec::new();
    }
    let mut out = Vec::new();
    fn rec(rows_above: Vec<Vec<i64>>, out: &mut Vec<GZPattern>) {
        let last = rows_above.last().unwrap();
        if last.len() <= 1 {
            let mut rows = rows_above.clone();
            rows.reverse();
            out.push(GZPattern { rows });
            return;
        }
        for r in interlacing_rows(last) {
            let mut next = rows_above.clone();
            next.push(r);
            rec(next, out);
        }
    }
    if top.is_empty() {
        out.push(GZPattern { rows: Vec::new() });
    } else {
        rec(vec![top], &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_gz(&p(&[1, 0])).len(), 2);
        assert_eq!(enumerate_gz(&p(&[2, 0])).len(), 3);
        assert_eq!(enumerate_gz(&p(&[2, 1, 0])).len(), 8);
    }

    #[test]
    fn patterns_are_valid_and_distinct() {
        let pats = enumerate_gz(&p(&[3, 1, 0]));
        assert!(pats.iter().all(|g| g.is_valid() && g.top() == [3, 1, 0]));
        let set: std::collections::BTreeSet<_> = pats.iter().collect();
        assert_eq!(set.len(), pats.len());
    }
}
