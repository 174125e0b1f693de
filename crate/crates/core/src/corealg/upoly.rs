//! Dense univariate polynomials over ℚ, lowest degree first.
//!
//! Internal helper for `QLaurent` division and the gcd normalization of
//! `QRatio`. A polynomial is canonical when its last coefficient is nonzero;
//! the zero polynomial is the empty vector.

use num_traits::{One, Zero};

use super::Rational;

pub(crate) fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(out)
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub(crate) fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let lead = b.last().unwrap();
    let lead_is_one = lead.is_one();
    let mut r = a.to_vec();
    let mut q = vec![Rational::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &r[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let c = if lead_is_one { top.clone() } else { top / lead };
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                r[k + j] -= &c * bj;
            }
        }
        q[k] = c;
    }
    r.truncate(b.len() - 1);
    (trim(q), trim(r))
}

pub(crate) fn monic(p: Vec<Rational>) -> Vec<Rational> {
    match p.last() {
        None => p,
        Some(l) if l.is_one() => p,
        Some(l) => {
            let inv = Rational::one() / l;
            p.into_iter().map(|c| c * &inv).collect()
        }
    }
}

/// Monic greatest common divisor.
pub(crate) fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    if a.is_empty() {
        return monic(b);
    }
    if b.is_empty() {
        return monic(a);
    }
    if a.len() == 1 || b.len() == 1 {
        return vec![Rational::one()];
    }
    let g = modular::gcd(&modular::primitive(&a), &modular::primitive(&b));
    monic(g.into_iter().map(Rational::from_integer).collect())
}

/// Brown's modular gcd for primitive integer polynomials.
mod modular {
    use std::sync::OnceLock;

    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, ToPrimitive, Zero};

    use super::{divrem, Rational};

    /// Primitive integer multiple of a rational polynomial.
    pub(super) fn primitive(p: &[Rational]) -> Vec<BigInt> {
        let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &content).collect()
    }

    fn primes() -> &'static [u64] {
        static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
        PRIMES.get_or_init(|| {
            let is_prime = |n: u64| {
                !n.is_multiple_of(2) && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
            };
            (1u64 << 31..1u64 << 32).rev().filter(|&n| is_prime(n)).take(256).collect()
        })
    }

    fn modp(x: &BigInt, p: u64) -> u64 {
        x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
    }

    fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        pow_mod(a, p - 2, p)
    }

    fn trim_p(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    fn monic_p(v: Vec<u64>, p: u64) -> Vec<u64> {
        let inv = inv_mod(*v.last().unwrap(), p);
        v.into_iter().map(|c| c * inv % p).collect()
    }

    fn rem_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        let inv = inv_mod(*b.last().unwrap(), p);
        while r.len() >= b.len() {
            let c = r.last().unwrap() * inv % p;
            let shift = r.len() - b.len();
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - c * bj % p) % p;
            }
            r = trim_p(r);
            if r.is_empty() {
                break;
            }
        }
        r
    }

    fn gcd_p(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
        let (mut x, mut y) = (a, b);
        while !y.is_empty() {
            let r = rem_p(&x, &y, p);
            x = y;
            y = r;
        }
        monic_p(x, p)
    }

    fn divides(g: &[BigInt], a: &[BigInt]) -> bool {
        let gq: Vec<Rational> = g.iter().cloned().map(Rational::from_integer).collect();
        let aq: Vec<Rational> = a.iter().cloned().map(Rational::from_integer).collect();
        divrem(&aq, &gq).1.is_empty()
    }

    pub(super) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let gamma = a.last().unwrap().gcd(b.last().unwrap());
        let mut acc: Option<(Vec<BigInt>, BigInt)> = None;
        for &p in primes() {
            let g = modp(&gamma, p);
            if g == 0 || modp(a.last().unwrap(), p) == 0 || modp(b.last().unwrap(), p) == 0 {
                continue;
            }
            let ap: Vec<u64> = a.iter().map(|c| modp(c, p)).collect();
            let bp: Vec<u64> = b.iter().map(|c| modp(c, p)).collect();
            let gp = gcd_p(ap, bp, p);
            if gp.len() == 1 {
                return vec![BigInt::one()];
            }
            let gp: Vec<u64> = gp.into_iter().map(|c| c * g % p).collect();
            let next = match acc.take() {
                Some((h, m)) if h.len() == gp.len() => {
                    // CRT: x ≡ h (mod m), x ≡ gp (mod p)
                    let pb = BigInt::from(p);
                    let minv = BigInt::from(inv_mod(modp(&m, p), p));
                    let h2: Vec<BigInt> = h
                        .iter()
                        .zip(&gp)
                        .map(|(hc, &gc)| {
                            let t = ((BigInt::from(gc) - hc) * &minv).mod_floor(&pb);
                            hc + &m * t
                        })
                        .collect();
                    let m2 = &m * pb;
                    let cand = symmetric_primitive(&h2, &m2);
                    if cand == symmetric_primitive(&h, &m) && divides(&cand, a) && divides(&cand, b) {
                        return cand;
                    }
                    (h2, m2)
                }
                Some((h, m)) if h.len() < gp.len() => (h, m),
                _ => (gp.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(p)),
            };
            acc = Some(next);
        }
        panic!("modular gcd did not converge");
    }

    fn symmetric_primitive(h: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        let half: BigInt = m / 2;
        let v: Vec<BigInt> = h.iter().map(|c| if c > &half { c - m } else { c.clone() }).collect();
        let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let v: Vec<BigInt> = v.into_iter().map(|c| c / &content).collect();
        if v.last().unwrap().is_negative() {
            v.into_iter().map(|c| -c).collect()
        } else {
            v
        }
    }
}

pub(crate) fn is_one(p: &[Rational]) -> bool {
    p.len() == 1 && p[0].is_one()
}
