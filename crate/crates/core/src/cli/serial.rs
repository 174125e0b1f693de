//! Canonical JSON for Laurent polynomials.
//!
//! `{"vars": [...], "terms": [{"exp": [...], "coeff": {"s_terms": [[k, num, den], ...]}}]}`
//! with terms in decreasing lexicographic exponent order (`z1` before `z2`)
//! and `s = q^{1/2}`. Rational function coefficients add `"den_s_terms"`
//! for a non-trivial denominator. Integers that do not fit in 64 bits are
//! written as decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::corealg::{LaurentPoly, QLaurent, QRatio, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInt {
    fn from(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(n.to_string()),
        }
    }
}

impl JsonInt {
    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(*v)),
            JsonInt::Big(s) => s.parse().map_err(|_| Error::InvalidInput(format!("bad integer {s:?}"))),
        }
    }
}

pub type STerm = (i64, JsonInt, JsonInt);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub s_terms: Vec<STerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub den_s_terms: Option<Vec<STerm>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i64>,
    pub coeff: CoeffJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

fn s_terms(l: &QLaurent) -> Vec<STerm> {
    l.terms().map(|(k, c)| (k, c.numer().into(), c.denom().into())).collect()
}

fn from_s_terms(t: &[STerm]) -> Result<QLaurent> {
    let mut out = Vec::with_capacity(t.len());
    for (k, n, d) in t {
        let d = d.to_bigint()?;
        if d == BigInt::from(0) {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        out.push((*k, Rational::new(n.to_bigint()?, d)));
    }
    Ok(QLaurent::from_terms(out))
}

/// Coefficient types with a canonical JSON form.
pub trait SerialCoeff: Ring {
    fn to_json(&self) -> CoeffJson;
    fn from_json(c: &CoeffJson) -> Result<Self>;
}

impl SerialCoeff for QLaurent {
    fn to_json(&self) -> CoeffJson {
        CoeffJson { s_terms: s_terms(self), den_s_terms: None }
    }
    fn from_json(c: &CoeffJson) -> Result<Self> {
        let num = from_s_terms(&c.s_terms)?;
        match &c.den_s_terms {
            None => Ok(num),
            Some(d) => num
                .div_exact(&from_s_terms(d)?)
                .ok_or_else(|| Error::InvalidInput("coefficient is not a Laurent polynomial".into())),
        }
    }
}

impl SerialCoeff for Rational {
    fn to_json(&self) -> CoeffJson {
        QLaurent::constant(self.clone()).to_json()
    }
    fn from_json(c: &CoeffJson) -> Result<Self> {
        QLaurent::from_json(c)?.as_constant().ok_or_else(|| Error::InvalidInput("coefficient depends on q".into()))
    }
}

impl SerialCoeff for QRatio {
    fn to_json(&self) -> CoeffJson {
        let den = (!self.den().is_one()).then(|| s_terms(self.den()));
        CoeffJson { s_terms: s_terms(self.num()), den_s_terms: den }
    }
    fn from_json(c: &CoeffJson) -> Result<Self> {
        let num = from_s_terms(&c.s_terms)?;
        let den = match &c.den_s_terms {
            None => QLaurent::one(),
            Some(d) => from_s_terms(d)?,
        };
        QRatio::new(num, den).ok_or_else(|| Error::InvalidInput("zero denominator".into()))
    }
}

pub fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn to_poly_json<C: SerialCoeff>(p: &LaurentPoly<C>, prefix: &str) -> PolyJson {
    PolyJson {
        vars: var_names(prefix, p.nvars()),
        terms: {
            let mut t: Vec<TermJson> =
                p.terms().map(|(e, c)| TermJson { exp: e.clone(), coeff: c.to_json() }).collect();
            t.reverse();
            t
        },
    }
}

/// Canonical text of a polynomial in variables `z1, z2, …`.
pub fn serialize<C: SerialCoeff>(p: &LaurentPoly<C>) -> String {
    serialize_with(p, "z")
}

pub fn serialize_with<C: SerialCoeff>(p: &LaurentPoly<C>, prefix: &str) -> String {
    serde_json::to_string(&to_poly_json(p, prefix)).expect("plain data serializes")
}

/// Canonical text of a scalar, as a constant polynomial in no variables.
pub fn serialize_scalar<C: SerialCoeff>(c: &C) -> String {
    serialize(&LaurentPoly::constant(0, c.clone()))
}

pub fn parse<C: SerialCoeff>(text: &str) -> Result<LaurentPoly<C>> {
    let j: PolyJson = serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    let n = j.vars.len();
    let mut out = LaurentPoly::zero(n);
    for t in &j.terms {
        if t.exp.len() != n {
            return Err(Error::InvalidInput(format!("exponent {:?} does not match {n} variables", t.exp)));
        }
        out.add_term(t.exp.clone(), C::from_json(&t.coeff)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_one() {
        let one = LaurentPoly::<QLaurent>::one(0);
        assert_eq!(serialize(&one), r#"{"vars":[],"terms":[{"exp":[],"coeff":{"s_terms":[[0,1,1]]}}]}"#);
    }

    #[test]
    fn lexicographic_terms() {
        let p = LaurentPoly::from_terms(2, [(vec![0, 1], Rational::one()), (vec![1, 0], Rational::one())]);
        let j = to_poly_json(&p, "z");
        assert_eq!(j.terms[0].exp, vec![1, 0]);
        assert_eq!(j.vars, vec!["z1", "z2"]);
        assert_eq!(parse::<Rational>(&serialize(&p)).unwrap(), p);
    }

    #[test]
    fn s_exponents() {
        let c = QLaurent::one_minus_q_pow(1);
        let p = LaurentPoly::monomial(vec![1], c);
        assert!(serialize(&p).contains(r#""s_terms":[[0,1,1],[2,-1,1]]"#));
    }

    #[test]
    fn ratio_round_trip() {
        let r = QRatio::one().div_exact(&QRatio::from(QLaurent::one_minus_q_pow(2))).unwrap();
        let p = LaurentPoly::monomial(vec![2, -1], r);
        let text = serialize(&p);
        assert!(text.contains("den_s_terms"));
        assert_eq!(parse::<QRatio>(&text).unwrap(), p);
    }
}
