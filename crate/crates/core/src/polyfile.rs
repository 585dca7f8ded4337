//! JSON polynomial files:
//! `{"n": 75, "engine": "compressed", "family": "PSquaredQ", "coeffs": {"10": "1", "21": "4"}}`.
//!
//! Coefficients are decimal strings so they survive any JSON reader; exponents
//! are written in ascending numeric order.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::DomPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolynomialFile {
    pub n: Option<u64>,
    pub engine: Option<String>,
    pub family: Option<String>,
    pub polynomial: DomPolynomial,
}

struct Coeffs<'a>(&'a DomPolynomial);

impl Serialize for Coeffs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (e, c) in self.0.terms() {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct Wire<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    engine: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<&'a str>,
    coeffs: Coeffs<'a>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    n: Option<u64>,
    engine: Option<String>,
    family: Option<String>,
    coeffs: BTreeMap<String, serde_json::Value>,
}

fn parse_coeff(exp: &str, v: &serde_json::Value) -> Result<BigUint> {
    let text = match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Number(n) if n.is_u64() => n.to_string(),
        other => {
            return Err(Error::Parse(format!(
                "coefficient of x^{exp} is not a decimal string: {other}"
            )))
        }
    };
    let c: BigUint = text.parse().map_err(|_| {
        Error::Parse(format!(
            "coefficient of x^{exp} is not a decimal integer: {text:?}"
        ))
    })?;
    if c.is_zero() {
        return Err(Error::Parse(format!(
            "coefficient of x^{exp} must be positive"
        )));
    }
    Ok(c)
}

impl PolynomialFile {
    pub fn new(polynomial: DomPolynomial) -> Self {
        Self {
            polynomial,
            ..Self::default()
        }
    }

    pub fn to_json(&self) -> String {
        let wire = Wire {
            n: self.n,
            engine: self.engine.as_deref(),
            family: self.family.as_deref(),
            coeffs: Coeffs(&self.polynomial),
        };
        serde_json::to_string_pretty(&wire).expect("serializable")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut terms: BTreeMap<usize, BigUint> = BTreeMap::new();
        for (key, value) in &raw.coeffs {
            let e: usize = key.parse().map_err(|_| {
                Error::Parse(format!("exponent {key:?} is not a nonnegative integer"))
            })?;
            let c = parse_coeff(key, value)?;
            if terms.insert(e, c).is_some() {
                return Err(Error::Parse(format!("exponent {e} appears more than once")));
            }
        }
        Ok(Self {
            n: raw.n,
            engine: raw.engine,
            family: raw.family,
            polynomial: DomPolynomial::from_terms(terms),
        })
    }
}
