//! Canonical JSON form of a polynomial.
//!
//! ```json
//! {"nvars": 2, "terms": [{"exp": [0, 0], "num": "1", "den": "1"}, ...]}
//! ```
//!
//! Terms are written in ascending graded-lexicographic order. Reading accepts
//! any term order, unreduced fractions and repeated monomials; writing always
//! produces the canonical form.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{AlgebraError, ExactScalar, MultiPoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

impl From<&MultiPoly> for PolyJson {
    fn from(p: &MultiPoly) -> Self {
        PolyJson {
            nvars: p.nvars(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    exp: m.exponents().to_vec(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for MultiPoly {
    type Error = AlgebraError;

    fn try_from(value: PolyJson) -> Result<Self, Self::Error> {
        if value.nvars == 0 {
            return Err(AlgebraError::Json("nvars must be positive".into()));
        }
        let terms = value
            .terms
            .into_iter()
            .map(|t| {
                let num: BigInt = t
                    .num
                    .trim()
                    .parse()
                    .map_err(|_| AlgebraError::Json(format!("bad numerator {:?}", t.num)))?;
                let den: BigInt = t
                    .den
                    .trim()
                    .parse()
                    .map_err(|_| AlgebraError::Json(format!("bad denominator {:?}", t.den)))?;
                if !den.is_positive() {
                    return Err(AlgebraError::Json(format!(
                        "denominator must be positive, got {}",
                        t.den
                    )));
                }
                Ok((t.exp, ExactScalar::new(num, den)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MultiPoly::from_terms(value.nvars, terms)
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        MultiPoly::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl MultiPoly {
    pub fn from_json_str(s: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(s).map_err(|e| AlgebraError::Json(e.to_string()))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("polynomial JSON is always serializable")
    }
}

/// Parses `"3"`, `"-1/2"` or `"0.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<ExactScalar, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Json(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(ExactScalar::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let q = ExactScalar::new(n, d);
        return Ok(if negative { -q } else { q });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(ExactScalar::from_integer(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn canonical_form_sorts_and_reduces() {
        let raw = r#"{"nvars": 1, "terms": [
            {"exp": [2], "num": "2", "den": "8"},
            {"exp": [0], "num": "1", "den": "1"},
            {"exp": [1], "num": "1", "den": "1"}
        ]}"#;
        let p = MultiPoly::from_json_str(raw).unwrap();
        assert_eq!(
            p.to_json_string(),
            r#"{"nvars":1,"terms":[{"exp":[0],"num":"1","den":"1"},{"exp":[1],"num":"1","den":"1"},{"exp":[2],"num":"1","den":"4"}]}"#
        );
    }

    #[test]
    fn rejects_malformed_input() {
        for raw in [
            r#"{"nvars": 0, "terms": []}"#,
            r#"{"nvars": 1, "terms": [{"exp": [0, 1], "num": "1", "den": "1"}]}"#,
            r#"{"nvars": 1, "terms": [{"exp": [0], "num": "1", "den": "0"}]}"#,
            r#"{"nvars": 1, "terms": [{"exp": [0], "num": "x", "den": "1"}]}"#,
            r#"{"nvars": 1}"#,
        ] {
            assert!(MultiPoly::from_json_str(raw).is_err(), "{raw}");
        }
    }

    #[test]
    fn repeated_monomials_cancel() {
        let raw = r#"{"nvars": 1, "terms": [
            {"exp": [1], "num": "1", "den": "2"},
            {"exp": [1], "num": "-1", "den": "2"}
        ]}"#;
        assert!(MultiPoly::from_json_str(raw).unwrap().is_zero());
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("1.5").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }
}
