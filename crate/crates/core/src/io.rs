//! Text formats shared with the command-line tool.
//!
//! Documents are JSON. Rationals are always written as `"p/q"` strings in
//! lowest terms with `q > 0` (integers as `"p/1"`); on input a bare `"p"` is
//! accepted too. Big integers are decimal strings.
//!
//! An ideal document:
//!
//! ```json
//! {"n_vars": 2, "generators": [[{"coeff": "1/1", "exponents": [1, 0]}]]}
//! ```
//!
//! A biform document lists coefficients of `z̄^alpha z^beta`:
//!
//! ```json
//! {"n_vars": 2, "d": 1, "terms": [
//!   {"alpha": [1, 0], "beta": [0, 1], "coeff": {"re": "1/1", "im": "0/1"}}
//! ]}
//! ```
//!
//! Biform input is Hermitian-completed: an off-diagonal entry listed only as
//! `(alpha, beta)` also sets `(beta, alpha)` to its conjugate. Listing both is
//! allowed if they are conjugate; a pair listed twice in the same orientation
//! is rejected.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::hermitian::{biform_from_terms, HermitianBiform};
use crate::poly::{HomogPoly, Monomial};
use crate::scalar::Coefficient;
use crate::{Error, GaussianRational, Ideal, Rational, Result};

pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// `#[serde(with = "rational_str")]` for [`Rational`] fields.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// `#[serde(with = "decimal")]` for big integers, written as decimal strings.
pub mod decimal {
    use super::*;

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, T, D>(d: D) -> std::result::Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: String,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDoc {
    pub n_vars: usize,
    pub generators: Vec<Vec<TermDoc>>,
}

/// A file holding either one ideal or a list of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealFile {
    One(IdealDoc),
    Many(Vec<IdealDoc>),
}

impl IdealFile {
    pub fn into_docs(self) -> Vec<IdealDoc> {
        match self {
            IdealFile::One(d) => vec![d],
            IdealFile::Many(ds) => ds,
        }
    }
}

impl IdealDoc {
    pub fn from_ideal(ideal: &Ideal) -> Self {
        IdealDoc {
            n_vars: ideal.n_vars(),
            generators: ideal
                .generators()
                .iter()
                .map(|g| {
                    g.terms()
                        .map(|(m, c)| TermDoc {
                            coeff: format_rational(c),
                            exponents: m.0.clone(),
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Degree-0 generators are rejected: they would make the ideal the whole ring.
    pub fn to_ideal(&self) -> Result<Ideal> {
        let mut gens = Vec::with_capacity(self.generators.len());
        for (i, terms) in self.generators.iter().enumerate() {
            let Some(first) = terms.first() else {
                return Err(Error::Parse(format!("generator {i} has no terms")));
            };
            let degree: u32 = first.exponents.iter().sum();
            if degree == 0 {
                return Err(Error::Parse(format!("generator {i} has degree 0")));
            }
            let parsed = terms
                .iter()
                .map(|t| Ok((Monomial(t.exponents.clone()), parse_rational(&t.coeff)?)))
                .collect::<Result<Vec<_>>>()?;
            let g = HomogPoly::from_terms(self.n_vars, degree, parsed)?;
            if g.is_zero() {
                return Err(Error::Parse(format!("generator {i} is zero")));
            }
            gens.push(g);
        }
        Ideal::new(self.n_vars, gens)
    }
}

pub fn parse_ideals(text: &str) -> Result<Vec<Ideal>> {
    let file: IdealFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_docs().iter().map(IdealDoc::to_ideal).collect()
}

pub fn ideals_to_json(ideals: &[Ideal]) -> String {
    let docs: Vec<IdealDoc> = ideals.iter().map(IdealDoc::from_ideal).collect();
    serde_json::to_string_pretty(&docs).expect("documents serialize")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussDoc {
    pub re: String,
    #[serde(default = "zero_string")]
    pub im: String,
}

fn zero_string() -> String {
    "0/1".into()
}

impl GaussDoc {
    pub fn from_value(z: &GaussianRational) -> Self {
        GaussDoc {
            re: format_rational(&z.re),
            im: format_rational(&z.im),
        }
    }

    pub fn value(&self) -> Result<GaussianRational> {
        Ok(GaussianRational::new(
            parse_rational(&self.re)?,
            parse_rational(&self.im)?,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiformTermDoc {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub coeff: GaussDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiformDoc {
    pub n_vars: usize,
    pub d: u32,
    pub terms: Vec<BiformTermDoc>,
}

impl BiformDoc {
    /// Every nonzero entry, both orientations included.
    pub fn from_biform(f: &HermitianBiform) -> Self {
        BiformDoc {
            n_vars: f.n_vars(),
            d: f.half_degree(),
            terms: f
                .entries()
                .into_iter()
                .map(|(a, b, c)| BiformTermDoc {
                    alpha: a.0,
                    beta: b.0,
                    coeff: GaussDoc::from_value(&c),
                })
                .collect(),
        }
    }

    pub fn to_biform(&self) -> Result<HermitianBiform> {
        if self.n_vars == 0 {
            return Err(Error::Parse("n_vars must be positive".into()));
        }
        let mut listed: BTreeMap<(Vec<u32>, Vec<u32>), GaussianRational> = BTreeMap::new();
        for t in &self.terms {
            for e in [&t.alpha, &t.beta] {
                if e.len() != self.n_vars || e.iter().sum::<u32>() != self.d {
                    return Err(Error::Parse(format!(
                        "exponent {e:?} is not a degree-{} monomial in {} variables",
                        self.d, self.n_vars
                    )));
                }
            }
            if listed
                .insert((t.alpha.clone(), t.beta.clone()), t.coeff.value()?)
                .is_some()
            {
                return Err(Error::Parse(format!(
                    "entry ({:?}, {:?}) listed twice",
                    t.alpha, t.beta
                )));
            }
        }
        let mut completed = listed.clone();
        for ((a, b), c) in &listed {
            if a != b && !listed.contains_key(&(b.clone(), a.clone())) {
                completed.insert((b.clone(), a.clone()), Coefficient::conj(c));
            }
        }
        let terms: Vec<_> = completed
            .into_iter()
            .map(|((a, b), c)| (Monomial(a), Monomial(b), c))
            .collect();
        biform_from_terms(self.n_vars, self.d, &terms)
    }
}

pub fn parse_biform(text: &str) -> Result<HermitianBiform> {
    let doc: BiformDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_biform()
}

pub fn biform_to_json(f: &HermitianBiform) -> String {
    serde_json::to_string_pretty(&BiformDoc::from_biform(f)).expect("documents serialize")
}

/// `"-3/2"`-style rendering that drops the denominator for integers, for
/// human-readable output only.
pub fn display_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-{}/{}", r.numer().abs(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;
    use proptest::prelude::*;

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&rational(6, -4)), "-3/2");
        assert_eq!(format_rational(&rational(3, 1)), "3/1");
        assert_eq!(parse_rational("7").unwrap(), rational(7, 1));
        assert_eq!(parse_rational(" -6/4 ").unwrap(), rational(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    proptest! {
        #[test]
        fn rational_round_trip(n in any::<i64>(), d in 1i64..i64::MAX) {
            let r = rational(n, d);
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }

    #[test]
    fn ideal_document_round_trip() {
        let text = r#"{"n_vars": 2, "generators": [[{"coeff": "1/2", "exponents": [1, 1]}, {"coeff": "-3", "exponents": [0, 2]}], [{"coeff": "1", "exponents": [1, 0]}]]}"#;
        let ideals = parse_ideals(text).unwrap();
        assert_eq!(ideals.len(), 1);
        let back = parse_ideals(&ideals_to_json(&ideals)).unwrap();
        assert_eq!(back, ideals);
    }

    #[test]
    fn ideal_document_errors() {
        assert!(parse_ideals(r#"{"n_vars": 2, "generators": [[{"coeff": "1", "exponents": [0, 0]}]]}"#).is_err());
        assert!(parse_ideals(r#"{"n_vars": 2, "generators": [[{"coeff": "1", "exponents": [1, 0]}, {"coeff": "1", "exponents": [2, 0]}]]}"#).is_err());
        assert!(parse_ideals(r#"{"n_vars": 2, "generators": [[{"coeff": "1", "exponents": [1]}]]}"#).is_err());
        assert!(parse_ideals(r#"{"n_vars": 2, "generators": [[{"coeff": "1", "exponents": [1, 0]}, {"coeff": "-1", "exponents": [1, 0]}]]}"#).is_err());
        assert!(parse_ideals("not json").is_err());
    }

    #[test]
    fn biform_completion() {
        let text = r#"{"n_vars": 2, "d": 1, "terms": [
            {"alpha": [1, 0], "beta": [0, 1], "coeff": {"re": "1", "im": "2"}},
            {"alpha": [1, 0], "beta": [1, 0], "coeff": {"re": "3"}}
        ]}"#;
        let f = parse_biform(text).unwrap();
        let m = f.matrix();
        assert_eq!(m[1][0], GaussianRational::new(rational(1, 1), rational(-2, 1)));
        assert_eq!(parse_biform(&biform_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn biform_errors() {
        let inconsistent = r#"{"n_vars": 2, "d": 1, "terms": [
            {"alpha": [1, 0], "beta": [0, 1], "coeff": {"re": "1", "im": "0"}},
            {"alpha": [0, 1], "beta": [1, 0], "coeff": {"re": "2", "im": "0"}}
        ]}"#;
        assert!(matches!(parse_biform(inconsistent), Err(Error::NotHermitian(..))));
        let duplicate = r#"{"n_vars": 2, "d": 1, "terms": [
            {"alpha": [1, 0], "beta": [1, 0], "coeff": {"re": "1"}},
            {"alpha": [1, 0], "beta": [1, 0], "coeff": {"re": "1"}}
        ]}"#;
        assert!(parse_biform(duplicate).is_err());
        let wrong_degree =
            r#"{"n_vars": 2, "d": 1, "terms": [{"alpha": [2, 0], "beta": [1, 1], "coeff": {"re": "1"}}]}"#;
        assert!(parse_biform(wrong_degree).is_err());
    }
}
