//! JSON forms of ideals, monomials and witnesses.
//!
//! ```text
//! {"dim":2,"form":"sum","terms":[{"alpha":["2","3/2"],"eps":[1,0]}]}
//! {"dim":2,"form":"intersection","terms":[{"alpha":["inf","3"],"eps":[0,1]}]}
//! {"dim":2,"form":"gens","terms":[["1","0"],["0","1/2"]]}
//! {"point":[{"v":"2","open":true},{"v":"0","open":false}]}
//! ```
//!
//! Output is compact, with fields in the order shown. `inf` encodes infinity.

use serde::{Deserialize, Serialize};

use crate::decomposition::Witness;
use crate::error::Error;
use crate::exponent::{format_rational, parse_rational, ExtExp, Flag, Ray};
use crate::ideal::{AfgIdeal, BoxIdeal, Decomposition, FiniteGeneratorSet, IrreducibleIdeal};
use crate::monomial::Monomial;

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("form \"{form}\" does not accept this term: {detail}")]
    Term { form: String, detail: String },
    #[error(transparent)]
    Invalid(#[from] Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Form {
    Sum,
    Intersection,
    Gens,
}

#[derive(Debug, Serialize, Deserialize)]
struct RayTerm {
    alpha: Vec<String>,
    eps: Vec<u8>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Term {
    Rays(RayTerm),
    Exps(Vec<String>),
}

#[derive(Debug, Serialize, Deserialize)]
struct Document {
    dim: usize,
    form: Form,
    terms: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
struct PointCoord {
    v: String,
    open: bool,
}

#[derive(Serialize, Deserialize)]
struct WitnessDocument {
    point: Vec<PointCoord>,
}

/// An ideal read from JSON, in the form it was written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JsonIdeal {
    Sum(AfgIdeal),
    Intersection(Decomposition),
    Gens(FiniteGeneratorSet),
}

fn ray_term(rays: &[Ray]) -> Term {
    Term::Rays(RayTerm {
        alpha: rays.iter().map(|r| r.alpha.to_string()).collect(),
        eps: rays.iter().map(|r| r.eps.bit()).collect(),
    })
}

fn to_string(doc: &Document) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}

pub fn sum_to_json(a: &AfgIdeal) -> String {
    to_string(&Document { dim: a.dim(), form: Form::Sum, terms: a.boxes().iter().map(|b| ray_term(b.rays())).collect() })
}

pub fn intersection_to_json(d: &Decomposition) -> String {
    let terms = d.components().iter().map(|j| ray_term(j.rays())).collect();
    to_string(&Document { dim: d.dim(), form: Form::Intersection, terms })
}

pub fn gens_to_json(s: &FiniteGeneratorSet) -> String {
    let terms = s.gens().iter().map(|m| Term::Exps(m.exps().iter().map(format_rational).collect())).collect();
    to_string(&Document { dim: s.dim(), form: Form::Gens, terms })
}

/// `["3/2","0"]`
pub fn monomial_to_json(m: &Monomial) -> String {
    let exps: Vec<String> = m.exps().iter().map(format_rational).collect();
    serde_json::to_string(&exps).expect("strings serialize")
}

pub fn monomial_from_json(text: &str) -> Result<Monomial, JsonError> {
    let exps: Vec<String> = serde_json::from_str(text)?;
    Ok(exps_to_monomial("monomial", &exps)?)
}

pub fn witness_to_json(w: &Witness) -> String {
    let point = w.point.iter().map(|c| PointCoord { v: format_rational(&c.base), open: c.is_open() }).collect();
    serde_json::to_string(&WitnessDocument { point }).expect("witness serializes")
}

fn exps_to_monomial(form: &str, exps: &[String]) -> Result<Monomial, JsonError> {
    let parsed: Option<Vec<_>> = exps.iter().map(|e| parse_rational(e)).collect();
    let exps = parsed.ok_or_else(|| JsonError::Term { form: form.into(), detail: format!("bad exponent in {exps:?}") })?;
    Ok(Monomial::new(exps)?)
}

fn term_rays(form: &str, term: &RayTerm) -> Result<Vec<Ray>, JsonError> {
    if term.alpha.len() != term.eps.len() {
        return Err(Error::DimensionMismatch { expected: term.alpha.len(), found: term.eps.len() }.into());
    }
    term.alpha
        .iter()
        .zip(&term.eps)
        .map(|(a, &e)| {
            let alpha: ExtExp = a.parse()?;
            let eps = Flag::from_bit(e).ok_or(Error::InvalidFlag(e))?;
            Ok(Ray::new(alpha, eps))
        })
        .collect::<Result<_, Error>>()
        .map_err(|e| match e {
            Error::NegativeExponent(v) => JsonError::Term { form: form.into(), detail: format!("bad bound {v}") },
            other => other.into(),
        })
}

pub fn ideal_from_json(text: &str) -> Result<JsonIdeal, JsonError> {
    let doc: Document = serde_json::from_str(text)?;
    let name = serde_json::to_string(&doc.form)?.trim_matches('"').to_owned();
    let mismatch = || JsonError::Term { form: name.clone(), detail: "wrong term shape".into() };
    match doc.form {
        Form::Sum => {
            let boxes = doc
                .terms
                .iter()
                .map(|t| match t {
                    Term::Rays(r) => Ok(BoxIdeal::new(term_rays(&name, r)?)?),
                    Term::Exps(_) => Err(mismatch()),
                })
                .collect::<Result<_, _>>()?;
            Ok(JsonIdeal::Sum(AfgIdeal::new(doc.dim, boxes)?))
        }
        Form::Intersection => {
            let comps = doc
                .terms
                .iter()
                .map(|t| match t {
                    Term::Rays(r) => Ok(IrreducibleIdeal::new(term_rays(&name, r)?)?),
                    Term::Exps(_) => Err(mismatch()),
                })
                .collect::<Result<_, _>>()?;
            Ok(JsonIdeal::Intersection(Decomposition::new(doc.dim, comps)?))
        }
        Form::Gens => {
            let gens = doc
                .terms
                .iter()
                .map(|t| match t {
                    Term::Exps(e) => exps_to_monomial(&name, e),
                    Term::Rays(_) => Err(mismatch()),
                })
                .collect::<Result<_, _>>()?;
            Ok(JsonIdeal::Gens(FiniteGeneratorSet::new(doc.dim, gens)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::{PerturbedCoord, Rational};

    #[test]
    fn sum_is_bit_exact() {
        let a = AfgIdeal::from_box(BoxIdeal::from_parts(&["2", "3/2"], &[1, 0]).unwrap());
        let text = sum_to_json(&a);
        assert_eq!(text, r#"{"dim":2,"form":"sum","terms":[{"alpha":["2","3/2"],"eps":[1,0]}]}"#);
        assert_eq!(ideal_from_json(&text).unwrap(), JsonIdeal::Sum(a));
    }

    #[test]
    fn intersection_and_gens() {
        let d = Decomposition::new(2, vec![IrreducibleIdeal::from_parts(&["inf", "3"], &[0, 1]).unwrap()]).unwrap();
        let text = intersection_to_json(&d);
        assert_eq!(text, r#"{"dim":2,"form":"intersection","terms":[{"alpha":["inf","3"],"eps":[0,1]}]}"#);
        assert_eq!(ideal_from_json(&text).unwrap(), JsonIdeal::Intersection(d));

        let s = FiniteGeneratorSet::new(2, vec![Monomial::from_ratios(&[(1, 1), (0, 1)]), Monomial::from_ratios(&[(0, 1), (1, 2)])]).unwrap();
        let text = gens_to_json(&s);
        assert_eq!(text, r#"{"dim":2,"form":"gens","terms":[["1","0"],["0","1/2"]]}"#);
        assert_eq!(ideal_from_json(&text).unwrap(), JsonIdeal::Gens(s));
    }

    #[test]
    fn witness_and_monomial() {
        let w = Witness { point: vec![PerturbedCoord::plus(Rational::from_integer(2.into())), PerturbedCoord::exact(Rational::from_integer(0.into()))] };
        assert_eq!(witness_to_json(&w), r#"{"point":[{"v":"2","open":true},{"v":"0","open":false}]}"#);
        let m = Monomial::from_ratios(&[(3, 2), (0, 1)]);
        assert_eq!(monomial_to_json(&m), r#"["3/2","0"]"#);
        assert_eq!(monomial_from_json(r#"["3/2","0"]"#).unwrap(), m);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(ideal_from_json("{").is_err());
        assert!(ideal_from_json(r#"{"dim":2,"form":"sum","terms":[["1","0"]]}"#).is_err());
        assert!(ideal_from_json(r#"{"dim":2,"form":"gens","terms":[{"alpha":["1","0"],"eps":[0,0]}]}"#).is_err());
        assert!(ideal_from_json(r#"{"dim":2,"form":"sum","terms":[{"alpha":["1"],"eps":[0]}]}"#).is_err());
        assert!(ideal_from_json(r#"{"dim":1,"form":"sum","terms":[{"alpha":["-1"],"eps":[0]}]}"#).is_err());
        assert!(ideal_from_json(r#"{"dim":1,"form":"sum","terms":[{"alpha":["1"],"eps":[2]}]}"#).is_err());
        assert!(ideal_from_json(r#"{"dim":1,"form":"box","terms":[]}"#).is_err());
    }
}
