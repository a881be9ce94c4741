//! The JSON form of a [`LaurentPoly`]:
//!
//! ```json
//! {"vars":["q","z"],"halfstep":[false,true],"terms":[{"e":[0,1],"c":"1"}]}
//! ```
//!
//! Exponents are stored units (halves for `halfstep` variables), coefficients
//! decimal strings, terms in lexicographic order of `e`. Variables whose step
//! is neither 1 nor 2 (the sixth steps of the `sl3` character) add a `"scale"`
//! list giving every variable's step; it is omitted otherwise.

use fermionic_core::{BigInt, LaurentPoly, Var};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("inconsistent polynomial: {0}")]
    Shape(String),
    #[error(transparent)]
    Core(#[from] fermionic_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<i64>,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub halfstep: Vec<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<Vec<u32>>,
    pub terms: Vec<TermJson>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        let vars = p.vars();
        let scale = if vars.iter().all(|v| v.step() <= 2) {
            None
        } else {
            Some(vars.iter().map(|v| v.step()).collect())
        };
        PolyJson {
            vars: vars.iter().map(|v| v.name().to_string()).collect(),
            halfstep: vars.iter().map(|v| v.step() == 2).collect(),
            scale,
            terms: p.terms().map(|(e, c)| TermJson { e: e.clone(), c: c.to_string() }).collect(),
        }
    }
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<LaurentPoly, JsonError> {
        let n = self.vars.len();
        if self.halfstep.len() != n {
            return Err(JsonError::Shape(format!("{} halfstep flags for {} variables", self.halfstep.len(), n)));
        }
        let steps: Vec<u32> = match &self.scale {
            Some(s) if s.len() != n => {
                return Err(JsonError::Shape(format!("{} scale entries for {} variables", s.len(), n)));
            }
            Some(s) if s.contains(&0) => return Err(JsonError::Shape("zero scale".into())),
            Some(s) => s.clone(),
            None => self.halfstep.iter().map(|&h| if h { 2 } else { 1 }).collect(),
        };
        let vars: Vec<Var> = self.vars.iter().zip(&steps).map(|(name, &s)| Var::new(name.clone(), s)).collect();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let c: BigInt =
                    t.c.parse().map_err(|_| JsonError::Shape(format!("coefficient `{}` is not an integer", t.c)))?;
                Ok((t.e.clone(), c))
            })
            .collect::<Result<Vec<_>, JsonError>>()?;
        Ok(LaurentPoly::from_terms(vars, terms)?)
    }
}

pub fn poly_to_json(p: &LaurentPoly) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("plain data serializes")
}

pub fn poly_from_json(s: &str) -> Result<LaurentPoly, JsonError> {
    serde_json::from_str::<PolyJson>(s)?.to_poly()
}
