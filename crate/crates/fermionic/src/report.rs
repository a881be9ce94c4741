//! JSON reports of oracle runs.

use std::collections::BTreeMap;

use fermionic_core::oracle::{Arithmetic, OracleRun};
use fermionic_core::LaurentPoly;
use serde::Serialize;

use crate::json::PolyJson;

#[derive(Clone, Debug, Serialize)]
pub struct DimEntry {
    pub degree: u32,
    pub weights: Vec<i64>,
    pub dim: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub target: String,
    pub params: BTreeMap<String, String>,
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub zetas: Vec<String>,
    /// Names of the weight coordinates in `graded_dims`, in stored units.
    pub weight_vars: Vec<String>,
    pub graded_dims: Vec<DimEntry>,
    pub poly: PolyJson,
    pub formula: PolyJson,
    pub verdict: String,
}

impl OracleReport {
    pub fn new(run: &OracleRun, formula: &LaurentPoly) -> Self {
        let (field, prime, seed) = match run.arithmetic {
            Arithmetic::Prime { modulus, seed } => ("prime".to_string(), Some(modulus), Some(seed)),
            Arithmetic::Rational => ("rational".to_string(), None, None),
        };
        OracleReport {
            target: run.target.name().to_string(),
            params: run.target.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            field,
            prime,
            seed,
            zetas: run.zetas.clone(),
            weight_vars: run.dims.vars.iter().map(|v| format!("{}/{}", v.name(), v.step())).collect(),
            graded_dims: run
                .dims
                .dims
                .iter()
                .map(|((d, w), &n)| DimEntry { degree: *d, weights: w.clone(), dim: n })
                .collect(),
            poly: PolyJson::from(&run.poly),
            formula: PolyJson::from(formula),
            verdict: if run.poly == *formula { "match" } else { "mismatch" }.to_string(),
        }
    }

    pub fn matches(&self) -> bool {
        self.verdict == "match"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}
