//! JSON form of certificates. Rationals are `"p/q"` strings; maps are keyed
//! by edge id.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::EdgeId;
use crate::rational;
use crate::separation::{Circuit, WeightVector};

use super::{Answer, Certificate, DecideError, GraphRole, Method};

#[derive(Debug, Serialize, Deserialize)]
struct CertificateJson {
    answer: Answer,
    graph_role: GraphRole,
    method: Method,
    margin: Option<String>,
    lp_optimum: Option<String>,
    weights: Option<BTreeMap<EdgeId, String>>,
    /// Coefficient of pi per primal edge (dual-role yes certificates).
    angles: Option<BTreeMap<EdgeId, String>>,
    cuts: Vec<Vec<EdgeId>>,
    iterations: usize,
    edge_bijection: Option<Vec<EdgeId>>,
}

fn keyed(values: &[crate::Rational]) -> BTreeMap<EdgeId, String> {
    values.iter().enumerate().map(|(e, x)| (e, rational::to_string(x))).collect()
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let doc = CertificateJson {
            answer: self.answer,
            graph_role: self.graph_role,
            method: self.method,
            margin: self.margin.as_ref().map(rational::to_string),
            lp_optimum: self.lp_optimum.as_ref().map(rational::to_string),
            weights: self.weights.as_ref().map(|w| keyed(w.as_slice())),
            angles: self.angle_coefficients().map(|a| keyed(&a)),
            cuts: self.cuts.iter().map(|c| c.edges().to_vec()).collect(),
            iterations: self.iterations,
            edge_bijection: self.edge_bijection.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("certificate serialises")
    }

    /// Parses a certificate. The `angles` field is derived data and ignored.
    pub fn from_json(text: &str) -> Result<Self, DecideError> {
        let doc: CertificateJson =
            serde_json::from_str(text).map_err(|e| DecideError::Json(e.to_string()))?;
        let parse = |s: &String| rational::parse(s).map_err(|e| DecideError::Json(e.to_string()));
        let weights = match doc.weights {
            Some(map) => {
                if map.keys().copied().ne(0..map.len()) {
                    return Err(DecideError::Json("weights must be keyed 0..E-1".into()));
                }
                Some(map.values().map(parse).collect::<Result<WeightVector, _>>()?)
            }
            None => None,
        };
        Ok(Certificate {
            answer: doc.answer,
            graph_role: doc.graph_role,
            method: doc.method,
            weights,
            margin: doc.margin.as_ref().map(parse).transpose()?,
            lp_optimum: doc.lp_optimum.as_ref().map(parse).transpose()?,
            cuts: doc.cuts.into_iter().map(Circuit::from_cyclic_edges).collect(),
            iterations: doc.iterations,
            edge_bijection: doc.edge_bijection,
        })
    }
}
