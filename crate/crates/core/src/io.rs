//! JSON complex format: `{"n": int, "labels": [...]?, "facets": [[int, ...], ...]}`.

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, VertexLabel};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<VertexLabel>>,
    facets: Vec<Vec<u32>>,
}

pub fn to_json(c: &SimplicialComplex) -> String {
    serde_json::to_string(&as_repr(c)).expect("complex serializes")
}

pub fn to_json_pretty(c: &SimplicialComplex) -> String {
    serde_json::to_string_pretty(&as_repr(c)).expect("complex serializes")
}

fn as_repr(c: &SimplicialComplex) -> ComplexJson {
    ComplexJson {
        n: c.n(),
        labels: c.labels().map(<[VertexLabel]>::to_vec),
        facets: c
            .facets()
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| f.vertices().to_vec())
            .collect(),
    }
}

pub fn from_json(s: &str) -> Result<SimplicialComplex> {
    let repr: ComplexJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let c = SimplicialComplex::from_facets(&repr.facets, repr.n)?;
    match repr.labels {
        Some(l) => c.with_labels(l),
        None => Ok(c),
    }
}
