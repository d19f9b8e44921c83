//! JSON exchange format for polytopes.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyhedron::hpolytope::{Facet, HPolytope};
use crate::scalar::serde_q;

#[derive(Serialize, Deserialize)]
struct FacetDoc {
    #[serde(with = "serde_q::vec")]
    normal: Vec<BigRational>,
    #[serde(with = "serde_q")]
    offset: BigRational,
}

#[derive(Serialize, Deserialize)]
struct PolytopeDoc {
    dim: usize,
    facets: Vec<FacetDoc>,
}

pub fn to_json(p: &HPolytope<BigRational>) -> serde_json::Value {
    let doc = PolytopeDoc {
        dim: p.dim(),
        facets: p
            .facets()
            .iter()
            .map(|f| FacetDoc {
                normal: f.normal.clone(),
                offset: f.offset.clone(),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("polytope documents always serialize")
}

pub fn from_json(v: &serde_json::Value) -> Result<HPolytope<BigRational>> {
    let doc: PolytopeDoc = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    HPolytope::new(
        doc.dim,
        doc.facets.into_iter().map(|f| Facet::new(f.normal, f.offset)).collect(),
    )
}

pub fn from_str(s: &str) -> Result<HPolytope<BigRational>> {
    let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    from_json(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = r#"{"dim":2,"facets":[{"normal":["1","0"],"offset":"1/2"},{"normal":["-1","0"],"offset":"0"},{"normal":["0","1"],"offset":"1"},{"normal":["0","-1"],"offset":"0"}]}"#;
        let p = from_str(s).unwrap();
        assert_eq!(p.num_facets(), 4);
        let back = to_json(&p);
        assert_eq!(back["facets"][0]["offset"], "1/2");
        assert_eq!(back["facets"][0]["normal"][0], "1/1");
        assert_eq!(from_json(&back).unwrap().facets(), p.facets());
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(from_str(r#"{"dim":2}"#), Err(Error::Parse(_))));
        assert!(matches!(
            from_str(r#"{"dim":1,"facets":[{"normal":["x"],"offset":"0"}]}"#),
            Err(Error::Parse(_))
        ));
    }
}
