//! JSON file formats for ideals, graphs and complexes.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::parse::parse_polynomial;
use crate::ring::PolynomialRing;
use crate::simplicial::SimplicialComplex;
use crate::toric::Graph;

/// `{"ring": ["x", ...], "generators": ["y*z - x*w", ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    pub ring: Vec<String>,
    pub generators: Vec<String>,
}

impl IdealSpec {
    pub fn to_ideal(&self) -> Result<Ideal> {
        let ring = PolynomialRing::new(self.ring.iter().cloned())?;
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                parse_polynomial(g, &ring)
                    .map_err(|e| Error::Input(format!("generator {} (`{g}`): {e}", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&ring, gens)
    }
}

impl From<&Ideal> for IdealSpec {
    fn from(ideal: &Ideal) -> Self {
        Self {
            ring: ideal.ring().variables().to_vec(),
            generators: ideal.generator_strings(),
        }
    }
}

/// Deserializes JSON, reporting line and column on failure.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
}

pub fn read_ideal(text: &str) -> Result<Ideal> {
    from_json::<IdealSpec>(text)?.to_ideal()
}

pub fn read_graph(text: &str) -> Result<Graph> {
    from_json(text)
}

pub fn read_complex(text: &str) -> Result<SimplicialComplex> {
    from_json(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_round_trip() {
        let text = r#"{"ring": ["x","y","z","w"], "generators": ["y*z - x*w", "x*y"]}"#;
        let ideal = read_ideal(text).unwrap();
        let spec = IdealSpec::from(&ideal);
        let again = spec.to_ideal().unwrap();
        assert_eq!(ideal.signature(), again.signature());
    }

    #[test]
    fn errors_carry_positions() {
        let err = read_ideal(r#"{"ring": ["x"], "generators": ["x +* x"]}"#).unwrap_err();
        assert!(
            err.to_string().contains("generator 1") && err.to_string().contains("byte"),
            "{err}"
        );
        let err = read_ideal("{\"ring\": [\"x\"],\n \"generators\": [1]}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        assert!(read_ideal(r#"{"ring": ["x"], "generators": [], "extra": 1}"#).is_err());
        assert!(read_ideal(r#"{"ring": ["x"], "generators": ["y"]}"#).is_err());
    }

    #[test]
    fn graph_and_complex() {
        let g = read_graph(r#"{"vertices":["a","b","c","d"],"edges":[{"label":"e1","ends":["a","b"]},{"label":"e2","ends":["b","c"]},{"label":"e3","ends":["c","d"]},{"label":"e4","ends":["d","a"]}]}"#).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!(
            read_graph(r#"{"vertices":["a"],"edges":[{"label":"e1","ends":["a","a"]}]}"#).is_err()
        );
        let c =
            read_complex(r#"{"vertices":["1","2","3"],"facets":[["1","2"],["2","3"],["1","3"]]}"#)
                .unwrap();
        assert_eq!(c.facets().len(), 3);
        assert!(read_complex(r#"{"vertices":["1"],"facets":[]}"#).is_err());
    }
}
