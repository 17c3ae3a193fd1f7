use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parse::is_valid_variable_name;
use crate::ring::PolynomialRing;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub label: String,
    pub ends: [String; 2],
}

/// Wire format of a graph, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

/// A finite simple graph with labelled edges. Edge labels are the
/// variables of the edge ring `K[E]`, in edge order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphSpec", into = "GraphSpec")]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    ends: Vec<(usize, usize)>,
}

impl TryFrom<GraphSpec> for Graph {
    type Error = Error;
    fn try_from(spec: GraphSpec) -> Result<Self> {
        Graph::new(spec.vertices, spec.edges)
    }
}

impl From<Graph> for GraphSpec {
    fn from(g: Graph) -> Self {
        GraphSpec {
            vertices: g.vertices,
            edges: g.edges,
        }
    }
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidGraph("empty vertex name".into()));
            }
            if index.insert(v.as_str(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{v}`")));
            }
        }
        let mut labels = HashSet::new();
        let mut pairs = HashSet::new();
        let mut ends = Vec::with_capacity(edges.len());
        for e in &edges {
            if !is_valid_variable_name(&e.label) {
                return Err(Error::InvalidGraph(format!(
                    "edge label `{}` is not a variable name",
                    e.label
                )));
            }
            if !labels.insert(e.label.as_str()) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge label `{}`",
                    e.label
                )));
            }
            let find = |name: &str| {
                index.get(name).copied().ok_or_else(|| {
                    Error::InvalidGraph(format!("edge `{}` uses unknown vertex `{name}`", e.label))
                })
            };
            let (a, b) = (find(&e.ends[0])?, find(&e.ends[1])?);
            if a == b {
                return Err(Error::InvalidGraph(format!("edge `{}` is a loop", e.label)));
            }
            if !pairs.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!(
                    "edge `{}` duplicates another edge",
                    e.label
                )));
            }
            ends.push((a, b));
        }
        Ok(Self {
            vertices,
            edges,
            ends,
        })
    }

    /// Builds a graph from `(label, end, end)` triples.
    pub fn from_edges<V, E>(vertices: &[V], edges: &[(E, V, V)]) -> Result<Self>
    where
        V: AsRef<str>,
        E: AsRef<str>,
    {
        Self::new(
            vertices.iter().map(|v| v.as_ref().to_string()).collect(),
            edges
                .iter()
                .map(|(l, a, b)| Edge {
                    label: l.as_ref().to_string(),
                    ends: [a.as_ref().to_string(), b.as_ref().to_string()],
                })
                .collect(),
        )
    }

    /// The cycle `C_len` on vertices `v1..` with edges `e1..`.
    pub fn cycle(len: usize) -> Result<Self> {
        if len < 3 {
            return Err(Error::InvalidArgument(
                "a cycle needs at least 3 vertices".into(),
            ));
        }
        let vs: Vec<String> = (1..=len).map(|i| format!("v{i}")).collect();
        let es: Vec<(String, String, String)> = (0..len)
            .map(|i| {
                (
                    format!("e{}", i + 1),
                    vs[i].clone(),
                    vs[(i + 1) % len].clone(),
                )
            })
            .collect();
        Self::from_edges(&vs, &es)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn ends(&self, edge: usize) -> (usize, usize) {
        self.ends[edge]
    }

    pub fn edge_index(&self, label: &str) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.label == label)
            .ok_or_else(|| Error::UnknownEdge(label.to_string()))
    }

    pub fn labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    /// `K[E]`; fails for a graph without edges.
    pub fn edge_ring(&self) -> Result<PolynomialRing> {
        PolynomialRing::new(self.labels())
    }

    /// `(neighbour, edge)` pairs for every vertex.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (k, &(a, b)) in self.ends.iter().enumerate() {
            adj[a].push((b, k));
            adj[b].push((a, k));
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.ends.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Side (0 or 1) of every vertex, or `None` for non-bipartite graphs.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency();
        let mut side: Vec<Option<u8>> = vec![None; self.vertices.len()];
        for s in 0..self.vertices.len() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].expect("visited");
                for &(w, _) in &adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(1 - sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.expect("all visited")).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut count = 0;
        for s in 0..self.vertices.len() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// The graph without one edge; vertices are kept.
    pub fn delete_edge(&self, label: &str) -> Result<Self> {
        let k = self.edge_index(label)?;
        let mut edges = self.edges.clone();
        edges.remove(k);
        Self::new(self.vertices.clone(), edges)
    }

    /// Repeatedly removes vertices of degree at most one with their edges.
    pub fn strip_leaves(&self) -> (Self, LeafStripping) {
        let mut alive_v = vec![true; self.vertices.len()];
        let mut alive_e = vec![true; self.edges.len()];
        let mut deg: Vec<usize> = (0..self.vertices.len()).map(|v| self.degree(v)).collect();
        let mut report = LeafStripping::default();
        while let Some(v) = (0..self.vertices.len()).find(|&v| alive_v[v] && deg[v] <= 1) {
            alive_v[v] = false;
            report.vertices.push(self.vertices[v].clone());
            for (k, &(a, b)) in self.ends.iter().enumerate() {
                if alive_e[k] && (a == v || b == v) {
                    alive_e[k] = false;
                    deg[a] -= 1;
                    deg[b] -= 1;
                    report.edges.push(self.edges[k].label.clone());
                }
            }
        }
        let vertices = (0..self.vertices.len())
            .filter(|&v| alive_v[v])
            .map(|v| self.vertices[v].clone())
            .collect();
        let edges = (0..self.edges.len())
            .filter(|&k| alive_e[k])
            .map(|k| self.edges[k].clone())
            .collect();
        (
            Self::new(vertices, edges).expect("subgraph of a valid graph"),
            report,
        )
    }
}

/// What [`Graph::strip_leaves`] removed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafStripping {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Graph::from_edges(&["a", "b"], &[("e1", "a", "a")]).is_err());
        assert!(Graph::from_edges(&["a", "b"], &[("e1", "a", "b"), ("e2", "b", "a")]).is_err());
        assert!(Graph::from_edges(&["a", "b"], &[("e1", "a", "c")]).is_err());
        assert!(Graph::from_edges(&["a", "b"], &[("1e", "a", "b")]).is_err());
        assert!(Graph::from_edges(&["a", "a"], &[] as &[(&str, &str, &str)]).is_err());
    }

    #[test]
    fn bipartite_and_components() {
        assert!(Graph::cycle(4).unwrap().is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
        let g = Graph::from_edges(&["a", "b", "c", "d"], &[("e1", "a", "b"), ("e2", "c", "d")])
            .unwrap();
        assert_eq!(g.component_count(), 2);
    }

    #[test]
    fn leaves() {
        let g = Graph::from_edges(
            &["a", "b", "c", "d", "p", "q"],
            &[
                ("e1", "a", "b"),
                ("e2", "b", "c"),
                ("e3", "c", "d"),
                ("e4", "d", "a"),
                ("e5", "a", "p"),
                ("e6", "p", "q"),
            ],
        )
        .unwrap();
        let (core, report) = g.strip_leaves();
        assert_eq!(core.edge_count(), 4);
        assert_eq!(report.edges, vec!["e6", "e5"]);
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::cycle(4).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.starts_with("{\"vertices\":[\"v1\""));
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(
            r#"{"vertices":["a"],"edges":[{"label":"e","ends":["a","a"]}]}"#
        )
        .is_err());
    }
}
