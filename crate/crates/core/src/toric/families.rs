use std::collections::HashSet;

use crate::error::{Error, Result};

use super::graph::{Edge, Graph};

fn fresh(stem: &str, start: usize, taken: &mut HashSet<String>) -> String {
    let mut k = start;
    loop {
        let name = format!("{stem}{k}");
        if taken.insert(name.clone()) {
            return name;
        }
        k += 1;
    }
}

/// Glues a cycle of length `len` along edge `label`: the edge plays the role
/// of the cycle's last edge, and a path of `len - 1` new edges through
/// `len - 2` new vertices joins its ends.
pub fn glue_cycle(g: &Graph, label: &str, len: usize) -> Result<Graph> {
    if len < 4 || len % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "cycle length must be even and at least 4, got {len}"
        )));
    }
    let k = g.edge_index(label)?;
    let (p, q) = g.ends(k);
    let mut vertex_names: HashSet<String> = g.vertices().iter().cloned().collect();
    let mut edge_names: HashSet<String> = g.labels().into_iter().collect();
    let mut vertices = g.vertices().to_vec();
    let mut edges = g.edges().to_vec();
    let mut prev = g.vertices()[p].clone();
    for i in 0..len - 2 {
        let v = fresh("c", i + 2, &mut vertex_names);
        vertices.push(v.clone());
        edges.push(Edge {
            label: fresh("f", i + 1, &mut edge_names),
            ends: [prev, v.clone()],
        });
        prev = v;
    }
    edges.push(Edge {
        label: fresh("f", len - 1, &mut edge_names),
        ends: [prev, g.vertices()[q].clone()],
    });
    Graph::new(vertices, edges)
}

/// `K_{2,d}` on `x1, x2` and `y1..yd` plus a path of length `2r - 2` from `x1` to `x2`.
pub fn grd_graph(r: usize, d: usize) -> Result<Graph> {
    if r < 3 || d < 1 {
        return Err(Error::InvalidArgument(format!(
            "need r >= 3 and d >= 1, got r = {r}, d = {d}"
        )));
    }
    let mut vertices = vec!["x1".to_string(), "x2".to_string()];
    vertices.extend((1..=d).map(|i| format!("y{i}")));
    let path_len = 2 * r - 2;
    vertices.extend((1..path_len).map(|i| format!("z{i}")));
    let mut edges: Vec<(String, String, String)> = Vec::new();
    for i in 1..=d {
        edges.push((format!("a{i}"), "x1".into(), format!("y{i}")));
    }
    for i in 1..=d {
        edges.push((format!("b{i}"), "x2".into(), format!("y{i}")));
    }
    let path: Vec<String> = std::iter::once("x1".to_string())
        .chain((1..path_len).map(|i| format!("z{i}")))
        .chain(std::iter::once("x2".to_string()))
        .collect();
    for (i, w) in path.windows(2).enumerate() {
        edges.push((format!("e{}", i + 1), w[0].clone(), w[1].clone()));
    }
    Graph::from_edges(&vertices, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gluing_counts() {
        let c4 = Graph::cycle(4).unwrap();
        let h = glue_cycle(&c4, "e1", 4).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (6, 7));
        let h6 = glue_cycle(&c4, "e2", 6).unwrap();
        assert_eq!((h6.vertex_count(), h6.edge_count()), (8, 9));
        assert!(h6.is_bipartite());
        assert!(glue_cycle(&c4, "e1", 5).is_err());
        assert!(glue_cycle(&c4, "e1", 2).is_err());
        assert!(glue_cycle(&c4, "nope", 4).is_err());
    }

    #[test]
    fn grd_shapes() {
        let g = grd_graph(6, 5).unwrap();
        assert_eq!(g.vertex_count(), 16);
        assert_eq!(g.edge_count(), 2 * 5 + 10);
        let c = grd_graph(3, 1).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (6, 6));
        assert!(c
            .vertices()
            .iter()
            .enumerate()
            .all(|(v, _)| c.degree(v) == 2));
        assert!(grd_graph(2, 1).is_err());
        assert!(grd_graph(3, 0).is_err());
    }
}
