use std::collections::HashSet;

use super::graph::Graph;

/// A closed walk given by its vertex sequence; edge `i` joins vertex `i`
/// and vertex `i + 1` (cyclically).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.edges.len().is_multiple_of(2)
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edges.contains(&e)
    }

    /// Edges at even and odd positions of the walk.
    pub fn alternating(&self) -> (Vec<usize>, Vec<usize>) {
        let even = self.edges.iter().step_by(2).copied().collect();
        let odd = self.edges.iter().skip(1).step_by(2).copied().collect();
        (even, odd)
    }
}

/// All simple cycles, each listed once, starting at its smallest vertex.
pub fn simple_cycles(g: &Graph) -> Vec<Cycle> {
    let adj = g.adjacency();
    let mut out = Vec::new();
    for start in 0..g.vertex_count() {
        let mut path = vec![start];
        let mut edges = Vec::new();
        let mut on_path = vec![false; g.vertex_count()];
        on_path[start] = true;
        extend(start, &adj, &mut path, &mut edges, &mut on_path, &mut out);
    }
    out
}

fn extend(
    start: usize,
    adj: &[Vec<(usize, usize)>],
    path: &mut Vec<usize>,
    edges: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let v = *path.last().expect("nonempty path");
    for &(w, e) in &adj[v] {
        if w == start && path.len() >= 3 && path[1] < v {
            // each cycle is reached in both directions; keep one
            let mut es = edges.clone();
            es.push(e);
            out.push(Cycle {
                vertices: path.clone(),
                edges: es,
            });
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            edges.push(e);
            extend(start, adj, path, edges, on_path, out);
            edges.pop();
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Closed walks of even length at most `bound` (edges may repeat), up to rotation and reversal.
pub fn closed_even_walks(g: &Graph, bound: usize) -> Vec<Cycle> {
    let adj = g.adjacency();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for start in 0..g.vertex_count() {
        let mut path = vec![start];
        let mut edges = Vec::new();
        walk(
            start, &adj, bound, &mut path, &mut edges, &mut seen, &mut out,
        );
    }
    out
}

fn walk(
    start: usize,
    adj: &[Vec<(usize, usize)>],
    bound: usize,
    path: &mut Vec<usize>,
    edges: &mut Vec<usize>,
    seen: &mut HashSet<Vec<usize>>,
    out: &mut Vec<Cycle>,
) {
    if edges.len() >= bound {
        return;
    }
    let v = *path.last().expect("nonempty path");
    for &(w, e) in &adj[v] {
        edges.push(e);
        if w == start && edges.len().is_multiple_of(2) {
            let key = canonical_rotation(edges);
            if seen.insert(key) {
                out.push(Cycle {
                    vertices: path.clone(),
                    edges: edges.clone(),
                });
            }
        }
        path.push(w);
        walk(start, adj, bound, path, edges, seen, out);
        path.pop();
        edges.pop();
    }
}

/// Lexicographically least rotation of the sequence or of its reversal.
fn canonical_rotation(edges: &[usize]) -> Vec<usize> {
    let n = edges.len();
    let mut best: Option<Vec<usize>> = None;
    let rev: Vec<usize> = edges.iter().rev().copied().collect();
    for seq in [edges, rev.as_slice()] {
        for k in 0..n {
            let rot: Vec<usize> = (0..n).map(|i| seq[(i + k) % n]).collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(simple_cycles(&Graph::cycle(4).unwrap()).len(), 1);
        assert_eq!(simple_cycles(&Graph::cycle(7).unwrap()).len(), 1);
        // K4 has 4 triangles and 3 four-cycles
        let vs = ["a", "b", "c", "d"];
        let mut es = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                es.push((format!("e{i}{j}"), vs[i], vs[j]));
            }
        }
        let k4 = Graph::from_edges(&vs, &es).unwrap();
        let cycles = simple_cycles(&k4);
        assert_eq!(cycles.len(), 7);
        assert_eq!(cycles.iter().filter(|c| c.is_even()).count(), 3);
    }

    #[test]
    fn cycle_edges_are_consecutive() {
        let g = Graph::cycle(6).unwrap();
        let c = &simple_cycles(&g)[0];
        for (i, &e) in c.edges.iter().enumerate() {
            let (a, b) = g.ends(e);
            let (u, v) = (c.vertices[i], c.vertices[(i + 1) % c.len()]);
            assert!((a, b) == (u, v) || (a, b) == (v, u));
        }
    }
}
