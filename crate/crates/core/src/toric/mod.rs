//! Toric ideals of graphs and the graph families with known invariants.

mod cycles;
mod families;
mod ferrers;
mod graph;
mod ideal;

pub use cycles::{closed_even_walks, simple_cycles, Cycle};
pub use families::{glue_cycle, grd_graph};
pub use ferrers::{
    ferrers_graph, ferrers_invariants, ferrers_multiplicity, ferrers_regularity, Partition,
};
pub use graph::{Edge, Graph, GraphSpec, LeafStripping};
pub use ideal::{edge_split, toric_ideal, walk_binomial, ToricIdeal};

use crate::error::{Error, Result};

/// `a(K[E]/I_G) = reg(K[E]/I_G) − dim`, with `dim = |V| − #components` for
/// bipartite `G`.
pub fn bipartite_a(g: &Graph, reg_of_quotient: i64) -> Result<i64> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    Ok(reg_of_quotient - (g.vertex_count() - g.component_count()) as i64)
}

/// Bipartite, and every cycle of length at least 6 has a chord.
pub fn is_chordal_bipartite(g: &Graph) -> bool {
    if !g.is_bipartite() {
        return false;
    }
    let adj = g.adjacency();
    simple_cycles(g).iter().filter(|c| c.len() >= 6).all(|c| {
        let k = c.len();
        (0..k).any(|i| {
            (i + 2..k).any(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                !consecutive && adj[c.vertices[i]].iter().any(|&(w, _)| w == c.vertices[j])
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chordality() {
        assert!(is_chordal_bipartite(&Graph::cycle(4).unwrap()));
        assert!(!is_chordal_bipartite(&Graph::cycle(6).unwrap()));
        assert!(!is_chordal_bipartite(&Graph::cycle(5).unwrap()));
        for size in 1..=9 {
            for p in Partition::all_of_size(size) {
                assert!(is_chordal_bipartite(&ferrers_graph(&p)), "{p}");
            }
        }
    }

    #[test]
    fn a_invariants() {
        let g = grd_graph(3, 2).unwrap();
        assert_eq!(bipartite_a(&g, 2).unwrap(), -4);
        let k22 = ferrers_graph(&Partition::new(vec![2, 2]).unwrap());
        assert_eq!(bipartite_a(&k22, 1).unwrap(), -2);
        assert_eq!(
            bipartite_a(&Graph::cycle(3).unwrap(), 0),
            Err(Error::NotBipartite)
        );
    }
}
