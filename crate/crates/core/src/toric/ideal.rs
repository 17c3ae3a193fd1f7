use num_traits::One;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::polynomial::{Coefficient, Polynomial};
use crate::ring::PolynomialRing;

use super::cycles::{closed_even_walks, simple_cycles, Cycle};
use super::graph::Graph;

/// The toric ideal of a graph in `K[E]`.
#[derive(Clone, Debug)]
pub struct ToricIdeal {
    pub ideal: Ideal,
    /// False when generators come from a bounded walk search.
    pub certified: bool,
    pub cycles: usize,
}

fn edge_product(ring: &PolynomialRing, edges: &[usize]) -> Monomial {
    let mut e = vec![0u32; ring.len()];
    for &k in edges {
        e[k] += 1;
    }
    Monomial::from_exponents(e)
}

/// `∏ even-position edges − ∏ odd-position edges`, or `None` when it vanishes.
pub fn walk_binomial(ring: &PolynomialRing, walk: &Cycle) -> Option<Polynomial> {
    let (even, odd) = walk.alternating();
    let (a, b) = (edge_product(ring, &even), edge_product(ring, &odd));
    if a == b {
        return None;
    }
    Some(Polynomial::from_terms(
        ring,
        [(a, Coefficient::one()), (b, -Coefficient::one())],
    ))
}

/// Toric ideal from even cycles (bipartite graphs) or from closed even walks
/// of length at most `walk_bound` (other graphs; not certified complete).
pub fn toric_ideal(g: &Graph, walk_bound: Option<usize>) -> Result<ToricIdeal> {
    let ring = g.edge_ring()?;
    if g.is_bipartite() {
        let cycles = simple_cycles(g);
        let gens: Vec<Polynomial> = cycles
            .iter()
            .filter_map(|c| walk_binomial(&ring, c))
            .collect();
        return Ok(ToricIdeal {
            cycles: gens.len(),
            ideal: Ideal::new(&ring, gens)?.with_prime_hint(),
            certified: true,
        });
    }
    let bound = walk_bound.ok_or(Error::MissingWalkBound)?;
    let walks = closed_even_walks(g, bound);
    let mut gens: Vec<Polynomial> = walks
        .iter()
        .filter_map(|w| walk_binomial(&ring, w))
        .collect();
    gens.sort_by_key(|p| p.to_string());
    gens.dedup();
    Ok(ToricIdeal {
        cycles: gens.len(),
        ideal: Ideal::new(&ring, gens)?,
        certified: false,
    })
}

/// The `N` and `C` ideals of a split of `I_G` at an edge variable, from the graph:
/// `N = I_{G\e}` and `C = N + ⟨m⟩` over the monomials `m` with `m·e − n` a cycle binomial.
/// Both are returned in `K[E(G)]`.
pub fn edge_split(g: &Graph, label: &str) -> Result<(Ideal, Ideal)> {
    let e = g.edge_index(label)?;
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let ring = g.edge_ring()?;
    let cycles = simple_cycles(g);
    let mut n_gens = Vec::new();
    let mut m_gens = Vec::new();
    for c in &cycles {
        let Some(f) = walk_binomial(&ring, c) else {
            continue;
        };
        if !c.contains_edge(e) {
            n_gens.push(f);
            continue;
        }
        let (even, odd) = c.alternating();
        let side = if even.contains(&e) { even } else { odd };
        let rest: Vec<usize> = side.into_iter().filter(|&k| k != e).collect();
        m_gens.push(Polynomial::from_monomial(&ring, edge_product(&ring, &rest)));
    }
    let n = Ideal::new(&ring, n_gens)?;
    let mut c_gens = n.generators().to_vec();
    c_gens.extend(m_gens);
    Ok((n, Ideal::new(&ring, c_gens)?))
}
