//! Seeded generators for the test corpora. The same seed always produces the
//! same sequence of objects.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::polynomial::{rational, Polynomial};
use crate::ring::PolynomialRing;
use crate::simplicial::SimplicialComplex;
use crate::toric::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const NAMES: [&str; 8] = ["x", "y", "z", "w", "u", "v", "s", "t"];

/// Ring on the first `n` of `x, y, z, w, u, v, s, t`.
pub fn small_ring(n: usize) -> PolynomialRing {
    PolynomialRing::new(NAMES[..n].iter().copied()).expect("distinct names")
}

fn random_monomial<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..degree {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exponents(e)
}

/// Homogeneous ideal in 2 to `max_vars` variables, 1 to 3 generators of
/// degree at most `max_degree`, each with up to 3 terms and small integer
/// coefficients.
pub fn random_homogeneous_ideal<R: Rng>(rng: &mut R, max_vars: usize, max_degree: u32) -> Ideal {
    let n = rng.gen_range(2..=max_vars.max(2));
    let ring = small_ring(n);
    loop {
        let count = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..count)
            .map(|_| {
                let d = rng.gen_range(1..=max_degree);
                let terms = rng.gen_range(1..=3);
                Polynomial::from_terms(
                    &ring,
                    (0..terms).map(|_| {
                        let c = loop {
                            let c = rng.gen_range(-3i64..=3);
                            if c != 0 {
                                break c;
                            }
                        };
                        (random_monomial(rng, n, d), rational(c))
                    }),
                )
            })
            .filter(|p| !p.is_zero())
            .collect();
        if !gens.is_empty() {
            return Ideal::new(&ring, gens).expect("same ring");
        }
    }
}

/// Monomial ideal in 2 to `max_vars` variables with 1 to 4 generators of
/// degree 1 to `max_degree`.
pub fn random_monomial_ideal<R: Rng>(rng: &mut R, max_vars: usize, max_degree: u32) -> Ideal {
    let n = rng.gen_range(2..=max_vars.max(2));
    let ring = small_ring(n);
    let count = rng.gen_range(1..=4);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_degree);
            random_monomial(rng, n, d)
        })
        .collect();
    Ideal::from_monomials(&ring, &gens)
}

/// Connected bipartite graph with at most `max_edges` edges and at least one
/// cycle whenever the budget allows it. Sides are `p1..` and `q1..`, edges
/// `e1..` in insertion order.
pub fn random_connected_bipartite<R: Rng>(rng: &mut R, max_edges: usize) -> Graph {
    let max_edges = max_edges.max(1);
    let edges_target = rng.gen_range(max_edges.min(4)..=max_edges);
    // a spanning tree on a + b vertices uses a + b - 1 edges
    let vertex_budget = (edges_target + 1).clamp(2, edges_target.max(4));
    let total = rng.gen_range(2..=vertex_budget);
    let a = rng.gen_range(1..total);
    let b = total - a;
    let mut vertices: Vec<String> = (1..=a).map(|i| format!("p{i}")).collect();
    vertices.extend((1..=b).map(|j| format!("q{j}")));
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    // random spanning tree grown one vertex at a time
    let mut order: Vec<usize> = (0..total).collect();
    order.shuffle(rng);
    let side = |v: usize| v < a;
    let mut placed = vec![order[0]];
    let mut pending: Vec<usize> = order[1..].to_vec();
    while !pending.is_empty() {
        let choices: Vec<(usize, usize)> = pending
            .iter()
            .enumerate()
            .flat_map(|(k, &v)| {
                placed
                    .iter()
                    .filter(move |&&u| side(u) != side(v))
                    .map(move |&u| (k, u))
            })
            .collect();
        // both sides are nonempty, so some pending vertex always has a neighbour
        let &(k, u) = choices.choose(rng).expect("attachable vertex");
        let v = pending.remove(k);
        pairs.push((u.min(v), u.max(v)));
        placed.push(v);
    }
    let mut spare: Vec<(usize, usize)> = (0..a)
        .flat_map(|i| (a..total).map(move |j| (i, j)))
        .filter(|p| !pairs.contains(p))
        .collect();
    spare.shuffle(rng);
    for p in spare {
        if pairs.len() >= edges_target {
            break;
        }
        pairs.push(p);
    }
    let edges: Vec<(String, String, String)> = pairs
        .iter()
        .enumerate()
        .map(|(k, &(u, v))| {
            (
                format!("e{}", k + 1),
                vertices[u].clone(),
                vertices[v].clone(),
            )
        })
        .collect();
    Graph::from_edges(&vertices, &edges).expect("simple bipartite graph")
}

/// Pure complex on 3 to `max_vertices` vertices with facets of a common size
/// between 1 and 3; vertices may end up in no facet.
pub fn random_pure_complex<R: Rng>(rng: &mut R, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(3..=max_vertices.max(3));
    let k = rng.gen_range(1..=3.min(n));
    let subsets: Vec<Vec<usize>> = k_subsets(n, k);
    let count = rng.gen_range(1..=subsets.len().min(8));
    let facets: Vec<Vec<String>> = subsets
        .choose_multiple(rng, count)
        .map(|s| s.iter().map(|i| format!("x{}", i + 1)).collect())
        .collect();
    let vertices = (1..=n).map(|i| format!("x{i}")).collect();
    SimplicialComplex::new(vertices, &facets).expect("equal-size distinct facets")
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a: Vec<String> = (0..5)
            .scan(rng(7), |r, _| {
                Some(random_homogeneous_ideal(r, 5, 4).to_string())
            })
            .collect();
        let b: Vec<String> = (0..5)
            .scan(rng(7), |r, _| {
                Some(random_homogeneous_ideal(r, 5, 4).to_string())
            })
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn generated_objects_are_well_formed() {
        let mut r = rng(11);
        for _ in 0..200 {
            let i = random_homogeneous_ideal(&mut r, 5, 4);
            assert!(i.is_homogeneous() && i.ring().len() <= 5);
            let g = random_connected_bipartite(&mut r, 8);
            assert!(
                g.is_connected() && g.is_bipartite() && g.edge_count() <= 8,
                "{g:?}"
            );
            let c = random_pure_complex(&mut r, 8);
            assert!(c.is_pure() && c.vertices().len() <= 8);
            assert!(random_monomial_ideal(&mut r, 5, 4).is_monomial());
        }
    }
}
