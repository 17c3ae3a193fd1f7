use gvdkit::corpus::{random_connected_bipartite, rng};
use gvdkit::gvd::{invariants_via_recursion, is_gvd, UnmixedPolicy};
use gvdkit::hilbert::invariants_direct;
use gvdkit::toric::{
    bipartite_a, edge_split, ferrers_graph, ferrers_invariants, glue_cycle, grd_graph, toric_ideal,
    Graph, Partition,
};
use gvdkit::{CmStatus, Hilbertian, InvariantReport};

fn direct(g: &Graph) -> InvariantReport {
    let t = toric_ideal(g, None).unwrap();
    invariants_direct(&t.ideal, CmStatus::Certified).unwrap()
}

fn triple(r: &InvariantReport) -> (i64, i64, i64) {
    (r.reg.unwrap(), r.e, r.a)
}

#[test]
fn ferrers_closed_form_matches_direct_up_to_nine_cells() {
    let mut checked = 0;
    for size in 1..=9 {
        for lambda in Partition::all_of_size(size) {
            let closed = ferrers_invariants(&lambda);
            let d = direct(&ferrers_graph(&lambda));
            assert_eq!(triple(&closed), triple(&d), "λ = {lambda}");
            assert_eq!(closed.dim, d.dim, "λ = {lambda}");
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22 + 30);
}

#[test]
fn ferrers_anchor_values() {
    let lambda = Partition::new(vec![3, 3, 3, 2]).unwrap();
    assert_eq!(direct(&ferrers_graph(&lambda)).reg, Some(2));
    for n in 1..=4 {
        for m in 1..=4 {
            let k = Partition::new(vec![m; n]).unwrap();
            assert_eq!(ferrers_invariants(&k).reg, Some(n.min(m) as i64 - 1));
        }
    }
}

#[test]
fn grd_family_invariants() {
    for r in 3..=4usize {
        for d in 1..=3usize {
            let g = grd_graph(r, d).unwrap();
            let rep = direct(&g);
            let (r, d) = (r as i64, d as i64);
            assert_eq!(rep.reg.unwrap() + 1, r, "reg of the ideal, r={r} d={d}");
            assert_eq!(rep.e, d * r - (d - 1));
            assert_eq!(rep.a, 1 - d - r);
            assert_eq!(bipartite_a(&g, rep.reg.unwrap()).unwrap(), rep.a);
        }
    }
    assert_eq!(
        grd_graph(3, 1).unwrap().edge_count(),
        Graph::cycle(6).unwrap().edge_count()
    );
}

#[test]
fn gluing_even_cycles_onto_a_square() {
    let g = Graph::cycle(4).unwrap();
    let base = direct(&g);
    for d in 2..=3usize {
        let h = glue_cycle(&g, "e1", 2 * d).unwrap();
        let glued = direct(&h);
        let d = d as i64;
        assert_eq!(glued.reg.unwrap(), base.reg.unwrap() + d - 1);
        assert_eq!(glued.e, d * base.e);
        assert_eq!(glued.a, base.a - (d - 1));
    }
}

#[test]
fn corpus_graphs() {
    let mut r = rng(2024);
    for i in 0..25 {
        let g = random_connected_bipartite(&mut r, 8);
        let t = toric_ideal(&g, None).unwrap();
        let full = invariants_direct(&t.ideal, CmStatus::Certified).unwrap();
        assert_eq!(full.hilbertian, Hilbertian::Hilbertian, "graph {i}");
        assert_eq!(bipartite_a(&g, full.reg.unwrap()).unwrap(), full.a);

        // the bounds need a nonzero ideal; leaves change neither the ideal nor the side counts used
        let sides = g.bipartition().unwrap();
        let n = sides.iter().filter(|&&s| s == 0).count() as i64;
        let m = sides.len() as i64 - n;
        assert!(full.a <= (-m).min(-n), "graph {i}");
        if !t.ideal.grevlex_basis().is_empty() {
            let (core, stripped) = g.strip_leaves();
            let side_of =
                |name: &String| sides[g.vertices().iter().position(|v| v == name).unwrap()];
            let r_leaves = stripped.vertices.iter().filter(|v| side_of(v) == 0).count() as i64;
            let s_leaves = stripped.vertices.len() as i64 - r_leaves;
            assert!(
                full.reg.unwrap() < (n - r_leaves).min(m - s_leaves),
                "graph {i}"
            );
            assert_eq!(direct(&core).reg, full.reg, "graph {i}");
        }

        let tree = is_gvd(&t.ideal, UnmixedPolicy::Structural);
        assert!(tree.is_certified(), "graph {i}");
        let rec = invariants_via_recursion(&tree).unwrap();
        assert_eq!(triple(&rec), triple(&full), "graph {i}");

        for label in g.labels() {
            // I_H measured in K[E(G)]
            let (n_ideal, c_ideal) = edge_split(&g, &label).unwrap();
            let sub = invariants_direct(&n_ideal, CmStatus::Certified).unwrap();
            assert!(
                sub.reg.unwrap() <= full.reg.unwrap(),
                "graph {i} minus {label}"
            );
            assert!(sub.a <= full.a, "graph {i} minus {label}");
            // an edge on some cycle lowers a by at least one; a bridge leaves the ideal alone
            let on_cycle = c_ideal.generators().len() > n_ideal.generators().len();
            if on_cycle {
                assert!(sub.a < full.a, "graph {i} minus {label}");
            } else {
                assert_eq!(sub.a, full.a, "graph {i} minus {label}");
            }
            assert!(sub.e <= full.e, "graph {i} minus {label}");
        }
    }
}
