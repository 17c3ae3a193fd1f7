use gvdkit::corpus::{
    random_connected_bipartite, random_homogeneous_ideal, random_pure_complex, rng,
};
use gvdkit::gvd::{
    invariants_asserted, invariants_via_recursion, is_c_saturated, is_gvd, nonpositivity_audit,
    one_step_split, verify_h_identity, verify_series_identity, Degeneracy, UnmixedPolicy,
};
use gvdkit::hilbert::invariants_direct;
use gvdkit::simplicial::stanley_reisner_ideal;
use gvdkit::toric::toric_ideal;
use gvdkit::{catalog, CmStatus, Ideal, MonomialOrder};

fn corpus() -> Vec<(String, Ideal)> {
    let mut out: Vec<(String, Ideal)> = catalog::all()
        .into_iter()
        .map(|(n, i)| (n.to_string(), i))
        .collect();
    let mut r = rng(99);
    for k in 0..30 {
        let g = random_connected_bipartite(&mut r, 8);
        out.push((format!("toric-{k}"), toric_ideal(&g, None).unwrap().ideal));
    }
    for k in 0..20 {
        let c = random_pure_complex(&mut r, 7);
        out.push((format!("sr-{k}"), stanley_reisner_ideal(&c).unwrap()));
    }
    for k in 0..20 {
        out.push((
            format!("random-{k}"),
            random_homogeneous_ideal(&mut r, 4, 3),
        ));
    }
    out
}

#[test]
fn every_valid_split_satisfies_the_series_identity() {
    let mut valid = 0;
    for (name, ideal) in corpus() {
        let n = ideal.ring().len();
        for y in 0..n {
            let split = one_step_split(&ideal, y, &MonomialOrder::y_block(y, n)).unwrap();
            if split.valid {
                valid += 1;
                assert!(
                    verify_series_identity(&ideal, &split).unwrap(),
                    "{name} at {y}"
                );
            }
        }
        let tree = is_gvd(&ideal, UnmixedPolicy::Structural);
        tree.for_each_split(&mut |node, split| {
            assert!(
                verify_series_identity(node, split).unwrap(),
                "{name}: node {node}"
            );
        });
    }
    assert!(valid > 100);
}

#[test]
fn nondegenerate_certified_splits_satisfy_the_h_identity() {
    let mut seen = 0;
    for (name, ideal) in corpus() {
        let tree = is_gvd(&ideal, UnmixedPolicy::Structural);
        if !tree.is_certified() {
            continue;
        }
        tree.for_each_split(&mut |node, split| {
            if split.degeneracy == Degeneracy::Nondegenerate {
                seen += 1;
                assert!(
                    verify_h_identity(node, split).unwrap(),
                    "{name}: node {node}"
                );
            }
        });
    }
    assert!(seen > 20);
}

#[test]
fn recursion_agrees_with_direct_computation() {
    let mut certified = 0;
    for (name, ideal) in corpus() {
        let tree = is_gvd(&ideal, UnmixedPolicy::Structural);
        if !tree.is_certified() {
            continue;
        }
        certified += 1;
        let rec = invariants_via_recursion(&tree).unwrap();
        let direct = invariants_direct(&ideal, CmStatus::Certified).unwrap();
        assert_eq!(rec.triple(), direct.triple(), "{name}");
        assert_eq!(rec.h_poly, direct.h_poly, "{name}");
        assert_eq!(rec.dim, direct.dim, "{name}");
    }
    assert!(certified >= 40, "only {certified} certified");
}

#[test]
fn toric_and_decomposable_inputs_certify() {
    for (name, ideal) in corpus() {
        if name.starts_with("toric") {
            assert!(
                is_gvd(&ideal, UnmixedPolicy::Structural).is_certified(),
                "{name}"
            );
        }
    }
}

#[test]
fn nonpositivity() {
    let audit = nonpositivity_audit(&corpus(), UnmixedPolicy::Structural).unwrap();
    assert!(audit.passed(), "{:?}", audit.violations);
    assert!(audit.c_saturated > 0 && audit.checked > audit.c_saturated);
    let pair = catalog::c_unsaturated_pair();
    assert!(is_gvd(&pair, UnmixedPolicy::Structural).is_certified());
    assert!(!is_c_saturated(&pair, UnmixedPolicy::Structural).is_certified());
}

#[test]
fn reference_examples() {
    let six = catalog::six_variable_gvd();
    let tree = is_gvd(&six, UnmixedPolicy::Structural);
    assert!(tree.is_certified());
    let rec = invariants_via_recursion(&tree).unwrap();
    assert_eq!(rec.triple(), (Some(3), 8, -1));

    let weak = catalog::six_variable_weakly_gvd();
    assert!(!is_gvd(&weak, UnmixedPolicy::Structural).is_certified());
    let asserted = invariants_asserted(&weak).unwrap();
    assert_eq!(asserted.combined.reg.map(|r| r + 1), Some(4));

    let pair = catalog::binomial_pair();
    assert!(!is_gvd(&pair, UnmixedPolicy::Structural).is_certified());
    let asserted = invariants_asserted(&pair).unwrap();
    assert_eq!((asserted.combined.reg, asserted.combined.e), (Some(2), 4));
}
