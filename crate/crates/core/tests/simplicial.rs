use gvdkit::corpus::{random_pure_complex, rng};
use gvdkit::groebner::ideals_equal;
use gvdkit::gvd::{is_gvd, one_step_split, UnmixedPolicy};
use gvdkit::hilbert::invariants_direct;
use gvdkit::simplicial::{
    is_vertex_decomposable_pure, reg_via_vd_recursion, rp2_six_vertex, stanley_reisner_ideal,
};
use gvdkit::{CmStatus, MonomialOrder};

#[test]
fn decomposable_complexes_in_the_corpus() {
    let mut r = rng(5);
    let (mut decomposable, mut not) = (0, 0);
    for k in 0..120 {
        let complex = random_pure_complex(&mut r, 8);
        let ideal = stanley_reisner_ideal(&complex).unwrap();
        let Some(trace) = is_vertex_decomposable_pure(&complex).unwrap() else {
            not += 1;
            continue;
        };
        decomposable += 1;
        let reg = reg_via_vd_recursion(&complex, &trace).unwrap();
        let direct = invariants_direct(&ideal, CmStatus::Certified).unwrap();
        assert_eq!(Some(reg), direct.reg, "complex {k}: {:?}", complex.facets());
        assert!(
            is_gvd(&ideal, UnmixedPolicy::Structural).is_certified(),
            "complex {k}"
        );
    }
    assert!(decomposable >= 30 && not >= 5, "{decomposable} / {not}");
}

#[test]
fn splits_are_link_and_deletion() {
    let mut r = rng(6);
    for _ in 0..30 {
        let complex = random_pure_complex(&mut r, 6);
        let ideal = stanley_reisner_ideal(&complex).unwrap();
        let n = complex.vertices().len();
        for v in 0..n {
            let Ok(link) = complex.link(v) else { continue };
            let split = one_step_split(&ideal, v, &MonomialOrder::y_block(v, n)).unwrap();
            let del = stanley_reisner_ideal(&complex.deletion(v).unwrap()).unwrap();
            assert!(ideals_equal(&split.n_contracted(), &del).unwrap());
            assert!(ideals_equal(
                &split.c_contracted(),
                &stanley_reisner_ideal(&link).unwrap()
            )
            .unwrap());
        }
    }
}

#[test]
fn projective_plane_is_neither_decomposable_nor_gvd() {
    let rp2 = rp2_six_vertex();
    assert!(is_vertex_decomposable_pure(&rp2).unwrap().is_none());
    let ideal = stanley_reisner_ideal(&rp2).unwrap();
    assert!(!is_gvd(&ideal, UnmixedPolicy::Structural).is_certified());
}
