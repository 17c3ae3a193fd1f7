//! Reference ideals with known decomposition behaviour, shared by tests,
//! the command line and the acceptance harness.

use crate::groebner::Ideal;
use crate::ring::PolynomialRing;

fn build(vars: &[&str], gens: &[&str]) -> Ideal {
    let ring = PolynomialRing::new(vars.iter().copied()).expect("distinct names");
    Ideal::parse(&ring, gens).expect("catalog entries parse")
}

/// GVD in six variables with `reg(R/I) = 3`, `e = 8`, `a = -1`.
pub fn six_variable_gvd() -> Ideal {
    build(
        &["y", "z", "s", "x", "w", "r"],
        &["y*(z*s - x^2)", "y*w*r", "w*r*(z^2 + z*x + w*r + s^2)"],
    )
}

/// Same shape with a different last factor: the split at `y` is valid and
/// the contracted pieces are Cohen–Macaulay, but `N` is not GVD.
pub fn six_variable_weakly_gvd() -> Ideal {
    build(
        &["y", "z", "s", "x", "w", "r"],
        &["y*(z*s - x^2)", "y*w*r", "w*r*(x^2 + z^2 + w*r + s^2)"],
    )
}

/// `⟨yz - xw, xy⟩`: Cohen–Macaulay, not GVD, with a split at `x`.
pub fn binomial_pair() -> Ideal {
    build(&["x", "y", "z", "w"], &["y*z - x*w", "x*y"])
}

/// `⟨yz, x + z⟩`: GVD with `a = 0`, but every process meets an irrelevant `C`.
pub fn c_unsaturated_pair() -> Ideal {
    build(&["y", "x", "z"], &["y*z", "x + z"])
}

/// `⟨xyz⟩`, the Stanley–Reisner ideal of the boundary of a triangle.
pub fn triangle_boundary() -> Ideal {
    build(&["x", "y", "z"], &["x*y*z"])
}

/// Every entry with a short name.
pub fn all() -> Vec<(&'static str, Ideal)> {
    vec![
        ("six-variable-gvd", six_variable_gvd()),
        ("six-variable-weakly-gvd", six_variable_weakly_gvd()),
        ("binomial-pair", binomial_pair()),
        ("c-unsaturated-pair", c_unsaturated_pair()),
        ("triangle-boundary", triangle_boundary()),
    ]
}
