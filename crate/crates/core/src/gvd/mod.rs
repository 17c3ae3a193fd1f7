//! Geometric vertex decompositions: single splits, the recursive certifier,
//! and the invariant recursions evaluated on certified trees.

mod recursion;
mod split;
mod tree;
mod unmixed;

pub use recursion::{
    asserted_from_split, invariants_asserted, invariants_via_recursion, nonpositivity_audit,
    AssertedSplit, NonpositivityAudit,
};
pub use split::{
    one_step_split, same_radical, verify_h_identity, verify_series_identity, Degeneracy, GvdSplit,
};
pub use tree::{
    is_c_saturated, is_gvd, search_with, GvdTree, OrderSearch, SearchOptions, TreeReport, Verdict,
};
pub use unmixed::{check_unmixed, UnmixedOutcome, UnmixedPolicy};
