//! Invariants of `R/I` assembled from a decomposition tree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{generating_variables, Ideal};
use crate::hilbert::{
    invariants_direct, poly_add, poly_shift, CmStatus, Hilbertian, IntPoly, InvariantReport,
    Provenance,
};
use crate::order::MonomialOrder;

use super::split::{one_step_split, Degeneracy, GvdSplit};
use super::tree::{GvdTree, Verdict};

/// Values carried up the tree; `dim` is the Krull dimension of the quotient
/// by the node's ideal in the node's ring.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Node {
    h: IntPoly,
    dim: usize,
    reg: i64,
    e: i64,
    a: i64,
}

fn evaluate(tree: &GvdTree) -> Result<Node> {
    match &tree.verdict {
        Verdict::BaseUnit => Err(Error::UnitIdeal),
        Verdict::BaseVariables => {
            let k = generating_variables(&tree.ideal)
                .map(|v| v.len())
                .unwrap_or(0);
            let dim = tree.ideal.ring().len() - k;
            Ok(Node {
                h: vec![1],
                dim,
                reg: 0,
                e: 1,
                a: -(dim as i64),
            })
        }
        Verdict::Failed { .. } => Err(Error::NotCertified),
        Verdict::Decomposed {
            split,
            c_branch,
            n_branch,
        } => {
            let n = evaluate(n_branch)?;
            match split.degeneracy {
                // R/I is isomorphic to R'/N
                Degeneracy::DegenerateUnitC => Ok(n),
                // I is extended from N, so y is a free variable
                Degeneracy::DegenerateEqualRadicals => Ok(Node {
                    dim: n.dim + 1,
                    a: n.a - 1,
                    ..n
                }),
                Degeneracy::Nondegenerate => {
                    let c = evaluate(c_branch)?;
                    Ok(combine(&n, &c))
                }
            }
        }
    }
}

fn combine(n: &Node, c: &Node) -> Node {
    Node {
        h: poly_add(&n.h, &poly_shift(&c.h, 1)),
        dim: n.dim,
        reg: n.reg.max(c.reg + 1),
        e: n.e + c.e,
        a: n.a.max(c.a),
    }
}

fn node_report(node: Node, cm: CmStatus) -> InvariantReport {
    let hilbertian = match node.a.signum() {
        -1 => Hilbertian::Hilbertian,
        0 => Hilbertian::AlmostHilbertian,
        _ => Hilbertian::Neither,
    };
    InvariantReport {
        h_poly: Some(node.h),
        dim: node.dim,
        reg: Some(node.reg),
        e: node.e,
        a: node.a,
        hilbertian,
        provenance: Provenance::Recursion,
        cm,
    }
}

/// Evaluates the regularity, multiplicity and a-invariant recursions on a
/// certified tree. The h-polynomial is assembled alongside.
pub fn invariants_via_recursion(tree: &GvdTree) -> Result<InvariantReport> {
    if !tree.is_certified() {
        return Err(Error::NotCertified);
    }
    Ok(node_report(evaluate(tree)?, CmStatus::Certified))
}

/// One nondegenerate split with invariants of `C` and `N` read directly,
/// for ideals whose Cohen–Macaulayness (and that of `N`) is asserted.
#[derive(Clone, Debug, Serialize)]
pub struct AssertedSplit {
    pub y: String,
    pub order: String,
    #[serde(rename = "C")]
    pub c: InvariantReport,
    #[serde(rename = "N")]
    pub n: InvariantReport,
    pub combined: InvariantReport,
}

/// Finds the first variable, in ring order, with a valid nondegenerate split
/// under the block order and combines the directly computed invariants of
/// the contracted `C` and `N`.
pub fn invariants_asserted(ideal: &Ideal) -> Result<AssertedSplit> {
    let n = ideal.ring().len();
    for y in 0..n {
        let split = one_step_split(ideal, y, &MonomialOrder::y_block(y, n))?;
        if split.valid && split.degeneracy == Degeneracy::Nondegenerate {
            return asserted_from_split(ideal, &split);
        }
    }
    Err(Error::InvalidSplit)
}

pub fn asserted_from_split(ideal: &Ideal, split: &GvdSplit) -> Result<AssertedSplit> {
    if !split.valid || split.degeneracy != Degeneracy::Nondegenerate {
        return Err(Error::InvalidSplit);
    }
    let c = invariants_direct(&split.c_contracted(), CmStatus::Asserted)?;
    let n = invariants_direct(&split.n_contracted(), CmStatus::Asserted)?;
    let as_node = |r: &InvariantReport| Node {
        h: r.h_poly.clone().unwrap_or_default(),
        dim: r.dim,
        reg: r.reg.expect("asserted"),
        e: r.e,
        a: r.a,
    };
    let combined = node_report(combine(&as_node(&n), &as_node(&c)), CmStatus::Asserted);
    Ok(AssertedSplit {
        y: split.y_name().to_string(),
        order: split.order.label(ideal.ring().variables()),
        c,
        n,
        combined,
    })
}

/// Outcome of the a-invariant sign audit over a set of ideals.
#[derive(Clone, Debug, Default, Serialize)]
pub struct NonpositivityAudit {
    pub checked: usize,
    pub c_saturated: usize,
    pub violations: Vec<String>,
}

impl NonpositivityAudit {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records one certified ideal; `strict` marks a C-saturated certificate.
    pub fn record(&mut self, label: &str, a: i64, strict: bool) {
        self.checked += 1;
        if strict {
            self.c_saturated += 1;
        }
        if a > 0 || (strict && a >= 0) {
            self.violations.push(format!(
                "{label}: a = {a}{}",
                if strict { " (C-saturated)" } else { "" }
            ));
        }
    }
}

/// Checks `a <= 0` on certified ideals and `a < 0` on C-saturated ones.
pub fn nonpositivity_audit(
    ideals: &[(String, Ideal)],
    policy: super::UnmixedPolicy,
) -> Result<NonpositivityAudit> {
    let mut audit = NonpositivityAudit::default();
    for (label, ideal) in ideals {
        let tree = super::is_gvd(ideal, policy);
        if !tree.is_certified() || ideal.is_unit() {
            continue;
        }
        let a = invariants_direct(ideal, CmStatus::Certified)?.a;
        let strict = super::is_c_saturated(ideal, policy).is_certified();
        audit.record(label, a, strict);
    }
    Ok(audit)
}
