use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::groebner::{is_variable_generated, Ideal};
use crate::hilbert::HilbertData;
use crate::order::MonomialOrder;

use super::split::{one_step_split, Degeneracy, GvdSplit};
use super::unmixed::{check_unmixed, UnmixedOutcome, UnmixedPolicy};

/// Which `y`-compatible orders are tried at each variable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderSearch {
    /// The block order `y > grevlex` only.
    #[default]
    YBlock,
    /// The block order, then lex with `y` first.
    WithLex,
}

impl OrderSearch {
    fn orders(self, y: usize, n: usize) -> Vec<MonomialOrder> {
        match self {
            Self::YBlock => vec![MonomialOrder::y_block(y, n)],
            Self::WithLex => vec![
                MonomialOrder::y_block(y, n),
                MonomialOrder::lex_y_first(y, n),
            ],
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SearchOptions {
    pub policy: UnmixedPolicy,
    pub orders: OrderSearch,
    /// Reject processes in which a contracted `C` is the irrelevant ideal.
    pub c_saturated: bool,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    BaseUnit,
    BaseVariables,
    Decomposed {
        split: Box<GvdSplit>,
        c_branch: Arc<GvdTree>,
        n_branch: Arc<GvdTree>,
    },
    Failed {
        reasons: Vec<String>,
    },
}

/// A node of a decomposition process together with its verdict.
#[derive(Clone, Debug)]
pub struct GvdTree {
    pub ideal: Ideal,
    pub verdict: Verdict,
    pub unmixed: UnmixedOutcome,
}

impl GvdTree {
    pub fn is_certified(&self) -> bool {
        !matches!(self.verdict, Verdict::Failed { .. })
    }

    pub fn depth(&self) -> usize {
        match &self.verdict {
            Verdict::Decomposed {
                c_branch, n_branch, ..
            } => 1 + c_branch.depth().max(n_branch.depth()),
            _ => 0,
        }
    }

    /// Whether any node relied on assumed unmixedness.
    pub fn relies_on_assumption(&self) -> bool {
        matches!(
            self.unmixed,
            UnmixedOutcome::Assumed | UnmixedOutcome::Skipped
        ) || match &self.verdict {
            Verdict::Decomposed {
                c_branch, n_branch, ..
            } => c_branch.relies_on_assumption() || n_branch.relies_on_assumption(),
            _ => false,
        }
    }

    /// Visits every decomposed node with its split, parents first.
    pub fn for_each_split(&self, visit: &mut dyn FnMut(&Ideal, &GvdSplit)) {
        if let Verdict::Decomposed {
            split,
            c_branch,
            n_branch,
        } = &self.verdict
        {
            visit(&self.ideal, split);
            if split.degeneracy != Degeneracy::DegenerateUnitC {
                c_branch.for_each_split(visit);
            }
            n_branch.for_each_split(visit);
        }
    }

    pub fn report(&self) -> TreeReport {
        let ring = self.ideal.ring().variables().to_vec();
        let generators = self.ideal.generator_strings();
        let mut node = TreeReport {
            ring,
            generators,
            verdict: "",
            unmixed: self.unmixed,
            y: None,
            order: None,
            degeneracy: None,
            c: None,
            n: None,
            c_branch: None,
            n_branch: None,
            reasons: Vec::new(),
        };
        match &self.verdict {
            Verdict::BaseUnit => node.verdict = "base-unit",
            Verdict::BaseVariables => node.verdict = "base-variables",
            Verdict::Failed { reasons } => {
                node.verdict = "failed";
                node.reasons = reasons.clone();
            }
            Verdict::Decomposed {
                split,
                c_branch,
                n_branch,
            } => {
                let names = self.ideal.ring().variables();
                node.verdict = "decomposed";
                node.y = Some(split.y_name().to_string());
                node.order = Some(split.order.label(names));
                node.degeneracy = Some(split.degeneracy);
                node.c = Some(split.c_contracted().generator_strings());
                node.n = Some(split.n_contracted().generator_strings());
                node.c_branch = Some(Box::new(c_branch.report()));
                node.n_branch = Some(Box::new(n_branch.report()));
            }
        }
        node
    }
}

/// Serializable view of a [`GvdTree`].
#[derive(Clone, Debug, Serialize)]
pub struct TreeReport {
    pub ring: Vec<String>,
    pub generators: Vec<String>,
    pub verdict: &'static str,
    pub unmixed: UnmixedOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degeneracy: Option<Degeneracy>,
    #[serde(rename = "C", skip_serializing_if = "Option::is_none")]
    pub c: Option<Vec<String>>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n: Option<Vec<String>>,
    #[serde(rename = "cBranch", skip_serializing_if = "Option::is_none")]
    pub c_branch: Option<Box<TreeReport>>,
    #[serde(rename = "nBranch", skip_serializing_if = "Option::is_none")]
    pub n_branch: Option<Box<TreeReport>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reasons: Vec<String>,
}

type MemoKey = (Vec<String>, Vec<String>);

/// Searches for a geometric vertex decomposition process.
pub fn is_gvd(ideal: &Ideal, policy: UnmixedPolicy) -> GvdTree {
    search_with(
        ideal,
        SearchOptions {
            policy,
            ..SearchOptions::default()
        },
    )
}

pub fn search_with(ideal: &Ideal, options: SearchOptions) -> GvdTree {
    let mut memo = HashMap::new();
    Arc::unwrap_or_clone(search(ideal, options, &mut memo))
}

/// Searches for a process in which no contracted `C` is irrelevant.
pub fn is_c_saturated(ideal: &Ideal, policy: UnmixedPolicy) -> GvdTree {
    search_with(
        ideal,
        SearchOptions {
            policy,
            c_saturated: true,
            ..SearchOptions::default()
        },
    )
}

/// Generated by every variable of a nonempty ring.
fn is_irrelevant(ideal: &Ideal) -> bool {
    let n = ideal.ring().len();
    n > 0 && is_variable_generated(ideal) && ideal.grevlex_basis().len() == n
}

fn failed(ideal: &Ideal, unmixed: UnmixedOutcome, reasons: Vec<String>) -> Arc<GvdTree> {
    Arc::new(GvdTree {
        ideal: ideal.clone(),
        verdict: Verdict::Failed { reasons },
        unmixed,
    })
}

fn search(
    ideal: &Ideal,
    options: SearchOptions,
    memo: &mut HashMap<MemoKey, Arc<GvdTree>>,
) -> Arc<GvdTree> {
    let unmixed = check_unmixed(ideal, options.policy);
    if unmixed.is_mixed() {
        return failed(ideal, unmixed, vec!["ideal is not unmixed".into()]);
    }
    if ideal.is_unit() {
        return Arc::new(GvdTree {
            ideal: ideal.clone(),
            verdict: Verdict::BaseUnit,
            unmixed,
        });
    }
    if is_variable_generated(ideal) {
        if options.c_saturated && is_irrelevant(ideal) {
            return failed(ideal, unmixed, vec!["ideal is the irrelevant ideal".into()]);
        }
        return Arc::new(GvdTree {
            ideal: ideal.clone(),
            verdict: Verdict::BaseVariables,
            unmixed,
        });
    }
    let key = (ideal.ring().variables().to_vec(), ideal.signature());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }

    let ring = ideal.ring();
    let n = ring.len();
    let homogeneous = ideal.is_homogeneous();
    let mut reasons = Vec::new();
    let mut result = None;
    'vars: for y in 0..n {
        let name = ring.name(y);
        for order in options.orders.orders(y, n) {
            let split = match one_step_split(ideal, y, &order) {
                Ok(s) => s,
                Err(e) => {
                    reasons.push(format!("{name}: {e}"));
                    continue;
                }
            };
            if !split.valid {
                reasons.push(format!("{name}: in_y(I) differs from C ∩ (N + <{name}>)"));
                continue;
            }
            if homogeneous
                && split.degeneracy == Degeneracy::Nondegenerate
                && !heights_consistent(ideal, &split)
            {
                reasons.push(format!(
                    "{name}: heights of C and N are inconsistent with an unmixed I"
                ));
                continue;
            }
            let c = split.c_contracted();
            if options.c_saturated
                && split.degeneracy != Degeneracy::DegenerateUnitC
                && is_irrelevant(&c)
            {
                reasons.push(format!("{name}: C is the irrelevant ideal"));
                continue;
            }
            let c_branch = search(&c, options, memo);
            if !c_branch.is_certified() {
                reasons.push(format!("{name}: C is not decomposable"));
                continue;
            }
            let n_branch = search(&split.n_contracted(), options, memo);
            if !n_branch.is_certified() {
                reasons.push(format!("{name}: N is not decomposable"));
                continue;
            }
            result = Some(Arc::new(GvdTree {
                ideal: ideal.clone(),
                verdict: Verdict::Decomposed {
                    split: Box::new(split),
                    c_branch,
                    n_branch,
                },
                unmixed,
            }));
            break 'vars;
        }
    }
    let tree = result.unwrap_or_else(|| failed(ideal, unmixed, reasons));
    memo.insert(key, tree.clone());
    tree
}

/// Necessary condition for a nondegenerate decomposition of an unmixed ideal:
/// `dim R/I = dim R/C = dim R/N - 1`.
fn heights_consistent(ideal: &Ideal, split: &GvdSplit) -> bool {
    let dims = [ideal, &split.c, &split.n].map(|i| HilbertData::of(i).ok().and_then(|d| d.dim));
    match dims {
        [Some(i), Some(c), Some(n)] => i == c && n == i + 1,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolynomialRing;

    fn ring(vars: &[&str]) -> PolynomialRing {
        PolynomialRing::new(vars.iter().copied()).unwrap()
    }

    fn ideal(r: &PolynomialRing, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    #[test]
    fn six_variable_example_is_gvd() {
        let r = ring(&["y", "z", "s", "x", "w", "r"]);
        let i = ideal(
            &r,
            &["y*(z*s - x^2)", "y*w*r", "w*r*(z^2 + z*x + w*r + s^2)"],
        );
        let t = is_gvd(&i, UnmixedPolicy::Structural);
        assert!(t.is_certified(), "{:?}", t.report());
        assert!(t.depth() <= 6);
    }

    #[test]
    fn weakly_decomposable_example_is_not_gvd() {
        let r = ring(&["y", "z", "s", "x", "w", "r"]);
        let i = ideal(
            &r,
            &["y*(z*s - x^2)", "y*w*r", "w*r*(x^2 + z^2 + w*r + s^2)"],
        );
        assert!(!is_gvd(&i, UnmixedPolicy::Structural).is_certified());
    }

    #[test]
    fn binomial_pair_fails() {
        let r = ring(&["x", "y", "z", "w"]);
        let t = is_gvd(&ideal(&r, &["y*z - x*w", "x*y"]), UnmixedPolicy::Structural);
        match &t.verdict {
            Verdict::Failed { reasons } => assert!(!reasons.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn base_cases() {
        let r = ring(&["x", "y"]);
        assert!(matches!(
            is_gvd(&ideal(&r, &["x", "y"]), UnmixedPolicy::Structural).verdict,
            Verdict::BaseVariables
        ));
        assert!(matches!(
            is_gvd(&Ideal::unit(&r), UnmixedPolicy::Structural).verdict,
            Verdict::BaseUnit
        ));
        assert!(matches!(
            is_gvd(&Ideal::zero(&r), UnmixedPolicy::Structural).verdict,
            Verdict::BaseVariables
        ));
    }

    #[test]
    fn c_saturation() {
        let r = ring(&["y", "x", "z"]);
        let i = ideal(&r, &["y*z", "x + z"]);
        assert!(is_gvd(&i, UnmixedPolicy::Structural).is_certified());
        assert!(!is_c_saturated(&i, UnmixedPolicy::Structural).is_certified());
        let c4 = ring(&["e1", "e2", "e3", "e4"]);
        assert!(
            is_c_saturated(&ideal(&c4, &["e1*e3 - e2*e4"]), UnmixedPolicy::Structural)
                .is_certified()
        );
        assert!(is_c_saturated(&Ideal::zero(&c4), UnmixedPolicy::Structural).is_certified());
    }

    #[test]
    fn mixed_monomial_ideal_fails() {
        let r = ring(&["x", "y", "z"]);
        let t = is_gvd(&ideal(&r, &["x*y", "x*z"]), UnmixedPolicy::Structural);
        assert!(!t.is_certified());
        // the height condition rejects every split even without the unmixedness check
        assert!(!is_gvd(&ideal(&r, &["x*y", "x*z"]), UnmixedPolicy::AssumeUnmixed).is_certified());
    }
}
