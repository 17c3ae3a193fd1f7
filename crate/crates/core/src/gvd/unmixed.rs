use serde::{Deserialize, Serialize};

use crate::groebner::{is_variable_generated, Ideal};

/// How unmixedness is established at each node of a decomposition search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnmixedPolicy {
    /// Certify structurally where possible, otherwise assume and annotate.
    #[default]
    Structural,
    /// Skip all checks.
    AssumeUnmixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnmixedOutcome {
    Unit,
    Zero,
    VariableIdeal,
    Principal,
    PrimeHint,
    /// Squarefree monomial ideal whose minimal primes share one height.
    SquarefreeEquidimensional,
    /// Squarefree monomial ideal with minimal primes of different heights.
    Mixed,
    /// No structural certificate applies; treated as unmixed.
    Assumed,
    /// The policy disabled checking.
    Skipped,
}

impl UnmixedOutcome {
    pub fn is_mixed(self) -> bool {
        self == Self::Mixed
    }
}

/// Largest ring for which minimal primes of squarefree monomial ideals are enumerated.
const MAX_COVER_VARS: usize = 20;

pub fn check_unmixed(ideal: &Ideal, policy: UnmixedPolicy) -> UnmixedOutcome {
    if policy == UnmixedPolicy::AssumeUnmixed {
        return UnmixedOutcome::Skipped;
    }
    if ideal.is_zero() {
        return UnmixedOutcome::Zero;
    }
    if ideal.is_unit() {
        return UnmixedOutcome::Unit;
    }
    if ideal.prime_hint() {
        return UnmixedOutcome::PrimeHint;
    }
    if is_variable_generated(ideal) {
        return UnmixedOutcome::VariableIdeal;
    }
    let gb = ideal.grevlex_basis();
    if gb.len() == 1 {
        return UnmixedOutcome::Principal;
    }
    let squarefree_monomial = gb
        .elements()
        .iter()
        .all(|g| g.is_monomial() && g.terms()[0].0.is_squarefree());
    if squarefree_monomial && ideal.ring().len() <= MAX_COVER_VARS {
        let supports: Vec<u32> = gb
            .elements()
            .iter()
            .map(|g| g.terms()[0].0.support().fold(0u32, |m, v| m | (1 << v)))
            .collect();
        let heights = minimal_cover_sizes(&supports, ideal.ring().len());
        return if heights.windows(2).all(|w| w[0] == w[1]) {
            UnmixedOutcome::SquarefreeEquidimensional
        } else {
            UnmixedOutcome::Mixed
        };
    }
    UnmixedOutcome::Assumed
}

/// Sizes of the minimal vertex covers of the hypergraph with edges `edges`
/// (bitmasks over `n` vertices): the heights of the minimal primes.
pub(crate) fn minimal_cover_sizes(edges: &[u32], n: usize) -> Vec<u32> {
    let covers = |mask: u32| edges.iter().all(|e| e & mask != 0);
    let mut sizes = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if !covers(mask) {
            continue;
        }
        let minimal = (0..n).all(|v| mask & (1 << v) == 0 || !covers(mask & !(1 << v)));
        if minimal {
            sizes.push(mask.count_ones());
        }
    }
    sizes.sort_unstable();
    sizes.dedup();
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolynomialRing;

    fn check(vars: &[&str], gens: &[&str]) -> UnmixedOutcome {
        let r = PolynomialRing::new(vars.iter().copied()).unwrap();
        check_unmixed(&Ideal::parse(&r, gens).unwrap(), UnmixedPolicy::Structural)
    }

    #[test]
    fn tiers() {
        assert_eq!(
            check(&["x", "y"], &["x", "x + y"]),
            UnmixedOutcome::VariableIdeal
        );
        assert_eq!(
            check(&["x", "y"], &["x^2*y - y^3"]),
            UnmixedOutcome::Principal
        );
        assert_eq!(
            check(&["x", "y", "z"], &["x*y", "x*z"]),
            UnmixedOutcome::Mixed
        );
        assert_eq!(
            check(&["x", "y", "z"], &["x*y", "y*z", "x*z"]),
            UnmixedOutcome::SquarefreeEquidimensional
        );
        assert_eq!(
            check(&["x", "y", "z", "w"], &["y*z - x*w", "x*y"]),
            UnmixedOutcome::Assumed
        );
        assert_eq!(check(&["x"], &["0"]), UnmixedOutcome::Zero);
    }

    #[test]
    fn covers() {
        // path a-b-c: covers {b}, {a,c}
        assert_eq!(minimal_cover_sizes(&[0b011, 0b110], 3), vec![1, 2]);
    }
}
