use std::fmt;

use serde::{Deserialize, Serialize};

/// How Cohen–Macaulayness of the quotient is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CmStatus {
    /// Implied by a certified decomposition.
    Certified,
    /// Supplied by the caller.
    Asserted,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Hilbertian {
    Hilbertian,
    AlmostHilbertian,
    Neither,
    Unknown,
}

impl fmt::Display for Hilbertian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Hilbertian => "Hilbertian",
            Self::AlmostHilbertian => "AlmostHilbertian",
            Self::Neither => "Neither",
            Self::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Read off the Hilbert series of the ideal.
    Direct,
    /// Assembled from a decomposition tree.
    Recursion,
    /// Evaluated from a combinatorial formula.
    ClosedForm,
}

/// Graded invariants of a quotient `R/I`. `reg` is `None` unless the
/// quotient is known or asserted to be Cohen–Macaulay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    #[serde(rename = "hPoly", skip_serializing_if = "Option::is_none", default)]
    pub h_poly: Option<Vec<i64>>,
    pub dim: usize,
    pub reg: Option<i64>,
    pub e: i64,
    pub a: i64,
    pub hilbertian: Hilbertian,
    pub provenance: Provenance,
    pub cm: CmStatus,
}

impl InvariantReport {
    /// `(reg, e, a)` for comparisons across provenances.
    pub fn triple(&self) -> (Option<i64>, i64, i64) {
        (self.reg, self.e, self.a)
    }
}
