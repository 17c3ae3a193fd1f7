use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{CmStatus, Hilbertian, InvariantReport, Provenance};

use super::graph::Graph;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Self(parts))
    }

    /// Parses `"3,3,3,2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts = text
            .split(',')
            .map(|s| {
                s.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidPartition(format!("`{}` is not a positive integer", s.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts `n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// 1-based part, `λ_i`.
    pub fn part(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// All partitions of `size`, largest parts first.
    pub fn all_of_size(size: usize) -> Vec<Self> {
        fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if size > 0 {
            rec(size, size, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// The Ferrers graph: `v_i` is joined to `u_1, …, u_{λ_i}`; edge
/// `{v_i, u_j}` is labelled `e{i}_{j}`, rows first.
pub fn ferrers_graph(lambda: &Partition) -> Graph {
    let n = lambda.len();
    let m = lambda.part(1);
    let mut vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    vertices.extend((1..=m).map(|j| format!("u{j}")));
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in 1..=lambda.part(i) {
            edges.push((format!("e{i}_{j}"), format!("v{i}"), format!("u{j}")));
        }
    }
    Graph::from_edges(&vertices, &edges).expect("Ferrers graphs are simple")
}

/// Regularity of `K[E]/I_λ` from the partition alone.
pub fn ferrers_regularity(lambda: &Partition) -> i64 {
    let n = lambda.len();
    if n == 1 || lambda.part(2) == 1 {
        return 0;
    }
    let s = lambda.parts().iter().filter(|&&p| p >= 2).count();
    let mut best = s as i64 - 1;
    for j in 2..=s {
        best = best.min(lambda.part(j) as i64 + j as i64 - 3);
    }
    best
}

/// Multiplicity of `K[E]/I_λ` by the nested sum over `λ_2, …, λ_n`.
pub fn ferrers_multiplicity(lambda: &Partition) -> i64 {
    let n = lambda.len();
    if n == 1 {
        return 1;
    }
    let l2 = lambda.part(2) as i64;
    // depth k sums j from λ_2 − λ_{k+2} + 1 up to `upper`; depth 0 is the summand itself
    fn nested(lambda: &Partition, l2: i64, k: usize, upper: i64) -> i64 {
        if k == 0 {
            return upper;
        }
        let lower = l2 - lambda.part(k + 2) as i64 + 1;
        (lower..=upper).map(|j| nested(lambda, l2, k - 1, j)).sum()
    }
    nested(lambda, l2, n - 2, l2)
}

/// Closed-form invariants of the toric ideal of a Ferrers graph.
pub fn ferrers_invariants(lambda: &Partition) -> InvariantReport {
    let n = lambda.len();
    let m = lambda.part(1);
    let dim = n + m - 1;
    let reg = ferrers_regularity(lambda);
    let a = reg - dim as i64;
    InvariantReport {
        h_poly: None,
        dim,
        reg: Some(reg),
        e: ferrers_multiplicity(lambda),
        a,
        hilbertian: if a < 0 {
            Hilbertian::Hilbertian
        } else if a == 0 {
            Hilbertian::AlmostHilbertian
        } else {
            Hilbertian::Neither
        },
        provenance: Provenance::ClosedForm,
        cm: CmStatus::Certified,
    }
}
