use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial order on a ring with `n` variables.
///
/// Permutations list variable indices from most to least significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex(Vec<usize>),
    GrevLex(Vec<usize>),
    /// Compares the exponent of `y` first, then falls back to `tail`.
    YBlock {
        y: usize,
        tail: Box<MonomialOrder>,
    },
    /// Elimination order: grevlex on the `block` variables dominates `tail`.
    Elimination {
        block: Vec<usize>,
        tail: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn lex(n: usize) -> Self {
        Self::Lex((0..n).collect())
    }

    pub fn grevlex(n: usize) -> Self {
        Self::GrevLex((0..n).collect())
    }

    /// The canonical y-compatible order: y-degree first, grevlex on the rest.
    pub fn y_block(y: usize, n: usize) -> Self {
        Self::YBlock {
            y,
            tail: Box::new(Self::grevlex(n)),
        }
    }

    /// Lex with `y` as the largest variable, remaining variables in ring order.
    pub fn lex_y_first(y: usize, n: usize) -> Self {
        let mut perm = vec![y];
        perm.extend((0..n).filter(|&i| i != y));
        Self::Lex(perm)
    }

    pub fn elimination(block: Vec<usize>, n: usize) -> Self {
        Self::Elimination {
            block,
            tail: Box::new(Self::grevlex(n)),
        }
    }

    /// Checks that every permutation is a permutation of `0..n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        fn is_perm(p: &[usize], n: usize) -> bool {
            let mut seen = vec![false; n];
            p.len() == n
                && p.iter().all(|&i| {
                    if i >= n || seen[i] {
                        false
                    } else {
                        seen[i] = true;
                        true
                    }
                })
        }
        match self {
            Self::Lex(p) | Self::GrevLex(p) => {
                if is_perm(p, n) {
                    Ok(())
                } else {
                    Err(Error::InvalidOrder(format!(
                        "{p:?} is not a permutation of {n} variables"
                    )))
                }
            }
            Self::YBlock { y, tail } => {
                if *y >= n {
                    return Err(Error::InvalidOrder(format!(
                        "variable index {y} out of range"
                    )));
                }
                tail.validate(n)
            }
            Self::Elimination { block, tail } => {
                if block.iter().any(|&i| i >= n) {
                    return Err(Error::InvalidOrder("block index out of range".into()));
                }
                tail.validate(n)
            }
        }
    }

    /// Whether `in_<(in_y f) = in_<(f)` holds for every `f`.
    pub fn is_y_compatible(&self, y: usize) -> bool {
        match self {
            Self::YBlock { y: v, .. } => *v == y,
            Self::Lex(p) => p.first() == Some(&y),
            Self::Elimination { block, .. } => block.as_slice() == [y],
            Self::GrevLex(p) => p.len() == 1 && p[0] == y,
        }
    }

    /// Short human label used in reports.
    pub fn label(&self, names: &[String]) -> String {
        let list = |p: &[usize]| {
            p.iter()
                .map(|&i| names[i].as_str())
                .collect::<Vec<_>>()
                .join(">")
        };
        match self {
            Self::Lex(p) => format!("lex({})", list(p)),
            Self::GrevLex(p) => format!("grevlex({})", list(p)),
            Self::YBlock { y, tail } => format!("yblock({}; {})", names[*y], tail.label(names)),
            Self::Elimination { block, tail } => {
                format!("elim({}; {})", list(block), tail.label(names))
            }
        }
    }

    /// `Greater` means `a > b` in this order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            Self::Lex(p) => lex_on(p, ea, eb),
            Self::GrevLex(p) => grevlex_on(p, ea, eb),
            Self::YBlock { y, tail } => ea[*y].cmp(&eb[*y]).then_with(|| tail.cmp(a, b)),
            Self::Elimination { block, tail } => {
                grevlex_on(block, ea, eb).then_with(|| tail.cmp(a, b))
            }
        }
    }
}

fn lex_on(perm: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &i in perm {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn grevlex_on(perm: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = perm.iter().map(|&i| a[i] as u64).sum();
    let db: u64 = perm.iter().map(|&i| b[i] as u64).sum();
    if da != db {
        return da.cmp(&db);
    }
    for &i in perm.iter().rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn lex_prefers_first_variable() {
        let o = MonomialOrder::lex(2);
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn y_block_dominates_tail() {
        // variables (x, y): y*x versus x^3
        let o = MonomialOrder::y_block(1, 2);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[3, 0])), Ordering::Greater);
    }

    #[test]
    fn grevlex_tie_break() {
        // x > y > z: xyz is smaller than x^3
        let o = MonomialOrder::grevlex(3);
        assert_eq!(o.cmp(&m(&[1, 1, 1]), &m(&[3, 0, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn compatibility_flags() {
        assert!(MonomialOrder::y_block(2, 4).is_y_compatible(2));
        assert!(!MonomialOrder::y_block(2, 4).is_y_compatible(1));
        assert!(MonomialOrder::lex_y_first(3, 4).is_y_compatible(3));
        assert!(!MonomialOrder::grevlex(4).is_y_compatible(0));
    }

    #[test]
    fn validate_rejects_bad_permutations() {
        assert!(MonomialOrder::Lex(vec![0, 0]).validate(2).is_err());
        assert!(MonomialOrder::lex(3).validate(2).is_err());
        assert!(MonomialOrder::y_block(5, 3).validate(3).is_err());
    }
}
