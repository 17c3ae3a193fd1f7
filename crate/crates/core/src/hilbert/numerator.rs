//! Hilbert series numerators of monomial ideals by pivot recursion.

use std::collections::HashMap;

use crate::monomial::Monomial;

/// Integer polynomial in `t`, lowest degree first, no trailing zeros.
pub type IntPoly = Vec<i64>;

pub(crate) fn trim(mut p: IntPoly) -> IntPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub(crate) fn add(a: &[i64], b: &[i64]) -> IntPoly {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = x.checked_add(y).expect("Hilbert numerator overflow");
    }
    trim(out)
}

pub(crate) fn mul(a: &[i64], b: &[i64]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let p = x.checked_mul(*y).expect("Hilbert numerator overflow");
            out[i + j] = out[i + j]
                .checked_add(p)
                .expect("Hilbert numerator overflow");
        }
    }
    trim(out)
}

/// Multiplies by `t^k`.
pub(crate) fn shift(a: &[i64], k: usize) -> IntPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; k];
    out.extend_from_slice(a);
    out
}

pub(crate) fn eval_at_one(a: &[i64]) -> i64 {
    a.iter().sum()
}

/// `1 - t^d`.
fn one_minus_power(d: u64) -> IntPoly {
    let mut p = vec![0i64; d as usize + 1];
    p[0] = 1;
    p[d as usize] -= 1;
    trim(p)
}

/// Minimal generators, sorted; the canonical form of a monomial ideal.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

/// Numerator of the Hilbert series of `R/I` over `(1 - t)^n`, where `I` is
/// generated by `gens` in `n` variables.
pub fn monomial_numerator(gens: &[Monomial]) -> IntPoly {
    let mut memo = HashMap::new();
    numerator(minimalize(gens.to_vec()), &mut memo)
}

fn numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, IntPoly>) -> IntPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    if gens.len() == 1 {
        return one_minus_power(gens[0].degree());
    }
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let n = gens[0].len();
    let mut counts = vec![0usize; n];
    for g in &gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let components = components(&gens, n);
    let result = if components.len() > 1 {
        components
            .into_iter()
            .fold(vec![1], |acc, part| mul(&acc, &numerator(part, memo)))
    } else {
        // ties resolve to the earliest variable
        let pivot = (0..n)
            .max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a)))
            .expect("nonempty ring");
        let x = Monomial::variable(n, pivot);
        let mut plus: Vec<Monomial> = gens
            .iter()
            .filter(|g| g.exponent(pivot) == 0)
            .cloned()
            .collect();
        plus.push(x.clone());
        let colon: Vec<Monomial> = gens
            .iter()
            .map(|g| {
                let e = g.exponent(pivot);
                g.with_exponent(pivot, e.saturating_sub(1))
            })
            .collect();
        let a = numerator(minimalize(plus), memo);
        let b = numerator(minimalize(colon), memo);
        add(&a, &shift(&b, 1))
    };
    memo.insert(gens, result.clone());
    result
}

/// Groups generators into classes connected by shared variables.
fn components(gens: &[Monomial], n: usize) -> Vec<Vec<Monomial>> {
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut parent: Vec<usize> = (0..gens.len()).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        let mut c = i;
        while p[c] != r {
            let next = p[c];
            p[c] = r;
            c = next;
        }
        r
    }
    for (i, g) in gens.iter().enumerate() {
        for v in g.support() {
            match owner[v] {
                None => owner[v] = Some(i),
                Some(j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Monomial>)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(k, _)| *k == r) {
            Some((_, v)) => v.push(g.clone()),
            None => groups.push((r, vec![g.clone()])),
        }
    }
    groups.into_iter().map(|(_, v)| v).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn principal_and_variables() {
        assert_eq!(monomial_numerator(&[m(&[2, 0])]), vec![1, 0, -1]);
        assert_eq!(
            monomial_numerator(&[m(&[1, 0]), m(&[0, 1])]),
            vec![1, -2, 1]
        );
        assert_eq!(monomial_numerator(&[]), vec![1]);
        assert_eq!(monomial_numerator(&[m(&[0, 0])]), Vec::<i64>::new());
    }

    #[test]
    fn shared_variable_pivot() {
        // <xy, xz> = x<y,z>: 1 - 2t^2 + t^3
        assert_eq!(
            monomial_numerator(&[m(&[1, 1, 0]), m(&[1, 0, 1])]),
            vec![1, 0, -2, 1]
        );
    }
}
