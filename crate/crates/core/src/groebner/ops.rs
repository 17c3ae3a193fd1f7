use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::polynomial::Polynomial;
use crate::ring::PolynomialRing;

use super::ideal::Ideal;

/// Ideal membership via the reduced grevlex basis.
pub fn contains(ideal: &Ideal, f: &Polynomial) -> Result<bool> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    Ok(ideal.grevlex_basis().normal_form(f)?.is_zero())
}

/// Equality of ideals by comparison of reduced grevlex bases.
pub fn ideals_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(a.grevlex_basis().elements() == b.grevlex_basis().elements())
}

/// Extends every generator to a ring with extra variables appended.
fn lift(ideal: &Ideal, ring: &PolynomialRing) -> Vec<Polynomial> {
    let extra = ring.len() - ideal.ring().len();
    ideal
        .generators()
        .iter()
        .map(|g| {
            Polynomial::from_terms(
                ring,
                g.terms().iter().map(|(m, c)| (m.extend(extra), c.clone())),
            )
        })
        .collect()
}

/// Intersection via `t*I + (1-t)*J` and elimination of `t`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if a.is_unit() {
        return Ok(b.clone());
    }
    if b.is_unit() {
        return Ok(a.clone());
    }
    let (ext, t) = ring.with_auxiliary("t");
    let tv = Polynomial::variable_at(&ext, t);
    let one_minus_t = &Polynomial::one(&ext) - &tv;
    let mut gens: Vec<Polynomial> = lift(a, &ext).iter().map(|g| &tv * g).collect();
    gens.extend(lift(b, &ext).iter().map(|g| &one_minus_t * g));
    let big = Ideal::new_unchecked(&ext, gens);
    let order = MonomialOrder::elimination(vec![t], ext.len());
    let kept = big
        .groebner(&order)
        .elements()
        .iter()
        .filter(|g| !g.involves(t))
        .map(|g| g.restrict_index(t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new_unchecked(ring, kept))
}

/// `I ∩ K[remaining variables]`, expressed over the smaller ring.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    if vars.is_empty() {
        return Ok(ideal.clone());
    }
    if let Some(&bad) = vars.iter().find(|&&v| v >= ring.len()) {
        return Err(Error::InvalidArgument(format!(
            "variable index {bad} out of range"
        )));
    }
    if vars.len() == ring.len() {
        return Err(Error::InvalidRing("cannot eliminate every variable".into()));
    }
    let order = MonomialOrder::elimination(vars.to_vec(), ring.len());
    let keep: Vec<bool> = (0..ring.len()).map(|i| !vars.contains(&i)).collect();
    let small = ring.retain(&keep);
    let gb = ideal.groebner(&order);
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|g| vars.iter().all(|&v| !g.involves(v)))
        .map(|g| {
            Polynomial::from_terms(
                &small,
                g.terms().iter().map(|(m, c)| (m.retain(&keep), c.clone())),
            )
        })
        .collect();
    Ok(Ideal::new_unchecked(&small, kept))
}

/// Radical membership: `f ∈ √I` iff `1 ∈ I + ⟨1 - w*f⟩` with `w` fresh.
pub fn in_radical(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() || contains(ideal, f)? {
        return Ok(true);
    }
    let (ext, w) = ideal.ring().with_auxiliary("w");
    let mut gens = lift(ideal, &ext);
    let lifted = Polynomial::from_terms(
        &ext,
        f.terms().iter().map(|(m, c)| (m.extend(1), c.clone())),
    );
    let wf = &Polynomial::variable_at(&ext, w) * &lifted;
    gens.push(&Polynomial::one(&ext) - &wf);
    Ok(Ideal::new_unchecked(&ext, gens).is_unit())
}

/// Whether the reduced grevlex basis consists of variables only (`⟨0⟩` included).
pub fn is_variable_generated(ideal: &Ideal) -> bool {
    ideal
        .grevlex_basis()
        .elements()
        .iter()
        .all(|g| g.is_monomial() && g.terms()[0].0.degree() == 1)
}

/// Indices of the variables generating a variable-generated ideal.
pub(crate) fn generating_variables(ideal: &Ideal) -> Option<Vec<usize>> {
    if !is_variable_generated(ideal) {
        return None;
    }
    let mut v: Vec<usize> = ideal
        .grevlex_basis()
        .elements()
        .iter()
        .map(|g| g.terms()[0].0.support().next().expect("degree one"))
        .collect();
    v.sort_unstable();
    Some(v)
}

/// Naive check used by tests: is some power `f^k`, `k <= bound`, in the ideal.
pub fn power_in_ideal(f: &Polynomial, ideal: &Ideal, bound: u32) -> Result<bool> {
    let mut p = Polynomial::one(ideal.ring());
    for _ in 0..bound {
        p = &p * f;
        if contains(ideal, &p)? {
            return Ok(true);
        }
    }
    Ok(false)
}
