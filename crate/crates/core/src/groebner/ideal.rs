use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::polynomial::Polynomial;
use crate::ring::PolynomialRing;

use super::buchberger::{self, Terms};

/// A reduced Gröbner basis under a fixed monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: PolynomialRing,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    sorted: Vec<Terms>,
}

impl GroebnerBasis {
    pub(crate) fn from_sorted(
        ring: &PolynomialRing,
        order: &MonomialOrder,
        sorted: Vec<Terms>,
    ) -> Self {
        let elements = sorted
            .iter()
            .map(|t| Polynomial::from_terms(ring, t.iter().cloned()))
            .collect();
        Self {
            ring: ring.clone(),
            order: order.clone(),
            elements,
            sorted,
        }
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Basis elements, monic, sorted by leading monomial (largest first).
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Always true: only reduced bases are constructed.
    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|t| t[0].0.clone()).collect()
    }

    /// Remainder of multivariate division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let refs: Vec<&Terms> = self.sorted.iter().collect();
        let r = buchberger::reduce(buchberger::sort_terms(f, &self.order), &refs, &self.order);
        Ok(Polynomial::from_terms(&self.ring, r))
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        buchberger::satisfies_buchberger_criterion(&self.sorted, &self.order)
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.elements == other.elements
    }
}

impl Eq for GroebnerBasis {}

type Cache = Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>;

/// Ideal given by generators, with reduced Gröbner bases cached per order.
///
/// Clones share the cache.
#[derive(Clone)]
pub struct Ideal {
    ring: PolynomialRing,
    generators: Vec<Polynomial>,
    prime_hint: bool,
    cache: Cache,
}

impl Ideal {
    pub fn new(ring: &PolynomialRing, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Self::new_unchecked(ring, generators))
    }

    pub(crate) fn new_unchecked(ring: &PolynomialRing, generators: Vec<Polynomial>) -> Self {
        Self {
            ring: ring.clone(),
            generators,
            prime_hint: false,
            cache: Arc::default(),
        }
    }

    /// Parses each generator over `ring`.
    pub fn parse<S: AsRef<str>>(ring: &PolynomialRing, generators: &[S]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| crate::parse::parse_polynomial(g.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new_unchecked(ring, gens))
    }

    pub fn zero(ring: &PolynomialRing) -> Self {
        Self::new_unchecked(ring, Vec::new())
    }

    pub fn unit(ring: &PolynomialRing) -> Self {
        Self::new_unchecked(ring, vec![Polynomial::one(ring)])
    }

    /// Ideal generated by the listed variables.
    pub fn variables(ring: &PolynomialRing, indices: &[usize]) -> Self {
        Self::new_unchecked(
            ring,
            indices
                .iter()
                .map(|&i| Polynomial::variable_at(ring, i))
                .collect(),
        )
    }

    pub fn from_monomials(ring: &PolynomialRing, monomials: &[Monomial]) -> Self {
        Self::new_unchecked(
            ring,
            monomials
                .iter()
                .map(|m| Polynomial::from_monomial(ring, m.clone()))
                .collect(),
        )
    }

    /// Marks the ideal as known to be prime (used by the unmixedness policy).
    pub fn with_prime_hint(mut self) -> Self {
        self.prime_hint = true;
        self
    }

    pub fn prime_hint(&self) -> bool {
        self.prime_hint
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis under `order`, computed once and cached.
    pub fn groebner(&self, order: &MonomialOrder) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.cache.lock().expect("cache poisoned").get(order) {
            return gb.clone();
        }
        let sorted = buchberger::reduced_basis(&self.generators, order);
        let gb = Arc::new(GroebnerBasis::from_sorted(&self.ring, order, sorted));
        self.cache
            .lock()
            .expect("cache poisoned")
            .entry(order.clone())
            .or_insert(gb)
            .clone()
    }

    pub fn checked_groebner(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        order.validate(self.ring.len())?;
        Ok(self.groebner(order))
    }

    pub fn grevlex_basis(&self) -> Arc<GroebnerBasis> {
        self.groebner(&MonomialOrder::grevlex(self.ring.len()))
    }

    pub fn is_unit(&self) -> bool {
        if self.generators.iter().any(|g| g.is_unit()) {
            return true;
        }
        self.grevlex_basis().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero())
    }

    /// Homogeneous in the standard grading.
    pub fn is_homogeneous(&self) -> bool {
        if self.generators.iter().all(|g| g.is_homogeneous()) {
            return true;
        }
        self.grevlex_basis()
            .elements()
            .iter()
            .all(|g| g.is_homogeneous())
    }

    /// Whether every generator is a monomial (up to a scalar).
    pub fn is_monomial(&self) -> bool {
        self.generators
            .iter()
            .all(|g| g.is_zero() || g.is_monomial())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ok(Self::new_unchecked(&self.ring, gens))
    }

    pub fn add_generator(&self, f: Polynomial) -> Result<Self> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.push(f);
        Ok(Self::new_unchecked(&self.ring, gens))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f * g);
            }
        }
        Ok(Self::new_unchecked(&self.ring, gens))
    }

    /// Re-expresses the ideal over `target`, matching variables by name.
    pub fn to_ring(&self, target: &PolynomialRing) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.to_ring(target))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Self::new_unchecked(target, gens);
        out.prime_hint = self.prime_hint;
        Ok(out)
    }

    /// Drops a variable that occurs in no generator.
    pub fn contract(&self, drop: usize) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.restrict_index(drop))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new_unchecked(&self.ring.without(drop), gens))
    }

    /// Generators of the reduced grevlex basis rendered as strings; a
    /// canonical signature of the ideal within its ring.
    pub fn signature(&self) -> Vec<String> {
        self.grevlex_basis()
            .elements()
            .iter()
            .map(|g| g.to_string())
            .collect()
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.generator_strings().join(", "))
    }
}
