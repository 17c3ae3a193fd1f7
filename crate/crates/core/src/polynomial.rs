use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::ring::PolynomialRing;

pub type Coefficient = BigRational;

/// Storage order for terms: graded reverse lexicographic, largest first.
pub(crate) fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let (da, db) = (a.degree(), b.degree());
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted (largest first, graded reverse lexicographic in ring
/// order) with no zero coefficients; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: PolynomialRing,
    terms: Vec<(Monomial, Coefficient)>,
}

impl Polynomial {
    pub fn zero(ring: &PolynomialRing) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &PolynomialRing, c: Coefficient) -> Self {
        Self::from_terms(ring, [(Monomial::one(ring.len()), c)])
    }

    pub fn one(ring: &PolynomialRing) -> Self {
        Self::constant(ring, Coefficient::one())
    }

    pub fn variable(ring: &PolynomialRing, name: &str) -> Result<Self> {
        let i = ring.require(name)?;
        Ok(Self::from_monomial(ring, Monomial::variable(ring.len(), i)))
    }

    pub fn variable_at(ring: &PolynomialRing, index: usize) -> Self {
        Self::from_monomial(ring, Monomial::variable(ring.len(), index))
    }

    pub fn from_monomial(ring: &PolynomialRing, m: Monomial) -> Self {
        Self {
            ring: ring.clone(),
            terms: vec![(m, Coefficient::one())],
        }
    }

    /// Builds a canonical polynomial, merging duplicate monomials and dropping zeros.
    pub fn from_terms<I>(ring: &PolynomialRing, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coefficient)>,
    {
        let mut acc: HashMap<Monomial, Coefficient> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ring.len());
            *acc.entry(m).or_insert_with(Coefficient::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| canonical_cmp(&b.0, &a.0));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coefficient)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coefficient)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(t, _)| t.degree() == d)
            }
        }
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(var) > 0)
    }

    /// Indices of variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.len()).filter(|&i| self.involves(i)).collect()
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        // multiplication by a monomial preserves any monomial order
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut acc: HashMap<Monomial, Coefficient> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Coefficient::zero) += ca * cb;
            }
        }
        Ok(Self::from_terms(&self.ring, acc))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => canonical_cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// The order-maximal term.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Coefficient, Monomial)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (c.clone(), m.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Sum of the terms carrying the highest power of variable `y`.
    pub fn initial_y_form(&self, y: usize) -> Self {
        let Some(d) = self.degree_in(y) else {
            return self.clone();
        };
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(y) == d)
                .cloned()
                .collect(),
        }
    }

    pub fn initial_y_form_named(&self, y: &str) -> Result<Self> {
        Ok(self.initial_y_form(self.ring.require(y)?))
    }

    /// Writes `f = y^d q + r` with `q` free of `y` and `d` maximal; returns `(d, q)`.
    pub fn split_y(&self, y: usize) -> (u32, Self) {
        let d = self.degree_in(y).unwrap_or(0);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(y) == d)
            .map(|(m, c)| (m.with_exponent(y, 0), c.clone()))
            .collect();
        (d, Self::from_sorted_or_sort(&self.ring, terms))
    }

    fn from_sorted_or_sort(ring: &PolynomialRing, mut terms: Vec<(Monomial, Coefficient)>) -> Self {
        terms.sort_by(|a, b| canonical_cmp(&b.0, &a.0));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Re-indexes a polynomial not involving `drop` over the ring without it.
    pub fn restrict_ring(&self, drop: &str) -> Result<Self> {
        let idx = self.ring.require(drop)?;
        self.restrict_index(idx)
    }

    pub fn restrict_index(&self, idx: usize) -> Result<Self> {
        if self.involves(idx) {
            return Err(Error::VariableOccurs(self.ring.name(idx).to_string()));
        }
        let ring = self.ring.without(idx);
        Ok(Self::from_sorted_or_sort(
            &ring,
            self.terms
                .iter()
                .map(|(m, c)| (m.remove(idx), c.clone()))
                .collect(),
        ))
    }

    /// Rewrites the polynomial over `target`, matching variables by name.
    pub fn to_ring(&self, target: &PolynomialRing) -> Result<Self> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self
            .ring
            .variables()
            .iter()
            .map(|v| target.index_of(v))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] = x,
                    None => return Err(Error::UnknownVariable(self.ring.name(i).to_string())),
                }
            }
            terms.push((Monomial::from_exponents(e), c.clone()));
        }
        Ok(Self::from_sorted_or_sort(target, terms))
    }

    /// Scales so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            Ok((c, _)) => self.scale(&(Coefficient::one() / c)),
            Err(_) => self.clone(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.variables();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_coefficient(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", m.render(names))?;
            } else {
                write!(f, "{}*{}", fmt_coefficient(&abs), m.render(names))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_coefficient(c: &Coefficient) -> String {
    if c.denom() == &BigInt::one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Polynomial {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Self) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

pub fn rational(n: i64) -> Coefficient {
    Coefficient::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring(vars: &[&str]) -> PolynomialRing {
        PolynomialRing::new(vars.iter().copied()).unwrap()
    }

    #[test]
    fn arithmetic_cancels_exactly() {
        let r = ring(&["x", "y"]);
        let f = parse_polynomial("x^2 - y", &r).unwrap();
        let g = parse_polynomial("x + y", &r).unwrap();
        let h = &(&f * &g) - &(&f * &g);
        assert!(h.is_zero());
        let s = &f + &(-&f);
        assert!(s.is_zero());
    }

    #[test]
    fn initial_y_form_cases() {
        let r = ring(&["x", "y", "z", "w"]);
        let f = parse_polynomial("y*z - x*w", &r).unwrap();
        assert_eq!(f.initial_y_form(0).to_string(), "-x*w");
        let r2 = ring(&["y", "q", "r", "s"]);
        let g = parse_polynomial("y^2*q + y*r + s", &r2).unwrap();
        assert_eq!(g.initial_y_form(0).to_string(), "y^2*q");
        let r3 = ring(&["y", "z", "s", "x"]);
        let h = parse_polynomial("z*s - x^2", &r3).unwrap();
        assert_eq!(h.initial_y_form(0), h);
        assert!(Polynomial::zero(&r3).initial_y_form(0).is_zero());
    }

    #[test]
    fn leading_terms() {
        let r = ring(&["x", "y", "z", "w"]);
        let f = parse_polynomial("y*z - x*w", &r).unwrap();
        let (c, m) = f.leading_term(&MonomialOrder::lex(4)).unwrap();
        assert_eq!(
            (c, m.render(r.variables())),
            (rational(-1), "x*w".to_string())
        );
        let (c, m) = f.leading_term(&MonomialOrder::y_block(1, 4)).unwrap();
        assert_eq!(
            (c, m.render(r.variables())),
            (rational(1), "y*z".to_string())
        );
        let five = Polynomial::constant(&r, rational(5));
        let (c, m) = five.leading_term(&MonomialOrder::grevlex(4)).unwrap();
        assert_eq!(c, rational(5));
        assert!(m.is_one());
        assert_eq!(
            Polynomial::zero(&r).leading_term(&MonomialOrder::lex(4)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn restrict_ring_cases() {
        let r = ring(&["y", "z", "s", "x", "w", "r"]);
        let f = parse_polynomial("z*s - x^2", &r).unwrap();
        let g = f.restrict_ring("y").unwrap();
        assert_eq!(g.ring().variables(), &["z", "s", "x", "w", "r"]);
        assert_eq!(g.to_string(), "z*s - x^2");
        let wr = parse_polynomial("w*r", &r)
            .unwrap()
            .restrict_ring("y")
            .unwrap();
        assert_eq!(wr.ring().len(), 5);
        let ywr = parse_polynomial("y*w*r", &r).unwrap();
        assert_eq!(
            ywr.restrict_ring("y"),
            Err(Error::VariableOccurs("y".into()))
        );
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let f = Polynomial::one(&ring(&["x"]));
        let g = Polynomial::one(&ring(&["y"]));
        assert_eq!(f.checked_add(&g), Err(Error::RingMismatch));
    }
}
