//! Hilbert series, h-polynomials and the graded invariants `reg`, `e`, `a`.

mod numerator;
mod report;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;

pub use numerator::{monomial_numerator, IntPoly};
pub use report::{CmStatus, Hilbertian, InvariantReport, Provenance};

pub(crate) use numerator::{add as poly_add, shift as poly_shift};

/// Monomial ideal of leading monomials of the reduced basis under `order`.
pub fn initial_ideal(ideal: &Ideal, order: &MonomialOrder) -> Ideal {
    let gb = ideal.groebner(order);
    Ideal::from_monomials(ideal.ring(), &gb.leading_monomials())
}

/// Numerator over `(1 - t)^n` of the Hilbert series of `R/M`, `M` a monomial ideal.
pub fn hilbert_numerator(monomial_ideal: &Ideal) -> Result<IntPoly> {
    let gens = monomial_generators(monomial_ideal)?;
    Ok(monomial_numerator(&gens))
}

fn monomial_generators(ideal: &Ideal) -> Result<Vec<Monomial>> {
    ideal
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            if g.is_monomial() {
                Ok(g.terms()[0].0.clone())
            } else {
                Err(Error::NotMonomial)
            }
        })
        .collect()
}

/// Numerator of the Hilbert series of `R/I` over `(1 - t)^n`.
///
/// Uses the initial ideal under grevlex; `I` must be homogeneous.
pub fn series_numerator(ideal: &Ideal) -> Result<IntPoly> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gb = ideal.grevlex_basis();
    Ok(monomial_numerator(&gb.leading_monomials()))
}

/// Reduced Hilbert series data of a graded quotient `R/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// Numerator over `(1 - t)^ambient`.
    pub numerator: IntPoly,
    /// Numerator over `(1 - t)^dim`; empty for the unit ideal.
    pub h_poly: IntPoly,
    /// Krull dimension; `None` for the unit ideal.
    pub dim: Option<usize>,
    pub ambient: usize,
}

/// Divides out the exact power of `1 - t` from a first-form numerator.
pub fn reduce_series(numerator: &[i64], ambient: usize) -> HilbertData {
    let mut h = numerator::trim(numerator.to_vec());
    if h.is_empty() {
        return HilbertData {
            numerator: h.clone(),
            h_poly: h,
            dim: None,
            ambient,
        };
    }
    let mut removed = 0;
    while numerator::eval_at_one(&h) == 0 {
        // q = h / (1 - t): prefix sums
        let mut q = Vec::with_capacity(h.len() - 1);
        let mut acc = 0i64;
        for c in &h[..h.len() - 1] {
            acc += c;
            q.push(acc);
        }
        h = numerator::trim(q);
        removed += 1;
    }
    HilbertData {
        numerator: numerator::trim(numerator.to_vec()),
        h_poly: h,
        dim: Some(ambient - removed),
        ambient,
    }
}

impl HilbertData {
    pub fn of(ideal: &Ideal) -> Result<Self> {
        Ok(reduce_series(&series_numerator(ideal)?, ideal.ring().len()))
    }

    pub fn is_unit(&self) -> bool {
        self.dim.is_none()
    }

    pub fn degree(&self) -> i64 {
        self.h_poly.len() as i64 - 1
    }

    /// `h(1)`.
    pub fn multiplicity(&self) -> i64 {
        numerator::eval_at_one(&self.h_poly)
    }

    /// `deg h - dim`.
    pub fn a_invariant(&self) -> Option<i64> {
        self.dim.map(|d| self.degree() - d as i64)
    }

    /// Coefficient of `t^k` in the series expansion (the Hilbert function).
    pub fn series_coefficient(&self, k: u64) -> BigInt {
        let n = self.ambient as u64;
        let mut total = BigInt::zero();
        for (i, c) in self.numerator.iter().enumerate() {
            let i = i as u64;
            if i > k || *c == 0 {
                continue;
            }
            total += BigInt::from(*c) * multiset_count(k - i, n);
        }
        total
    }

    /// Hilbert polynomial, coefficients lowest degree first.
    pub fn hilbert_polynomial(&self) -> Vec<BigRational> {
        let d = match self.dim {
            Some(d) if d > 0 => d as i64,
            _ => return Vec::new(),
        };
        let mut total: Vec<BigRational> = Vec::new();
        for (i, c) in self.h_poly.iter().enumerate() {
            // C(t - i + d - 1, d - 1) as a polynomial in t
            let shift = d - 1 - i as i64;
            let mut p = vec![BigRational::one()];
            for k in 0..d - 1 {
                let root = BigRational::from_integer(BigInt::from(shift - k));
                p = mul_linear(&p, &root);
            }
            let fact: BigInt = (1..d).map(BigInt::from).product();
            let scale = BigRational::new(BigInt::from(*c), fact);
            for (j, a) in p.into_iter().enumerate() {
                if total.len() <= j {
                    total.resize(j + 1, BigRational::zero());
                }
                total[j] += a * &scale;
            }
        }
        while total.last().is_some_and(|c| c.is_zero()) {
            total.pop();
        }
        total
    }

    pub fn hilbert_polynomial_at(&self, t: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(t));
        self.hilbert_polynomial()
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// Whether `HF(t) = HP(t)` for all `t >= from`, decided on the window
    /// up to `deg h + dim + 1`, past which both always agree.
    pub fn function_matches_polynomial_from(&self, from: u64) -> bool {
        let Some(d) = self.dim else { return false };
        let top = (self.degree().max(0) as u64) + d as u64 + 1;
        (from..=top).all(|t| {
            BigRational::from_integer(self.series_coefficient(t))
                == self.hilbert_polynomial_at(t as i64)
        })
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.h_poly.iter().all(|c| *c >= 0)
    }
}

/// Multiplies `p` (ascending coefficients) by `(t + root)`.
fn mul_linear(p: &[BigRational], root: &BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] += c * root;
    }
    out
}

/// Number of monomials of degree `k` in `n` variables.
fn multiset_count(k: u64, n: u64) -> BigInt {
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    binomial(k + n - 1, n - 1)
}

fn binomial(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k.min(n));
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Classifies `R/I` as Hilbertian, almost Hilbertian or neither.
///
/// With known Cohen–Macaulayness the sign of `a` decides; otherwise the
/// Hilbert function is compared with the Hilbert polynomial directly.
pub fn classify_hilbertian(data: &HilbertData, cm: CmStatus) -> Hilbertian {
    let Some(a) = data.a_invariant() else {
        return Hilbertian::Unknown;
    };
    match cm {
        CmStatus::Certified | CmStatus::Asserted => match a.signum() {
            -1 => Hilbertian::Hilbertian,
            0 => Hilbertian::AlmostHilbertian,
            _ => Hilbertian::Neither,
        },
        CmStatus::Unknown => {
            if data.function_matches_polynomial_from(0) {
                Hilbertian::Hilbertian
            } else if data.function_matches_polynomial_from(1) {
                Hilbertian::AlmostHilbertian
            } else {
                Hilbertian::Neither
            }
        }
    }
}

/// Invariants of `R/I` read off the Hilbert series.
pub fn invariants_direct(ideal: &Ideal, cm: CmStatus) -> Result<InvariantReport> {
    let data = HilbertData::of(ideal)?;
    report_from_data(&data, cm)
}

pub fn report_from_data(data: &HilbertData, cm: CmStatus) -> Result<InvariantReport> {
    let dim = data.dim.ok_or(Error::UnitIdeal)?;
    let reg = match cm {
        CmStatus::Unknown => None,
        _ => Some(data.degree()),
    };
    Ok(InvariantReport {
        h_poly: Some(data.h_poly.clone()),
        dim,
        reg,
        e: data.multiplicity(),
        a: data.a_invariant().expect("proper ideal"),
        hilbertian: classify_hilbertian(data, cm),
        provenance: Provenance::Direct,
        cm,
    })
}

/// Counts standard monomials of total degree `degree` with respect to the
/// reduced grevlex basis, by enumeration.
pub fn hilbert_function_oracle(ideal: &Ideal, degree: i64) -> Result<u64> {
    if degree < 0 {
        return Err(Error::NegativeDegree(degree));
    }
    let lead = ideal.grevlex_basis().leading_monomials();
    let n = ideal.ring().len();
    let mut count = 0u64;
    let mut exps = vec![0u32; n];
    enumerate(&mut exps, 0, degree as u32, &mut |e| {
        let m = Monomial::from_exponents(e.to_vec());
        if !lead.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
    });
    Ok(count)
}

fn enumerate(exps: &mut Vec<u32>, pos: usize, left: u32, visit: &mut dyn FnMut(&[u32])) {
    let n = exps.len();
    if n == 0 {
        if left == 0 {
            visit(exps);
        }
        return;
    }
    if pos + 1 == n {
        exps[pos] = left;
        visit(exps);
        exps[pos] = 0;
        return;
    }
    for e in 0..=left {
        exps[pos] = e;
        enumerate(exps, pos + 1, left - e, visit);
    }
    exps[pos] = 0;
}

/// Exact equality of the series identity `H(I) = H(A) + t^k H(B)` on first-form numerators.
pub fn numerator_identity(lhs: &[i64], first: &[i64], second: &[i64], shift: usize) -> bool {
    numerator::trim(lhs.to_vec()) == numerator::add(first, &numerator::shift(second, shift))
}

/// Renders an integer polynomial in `t`.
pub fn format_poly(p: &[i64]) -> String {
    let mut out = String::new();
    for (i, c) in p.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if *c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if *c < 0 { " - " } else { " + " });
        }
        match (i, mag) {
            (0, m) => out.push_str(&m.to_string()),
            (_, 1) => {}
            (_, m) => out.push_str(&format!("{m}*")),
        }
        match i {
            0 => {}
            1 => out.push('t'),
            _ => out.push_str(&format!("t^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Rational polynomial helper for reports: `[c0, c1, ...]` as strings.
pub fn format_rational_poly(p: &[BigRational]) -> Vec<String> {
    p.iter()
        .map(|c| {
            if c.is_integer() {
                c.to_integer().to_string()
            } else {
                format!("{}/{}", c.numer(), c.denom())
            }
        })
        .collect()
}
