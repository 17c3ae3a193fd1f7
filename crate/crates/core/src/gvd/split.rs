use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{ideals_equal, in_radical, intersect, Ideal};
use crate::hilbert::{numerator_identity, series_numerator, HilbertData};
use crate::order::MonomialOrder;
use crate::polynomial::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Degeneracy {
    Nondegenerate,
    /// `C = ⟨1⟩`.
    DegenerateUnitC,
    /// `√C = √N` with `C` proper.
    DegenerateEqualRadicals,
}

impl Degeneracy {
    pub fn is_degenerate(self) -> bool {
        self != Self::Nondegenerate
    }
}

/// The data of one decomposition step at a variable `y`.
///
/// `C`, `N` and `in_y` live in the ring of the input ideal; `C` and `N` have
/// `y`-free generators.
#[derive(Clone, Debug)]
pub struct GvdSplit {
    pub y: usize,
    pub order: MonomialOrder,
    pub in_y: Ideal,
    pub c: Ideal,
    pub n: Ideal,
    pub valid: bool,
    pub degeneracy: Degeneracy,
}

impl GvdSplit {
    pub fn y_name(&self) -> &str {
        self.c.ring().name(self.y)
    }

    /// `C` over the ring without `y`.
    pub fn c_contracted(&self) -> Ideal {
        self.c.contract(self.y).expect("C is y-free")
    }

    /// `N` over the ring without `y`.
    pub fn n_contracted(&self) -> Ideal {
        self.n.contract(self.y).expect("N is y-free")
    }
}

/// Splits the reduced basis under a `y`-compatible order into `C` and `N`.
pub fn one_step_split(ideal: &Ideal, y: usize, order: &MonomialOrder) -> Result<GvdSplit> {
    let ring = ideal.ring();
    if y >= ring.len() {
        return Err(Error::InvalidArgument(format!(
            "variable index {y} out of range"
        )));
    }
    order.validate(ring.len())?;
    if !order.is_y_compatible(y) {
        return Err(Error::NotYCompatible(ring.name(y).to_string()));
    }
    let gb = ideal.groebner(order);
    let yv = Polynomial::variable_at(ring, y);
    let (mut c, mut n, mut in_y) = (Vec::new(), Vec::new(), Vec::new());
    for g in gb.elements() {
        let (d, q) = g.split_y(y);
        if d == 0 {
            n.push(q.clone());
        }
        in_y.push(&yv.pow(d) * &q);
        c.push(q);
    }
    let c = Ideal::new_unchecked(ring, c);
    let n = Ideal::new_unchecked(ring, n);
    let in_y = Ideal::new_unchecked(ring, in_y);

    let n_plus_y = n.add_generator(yv)?;
    let valid = ideals_equal(&in_y, &intersect(&c, &n_plus_y)?)?;
    let degeneracy = if c.is_unit() {
        Degeneracy::DegenerateUnitC
    } else if same_radical(&c, &n)? {
        Degeneracy::DegenerateEqualRadicals
    } else {
        Degeneracy::Nondegenerate
    };
    Ok(GvdSplit {
        y,
        order: order.clone(),
        in_y,
        c,
        n,
        valid,
        degeneracy,
    })
}

/// `√A = √B`, checked generator-wise in both directions.
pub fn same_radical(a: &Ideal, b: &Ideal) -> Result<bool> {
    if ideals_equal(a, b)? {
        return Ok(true);
    }
    for g in a.generators() {
        if !in_radical(g, b)? {
            return Ok(false);
        }
    }
    for g in b.generators() {
        if !in_radical(g, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `H(R/I) = H(R/(N + ⟨y⟩)) + t·H(R/C)` as an identity of first-form numerators.
pub fn verify_series_identity(ideal: &Ideal, split: &GvdSplit) -> Result<bool> {
    if !split.valid {
        return Err(Error::InvalidSplit);
    }
    let ring = ideal.ring();
    let n_plus_y = split
        .n
        .add_generator(Polynomial::variable_at(ring, split.y))?;
    let lhs = series_numerator(ideal)?;
    let first = series_numerator(&n_plus_y)?;
    let second = series_numerator(&split.c)?;
    Ok(numerator_identity(&lhs, &first, &second, 1))
}

/// `h(R/I) = h(R/N) + t·h(R/C)`, the form taken by nondegenerate splits.
pub fn verify_h_identity(ideal: &Ideal, split: &GvdSplit) -> Result<bool> {
    if !split.valid {
        return Err(Error::InvalidSplit);
    }
    let h = HilbertData::of(ideal)?.h_poly;
    let hn = HilbertData::of(&split.n)?.h_poly;
    let hc = HilbertData::of(&split.c)?.h_poly;
    Ok(numerator_identity(&h, &hn, &hc, 1))
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

    fn eq(a: &Ideal, b: &Ideal) -> bool {
        ideals_equal(a, b).unwrap()
    }

    #[test]
    fn binomial_pair_at_x() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = ideal(&r, &["y*z - x*w", "x*y"]);
        for order in [MonomialOrder::lex(4), MonomialOrder::y_block(0, 4)] {
            let s = one_step_split(&i, 0, &order).unwrap();
            assert!(eq(&s.c, &ideal(&r, &["y", "w"])));
            assert!(eq(&s.n, &ideal(&r, &["y^2*z"])));
            assert!(s.valid);
            assert_eq!(s.degeneracy, Degeneracy::Nondegenerate);
            assert!(verify_series_identity(&i, &s).unwrap());
        }
    }

    #[test]
    fn six_variable_example_at_y() {
        let r = ring(&["y", "z", "s", "x", "w", "r"]);
        let i = ideal(
            &r,
            &["y*(z*s - x^2)", "y*w*r", "w*r*(z^2 + z*x + w*r + s^2)"],
        );
        let s = one_step_split(&i, 0, &MonomialOrder::y_block(0, 6)).unwrap();
        assert!(eq(&s.c, &ideal(&r, &["z*s - x^2", "w*r"])));
        assert!(eq(&s.n, &ideal(&r, &["w*r*(z^2 + z*x + w*r + s^2)"])));
        assert!(s.valid);
        assert_eq!(s.degeneracy, Degeneracy::Nondegenerate);
        assert!(verify_series_identity(&i, &s).unwrap());
        assert!(verify_h_identity(&i, &s).unwrap());
        assert_eq!(
            s.c_contracted().ring().variables(),
            &["z", "s", "x", "w", "r"]
        );
    }

    #[test]
    fn absent_variable_is_degenerate() {
        let r = ring(&["y", "z", "s", "x"]);
        let i = ideal(&r, &["z*s - x^2"]);
        let s = one_step_split(&i, 0, &MonomialOrder::y_block(0, 4)).unwrap();
        assert!(eq(&s.c, &i) && eq(&s.n, &i));
        assert!(s.valid);
        assert_eq!(s.degeneracy, Degeneracy::DegenerateEqualRadicals);
    }

    #[test]
    fn unit_c() {
        let r = ring(&["y", "x"]);
        let i = ideal(&r, &["y - x^2"]);
        let s = one_step_split(&i, 0, &MonomialOrder::y_block(0, 2)).unwrap();
        assert_eq!(s.degeneracy, Degeneracy::DegenerateUnitC);
        assert!(s.valid);
        assert!(s.n.is_zero());
    }

    #[test]
    fn order_must_be_compatible() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x*y"]);
        assert_eq!(
            one_step_split(&i, 1, &MonomialOrder::lex(2)).unwrap_err(),
            Error::NotYCompatible("y".into())
        );
    }
}
