//! Geometric vertex decomposition and graded invariants of polynomial ideals.
//!
//! The crate is layered: exact polynomial arithmetic and monomial orders,
//! Gröbner bases and ideal operations, Hilbert series, the decomposition
//! search with its invariant recursions, and two application layers (toric
//! ideals of graphs, Stanley–Reisner ideals of simplicial complexes).

pub mod catalog;
pub mod corpus;
pub mod error;
pub mod groebner;
pub mod gvd;
pub mod hilbert;
pub mod io;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;
pub mod ring;
pub mod simplicial;
pub mod toric;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal};
pub use hilbert::{CmStatus, HilbertData, Hilbertian, InvariantReport, Provenance};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use polynomial::{Coefficient, Polynomial};
pub use ring::PolynomialRing;
