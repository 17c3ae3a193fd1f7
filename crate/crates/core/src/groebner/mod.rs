//! Gröbner bases and the ideal operations built on them.

mod buchberger;
mod ideal;
mod ops;

pub use ideal::{GroebnerBasis, Ideal};
pub(crate) use ops::generating_variables;
pub use ops::{
    contains, eliminate, ideals_equal, in_radical, intersect, is_variable_generated, power_in_ideal,
};
