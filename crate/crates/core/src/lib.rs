//! Exact q-series engine for theta functions, eta-quotients and Lambert
//! series, with representation counts for binary and quaternary forms.

pub mod arith;
pub mod closedform;
pub mod error;
pub mod expr;
pub mod lambert;
pub mod qfunctions;
pub mod registry;
pub mod repcount;
pub mod series;

pub use error::{Error, Result};
pub use series::{LaurentSeries, Rational, DEFAULT_ORDER};
