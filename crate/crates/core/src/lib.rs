//! Exact computation of rational invariants of algebraic group actions and
//! of differential signatures of planar curves and binary forms.
//!
//! * [`poly`] is the arithmetic kernel (rationals, polynomials, rational
//!   functions, orders, gcd).
//! * [`groebner`] computes reduced Gröbner bases over the rationals and over
//!   fraction fields, elimination ideals and quotient dimensions.
//! * [`invariants`] builds action, graph and graph-section ideals and reads
//!   generating invariants off reduced bases.
//! * [`signature`] prolongs planar actions to jet space and computes and
//!   compares signature curves.
//! * [`frontend`] holds the expression and spec-file parsers and the
//!   command-line dispatcher.

pub mod error;
pub mod frontend;
pub mod groebner;
pub mod invariants;
pub mod poly;
pub mod signature;

pub use error::{Error, Result};
