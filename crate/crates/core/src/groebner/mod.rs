//! Reduced Gröbner bases over the rationals and over rational function
//! fields, elimination and quotient dimension.

pub mod basis;
pub mod buchberger;
pub mod field;
pub mod ring;

pub use basis::{
    constant_coefficients, standard_monomials, to_fraction_field_poly, GroebnerBasis, Ideal,
    QuotientDimension,
};
pub use buchberger::{is_groebner, reduced_basis};
pub use field::{Field, FractionField, Rationals};
pub use ring::{GPoly, PolyRing};
