use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::render::rational_to_string;
use crate::poly::{RationalFunction, Table};

/// Coefficient field of a polynomial ring handled by the Gröbner engine.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn is_constant(&self, a: &Self::Elem) -> bool;

    /// `(negative, body)` for a term `c * mono`; `mono` is `None` for the
    /// constant monomial.
    fn render_term(&self, c: &Self::Elem, mono: Option<&str>) -> (bool, String);
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn div(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a / b
    }
    fn is_constant(&self, _: &BigRational) -> bool {
        true
    }
    fn render_term(&self, c: &BigRational, mono: Option<&str>) -> (bool, String) {
        let a = c.abs();
        let body = match mono {
            None => rational_to_string(&a),
            Some(m) if a.is_one() => m.to_string(),
            Some(m) => format!("{}*{}", rational_to_string(&a), m),
        };
        (c.is_negative(), body)
    }
}

/// Field of rational functions in the variables of `params`.
#[derive(Debug, Clone)]
pub struct FractionField {
    params: Table,
}

impl FractionField {
    pub fn new(params: Table) -> Self {
        FractionField { params }
    }

    pub fn params(&self) -> &Table {
        &self.params
    }
}

impl Field for FractionField {
    type Elem = RationalFunction;

    fn zero(&self) -> RationalFunction {
        RationalFunction::zero(&self.params)
    }
    fn one(&self) -> RationalFunction {
        RationalFunction::one(&self.params)
    }
    fn is_zero(&self, a: &RationalFunction) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &RationalFunction) -> bool {
        a.is_one()
    }
    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.checked_add(b)
            .expect("coefficients share the parameter table")
    }
    fn sub(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.checked_sub(b)
            .expect("coefficients share the parameter table")
    }
    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.checked_mul(b)
            .expect("coefficients share the parameter table")
    }
    fn neg(&self, a: &RationalFunction) -> RationalFunction {
        a.neg()
    }
    fn inv(&self, a: &RationalFunction) -> RationalFunction {
        a.inv().expect("inverse of a nonzero coefficient")
    }
    fn is_constant(&self, a: &RationalFunction) -> bool {
        a.is_constant()
    }
    fn render_term(&self, c: &RationalFunction, mono: Option<&str>) -> (bool, String) {
        if let Some(v) = c.constant_value() {
            return Rationals.render_term(&v, mono);
        }
        let neg = c.renders_negative();
        let a = if neg { c.neg() } else { c.clone() };
        let body = match mono {
            None => a.to_summand_string(),
            Some(m) => format!("({})*{}", a, m),
        };
        (neg, body)
    }
}
