//! Canonical text rendering.
//!
//! Terms appear in descending internal degrevlex order, powers use `^`,
//! a coefficient is joined to its monomial with `*`, and a fraction is
//! printed `num/den` with parentheses around multi-term parts. The output
//! re-parses to a structurally equal value.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ratfun::RationalFunction;
use super::vars::VarTable;

pub fn monomial_to_string(m: &Monomial, table: &VarTable) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(table.name(i).to_string()),
            _ => parts.push(format!("{}^{}", table.name(i), e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn rational_to_string(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Body of a term whose coefficient is positive.
fn term_body(m: &Monomial, c: &BigRational, table: &VarTable) -> String {
    if m.is_one() {
        rational_to_string(c)
    } else if c.is_one() {
        monomial_to_string(m, table)
    } else {
        format!("{}*{}", rational_to_string(c), monomial_to_string(m, table))
    }
}

/// Renders a sum of terms given as `(sign-negative, body)` pairs.
pub(crate) fn join_terms(parts: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let table = self.table();
        let s = join_terms(
            self.terms()
                .iter()
                .map(|(m, c)| (c.is_negative(), term_body(m, &c.abs(), table))),
        );
        f.write_str(&s)
    }
}

/// Whether the polynomial can stand unparenthesized as a divisor.
fn is_atomic_divisor(p: &Polynomial) -> bool {
    match p.terms() {
        [(m, c)] if m.is_one() => c.is_integer() && c.is_positive(),
        [(m, c)] => c.is_one() && m.exponents().iter().filter(|&&e| e > 0).count() == 1,
        _ => false,
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den().is_one() {
            return write!(f, "{}", self.num());
        }
        let num = if self.num().len() > 1 {
            format!("({})", self.num())
        } else {
            self.num().to_string()
        };
        if is_atomic_divisor(self.den()) {
            write!(f, "{}/{}", num, self.den())
        } else {
            write!(f, "{}/({})", num, self.den())
        }
    }
}

impl RationalFunction {
    /// Whether the rendering starts with a minus sign.
    pub fn renders_negative(&self) -> bool {
        self.num().leading_coefficient().is_negative()
    }

    /// Rendering safe to embed as a summand after `+`/`-`.
    pub fn to_summand_string(&self) -> String {
        if self.den().is_one() && self.num().len() > 1 {
            format!("({})", self)
        } else {
            self.to_string()
        }
    }
}
