//! Exact arithmetic kernel: rationals, multivariate polynomials, rational
//! functions, monomial orders and multivariate gcd.

pub mod gcd;
pub mod monomial;
pub mod order;
pub mod polynomial;
pub mod ratfun;
pub mod render;
pub mod univariate;
pub mod vars;

pub use gcd::{gcd, lcm, squarefree_part};
pub use monomial::Monomial;
pub use num_rational::BigRational;
pub use order::{BlockKind, MonomialOrder, OrderKind};
pub use polynomial::{rat, ratio, Polynomial};
pub use ratfun::RationalFunction;
pub use vars::{Table, VarRole, VarTable};
