//! Parsers for expressions, orders and spec documents, and the command
//! dispatcher behind the `ratinv` binary.

pub mod builtin;
mod cli;
pub mod expr;
pub mod order;
pub mod spec;

pub use builtin::{builtin_spec, BUILTIN_SPECS};
pub use cli::run_command;
pub use expr::{parse_polynomial, parse_polynomial_at, parse_rational, parse_rational_at};
pub use order::{parse_order, parse_order_at, OrderDescriptor};
pub use spec::{order_scope, ActionSpecDocument, OrderScope};
