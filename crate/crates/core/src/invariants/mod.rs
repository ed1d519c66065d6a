//! Rational invariants of algebraic group actions: action, graph and
//! graph-section ideals, generating invariants read off reduced bases,
//! invariance checks and replacement rewriting.

pub mod action;
pub mod binary;
pub mod generators;
pub mod ideals;
pub mod sampling;

pub use action::AlgebraicGroupAction;
pub use binary::{induce_coefficient_action, MatrixGroup, MATRIX_PARAMS};
pub use generators::{
    check_invariance, extract_generating_invariants, rewrite_by_replacement,
    GeneratingInvariantSet, Rewrite,
};
pub use ideals::{
    build_action_ideal, cross_section_degree, default_target_order, extended_graph_basis,
    graph_ideal, graph_section_basis, ActionIdeal, CrossSection, GraphSectionBasis,
};
pub use sampling::{circle_point, GroupSampler};
