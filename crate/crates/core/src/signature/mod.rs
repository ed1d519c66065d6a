//! Differential signatures: jet prolongation, curve lifts, classifying
//! pairs, implicit signature equations and their comparison.

pub mod curve;
pub mod curves;
pub mod jet;
pub mod pairs;

pub use curve::{lift_curve, restrict_to_curve, ParametricCurve};
pub use curves::{
    curve_signature, form_signature, implicitize, implicitize_by_elimination, sample_signature,
    samples_to_csv, signature_parametrization, signature_table, signatures_equal, SamplePoint,
    SignatureCurve, SIGNATURE_COORDS,
};
pub use jet::{jet_name, prolong_action, JetContext};
pub use pairs::{
    binary_form_classifying_pair, euclidean_classifying_pair, BinaryFormPair, ClassifyingPair,
};
