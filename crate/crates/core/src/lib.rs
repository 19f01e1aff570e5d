//! Recourse-aware ensembling.
//!
//! Given the predictions of several classifiers on one input and the
//! cross-model validity of each classifier's counterfactual explanation,
//! this crate builds the bipolar argumentation framework relating models and
//! explanations, enumerates its extensions under the stable, d-, s- and
//! c-preferred semantics, and selects an ensemble of agreeing models together
//! with explanations that are valid for all of them.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, batch
//! evaluation and the command line live in the `rae` crate.

#![no_std]
#![deny(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod ensembling;
pub mod error;
pub mod framework;
pub mod oracle;
pub mod properties;
pub mod scenario;
pub mod semantics;

#[cfg(test)]
mod testutil;

pub use crate::ensembling::{
    argumentative_ensemble, augmented_ensemble, naive_ensemble, robust_ensemble, solve, Diagnostics,
    Method, Solution,
};
pub use crate::error::{Error, Result};
pub use crate::framework::{build_aaf, build_baf, Aaf, ArgSet, Argument, ArgumentKind, Baf};
pub use crate::properties::{check_property, PropertyId};
pub use crate::scenario::{
    derive_model_preference, generate_random_scenario, validate_scenario, CounterfactualRecord,
    GeneratorConfig, Instance, Label, ModelRecord, PreferenceRanking, PreferenceSpec, Scenario,
    ValidationReport, Violation,
};
pub use crate::semantics::{
    enumerate_extensions, enumerate_preferred_aaf, map_aaf_extension_to_baf,
    map_baf_extension_to_aaf, ExtensionSet, Limits, Semantics,
};
