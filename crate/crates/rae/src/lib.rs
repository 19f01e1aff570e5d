//! File formats, batch evaluation, differential fuzzing, benchmarking and the
//! command line for recourse-aware ensembling. The algorithms live in
//! `rae-core`.

pub mod batch;
pub mod bench;
pub mod cli;
pub mod format;
pub mod fuzz;
pub mod method;

pub use rae_core as core;
