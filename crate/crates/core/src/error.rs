use alloc::string::String;

use crate::scenario::ValidationReport;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A framework is larger than the enumeration budget allows.
    #[error("framework has {arguments} arguments, above the enumeration limit of {limit}")]
    Capacity { arguments: usize, limit: usize },

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("scenario is invalid: {0}")]
    InvalidScenario(ValidationReport),
}
