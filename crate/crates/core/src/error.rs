//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VdiError {
    #[error("dimension mismatch in {context}: {detail}")]
    DimMismatch { context: &'static str, detail: String },

    #[error("invalid argument in {context}: {detail}")]
    InvalidArgument { context: &'static str, detail: String },

    #[error("domain {domain} contributed no rows this step")]
    MissingDomain { domain: usize },

    #[error("non-finite value in {context}: {detail}")]
    NonFinite { context: &'static str, detail: String },

    #[error("training diverged at step {step}")]
    Diverged { step: usize },

    #[error("dataset error at {location}: {detail}")]
    Dataset { location: String, detail: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, VdiError>;

impl VdiError {
    pub fn invalid(context: &'static str, detail: impl Into<String>) -> Self {
        VdiError::InvalidArgument { context, detail: detail.into() }
    }

    pub fn dim(context: &'static str, detail: impl Into<String>) -> Self {
        VdiError::DimMismatch { context, detail: detail.into() }
    }
}
