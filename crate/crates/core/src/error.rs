use thiserror::Error;

/// Errors surfaced by the bound engines and oracles.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The request is mathematically fine but exceeds what this build will
    /// compute exactly (factorial caps, enumeration caps, and so on).
    #[error("capability exceeded: {0}")]
    Capability(String),

    /// A certified comparison stayed inconclusive after refining up to the
    /// precision cap. Callers must treat this as "no verdict", never as a
    /// ruled-out or admitted dimension.
    #[error("inconclusive at maximum precision ({max_bits} fractional bits): {context}")]
    Inconclusive { context: String, max_bits: u32 },

    /// Preset lookup failed.
    #[error("unknown preset `{name}` (valid presets: {valid})")]
    UnknownPreset { name: String, valid: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }
}
