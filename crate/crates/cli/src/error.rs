use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown preset {name:?}; did you mean one of: {}", suggestions.join(", "))]
    UnknownPreset {
        name: String,
        suggestions: Vec<String>,
    },

    #[error("{0}")]
    Core(#[from] eigenone::Error),

    #[error("{0}")]
    Io(String),

    #[error("invalid argument: {0}")]
    Usage(String),

    #[error("report verification failed: {0}")]
    Verification(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(format!("json: {e}"))
    }
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Syntax { .. } => "syntax",
            CliError::UnknownPreset { .. } => "unknown_preset",
            CliError::Core(_) => "computation",
            CliError::Io(_) => "io",
            CliError::Usage(_) => "usage",
            CliError::Verification(_) => "verification",
        }
    }

    /// The machine-readable error object printed on exit code 2.
    pub fn to_json(&self) -> Value {
        let mut err = json!({ "kind": self.kind(), "message": self.to_string() });
        match self {
            CliError::Syntax { position, .. } => err["position"] = json!(position),
            CliError::UnknownPreset { suggestions, .. } => err["suggestions"] = json!(suggestions),
            _ => {}
        }
        json!({ "format": crate::FORMAT, "error": err })
    }
}
