use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Brauer(#[from] brauer::Error),
    /// A check ran to completion and failed.
    #[error("{0}")]
    Check(String),
}

impl CliError {
    pub fn position(&self) -> Option<(usize, usize)> {
        match self {
            CliError::Parse { line, column, .. } => Some((*line, *column)),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse",
            CliError::Io { .. } => "io",
            CliError::Brauer(_) => "graph",
            CliError::Check(_) => "check",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Check(_) => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "error": self.kind(), "message": self.to_string() });
        if let CliError::Parse { line, column, message } = self {
            v["line"] = json!(line);
            v["column"] = json!(column);
            v["message"] = json!(message);
        }
        v
    }
}
