use serde_json::json;

/// Everything the front end can report. Each kind has its own exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qrat_core::Error),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}:{line}:{column}: {message}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Format(String),
    #[error("{0}")]
    Usage(String),
}

pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

impl CliError {
    pub fn kind(&self) -> &'static str {
        use qrat_core::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::DimensionMismatch(_) => "dimension_mismatch",
                E::ClassBoundMismatch { .. } => "class_bound_mismatch",
                E::WeightOutOfRange { .. } => "weight_out_of_range",
                E::Parse { .. } => "parse",
                E::NotPrimitive { .. } => "internal",
                E::Simplicial(_) => "simplicial",
                E::Cdga(_) => "cdga",
                E::Degree(_) => "degree",
                E::Precondition(_) => "precondition",
                E::Inconclusive(_) => "inconclusive",
            },
            CliError::Io { .. } => "io",
            CliError::Json { .. } => "json",
            CliError::Format(_) => "format",
            CliError::Usage(_) => "usage",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(qrat_core::Error::Inconclusive(_)) => EXIT_INCONCLUSIVE,
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_ERROR,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut body = json!({ "kind": self.kind(), "message": self.to_string() });
        match self {
            CliError::Core(qrat_core::Error::Parse { position, .. }) => {
                body["position"] = json!(position);
            }
            CliError::Json { path, line, column, .. } => {
                body["path"] = json!(path);
                body["line"] = json!(line);
                body["column"] = json!(column);
            }
            CliError::Io { path, .. } => {
                body["path"] = json!(path);
            }
            _ => {}
        }
        json!({ "error": body })
    }
}
