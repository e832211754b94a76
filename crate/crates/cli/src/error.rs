use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("lines `{first}` and `{second}` define the same line")]
    DuplicateLine { first: String, second: String },
    #[error("line {line}: projective (P) and affine (A) entries cannot be mixed")]
    MixedKinds { line: usize },
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("no line labelled `{0}`")]
    LabelNotFound(String),
    #[error("window must satisfy x0 < x1 and y0 < y1")]
    DegenerateWindow,
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Analysis(#[from] linesplit::Error),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
