use thiserror::Error;

use crate::report::VerificationReport;

pub type Result<T> = std::result::Result<T, HopfError>;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("map has no convolution inverse")]
    NotConvolutionInvertible,
    #[error("not a Hopf algebra map: {0}")]
    NotHopfMap(String),
    #[error("evaluation pairing needs K = H")]
    AlgebraMismatch,
    #[error("associator is not invertible")]
    AssociatorNotInvertible,
    #[error("YD flavors or pairings differ")]
    FlavorMismatch,
    #[error("recovered coaction is not a comodule structure")]
    NotComodule,
    #[error("action does not preserve the coinvariants")]
    CoactionNotClosed,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("validation failed for {}", .0.subject)]
    Validation(Box<VerificationReport>),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
