use thiserror::Error;

use crate::filtration::Flavor;

/// Errors reported by kernel operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("graded variable `{0}` has zero weight")]
    ZeroWeight(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent {1} on odd variable `{0}` (must be 0 or 1)")]
    OddExponent(String, u64),
    #[error("truncation flavor mismatch: {0} vs {1}")]
    FlavorMismatch(Flavor, Flavor),
    #[error("series carries no truncation tag")]
    NotTruncated,
    #[error("signature has no {0}-weight variables; the bound formulas need both sides")]
    OneSided(&'static str),
    #[error("series is not homogeneous of weight {0}")]
    NotHomogeneous(i64),
    #[error("vector does not solve the Diophantine instance")]
    NotASolution,
    #[error("solution vector length mismatch: expected {expected}, got {got}")]
    SolutionLength { expected: usize, got: usize },
    #[error("z-variable `{0}` does not index a Hilbert-basis element")]
    UnknownBasisIndex(String),
    #[error("image of `{var}` has a term of weight {found}, expected {expected}")]
    WeightViolation {
        var: String,
        found: i64,
        expected: i64,
    },
    #[error("image of graded variable `{0}` has a term outside the augmentation ideal")]
    ConstantTermOnGraded(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}
