use thiserror::Error;

use crate::syzygy::Resolution;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("relation constant c[{i},{j}] is zero; the extension is not bijective")]
    ZeroConstant { i: usize, j: usize },

    #[error("correction d[{i},{j}] has total degree {degree}; at most 1 is allowed")]
    DegreeViolation { i: usize, j: usize, degree: u32 },

    #[error("relations are inconsistent: x{k}*x{j}*x{i} normalizes differently under the two associations")]
    InconsistentRelations { i: usize, j: usize, k: usize },

    #[error("monomial order does not place the correction d[{i},{j}] below x{i}*x{j}")]
    OrderIncompatible { i: usize, j: usize },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("polynomial has {found} exponents but the algebra has {expected} variables")]
    AlgebraMismatch { expected: usize, found: usize },

    #[error("leading term of the zero vector is undefined")]
    ZeroVector,

    #[error("generator {generator}, entry {entry} is not central; the module is not a centralizing bimodule")]
    NotCentralizing { generator: usize, entry: usize },

    #[error("free resolution did not terminate within {} steps", .0.len())]
    LengthExceeded(Box<Resolution>),

    #[error("denominator column {column} is not contained in the numerator module")]
    ContainmentViolation { column: usize },

    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("{line}:{col}: unknown variable `{name}`")]
    UnknownVariable { name: String, line: usize, col: usize },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("unknown command `{0}`")]
    UnknownCommand(String),

    #[error("{0}")]
    Usage(String),
}
