//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("permutation size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("group degree n = {n} is not supported; every statement assumes n >= 4")]
    DomainTooSmall { n: usize },

    #[error("symbol {symbol} has no assigned value")]
    UnboundSymbol { symbol: String },

    #[error("product would exceed vector-space degree 2: {left_deg} + {right_deg}")]
    DegreeOverflow { left_deg: usize, right_deg: usize },

    #[error("cannot normalize the zero polynomial")]
    ZeroNormalize,

    #[error("unknown family name: {0}")]
    UnknownFamily(String),

    #[error("unknown ledger block: {0}")]
    UnknownLedger(String),

    #[error("binding for {symbol} is outside the parameter set of family {family}")]
    ForeignBinding { family: String, symbol: String },

    #[error("cochain is not invariant; refusing to extract an obstruction system")]
    NotInvariant,

    #[error("cochain still contains symbolic parameters: {symbols:?}")]
    SymbolicRemaining { symbols: Vec<String> },

    #[error("ideal is not homogeneous: generator {generator}")]
    Inhomogeneous { generator: String },

    #[error("computation exceeded its time budget after {elapsed_ms} ms")]
    BudgetExceeded { elapsed_ms: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid cochain data: {0}")]
    InvalidCochain(String),
}
