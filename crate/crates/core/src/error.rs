use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown symbol `{symbol}` at byte {pos}")]
    UnknownSymbol { symbol: String, pos: usize },
    #[error("X-decorated vertex `{0}` cannot have children")]
    InternalX(String),
    #[error("cannot graft with X-decoration `{0}`")]
    GraftOnX(String),
    #[error("vertex set belongs to a different forest")]
    ForeignVertexSet,
    #[error("invalid symbol `{0}`")]
    BadSymbol(String),
    #[error("symbol `{0}` declared twice")]
    DuplicateSymbol(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero: evaluating a negative power of l at l = 0")]
    Pole,
    #[error("substituted polynomial has a negative power of l")]
    NegativeLambda,
    #[error("cannot parse coefficient `{0}`")]
    Parse(String),
}
