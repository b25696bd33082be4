use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {0}")]
    UnsupportedType(String),
    #[error("rank {rank} exceeds the limit {limit} for {what}")]
    RankTooLarge {
        rank: usize,
        limit: usize,
        what: &'static str,
    },
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("not an automorphism of the root datum: {0}")]
    NotAutomorphism(String),
    #[error("invalid label function: {0}")]
    InvalidLabels(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("{0}")]
    Incompatible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
