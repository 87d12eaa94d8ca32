//! Deterministic prefix generation for infinite words.

mod flags;
mod generate;
mod spec;

use thiserror::Error;

pub use flags::{known_flags, KnownFlags, Tri};
pub use generate::generate_prefix;
pub use spec::{Intercept, Substitution, WordSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordGenError {
    #[error("malformed word spec: {0}")]
    MalformedSpec(String),
    #[error("literal word has {available} letters but {requested} were requested")]
    LiteralTooShort { requested: usize, available: usize },
}
