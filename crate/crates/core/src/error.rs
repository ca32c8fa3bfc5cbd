//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("duplicate key {key:?} at {path}:{line}")]
    DuplicateKey {
        path: String,
        line: usize,
        key: String,
    },

    #[error("empty corpus: {0}")]
    EmptyCorpus(String),

    #[error("document {0:?} has no tokens")]
    EmptyDocument(String),

    #[error("query tokenizes to nothing: {0:?}")]
    EmptyQuery(String),

    #[error("qrel references unknown record: {0}")]
    DanglingQrel(String),

    #[error("missing prerequisite for {op}: {what}")]
    MissingPrerequisite { op: String, what: String },

    #[error("prefix {0:?} is not a path in the identifier trie")]
    PrefixNotInTrie(Vec<crate::TokenId>),

    #[error("input length {len} exceeds maximum {max}")]
    OverLength { len: usize, max: usize },

    #[error("decoder prefix must begin with BOS")]
    PrefixWithoutBos,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("model file is corrupt: {0}")]
    CorruptModelFile(String),

    #[error("model config mismatch: {0}")]
    ConfigMismatch(String),

    #[error("non-finite loss at step {step} (stage {stage}); last good checkpoint: {checkpoint:?}")]
    NonFiniteLoss {
        step: usize,
        stage: u8,
        checkpoint: Option<String>,
    },

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("missing artifact: {0}")]
    MissingArtifact(String),

    #[error("no pooled representation indexed for document {0:?}")]
    MissingDocRepresentation(String),

    #[error("query {0:?} has no relevance judgments")]
    QueryWithoutQrels(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
