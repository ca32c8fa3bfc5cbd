//! Desk-scale generative retrieval engine.
//!
//! Documents are assigned short token-sequence identifiers (keyword, n-gram,
//! first-tokens, or clustered numerical schemes). A small encoder-decoder
//! model is trained in two stages: first to generate identifiers from queries
//! and document segments, then fine-tuned with contrastive losses over
//! prefix-oriented and retrieval-augmented negatives so that pooled encoder
//! representations carry query-document relevance. At query time a
//! trie-constrained beam search produces candidate identifiers and the
//! documents behind them are ranked by the product of generation probability
//! and semantic dot-product score.

pub mod config;
pub mod corpus;
pub mod docid;
pub mod error;
pub mod eval;
pub mod inference;
pub mod seq2seq;
pub mod training;

pub use config::EngineConfig;
pub use error::Error;

/// Token id type used throughout (vocabulary indices).
pub type TokenId = u32;

/// Result alias over the crate error type.
pub type Result<T> = std::result::Result<T, Error>;
