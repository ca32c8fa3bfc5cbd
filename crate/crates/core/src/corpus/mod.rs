//! Corpus ingestion, tokenization, vocabulary construction, train/test
//! splitting and synthetic corpus generation.

mod ingest;
mod segment;
mod split;
mod synth;
mod types;
mod vocab;

pub use ingest::{ingest_corpus, write_corpus, CorpusFormat};
pub use segment::{sample_document_segment, sample_segment};
pub use split::{split_seen_unseen, SplitQrels};
pub use synth::{augment_queries, generate_synthetic_corpus, AugmentOptions};
pub use types::{Corpus, Document, Provenance, QRel, Query};
pub use vocab::{tokenize_words, Vocabulary, BOS_ID, EOS_ID, PAD_ID, RESERVED_IDS, UNK_ID};
