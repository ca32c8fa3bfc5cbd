//! Corpus record types.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::corpus::vocab::Vocabulary;
use crate::{Error, Result, TokenId};

/// A corpus document. `tokens` is empty until a vocabulary is applied via
/// [`Corpus::apply_vocab`]; after that it holds the tokenized title followed
/// by the tokenized body.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub doc_id: String,
    pub title: String,
    pub body: String,
    #[serde(skip)]
    pub tokens: Vec<TokenId>,
    /// Number of leading entries of `tokens` that came from the title.
    #[serde(skip)]
    pub title_len: usize,
}

impl Document {
    pub fn new(doc_id: impl Into<String>, title: impl Into<String>, body: impl Into<String>) -> Self {
        Self {
            doc_id: doc_id.into(),
            title: title.into(),
            body: body.into(),
            tokens: Vec::new(),
            title_len: 0,
        }
    }

    /// Tokens originating from the body text.
    pub fn body_tokens(&self) -> &[TokenId] {
        &self.tokens[self.title_len..]
    }
}

/// Where a query came from: a natural query from the corpus, a
/// document-as-query augmentation, or a pseudo-query built from a random
/// document segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Natural,
    DocAsQuery,
    SegmentPseudo,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub query_id: String,
    pub text: String,
    #[serde(skip)]
    pub tokens: Vec<TokenId>,
    #[serde(skip, default = "default_provenance")]
    pub provenance: Provenance,
}

fn default_provenance() -> Provenance {
    Provenance::Natural
}

impl Query {
    pub fn new(query_id: impl Into<String>, text: impl Into<String>, provenance: Provenance) -> Self {
        Self {
            query_id: query_id.into(),
            text: text.into(),
            tokens: Vec::new(),
            provenance,
        }
    }
}

/// A relevance judgment tying a query to a document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QRel {
    pub query_id: String,
    pub doc_id: String,
    pub relevance: u32,
}

/// An in-memory corpus: documents, queries and relevance judgments.
///
/// Immutable after construction and vocabulary application; all lookups are
/// safe for concurrent readers.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Corpus {
    pub docs: Vec<Document>,
    pub queries: Vec<Query>,
    pub qrels: Vec<QRel>,
}

impl Corpus {
    /// Map from doc_id to position in `docs`.
    pub fn doc_positions(&self) -> HashMap<&str, usize> {
        self.docs
            .iter()
            .enumerate()
            .map(|(i, d)| (d.doc_id.as_str(), i))
            .collect()
    }

    /// Map from query_id to position in `queries`.
    pub fn query_positions(&self) -> HashMap<&str, usize> {
        self.queries
            .iter()
            .enumerate()
            .map(|(i, q)| (q.query_id.as_str(), i))
            .collect()
    }

    /// Check that every qrel references an existing query and document.
    pub fn validate_qrels(&self) -> Result<()> {
        let docs: HashSet<&str> = self.docs.iter().map(|d| d.doc_id.as_str()).collect();
        let queries: HashSet<&str> = self.queries.iter().map(|q| q.query_id.as_str()).collect();
        for qrel in &self.qrels {
            if !queries.contains(qrel.query_id.as_str()) {
                return Err(Error::DanglingQrel(format!(
                    "query {:?} not in corpus",
                    qrel.query_id
                )));
            }
            if !docs.contains(qrel.doc_id.as_str()) {
                return Err(Error::DanglingQrel(format!(
                    "document {:?} not in corpus",
                    qrel.doc_id
                )));
            }
        }
        Ok(())
    }

    /// Tokenize all documents and queries against `vocab`.
    ///
    /// Documents get title tokens followed by body tokens; a document or
    /// query that tokenizes to nothing is an error.
    pub fn apply_vocab(&mut self, vocab: &Vocabulary) -> Result<()> {
        for doc in &mut self.docs {
            let title = vocab.tokenize(&doc.title);
            let body = vocab.tokenize(&doc.body);
            doc.title_len = title.len();
            doc.tokens = title;
            doc.tokens.extend(body);
            if doc.tokens.is_empty() {
                return Err(Error::EmptyDocument(doc.doc_id.clone()));
            }
        }
        for query in &mut self.queries {
            query.tokens = vocab.tokenize(&query.text);
            if query.tokens.is_empty() {
                return Err(Error::EmptyQuery(query.query_id.clone()));
            }
        }
        Ok(())
    }

    /// Stable content hash over raw records (ids, text, judgments).
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        for d in &self.docs {
            hasher.update(d.doc_id.as_bytes());
            hasher.update([0u8]);
            hasher.update(d.title.as_bytes());
            hasher.update([0u8]);
            hasher.update(d.body.as_bytes());
            hasher.update([1u8]);
        }
        for q in &self.queries {
            hasher.update(q.query_id.as_bytes());
            hasher.update([0u8]);
            hasher.update(q.text.as_bytes());
            hasher.update([1u8]);
        }
        for r in &self.qrels {
            hasher.update(r.query_id.as_bytes());
            hasher.update([0u8]);
            hasher.update(r.doc_id.as_bytes());
            hasher.update([0u8]);
            hasher.update(r.relevance.to_le_bytes());
            hasher.update([1u8]);
        }
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}
