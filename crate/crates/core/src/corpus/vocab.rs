//! Word-level vocabulary with reserved control and digit tokens.
//!
//! Tokenization is lowercase alphanumeric-run splitting. Ids 0..=3 are PAD,
//! BOS, EOS, UNK; a block of digit tokens (`<d0>`, `<d1>`, ...) follows so
//! that clustered numerical identifiers share the same id space as words.
//! Digit tokens are never produced by `tokenize` — they are only emitted by
//! the numerical identifier builder.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use crate::corpus::types::Document;
use crate::{Error, Result, TokenId};

pub const PAD_ID: TokenId = 0;
pub const BOS_ID: TokenId = 1;
pub const EOS_ID: TokenId = 2;
pub const UNK_ID: TokenId = 3;
/// Number of reserved control ids preceding the stored token table.
pub const RESERVED_IDS: TokenId = 4;

/// Default size of the digit-token block.
pub const DEFAULT_DIGIT_TOKENS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    token_to_id: HashMap<String, TokenId>,
    /// Stored tokens for ids >= RESERVED_IDS, in id order.
    tokens: Vec<String>,
    n_digit_tokens: usize,
}

/// Lowercase a string and split it into alphanumeric runs.
pub fn tokenize_words(text: &str) -> Vec<String> {
    let mut words = Vec::new();
    let mut current = String::new();
    for ch in text.chars() {
        if ch.is_alphanumeric() {
            for lc in ch.to_lowercase() {
                current.push(lc);
            }
        } else if !current.is_empty() {
            words.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        words.push(current);
    }
    words
}

impl Vocabulary {
    /// Build a vocabulary over `docs` (title + body). Every word with corpus
    /// frequency >= `min_freq` receives an id; everything else maps to UNK.
    pub fn build(docs: &[Document], min_freq: usize) -> Result<Self> {
        Self::build_with_digits(docs, min_freq, DEFAULT_DIGIT_TOKENS)
    }

    pub fn build_with_digits(docs: &[Document], min_freq: usize, n_digit_tokens: usize) -> Result<Self> {
        if docs.is_empty() {
            return Err(Error::EmptyCorpus("cannot build vocabulary".into()));
        }
        let mut freq: HashMap<String, usize> = HashMap::new();
        for doc in docs {
            for word in tokenize_words(&doc.title).into_iter().chain(tokenize_words(&doc.body)) {
                *freq.entry(word).or_insert(0) += 1;
            }
        }
        // Descending frequency, ties broken alphabetically, for determinism.
        let mut pairs: Vec<(String, usize)> = freq.into_iter().filter(|(_, c)| *c >= min_freq).collect();
        pairs.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));

        let mut tokens: Vec<String> = (0..n_digit_tokens).map(|k| format!("<d{k}>")).collect();
        tokens.extend(pairs.into_iter().map(|(w, _)| w));
        Ok(Self::from_tokens(tokens, n_digit_tokens))
    }

    fn from_tokens(tokens: Vec<String>, n_digit_tokens: usize) -> Self {
        let token_to_id = tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i as TokenId + RESERVED_IDS))
            .collect();
        Self {
            token_to_id,
            tokens,
            n_digit_tokens,
        }
    }

    /// Total number of ids, reserved ones included.
    pub fn size(&self) -> usize {
        self.tokens.len() + RESERVED_IDS as usize
    }

    pub fn n_digit_tokens(&self) -> usize {
        self.n_digit_tokens
    }

    pub fn token_id(&self, token: &str) -> Option<TokenId> {
        self.token_to_id.get(token).copied()
    }

    /// Id of the k-th digit token, if the digit block is large enough.
    pub fn digit_token(&self, k: usize) -> Option<TokenId> {
        (k < self.n_digit_tokens).then(|| RESERVED_IDS + k as TokenId)
    }

    /// Text form of an id (reserved ids render as `<pad>` etc.).
    pub fn token(&self, id: TokenId) -> Option<&str> {
        match id {
            PAD_ID => Some("<pad>"),
            BOS_ID => Some("<bos>"),
            EOS_ID => Some("<eos>"),
            UNK_ID => Some("<unk>"),
            _ => self.tokens.get((id - RESERVED_IDS) as usize).map(|s| s.as_str()),
        }
    }

    /// Tokenize text to ids, mapping out-of-vocabulary words to UNK.
    pub fn tokenize(&self, text: &str) -> Vec<TokenId> {
        tokenize_words(text)
            .into_iter()
            .map(|w| self.token_to_id.get(&w).copied().unwrap_or(UNK_ID))
            .collect()
    }

    /// Join token texts with single spaces.
    pub fn detokenize(&self, ids: &[TokenId]) -> String {
        ids.iter()
            .filter_map(|&id| self.token(id))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Persist as a text file, one stored token per line; the line index is
    /// the id minus the reserved offset.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut out = String::new();
        for token in &self.tokens {
            out.push_str(token);
            out.push('\n');
        }
        fs::write(path, out)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let tokens: Vec<String> = text.lines().map(|l| l.to_string()).collect();
        let n_digit_tokens = tokens
            .iter()
            .take_while(|t| t.starts_with("<d") && t.ends_with('>'))
            .count();
        Ok(Self::from_tokens(tokens, n_digit_tokens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(id: &str, body: &str) -> Document {
        Document::new(id, "", body)
    }

    #[test]
    fn min_freq_filters_rare_words() {
        let docs = vec![doc("d1", "a b"), doc("d2", "a c")];
        let vocab = Vocabulary::build_with_digits(&docs, 2, 0).unwrap();
        assert!(vocab.token_id("a").is_some());
        assert!(vocab.token_id("b").is_none());
        assert!(vocab.token_id("c").is_none());
        assert_eq!(vocab.size(), RESERVED_IDS as usize + 1);
    }

    #[test]
    fn min_freq_one_keeps_everything() {
        let docs = vec![doc("d1", "a b"), doc("d2", "a c")];
        let vocab = Vocabulary::build_with_digits(&docs, 1, 0).unwrap();
        for w in ["a", "b", "c"] {
            assert!(vocab.token_id(w).is_some(), "missing {w}");
        }
    }

    #[test]
    fn tokenize_detokenize_round_trip() {
        let docs = vec![doc("d1", "a b"), doc("d2", "a c")];
        let vocab = Vocabulary::build(&docs, 1).unwrap();
        let ids = vocab.tokenize("a b");
        assert_eq!(vocab.detokenize(&ids), "a b");
    }

    #[test]
    fn oov_maps_to_unk() {
        let docs = vec![doc("d1", "a")];
        let vocab = Vocabulary::build(&docs, 1).unwrap();
        assert_eq!(vocab.tokenize("zzz"), vec![UNK_ID]);
    }

    #[test]
    fn punctuation_and_case_are_normalized() {
        assert_eq!(tokenize_words("The CAT, sat!"), vec!["the", "cat", "sat"]);
    }

    #[test]
    fn empty_corpus_is_an_error() {
        assert!(matches!(Vocabulary::build(&[], 1), Err(Error::EmptyCorpus(_))));
    }

    #[test]
    fn save_load_round_trip(){
        let docs = vec![doc("d1", "alpha beta alpha"), doc("d2", "beta gamma")];
        let vocab = Vocabulary::build(&docs, 1).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("vocab.txt");
        vocab.save(&path).unwrap();
        let loaded = Vocabulary::load(&path).unwrap();
        assert_eq!(vocab, loaded);
        assert_eq!(loaded.digit_token(0), vocab.digit_token(0));
    }
}
