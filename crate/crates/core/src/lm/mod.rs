//! Backoff n-gram language models: counting, Witten-Bell estimation, adaptation by
//! frequency interpolation, pruning, perplexity and ARPA interchange.

mod adapt;
mod arpa;
mod counts;
mod estimate;
mod lexicon;
mod model;
mod perplexity;
mod prune;
mod vocab;

pub use adapt::{adapt_model, mixed_counts, AdaptationWeight, MixedCounts};
pub use arpa::{export_arpa, import_arpa, read_arpa, write_arpa};
pub use counts::{count_ngrams, NGramCounts};
pub use estimate::{estimate_model, UNIGRAM_FLOOR};
pub use lexicon::build_adapted_lexicon;
pub use model::{Entry, NGramModel};
pub use perplexity::{perplexity, PerplexityReport};
pub use prune::{prune_model, PruneConfig};
pub use vocab::{Vocab, WordId, BOS, EOS, UNK};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LmError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("n-gram order must be at least 1, got {0}")]
    InvalidOrder(usize),
    #[error("no unigram counts to estimate from")]
    EmptyCounts,
    #[error("adaptation weight must lie in [0, 1], got {0}")]
    InvalidWeight(f64),
    #[error("n-gram orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("count tables use different vocabularies")]
    VocabMismatch,
    #[error("nothing to score: no sentences given")]
    NoEvents,
    #[error("invalid pruning configuration: {0}")]
    InvalidPrune(String),
    #[error("ARPA line {line}: {message}")]
    Arpa { line: usize, message: String },
}
