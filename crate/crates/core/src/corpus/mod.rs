//! Corpus ingestion, word counting, ranked lexica and OOV statistics.

mod frequency;
mod lexicon;
mod oov;
mod reader;
mod tokenize;

pub use frequency::FrequencyTable;
pub use lexicon::Lexicon;
pub use oov::{oov_curve, oov_rate, write_oov_curve_csv, OovRate};
pub use reader::{read_corpus_files, CorpusReader, Document, IngestReport};
pub use tokenize::{tokenize, TokenizerConfig};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("lexicon size must be at least 1")]
    ZeroLexiconSize,
    #[error("invalid lexicon sizes for OOV curve: {0}")]
    CurveSizes(String),
    #[error("line {line}: {message}")]
    LexiconFormat { line: usize, message: String },
}
