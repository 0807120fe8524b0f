//! Seed words: extraction from a glossary and enlargement by shallow morphology or
//! embedding-space neighbourhoods.

mod embeddings;
mod morph;
mod semantic;
mod set;

pub use embeddings::{cosine_similarity, load_embeddings, nearest_neighbors, EmbeddingTable, LoadReport};
pub use morph::{expand_morphological, MorphConfig};
pub use semantic::{expand_semantic, SemanticConfig, SemanticReport};
pub use set::{extract_seeds, read_glossary, Provenance, SeedSet};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SeedError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("embedding file line {line}: {message}")]
    EmbeddingFormat { line: usize, message: String },
    #[error("seed file line {line}: {message}")]
    SeedFileFormat { line: usize, message: String },
    #[error("vector dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("cosine similarity is undefined for a zero-norm vector")]
    ZeroNorm,
    #[error("word {0:?} is not in the embedding table")]
    UnknownWord(String),
    #[error("embedding table is empty")]
    EmptyTable,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
