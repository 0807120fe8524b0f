//! Seed-word driven data selection and language-model adaptation.
//!
//! The crate is organised around the stages of the adaptation workflow:
//!
//! - [`corpus`]: tokenization, frequency tables, ranked lexica and OOV statistics.
//! - [`seeds`]: seed extraction from a glossary, morphological and embedding-based expansion.
//! - [`selection`]: filtering a corpus down to documents that contain OOV seeds.
//! - [`lm`]: n-gram counting, Witten-Bell backoff estimation, frequency-interpolation
//!   adaptation, pruning, perplexity and ARPA I/O.
//! - [`eval`]: Important-Word annotated transcripts, WER alignment and IW precision/recall.
//! - [`pipeline`]: the baseline / adapted / word2vec workflows and their manifests.

pub mod corpus;
pub mod eval;
pub mod lm;
pub mod percent;
pub mod pipeline;
pub mod seeds;
pub mod selection;

pub use corpus::{Document, FrequencyTable, Lexicon, OovRate, TokenizerConfig};
pub use eval::{AlignmentResult, AnnotatedTranscript, IwSet, PrfReport};
pub use lm::{AdaptationWeight, NGramCounts, NGramModel};
pub use seeds::{EmbeddingTable, MorphConfig, Provenance, SeedSet, SemanticConfig};
pub use selection::{SelectionConfig, SelectionReport};
