//! The three end-to-end workflows (baseline, adapted, word2vec), their artifact
//! manifests and the consolidated results table.

mod config;
mod report;
mod run;

pub use config::{Mode, PipelineConfig};
pub use report::{report_row, write_report_csv, ReportRow, REPORT_COLUMNS};
pub use run::{run_pipeline, Artifact, Manifest, MANIFEST_FILE};

use thiserror::Error;

use crate::corpus::CorpusError;
use crate::eval::EvalError;
use crate::lm::LmError;
use crate::seeds::SeedError;

#[derive(Debug, Error)]
pub enum PipelineError {
    /// Raised before any work starts.
    #[error("invalid configuration: {0}")]
    Validation(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Seeds(#[from] SeedError),
    #[error(transparent)]
    Lm(#[from] LmError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("manifest: {0}")]
    Manifest(String),
}

impl PipelineError {
    pub fn is_validation(&self) -> bool {
        matches!(self, PipelineError::Validation(_))
    }
}
