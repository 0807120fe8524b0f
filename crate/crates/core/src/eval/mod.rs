//! Benchmark scoring: Important-Word (IW) annotated transcripts, IW normalization,
//! WER alignment and IW / isolated-IW precision, recall and F-measure.

mod align;
mod benchmark;
mod iw;
mod metrics;
mod transcript;

pub use align::{align, wer, AlignOp, AlignmentResult};
pub use benchmark::{score_benchmark, BenchmarkReport, ScoreOptions, WerSummary};
pub use iw::{isolate, minimal_iw_set, regenerate, strip_non_iw, IwItem, IwSet};
pub use metrics::{iw_prf, MatchScope, PrfReport};
pub use transcript::{parse_transcript, AnnotatedTranscript, Span, Utterance, MAX_IW_LEN};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("line {line}, column {column}: unbalanced bracket")]
    UnbalancedBracket { line: usize, column: usize },
    #[error("line {line}, column {column}: nested brackets are not allowed")]
    NestedBracket { line: usize, column: usize },
    #[error("reference has {reference} utterances but hypothesis has {hypothesis}")]
    UtteranceCountMismatch { reference: usize, hypothesis: usize },
    #[error("WER is undefined for an empty reference")]
    EmptyReference,
}
