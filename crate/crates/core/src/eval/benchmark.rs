use std::fmt::Write as _;

use serde_json::json;

use super::align::{align, wer, AlignmentResult};
use super::iw::{isolate, minimal_iw_set, regenerate, strip_non_iw, IwItem, IwSet};
use super::metrics::{iw_prf, MatchScope, PrfReport};
use super::transcript::parse_transcript;
use super::EvalError;
use crate::corpus::{oov_rate, Lexicon, OovRate, TokenizerConfig};
use crate::percent::{fmt2, round2};

#[derive(Debug, Clone, Default)]
pub struct ScoreOptions {
    pub tokenizer: TokenizerConfig,
    pub scope: MatchScope,
    /// When given, the OOV rate of the reference tokens is reported against it.
    pub lexicon: Option<Lexicon>,
}

/// Alignment totals over all utterances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WerSummary {
    pub substitutions: usize,
    pub insertions: usize,
    pub deletions: usize,
    pub hits: usize,
    pub reference_length: usize,
    pub wer: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkReport {
    pub wer: WerSummary,
    pub iw: PrfReport,
    pub isol_iw: PrfReport,
    pub oov: Option<OovRate>,
    pub warnings: Vec<String>,
}

impl BenchmarkReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "wer": round2(self.wer.wer),
            "alignment": {
                "sub": self.wer.substitutions,
                "ins": self.wer.insertions,
                "del": self.wer.deletions,
                "hits": self.wer.hits,
                "ref": self.wer.reference_length,
            },
            "iw": self.iw.to_json(),
            "isol_iw": self.isol_iw.to_json(),
            "oov": self.oov.map(|o| json!({
                "oov_count": o.oov_count,
                "running_words": o.running_words,
                "percentage": o.percentage,
            })),
        })
    }

    pub fn to_table(&self) -> String {
        let w = &self.wer;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "WER      {}% [ 100 * ({} +{} +{}) / {} ]",
            fmt2(w.wer),
            w.substitutions,
            w.insertions,
            w.deletions,
            w.reference_length
        );
        let _ = writeln!(s, "IW       {}", self.iw.summary());
        let _ = writeln!(s, "Isol-IW  {}", self.isol_iw.summary());
        if let Some(o) = &self.oov {
            let _ = writeln!(s, "OOV      {}% [ {} / {} ]", fmt2(o.percentage), o.oov_count, o.running_words);
        }
        s
    }
}

/// Scores a hypothesis transcript against an IW-annotated reference.
///
/// The minimal IW set is built from the reference annotations only and then used to
/// re-annotate both sides, so any brackets in the hypothesis are ignored.
pub fn score_benchmark(reference: &str, hypothesis: &str, options: &ScoreOptions) -> Result<BenchmarkReport, EvalError> {
    let ref_t = parse_transcript(reference, &options.tokenizer)?;
    let hyp_t = parse_transcript(hypothesis, &options.tokenizer)?;
    if ref_t.utterances.len() != hyp_t.utterances.len() {
        return Err(EvalError::UtteranceCountMismatch {
            reference: ref_t.utterances.len(),
            hypothesis: hyp_t.utterances.len(),
        });
    }

    let mut total = AlignmentResult::default();
    for (r, h) in ref_t.utterances.iter().zip(&hyp_t.utterances) {
        let a = align(&r.tokens, &h.tokens);
        total.substitutions += a.substitutions;
        total.insertions += a.insertions;
        total.deletions += a.deletions;
        total.hits += a.hits;
        total.reference_length += a.reference_length;
    }
    let wer_value = wer(&total)?;

    let minimal = minimal_iw_set(&IwSet::from_transcript(&ref_t));
    let ref_items = strip_non_iw(&regenerate(&ref_t, &minimal));
    let hyp_items = strip_non_iw(&regenerate(&hyp_t, &minimal));
    let iw = iw_prf(&ref_items, &hyp_items, options.scope)?;
    let iso = |items: &[Vec<IwItem>]| items.iter().map(|u| isolate(u)).collect::<Vec<_>>();
    let isol_iw = iw_prf(&iso(&ref_items), &iso(&hyp_items), options.scope)?;

    let oov = options.lexicon.as_ref().map(|lex| {
        let tokens: Vec<&String> = ref_t.tokens().collect();
        oov_rate(&tokens, lex)
    });

    let mut warnings = ref_t.warnings;
    warnings.extend(hyp_t.warnings.into_iter().map(|w| format!("hypothesis {w}")));
    Ok(BenchmarkReport {
        wer: WerSummary {
            substitutions: total.substitutions,
            insertions: total.insertions,
            deletions: total.deletions,
            hits: total.hits,
            reference_length: total.reference_length,
            wer: wer_value,
        },
        iw,
        isol_iw,
        oov,
        warnings,
    })
}
