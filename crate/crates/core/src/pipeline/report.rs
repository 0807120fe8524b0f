use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{Manifest, Mode, PipelineError};
use crate::corpus::Lexicon;
use crate::eval::{score_benchmark, ScoreOptions};
use crate::percent::{fmt2, round2};

/// Column names of the consolidated results table, in order.
pub const REPORT_COLUMNS: [&str; 11] = [
    "mode",
    "seeds",
    "lex_size",
    "oov_rate",
    "wer",
    "iw_p",
    "iw_r",
    "iw_f",
    "isol_iw_p",
    "isol_iw_r",
    "isol_iw_f",
];

/// One results row; rates are percentages and P/R/F values fractions, all rounded to
/// two decimals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub mode: Mode,
    pub seeds: usize,
    pub lex_size: usize,
    pub oov_rate: f64,
    pub wer: f64,
    pub iw_p: f64,
    pub iw_r: f64,
    pub iw_f: f64,
    pub isol_iw_p: f64,
    pub isol_iw_r: f64,
    pub isol_iw_f: f64,
}

/// Scores a benchmark hypothesis for the run described by `manifest`, whose files
/// live in `run_dir`. The OOV rate is measured against the run's final lexicon.
pub fn report_row(
    manifest: &Manifest,
    run_dir: &Path,
    reference: &str,
    hypothesis: &str,
    options: &ScoreOptions,
) -> Result<ReportRow, PipelineError> {
    let artifact = manifest
        .artifact(&manifest.lexicon)
        .ok_or_else(|| PipelineError::Manifest(format!("lexicon {} is not listed", manifest.lexicon)))?;
    let bytes = fs::read(run_dir.join(&artifact.path))?;
    if hex::encode(Sha256::digest(&bytes)) != artifact.sha256 {
        return Err(PipelineError::Manifest(format!("{} does not match its recorded hash", artifact.path)));
    }
    let lexicon = Lexicon::read_from(bytes.as_slice())?;
    let opts = ScoreOptions {
        lexicon: Some(lexicon),
        ..options.clone()
    };
    let r = score_benchmark(reference, hypothesis, &opts)?;
    Ok(ReportRow {
        mode: manifest.mode,
        seeds: manifest.seeds,
        lex_size: manifest.lexicon_size,
        oov_rate: r.oov.map_or(0.0, |o| o.percentage),
        wer: round2(r.wer.wer),
        iw_p: round2(r.iw.precision),
        iw_r: round2(r.iw.recall),
        iw_f: round2(r.iw.f_measure),
        isol_iw_p: round2(r.isol_iw.precision),
        isol_iw_r: round2(r.isol_iw.recall),
        isol_iw_f: round2(r.isol_iw.f_measure),
    })
}

pub fn write_report_csv<W: Write>(rows: &[ReportRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{}", REPORT_COLUMNS.join(","))?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.mode,
            r.seeds,
            r.lex_size,
            fmt2(r.oov_rate),
            fmt2(r.wer),
            fmt2(r.iw_p),
            fmt2(r.iw_r),
            fmt2(r.iw_f),
            fmt2(r.isol_iw_p),
            fmt2(r.isol_iw_r),
            fmt2(r.isol_iw_f)
        )?;
    }
    out.flush()
}
