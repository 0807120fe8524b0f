use std::collections::HashMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use super::frequency::FrequencyTable;
use super::lexicon::Lexicon;
use super::CorpusError;
use crate::percent::percent_of;

/// Out-of-vocabulary statistics of a token sequence against a lexicon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OovRate {
    pub oov_count: u64,
    pub running_words: u64,
    /// Percentage rounded half-up to two decimals; 0 for an empty text.
    pub percentage: f64,
}

impl OovRate {
    pub fn from_counts(oov_count: u64, running_words: u64) -> Self {
        Self {
            oov_count,
            running_words,
            percentage: percent_of(oov_count, running_words),
        }
    }
}

pub fn oov_rate<S: AsRef<str>>(tokens: &[S], lexicon: &Lexicon) -> OovRate {
    let oov = tokens.iter().filter(|t| !lexicon.contains(t.as_ref())).count();
    OovRate::from_counts(oov as u64, tokens.len() as u64)
}

/// OOV percentage of `tokens` against the top-k lexicon of `table`, for each k in `sizes`.
///
/// `sizes` must be non-empty, strictly increasing and free of zeros.
pub fn oov_curve<S: AsRef<str>>(
    tokens: &[S],
    table: &FrequencyTable,
    sizes: &[usize],
) -> Result<Vec<(usize, f64)>, CorpusError> {
    if sizes.is_empty() {
        return Err(CorpusError::CurveSizes("no sizes given".into()));
    }
    if sizes.contains(&0) {
        return Err(CorpusError::CurveSizes("size 0 is not a valid lexicon size".into()));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CorpusError::CurveSizes("sizes must be strictly increasing".into()));
    }
    // A token is OOV for a top-k lexicon exactly when its rank exceeds k.
    let ranks: HashMap<&str, usize> = table
        .ranked()
        .into_iter()
        .enumerate()
        .map(|(i, (w, _))| (w, i + 1))
        .collect();
    let mut token_ranks: Vec<usize> = tokens
        .iter()
        .map(|t| ranks.get(t.as_ref()).copied().unwrap_or(usize::MAX))
        .collect();
    token_ranks.sort_unstable();
    let total = token_ranks.len() as u64;
    Ok(sizes
        .iter()
        .map(|&k| {
            let known = token_ranks.partition_point(|&r| r <= k) as u64;
            (k, percent_of(total - known, total))
        })
        .collect())
}

pub fn write_oov_curve_csv<W: Write>(curve: &[(usize, f64)], mut out: W) -> std::io::Result<()> {
    writeln!(out, "size,oov_percent")?;
    for (size, pct) in curve {
        writeln!(out, "{size},{pct:.2}")?;
    }
    out.flush()
}
