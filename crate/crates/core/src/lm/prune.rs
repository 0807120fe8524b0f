use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::model::NGramModel;
use super::vocab::WordId;
use super::LmError;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PruneConfig {
    /// Minimum supporting count per order, index 0 = unigrams (ignored: unigrams are
    /// never pruned). Missing orders use 0.
    pub min_counts: Vec<f64>,
    /// Minimum conditional probability for n-grams of order >= 2.
    pub prob_threshold: Option<f64>,
}

impl PruneConfig {
    /// Count cutoffs (0, 1, 1) used when a "manageable size" is requested.
    pub fn manageable() -> Self {
        Self {
            min_counts: vec![0.0, 1.0, 1.0],
            prob_threshold: None,
        }
    }

    pub fn validate(&self) -> Result<(), LmError> {
        if let Some(c) = self.min_counts.iter().find(|c| !c.is_finite() || **c < 0.0) {
            return Err(LmError::InvalidPrune(format!("count threshold {c} is negative")));
        }
        if let Some(p) = self.prob_threshold {
            if !(0.0..=1.0).contains(&p) {
                return Err(LmError::InvalidPrune(format!("probability threshold {p} outside [0, 1]")));
            }
        }
        Ok(())
    }

    fn min_count(&self, n: usize) -> f64 {
        self.min_counts.get(n - 1).copied().unwrap_or(0.0)
    }
}

/// Removes n-grams of order >= 2 whose count or probability is below threshold, then
/// recomputes backoff weights so every history stays normalized.
///
/// A pruned n-gram is kept anyway when it is the prefix or suffix of a surviving
/// longer n-gram, so the result remains a well-formed backoff model. Explicit
/// probabilities of surviving n-grams are unchanged; n-grams without a known count
/// (imported models) are only subject to the probability threshold.
pub fn prune_model(model: &NGramModel, cfg: &PruneConfig) -> Result<NGramModel, LmError> {
    cfg.validate()?;
    let order = model.order;
    let log_threshold = cfg.prob_threshold.map(f64::log10);
    let mut keep: Vec<HashSet<Vec<WordId>>> = vec![HashSet::new(); order];
    let mut required: HashSet<Vec<WordId>> = HashSet::new();
    let mut removed = 0usize;

    for n in (2..=order).rev() {
        let min_count = cfg.min_count(n);
        let mut next_required = HashSet::new();
        for (g, e) in &model.entries[n - 1] {
            let count_ok = e.count.is_none_or(|c| c >= min_count);
            let prob_ok = log_threshold.is_none_or(|t| e.log_prob >= t);
            if (count_ok && prob_ok) || required.contains(g) {
                keep[n - 1].insert(g.clone());
                next_required.insert(g[..n - 1].to_vec());
                next_required.insert(g[1..].to_vec());
            } else {
                removed += 1;
            }
        }
        required = next_required;
    }
    if removed == 0 {
        return Ok(model.clone());
    }

    let mut pruned = model.clone();
    for n in 2..=order {
        pruned.entries[n - 1].retain(|g, _| keep[n - 1].contains(g));
    }
    pruned.recompute_backoffs();
    Ok(pruned)
}
