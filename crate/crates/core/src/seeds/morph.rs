use serde::{Deserialize, Serialize};

use super::{Provenance, SeedError, SeedSet};
use crate::corpus::FrequencyTable;

/// Parameters of the shallow morphological enlargement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct MorphConfig {
    /// Maximum number of similar words retained per seed.
    pub n_m: usize,
    /// Minimal stem length in characters; shorter seeds are not expanded.
    pub l_m: usize,
    /// Characters removed from the end of a seed to form its stem.
    pub suffix_strip: usize,
}

impl Default for MorphConfig {
    fn default() -> Self {
        Self {
            n_m: 0,
            l_m: 5,
            suffix_strip: 3,
        }
    }
}

impl MorphConfig {
    pub fn validate(&self) -> Result<(), SeedError> {
        if self.l_m == 0 {
            return Err(SeedError::InvalidConfig("l_m must be at least 1".into()));
        }
        Ok(())
    }

    /// Stem used to search the dictionary, or `None` when the seed is too short.
    pub fn stem<'a>(&self, seed: &'a str) -> Option<&'a str> {
        let len = seed.chars().count();
        if len < self.l_m {
            return None;
        }
        let keep = self.l_m.max(len.saturating_sub(self.suffix_strip));
        let end = seed.char_indices().nth(keep).map_or(seed.len(), |(i, _)| i);
        Some(&seed[..end])
    }
}

/// Adds, for every seed, the most frequent dictionary words sharing its stem.
///
/// `dictionary` should be the full corpus vocabulary. New words are tagged
/// [`Provenance::Morphological`]; existing seeds keep their tag.
pub fn expand_morphological(
    seeds: &SeedSet,
    dictionary: &FrequencyTable,
    cfg: &MorphConfig,
) -> Result<SeedSet, SeedError> {
    cfg.validate()?;
    let mut out = seeds.clone();
    out.morph = Some(*cfg);
    if cfg.n_m == 0 {
        return Ok(out);
    }
    let mut sorted: Vec<(&str, u64)> = dictionary.iter().collect();
    sorted.sort_unstable_by(|a, b| a.0.cmp(b.0));

    for seed in seeds.words() {
        let Some(stem) = cfg.stem(seed) else { continue };
        let start = sorted.partition_point(|(w, _)| *w < stem);
        let mut candidates: Vec<(&str, u64)> = sorted[start..]
            .iter()
            .take_while(|(w, _)| w.starts_with(stem))
            .filter(|(w, _)| *w != seed)
            .copied()
            .collect();
        candidates.sort_unstable_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        for (w, _) in candidates.into_iter().take(cfg.n_m) {
            out.insert(w, Provenance::Morphological);
        }
    }
    Ok(out)
}
