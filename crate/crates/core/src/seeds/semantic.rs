use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{nearest_neighbors, EmbeddingTable, Provenance, SeedError, SeedSet};

/// Parameters of the embedding-neighbourhood enlargement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SemanticConfig {
    /// Neighbours retained per queried word.
    pub n_w: usize,
    /// Number of expansion rounds.
    pub i_w: u32,
}

impl Default for SemanticConfig {
    fn default() -> Self {
        Self { n_w: 40, i_w: 2 }
    }
}

impl SemanticConfig {
    pub fn validate(&self) -> Result<(), SeedError> {
        if self.i_w == 0 {
            return Err(SeedError::InvalidConfig("i_w must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemanticReport {
    /// Input seeds that have no vector and were skipped.
    pub missing: Vec<String>,
    /// Number of new words found at each iteration.
    pub added_per_iteration: Vec<usize>,
}

/// Iteratively adds the `n_w` nearest neighbours of every word in the current frontier.
///
/// The frontier starts as the input seeds; each round's frontier is the set of
/// neighbours not accumulated before, tagged [`Provenance::Semantic`] with the round
/// number.
pub fn expand_semantic(
    seeds: &SeedSet,
    table: &EmbeddingTable,
    cfg: &SemanticConfig,
) -> Result<(SeedSet, SemanticReport), SeedError> {
    cfg.validate()?;
    let mut out = seeds.clone();
    out.semantic = Some(*cfg);
    let mut report = SemanticReport {
        missing: seeds.words().filter(|w| !table.contains(w)).map(str::to_string).collect(),
        ..Default::default()
    };
    if cfg.n_w == 0 {
        return Ok((out, report));
    }

    let mut frontier: Vec<String> = seeds.words().map(str::to_string).collect();
    for round in 1..=cfg.i_w {
        let found: Vec<Vec<(String, f64)>> = frontier
            .par_iter()
            .filter(|w| table.contains(w))
            .map(|w| match nearest_neighbors(w, table, cfg.n_w) {
                // a zero-norm vector has no neighbourhood
                Err(SeedError::ZeroNorm) => Ok(Vec::new()),
                r => r,
            })
            .collect::<Result<_, _>>()?;
        let fresh: BTreeSet<String> = found
            .into_iter()
            .flatten()
            .map(|(w, _)| w)
            .filter(|w| !out.contains(w))
            .collect();
        for w in &fresh {
            out.insert(w.as_str(), Provenance::Semantic(round));
        }
        report.added_per_iteration.push(fresh.len());
        if fresh.is_empty() {
            break;
        }
        frontier = fresh.into_iter().collect();
    }
    Ok((out, report))
}
