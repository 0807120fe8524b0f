//! Pipeline configuration: a TOML file whose keys mirror `PipelineConfig`, with
//! command-line flags applied on top.

use std::path::{Path, PathBuf};

use anyhow::Context;
use seedlm::lm::PruneConfig;
use seedlm::pipeline::PipelineConfig;

use crate::Invalid;

/// Reads a config file. Relative paths inside it are taken relative to the file.
pub fn load(path: &Path) -> anyhow::Result<PipelineConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut cfg: PipelineConfig =
        toml::from_str(&text).map_err(|e| Invalid(format!("{}: {e}", path.display())))?;
    let base = path.parent().unwrap_or(Path::new(""));
    let rebase = |p: &mut PathBuf| {
        if p.is_relative() {
            *p = base.join(&*p);
        }
    };
    cfg.corpus.iter_mut().for_each(rebase);
    cfg.glossary.iter_mut().for_each(rebase);
    cfg.embeddings.iter_mut().for_each(rebase);
    rebase(&mut cfg.out_dir);
    Ok(cfg)
}

/// Parses `0,1,1` into per-order count thresholds.
pub fn parse_prune(spec: &str) -> Result<PruneConfig, String> {
    let min_counts = spec
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("bad threshold {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    let cfg = PruneConfig {
        min_counts,
        prob_threshold: None,
    };
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}
