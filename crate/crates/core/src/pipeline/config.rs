use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PipelineError;
use crate::corpus::TokenizerConfig;
use crate::lm::{AdaptationWeight, PruneConfig};
use crate::seeds::{MorphConfig, SemanticConfig};
use crate::selection::SelectionConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Baseline,
    Adapted,
    Word2vec,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Baseline, Mode::Adapted, Mode::Word2vec];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Baseline => "baseline",
            Mode::Adapted => "adapted",
            Mode::Word2vec => "word2vec",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "baseline" | "bl" => Ok(Mode::Baseline),
            "adapted" | "ada" => Ok(Mode::Adapted),
            "word2vec" | "w2v" => Ok(Mode::Word2vec),
            _ => Err(format!("unknown mode {s:?} (expected baseline, adapted or word2vec)")),
        }
    }
}

/// Everything a pipeline run depends on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    /// Corpus files, one document per line, read in the given order.
    pub corpus: Vec<PathBuf>,
    pub base_lexicon_size: usize,
    pub order: usize,
    /// Required by the adapted mode; optional initial seeds for word2vec.
    pub glossary: Option<PathBuf>,
    /// word2vec text format; required by the word2vec mode.
    pub embeddings: Option<PathBuf>,
    /// Initial seeds of the word2vec mode, in addition to the glossary tokens.
    pub seed_words: Vec<String>,
    pub lambda: AdaptationWeight,
    pub f_min: u64,
    pub out_dir: PathBuf,
    pub tokenizer: TokenizerConfig,
    pub morph: MorphConfig,
    pub semantic: SemanticConfig,
    pub selection: SelectionConfig,
    /// Applied to every produced model when present.
    pub prune: Option<PruneConfig>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            corpus: Vec::new(),
            base_lexicon_size: 128_000,
            order: 3,
            glossary: None,
            embeddings: None,
            seed_words: Vec::new(),
            lambda: AdaptationWeight::default(),
            f_min: 1,
            out_dir: PathBuf::from("out"),
            tokenizer: TokenizerConfig::default(),
            morph: MorphConfig::default(),
            semantic: SemanticConfig::default(),
            selection: SelectionConfig::default(),
            prune: None,
        }
    }
}

impl PipelineConfig {
    /// Checks ranges and the presence of every input the mode needs.
    pub fn validate(&self, mode: Mode) -> Result<(), PipelineError> {
        let invalid = |m: String| Err(PipelineError::Validation(m));
        if self.corpus.is_empty() {
            return invalid("no corpus files given".into());
        }
        for p in &self.corpus {
            if !p.is_file() {
                return invalid(format!("corpus file {} does not exist", p.display()));
            }
        }
        if self.base_lexicon_size == 0 {
            return invalid("base_lexicon_size must be at least 1".into());
        }
        if self.order == 0 {
            return invalid("order must be at least 1".into());
        }
        if self.f_min == 0 {
            return invalid("f_min must be at least 1".into());
        }
        self.morph.validate().map_err(|e| PipelineError::Validation(e.to_string()))?;
        self.semantic.validate().map_err(|e| PipelineError::Validation(e.to_string()))?;
        if let Some(p) = &self.prune {
            p.validate().map_err(|e| PipelineError::Validation(e.to_string()))?;
        }
        if let Some(g) = &self.glossary {
            if !g.is_file() {
                return invalid(format!("glossary {} does not exist", g.display()));
            }
        }
        if let Some(e) = &self.embeddings {
            if !e.is_file() {
                return invalid(format!("embeddings {} do not exist", e.display()));
            }
        }
        match mode {
            Mode::Baseline => {}
            Mode::Adapted if self.glossary.is_none() => return invalid("adapted mode needs a glossary".into()),
            Mode::Adapted => {}
            Mode::Word2vec => {
                if self.embeddings.is_none() {
                    return invalid("word2vec mode needs an embeddings file".into());
                }
                if self.glossary.is_none() && self.seed_words.is_empty() {
                    return invalid("word2vec mode needs initial seed words or a glossary".into());
                }
            }
        }
        Ok(())
    }
}
