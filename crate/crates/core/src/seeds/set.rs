use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use super::{MorphConfig, SeedError, SemanticConfig};
use crate::corpus::{tokenize, Lexicon, TokenizerConfig};

/// Where a seed word came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    Glossary,
    Morphological,
    /// Found at the given iteration (starting at 1) of the embedding expansion.
    Semantic(u32),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Glossary => f.write_str("glossary"),
            Provenance::Morphological => f.write_str("morphological"),
            Provenance::Semantic(k) => write!(f, "semantic:{k}"),
        }
    }
}

impl FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "glossary" => Ok(Provenance::Glossary),
            "morphological" => Ok(Provenance::Morphological),
            _ => s
                .strip_prefix("semantic:")
                .and_then(|k| k.parse().ok())
                .map(Provenance::Semantic)
                .ok_or_else(|| format!("unknown provenance tag {s:?}")),
        }
    }
}

/// A set of seed words, each tagged with the first origin that produced it.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SeedSet {
    words: BTreeMap<String, Provenance>,
    pub morph: Option<MorphConfig>,
    pub semantic: Option<SemanticConfig>,
}

impl SeedSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `word` unless it is empty or already present. Returns whether it was added.
    pub fn insert(&mut self, word: impl Into<String>, provenance: Provenance) -> bool {
        let word = word.into();
        if word.is_empty() || self.words.contains_key(&word) {
            return false;
        }
        self.words.insert(word, provenance);
        true
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains_key(word)
    }

    pub fn provenance(&self, word: &str) -> Option<Provenance> {
        self.words.get(word).copied()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Words in ascending order.
    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.words.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Provenance)> {
        self.words.iter().map(|(w, p)| (w.as_str(), *p))
    }

    pub fn is_subset(&self, other: &SeedSet) -> bool {
        self.words().all(|w| other.contains(w))
    }

    /// Seed file: `word<TAB>provenance`, one per line, words ascending.
    pub fn write_to<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (w, p) in &self.words {
            writeln!(out, "{w}\t{p}")?;
        }
        out.flush()
    }

    pub fn read_from<R: BufRead>(input: R) -> Result<Self, SeedError> {
        let mut set = Self::new();
        for (i, line) in input.lines().enumerate() {
            let line = line?;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() {
                continue;
            }
            let err = |message: String| SeedError::SeedFileFormat { line: i + 1, message };
            let (word, tag) = match line.split_once('\t') {
                Some((w, t)) => (w.trim(), t.trim().parse::<Provenance>().map_err(err)?),
                // a bare word list is accepted as glossary seeds
                None => (line.trim(), Provenance::Glossary),
            };
            if word.chars().any(char::is_whitespace) {
                return Err(SeedError::SeedFileFormat {
                    line: i + 1,
                    message: format!("seed {word:?} contains whitespace"),
                });
            }
            set.insert(word, tag);
        }
        Ok(set)
    }
}

/// Tokenizes a glossary: one term per line, multi-word terms allowed.
///
/// Anything after the first tab on a line (for instance a translation) is ignored.
pub fn read_glossary<R: BufRead>(input: R, config: &TokenizerConfig) -> std::io::Result<Vec<String>> {
    let mut tokens = Vec::new();
    for line in input.lines() {
        let line = line?;
        let term = line.split('\t').next().unwrap_or_default();
        tokens.extend(tokenize(term, config));
    }
    Ok(tokens)
}

/// Distinct glossary tokens that are missing from the base lexicon.
pub fn extract_seeds<S: AsRef<str>>(glossary_tokens: &[S], base_lexicon: &Lexicon) -> SeedSet {
    let mut seeds = SeedSet::new();
    for t in glossary_tokens {
        let t = t.as_ref();
        if !base_lexicon.contains(t) {
            seeds.insert(t, Provenance::Glossary);
        }
    }
    seeds
}
