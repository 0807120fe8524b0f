use std::collections::HashMap;
use std::io::{BufRead, Write};

use super::frequency::FrequencyTable;
use super::CorpusError;

/// An ordered word list with rank and membership queries.
///
/// Rank 1 is the first word. Words are unique.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    words: Vec<String>,
    counts: Option<Vec<u64>>,
    index: HashMap<String, usize>,
}

impl Lexicon {
    /// The `n` most frequent words of `table`, ties broken by ascending word.
    pub fn top_n(table: &FrequencyTable, n: usize) -> Result<Self, CorpusError> {
        if n == 0 {
            return Err(CorpusError::ZeroLexiconSize);
        }
        let ranked = table.ranked();
        let mut lex = Self::default();
        let mut counts = Vec::with_capacity(n.min(ranked.len()));
        for (w, c) in ranked.into_iter().take(n) {
            lex.push_unchecked(w.to_string());
            counts.push(c);
        }
        lex.counts = Some(counts);
        Ok(lex)
    }

    /// Builds a lexicon from words in rank order, dropping repeated words.
    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut lex = Self::default();
        for w in words {
            let w = w.into();
            if !lex.index.contains_key(&w) {
                lex.push_unchecked(w);
            }
        }
        lex
    }

    fn push_unchecked(&mut self, word: String) {
        self.index.insert(word.clone(), self.words.len());
        self.words.push(word);
    }

    /// Appends `word` (with an optional count) if it is not present yet.
    pub(crate) fn push(&mut self, word: &str, count: Option<u64>) -> bool {
        if self.index.contains_key(word) {
            return false;
        }
        match (&mut self.counts, count) {
            (Some(cs), Some(c)) => cs.push(c),
            (Some(_), None) => self.counts = None,
            (None, _) => {}
        }
        self.push_unchecked(word.to_string());
        true
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    /// 1-based rank of `word`.
    pub fn rank(&self, word: &str) -> Option<usize> {
        self.index.get(word).map(|i| i + 1)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn counts(&self) -> Option<&[u64]> {
        self.counts.as_deref()
    }

    /// Writes one word per line in rank order, with a tab-separated count when known.
    pub fn write_to<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        match &self.counts {
            Some(counts) => {
                for (w, c) in self.words.iter().zip(counts) {
                    writeln!(out, "{w}\t{c}")?;
                }
            }
            None => {
                for w in &self.words {
                    writeln!(out, "{w}")?;
                }
            }
        }
        out.flush()
    }

    /// Reads the format produced by [`Lexicon::write_to`]. Blank lines are ignored.
    pub fn read_from<R: BufRead>(input: R) -> Result<Self, CorpusError> {
        let mut lex = Self::default();
        let mut counts = Vec::new();
        let mut all_counted = true;
        for (i, line) in input.lines().enumerate() {
            let line = line?;
            let lineno = i + 1;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() {
                continue;
            }
            let mut fields = line.split('\t');
            let word = fields.next().unwrap_or_default().trim();
            if word.is_empty() || word.chars().any(char::is_whitespace) {
                return Err(CorpusError::LexiconFormat {
                    line: lineno,
                    message: format!("invalid word {word:?}"),
                });
            }
            match fields.next() {
                Some(c) => {
                    let c = c.trim().parse::<u64>().map_err(|e| CorpusError::LexiconFormat {
                        line: lineno,
                        message: format!("invalid count {c:?}: {e}"),
                    })?;
                    counts.push(c);
                }
                None => all_counted = false,
            }
            if fields.next().is_some() {
                return Err(CorpusError::LexiconFormat {
                    line: lineno,
                    message: "too many fields".into(),
                });
            }
            if lex.contains(word) {
                return Err(CorpusError::LexiconFormat {
                    line: lineno,
                    message: format!("duplicate word {word:?}"),
                });
            }
            lex.push_unchecked(word.to_string());
        }
        if all_counted && !lex.is_empty() {
            lex.counts = Some(counts);
        }
        Ok(lex)
    }
}
