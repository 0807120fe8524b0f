use std::borrow::Borrow;
use std::collections::HashMap;

use rayon::prelude::*;

use super::reader::Document;

/// Word occurrence counts over a corpus.
///
/// `total_running_words` always equals the sum of the counts, and every stored
/// count is at least one.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FrequencyTable {
    counts: HashMap<String, u64>,
    total_running_words: u64,
}

impl FrequencyTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Accepts owned or borrowed documents.
    pub fn from_documents<I>(docs: I) -> Self
    where
        I: IntoIterator,
        I::Item: Borrow<Document>,
    {
        let mut table = Self::new();
        for doc in docs {
            table.add_tokens(&doc.borrow().tokens);
        }
        table
    }

    /// Counts a slice of documents in parallel shards and merges the partial tables.
    pub fn from_documents_par(docs: &[Document]) -> Self {
        docs.par_chunks(4096)
            .map(|chunk| {
                let mut t = Self::new();
                for d in chunk {
                    t.add_tokens(&d.tokens);
                }
                t
            })
            .reduce(Self::new, |mut a, b| {
                a.merge(b);
                a
            })
    }

    pub fn add_tokens<S: AsRef<str>>(&mut self, tokens: &[S]) {
        for t in tokens {
            self.add(t.as_ref(), 1);
        }
    }

    /// Adds `count` occurrences of `word`. Zero counts are ignored.
    pub fn add(&mut self, word: &str, count: u64) {
        if count == 0 {
            return;
        }
        match self.counts.get_mut(word) {
            Some(c) => *c += count,
            None => {
                self.counts.insert(word.to_string(), count);
            }
        }
        self.total_running_words += count;
    }

    pub fn merge(&mut self, other: FrequencyTable) {
        for (w, c) in other.counts {
            *self.counts.entry(w).or_insert(0) += c;
        }
        self.total_running_words += other.total_running_words;
    }

    pub fn get(&self, word: &str) -> u64 {
        self.counts.get(word).copied().unwrap_or(0)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.counts.contains_key(word)
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total_running_words(&self) -> u64 {
        self.total_running_words
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.counts.iter().map(|(w, &c)| (w.as_str(), c))
    }

    /// All entries ordered by count descending, then word ascending.
    pub fn ranked(&self) -> Vec<(&str, u64)> {
        let mut entries: Vec<_> = self.iter().collect();
        entries.sort_unstable_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        entries
    }
}

impl<'a> FromIterator<&'a str> for FrequencyTable {
    fn from_iter<I: IntoIterator<Item = &'a str>>(iter: I) -> Self {
        let mut t = Self::new();
        for w in iter {
            t.add(w, 1);
        }
        t
    }
}
