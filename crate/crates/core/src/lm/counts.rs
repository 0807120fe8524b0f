use std::borrow::Borrow;
use std::collections::HashMap;
use std::io::Write;

use super::vocab::{Vocab, WordId};
use super::LmError;
use crate::corpus::{Document, Lexicon};

/// N-gram occurrence counts for orders 1..=order over a fixed vocabulary.
///
/// Each document is one sentence padded with `<s>` and `</s>`; tokens outside the
/// vocabulary are counted as `<unk>`. The `<s>` unigram counts sentences.
#[derive(Debug, Clone, PartialEq)]
pub struct NGramCounts {
    order: usize,
    vocab: Vocab,
    counts: Vec<HashMap<Vec<WordId>, u64>>,
}

impl NGramCounts {
    pub fn new(order: usize, vocab: Vocab) -> Result<Self, LmError> {
        if order == 0 {
            return Err(LmError::InvalidOrder(order));
        }
        Ok(Self {
            order,
            vocab,
            counts: vec![HashMap::new(); order],
        })
    }

    /// Adds one sentence. Empty sentences are skipped.
    pub fn add_sentence<S: AsRef<str>>(&mut self, tokens: &[S]) {
        if tokens.is_empty() {
            return;
        }
        let mut seq = Vec::with_capacity(tokens.len() + 2);
        seq.push(Vocab::BOS_ID);
        seq.extend(tokens.iter().map(|t| self.vocab.id_or_unk(t.as_ref())));
        seq.push(Vocab::EOS_ID);
        for n in 1..=self.order {
            let table = &mut self.counts[n - 1];
            for window in seq.windows(n) {
                match table.get_mut(window) {
                    Some(c) => *c += 1,
                    None => {
                        table.insert(window.to_vec(), 1);
                    }
                }
            }
        }
    }

    /// Adds the counts of another table over the same vocabulary.
    pub fn merge(&mut self, other: NGramCounts) -> Result<(), LmError> {
        if other.order != self.order {
            return Err(LmError::OrderMismatch(self.order, other.order));
        }
        if other.vocab != self.vocab {
            return Err(LmError::VocabMismatch);
        }
        for (mine, theirs) in self.counts.iter_mut().zip(other.counts) {
            for (g, c) in theirs {
                *mine.entry(g).or_insert(0) += c;
            }
        }
        Ok(())
    }

    /// The same counts with ids remapped into `vocab`, which must contain this vocabulary.
    pub fn with_vocab(&self, vocab: &Vocab) -> Result<NGramCounts, LmError> {
        if !vocab.contains_all(&self.vocab) {
            return Err(LmError::VocabMismatch);
        }
        let map: Vec<WordId> = self
            .vocab
            .words()
            .iter()
            .map(|w| vocab.id(w).expect("checked above"))
            .collect();
        let counts = self
            .counts
            .iter()
            .map(|t| {
                t.iter()
                    .map(|(g, &c)| (g.iter().map(|&i| map[i as usize]).collect(), c))
                    .collect()
            })
            .collect();
        Ok(NGramCounts {
            order: self.order,
            vocab: vocab.clone(),
            counts,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vocab(&self) -> &Vocab {
        &self.vocab
    }

    /// Count table for n-grams of length `n` (1-based).
    pub fn table(&self, n: usize) -> &HashMap<Vec<WordId>, u64> {
        &self.counts[n - 1]
    }

    /// Count of an n-gram given as words; 0 when absent or out of vocabulary.
    pub fn get<S: AsRef<str>>(&self, ngram: &[S]) -> u64 {
        if ngram.is_empty() || ngram.len() > self.order {
            return 0;
        }
        let ids: Option<Vec<WordId>> = ngram.iter().map(|w| self.vocab.id(w.as_ref())).collect();
        ids.and_then(|ids| self.counts[ngram.len() - 1].get(&ids).copied())
            .unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.counts[0].is_empty()
    }

    /// Writes `count<TAB>w1 w2 ...` lines, by order then by words.
    pub fn write_dump<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for table in &self.counts {
            let mut rows: Vec<(Vec<&str>, u64)> = table
                .iter()
                .map(|(g, &c)| (g.iter().map(|&i| self.vocab.word(i)).collect(), c))
                .collect();
            rows.sort_unstable();
            for (words, c) in rows {
                writeln!(out, "{c}\t{}", words.join(" "))?;
            }
        }
        out.flush()
    }
}

/// Counts all n-grams up to `order` over `corpus`, mapping words outside `lexicon` to `<unk>`.
pub fn count_ngrams<I>(corpus: I, lexicon: &Lexicon, order: usize) -> Result<NGramCounts, LmError>
where
    I: IntoIterator,
    I::Item: Borrow<Document>,
{
    let mut counts = NGramCounts::new(order, Vocab::from_lexicon(lexicon))?;
    for doc in corpus {
        counts.add_sentence(&doc.borrow().tokens);
    }
    Ok(counts)
}
