use std::collections::HashMap;

use super::vocab::{Vocab, WordId};

/// Log10 value used for `<s>` and for words without any probability.
pub(crate) const LOG_ZERO: f64 = -99.0;

/// One stored n-gram.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Entry {
    /// log10 P(w | h).
    pub log_prob: f64,
    /// log10 backoff weight of this n-gram used as a history; `None` means 0 (weight 1).
    pub backoff: Option<f64>,
    /// Supporting (pseudo-)count; unknown for imported models.
    pub count: Option<f64>,
}

/// A backoff n-gram model.
#[derive(Debug, Clone, PartialEq)]
pub struct NGramModel {
    pub(crate) order: usize,
    pub(crate) vocab: Vocab,
    /// `entries[n - 1]` holds the n-grams of length n.
    pub(crate) entries: Vec<HashMap<Vec<WordId>, Entry>>,
}

impl NGramModel {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vocab(&self) -> &Vocab {
        &self.vocab
    }

    pub fn entries(&self, n: usize) -> &HashMap<Vec<WordId>, Entry> {
        &self.entries[n - 1]
    }

    pub fn entry(&self, ngram: &[WordId]) -> Option<&Entry> {
        if ngram.is_empty() || ngram.len() > self.order {
            return None;
        }
        self.entries[ngram.len() - 1].get(ngram)
    }

    pub fn num_entries(&self) -> usize {
        self.entries.iter().map(HashMap::len).sum()
    }

    fn backoff_of(&self, history: &[WordId]) -> f64 {
        self.entry(history).and_then(|e| e.backoff).unwrap_or(0.0)
    }

    /// log10 P(word | history) with standard backoff. Only the last `order - 1`
    /// history words are used.
    pub fn log_prob(&self, history: &[WordId], word: WordId) -> f64 {
        let max_ctx = history.len().min(self.order - 1);
        let mut acc = 0.0;
        let mut key = Vec::with_capacity(max_ctx + 1);
        for ctx_len in (0..=max_ctx).rev() {
            let ctx = &history[history.len() - ctx_len..];
            key.clear();
            key.extend_from_slice(ctx);
            key.push(word);
            if let Some(e) = self.entries[ctx_len].get(&key) {
                return acc + e.log_prob;
            }
            if ctx_len > 0 {
                acc += self.backoff_of(ctx);
            }
        }
        acc + LOG_ZERO
    }

    /// Same as [`NGramModel::log_prob`] but over words; unknown words map to `<unk>`.
    pub fn log_prob_words<S: AsRef<str>>(&self, history: &[S], word: &str) -> f64 {
        let h: Vec<WordId> = history.iter().map(|w| self.vocab.id_or_unk(w.as_ref())).collect();
        self.log_prob(&h, self.vocab.id_or_unk(word))
    }

    /// Every stored n-gram of length < order that has stored extensions.
    pub fn histories(&self) -> Vec<Vec<WordId>> {
        let mut out: Vec<Vec<WordId>> = Vec::new();
        for n in 2..=self.order {
            let mut hs: Vec<Vec<WordId>> = self.entries[n - 1].keys().map(|g| g[..n - 1].to_vec()).collect();
            hs.sort_unstable();
            hs.dedup();
            out.extend(hs);
        }
        out
    }

    /// Sum of P(w | history) over every predictable word.
    pub fn conditional_mass(&self, history: &[WordId]) -> f64 {
        self.vocab
            .predicted()
            .map(|w| 10f64.powf(self.log_prob(history, w)))
            .sum()
    }

    /// Recomputes every backoff weight from the stored probabilities so that each
    /// history's distribution sums to one.
    ///
    /// Orders are processed bottom-up because a weight at order n depends on the
    /// completed distribution at order n - 1.
    pub(crate) fn recompute_backoffs(&mut self) {
        for table in &mut self.entries {
            for e in table.values_mut() {
                e.backoff = None;
            }
        }
        for n in 1..self.order {
            let mut by_history: HashMap<Vec<WordId>, Vec<(WordId, f64)>> = HashMap::new();
            for (g, e) in &self.entries[n] {
                by_history
                    .entry(g[..n].to_vec())
                    .or_default()
                    .push((g[n], e.log_prob));
            }
            let mut weights: Vec<(Vec<WordId>, f64)> = Vec::with_capacity(by_history.len());
            for (h, mut exts) in by_history {
                exts.sort_unstable_by_key(|&(w, _)| w);
                let explicit: f64 = exts.iter().map(|&(_, lp)| 10f64.powf(lp)).sum();
                let lower: f64 = exts
                    .iter()
                    .map(|&(w, _)| 10f64.powf(self.log_prob(&h[1..], w)))
                    .sum();
                let num = (1.0 - explicit).max(0.0);
                let den = 1.0 - lower;
                let alpha = if num <= 1e-15 || den <= 1e-15 { 1.0 } else { num / den };
                weights.push((h, alpha.log10()));
            }
            for (h, bo) in weights {
                if let Some(e) = self.entries[n - 1].get_mut(&h) {
                    e.backoff = Some(bo);
                }
            }
        }
    }
}
