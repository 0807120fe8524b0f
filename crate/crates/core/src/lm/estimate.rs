use std::collections::HashMap;

use super::counts::NGramCounts;
use super::model::{Entry, NGramModel, LOG_ZERO};
use super::vocab::{Vocab, WordId};
use super::LmError;

/// Probability given to a vocabulary word with zero unigram count, before renormalization.
pub const UNIGRAM_FLOOR: f64 = 1e-7;

/// Real-valued counts; integer counts and adaptation pseudo-counts both end up here.
#[derive(Debug, Clone)]
pub(crate) struct CountSet {
    pub order: usize,
    pub vocab: Vocab,
    pub counts: Vec<HashMap<Vec<WordId>, f64>>,
}

impl From<&NGramCounts> for CountSet {
    fn from(c: &NGramCounts) -> Self {
        CountSet {
            order: c.order(),
            vocab: c.vocab().clone(),
            counts: (1..=c.order())
                .map(|n| c.table(n).iter().map(|(g, &v)| (g.clone(), v as f64)).collect())
                .collect(),
        }
    }
}

/// Witten-Bell backoff estimate.
///
/// For a history h with total extension count c(h) and T(h) distinct continuations,
/// a seen event gets c(h w) / (c(h) + T(h)); the remaining T(h) / (c(h) + T(h)) is
/// passed to the lower order through the backoff weight. Unigrams are relative
/// frequencies with [`UNIGRAM_FLOOR`] for unseen words, renormalized to sum to one.
pub fn estimate_model(counts: &NGramCounts) -> Result<NGramModel, LmError> {
    estimate(CountSet::from(counts))
}

pub(crate) fn estimate(cs: CountSet) -> Result<NGramModel, LmError> {
    let CountSet { order, vocab, counts } = cs;
    let unigram_counts = &counts[0];
    let total: f64 = vocab
        .predicted()
        .filter_map(|w| unigram_counts.get(&vec![w]))
        .sum();
    if total <= 0.0 {
        return Err(LmError::EmptyCounts);
    }

    let mut entries: Vec<HashMap<Vec<WordId>, Entry>> = vec![HashMap::new(); order];
    let raw: Vec<(WordId, f64, f64)> = vocab
        .predicted()
        .map(|w| {
            let c = unigram_counts.get(&vec![w]).copied().unwrap_or(0.0);
            let p = if c > 0.0 { c / total } else { UNIGRAM_FLOOR };
            (w, p, c)
        })
        .collect();
    let z: f64 = raw.iter().map(|r| r.1).sum();
    for (w, p, c) in raw {
        entries[0].insert(
            vec![w],
            Entry {
                log_prob: (p / z).log10(),
                backoff: None,
                count: Some(c),
            },
        );
    }
    entries[0].insert(
        vec![Vocab::BOS_ID],
        Entry {
            log_prob: LOG_ZERO,
            backoff: None,
            count: unigram_counts.get(&vec![Vocab::BOS_ID]).copied(),
        },
    );

    let predictable = vocab.len() - 1;
    for n in 2..=order {
        // sorted so that float pseudo-counts are summed in a fixed order
        let mut grams: Vec<(&Vec<WordId>, f64)> = counts[n - 1].iter().map(|(g, &c)| (g, c)).collect();
        grams.sort_unstable_by(|a, b| a.0.cmp(b.0));
        let mut history_stats: HashMap<&[WordId], (f64, usize)> = HashMap::new();
        for &(g, c) in &grams {
            if c > 0.0 {
                let s = history_stats.entry(&g[..n - 1]).or_insert((0.0, 0));
                s.0 += c;
                s.1 += 1;
            }
        }
        let table = &mut entries[n - 1];
        for (g, c) in grams {
            if c <= 0.0 {
                continue;
            }
            let (ch, t) = history_stats[&g[..n - 1]];
            // a history followed by every word leaves nothing to back off to
            let denom = if t >= predictable { ch } else { ch + t as f64 };
            table.insert(
                g.clone(),
                Entry {
                    log_prob: (c / denom).log10(),
                    backoff: None,
                    count: Some(c),
                },
            );
        }
    }

    let mut model = NGramModel { order, vocab, entries };
    model.recompute_backoffs();
    Ok(model)
}
