use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::counts::NGramCounts;
use super::estimate::{estimate, CountSet};
use super::model::NGramModel;
use super::vocab::{Vocab, WordId};
use super::LmError;

/// Mixing weight λ of the adaptation text, in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct AdaptationWeight(f64);

impl AdaptationWeight {
    pub fn new(lambda: f64) -> Result<Self, LmError> {
        if lambda.is_finite() && (0.0..=1.0).contains(&lambda) {
            Ok(Self(lambda))
        } else {
            Err(LmError::InvalidWeight(lambda))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Default for AdaptationWeight {
    fn default() -> Self {
        Self(0.5)
    }
}

impl TryFrom<f64> for AdaptationWeight {
    type Error = LmError;

    fn try_from(v: f64) -> Result<Self, Self::Error> {
        Self::new(v)
    }
}

impl From<AdaptationWeight> for f64 {
    fn from(w: AdaptationWeight) -> f64 {
        w.0
    }
}

/// Pseudo-counts obtained by interpolating background and adaptation relative
/// frequencies, over the union vocabulary.
#[derive(Debug, Clone)]
pub struct MixedCounts {
    inner: CountSet,
}

impl MixedCounts {
    pub fn vocab(&self) -> &Vocab {
        &self.inner.vocab
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    /// Pseudo-count of an n-gram given as words.
    pub fn get<S: AsRef<str>>(&self, ngram: &[S]) -> f64 {
        self.ids(ngram)
            .and_then(|ids| self.inner.counts[ids.len() - 1].get(&ids).copied())
            .unwrap_or(0.0)
    }

    /// Mixed relative frequency of the last word given the preceding ones, before smoothing.
    ///
    /// Unigram frequencies are relative to all predictable words (`<s>` excluded).
    pub fn conditional_frequency<S: AsRef<str>>(&self, ngram: &[S]) -> f64 {
        let Some(ids) = self.ids(ngram) else { return 0.0 };
        let n = ids.len();
        let table = &self.inner.counts[n - 1];
        let Some(&c) = table.get(&ids) else { return 0.0 };
        c / history_total(table, n, &ids[..n - 1])
    }

    fn ids<S: AsRef<str>>(&self, ngram: &[S]) -> Option<Vec<WordId>> {
        if ngram.is_empty() || ngram.len() > self.inner.order {
            return None;
        }
        ngram.iter().map(|w| self.inner.vocab.id(w.as_ref())).collect()
    }

    pub fn estimate(self) -> Result<NGramModel, LmError> {
        estimate(self.inner)
    }
}

fn history_total<V: Copy + Into<f64>>(table: &HashMap<Vec<WordId>, V>, n: usize, h: &[WordId]) -> f64 {
    table
        .iter()
        .filter(|(g, _)| &g[..n - 1] == h && !(n == 1 && g[0] == Vocab::BOS_ID))
        .map(|(_, &c)| c.into())
        .sum()
}

/// Totals c(h) = Σ_w c(h w) per history; the unigram "history" is the empty one and
/// excludes `<s>`, which is never predicted.
fn history_totals(table: &HashMap<Vec<WordId>, f64>, n: usize) -> HashMap<Vec<WordId>, f64> {
    let mut totals: HashMap<Vec<WordId>, f64> = HashMap::new();
    for (g, &c) in table {
        if n == 1 && g[0] == Vocab::BOS_ID {
            continue;
        }
        *totals.entry(g[..n - 1].to_vec()).or_insert(0.0) += c;
    }
    totals
}

/// Interpolates relative frequencies: f_mix(h w) = (1 - λ) f_bg(h w) + λ f_ad(h w),
/// where f_x(h w) = c_x(h w) / c_x(h) and is 0 when h was never seen in x.
///
/// Let W(h) be the total mixing weight of the sides that saw h and
/// C(h) = (1 - λ) c_bg(h) + λ c_ad(h). The pseudo-count is (f_mix / W) * (C / W): the
/// renormalized mixed frequency times the renormalized history mass. A history seen
/// on both sides has W = 1 and gets f_mix * C(h); a history seen on one side keeps
/// that side's counts unchanged.
pub fn mixed_counts(bg: &NGramCounts, adapt: &NGramCounts, weight: AdaptationWeight) -> Result<MixedCounts, LmError> {
    if bg.order() != adapt.order() {
        return Err(LmError::OrderMismatch(bg.order(), adapt.order()));
    }
    let order = bg.order();
    let vocab = bg.vocab().union(adapt.vocab());
    let bg = CountSet::from(&bg.with_vocab(&vocab)?);
    let ad = CountSet::from(&adapt.with_vocab(&vocab)?);
    let lambda = weight.value();

    let mut counts: Vec<HashMap<Vec<WordId>, f64>> = Vec::with_capacity(order);
    for n in 1..=order {
        let (tb, ta) = (&bg.counts[n - 1], &ad.counts[n - 1]);
        let (hb, ha) = (history_totals(tb, n), history_totals(ta, n));
        let keys: HashSet<&Vec<WordId>> = tb.keys().chain(ta.keys()).collect();
        let mut mixed = HashMap::with_capacity(keys.len());
        for g in keys {
            if n == 1 && g[0] == Vocab::BOS_ID {
                let c = (1.0 - lambda) * tb.get(g).copied().unwrap_or(0.0)
                    + lambda * ta.get(g).copied().unwrap_or(0.0);
                if c > 0.0 {
                    mixed.insert(g.clone(), c);
                }
                continue;
            }
            let h = &g[..n - 1];
            let cbh = hb.get(h).copied().unwrap_or(0.0);
            let cah = ha.get(h).copied().unwrap_or(0.0);
            let fb = if cbh > 0.0 { tb.get(g).copied().unwrap_or(0.0) / cbh } else { 0.0 };
            let fa = if cah > 0.0 { ta.get(g).copied().unwrap_or(0.0) / cah } else { 0.0 };
            let f = (1.0 - lambda) * fb + lambda * fa;
            if f <= 0.0 {
                continue;
            }
            let w = (1.0 - lambda) * f64::from(u8::from(cbh > 0.0)) + lambda * f64::from(u8::from(cah > 0.0));
            let scale = ((1.0 - lambda) * cbh + lambda * cah) / (w * w);
            mixed.insert(g.clone(), f * scale);
        }
        counts.push(mixed);
    }
    Ok(MixedCounts {
        inner: CountSet { order, vocab, counts },
    })
}

/// Adapted model: the interpolated pseudo-counts smoothed exactly like [`super::estimate_model`].
///
/// λ = 0 reproduces the background model and λ = 1 the adaptation-only model, both
/// over the union vocabulary.
pub fn adapt_model(bg: &NGramCounts, adapt: &NGramCounts, weight: AdaptationWeight) -> Result<NGramModel, LmError> {
    mixed_counts(bg, adapt, weight)?.estimate()
}
