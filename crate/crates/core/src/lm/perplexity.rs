use serde::{Deserialize, Serialize};

use super::model::NGramModel;
use super::vocab::Vocab;
use super::LmError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerplexityReport {
    pub perplexity: f64,
    pub log10_prob_total: f64,
    /// Scored events: every token plus one `</s>` per sentence.
    pub events: u64,
    /// Tokens outside the model vocabulary, scored as `<unk>`.
    pub oov_mapped_count: u64,
}

/// Perplexity `10^(-log10 P / events)` of sentences under the model.
pub fn perplexity<S: AsRef<str>>(model: &NGramModel, sentences: &[Vec<S>]) -> Result<PerplexityReport, LmError> {
    let vocab = model.vocab();
    let mut total = 0.0;
    let mut events = 0u64;
    let mut oov = 0u64;
    let mut history = Vec::new();
    for sentence in sentences {
        history.clear();
        history.push(Vocab::BOS_ID);
        for tok in sentence {
            let id = match vocab.id(tok.as_ref()) {
                Some(id) if id != Vocab::BOS_ID => id,
                _ => {
                    oov += 1;
                    Vocab::UNK_ID
                }
            };
            total += model.log_prob(&history, id);
            history.push(id);
            events += 1;
        }
        total += model.log_prob(&history, Vocab::EOS_ID);
        events += 1;
    }
    if events == 0 {
        return Err(LmError::NoEvents);
    }
    Ok(PerplexityReport {
        perplexity: 10f64.powf(-total / events as f64),
        log10_prob_total: total,
        events,
        oov_mapped_count: oov,
    })
}
