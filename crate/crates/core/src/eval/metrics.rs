use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::iw::IwItem;
use super::EvalError;
use crate::percent::round2;

/// Whether IW matches are counted within each utterance or over the whole benchmark.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatchScope {
    #[default]
    Utterance,
    Corpus,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrfReport {
    pub matched: usize,
    pub hypothesis_count: usize,
    pub reference_count: usize,
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
}

impl PrfReport {
    /// Precision and recall are taken as 1 when their denominator is empty.
    pub fn from_counts(matched: usize, hypothesis_count: usize, reference_count: usize) -> Self {
        let precision = if hypothesis_count == 0 { 1.0 } else { matched as f64 / hypothesis_count as f64 };
        let recall = if reference_count == 0 { 1.0 } else { matched as f64 / reference_count as f64 };
        let f_measure = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        Self {
            matched,
            hypothesis_count,
            reference_count,
            precision,
            recall,
            f_measure,
        }
    }

    /// `Precision 1.00 [ 2 / 2 ] / Recall 0.67 [ 2 / 3 ] / F-Measure 0.80`
    pub fn summary(&self) -> String {
        format!(
            "Precision {:.2} [ {} / {} ] / Recall {:.2} [ {} / {} ] / F-Measure {:.2}",
            round2(self.precision),
            self.matched,
            self.hypothesis_count,
            round2(self.recall),
            self.matched,
            self.reference_count,
            round2(self.f_measure)
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": round2(self.precision),
            "r": round2(self.recall),
            "f": round2(self.f_measure),
            "matched": self.matched,
            "ref": self.reference_count,
            "hyp": self.hypothesis_count,
        })
    }
}

fn multiset_intersection<'a>(a: impl Iterator<Item = &'a IwItem>, b: impl Iterator<Item = &'a IwItem>) -> usize {
    let mut counts: HashMap<&IwItem, usize> = HashMap::new();
    for x in a {
        *counts.entry(x).or_insert(0) += 1;
    }
    let mut matched = 0;
    for y in b {
        if let Some(c) = counts.get_mut(y) {
            if *c > 0 {
                *c -= 1;
                matched += 1;
            }
        }
    }
    matched
}

/// Precision, recall and F-measure of hypothesis IW items against reference items.
///
/// Utterances are paired by position; a match is a multiset intersection of items.
pub fn iw_prf(
    ref_items: &[Vec<IwItem>],
    hyp_items: &[Vec<IwItem>],
    scope: MatchScope,
) -> Result<PrfReport, EvalError> {
    if ref_items.len() != hyp_items.len() {
        return Err(EvalError::UtteranceCountMismatch {
            reference: ref_items.len(),
            hypothesis: hyp_items.len(),
        });
    }
    let matched = match scope {
        MatchScope::Utterance => ref_items
            .iter()
            .zip(hyp_items)
            .map(|(r, h)| multiset_intersection(r.iter(), h.iter()))
            .sum(),
        MatchScope::Corpus => multiset_intersection(ref_items.iter().flatten(), hyp_items.iter().flatten()),
    };
    let hyp = hyp_items.iter().map(Vec::len).sum();
    let reference = ref_items.iter().map(Vec::len).sum();
    Ok(PrfReport::from_counts(matched, hyp, reference))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::isolate;

    fn items(s: &[&str]) -> Vec<IwItem> {
        s.iter().map(|i| IwItem(i.split('_').map(String::from).collect())).collect()
    }

    #[test]
    fn sample_iw_and_isolated_scores() {
        let r = items(&["pulmonary_specialist", "ENTs", "paediatricians"]);
        let h = items(&["pulmonary_specialist", "paediatricians"]);
        let p = iw_prf(std::slice::from_ref(&r), std::slice::from_ref(&h), MatchScope::Utterance).unwrap();
        assert_eq!((p.matched, p.hypothesis_count, p.reference_count), (2, 2, 3));
        assert_eq!(p.summary(), "Precision 1.00 [ 2 / 2 ] / Recall 0.67 [ 2 / 3 ] / F-Measure 0.80");
        let iso = iw_prf(&[isolate(&r)], &[isolate(&h)], MatchScope::Utterance).unwrap();
        assert_eq!(iso.summary(), "Precision 1.00 [ 3 / 3 ] / Recall 0.75 [ 3 / 4 ] / F-Measure 0.86");
    }

    #[test]
    fn empty_hypothesis_is_vacuously_precise() {
        let p = iw_prf(&[items(&["a"])], &[vec![]], MatchScope::Utterance).unwrap();
        assert_eq!((p.precision, p.recall, p.f_measure), (1.0, 0.0, 0.0));
    }

    #[test]
    fn multiset_counts_duplicates_once_each() {
        let p = iw_prf(&[items(&["a", "a", "b"])], &[items(&["a", "c"])], MatchScope::Utterance).unwrap();
        assert_eq!(p.matched, 1);
    }

    #[test]
    fn scope_changes_cross_utterance_matches() {
        let r = vec![items(&["a"]), items(&["b"])];
        let h = vec![items(&["b"]), items(&["a"])];
        assert_eq!(iw_prf(&r, &h, MatchScope::Utterance).unwrap().matched, 0);
        assert_eq!(iw_prf(&r, &h, MatchScope::Corpus).unwrap().matched, 2);
    }

    #[test]
    fn mismatched_utterances() {
        assert!(matches!(
            iw_prf(&[vec![]], &[], MatchScope::Utterance),
            Err(EvalError::UtteranceCountMismatch { reference: 1, hypothesis: 0 })
        ));
    }
}
