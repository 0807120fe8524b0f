use crate::corpus::{FrequencyTable, Lexicon};

/// Base lexicon followed by the adaptation words with count >= `f_min` that it lacks,
/// in (count desc, word asc) order. Base ranks are untouched.
///
/// `f_min` below 1 is treated as 1.
pub fn build_adapted_lexicon(base: &Lexicon, adaptation_counts: &FrequencyTable, f_min: u64) -> Lexicon {
    let f_min = f_min.max(1);
    let mut out = base.clone();
    for (w, c) in adaptation_counts.ranked() {
        if c < f_min {
            break;
        }
        out.push(w, Some(c));
    }
    out
}
