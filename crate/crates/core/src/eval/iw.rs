use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use super::transcript::{AnnotatedTranscript, Span, Utterance};

/// The distinct IW patterns of a benchmark.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IwSet {
    patterns: BTreeSet<Vec<String>>,
}

impl IwSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Collects every annotated span of `transcript`.
    pub fn from_transcript(transcript: &AnnotatedTranscript) -> Self {
        let mut set = Self::new();
        for u in &transcript.utterances {
            for s in &u.spans {
                set.insert(u.span_tokens(s).to_vec());
            }
        }
        set
    }

    /// Adds a pattern; empty patterns are ignored.
    pub fn insert(&mut self, pattern: Vec<String>) -> bool {
        !pattern.is_empty() && self.patterns.insert(pattern)
    }

    pub fn contains(&self, pattern: &[String]) -> bool {
        self.patterns.contains(pattern)
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<String>> {
        self.patterns.iter()
    }

    /// Whether `tokens` is a concatenation of patterns of this set.
    pub fn segments(&self, tokens: &[String]) -> bool {
        let n = tokens.len();
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for i in 0..n {
            if !reach[i] {
                continue;
            }
            for j in i + 1..=n {
                if !reach[j] && self.patterns.contains(&tokens[i..j]) {
                    reach[j] = true;
                }
            }
        }
        reach[n]
    }
}

impl<S: AsRef<str>> FromIterator<Vec<S>> for IwSet {
    fn from_iter<I: IntoIterator<Item = Vec<S>>>(iter: I) -> Self {
        let mut set = Self::new();
        for p in iter {
            set.insert(p.iter().map(|w| w.as_ref().to_string()).collect());
        }
        set
    }
}

/// Reduces an IW set by dropping every pattern that can be written as a sequence of
/// other patterns still in the set.
///
/// Candidates are tried longest first (ties in ascending order); the test always uses
/// the current, shrinking set, and passes repeat until nothing changes.
pub fn minimal_iw_set(iws: &IwSet) -> IwSet {
    let mut set = iws.clone();
    loop {
        let mut candidates: Vec<Vec<String>> = set.patterns.iter().filter(|p| p.len() > 1).cloned().collect();
        candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut changed = false;
        for cand in candidates {
            set.patterns.remove(&cand);
            if set.segments(&cand) {
                changed = true;
            } else {
                set.patterns.insert(cand);
            }
        }
        if !changed {
            return set;
        }
    }
}

/// Re-annotates every utterance with the patterns of `minimal`.
///
/// Original spans are discarded. Pattern lengths are processed longest first; for each
/// length the utterance is scanned left to right and every occurrence over still
/// unmarked tokens becomes a span.
pub fn regenerate(transcript: &AnnotatedTranscript, minimal: &IwSet) -> AnnotatedTranscript {
    let mut by_len: BTreeMap<usize, HashSet<&[String]>> = BTreeMap::new();
    for p in minimal.iter() {
        by_len.entry(p.len()).or_default().insert(p.as_slice());
    }
    let utterances = transcript
        .utterances
        .iter()
        .map(|u| {
            let n = u.tokens.len();
            let mut marked = vec![false; n];
            let mut spans = Vec::new();
            for (&len, patterns) in by_len.iter().rev() {
                if len > n {
                    continue;
                }
                let mut i = 0;
                while i + len <= n {
                    if !marked[i..i + len].iter().any(|&m| m) && patterns.contains(&u.tokens[i..i + len]) {
                        marked[i..i + len].iter_mut().for_each(|m| *m = true);
                        spans.push(Span { start: i, len });
                        i += len;
                    } else {
                        i += 1;
                    }
                }
            }
            spans.sort_unstable();
            Utterance {
                tokens: u.tokens.clone(),
                spans,
            }
        })
        .collect();
    AnnotatedTranscript {
        utterances,
        warnings: Vec::new(),
    }
}

/// One IW occurrence, scored as a single item. Displays as its words joined by `_`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IwItem(pub Vec<String>);

impl fmt::Display for IwItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join("_"))
    }
}

/// Keeps only the bracketed words: one item per span, per utterance, in order.
pub fn strip_non_iw(transcript: &AnnotatedTranscript) -> Vec<Vec<IwItem>> {
    transcript
        .utterances
        .iter()
        .map(|u| u.spans.iter().map(|s| IwItem(u.span_tokens(s).to_vec())).collect())
        .collect()
}

/// Splits every item into single-word items, preserving order.
pub fn isolate(items: &[IwItem]) -> Vec<IwItem> {
    items
        .iter()
        .flat_map(|it| it.0.iter().map(|w| IwItem(vec![w.clone()])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::TokenizerConfig;
    use crate::eval::parse_transcript;

    fn set(patterns: &[&str]) -> IwSet {
        patterns
            .iter()
            .map(|p| p.split(' ').collect::<Vec<_>>())
            .collect()
    }

    fn cfg() -> TokenizerConfig {
        TokenizerConfig {
            lowercase: false,
            ..Default::default()
        }
    }

    #[test]
    fn composite_of_singles_removed() {
        assert_eq!(minimal_iw_set(&set(&["A", "B", "A B"])), set(&["A", "B"]));
    }

    #[test]
    fn composite_of_single_and_pair_removed() {
        assert_eq!(minimal_iw_set(&set(&["C", "D E", "C D E"])), set(&["C", "D E"]));
    }

    #[test]
    fn interleaved_composite_kept() {
        let s = set(&["C", "D E", "D C E"]);
        assert_eq!(minimal_iw_set(&s), s);
    }

    #[test]
    fn removal_uses_shrinking_set() {
        // longest first: (A B C D) goes while (A B) is still present, then (A B) goes too

        let out = minimal_iw_set(&set(&["A", "B", "A B", "C D", "A B C D"]));
        assert_eq!(out, set(&["A", "B", "C D"]));
    }

    #[test]
    fn regenerate_examples() {
        let t = parse_transcript("(A B)\nC D E\nx y", &cfg()).unwrap();
        let r = regenerate(&t, &set(&["A", "B", "C", "D E"]));
        assert_eq!(r.render(), "(A) (B)\n(C) (D E)\nx y\n");
        let none = regenerate(&t, &IwSet::new());
        assert!(none.utterances.iter().all(|u| u.spans.is_empty()));
    }

    #[test]
    fn longest_patterns_claim_tokens_first() {
        let t = parse_transcript("A B C", &cfg()).unwrap();
        let r = regenerate(&t, &set(&["B C", "A B", "C"]));
        // length 2 scanned left to right: "A B" wins, then "C" alone
        assert_eq!(r.render(), "(A B) (C)\n");
    }

    #[test]
    fn strip_and_isolate() {
        let t = parse_transcript("x (pulmonary specialist) (ENTs) y (paediatricians)", &cfg()).unwrap();
        let items = strip_non_iw(&t);
        let shown: Vec<String> = items[0].iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["pulmonary_specialist", "ENTs", "paediatricians"]);
        let iso: Vec<String> = isolate(&[items[0][0].clone(), items[0][2].clone()])
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(iso, ["pulmonary", "specialist", "paediatricians"]);
        assert!(isolate(&[]).is_empty());
        assert!(strip_non_iw(&parse_transcript("a b", &cfg()).unwrap())[0].is_empty());
        let single = IwItem(vec!["A".into()]);
        assert_eq!(isolate(std::slice::from_ref(&single)), [single]);
    }
}
