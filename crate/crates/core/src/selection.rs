//! Adaptation-text selection: keep the corpus documents that contain at least one
//! seed word missing from the base lexicon, optionally cut down to context windows.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{Document, Lexicon};
use crate::seeds::SeedSet;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectionConfig {
    /// Tokens kept on each side of a seed occurrence; `None` keeps whole documents.
    pub context_window: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectionReport {
    pub documents_scanned: u64,
    pub documents_selected: u64,
    /// Occurrences of each triggering seed in the scanned corpus.
    pub seed_hits: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
}

impl SelectionReport {
    pub fn merge(&mut self, other: SelectionReport) {
        self.documents_scanned += other.documents_scanned;
        self.documents_selected += other.documents_selected;
        for (w, c) in other.seed_hits {
            *self.seed_hits.entry(w).or_insert(0) += c;
        }
        for w in other.warnings {
            if !self.warnings.contains(&w) {
                self.warnings.push(w);
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Seeds that are able to trigger selection: those absent from the base lexicon.
#[derive(Debug, Clone, Default)]
pub struct TriggerSet {
    words: HashSet<String>,
}

impl TriggerSet {
    pub fn new(seeds: &SeedSet, base_lexicon: &Lexicon) -> Self {
        Self {
            words: seeds
                .words()
                .filter(|w| !base_lexicon.contains(w))
                .map(str::to_string)
                .collect(),
        }
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    fn hits<'d>(&self, doc: &'d Document) -> Vec<(usize, &'d str)> {
        doc.tokens
            .iter()
            .enumerate()
            .filter(|(_, t)| self.words.contains(t.as_str()))
            .map(|(i, t)| (i, t.as_str()))
            .collect()
    }

    /// Records `doc` in `report` and returns whether it is selected.
    fn scan(&self, doc: &Document, report: &mut SelectionReport) -> bool {
        report.documents_scanned += 1;
        let mut selected = false;
        for (_, w) in self.hits(doc) {
            selected = true;
            *report.seed_hits.entry(w.to_string()).or_insert(0) += 1;
        }
        if selected {
            report.documents_selected += 1;
        }
        selected
    }
}

const EMPTY_SEEDS_WARNING: &str = "no seed word is outside the base lexicon; selection is empty";

/// Streaming selection over a document iterator. Corpus order is preserved.
pub struct Selection<I> {
    inner: I,
    triggers: TriggerSet,
    report: SelectionReport,
}

impl<I> Selection<I> {
    pub fn report(&self) -> &SelectionReport {
        &self.report
    }

    pub fn into_report(self) -> SelectionReport {
        self.report
    }

    pub fn triggers(&self) -> &TriggerSet {
        &self.triggers
    }
}

impl<I: Iterator<Item = Document>> Iterator for Selection<I> {
    type Item = Document;

    fn next(&mut self) -> Option<Document> {
        let (triggers, report) = (&self.triggers, &mut self.report);
        self.inner.by_ref().find(|doc| triggers.scan(doc, report))
    }
}

/// Yields the documents containing at least one seed that is not in `base_lexicon`.
pub fn select_documents<I>(corpus: I, seeds: &SeedSet, base_lexicon: &Lexicon) -> Selection<I::IntoIter>
where
    I: IntoIterator<Item = Document>,
{
    let triggers = TriggerSet::new(seeds, base_lexicon);
    let mut report = SelectionReport::default();
    if triggers.is_empty() {
        report.warnings.push(EMPTY_SEEDS_WARNING.into());
    }
    Selection {
        inner: corpus.into_iter(),
        triggers,
        report,
    }
}

/// Shard-parallel variant of [`select_documents`] over an in-memory corpus.
///
/// Shards are concatenated in order, so the output equals the sequential scan.
pub fn select_documents_par<'a>(
    docs: &'a [Document],
    triggers: &TriggerSet,
) -> (Vec<&'a Document>, SelectionReport) {
    let shards: Vec<(Vec<&Document>, SelectionReport)> = docs
        .par_chunks(2048)
        .map(|chunk| {
            let mut report = SelectionReport::default();
            let kept = chunk.iter().filter(|d| triggers.scan(d, &mut report)).collect();
            (kept, report)
        })
        .collect();
    let mut out = Vec::new();
    let mut report = SelectionReport::default();
    if triggers.is_empty() {
        report.warnings.push(EMPTY_SEEDS_WARNING.into());
    }
    for (kept, r) in shards {
        out.extend(kept);
        report.merge(r);
    }
    (out, report)
}

/// Token spans around seed occurrences, `window` tokens on each side.
///
/// Overlapping or touching windows are merged, so spans are disjoint and in order.
pub fn extract_context_snippets<'d>(
    document: &'d Document,
    triggers: &TriggerSet,
    window: usize,
) -> Vec<&'d [String]> {
    let n = document.tokens.len();
    let mut spans: Vec<(usize, usize)> = Vec::new();
    for (hit, _) in triggers.hits(document) {
        let lo = hit.saturating_sub(window);
        let hi = hit.saturating_add(window).min(n - 1);
        match spans.last_mut() {
            Some((_, end)) if lo <= *end + 1 => *end = (*end).max(hi),
            _ => spans.push((lo, hi)),
        }
    }
    spans
        .into_iter()
        .map(|(lo, hi)| &document.tokens[lo..=hi])
        .collect()
}

/// Lines of adaptation text produced for a selected document.
///
/// Without a window this is the original line, byte for byte; with a window each
/// snippet becomes its own space-joined line.
pub fn adaptation_lines(document: &Document, triggers: &TriggerSet, config: &SelectionConfig) -> Vec<String> {
    match config.context_window {
        None => vec![document.raw.clone()],
        Some(w) => extract_context_snippets(document, triggers, w)
            .into_iter()
            .map(|span| span.join(" "))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds::Provenance;

    fn seeds(words: &[&str]) -> SeedSet {
        let mut s = SeedSet::new();
        for w in words {
            s.insert(*w, Provenance::Glossary);
        }
        s
    }

    fn doc(id: u64, toks: &[&str]) -> Document {
        Document::from_tokens(id, toks)
    }

    #[test]
    fn empty_seed_set_selects_nothing() {
        let lex = Lexicon::from_words(["la"]);
        let mut sel = select_documents(vec![doc(0, &["la", "carie"])], &SeedSet::new(), &lex);
        assert!(sel.next().is_none());
        assert_eq!(sel.report().documents_scanned, 1);
        assert_eq!(sel.report().warnings.len(), 1);
    }

    #[test]
    fn non_matching_document() {
        let lex = Lexicon::from_words(["la"]);
        let sel: Vec<_> =
            select_documents(vec![doc(0, &["la", "carie", "dentale"])], &seeds(&["bruxismo"]), &lex).collect();
        assert!(sel.is_empty());
    }

    #[test]
    fn in_lexicon_seeds_do_not_trigger() {
        let lex = Lexicon::from_words(["dente"]);
        let sel: Vec<_> = select_documents(vec![doc(0, &["il", "dente"])], &seeds(&["dente"]), &lex).collect();
        assert!(sel.is_empty());
    }

    #[test]
    fn three_document_corpus() {
        let lex = Lexicon::from_words(["il", "la", "dente", "di"]);
        let corpus = vec![
            doc(0, &["il", "dente"]),
            doc(1, &["la", "bruxismo", "di", "bruxismo"]),
            doc(2, &["la", "carie"]),
        ];
        let s = seeds(&["bruxismo", "dente"]);
        // brute-force oracle: a document is selected iff some token is a seed and not in the lexicon
        let expected: Vec<u64> = corpus
            .iter()
            .filter(|d| d.tokens.iter().any(|t| s.contains(t) && !lex.contains(t)))
            .map(|d| d.id)
            .collect();
        let mut sel = select_documents(corpus.clone(), &s, &lex);
        let got: Vec<u64> = sel.by_ref().map(|d| d.id).collect();
        assert_eq!(got, expected);
        assert_eq!(got, [1]);
        let rep = sel.into_report();
        assert_eq!((rep.documents_scanned, rep.documents_selected), (3, 1));
        assert_eq!(rep.seed_hits.get("bruxismo"), Some(&2));

        let triggers = TriggerSet::new(&s, &lex);
        let (par, par_rep) = select_documents_par(&corpus, &triggers);
        assert_eq!(par.iter().map(|d| d.id).collect::<Vec<_>>(), got);
        assert_eq!(par_rep, rep);
    }

    #[test]
    fn snippets() {
        let lex = Lexicon::default();
        let t = TriggerSet::new(&seeds(&["S"]), &lex);
        let d = doc(0, &["a", "b", "S", "c", "d", "e", "S", "f"]);
        let spans = extract_context_snippets(&d, &t, 1);
        assert_eq!(spans, vec![&["b", "S", "c"][..], &["e", "S", "f"][..]]);
        let exact = extract_context_snippets(&d, &t, 0);
        assert_eq!(exact, vec![&["S"][..], &["S"][..]]);
        let whole = extract_context_snippets(&d, &t, 100);
        assert_eq!(whole, vec![&d.tokens[..]]);
        // windows that touch are merged
        let touching = extract_context_snippets(&d, &t, 2);
        assert_eq!(touching, vec![&d.tokens[..]]);
        assert!(extract_context_snippets(&doc(1, &["x"]), &t, 3).is_empty());
    }

    #[test]
    fn adaptation_lines_keep_raw_text() {
        let lex = Lexicon::default();
        let t = TriggerSet::new(&seeds(&["bruxismo"]), &lex);
        let d = Document::new(0, "Il Bruxismo, oggi.", &Default::default());
        assert_eq!(adaptation_lines(&d, &t, &SelectionConfig::default()), ["Il Bruxismo, oggi."]);
        let cfg = SelectionConfig { context_window: Some(0) };
        assert_eq!(adaptation_lines(&d, &t, &cfg), ["bruxismo"]);
    }
}
