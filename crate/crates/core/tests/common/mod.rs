//! Oracles and fixture generators shared by the integration tests and the
//! acceptance runner. Everything here is written independently of the library code
//! it checks.
#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seedlm::corpus::{Document, Lexicon};
use seedlm::lm::{NGramModel, Vocab, WordId};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn docs_from_lines(lines: &[&str]) -> Vec<Document> {
    lines
        .iter()
        .enumerate()
        .map(|(i, l)| Document::from_tokens(i as u64, &l.split_whitespace().collect::<Vec<_>>()))
        .collect()
}

/// Up to `max_sentences` sentences of 1..=8 words drawn from `w0 .. w{vocab-1}`, with
/// a skewed distribution so that some n-grams repeat.
pub fn random_corpus(rng: &mut ChaCha8Rng, max_sentences: usize, vocab: usize) -> Vec<Document> {
    let n = rng.gen_range(1..=max_sentences);
    (0..n)
        .map(|i| {
            let len = rng.gen_range(1..=8);
            let toks: Vec<String> = (0..len)
                .map(|_| {
                    let a = rng.gen_range(0..vocab);
                    let b = rng.gen_range(0..vocab);
                    format!("w{}", a.min(b))
                })
                .collect();
            Document::from_tokens(i as u64, &toks)
        })
        .collect()
}

/// A random subset of `w0 .. w{vocab-1}`, so that some corpus words become `<unk>`.
pub fn random_lexicon(rng: &mut ChaCha8Rng, vocab: usize) -> Lexicon {
    let mut words: Vec<String> = (0..vocab).map(|i| format!("w{i}")).collect();
    words.shuffle(rng);
    let keep = rng.gen_range(vocab / 2..=vocab);
    words.truncate(keep.max(1));
    Lexicon::from_words(words)
}

/// Standard backoff lookup written from the ARPA semantics alone.
pub fn oracle_log_prob(model: &NGramModel, history: &[WordId], w: WordId) -> f64 {
    let keep = history.len().min(model.order() - 1);
    let h = &history[history.len() - keep..];
    let mut g = h.to_vec();
    g.push(w);
    if let Some(e) = model.entry(&g) {
        return e.log_prob;
    }
    if h.is_empty() {
        return -99.0;
    }
    let bo = model.entry(h).and_then(|e| e.backoff).unwrap_or(0.0);
    bo + oracle_log_prob(model, &h[1..], w)
}

/// Largest |Σ_w P(w | h) - 1| over the empty history and every history with stored
/// extensions, summing over the full vocabulary except `<s>`.
pub fn max_normalization_error(model: &NGramModel) -> f64 {
    let vocab = model.vocab();
    let mut histories: Vec<Vec<WordId>> = vec![Vec::new()];
    for n in 2..=model.order() {
        for g in model.entries(n).keys() {
            histories.push(g[..n - 1].to_vec());
        }
    }
    histories.sort();
    histories.dedup();
    let words: Vec<WordId> = (0..vocab.len() as WordId).filter(|&w| w != Vocab::BOS_ID).collect();
    histories
        .iter()
        .map(|h| {
            let mass: f64 = words.iter().map(|&w| 10f64.powf(oracle_log_prob(model, h, w))).sum();
            (mass - 1.0).abs()
        })
        .fold(0.0, f64::max)
}

/// Sliding-window recount of every n-gram up to `order`, with `<s>`/`</s>` padding and
/// out-of-lexicon words mapped to `<unk>`. Empty documents contribute nothing.
pub fn brute_counts(docs: &[Document], lexicon: &Lexicon, order: usize) -> HashMap<Vec<String>, u64> {
    let mut out = HashMap::new();
    for d in docs {
        if d.tokens.is_empty() {
            continue;
        }
        let mut s = vec!["<s>".to_string()];
        s.extend(
            d.tokens
                .iter()
                .map(|t| if lexicon.contains(t) { t.clone() } else { "<unk>".into() }),
        );
        s.push("</s>".into());
        for n in 1..=order {
            for w in s.windows(n) {
                *out.entry(w.to_vec()).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Levenshtein distance by memoized recursion over suffixes.
pub fn edit_distance<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    fn go<T: PartialEq>(a: &[T], b: &[T], i: usize, j: usize, memo: &mut HashMap<(usize, usize), usize>) -> usize {
        if i == a.len() {
            return b.len() - j;
        }
        if j == b.len() {
            return a.len() - i;
        }
        if let Some(&v) = memo.get(&(i, j)) {
            return v;
        }
        let v = if a[i] == b[j] {
            go(a, b, i + 1, j + 1, memo)
        } else {
            1 + go(a, b, i + 1, j + 1, memo)
                .min(go(a, b, i + 1, j, memo))
                .min(go(a, b, i, j + 1, memo))
        };
        memo.insert((i, j), v);
        v
    }
    go(a, b, 0, 0, &mut HashMap::new())
}

/// Random token sequence of length 0..=max_len over a small alphabet.
pub fn random_sequence(rng: &mut ChaCha8Rng, max_len: usize, alphabet: usize) -> Vec<String> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| format!("t{}", rng.gen_range(0..alphabet))).collect()
}

/// Synthetic two-domain corpus: generic sentences plus "dental" sentences that use a
/// planted technical vocabulary rarely or never seen in the generic part.
pub struct TwoDomain {
    pub background: Vec<String>,
    pub held_out_domain: Vec<String>,
    pub glossary: Vec<String>,
}

pub const GENERIC: &[&str] = &[
    "the", "a", "of", "and", "to", "in", "is", "was", "for", "on", "with", "as", "by", "at", "city", "team", "game",
    "market", "price", "year", "people", "government", "school", "music", "film", "river", "road", "company", "news",
    "report", "police", "weather", "season", "player", "coach", "match", "bank", "money", "train", "station",
];

pub const DENTAL: &[&str] = &[
    "tooth", "caries", "enamel", "dentist", "filling", "tartar", "gum", "molar", "plaque", "bruxism", "implant",
    "orthodontic", "crown", "root", "canal", "periodontitis", "gingivitis", "extraction", "anesthesia", "mouthguard",
];

impl TwoDomain {
    pub fn generate(seed: u64, generic_lines: usize, domain_lines: usize, held_out_lines: usize) -> Self {
        let mut r = rng(seed);
        let generic_sentence = |r: &mut ChaCha8Rng| -> String {
            let len = r.gen_range(5..=12);
            (0..len).map(|_| *GENERIC.choose(r).unwrap()).collect::<Vec<_>>().join(" ")
        };
        let domain_sentence = |r: &mut ChaCha8Rng| -> String {
            let len = r.gen_range(5..=12);
            (0..len)
                .map(|_| {
                    if r.gen_bool(0.5) {
                        *DENTAL.choose(r).unwrap()
                    } else {
                        *GENERIC[..12].choose(r).unwrap()
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut background: Vec<String> = (0..generic_lines).map(|_| generic_sentence(&mut r)).collect();
        for _ in 0..domain_lines {
            let at = r.gen_range(0..=background.len());
            let s = domain_sentence(&mut r);
            background.insert(at, s);
        }
        let held_out_domain = (0..held_out_lines).map(|_| domain_sentence(&mut r)).collect();
        let glossary = DENTAL.iter().map(|w| w.to_string()).collect();
        Self {
            background,
            held_out_domain,
            glossary,
        }
    }
}
