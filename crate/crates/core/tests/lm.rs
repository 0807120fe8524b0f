// the ARPA fixture stores 5-digit literals such as -0.30103; tests compare against them verbatim
#![allow(clippy::approx_constant)]

mod common;

use common::*;
use proptest::prelude::*;
use seedlm::corpus::{oov_rate, FrequencyTable, Lexicon};
use seedlm::lm::*;

fn arpa_text(m: &NGramModel) -> String {
    let mut buf = Vec::new();
    write_arpa(m, &mut buf).unwrap();
    String::from_utf8(buf).unwrap()
}

fn ids(m: &NGramModel, words: &[&str]) -> Vec<WordId> {
    words.iter().map(|w| m.vocab().id(w).unwrap()).collect()
}

#[test]
fn counts_match_sliding_window_recount() {
    let mut r = rng(7);
    let docs = random_corpus(&mut r, 20, 15);
    let lex = random_lexicon(&mut r, 15);
    let counts = count_ngrams(&docs, &lex, 3).unwrap();
    let oracle = brute_counts(&docs, &lex, 3);
    for (g, &c) in &oracle {
        assert_eq!(counts.get(g), c, "{g:?}");
    }
    let stored: usize = (1..=3).map(|n| counts.table(n).len()).sum();
    assert_eq!(stored, oracle.len());
}

#[test]
fn history_counts_bound_their_extensions() {
    let mut r = rng(8);
    let docs = random_corpus(&mut r, 30, 10);
    let lex = random_lexicon(&mut r, 10);
    let counts = count_ngrams(&docs, &lex, 3).unwrap();
    for n in 2..=3 {
        let mut ext: std::collections::HashMap<Vec<WordId>, u64> = Default::default();
        for (g, &c) in counts.table(n) {
            *ext.entry(g[..n - 1].to_vec()).or_insert(0) += c;
        }
        for (h, total) in ext {
            assert_eq!(counts.table(n - 1)[&h], total, "single padded pass gives equality");
        }
    }
}

#[test]
fn order_zero_rejected() {
    assert!(matches!(
        count_ngrams(docs_from_lines(&["a"]), &Lexicon::from_words(["a"]), 0),
        Err(LmError::InvalidOrder(0))
    ));
}

#[test]
fn unk_has_mass_without_occurrences() {
    let lex = Lexicon::from_words(["a", "b"]);
    let m = estimate_model(&count_ngrams(docs_from_lines(&["a b", "b a"]), &lex, 3).unwrap()).unwrap();
    let p = 10f64.powf(m.log_prob(&[], Vocab::UNK_ID));
    assert!(p > 0.0 && p < 1e-6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn estimated_models_are_normalized(seed in any::<u64>()) {
        let mut r = rng(seed);
        let docs = random_corpus(&mut r, 50, 50);
        let lex = random_lexicon(&mut r, 50);
        let m = estimate_model(&count_ngrams(&docs, &lex, 3).unwrap()).unwrap();
        prop_assert!(max_normalization_error(&m) < 1e-6);
        for n in 1..=3 {
            for e in m.entries(n).values() {
                prop_assert!(e.log_prob <= 1e-12);
                prop_assert!(e.backoff.is_none_or(f64::is_finite));
            }
        }
    }

    #[test]
    fn adapted_models_are_normalized(seed in any::<u64>(), lambda in 0.0f64..=1.0) {
        let mut r = rng(seed);
        let bg = random_corpus(&mut r, 40, 30);
        let ad = random_corpus(&mut r, 10, 30);
        let lex = random_lexicon(&mut r, 30);
        let m = adapt_model(
            &count_ngrams(&bg, &lex, 3).unwrap(),
            &count_ngrams(&ad, &lex, 3).unwrap(),
            AdaptationWeight::new(lambda).unwrap(),
        )
        .unwrap();
        prop_assert!(max_normalization_error(&m) < 1e-6);
    }

    #[test]
    fn pruning_keeps_unigrams_and_normalization(seed in any::<u64>(), t2 in 0u32..4, t3 in 0u32..4) {
        let mut r = rng(seed);
        let docs = random_corpus(&mut r, 50, 20);
        let lex = random_lexicon(&mut r, 20);
        let m = estimate_model(&count_ngrams(&docs, &lex, 3).unwrap()).unwrap();
        let cfg = PruneConfig { min_counts: vec![0.0, t2 as f64, t3 as f64], prob_threshold: None };
        let p = prune_model(&m, &cfg).unwrap();
        prop_assert!(max_normalization_error(&p) < 1e-6);
        prop_assert_eq!(p.entries(1).len(), m.entries(1).len());
        for (g, e) in m.entries(1) {
            prop_assert!((p.entries(1)[g].log_prob - e.log_prob).abs() < 1e-12);
        }
    }

    #[test]
    fn arpa_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let docs = random_corpus(&mut r, 30, 25);
        let lex = random_lexicon(&mut r, 25);
        let m = estimate_model(&count_ngrams(&docs, &lex, 3).unwrap()).unwrap();
        let back = read_arpa(arpa_text(&m).as_bytes()).unwrap();
        prop_assert_eq!(back.order(), m.order());
        for n in 1..=3 {
            prop_assert_eq!(back.entries(n).len(), m.entries(n).len());
            for (g, e) in m.entries(n) {
                let words: Vec<&str> = g.iter().map(|&i| m.vocab().word(i)).collect();
                let b = back.entry(&ids(&back, &words)).unwrap();
                prop_assert!((b.log_prob - e.log_prob).abs() < 1e-6);
                prop_assert!((b.backoff.unwrap_or(0.0) - e.backoff.unwrap_or(0.0)).abs() < 1e-6);
            }
        }
    }
}

#[test]
fn boundary_lambdas_match_single_sources() {
    for seed in 0..20u64 {
        let mut r = rng(seed);
        let bg_docs = random_corpus(&mut r, 30, 20);
        let ad_docs = random_corpus(&mut r, 10, 20);
        // distinct lexica so the union vocabulary differs from both
        let bg = count_ngrams(&bg_docs, &random_lexicon(&mut r, 20), 3).unwrap();
        let ad = count_ngrams(&ad_docs, &random_lexicon(&mut r, 20), 3).unwrap();
        let union = bg.vocab().union(ad.vocab());
        for (lambda, side) in [(0.0, &bg), (1.0, &ad)] {
            let adapted = adapt_model(&bg, &ad, AdaptationWeight::new(lambda).unwrap()).unwrap();
            let pure = estimate_model(&side.with_vocab(&union).unwrap()).unwrap();
            assert_eq!(adapted.num_entries(), pure.num_entries(), "seed {seed} lambda {lambda}");
            for n in 1..=3 {
                for (g, e) in pure.entries(n) {
                    let a = adapted.entry(g).unwrap();
                    assert!((a.log_prob - e.log_prob).abs() < 1e-9);
                    assert!((a.backoff.unwrap_or(0.0) - e.backoff.unwrap_or(0.0)).abs() < 1e-9);
                }
            }
        }
    }
}

#[test]
fn mixed_frequencies_are_hand_averages() {
    let lex = Lexicon::from_words(["a", "b", "c"]);
    let bg = count_ngrams(docs_from_lines(&["a b", "a b c", "a c"]), &lex, 2).unwrap();
    let ad = count_ngrams(docs_from_lines(&["a c", "b c"]), &lex, 2).unwrap();
    let mixed = mixed_counts(&bg, &ad, AdaptationWeight::new(0.5).unwrap()).unwrap();
    // bigram continuations of "a": background b:2 c:1, adaptation c:1
    let cases: &[(&[&str], f64)] = &[
        (&["a", "b"], 0.5 * (2.0 / 3.0) + 0.5 * 0.0),
        (&["a", "c"], 0.5 * (1.0 / 3.0) + 0.5 * 1.0),
        // "b": background c:1 </s>:1, adaptation c:1
        (&["b", "c"], 0.5 * 0.5 + 0.5 * 1.0),
        (&["b", "</s>"], 0.5 * 0.5),
        // "<s>": background a:3, adaptation a:1 b:1
        (&["<s>", "a"], 0.5 * 1.0 + 0.5 * 0.5),
        (&["<s>", "b"], 0.5 * 0.5),
        // "c": always followed by </s>
        (&["c", "</s>"], 1.0),
    ];
    for (g, expected) in cases {
        assert!((mixed.conditional_frequency(g) - expected).abs() < 1e-12, "{g:?}");
    }
    // unigrams over predictable tokens: background a3 b2 c2 </s>3, adaptation a1 b1 c2 </s>2
    let fb = 3.0 / 10.0;
    let fa = 1.0 / 6.0;
    assert!((mixed.conditional_frequency(&["a"]) - (0.5 * fb + 0.5 * fa)).abs() < 1e-12);
}

#[test]
fn zero_thresholds_leave_model_unchanged() {
    let mut r = rng(3);
    let m = estimate_model(&count_ngrams(random_corpus(&mut r, 30, 15), &random_lexicon(&mut r, 15), 3).unwrap())
        .unwrap();
    let p = prune_model(&m, &PruneConfig::default()).unwrap();
    assert_eq!(arpa_text(&p), arpa_text(&m));
}

#[test]
fn huge_threshold_leaves_only_unigrams() {
    let mut r = rng(4);
    let m = estimate_model(&count_ngrams(random_corpus(&mut r, 30, 15), &random_lexicon(&mut r, 15), 3).unwrap())
        .unwrap();
    let cfg = PruneConfig {
        min_counts: vec![0.0, 1e9, 1e9],
        prob_threshold: None,
    };
    let p = prune_model(&m, &cfg).unwrap();
    assert!(p.entries(2).is_empty() && p.entries(3).is_empty());
    assert!(max_normalization_error(&p) < 1e-6);
}

#[test]
fn manageable_preset_drops_singletons() {
    let lex = Lexicon::from_words(["a", "b", "c"]);
    let docs = docs_from_lines(&["a b c", "a b c", "a c b"]);
    let m = estimate_model(&count_ngrams(&docs, &lex, 3).unwrap()).unwrap();
    let p = prune_model(&m, &PruneConfig::manageable()).unwrap();
    // count threshold 1 keeps everything with count >= 1: nothing changes
    assert_eq!(p.num_entries(), m.num_entries());
    let strict = PruneConfig {
        min_counts: vec![0.0, 2.0, 2.0],
        prob_threshold: None,
    };
    let p = prune_model(&m, &strict).unwrap();
    assert!(p.entry(&ids(&p, &["a", "b", "c"])).is_some());
    assert!(p.entry(&ids(&p, &["a", "c", "b"])).is_none());
    assert!(max_normalization_error(&p) < 1e-6);
}

#[test]
fn declared_count_mismatch_is_an_error() {
    let text = "\\data\\\nngram 1=3\nngram 2=5\n\n\\1-grams:\n-0.5\t</s>\n-99\t<s>\n-0.5\t<unk>\n\n\\2-grams:\n\
                -0.1\t<s> </s>\n-0.1\t<s> <unk>\n-0.1\t<unk> </s>\n-0.1\t<unk> <unk>\n\n\\end\\\n";
    match read_arpa(text.as_bytes()) {
        Err(LmError::Arpa { line, message }) => assert!(line > 0 && message.contains('5'), "{line}: {message}"),
        other => panic!("expected an ARPA error, got {other:?}"),
    }
}

#[test]
fn malformed_arpa_lines_are_located() {
    let text = "\\data\\\nngram 1=1\n\n\\1-grams:\nabc\t</s>\n\n\\end\\\n";
    assert!(matches!(read_arpa(text.as_bytes()), Err(LmError::Arpa { line: 5, .. })));
    let text = "ngram 1=1\n";
    assert!(matches!(read_arpa(text.as_bytes()), Err(LmError::Arpa { line: 1, .. })));
}

#[test]
fn minimal_fixture_queries_follow_backoff_by_hand() {
    let m = import_arpa(fixture("minimal.arpa")).unwrap();
    let lp = |h: &[&str], w: &str| m.log_prob_words(h, w);
    assert!((lp(&["<s>"], "a") - -0.30103).abs() < 1e-9);
    assert!((lp(&["a"], "</s>") - -0.47712).abs() < 1e-9);
    // unseen bigrams: backoff(h) + log P(w)
    assert!((lp(&["a"], "<unk>") - (-0.17609 + -0.60206)).abs() < 1e-9);
    assert!((lp(&["<s>"], "</s>") - (-0.30103 + -0.60206)).abs() < 1e-9);
    // no backoff stored for <unk>: weight 1
    assert!((lp(&["<unk>"], "a") - -0.30103).abs() < 1e-9);
    // words outside the vocabulary are scored as <unk>
    assert_eq!(lp(&["a"], "zzz"), lp(&["a"], "<unk>"));
}

#[test]
fn perplexity_hand_trace_on_fixture() {
    let m = import_arpa(fixture("minimal.arpa")).unwrap();
    let r = perplexity(&m, &[vec!["a"], vec!["b"]]).unwrap();
    // "a": P(a|<s>) P(</s>|a); "b" -> <unk>: bo(<s>) P(<unk>), then P(</s>) via bo(<unk>) = 0
    let total = (-0.30103 + -0.47712) + (-0.30103 + -0.60206 + -0.60206);
    assert_eq!(r.events, 4);
    assert_eq!(r.oov_mapped_count, 1);
    assert!((r.log10_prob_total - total).abs() < 1e-9);
    assert!((r.perplexity - 10f64.powf(-total / 4.0)).abs() < 1e-9);
}

#[test]
fn uniform_unigram_perplexity_is_vocabulary_size() {
    let p = (0.25f64).log10();
    let text = format!(
        "\\data\\\nngram 1=5\n\n\\1-grams:\n{p}\t</s>\n-99\t<s>\n{p}\t<unk>\n{p}\ta\n{p}\tb\n\n\\end\\\n"
    );
    let m = read_arpa(text.as_bytes()).unwrap();
    let r = perplexity(&m, &[vec!["a", "b", "a"]]).unwrap();
    assert!((r.perplexity - 4.0).abs() < 1e-9);
    assert!(matches!(perplexity::<&str>(&m, &[]), Err(LmError::NoEvents)));
}

#[test]
fn training_sentence_beats_its_permutation() {
    let lex = Lexicon::from_words(["the", "dentist", "removed", "tartar"]);
    let m = estimate_model(&count_ngrams(docs_from_lines(&["the dentist removed the tartar"]), &lex, 3).unwrap())
        .unwrap();
    let seen = perplexity(&m, &[vec!["the", "dentist", "removed", "the", "tartar"]]).unwrap();
    let shuffled = perplexity(&m, &[vec!["tartar", "the", "removed", "dentist", "the"]]).unwrap();
    assert!(seen.perplexity < shuffled.perplexity);
}

#[test]
fn adapted_lexicon_nests_and_never_raises_oov() {
    let mut r = rng(11);
    let docs = random_corpus(&mut r, 40, 40);
    let table = FrequencyTable::from_documents(&docs);
    let base = Lexicon::top_n(&table, 10).unwrap();
    let extra = FrequencyTable::from_documents(random_corpus(&mut r, 10, 60));
    for f_min in [1, 2, 5, 1000] {
        let adapted = build_adapted_lexicon(&base, &extra, f_min);
        assert!(adapted.len() >= base.len());
        assert_eq!(&adapted.words()[..base.len()], base.words());
        let tokens: Vec<&String> = docs.iter().flat_map(|d| &d.tokens).collect();
        assert!(oov_rate(&tokens, &adapted).oov_count <= oov_rate(&tokens, &base).oov_count);
    }
}
