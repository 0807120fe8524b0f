use std::fs::{self, File};
use std::io::BufReader;
use std::path::Path;

use log::info;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{Mode, PipelineConfig, PipelineError};
use crate::corpus::{read_corpus_files, Document, FrequencyTable, Lexicon};
use crate::lm::{adapt_model, build_adapted_lexicon, count_ngrams, estimate_model, prune_model, write_arpa, NGramModel};
use crate::seeds::{
    expand_morphological, expand_semantic, extract_seeds, load_embeddings, read_glossary, Provenance, SeedSet,
};
use crate::selection::{extract_context_snippets, select_documents_par, TriggerSet};

pub const MANIFEST_FILE: &str = "manifest.json";

/// A produced file, relative to the run directory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Artifact {
    pub path: String,
    pub bytes: u64,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub mode: Mode,
    pub seeds: usize,
    pub base_lexicon_size: usize,
    /// Size of the lexicon the final model was trained with.
    pub lexicon_size: usize,
    pub documents_scanned: u64,
    pub documents_selected: u64,
    pub lines_skipped_invalid_utf8: u64,
    /// Artifact holding the final lexicon.
    pub lexicon: String,
    /// Artifact holding the final ARPA model.
    pub model: String,
    pub artifacts: Vec<Artifact>,
}

impl Manifest {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes") + "\n"
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self, PipelineError> {
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| PipelineError::Manifest(e.to_string()))
    }

    pub fn artifact(&self, path: &str) -> Option<&Artifact> {
        self.artifacts.iter().find(|a| a.path == path)
    }
}

struct Emitter<'a> {
    dir: &'a Path,
    artifacts: Vec<Artifact>,
}

impl Emitter<'_> {
    fn emit<F>(&mut self, name: &str, write: F) -> Result<(), PipelineError>
    where
        F: FnOnce(&mut Vec<u8>) -> std::io::Result<()>,
    {
        let mut buf = Vec::new();
        write(&mut buf)?;
        fs::write(self.dir.join(name), &buf)?;
        self.artifacts.push(Artifact {
            path: name.to_string(),
            bytes: buf.len() as u64,
            sha256: hex::encode(Sha256::digest(&buf)),
        });
        info!("wrote {name} ({} bytes)", buf.len());
        Ok(())
    }
}

fn finish_model(model: NGramModel, cfg: &PipelineConfig) -> Result<NGramModel, PipelineError> {
    Ok(match &cfg.prune {
        Some(p) => prune_model(&model, p)?,
        None => model,
    })
}

fn glossary_tokens(cfg: &PipelineConfig) -> Result<Vec<String>, PipelineError> {
    match &cfg.glossary {
        Some(p) => Ok(read_glossary(BufReader::new(File::open(p)?), &cfg.tokenizer)?),
        None => Ok(Vec::new()),
    }
}

/// Runs one workflow and writes its artifacts and manifest under `out_dir/<mode>/`.
///
/// - baseline: top-N lexicon and background model.
/// - adapted: glossary seeds absent from the lexicon (optionally enlarged
///   morphologically), document selection, enlarged lexicon and adapted model.
/// - word2vec: the initial seeds enlarged through embedding neighbours, then the
///   same selection and adaptation.
///
/// The configuration is validated before anything is read or written. Reruns with
/// the same inputs produce byte-identical files.
pub fn run_pipeline(cfg: &PipelineConfig, mode: Mode) -> Result<Manifest, PipelineError> {
    cfg.validate(mode)?;
    let dir = cfg.out_dir.join(mode.as_str());
    fs::create_dir_all(&dir)?;
    let mut out = Emitter {
        dir: &dir,
        artifacts: Vec::new(),
    };

    let mut docs: Vec<Document> = Vec::new();
    let ingest = read_corpus_files(&cfg.corpus, cfg.tokenizer, |d| docs.push(d))?;
    info!("{mode}: read {} documents", docs.len());
    let table = FrequencyTable::from_documents_par(&docs);
    let base = Lexicon::top_n(&table, cfg.base_lexicon_size)?;
    out.emit("lexicon.txt", |w| base.write_to(w))?;

    let mut manifest = Manifest {
        mode,
        seeds: 0,
        base_lexicon_size: base.len(),
        lexicon_size: base.len(),
        documents_scanned: docs.len() as u64,
        documents_selected: 0,
        lines_skipped_invalid_utf8: ingest.lines_skipped_invalid_utf8,
        lexicon: "lexicon.txt".into(),
        model: String::new(),
        artifacts: Vec::new(),
    };

    if mode == Mode::Baseline {
        let model = finish_model(estimate_model(&count_ngrams(&docs, &base, cfg.order)?)?, cfg)?;
        out.emit("background.arpa", |w| write_arpa(&model, w))?;
        manifest.model = "background.arpa".into();
    } else {
        let seeds = match mode {
            Mode::Adapted => {
                let initial = extract_seeds(&glossary_tokens(cfg)?, &base);
                expand_morphological(&initial, &table, &cfg.morph)?
            }
            _ => {
                let mut initial = SeedSet::new();
                for t in glossary_tokens(cfg)? {
                    initial.insert(t, Provenance::Glossary);
                }
                for w in &cfg.seed_words {
                    for t in crate::corpus::tokenize(w, &cfg.tokenizer) {
                        initial.insert(t, Provenance::Glossary);
                    }
                }
                let embeddings_path = cfg.embeddings.as_ref().expect("validated");
                let (embeddings, _) = load_embeddings(embeddings_path)?;
                let (seeds, report) = expand_semantic(&initial, &embeddings, &cfg.semantic)?;
                if !report.missing.is_empty() {
                    info!("{} initial seeds have no vector: {:?}", report.missing.len(), report.missing);
                }
                seeds
            }
        };
        manifest.seeds = seeds.len();
        out.emit("seeds.tsv", |w| seeds.write_to(w))?;

        let triggers = TriggerSet::new(&seeds, &base);
        let (selected, report) = select_documents_par(&docs, &triggers);
        manifest.documents_selected = report.documents_selected;
        info!("{mode}: selected {} of {} documents", selected.len(), docs.len());

        let adaptation: Vec<Document> = match cfg.selection.context_window {
            None => selected.into_iter().cloned().collect(),
            Some(window) => selected
                .into_iter()
                .flat_map(|d| extract_context_snippets(d, &triggers, window))
                .enumerate()
                .map(|(i, span)| Document::from_tokens(i as u64, span))
                .collect(),
        };
        out.emit("adaptation.txt", |w| {
            for d in &adaptation {
                w.extend_from_slice(d.raw.as_bytes());
                w.push(b'\n');
            }
            Ok(())
        })?;
        out.emit("selection_report.json", |w| {
            w.extend_from_slice(report.to_json().as_bytes());
            Ok(())
        })?;

        let adapted_lexicon = build_adapted_lexicon(&base, &FrequencyTable::from_documents(&adaptation), cfg.f_min);
        manifest.lexicon_size = adapted_lexicon.len();
        out.emit("adapted_lexicon.txt", |w| adapted_lexicon.write_to(w))?;
        manifest.lexicon = "adapted_lexicon.txt".into();

        let bg = count_ngrams(&docs, &adapted_lexicon, cfg.order)?;
        let ad = count_ngrams(&adaptation, &adapted_lexicon, cfg.order)?;
        let model = finish_model(adapt_model(&bg, &ad, cfg.lambda)?, cfg)?;
        out.emit("adapted.arpa", |w| write_arpa(&model, w))?;
        manifest.model = "adapted.arpa".into();
    }

    manifest.artifacts = out.artifacts;
    fs::write(dir.join(MANIFEST_FILE), manifest.to_json())?;
    Ok(manifest)
}
