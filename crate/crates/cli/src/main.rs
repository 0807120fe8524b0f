//! `seedlm`: seed-driven corpus selection, LM adaptation and IW-aware scoring.
//!
//! Exit codes: 0 on success, 1 for invalid arguments or configuration, 2 for
//! failures while running.

mod config;

use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;

use seedlm::corpus::{
    oov_curve, read_corpus_files, tokenize, write_oov_curve_csv, CorpusError, CorpusReader, Document, FrequencyTable,
    Lexicon, TokenizerConfig,
};
use seedlm::eval::{score_benchmark, MatchScope, ScoreOptions};
use seedlm::lm::{
    adapt_model, count_ngrams, estimate_model, export_arpa, import_arpa, perplexity, prune_model, AdaptationWeight,
    LmError, NGramModel, PruneConfig,
};
use seedlm::pipeline::{report_row, run_pipeline, write_report_csv, Manifest, Mode, PipelineError, MANIFEST_FILE};
use seedlm::seeds::{
    expand_morphological, expand_semantic, extract_seeds, load_embeddings, read_glossary, MorphConfig, Provenance,
    SeedError, SeedSet, SemanticConfig,
};
use seedlm::selection::{adaptation_lines, select_documents, SelectionConfig, SelectionReport};

/// A usage or configuration problem, reported with exit code 1.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct Invalid(pub String);

#[derive(Parser)]
#[command(name = "seedlm", version, about = "Seed-word data selection and n-gram LM adaptation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct TokenizerArgs {
    /// Keep the original letter case.
    #[arg(long)]
    keep_case: bool,
    /// Split clitics after apostrophes (l'igiene -> l' igiene).
    #[arg(long)]
    split_apostrophes: bool,
}

impl TokenizerArgs {
    fn config(self) -> TokenizerConfig {
        TokenizerConfig {
            lowercase: !self.keep_case,
            split_apostrophes: self.split_apostrophes,
        }
    }
}

#[derive(Args)]
struct PruneArgs {
    /// Prune with per-order count thresholds; without a value uses 0,1,1.
    #[arg(long, num_args = 0..=1, default_missing_value = "0,1,1", value_name = "C1,C2,C3")]
    prune: Option<String>,
    /// Also drop n-grams whose probability is below this value.
    #[arg(long, value_name = "P")]
    prob_threshold: Option<f64>,
}

impl PruneArgs {
    fn config(&self) -> anyhow::Result<Option<PruneConfig>> {
        let mut cfg = match &self.prune {
            Some(spec) => config::parse_prune(spec).map_err(Invalid)?,
            None if self.prob_threshold.is_some() => PruneConfig::default(),
            None => return Ok(None),
        };
        cfg.prob_threshold = self.prob_threshold;
        cfg.validate().map_err(|e| Invalid(e.to_string()))?;
        Ok(Some(cfg))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Baseline,
    Adapted,
    Word2vec,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build the top-N lexicon of a corpus.
    Lexicon {
        #[arg(long, required = true, num_args = 1..)]
        corpus: Vec<PathBuf>,
        #[arg(long, default_value_t = 128_000)]
        lexicon_size: usize,
        /// Write `word<TAB>count` lines instead of bare words.
        #[arg(long)]
        with_counts: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        tok: TokenizerArgs,
    },
    /// Extract seeds: glossary words missing from the base lexicon.
    Seeds {
        #[arg(long)]
        glossary: PathBuf,
        #[arg(long)]
        lexicon: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        tok: TokenizerArgs,
    },
    /// Add corpus words that share a stem with each seed.
    ExpandMorph {
        #[arg(long)]
        seeds: PathBuf,
        #[arg(long, required = true, num_args = 1..)]
        corpus: Vec<PathBuf>,
        #[arg(long = "n-m", default_value_t = 3)]
        n_m: usize,
        #[arg(long = "l-m", default_value_t = 5)]
        l_m: usize,
        #[arg(long, default_value_t = 3)]
        suffix_strip: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        tok: TokenizerArgs,
    },
    /// Add embedding-space neighbours of the seeds, iteratively.
    ExpandW2v {
        /// Seed file; bare word lists are accepted.
        #[arg(long, required_unless_present = "words")]
        seeds: Option<PathBuf>,
        /// Initial seed words, comma separated.
        #[arg(long, value_delimiter = ',')]
        words: Vec<String>,
        #[arg(long)]
        embeddings: PathBuf,
        #[arg(long = "n-w", default_value_t = 40)]
        n_w: usize,
        #[arg(long = "i-w", default_value_t = 2)]
        i_w: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Select the corpus documents that contain an OOV seed.
    Select {
        #[arg(long, required = true, num_args = 1..)]
        corpus: Vec<PathBuf>,
        #[arg(long)]
        seeds: PathBuf,
        #[arg(long)]
        lexicon: PathBuf,
        #[arg(long)]
        context_window: Option<usize>,
        /// Adaptation text output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Selection report (JSON).
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        tok: TokenizerArgs,
    },
    /// Dump n-gram counts as `count<TAB>w1 .. wn`.
    Count {
        #[arg(long, required = true, num_args = 1..)]
        corpus: Vec<PathBuf>,
        #[arg(long)]
        lexicon: PathBuf,
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        tok: TokenizerArgs,
    },
    /// Estimate a Witten-Bell backoff model and write it as ARPA.
    Train {
        #[arg(long, required = true, num_args = 1..)]
        corpus: Vec<PathBuf>,
        #[arg(long)]
        lexicon: PathBuf,
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        prune: PruneArgs,
        #[command(flatten)]
        tok: TokenizerArgs,
    },
    /// Interpolate background and adaptation-text frequencies into one model.
    Adapt {
        /// Background corpus.
        #[arg(long, required = true, num_args = 1..)]
        corpus: Vec<PathBuf>,
        #[arg(long, required = true, num_args = 1..)]
        adaptation: Vec<PathBuf>,
        #[arg(long)]
        lexicon: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        lambda: f64,
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        prune: PruneArgs,
        #[command(flatten)]
        tok: TokenizerArgs,
    },
    /// Prune an ARPA model and recompute its backoff weights.
    Prune {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        prune: PruneArgs,
    },
    /// Perplexity of a text, one sentence per line.
    Ppl {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        text: PathBuf,
        #[command(flatten)]
        tok: TokenizerArgs,
    },
    /// OOV rate of a text against top-k lexica of a corpus, as CSV.
    OovCurve {
        #[arg(long)]
        text: PathBuf,
        #[arg(long, required = true, num_args = 1..)]
        corpus: Vec<PathBuf>,
        #[arg(long, required = true, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        tok: TokenizerArgs,
    },
    /// Score a hypothesis transcript against an IW-annotated reference.
    Score {
        #[arg(long = "ref")]
        reference: PathBuf,
        #[arg(long)]
        hyp: PathBuf,
        /// Also report the OOV rate of the reference against this lexicon.
        #[arg(long)]
        lexicon: Option<PathBuf>,
        /// Match IWs over the whole benchmark instead of per utterance.
        #[arg(long)]
        corpus_scope: bool,
        /// Write the JSON report here (the table goes to stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        tok: TokenizerArgs,
    },
    /// Run the baseline, adapted or word2vec workflow end to end.
    Pipeline(PipelineArgs),
    /// Collect the results table of finished runs.
    Report {
        /// Run directories containing a manifest; one row each.
        #[arg(long = "run", required = true, num_args = 1..)]
        runs: Vec<PathBuf>,
        #[arg(long = "ref")]
        reference: PathBuf,
        /// One hypothesis for all runs, or one per run.
        #[arg(long, required = true, num_args = 1..)]
        hyp: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: ReportFormat,
        #[arg(long)]
        corpus_scope: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        tok: TokenizerArgs,
    },
}

#[derive(Args)]
struct PipelineArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long, num_args = 1..)]
    corpus: Vec<PathBuf>,
    #[arg(long)]
    glossary: Option<PathBuf>,
    #[arg(long)]
    embeddings: Option<PathBuf>,
    /// Initial word2vec seeds, comma separated.
    #[arg(long, value_delimiter = ',')]
    seed_words: Vec<String>,
    #[arg(long)]
    lexicon_size: Option<usize>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long = "n-m")]
    n_m: Option<usize>,
    #[arg(long = "l-m")]
    l_m: Option<usize>,
    #[arg(long = "n-w")]
    n_w: Option<usize>,
    #[arg(long = "i-w")]
    i_w: Option<u32>,
    #[arg(long)]
    f_min: Option<u64>,
    #[arg(long)]
    out_dir: Option<PathBuf>,
    #[arg(long)]
    context_window: Option<usize>,
    #[command(flatten)]
    prune: PruneArgs,
}

fn output(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read_docs(paths: &[PathBuf], tok: TokenizerConfig) -> anyhow::Result<Vec<Document>> {
    let mut docs = Vec::new();
    let report = read_corpus_files(paths, tok, |d| docs.push(d))?;
    if report.lines_skipped_invalid_utf8 > 0 {
        log::warn!("skipped {} lines with invalid UTF-8", report.lines_skipped_invalid_utf8);
    }
    Ok(docs)
}

fn read_lexicon(path: &Path) -> anyhow::Result<Lexicon> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Ok(Lexicon::read_from(BufReader::new(file))?)
}

fn read_seeds(path: &Path) -> anyhow::Result<SeedSet> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Ok(SeedSet::read_from(BufReader::new(file))?)
}

fn write_model(model: &NGramModel, prune: &PruneArgs, out: &Path) -> anyhow::Result<()> {
    let model = match prune.config()? {
        Some(cfg) => prune_model(model, &cfg)?,
        None => model.clone(),
    };
    export_arpa(&model, out)?;
    info!("wrote {} ({} n-grams)", out.display(), model.num_entries());
    Ok(())
}

fn weight(lambda: f64) -> anyhow::Result<AdaptationWeight> {
    Ok(AdaptationWeight::new(lambda).map_err(|e| Invalid(e.to_string()))?)
}

fn pipeline_config(args: &PipelineArgs) -> anyhow::Result<seedlm::pipeline::PipelineConfig> {
    let mut cfg = match &args.config {
        Some(p) => config::load(p)?,
        None => Default::default(),
    };
    if !args.corpus.is_empty() {
        cfg.corpus = args.corpus.clone();
    }
    if let Some(g) = &args.glossary {
        cfg.glossary = Some(g.clone());
    }
    if let Some(e) = &args.embeddings {
        cfg.embeddings = Some(e.clone());
    }
    if !args.seed_words.is_empty() {
        cfg.seed_words = args.seed_words.clone();
    }
    if let Some(n) = args.lexicon_size {
        cfg.base_lexicon_size = n;
    }
    if let Some(l) = args.lambda {
        cfg.lambda = weight(l)?;
    }
    if let Some(v) = args.n_m {
        cfg.morph.n_m = v;
    }
    if let Some(v) = args.l_m {
        cfg.morph.l_m = v;
    }
    if let Some(v) = args.n_w {
        cfg.semantic.n_w = v;
    }
    if let Some(v) = args.i_w {
        cfg.semantic.i_w = v;
    }
    if let Some(v) = args.f_min {
        cfg.f_min = v;
    }
    if let Some(d) = &args.out_dir {
        cfg.out_dir = d.clone();
    }
    if let Some(w) = args.context_window {
        cfg.selection = SelectionConfig { context_window: Some(w) };
    }
    if let Some(p) = args.prune.config()? {
        cfg.prune = Some(p);
    }
    Ok(cfg)
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Lexicon {
            corpus,
            lexicon_size,
            with_counts,
            out,
            tok,
        } => {
            if lexicon_size == 0 {
                return Err(Invalid("--lexicon-size must be at least 1".into()).into());
            }
            let docs = read_docs(&corpus, tok.config())?;
            let lex = Lexicon::top_n(&FrequencyTable::from_documents_par(&docs), lexicon_size)?;
            let lex = if with_counts { lex } else { Lexicon::from_words(lex.words()) };
            lex.write_to(output(out.as_deref())?)?;
        }
        Command::Seeds {
            glossary,
            lexicon,
            out,
            tok,
        } => {
            let tokens = read_glossary(BufReader::new(File::open(&glossary)?), &tok.config())?;
            let seeds = extract_seeds(&tokens, &read_lexicon(&lexicon)?);
            info!("{} seeds", seeds.len());
            seeds.write_to(output(out.as_deref())?)?;
        }
        Command::ExpandMorph {
            seeds,
            corpus,
            n_m,
            l_m,
            suffix_strip,
            out,
            tok,
        } => {
            let cfg = MorphConfig { n_m, l_m, suffix_strip };
            cfg.validate().map_err(|e| Invalid(e.to_string()))?;
            let table = FrequencyTable::from_documents_par(&read_docs(&corpus, tok.config())?);
            let expanded = expand_morphological(&read_seeds(&seeds)?, &table, &cfg)?;
            info!("{} seeds after morphological expansion", expanded.len());
            expanded.write_to(output(out.as_deref())?)?;
        }
        Command::ExpandW2v {
            seeds,
            words,
            embeddings,
            n_w,
            i_w,
            out,
        } => {
            let cfg = SemanticConfig { n_w, i_w };
            cfg.validate().map_err(|e| Invalid(e.to_string()))?;
            let mut initial = match &seeds {
                Some(p) => read_seeds(p)?,
                None => SeedSet::new(),
            };
            for w in &words {
                for t in tokenize(w, &TokenizerConfig::default()) {
                    initial.insert(t, Provenance::Glossary);
                }
            }
            let (table, load) = load_embeddings(&embeddings)?;
            if load.duplicates > 0 {
                log::warn!("{} duplicate words in {}", load.duplicates, embeddings.display());
            }
            let (expanded, report) = expand_semantic(&initial, &table, &cfg)?;
            for w in &report.missing {
                log::warn!("seed {w:?} has no vector");
            }
            info!("{} seeds, added per iteration {:?}", expanded.len(), report.added_per_iteration);
            expanded.write_to(output(out.as_deref())?)?;
        }
        Command::Select {
            corpus,
            seeds,
            lexicon,
            context_window,
            out,
            report,
            tok,
        } => {
            let seeds = read_seeds(&seeds)?;
            let lexicon = read_lexicon(&lexicon)?;
            let cfg = SelectionConfig { context_window };
            let mut w = output(out.as_deref())?;
            let mut report_data = SelectionReport::default();
            let mut next_id = 0;
            // stream file by file so the corpus never has to fit in memory
            for path in &corpus {
                let mut reader = CorpusReader::open(path, tok.config())?.starting_at(next_id);
                let mut read_error = None;
                let docs = reader.by_ref().map_while(|r| r.map_err(|e| read_error = Some(e)).ok());
                let mut selection = select_documents(docs, &seeds, &lexicon);
                while let Some(doc) = selection.next() {
                    for line in adaptation_lines(&doc, selection.triggers(), &cfg) {
                        writeln!(w, "{line}")?;
                    }
                }
                report_data.merge(selection.into_report());
                if let Some(e) = read_error {
                    return Err(e.into());
                }
                next_id = reader.next_id();
                let skipped = reader.report().lines_skipped_invalid_utf8;
                if skipped > 0 {
                    log::warn!("{}: skipped {skipped} lines with invalid UTF-8", path.display());
                }
            }
            w.flush()?;
            for warning in &report_data.warnings {
                log::warn!("{warning}");
            }
            match report {
                Some(p) => fs::write(p, report_data.to_json())?,
                None => eprint!("{}", report_data.to_json()),
            }
        }
        Command::Count {
            corpus,
            lexicon,
            order,
            out,
            tok,
        } => {
            let counts = count_ngrams(read_docs(&corpus, tok.config())?, &read_lexicon(&lexicon)?, order)
                .map_err(invalid_order)?;
            counts.write_dump(output(out.as_deref())?)?;
        }
        Command::Train {
            corpus,
            lexicon,
            order,
            out,
            prune,
            tok,
        } => {
            prune.config()?;
            let counts = count_ngrams(read_docs(&corpus, tok.config())?, &read_lexicon(&lexicon)?, order)
                .map_err(invalid_order)?;
            write_model(&estimate_model(&counts)?, &prune, &out)?;
        }
        Command::Adapt {
            corpus,
            adaptation,
            lexicon,
            lambda,
            order,
            out,
            prune,
            tok,
        } => {
            let w = weight(lambda)?;
            prune.config()?;
            let lexicon = read_lexicon(&lexicon)?;
            let bg = count_ngrams(read_docs(&corpus, tok.config())?, &lexicon, order).map_err(invalid_order)?;
            let ad = count_ngrams(read_docs(&adaptation, tok.config())?, &lexicon, order)?;
            write_model(&adapt_model(&bg, &ad, w)?, &prune, &out)?;
        }
        Command::Prune { model, out, prune } => {
            if prune.config()?.is_none() {
                return Err(Invalid("give --prune and/or --prob-threshold".into()).into());
            }
            write_model(&import_arpa(&model)?, &prune, &out)?;
        }
        Command::Ppl { model, text, tok } => {
            let model = import_arpa(&model)?;
            let sentences: Vec<Vec<String>> = fs::read_to_string(&text)
                .with_context(|| format!("reading {}", text.display()))?
                .lines()
                .map(|l| tokenize(l, &tok.config()))
                .filter(|s| !s.is_empty())
                .collect();
            let r = perplexity(&model, &sentences)?;
            println!(
                "sentences={} events={} oov={} logprob={:.4} ppl={:.4}",
                sentences.len(),
                r.events,
                r.oov_mapped_count,
                r.log10_prob_total,
                r.perplexity
            );
        }
        Command::OovCurve {
            text,
            corpus,
            sizes,
            out,
            tok,
        } => {
            let tokens: Vec<String> = read_docs(&[text], tok.config())?.into_iter().flat_map(|d| d.tokens).collect();
            let table = FrequencyTable::from_documents_par(&read_docs(&corpus, tok.config())?);
            let curve = oov_curve(&tokens, &table, &sizes).map_err(|e| Invalid(e.to_string()))?;
            write_oov_curve_csv(&curve, output(out.as_deref())?)?;
        }
        Command::Score {
            reference,
            hyp,
            lexicon,
            corpus_scope,
            json,
            tok,
        } => {
            let opts = ScoreOptions {
                tokenizer: tok.config(),
                scope: if corpus_scope { MatchScope::Corpus } else { MatchScope::Utterance },
                lexicon: lexicon.as_deref().map(read_lexicon).transpose()?,
            };
            let report = score_benchmark(&fs::read_to_string(&reference)?, &fs::read_to_string(&hyp)?, &opts)
                .map_err(|e| Invalid(e.to_string()))?;
            for w in &report.warnings {
                log::warn!("{w}");
            }
            print!("{}", report.to_table());
            if let Some(p) = json {
                fs::write(p, serde_json::to_string_pretty(&report.to_json())? + "\n")?;
            }
        }
        Command::Pipeline(args) => {
            let cfg = pipeline_config(&args)?;
            let modes: Vec<Mode> = match args.mode {
                ModeArg::Baseline => vec![Mode::Baseline],
                ModeArg::Adapted => vec![Mode::Adapted],
                ModeArg::Word2vec => vec![Mode::Word2vec],
                ModeArg::All => Mode::ALL.to_vec(),
            };
            // validate every requested mode before any of them runs
            for &m in &modes {
                cfg.validate(m)?;
            }
            for m in modes {
                let manifest = run_pipeline(&cfg, m)?;
                println!(
                    "{m}: seeds={} lexicon={} selected={} -> {}",
                    manifest.seeds,
                    manifest.lexicon_size,
                    manifest.documents_selected,
                    cfg.out_dir.join(m.as_str()).join(MANIFEST_FILE).display()
                );
            }
        }
        Command::Report {
            runs,
            reference,
            hyp,
            format,
            corpus_scope,
            out,
            tok,
        } => {
            if hyp.len() != 1 && hyp.len() != runs.len() {
                return Err(Invalid(format!("{} runs but {} hypothesis files", runs.len(), hyp.len())).into());
            }
            let reference = fs::read_to_string(&reference)?;
            let opts = ScoreOptions {
                tokenizer: tok.config(),
                scope: if corpus_scope { MatchScope::Corpus } else { MatchScope::Utterance },
                lexicon: None,
            };
            let mut rows = Vec::new();
            for (i, run_dir) in runs.iter().enumerate() {
                let manifest = Manifest::read(run_dir.join(MANIFEST_FILE))?;
                let hypothesis = fs::read_to_string(&hyp[i.min(hyp.len() - 1)])?;
                rows.push(report_row(&manifest, run_dir, &reference, &hypothesis, &opts)?);
            }
            let mut w = output(out.as_deref())?;
            match format {
                ReportFormat::Csv => write_report_csv(&rows, &mut w)?,
                ReportFormat::Json => writeln!(w, "{}", serde_json::to_string_pretty(&rows)?)?,
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn invalid_order(e: LmError) -> anyhow::Error {
    match e {
        LmError::InvalidOrder(_) => Invalid(e.to_string()).into(),
        other => other.into(),
    }
}

fn is_validation(err: &anyhow::Error) -> bool {
    if err.downcast_ref::<Invalid>().is_some() {
        return true;
    }
    if let Some(e) = err.downcast_ref::<PipelineError>() {
        return e.is_validation();
    }
    matches!(err.downcast_ref::<SeedError>(), Some(SeedError::InvalidConfig(_)))
        || matches!(
            err.downcast_ref::<CorpusError>(),
            Some(CorpusError::ZeroLexiconSize | CorpusError::CurveSizes(_))
        )
        || matches!(
            err.downcast_ref::<LmError>(),
            Some(LmError::InvalidOrder(_) | LmError::InvalidWeight(_) | LmError::InvalidPrune(_))
        )
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(if is_validation(&err) { 1 } else { 2 })
        }
    }
}
