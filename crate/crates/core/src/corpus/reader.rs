use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::tokenize::{tokenize, TokenizerConfig};
use super::CorpusError;

/// One corpus line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    /// Ordinal of the line among the valid lines of the stream, starting at 0.
    pub id: u64,
    /// The line exactly as read, without its terminator.
    pub raw: String,
    pub tokens: Vec<String>,
}

impl Document {
    pub fn new(id: u64, raw: impl Into<String>, config: &TokenizerConfig) -> Self {
        let raw = raw.into();
        let tokens = tokenize(&raw, config);
        Self { id, raw, tokens }
    }

    /// A document built straight from tokens; `raw` is the space-joined token list.
    pub fn from_tokens<S: AsRef<str>>(id: u64, tokens: &[S]) -> Self {
        let tokens: Vec<String> = tokens.iter().map(|t| t.as_ref().to_string()).collect();
        Self {
            id,
            raw: tokens.join(" "),
            tokens,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestReport {
    pub lines_read: u64,
    pub lines_skipped_invalid_utf8: u64,
}

impl IngestReport {
    pub fn merge(&mut self, other: &IngestReport) {
        self.lines_read += other.lines_read;
        self.lines_skipped_invalid_utf8 += other.lines_skipped_invalid_utf8;
    }
}

/// Streams one-document-per-line text, skipping lines that are not valid UTF-8.
pub struct CorpusReader<R> {
    input: R,
    config: TokenizerConfig,
    next_id: u64,
    buf: Vec<u8>,
    report: IngestReport,
}

impl<R: BufRead> CorpusReader<R> {
    pub fn new(input: R, config: TokenizerConfig) -> Self {
        Self {
            input,
            config,
            next_id: 0,
            buf: Vec::new(),
            report: IngestReport::default(),
        }
    }

    /// Continue numbering documents from `id`; used when chaining several files.
    pub fn starting_at(mut self, id: u64) -> Self {
        self.next_id = id;
        self
    }

    pub fn report(&self) -> IngestReport {
        self.report
    }

    pub fn next_id(&self) -> u64 {
        self.next_id
    }
}

impl CorpusReader<BufReader<File>> {
    pub fn open(path: impl AsRef<Path>, config: TokenizerConfig) -> Result<Self, CorpusError> {
        Ok(Self::new(BufReader::new(File::open(path)?), config))
    }
}

impl<R: BufRead> Iterator for CorpusReader<R> {
    type Item = Result<Document, CorpusError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.input.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            self.report.lines_read += 1;
            if self.buf.last() == Some(&b'\n') {
                self.buf.pop();
                if self.buf.last() == Some(&b'\r') {
                    self.buf.pop();
                }
            }
            let Ok(line) = std::str::from_utf8(&self.buf) else {
                self.report.lines_skipped_invalid_utf8 += 1;
                continue;
            };
            let doc = Document::new(self.next_id, line, &self.config);
            self.next_id += 1;
            return Some(Ok(doc));
        }
    }
}

/// Reads every file in order as one document stream and hands each document to `f`.
///
/// Document ids continue across files.
pub fn read_corpus_files<P, F>(
    paths: &[P],
    config: TokenizerConfig,
    mut f: F,
) -> Result<IngestReport, CorpusError>
where
    P: AsRef<Path>,
    F: FnMut(Document),
{
    let mut report = IngestReport::default();
    let mut next_id = 0;
    for path in paths {
        let mut reader = CorpusReader::open(path, config)?.starting_at(next_id);
        for doc in reader.by_ref() {
            f(doc?);
        }
        next_id = reader.next_id();
        report.merge(&reader.report());
    }
    Ok(report)
}
