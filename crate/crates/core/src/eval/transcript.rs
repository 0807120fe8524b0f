use crate::corpus::{tokenize, TokenizerConfig};

use super::EvalError;

/// Longest IW phrase expected in an annotation; longer ones only raise a warning.
pub const MAX_IW_LEN: usize = 6;

/// A bracketed IW: `len` tokens starting at `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Span {
    pub start: usize,
    pub len: usize,
}

impl Span {
    pub fn end(&self) -> usize {
        self.start + self.len
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Utterance {
    pub tokens: Vec<String>,
    /// Sorted by start, non-overlapping.
    pub spans: Vec<Span>,
}

impl Utterance {
    pub fn span_tokens(&self, span: &Span) -> &[String] {
        &self.tokens[span.start..span.end()]
    }

    /// The utterance with IWs in round brackets, e.g. `the (dental caries) case`.
    pub fn render(&self) -> String {
        let mut out = Vec::with_capacity(self.tokens.len());
        let mut spans = self.spans.iter().peekable();
        let mut i = 0;
        while i < self.tokens.len() {
            match spans.peek() {
                Some(s) if s.start == i => {
                    out.push(format!("({})", self.span_tokens(s).join(" ")));
                    i = s.end();
                    spans.next();
                }
                _ => {
                    out.push(self.tokens[i].clone());
                    i += 1;
                }
            }
        }
        out.join(" ")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnnotatedTranscript {
    pub utterances: Vec<Utterance>,
    pub warnings: Vec<String>,
}

impl AnnotatedTranscript {
    pub fn tokens(&self) -> impl Iterator<Item = &String> {
        self.utterances.iter().flat_map(|u| u.tokens.iter())
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for u in &self.utterances {
            s.push_str(&u.render());
            s.push('\n');
        }
        s
    }
}

/// Parses one utterance per line, with IWs delimited by round brackets.
///
/// Text inside and outside brackets is normalized with the corpus tokenizer.
pub fn parse_transcript(text: &str, config: &TokenizerConfig) -> Result<AnnotatedTranscript, EvalError> {
    let mut transcript = AnnotatedTranscript::default();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let mut utt = Utterance::default();
        let mut segment = String::new();
        let mut open: Option<usize> = None;
        for (col, c) in line.chars().enumerate() {
            match c {
                '(' => {
                    if open.is_some() {
                        return Err(EvalError::NestedBracket { line: lineno, column: col + 1 });
                    }
                    utt.tokens.extend(tokenize(&segment, config));
                    segment.clear();
                    open = Some(col + 1);
                }
                ')' => {
                    if open.take().is_none() {
                        return Err(EvalError::UnbalancedBracket { line: lineno, column: col + 1 });
                    }
                    let words = tokenize(&segment, config);
                    segment.clear();
                    if words.is_empty() {
                        transcript.warnings.push(format!("line {lineno}: empty brackets ignored"));
                        continue;
                    }
                    if words.len() > MAX_IW_LEN {
                        transcript.warnings.push(format!(
                            "line {lineno}: IW of {} words exceeds {MAX_IW_LEN}",
                            words.len()
                        ));
                    }
                    utt.spans.push(Span {
                        start: utt.tokens.len(),
                        len: words.len(),
                    });
                    utt.tokens.extend(words);
                }
                _ => segment.push(c),
            }
        }
        if let Some(column) = open {
            return Err(EvalError::UnbalancedBracket { line: lineno, column });
        }
        utt.tokens.extend(tokenize(&segment, config));
        transcript.utterances.push(utt);
    }
    Ok(transcript)
}
