use serde::{Deserialize, Serialize};

/// Normalization settings shared by corpus, glossary and transcript processing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct TokenizerConfig {
    pub lowercase: bool,
    /// Split Romance clitics after an apostrophe: `l'igiene` -> `l'`, `igiene`.
    pub split_apostrophes: bool,
}

impl Default for TokenizerConfig {
    fn default() -> Self {
        Self {
            lowercase: true,
            split_apostrophes: false,
        }
    }
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Splits a raw line into normalized word tokens.
///
/// Tokens are separated on Unicode whitespace. Leading and trailing characters that
/// are not alphanumeric are stripped, so hyphens and apostrophes survive only inside
/// a word. Digits are kept. Tokens that end up empty are dropped.
pub fn tokenize(raw_line: &str, config: &TokenizerConfig) -> Vec<String> {
    let mut out = Vec::new();
    for piece in raw_line.split_whitespace() {
        let trimmed = piece.trim_matches(|c: char| !c.is_alphanumeric());
        if trimmed.is_empty() {
            continue;
        }
        let word = if config.lowercase {
            trimmed.to_lowercase()
        } else {
            trimmed.to_string()
        };
        if config.split_apostrophes {
            split_clitics(&word, &mut out);
        } else {
            out.push(word);
        }
    }
    out
}

fn split_clitics(word: &str, out: &mut Vec<String>) {
    let mut start = 0;
    for (i, c) in word.char_indices() {
        if is_apostrophe(c) {
            let end = i + c.len_utf8();
            out.push(word[start..end].to_string());
            start = end;
        }
    }
    if start < word.len() {
        out.push(word[start..].to_string());
    }
}
