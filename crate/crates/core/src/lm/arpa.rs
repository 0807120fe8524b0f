use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use super::model::{Entry, NGramModel};
use super::vocab::{Vocab, WordId};
use super::LmError;

/// Writes the model in ARPA format: `\data\` counts, one `\N-grams:` section per
/// order with `log10prob<TAB>w1 .. wN[<TAB>log10backoff]` lines sorted by words,
/// and a closing `\end\`.
pub fn write_arpa<W: Write>(model: &NGramModel, mut out: W) -> std::io::Result<()> {
    writeln!(out, "\\data\\")?;
    for n in 1..=model.order() {
        writeln!(out, "ngram {n}={}", model.entries(n).len())?;
    }
    for n in 1..=model.order() {
        writeln!(out)?;
        writeln!(out, "\\{n}-grams:")?;
        let vocab = model.vocab();
        let mut rows: Vec<(Vec<&str>, &Entry)> = model
            .entries(n)
            .iter()
            .map(|(g, e)| (g.iter().map(|&i| vocab.word(i)).collect(), e))
            .collect();
        rows.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        for (words, e) in rows {
            write!(out, "{:.7}\t{}", e.log_prob, words.join(" "))?;
            if let Some(bo) = e.backoff {
                write!(out, "\t{bo:.7}")?;
            }
            writeln!(out)?;
        }
    }
    writeln!(out)?;
    writeln!(out, "\\end\\")?;
    out.flush()
}

pub fn export_arpa(model: &NGramModel, path: impl AsRef<Path>) -> Result<(), LmError> {
    write_arpa(model, BufWriter::new(File::create(path)?))?;
    Ok(())
}

pub fn import_arpa(path: impl AsRef<Path>) -> Result<NGramModel, LmError> {
    read_arpa(BufReader::new(File::open(path)?))
}

fn err(line: usize, message: impl Into<String>) -> LmError {
    LmError::Arpa {
        line,
        message: message.into(),
    }
}

fn parse_f64(s: &str, line: usize) -> Result<f64, LmError> {
    s.parse::<f64>()
        .ok()
        .filter(|v| !v.is_nan())
        .ok_or_else(|| err(line, format!("non-numeric field {s:?}")))
}

struct RawEntry {
    line: usize,
    words: Vec<String>,
    log_prob: f64,
    backoff: Option<f64>,
}

enum State {
    Preamble,
    Counts,
    Section { n: usize, header_line: usize },
    BetweenSections { next: usize },
    Done,
}

/// Parses an ARPA model. Errors carry the 1-based line number.
///
/// Text before `\data\` is ignored. Imported entries have no supporting counts.
pub fn read_arpa<R: BufRead>(input: R) -> Result<NGramModel, LmError> {
    let mut declared: Vec<usize> = Vec::new();
    let mut raw: Vec<Vec<RawEntry>> = Vec::new();
    let mut state = State::Preamble;
    let mut last_line = 0;

    for (i, line) in input.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = line?;
        let text = line.trim();
        match state {
            State::Preamble => {
                if text == "\\data\\" {
                    state = State::Counts;
                }
            }
            State::Counts => {
                if text.is_empty() {
                    continue;
                }
                if let Some(spec) = text.strip_prefix("ngram ") {
                    let (n, c) = spec
                        .split_once('=')
                        .and_then(|(n, c)| Some((n.trim().parse::<usize>().ok()?, c.trim().parse::<usize>().ok()?)))
                        .ok_or_else(|| err(lineno, format!("malformed count line {text:?}")))?;
                    if n != declared.len() + 1 {
                        return Err(err(lineno, format!("expected count for order {}, found {n}", declared.len() + 1)));
                    }
                    declared.push(c);
                } else if text == "\\1-grams:" {
                    if declared.is_empty() {
                        return Err(err(lineno, "no n-gram counts declared"));
                    }
                    raw = (0..declared.len()).map(|_| Vec::new()).collect();
                    state = State::Section { n: 1, header_line: lineno };
                } else {
                    return Err(err(lineno, format!("unexpected line in \\data\\ section: {text:?}")));
                }
            }
            State::Section { n, header_line } => {
                if text.is_empty() || text.starts_with('\\') {
                    if raw[n - 1].len() != declared[n - 1] {
                        return Err(err(
                            header_line,
                            format!("\\{n}-grams: declares {} entries but lists {}", declared[n - 1], raw[n - 1].len()),
                        ));
                    }
                    state = if text.is_empty() {
                        State::BetweenSections { next: n + 1 }
                    } else {
                        section_header(text, n + 1, &declared, lineno)?
                    };
                    continue;
                }
                let fields: Vec<&str> = text.split_whitespace().collect();
                if fields.len() != n + 1 && fields.len() != n + 2 {
                    return Err(err(lineno, format!("expected {} or {} fields, found {}", n + 1, n + 2, fields.len())));
                }
                let lp = parse_f64(fields[0], lineno)?;
                if lp > 0.0 {
                    return Err(err(lineno, format!("log probability {lp} is positive")));
                }
                let words = fields[1..=n].iter().map(|w| w.to_string()).collect();
                let bo = fields.get(n + 1).map(|b| parse_f64(b, lineno)).transpose()?;
                raw[n - 1].push(RawEntry { line: lineno, words, log_prob: lp, backoff: bo });
            }
            State::BetweenSections { next } => {
                if !text.is_empty() {
                    state = section_header(text, next, &declared, lineno)?;
                }
            }
            State::Done => {
                if !text.is_empty() {
                    return Err(err(lineno, "content after \\end\\"));
                }
            }
        }
    }
    match state {
        State::Done => {}
        State::Preamble => return Err(err(last_line.max(1), "missing \\data\\ header")),
        _ => return Err(err(last_line.max(1), "missing \\end\\ marker")),
    }
    build_model(declared.len(), raw)
}

fn section_header(text: &str, expected: usize, declared: &[usize], lineno: usize) -> Result<State, LmError> {
    if text == "\\end\\" {
        if expected <= declared.len() {
            return Err(err(lineno, format!("\\end\\ reached before \\{expected}-grams:")));
        }
        return Ok(State::Done);
    }
    if expected > declared.len() {
        return Err(err(lineno, format!("expected \\end\\, found {text:?}")));
    }
    if text != format!("\\{expected}-grams:") {
        return Err(err(lineno, format!("expected \\{expected}-grams:, found {text:?}")));
    }
    Ok(State::Section {
        n: expected,
        header_line: lineno,
    })
}

fn build_model(order: usize, raw: Vec<Vec<RawEntry>>) -> Result<NGramModel, LmError> {
    let mut vocab = Vocab::new();
    for e in &raw[0] {
        vocab.insert(&e.words[0]);
    }
    let mut entries: Vec<HashMap<Vec<WordId>, Entry>> = Vec::with_capacity(order);
    for (n, section) in raw.into_iter().enumerate() {
        let mut table = HashMap::with_capacity(section.len());
        for e in section {
            let ids: Option<Vec<WordId>> = e.words.iter().map(|w| vocab.id(w)).collect();
            let ids = ids.ok_or_else(|| {
                err(
                    e.line,
                    format!("{}-gram {:?} uses a word missing from the unigrams", n + 1, e.words.join(" ")),
                )
            })?;
            if table.contains_key(&ids) {
                return Err(err(e.line, format!("duplicate {}-gram {:?}", n + 1, e.words.join(" "))));
            }
            table.insert(
                ids,
                Entry {
                    log_prob: e.log_prob,
                    backoff: e.backoff,
                    count: None,
                },
            );
        }
        entries.push(table);
    }
    Ok(NGramModel { order, vocab, entries })
}
