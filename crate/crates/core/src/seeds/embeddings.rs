use std::cmp::Ordering;
use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use super::SeedError;

/// Word vectors of a fixed dimension, with cached norms for similarity queries.
#[derive(Debug, Clone, Default)]
pub struct EmbeddingTable {
    dimension: usize,
    words: Vec<String>,
    data: Vec<f32>,
    norms: Vec<f64>,
    index: HashMap<String, usize>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadReport {
    /// Lines whose word had already been seen; the later vector wins.
    pub duplicates: usize,
}

fn norm(v: &[f32]) -> f64 {
    v.iter().map(|&x| f64::from(x) * f64::from(x)).sum::<f64>().sqrt()
}

fn dot(u: &[f32], v: &[f32]) -> f64 {
    u.iter().zip(v).map(|(&a, &b)| f64::from(a) * f64::from(b)).sum()
}

impl EmbeddingTable {
    pub fn new(dimension: usize) -> Self {
        Self {
            dimension,
            ..Default::default()
        }
    }

    /// Inserts or replaces the vector for `word`. Returns `true` when it replaced one.
    pub fn insert(&mut self, word: &str, vector: &[f32]) -> Result<bool, SeedError> {
        if vector.len() != self.dimension {
            return Err(SeedError::DimensionMismatch(self.dimension, vector.len()));
        }
        let n = norm(vector);
        if let Some(&i) = self.index.get(word) {
            self.data[i * self.dimension..(i + 1) * self.dimension].copy_from_slice(vector);
            self.norms[i] = n;
            return Ok(true);
        }
        self.index.insert(word.to_string(), self.words.len());
        self.words.push(word.to_string());
        self.data.extend_from_slice(vector);
        self.norms.push(n);
        Ok(false)
    }

    /// Parses the word2vec text format: a `V D` header then `V` lines of `word v1 .. vD`.
    pub fn read_word2vec<R: BufRead>(input: R) -> Result<(Self, LoadReport), SeedError> {
        let mut lines = input.lines().enumerate();
        let header = loop {
            match lines.next() {
                Some((_, line)) => {
                    let line = line?;
                    if !line.trim().is_empty() {
                        break line;
                    }
                }
                None => {
                    return Err(SeedError::EmbeddingFormat {
                        line: 1,
                        message: "missing header".into(),
                    })
                }
            }
        };
        let fields: Vec<&str> = header.split_whitespace().collect();
        let parsed = match fields.as_slice() {
            [v, d] => v.parse::<usize>().ok().zip(d.parse::<usize>().ok()),
            _ => None,
        };
        let Some((vocab, dimension)) = parsed.filter(|&(_, d)| d > 0) else {
            return Err(SeedError::EmbeddingFormat {
                line: 1,
                message: format!("malformed header {header:?}, expected \"<vocab> <dimension>\""),
            });
        };

        let mut table = Self::new(dimension);
        let mut report = LoadReport::default();
        let mut seen = 0usize;
        let mut vector = Vec::with_capacity(dimension);
        for (i, line) in lines {
            let lineno = i + 1;
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            if seen == vocab {
                return Err(SeedError::EmbeddingFormat {
                    line: lineno,
                    message: format!("more than the {vocab} vectors declared in the header"),
                });
            }
            let mut parts = line.split_whitespace();
            let word = parts.next().unwrap_or_default();
            vector.clear();
            for p in parts {
                let x = p.parse::<f32>().map_err(|_| SeedError::EmbeddingFormat {
                    line: lineno,
                    message: format!("non-numeric component {p:?}"),
                })?;
                vector.push(x);
            }
            if vector.len() != dimension {
                return Err(SeedError::EmbeddingFormat {
                    line: lineno,
                    message: format!("expected {dimension} components, found {}", vector.len()),
                });
            }
            if table.insert(word, &vector)? {
                report.duplicates += 1;
            }
            seen += 1;
        }
        if seen != vocab {
            return Err(SeedError::EmbeddingFormat {
                line: seen + 2,
                message: format!("header declares {vocab} vectors but {seen} were found"),
            });
        }
        Ok((table, report))
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn get(&self, word: &str) -> Option<&[f32]> {
        self.index.get(word).map(|&i| self.row(i))
    }

    fn row(&self, i: usize) -> &[f32] {
        &self.data[i * self.dimension..(i + 1) * self.dimension]
    }
}

pub fn load_embeddings(path: impl AsRef<Path>) -> Result<(EmbeddingTable, LoadReport), SeedError> {
    EmbeddingTable::read_word2vec(BufReader::new(File::open(path)?))
}

/// `(u·v) / (|u| |v|)`.
pub fn cosine_similarity(u: &[f32], v: &[f32]) -> Result<f64, SeedError> {
    if u.len() != v.len() {
        return Err(SeedError::DimensionMismatch(u.len(), v.len()));
    }
    let (nu, nv) = (norm(u), norm(v));
    if nu == 0.0 || nv == 0.0 {
        return Err(SeedError::ZeroNorm);
    }
    Ok((dot(u, v) / (nu * nv)).clamp(-1.0, 1.0))
}

fn by_similarity(a: &(String, f64), b: &(String, f64)) -> Ordering {
    b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0))
}

/// The `n` words most similar to `word`, by descending cosine similarity.
///
/// Exhaustive scan. The query word is never returned, ties are broken by ascending
/// word, and zero-norm vectors are never candidates.
pub fn nearest_neighbors(
    word: &str,
    table: &EmbeddingTable,
    n: usize,
) -> Result<Vec<(String, f64)>, SeedError> {
    if table.is_empty() {
        return Err(SeedError::EmptyTable);
    }
    let &q = table
        .index
        .get(word)
        .ok_or_else(|| SeedError::UnknownWord(word.to_string()))?;
    let qn = table.norms[q];
    if qn == 0.0 {
        return Err(SeedError::ZeroNorm);
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let query = table.row(q);
    // ranking on scores first avoids allocating a String per candidate
    let mut scored: Vec<(usize, f64)> = (0..table.len())
        .filter(|&i| i != q && table.norms[i] > 0.0)
        .map(|i| (i, (dot(query, table.row(i)) / (qn * table.norms[i])).clamp(-1.0, 1.0)))
        .collect();
    let cmp = |a: &(usize, f64), b: &(usize, f64)| {
        b.1.total_cmp(&a.1)
            .then_with(|| table.words[a.0].cmp(&table.words[b.0]))
    };
    if n < scored.len() {
        scored.select_nth_unstable_by(n - 1, cmp);
        scored.truncate(n);
    }
    let mut out: Vec<(String, f64)> = scored
        .into_iter()
        .map(|(i, s)| (table.words[i].clone(), s))
        .collect();
    out.sort_by(by_similarity);
    Ok(out)
}
