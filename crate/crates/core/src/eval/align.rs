use std::fmt::Write as _;

use super::EvalError;
use crate::percent::percent_of;

/// One step of a word alignment; indices point into the reference and hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlignOp {
    Hit { r: usize, h: usize },
    Sub { r: usize, h: usize },
    Del { r: usize },
    Ins { h: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlignmentResult {
    pub hits: usize,
    pub substitutions: usize,
    pub insertions: usize,
    pub deletions: usize,
    pub reference_length: usize,
    pub trace: Vec<AlignOp>,
}

impl AlignmentResult {
    pub fn errors(&self) -> usize {
        self.substitutions + self.insertions + self.deletions
    }

    /// Errors in sclite-like notation, e.g. `I_in S_them_my D_else`.
    pub fn describe<S: AsRef<str>>(&self, reference: &[S], hypothesis: &[S]) -> String {
        let mut out = String::new();
        for op in &self.trace {
            let step = match *op {
                AlignOp::Hit { .. } => continue,
                AlignOp::Sub { r, h } => format!("S_{}_{}", reference[r].as_ref(), hypothesis[h].as_ref()),
                AlignOp::Del { r } => format!("D_{}", reference[r].as_ref()),
                AlignOp::Ins { h } => format!("I_{}", hypothesis[h].as_ref()),
            };
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(&step);
        }
        let _ = write!(
            out,
            "{}(Sub= {} Ins= {} Del= {} REF={})",
            if out.is_empty() { "" } else { " " },
            self.substitutions,
            self.insertions,
            self.deletions,
            self.reference_length
        );
        out
    }
}

/// Minimum edit distance alignment with unit costs.
///
/// The backtrace prefers hit, then substitution, then deletion, then insertion among
/// equal-cost moves, which makes the result deterministic.
pub fn align<S: AsRef<str>>(reference: &[S], hypothesis: &[S]) -> AlignmentResult {
    let (n, m) = (reference.len(), hypothesis.len());
    let width = m + 1;
    let mut dp = vec![0u32; (n + 1) * width];
    for (j, cell) in dp[..width].iter_mut().enumerate() {
        *cell = j as u32;
    }
    for i in 1..=n {
        dp[i * width] = i as u32;
        for j in 1..=m {
            let same = reference[i - 1].as_ref() == hypothesis[j - 1].as_ref();
            let diag = dp[(i - 1) * width + j - 1] + u32::from(!same);
            let del = dp[(i - 1) * width + j] + 1;
            let ins = dp[i * width + j - 1] + 1;
            dp[i * width + j] = diag.min(del).min(ins);
        }
    }

    let mut res = AlignmentResult {
        reference_length: n,
        ..Default::default()
    };
    let (mut i, mut j) = (n, m);
    while i > 0 || j > 0 {
        let here = dp[i * width + j];
        if i > 0 && j > 0 {
            let same = reference[i - 1].as_ref() == hypothesis[j - 1].as_ref();
            let diag = dp[(i - 1) * width + j - 1];
            if same && diag == here {
                res.hits += 1;
                res.trace.push(AlignOp::Hit { r: i - 1, h: j - 1 });
                i -= 1;
                j -= 1;
                continue;
            }
            if !same && diag + 1 == here {
                res.substitutions += 1;
                res.trace.push(AlignOp::Sub { r: i - 1, h: j - 1 });
                i -= 1;
                j -= 1;
                continue;
            }
        }
        if i > 0 && dp[(i - 1) * width + j] + 1 == here {
            res.deletions += 1;
            res.trace.push(AlignOp::Del { r: i - 1 });
            i -= 1;
        } else {
            res.insertions += 1;
            res.trace.push(AlignOp::Ins { h: j - 1 });
            j -= 1;
        }
    }
    res.trace.reverse();
    res
}

/// `100 * (S + I + D) / N`, rounded half-up to two decimals.
pub fn wer(a: &AlignmentResult) -> Result<f64, EvalError> {
    if a.reference_length == 0 {
        return Err(EvalError::EmptyReference);
    }
    Ok(percent_of(a.errors() as u64, a.reference_length as u64))
}
