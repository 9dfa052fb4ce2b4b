//! Corpus runner: `---`-separated problems, each optionally followed by
//! an `EXPECTED: <numbers>` line. Problems are independent, so the run
//! fans out across threads when the `parallel` feature is on.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use std::fmt::Write as _;

use serde::Serialize;

use super::{format_answer, solve, Resources, Solution, SolveError};

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusProblem {
    /// 1-based position in the corpus file.
    pub number: usize,
    pub text: String,
    pub expected: Option<Vec<f64>>,
}

/// Splits a corpus file into problems. The `EXPECTED:` line may sit on
/// any line of its block; numbers separate on whitespace or commas.
pub fn parse_corpus(text: &str) -> Vec<CorpusProblem> {
    let mut problems = Vec::new();
    for block in text.split("\n---").flat_map(|b| {
        // also accept a leading separator line
        if b.trim_start().starts_with("---") {
            b.trim_start().strip_prefix("---").map(|s| vec![s]).unwrap_or_default()
        } else {
            vec![b]
        }
    }) {
        let mut expected = None;
        let mut lines = Vec::new();
        for line in block.lines() {
            if let Some(rest) = line.trim().strip_prefix("EXPECTED:") {
                let values: Vec<f64> = rest
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .filter_map(|s| s.parse().ok())
                    .collect();
                expected = Some(values);
            } else {
                lines.push(line);
            }
        }
        let text = lines.join("\n").trim().to_string();
        if text.is_empty() && expected.is_none() {
            continue;
        }
        problems.push(CorpusProblem { number: problems.len() + 1, text, expected });
    }
    problems
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemStatus {
    /// Answers matched the expectation.
    Pass,
    /// Expectation present but answers differ or the problem failed.
    Mismatch,
    /// Solved, nothing to compare against.
    Solved,
    /// Failed, nothing to compare against.
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProblemReport {
    pub number: usize,
    pub status: ProblemStatus,
    pub answers: Vec<f64>,
    pub expected: Option<Vec<f64>>,
    pub error: Option<String>,
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusReport {
    pub problems: Vec<ProblemReport>,
    pub total: usize,
    pub with_expectation: usize,
    pub matched: usize,
}

impl CorpusReport {
    pub fn any_mismatch(&self) -> bool {
        self.problems.iter().any(|p| p.status == ProblemStatus::Mismatch)
    }

    pub fn accuracy(&self) -> f64 {
        if self.with_expectation == 0 {
            return 1.0;
        }
        self.matched as f64 / self.with_expectation as f64
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for p in &self.problems {
            let answers: Vec<String> = p.answers.iter().map(|v| format_answer(*v)).collect();
            let _ = write!(out, "problem {}: ", p.number);
            match p.status {
                ProblemStatus::Pass => {
                    let _ = write!(out, "PASS answers=[{}]", answers.join(", "));
                }
                ProblemStatus::Mismatch => {
                    let expected: Vec<String> = p
                        .expected
                        .iter()
                        .flatten()
                        .map(|v| format_answer(*v))
                        .collect();
                    let _ = write!(
                        out,
                        "MISMATCH answers=[{}] expected=[{}]",
                        answers.join(", "),
                        expected.join(", ")
                    );
                }
                ProblemStatus::Solved => {
                    let _ = write!(out, "SOLVED answers=[{}]", answers.join(", "));
                }
                ProblemStatus::Error => {
                    let _ = write!(out, "ERROR");
                }
            }
            if let Some(e) = &p.error {
                let _ = write!(out, " ({e})");
            }
            out.push('\n');
            for d in &p.diagnostics {
                let _ = writeln!(out, "  diagnostic: {d}");
            }
        }
        let _ = writeln!(
            out,
            "corpus: {}/{} matched ({} problems, accuracy {:.1}%)",
            self.matched,
            self.with_expectation,
            self.total,
            self.accuracy() * 100.0
        );
        out
    }
}

fn report_one(problem: &CorpusProblem, outcome: Result<Solution, SolveError>) -> ProblemReport {
    match outcome {
        Ok(solution) => {
            let status = match &problem.expected {
                Some(expected) if answers_match(&solution.answers, expected) => ProblemStatus::Pass,
                Some(_) => ProblemStatus::Mismatch,
                None => ProblemStatus::Solved,
            };
            ProblemReport {
                number: problem.number,
                status,
                answers: solution.answers,
                expected: problem.expected.clone(),
                error: None,
                diagnostics: solution.trace.diagnostics,
            }
        }
        Err(err) => {
            let status = if problem.expected.is_some() {
                ProblemStatus::Mismatch
            } else {
                ProblemStatus::Error
            };
            ProblemReport {
                number: problem.number,
                status,
                answers: Vec::new(),
                expected: problem.expected.clone(),
                error: Some(err.to_string()),
                diagnostics: Vec::new(),
            }
        }
    }
}

fn answers_match(got: &[f64], expected: &[f64]) -> bool {
    got.len() == expected.len()
        && got.iter().zip(expected).all(|(a, b)| (a - b).abs() <= 1e-9)
}

fn summarize(problems: Vec<ProblemReport>) -> CorpusReport {
    let total = problems.len();
    let with_expectation = problems.iter().filter(|p| p.expected.is_some()).count();
    let matched = problems.iter().filter(|p| p.status == ProblemStatus::Pass).count();
    CorpusReport { problems, total, with_expectation, matched }
}

/// Solves a batch of problems; order of results matches input order.
pub fn solve_batch(problems: &[String], res: &Resources) -> Vec<Result<Solution, SolveError>> {
    #[cfg(feature = "parallel")]
    {
        problems.par_iter().map(|p| solve(p, res)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        solve_batch_sequential(problems, res)
    }
}

/// Single-threaded batch, kept callable for benchmarking against the
/// parallel path.
pub fn solve_batch_sequential(
    problems: &[String],
    res: &Resources,
) -> Vec<Result<Solution, SolveError>> {
    problems.iter().map(|p| solve(p, res)).collect()
}

pub fn run_corpus(corpus_text: &str, res: &Resources) -> CorpusReport {
    let problems = parse_corpus(corpus_text);
    let texts: Vec<String> = problems.iter().map(|p| p.text.clone()).collect();
    let outcomes = solve_batch(&texts, res);
    summarize(
        problems
            .iter()
            .zip(outcomes)
            .map(|(p, o)| report_one(p, o))
            .collect(),
    )
}

pub fn run_corpus_sequential(corpus_text: &str, res: &Resources) -> CorpusReport {
    let problems = parse_corpus(corpus_text);
    let texts: Vec<String> = problems.iter().map(|p| p.text.clone()).collect();
    let outcomes = solve_batch_sequential(&texts, res);
    summarize(
        problems
            .iter()
            .zip(outcomes)
            .map(|(p, o)| report_one(p, o))
            .collect(),
    )
}
