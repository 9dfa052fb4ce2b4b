//! Leave-one-out evaluation of the similarity classifier: each lexicon
//! verb is removed, classified against the rest, and compared to its
//! annotation. Accuracy is reported, not asserted anywhere.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use std::fmt::Write as _;

use serde::Serialize;

use super::classify::classify_vector;
use super::embedding::EmbeddingTable;
use super::lexicon::{Polarity, VerbLexicon};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LooRow {
    pub verb: String,
    pub annotated: Polarity,
    /// `None` when the verb has no embedding or nothing remains to
    /// compare against.
    pub predicted: Option<Polarity>,
    pub best_match: Option<String>,
    pub score: Option<f64>,
}

impl LooRow {
    pub fn correct(&self) -> Option<bool> {
        self.predicted.map(|p| p == self.annotated)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LooReport {
    pub rows: Vec<LooRow>,
    pub evaluated: usize,
    pub correct: usize,
}

impl LooReport {
    pub fn accuracy(&self) -> f64 {
        if self.evaluated == 0 {
            return 0.0;
        }
        self.correct as f64 / self.evaluated as f64
    }

    /// Canonical text form; identical runs must render identically.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let predicted = match row.predicted {
                Some(p) => p.to_string(),
                None => "none".to_string(),
            };
            let best = row.best_match.as_deref().unwrap_or("-");
            let score = match row.score {
                Some(s) => format!("{s:?}"),
                None => "-".to_string(),
            };
            let mark = match row.correct() {
                Some(true) => "correct",
                Some(false) => "wrong",
                None => "skipped",
            };
            let _ = writeln!(
                out,
                "{}\tannotated={}\tpredicted={}\tbest={}\tscore={}\t{}",
                row.verb, row.annotated, predicted, best, score, mark
            );
        }
        let _ = writeln!(
            out,
            "accuracy\t{}/{}\t{:.4}",
            self.correct,
            self.evaluated,
            self.accuracy()
        );
        out
    }
}

fn evaluate_verb(verb: &str, annotated: Polarity, lexicon: &VerbLexicon, embeddings: &EmbeddingTable) -> LooRow {
    let Some(query) = embeddings.get(verb) else {
        return LooRow {
            verb: verb.to_string(),
            annotated,
            predicted: None,
            best_match: None,
            score: None,
        };
    };
    let reduced = lexicon.without(verb);
    match classify_vector(query, &reduced, embeddings) {
        Ok(c) => {
            let score = c
                .best_match
                .as_ref()
                .and_then(|w| c.scores.iter().find(|s| &s.word == w))
                .map(|s| s.score);
            LooRow {
                verb: verb.to_string(),
                annotated,
                predicted: Some(c.polarity),
                best_match: c.best_match,
                score,
            }
        }
        Err(_) => LooRow {
            verb: verb.to_string(),
            annotated,
            predicted: None,
            best_match: None,
            score: None,
        },
    }
}

fn summarize(rows: Vec<LooRow>) -> LooReport {
    let evaluated = rows.iter().filter(|r| r.predicted.is_some()).count();
    let correct = rows.iter().filter(|r| r.correct() == Some(true)).count();
    LooReport { rows, evaluated, correct }
}

/// Evaluates every lexicon verb, in lexicographic order.
pub fn leave_one_out_report(lexicon: &VerbLexicon, embeddings: &EmbeddingTable) -> LooReport {
    let verbs: Vec<(String, Polarity)> =
        lexicon.iter().map(|(w, p)| (w.to_string(), p)).collect();
    #[cfg(feature = "parallel")]
    let rows: Vec<LooRow> = verbs
        .par_iter()
        .map(|(w, p)| evaluate_verb(w, *p, lexicon, embeddings))
        .collect();
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<LooRow> = verbs
        .iter()
        .map(|(w, p)| evaluate_verb(w, *p, lexicon, embeddings))
        .collect();
    summarize(rows)
}

/// Single-threaded variant; the report is identical to the parallel one.
pub fn leave_one_out_report_sequential(
    lexicon: &VerbLexicon,
    embeddings: &EmbeddingTable,
) -> LooReport {
    let rows: Vec<LooRow> = lexicon
        .iter()
        .map(|(w, p)| evaluate_verb(w, p, lexicon, embeddings))
        .collect();
    summarize(rows)
}
