//! Verb polarity classification. A verb annotated in the lexicon keeps
//! its annotation; an unseen verb takes the polarity of the
//! highest-cosine lexicon verb in the embedding table. Ties break toward
//! positive, then the lexicographically smallest word.

use serde::Serialize;

use super::embedding::{cosine_similarity, EmbeddingTable};
use super::lexicon::{Polarity, VerbLexicon};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ClassifyError {
    #[error("verb {lemma:?} not present in the embedding table")]
    UnknownVerb { lemma: String },
    #[error("no lexicon verb present in the embedding table")]
    NoLexiconOverlap,
}

/// A scored lexicon candidate, for tracing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoredWord {
    pub word: String,
    pub polarity: Polarity,
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Classification {
    pub polarity: Polarity,
    /// `None` when the lexicon answered directly.
    pub best_match: Option<String>,
    pub scores: Vec<ScoredWord>,
}

/// Classifies a verb lemma. Lexicon membership short-circuits; otherwise
/// the nearest lexicon verb by cosine similarity decides.
pub fn classify_verb(
    lemma: &str,
    lexicon: &VerbLexicon,
    embeddings: &EmbeddingTable,
) -> Result<Classification, ClassifyError> {
    let lemma_lower = lemma.to_lowercase();
    if let Some(polarity) = lexicon.get(&lemma_lower) {
        return Ok(Classification { polarity, best_match: None, scores: Vec::new() });
    }
    let query = embeddings
        .get(&lemma_lower)
        .ok_or(ClassifyError::UnknownVerb { lemma: lemma_lower.clone() })?;
    classify_vector(query, lexicon, embeddings)
}

/// Classifies a raw query vector against the lexicon verbs present in
/// the embedding table.
pub fn classify_vector(
    query: &[f64],
    lexicon: &VerbLexicon,
    embeddings: &EmbeddingTable,
) -> Result<Classification, ClassifyError> {
    let mut scores = Vec::new();
    let mut best: Option<(f64, Polarity, String)> = None;
    for (word, polarity) in lexicon.iter() {
        let Some(vector) = embeddings.get(word) else {
            continue;
        };
        let score = cosine_similarity(query, vector).map_err(|_| ClassifyError::NoLexiconOverlap)?;
        scores.push(ScoredWord { word: word.to_string(), polarity, score });
        let wins = match &best {
            None => true,
            Some((best_score, best_pol, _)) => {
                score > *best_score
                    || (score == *best_score
                        && polarity == Polarity::Positive
                        && *best_pol == Polarity::Negative)
            }
        };
        if wins {
            best = Some((score, polarity, word.to_string()));
        }
    }
    match best {
        Some((_, polarity, word)) => {
            Ok(Classification { polarity, best_match: Some(word), scores })
        }
        None => Err(ClassifyError::NoLexiconOverlap),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(entries: &[(&str, Vec<f64>)]) -> EmbeddingTable {
        EmbeddingTable::from_entries(
            entries[0].1.len(),
            entries.iter().map(|(w, v)| (w.to_string(), v.clone())),
        )
        .unwrap()
    }

    fn lex(entries: &[(&str, Polarity)]) -> VerbLexicon {
        entries
            .iter()
            .map(|(w, p)| (w.to_string(), *p))
            .collect()
    }

    #[test]
    fn annotated_verb_short_circuits() {
        let lexicon = lex(&[("eat", Polarity::Negative)]);
        let embeddings = table(&[("eat", vec![1.0, 0.0])]);
        let got = classify_verb("eat", &lexicon, &embeddings).unwrap();
        assert_eq!(got.polarity, Polarity::Negative);
        assert_eq!(got.best_match, None);
        assert!(got.scores.is_empty());
    }

    #[test]
    fn nearest_lexicon_verb_wins() {
        let lexicon = lex(&[("get", Polarity::Positive), ("lose", Polarity::Negative)]);
        let embeddings = table(&[
            ("get", vec![1.0, 0.0]),
            ("lose", vec![0.0, 1.0]),
            ("grab", vec![0.9, 0.1]),
        ]);
        let got = classify_verb("grab", &lexicon, &embeddings).unwrap();
        assert_eq!(got.polarity, Polarity::Positive);
        assert_eq!(got.best_match.as_deref(), Some("get"));
        assert_eq!(got.scores.len(), 2);
    }

    #[test]
    fn unknown_verb_is_an_error() {
        let lexicon = lex(&[("get", Polarity::Positive)]);
        let embeddings = table(&[("get", vec![1.0, 0.0])]);
        assert_eq!(
            classify_verb("warp", &lexicon, &embeddings).unwrap_err(),
            ClassifyError::UnknownVerb { lemma: "warp".to_string() }
        );
    }

    #[test]
    fn no_overlap_is_an_error() {
        let lexicon = lex(&[("get", Polarity::Positive)]);
        let embeddings = table(&[("grab", vec![1.0, 0.0])]);
        assert_eq!(
            classify_verb("grab", &lexicon, &embeddings).unwrap_err(),
            ClassifyError::NoLexiconOverlap
        );
    }

    #[test]
    fn exact_ties_prefer_positive_then_lexicographic() {
        // two lexicon verbs share one vector: an exact tie
        let shared = vec![1.0, 0.0];
        let lexicon = lex(&[("zap", Polarity::Negative), ("add", Polarity::Positive)]);
        let embeddings = table(&[
            ("zap", shared.clone()),
            ("add", shared.clone()),
            ("query", shared.clone()),
        ]);
        let got = classify_verb("query", &lexicon, &embeddings).unwrap();
        assert_eq!(got.polarity, Polarity::Positive);
        assert_eq!(got.best_match.as_deref(), Some("add"));

        // all-positive tie: lexicographically first wins
        let lexicon = lex(&[("zeta", Polarity::Positive), ("alpha", Polarity::Positive)]);
        let embeddings = table(&[
            ("zeta", shared.clone()),
            ("alpha", shared.clone()),
            ("query", shared),
        ]);
        let got = classify_verb("query", &lexicon, &embeddings).unwrap();
        assert_eq!(got.best_match.as_deref(), Some("alpha"));
    }

    #[test]
    fn scale_invariance_of_the_choice() {
        let lexicon = lex(&[("get", Polarity::Positive), ("lose", Polarity::Negative)]);
        let embeddings = table(&[
            ("get", vec![0.8, 0.6, 0.0]),
            ("lose", vec![0.0, 0.6, 0.8]),
        ]);
        let query = vec![0.5, 0.2, 0.3];
        let scaled: Vec<f64> = query.iter().map(|x| x * 37.5).collect();
        let a = classify_vector(&query, &lexicon, &embeddings).unwrap();
        let b = classify_vector(&scaled, &lexicon, &embeddings).unwrap();
        assert_eq!(a.best_match, b.best_match);
        assert_eq!(a.polarity, b.polarity);
    }
}
