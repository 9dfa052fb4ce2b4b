//! Hand-annotated verb polarity lexicon: positive verbs mean the subject
//! gains, negative verbs mean the subject loses.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Positive,
    Negative,
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Polarity::Positive => f.write_str("positive"),
            Polarity::Negative => f.write_str("negative"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("verb lexicon error at line {line}: {message}")]
pub struct LexiconError {
    pub line: usize,
    pub message: String,
}

/// Mapping from lowercase verb lemma to polarity; no lemma carries both.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerbLexicon {
    entries: BTreeMap<String, Polarity>,
}

impl VerbLexicon {
    /// Parses `verb<TAB>positive|negative` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut entries = BTreeMap::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cols = line.split('\t');
            let (verb, polarity) = match (cols.next(), cols.next(), cols.next()) {
                (Some(v), Some(p), None) => (v, p),
                _ => {
                    return Err(LexiconError {
                        line: lineno,
                        message: format!("expected verb<TAB>positive|negative, found {line:?}"),
                    })
                }
            };
            let polarity = match polarity.trim() {
                "positive" => Polarity::Positive,
                "negative" => Polarity::Negative,
                other => {
                    return Err(LexiconError {
                        line: lineno,
                        message: format!("unknown polarity {other:?}"),
                    })
                }
            };
            let verb = verb.trim().to_lowercase();
            if let Some(existing) = entries.insert(verb.clone(), polarity) {
                if existing != polarity {
                    return Err(LexiconError {
                        line: lineno,
                        message: format!("verb {verb:?} annotated with both polarities"),
                    });
                }
            }
        }
        Ok(VerbLexicon { entries })
    }

    pub fn load(path: &Path) -> Result<Self, LexiconError> {
        let text = std::fs::read_to_string(path).map_err(|e| LexiconError {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        Self::parse(&text)
    }

    pub fn get(&self, lemma: &str) -> Option<Polarity> {
        self.entries.get(&lemma.to_lowercase()).copied()
    }

    /// Entries in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, Polarity)> {
        self.entries.iter().map(|(w, p)| (w.as_str(), *p))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// A copy without one verb, for leave-one-out evaluation.
    pub fn without(&self, verb: &str) -> VerbLexicon {
        let mut entries = self.entries.clone();
        entries.remove(&verb.to_lowercase());
        VerbLexicon { entries }
    }
}

impl FromIterator<(String, Polarity)> for VerbLexicon {
    fn from_iter<I: IntoIterator<Item = (String, Polarity)>>(iter: I) -> Self {
        VerbLexicon {
            entries: iter
                .into_iter()
                .map(|(w, p)| (w.to_lowercase(), p))
                .collect(),
        }
    }
}
