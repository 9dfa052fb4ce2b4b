//! Per-fragment compilation records: what was found, what was chosen,
//! what was emitted. Serialized inside the `--emit json` document.

use serde::Serialize;

use crate::categorize::ScoredWord;
use crate::preprocess::Substitution;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuantifierTrace {
    pub token_index: usize,
    pub text: String,
    /// `None` for the unvalued words many/much.
    pub value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VariablesTrace {
    pub subject: String,
    pub object: String,
    pub combined: String,
    pub indirect: Option<String>,
    pub indirect_combined: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Emission {
    pub quantifier: QuantifierTrace,
    pub head_verb: String,
    pub head_verb_index: usize,
    pub head_verb_lemma: String,
    pub variables: VariablesTrace,
    pub candidates: Vec<String>,
    pub polarity: Option<String>,
    /// "lexicon" or "similarity" when a polarity was needed.
    pub polarity_source: Option<String>,
    pub best_match: Option<String>,
    pub similarities: Vec<ScoredWord>,
    /// A from/to cue on the verb's arcs, recorded but never overriding.
    pub preposition_cue: Option<String>,
    pub signature: String,
    pub command: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FragmentRecord {
    pub fragment: String,
    pub emissions: Vec<Emission>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct CompilationTrace {
    pub records: Vec<FragmentRecord>,
    pub coref_substitutions: Vec<Substitution>,
    pub diagnostics: Vec<String>,
}

impl CompilationTrace {
    pub fn fragment_count(&self) -> usize {
        self.records.len()
    }
}
