//! Rewrites a raw problem into self-contained sentence fragments:
//! pronouns replaced by their antecedents, conjunctions broken so each
//! fragment maps to a single verb signature.

mod conjunction;
mod coref;

pub use conjunction::{break_conjunctions, break_to_fixpoint};
pub use coref::{resolve_coreferences, CorefOutcome, Substitution};

/// A problem split into sentences. Declarative terminators are dropped;
/// question sentences keep their `?`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemText {
    pub sentences: Vec<String>,
    pub source: String,
}

impl ProblemText {
    pub fn parse(raw: &str) -> ProblemText {
        let mut sentences = Vec::new();
        let mut current = String::new();
        let chars: Vec<char> = raw.chars().collect();
        for (i, &c) in chars.iter().enumerate() {
            match c {
                '.' => {
                    // keep decimal points inside numbers
                    let prev_digit = i > 0 && chars[i - 1].is_ascii_digit();
                    let next_digit = chars.get(i + 1).is_some_and(|c| c.is_ascii_digit());
                    if prev_digit && next_digit {
                        current.push(c);
                    } else {
                        flush(&mut current, &mut sentences);
                    }
                }
                '!' => flush(&mut current, &mut sentences),
                '?' => {
                    current.push('?');
                    flush(&mut current, &mut sentences);
                }
                c => current.push(c),
            }
        }
        flush(&mut current, &mut sentences);
        ProblemText { sentences, source: raw.to_string() }
    }
}

fn flush(current: &mut String, sentences: &mut Vec<String>) {
    let s = current.trim();
    if !s.is_empty() {
        sentences.push(s.to_string());
    }
    current.clear();
}

/// What a mention is: a proper name or a lexicon-known common noun.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MentionKind {
    PersonName,
    CommonNoun,
}

/// An entity mention located in the problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntityMention {
    pub text: String,
    pub sentence_index: usize,
    pub token_index: usize,
    pub kind: MentionKind,
}
