//! Rule-based coreference: each pronoun is replaced by the text of the
//! most recent preceding subject-position mention. Possessive pronouns
//! become `<entity>'s`. Grammatical gender is ignored.

use serde::Serialize;

use crate::nlp::{is_closed_class, is_pronoun, render, tokenize, TaggerLexicon};

use super::{EntityMention, MentionKind, ProblemText};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Substitution {
    pub sentence_index: usize,
    pub token_index: usize,
    pub pronoun: String,
    pub replacement: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorefOutcome {
    pub problem: ProblemText,
    pub substitutions: Vec<Substitution>,
    /// Mentions found in the input, in document order.
    pub mentions: Vec<EntityMention>,
    pub diagnostics: Vec<String>,
}

/// "her apple" reads as a possessive; "saw her" does not. The pronouns
/// that are unambiguously possessive are always treated as such; for
/// "her" the decision depends on whether a nominal follows.
fn is_possessive_use(pronoun: &str, next: Option<&str>, lexicon: &TaggerLexicon) -> bool {
    let lower = pronoun.to_lowercase();
    match lower.as_str() {
        "his" | "its" | "their" | "hers" | "theirs" => true,
        "her" => next.is_some_and(|w| nominal_follows(w, lexicon)),
        _ => false,
    }
}

fn nominal_follows(word: &str, lexicon: &TaggerLexicon) -> bool {
    if is_closed_class(word) {
        return false;
    }
    match lexicon.lookup(word) {
        Some(("NOUN", _)) | Some(("ADJ", _)) => true,
        Some(_) => false,
        None => word
            .chars()
            .next()
            .is_some_and(|c| c.is_alphabetic() && c.is_lowercase()),
    }
}

/// The subject phrase starting at token `i`: a mention optionally
/// extended through possessive chains ("Pooja 's Mom").
fn subject_phrase(tokens: &[String], i: usize) -> (Vec<String>, usize) {
    let mut phrase = vec![tokens[i].clone()];
    let mut end = i;
    while tokens.get(end + 1).map(String::as_str) == Some("'s")
        && tokens
            .get(end + 2)
            .is_some_and(|w| w.chars().next().is_some_and(char::is_alphabetic))
    {
        phrase.push("'s".to_string());
        phrase.push(tokens[end + 2].clone());
        end += 2;
    }
    (phrase, end)
}

fn mention_kind(
    token: &str,
    token_index: usize,
    lexicon: &TaggerLexicon,
) -> Option<MentionKind> {
    let first_upper = token.chars().next().is_some_and(|c| c.is_uppercase());
    if !first_upper {
        return None;
    }
    if is_pronoun(token) {
        return None;
    }
    // closed-class capitalized words ("The", "How") are not mentions
    if lexicon.lookup(token).is_some_and(|(pos, _)| pos != "NOUN") {
        return None;
    }
    if is_closed_class(token) {
        return None;
    }
    if token_index == 0 {
        if lexicon.is_noun(token) {
            Some(MentionKind::CommonNoun)
        } else {
            Some(MentionKind::PersonName)
        }
    } else {
        Some(MentionKind::PersonName)
    }
}

pub fn resolve_coreferences(problem: &ProblemText, lexicon: &TaggerLexicon) -> CorefOutcome {
    let mut substitutions = Vec::new();
    let mut mentions = Vec::new();
    let mut diagnostics = Vec::new();
    let mut antecedent: Option<Vec<String>> = None;
    let mut out_sentences = Vec::new();

    for (s_idx, sentence) in problem.sentences.iter().enumerate() {
        let tokens = tokenize(sentence);
        let mut rewritten: Vec<String> = Vec::new();
        let mut saw_subject_mention = false;
        let mut i = 0;
        while i < tokens.len() {
            let tok = &tokens[i];
            if is_pronoun(tok) {
                match &antecedent {
                    Some(phrase) => {
                        let possessive =
                            is_possessive_use(tok, tokens.get(i + 1).map(String::as_str), lexicon);
                        let mut replacement = phrase.clone();
                        if possessive {
                            replacement.push("'s".to_string());
                        }
                        substitutions.push(Substitution {
                            sentence_index: s_idx,
                            token_index: i,
                            pronoun: tok.clone(),
                            replacement: render(&replacement),
                        });
                        rewritten.extend(replacement);
                    }
                    None => {
                        diagnostics.push(format!(
                            "unresolved pronoun {tok:?} in sentence {}",
                            s_idx + 1
                        ));
                        rewritten.push(tok.clone());
                    }
                }
                i += 1;
                continue;
            }
            if let Some(kind) = mention_kind(tok, i, lexicon) {
                mentions.push(EntityMention {
                    text: tok.clone(),
                    sentence_index: s_idx,
                    token_index: i,
                    kind,
                });
                if !saw_subject_mention {
                    // first mention of the sentence is its subject candidate
                    let (phrase, end) = subject_phrase(&tokens, i);
                    antecedent = Some(phrase.clone());
                    saw_subject_mention = true;
                    rewritten.extend(phrase);
                    i = end + 1;
                    continue;
                }
            }
            rewritten.push(tok.clone());
            i += 1;
        }
        out_sentences.push(render(&rewritten));
    }

    CorefOutcome {
        problem: ProblemText { sentences: out_sentences, source: problem.source.clone() },
        substitutions,
        mentions,
        diagnostics,
    }
}
