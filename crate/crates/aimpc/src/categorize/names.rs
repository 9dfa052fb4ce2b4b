//! Variable-name inference: the subject-like dependent of the verb and
//! its modifier-like descendants form the subject part, the
//! direct-object-like dependent forms the object part, and the two join
//! with an underscore. Transfers get a second variable from the
//! indirect-object-like dependent and the same object noun.

use std::fmt;

use crate::aimp::Address;
use crate::nlp::{DepGraph, RelationClass, TagClassConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgumentKind {
    Subject,
    Object,
    Indirect,
}

impl fmt::Display for ArgumentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ArgumentKind::Subject => "subject",
            ArgumentKind::Object => "object",
            ArgumentKind::Indirect => "indirect object",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("verb at token {verb_index} has no usable {kind}")]
pub struct MissingArgument {
    pub kind: ArgumentKind,
    pub verb_index: usize,
}

/// All names inferred around one verb. `indirect*` fields are present
/// only when the verb has an indirect-object-like dependent.
#[derive(Debug, Clone, PartialEq)]
pub struct InferredNames {
    pub subject: String,
    pub object: String,
    pub combined: Address,
    pub indirect: Option<String>,
    pub indirect_combined: Option<Address>,
}

/// The spec'd three-part result: subject part, object part, and the
/// combined address.
pub fn infer_variable_name(
    verb: usize,
    graph: &DepGraph,
    cfg: &TagClassConfig,
) -> Result<(String, String, Address), MissingArgument> {
    let names = infer_names(verb, graph, cfg)?;
    Ok((names.subject, names.object, names.combined))
}

pub fn infer_names(
    verb: usize,
    graph: &DepGraph,
    cfg: &TagClassConfig,
) -> Result<InferredNames, MissingArgument> {
    let missing = |kind| MissingArgument { kind, verb_index: verb };

    let subject_head = dependent_of_class(verb, graph, cfg, RelationClass::SubjectLike)
        .ok_or(missing(ArgumentKind::Subject))?;
    let object_head = dependent_of_class(verb, graph, cfg, RelationClass::DirectObjectLike)
        .ok_or(missing(ArgumentKind::Object))?;

    let subject =
        phrase_name(subject_head, graph, cfg, false).ok_or(missing(ArgumentKind::Subject))?;
    let object =
        phrase_name(object_head, graph, cfg, true).ok_or(missing(ArgumentKind::Object))?;

    let combined = join_address(&subject, &object).ok_or(missing(ArgumentKind::Object))?;

    let indirect_head = dependent_of_class(verb, graph, cfg, RelationClass::IndirectObjectLike);
    let (indirect, indirect_combined) = match indirect_head {
        Some(head) => {
            let part = phrase_name(head, graph, cfg, false)
                .ok_or(missing(ArgumentKind::Indirect))?;
            let addr =
                join_address(&part, &object).ok_or(missing(ArgumentKind::Indirect))?;
            (Some(part), Some(addr))
        }
        None => (None, None),
    };

    Ok(InferredNames { subject, object, combined, indirect, indirect_combined })
}

/// First direct dependent of `verb` (in token order) whose relation falls
/// in `class`.
pub fn dependent_of_class(
    verb: usize,
    graph: &DepGraph,
    cfg: &TagClassConfig,
    class: RelationClass,
) -> Option<usize> {
    graph
        .dependents_of(verb)
        .into_iter()
        .find(|(_, rel)| cfg.classify(rel) == class)
        .map(|(i, _)| i)
}

/// Builds the underscore-joined name for the phrase headed at `head`:
/// modifier-like words from the whole subtree plus the head itself, in
/// token order, lowercased. The head contributes its lemma when
/// `lemmatize_head` is set (object nouns come out singular).
fn phrase_name(
    head: usize,
    graph: &DepGraph,
    cfg: &TagClassConfig,
    lemmatize_head: bool,
) -> Option<String> {
    let mut parts: Vec<(usize, String)> = Vec::new();
    let head_text = if lemmatize_head {
        graph.token(head).lemma.clone()
    } else {
        graph.token(head).text.clone()
    };
    parts.push((head, head_text));
    collect_modifiers(head, graph, cfg, &mut parts);
    parts.sort_by_key(|(i, _)| *i);

    let words: Vec<String> = parts
        .into_iter()
        .filter_map(|(_, text)| sanitize(&text))
        .collect();
    if words.is_empty() {
        return None;
    }
    Some(words.join("_"))
}

fn collect_modifiers(
    node: usize,
    graph: &DepGraph,
    cfg: &TagClassConfig,
    parts: &mut Vec<(usize, String)>,
) {
    for (dep, rel) in graph.dependents_of(node) {
        if cfg.classify(rel) == RelationClass::ModifierLike
            && !is_unvalued_quantifier(&graph.token(dep).text)
        {
            parts.push((dep, graph.token(dep).text.clone()));
        }
        collect_modifiers(dep, graph, cfg, parts);
    }
}

// Some parsers attach the question words many/much with a modifier label;
// they are quantifiers and never belong in a variable name.
fn is_unvalued_quantifier(text: &str) -> bool {
    let lower = text.to_lowercase();
    lower == "many" || lower == "much"
}

/// Lowercases and strips anything outside `[a-z0-9_]`, dropping leading
/// characters that cannot open an identifier.
fn sanitize(text: &str) -> Option<String> {
    let mut out = String::new();
    for c in text.to_lowercase().chars() {
        match c {
            'a'..='z' => out.push(c),
            '0'..='9' | '_' if !out.is_empty() => out.push(c),
            _ => {}
        }
    }
    if out.is_empty() {
        None
    } else {
        Some(out)
    }
}

fn join_address(subject: &str, object: &str) -> Option<Address> {
    Address::new(format!("{subject}_{object}")).ok()
}
