//! Quantifier detection and the walk from a quantifier to its head verb.

use crate::nlp::{is_verb_pos, DepGraph, SentenceAnnotation};

use super::numwords::NumberWords;

/// A token denoting a quantity. `value` is `None` exactly for the
/// unvalued words "many" and "much".
#[derive(Debug, Clone, PartialEq)]
pub struct Quantifier {
    pub token_index: usize,
    pub value: Option<f64>,
}

/// Numeric literals, number words, and the unvalued many/much, in token
/// order. Adjacent tens+unit words ("twenty one") merge into one
/// quantifier at the first token; an article directly before a number
/// word ("a dozen") defers to it.
pub fn find_quantifiers(ann: &SentenceAnnotation, numwords: &NumberWords) -> Vec<Quantifier> {
    let tokens = ann.graph.tokens();
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let text = tokens[i].text.as_str();
        let lower = text.to_lowercase();
        let next_lower = tokens.get(i + 1).map(|t| t.text.to_lowercase());

        if let Ok(v) = lower.parse::<f64>() {
            if v.is_finite() && v >= 0.0 {
                out.push(Quantifier { token_index: tokens[i].index, value: Some(v) });
                i += 1;
                continue;
            }
        }
        if lower == "many" || lower == "much" {
            out.push(Quantifier { token_index: tokens[i].index, value: None });
            i += 1;
            continue;
        }
        if numwords.is_tens(&lower)
            && next_lower.as_deref().is_some_and(|w| numwords.is_unit(w))
        {
            let tens = numwords.lookup(&lower).unwrap();
            let unit = numwords.lookup(next_lower.as_deref().unwrap()).unwrap();
            out.push(Quantifier { token_index: tokens[i].index, value: Some(tens + unit) });
            i += 2;
            continue;
        }
        if numwords.is_article(&lower)
            && next_lower.as_deref().is_some_and(|w| numwords.contains(w))
        {
            // "a dozen": the article yields to the number word
            i += 1;
            continue;
        }
        if let Some(v) = numwords.lookup(&lower) {
            out.push(Quantifier { token_index: tokens[i].index, value: Some(v) });
            i += 1;
            continue;
        }
        i += 1;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("no verb found on the head path from token {quantifier_index}")]
pub struct NoVerbFound {
    pub quantifier_index: usize,
}

/// Walks head links upward from the quantifier and returns the first
/// token tagged as a verb.
pub fn head_verb_of(q: &Quantifier, graph: &DepGraph) -> Result<usize, NoVerbFound> {
    let mut cur = q.token_index;
    while let Some((head, _)) = graph.head_of(cur) {
        if is_verb_pos(&graph.token(head).pos) {
            return Ok(head);
        }
        cur = head;
    }
    Err(NoVerbFound { quantifier_index: q.token_index })
}
