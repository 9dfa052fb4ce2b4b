//! Conjunction breaking. One call splits the first conjunction chain of a
//! sentence; `break_to_fixpoint` re-parses the fragments and keeps
//! splitting until none remain.
//!
//! Three shapes are handled:
//! 1. conjoined clauses with their own subjects split into independent
//!    sentences (a clause missing its subject inherits the first one's);
//! 2. conjoined subjects or objects of one verb yield one fragment per
//!    conjunct, each retaining the root verb and the other arguments;
//! 3. conjoined adjectives just lose the conjunction word.

use std::collections::BTreeSet;

use crate::nlp::{is_verb_pos, render, RelationClass, SentenceAnnotation, TagClassConfig};

/// Splits the first conjunction chain, rendering fragments back to plain
/// text. A sentence with no conjunction comes back unchanged as a single
/// fragment.
pub fn break_conjunctions(ann: &SentenceAnnotation) -> Vec<String> {
    break_with(ann, &TagClassConfig::default())
}

pub fn break_with(ann: &SentenceAnnotation, cfg: &TagClassConfig) -> Vec<String> {
    let g = &ann.graph;
    // first conj chain, by head token order
    let mut chain_head: Option<usize> = None;
    for e in g.edges() {
        if e.relation == "conj" && g.head_of(e.head).map(|(_, r)| r) != Some("conj") {
            match chain_head {
                Some(h) if h <= e.head => {}
                _ => chain_head = Some(e.head),
            }
        }
    }
    let Some(first) = chain_head else {
        return vec![ann.original_text.clone()];
    };

    let mut members = vec![first];
    members.extend(
        g.dependents_of(first)
            .into_iter()
            .filter(|(_, rel)| *rel == "conj")
            .map(|(i, _)| i),
    );

    // the conjunction words of this chain
    let cc_tokens: BTreeSet<usize> = members
        .iter()
        .flat_map(|&m| g.dependents_of(m))
        .filter(|(_, rel)| *rel == "cc")
        .map(|(i, _)| i)
        .collect();

    let all: BTreeSet<usize> = (1..=g.len()).collect();
    let skip_conj = |rel: &str| rel == "conj" || rel == "cc";

    // conjoined adjectives: drop the conjunction words, keep everything else
    if members.iter().all(|&m| g.token(m).pos == "ADJ") {
        let keep: Vec<usize> = all.difference(&cc_tokens).copied().collect();
        return vec![render_tokens(ann, &keep)];
    }

    // each member's own material, conj/cc descendants excluded
    let own: Vec<BTreeSet<usize>> = members
        .iter()
        .map(|&m| g.subtree_filtered(m, &skip_conj))
        .collect();

    let clause_split = is_verb_pos(&g.token(first).pos);
    let subject_tokens: Option<BTreeSet<usize>> = if clause_split {
        subject_subtree(ann, first, cfg)
    } else {
        None
    };

    let mut fragments = Vec::new();
    for (idx, &member) in members.iter().enumerate() {
        let mut keep: BTreeSet<usize> = if clause_split && idx > 0 {
            // a later clause stands alone
            let mut set = own[idx].clone();
            set.retain(|i| !cc_tokens.contains(i));
            // fill a missing subject from the first clause
            let has_subject = g.dependents_of(member).into_iter().any(|(_, rel)| {
                cfg.classify(rel) == RelationClass::SubjectLike
            });
            if !has_subject {
                if let Some(subj) = &subject_tokens {
                    set.extend(subj.iter().copied());
                }
            }
            set
        } else {
            // the sentence minus the other conjuncts
            let mut set = all.clone();
            for (j, other) in own.iter().enumerate() {
                if j != idx {
                    set.retain(|i| !other.contains(i));
                }
            }
            set.retain(|i| !cc_tokens.contains(i));
            set
        };
        // terminal punctuation stays with no fragment
        keep.retain(|&i| g.token(i).pos != "PUNCT");
        let keep: Vec<usize> = keep.into_iter().collect();
        fragments.push(render_tokens(ann, &keep));
    }
    fragments
}

fn subject_subtree(
    ann: &SentenceAnnotation,
    verb: usize,
    cfg: &TagClassConfig,
) -> Option<BTreeSet<usize>> {
    let g = &ann.graph;
    let subj = g
        .dependents_of(verb)
        .into_iter()
        .find(|(_, rel)| cfg.classify(rel) == RelationClass::SubjectLike)?;
    Some(g.subtree_filtered(subj.0, &|rel| rel == "conj" || rel == "cc"))
}

fn render_tokens(ann: &SentenceAnnotation, keep: &[usize]) -> String {
    let texts: Vec<&str> = keep
        .iter()
        .map(|&i| ann.graph.token(i).text.as_str())
        .collect();
    render(&texts)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixpointError<E> {
    #[error("fragment {fragment:?} failed to re-parse: {source}")]
    Reparse { fragment: String, source: E },
    #[error("conjunction breaking did not converge after {0} rounds")]
    NoConvergence(usize),
}

const MAX_ROUNDS: usize = 16;

/// Splits until no fragment changes, re-parsing each new fragment with
/// the supplied function. Fragments come back in sentence order.
pub fn break_to_fixpoint<E, F>(
    ann: &SentenceAnnotation,
    cfg: &TagClassConfig,
    reparse: F,
) -> Result<Vec<(String, SentenceAnnotation)>, FixpointError<E>>
where
    F: Fn(&str) -> Result<SentenceAnnotation, E>,
{
    let mut work: Vec<(String, SentenceAnnotation)> =
        vec![(ann.original_text.clone(), ann.clone())];
    for _ in 0..MAX_ROUNDS {
        let mut next: Vec<(String, SentenceAnnotation)> = Vec::new();
        let mut changed = false;
        for (text, ann) in work {
            let fragments = break_with(&ann, cfg);
            if fragments.len() == 1 && fragments[0] == text {
                next.push((text, ann));
                continue;
            }
            changed = true;
            for fragment in fragments {
                let parsed = reparse(&fragment).map_err(|source| FixpointError::Reparse {
                    fragment: fragment.clone(),
                    source,
                })?;
                next.push((fragment, parsed));
            }
        }
        work = next;
        if !changed {
            return Ok(work);
        }
    }
    Err(FixpointError::NoConvergence(MAX_ROUNDS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nlp::{tag_and_parse, tokenize, TaggerLexicon};

    fn parse(text: &str) -> SentenceAnnotation {
        tag_and_parse(&tokenize(text), TaggerLexicon::builtin())
            .unwrap_or_else(|e| panic!("failed to parse {text:?}: {e}"))
    }

    #[test]
    fn splits_shared_subject_objects() {
        let got = break_conjunctions(&parse("Pooja has two apples and three oranges"));
        assert_eq!(got, vec!["Pooja has two apples", "Pooja has three oranges"]);
    }

    #[test]
    fn splits_independent_clauses() {
        let got = break_conjunctions(&parse("Pooja has two apples and John has one apple"));
        assert_eq!(got, vec!["Pooja has two apples", "John has one apple"]);
    }

    #[test]
    fn no_conjunction_returns_the_sentence() {
        let got = break_conjunctions(&parse("Pooja eats one apple"));
        assert_eq!(got, vec!["Pooja eats one apple"]);
    }

    #[test]
    fn deletes_conjunctions_between_adjectives() {
        let got = break_conjunctions(&parse("Pooja found the red and green apple"));
        assert_eq!(got, vec!["Pooja found the red green apple"]);
    }

    #[test]
    fn fills_missing_subject_in_verb_conjunction() {
        let got = break_conjunctions(&parse("Pooja bought three apples and ate two apples"));
        assert_eq!(got, vec!["Pooja bought three apples", "Pooja ate two apples"]);
    }

    #[test]
    fn splits_conjoined_subjects() {
        let got = break_conjunctions(&parse("Pooja and John have two apples"));
        assert_eq!(got, vec!["Pooja have two apples", "John have two apples"]);
    }

    #[test]
    fn fixpoint_handles_nested_conjunctions() {
        let cfg = TagClassConfig::default();
        let reparse = |text: &str| tag_and_parse(&tokenize(text), TaggerLexicon::builtin());
        let ann = parse("Pooja and John have two apples and three oranges");
        let got = break_to_fixpoint(&ann, &cfg, reparse).unwrap();
        let texts: Vec<&str> = got.iter().map(|(t, _)| t.as_str()).collect();
        assert_eq!(
            texts,
            vec![
                "Pooja have two apples",
                "Pooja have three oranges",
                "John have two apples",
                "John have three oranges",
            ]
        );
    }

    #[test]
    fn fragments_lose_at_least_one_conjunction() {
        for text in [
            "Pooja has two apples and three oranges",
            "Pooja has two apples and John has one apple",
            "Pooja and John have two apples",
        ] {
            let ann = parse(text);
            let count = |s: &str| tokenize(s).iter().filter(|t| *t == "and").count();
            let before = count(text);
            for frag in break_conjunctions(&ann) {
                assert!(count(&frag) < before, "{frag:?} kept all conjunctions");
            }
        }
    }

    #[test]
    fn every_fragment_reparses_with_one_root_verb() {
        let cfg = TagClassConfig::default();
        let reparse = |text: &str| tag_and_parse(&tokenize(text), TaggerLexicon::builtin());
        for text in [
            "Pooja has two apples and three oranges",
            "Pooja has two apples and John has one apple",
            "Pooja bought three apples and ate two apples",
        ] {
            let got = break_to_fixpoint(&parse(text), &cfg, reparse).unwrap();
            for (frag, ann) in got {
                let verbs = ann
                    .graph
                    .tokens()
                    .iter()
                    .filter(|t| is_verb_pos(&t.pos))
                    .count();
                assert_eq!(verbs, 1, "fragment {frag:?} has {verbs} verbs");
            }
        }
    }
}
