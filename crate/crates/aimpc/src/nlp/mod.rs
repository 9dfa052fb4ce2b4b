//! Token, part-of-speech and dependency-graph annotations, sourced either
//! from CoNLL-U files or from the built-in restricted-domain tagger and
//! parser, plus the generalization of dependency labels into the argument
//! classes the heuristics read.

mod conllu;
mod tagger;
mod tokenize;

pub use conllu::{load_conllu, serialize_annotation, FormatError};
pub use tagger::{
    is_closed_class, is_possessive_pronoun, is_pronoun, tag_and_parse, LexiconFormatError,
    TaggerLexicon, UnsupportedSentence,
};
pub use tokenize::{render, tokenize};

use std::collections::{BTreeMap, BTreeSet};

/// One word of a sentence. `index` is 1-based, as in CoNLL-U.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub index: usize,
    pub text: String,
    pub lemma: String,
    pub pos: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepEdge {
    pub head: usize,
    pub dependent: usize,
    pub relation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("token index {0} out of range")]
    BadIndex(usize),
    #[error("token {0} has more than one head")]
    MultipleHeads(usize),
    #[error("token {0} has no head and is not the root")]
    MissingHead(usize),
    #[error("root {0} must not have a head")]
    RootHasHead(usize),
    #[error("dependency graph contains a cycle through token {0}")]
    Cycle(usize),
    #[error("sentence has no tokens")]
    Empty,
}

/// A dependency parse: each token except the root depends on exactly one
/// head via a labeled relation, and the head links are acyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepGraph {
    tokens: Vec<Token>,
    edges: Vec<DepEdge>,
    root: usize,
    head_of: BTreeMap<usize, (usize, String)>,
}

impl DepGraph {
    pub fn new(tokens: Vec<Token>, edges: Vec<DepEdge>, root: usize) -> Result<Self, GraphError> {
        if tokens.is_empty() {
            return Err(GraphError::Empty);
        }
        let n = tokens.len();
        let valid = |i: usize| i >= 1 && i <= n;
        if !valid(root) {
            return Err(GraphError::BadIndex(root));
        }
        let mut head_of: BTreeMap<usize, (usize, String)> = BTreeMap::new();
        for e in &edges {
            if !valid(e.head) {
                return Err(GraphError::BadIndex(e.head));
            }
            if !valid(e.dependent) {
                return Err(GraphError::BadIndex(e.dependent));
            }
            if e.dependent == root {
                return Err(GraphError::RootHasHead(root));
            }
            if head_of
                .insert(e.dependent, (e.head, e.relation.clone()))
                .is_some()
            {
                return Err(GraphError::MultipleHeads(e.dependent));
            }
        }
        for i in 1..=n {
            if i != root && !head_of.contains_key(&i) {
                return Err(GraphError::MissingHead(i));
            }
        }
        // Every head chain must reach the root without revisiting a node.
        for start in 1..=n {
            let mut seen = BTreeSet::new();
            let mut cur = start;
            while cur != root {
                if !seen.insert(cur) {
                    return Err(GraphError::Cycle(cur));
                }
                cur = head_of[&cur].0;
            }
        }
        Ok(DepGraph { tokens, edges, root, head_of })
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn token(&self, index: usize) -> &Token {
        &self.tokens[index - 1]
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edges(&self) -> &[DepEdge] {
        &self.edges
    }

    pub fn head_of(&self, index: usize) -> Option<(usize, &str)> {
        self.head_of.get(&index).map(|(h, r)| (*h, r.as_str()))
    }

    /// Direct dependents of `head`, in token order.
    pub fn dependents_of(&self, head: usize) -> Vec<(usize, &str)> {
        let mut deps: Vec<(usize, &str)> = self
            .edges
            .iter()
            .filter(|e| e.head == head)
            .map(|e| (e.dependent, e.relation.as_str()))
            .collect();
        deps.sort_by_key(|(i, _)| *i);
        deps
    }

    /// The token set reachable from `index` through dependent links,
    /// including `index` itself. `skip` filters edges by relation: an edge
    /// whose relation makes `skip` return true is not traversed.
    pub fn subtree_filtered(&self, index: usize, skip: &dyn Fn(&str) -> bool) -> BTreeSet<usize> {
        let mut set = BTreeSet::new();
        let mut stack = vec![index];
        while let Some(i) = stack.pop() {
            if !set.insert(i) {
                continue;
            }
            for (dep, rel) in self.dependents_of(i) {
                if !skip(rel) {
                    stack.push(dep);
                }
            }
        }
        set
    }

    pub fn subtree(&self, index: usize) -> BTreeSet<usize> {
        self.subtree_filtered(index, &|_| false)
    }
}

/// A sentence with its dependency annotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentenceAnnotation {
    pub original_text: String,
    pub graph: DepGraph,
}

/// The generalized argument classes the heuristics work with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationClass {
    SubjectLike,
    DirectObjectLike,
    IndirectObjectLike,
    ModifierLike,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("relation label {label:?} appears in more than one tag class")]
pub struct OverlappingClasses {
    pub label: String,
}

/// Which dependency labels count as subject-, direct-object-,
/// indirect-object- and modifier-like. The defaults cover both Universal
/// Dependencies and the older Stanford label inventory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TagClassConfig {
    subject_like: BTreeSet<String>,
    direct_object_like: BTreeSet<String>,
    indirect_object_like: BTreeSet<String>,
    modifier_like: BTreeSet<String>,
}

impl Default for TagClassConfig {
    fn default() -> Self {
        let set = |labels: &[&str]| labels.iter().map(|s| s.to_string()).collect();
        TagClassConfig {
            subject_like: set(&["nsubj", "nsubj:pass", "nsubjpass"]),
            direct_object_like: set(&["dobj", "obj"]),
            indirect_object_like: set(&[
                "iobj", "nmod", "obl", "nmod:to", "nmod:from", "obl:to", "obl:from",
            ]),
            modifier_like: set(&["nmod:poss", "poss", "amod", "compound", "nn"]),
        }
    }
}

impl TagClassConfig {
    pub fn new(
        subject_like: BTreeSet<String>,
        direct_object_like: BTreeSet<String>,
        indirect_object_like: BTreeSet<String>,
        modifier_like: BTreeSet<String>,
    ) -> Result<Self, OverlappingClasses> {
        let cfg = TagClassConfig {
            subject_like,
            direct_object_like,
            indirect_object_like,
            modifier_like,
        };
        cfg.check_disjoint()?;
        Ok(cfg)
    }

    fn check_disjoint(&self) -> Result<(), OverlappingClasses> {
        let sets = [
            &self.subject_like,
            &self.direct_object_like,
            &self.indirect_object_like,
            &self.modifier_like,
        ];
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        for set in sets {
            for label in set.iter() {
                if !seen.insert(label) {
                    return Err(OverlappingClasses { label: label.clone() });
                }
            }
        }
        Ok(())
    }

    pub fn classify(&self, label: &str) -> RelationClass {
        if self.subject_like.contains(label) {
            RelationClass::SubjectLike
        } else if self.direct_object_like.contains(label) {
            RelationClass::DirectObjectLike
        } else if self.indirect_object_like.contains(label) {
            RelationClass::IndirectObjectLike
        } else if self.modifier_like.contains(label) {
            RelationClass::ModifierLike
        } else {
            RelationClass::Other
        }
    }
}

/// Membership lookup of a dependency label in the four generalized classes.
pub fn classify_relation(label: &str, cfg: &TagClassConfig) -> RelationClass {
    cfg.classify(label)
}

/// True for the parts of speech the head-verb walk stops at: Universal
/// `VERB` and the Penn `VB*` family.
pub fn is_verb_pos(pos: &str) -> bool {
    pos == "VERB" || pos.starts_with("VB")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tok(index: usize, text: &str, pos: &str) -> Token {
        Token {
            index,
            text: text.to_string(),
            lemma: text.to_lowercase(),
            pos: pos.to_string(),
        }
    }

    fn edge(head: usize, dependent: usize, relation: &str) -> DepEdge {
        DepEdge { head, dependent, relation: relation.to_string() }
    }

    #[test]
    fn graph_validates_single_head_and_acyclicity() {
        let tokens = vec![tok(1, "Pooja", "PROPN"), tok(2, "has", "VERB"), tok(3, "apples", "NOUN")];
        let ok = DepGraph::new(
            tokens.clone(),
            vec![edge(2, 1, "nsubj"), edge(2, 3, "dobj")],
            2,
        );
        assert!(ok.is_ok());

        let multi = DepGraph::new(
            tokens.clone(),
            vec![edge(2, 1, "nsubj"), edge(3, 1, "dep"), edge(2, 3, "dobj")],
            2,
        );
        assert_eq!(multi.unwrap_err(), GraphError::MultipleHeads(1));

        let cyclic = DepGraph::new(
            tokens.clone(),
            vec![edge(3, 1, "nsubj"), edge(1, 3, "dobj")],
            2,
        );
        assert!(matches!(cyclic.unwrap_err(), GraphError::Cycle(_)));

        let headless = DepGraph::new(tokens, vec![edge(2, 1, "nsubj")], 2);
        assert_eq!(headless.unwrap_err(), GraphError::MissingHead(3));
    }

    #[test]
    fn default_classes_cover_both_label_inventories() {
        let cfg = TagClassConfig::default();
        assert_eq!(classify_relation("nsubj", &cfg), RelationClass::SubjectLike);
        assert_eq!(classify_relation("dobj", &cfg), RelationClass::DirectObjectLike);
        assert_eq!(classify_relation("obj", &cfg), RelationClass::DirectObjectLike);
        assert_eq!(classify_relation("nmod", &cfg), RelationClass::IndirectObjectLike);
        assert_eq!(classify_relation("iobj", &cfg), RelationClass::IndirectObjectLike);
        assert_eq!(classify_relation("nmod:poss", &cfg), RelationClass::ModifierLike);
        assert_eq!(classify_relation("amod", &cfg), RelationClass::ModifierLike);
        assert_eq!(classify_relation("punct", &cfg), RelationClass::Other);
        assert_eq!(classify_relation("nummod", &cfg), RelationClass::Other);
    }

    #[test]
    fn overlapping_classes_are_rejected() {
        let s: BTreeSet<String> = ["nsubj".to_string()].into_iter().collect();
        let err = TagClassConfig::new(s.clone(), s, BTreeSet::new(), BTreeSet::new());
        assert!(err.is_err());
    }

    #[test]
    fn subtree_respects_edge_filter() {
        let tokens = vec![
            tok(1, "two", "NUM"),
            tok(2, "apples", "NOUN"),
            tok(3, "and", "CCONJ"),
            tok(4, "three", "NUM"),
            tok(5, "oranges", "NOUN"),
        ];
        let edges = vec![
            edge(2, 1, "nummod"),
            edge(5, 3, "cc"),
            edge(5, 4, "nummod"),
            edge(2, 5, "conj"),
        ];
        let g = DepGraph::new(tokens, edges, 2).unwrap();
        assert_eq!(g.subtree(2), [1, 2, 3, 4, 5].into_iter().collect());
        let own = g.subtree_filtered(2, &|rel| rel == "conj" || rel == "cc");
        assert_eq!(own, [1, 2].into_iter().collect());
    }
}
