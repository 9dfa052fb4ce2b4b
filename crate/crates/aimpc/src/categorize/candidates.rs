//! Heuristic candidate selection and signature assembly.
//!
//! The decision tree, in order: a question mark plus an unvalued
//! quantifier selects `get`; an undeclared variable selects
//! `observation`; an indirect-object-like dependent leaves the transfer
//! pair; anything else leaves construct/destroy. Two-member sets are
//! resolved by verb polarity.

use std::collections::BTreeSet;

use crate::aimp::{Address, Expr};
use crate::nlp::{DepGraph, RelationClass, SentenceAnnotation, TagClassConfig};
use crate::signatures::VerbSignature;

use super::lexicon::Polarity;
use super::names::InferredNames;
use super::quantifier::Quantifier;

/// The four legal candidate configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateSet {
    Get,
    Observation,
    ConstructOrDestroy,
    TransferPair,
}

impl CandidateSet {
    pub fn len(&self) -> usize {
        match self {
            CandidateSet::Get | CandidateSet::Observation => 1,
            CandidateSet::ConstructOrDestroy | CandidateSet::TransferPair => 2,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn members(&self) -> &'static [&'static str] {
        match self {
            CandidateSet::Get => &["get"],
            CandidateSet::Observation => &["observation"],
            CandidateSet::ConstructOrDestroy => &["construct", "destroy"],
            CandidateSet::TransferPair => &["positive_transfer", "negative_transfer"],
        }
    }

    /// Whether polarity disambiguation is required.
    pub fn needs_polarity(&self) -> bool {
        self.len() == 2
    }
}

/// Variables already initialized in the program being emitted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProgramState {
    declared: BTreeSet<Address>,
}

impl ProgramState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn declare(&mut self, addr: Address) {
        self.declared.insert(addr);
    }

    pub fn is_declared(&self, addr: &Address) -> bool {
        self.declared.contains(addr)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Address> {
        self.declared.iter()
    }
}

pub fn select_candidates(
    ann: &SentenceAnnotation,
    quantifier: &Quantifier,
    names: &InferredNames,
    state: &ProgramState,
    verb: usize,
    cfg: &TagClassConfig,
) -> CandidateSet {
    if ann.original_text.contains('?') && quantifier.value.is_none() {
        return CandidateSet::Get;
    }
    if !state.is_declared(&names.combined) {
        return CandidateSet::Observation;
    }
    if has_indirect_dependent(verb, &ann.graph, cfg) {
        return CandidateSet::TransferPair;
    }
    CandidateSet::ConstructOrDestroy
}

fn has_indirect_dependent(verb: usize, graph: &DepGraph, cfg: &TagClassConfig) -> bool {
    graph
        .dependents_of(verb)
        .into_iter()
        .any(|(_, rel)| cfg.classify(rel) == RelationClass::IndirectObjectLike)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InconsistentInputs {
    #[error("candidate set {0:?} needs a polarity but none was supplied")]
    MissingPolarity(&'static str),
    #[error("candidate set {0:?} needs a valued quantifier")]
    UnvaluedQuantifier(&'static str),
    #[error("transfer candidates need an indirect-object variable")]
    MissingIndirect,
}

/// Populates the chosen signature with the inferred variables and the
/// quantifier.
pub fn build_signature(
    candidates: CandidateSet,
    polarity: Option<Polarity>,
    names: &InferredNames,
    quantifier: &Quantifier,
) -> Result<VerbSignature, InconsistentInputs> {
    let label = candidates.members()[0];
    if candidates.needs_polarity() && polarity.is_none() {
        return Err(InconsistentInputs::MissingPolarity(label));
    }
    let amount = || -> Result<Expr, InconsistentInputs> {
        match quantifier.value {
            Some(v) => Ok(Expr::num(v)),
            None => Err(InconsistentInputs::UnvaluedQuantifier(label)),
        }
    };
    match candidates {
        CandidateSet::Get => Ok(VerbSignature::Get { addr: names.combined.clone() }),
        CandidateSet::Observation => Ok(VerbSignature::Observation {
            addr: names.combined.clone(),
            amount: amount()?,
        }),
        CandidateSet::ConstructOrDestroy => {
            let amount = amount()?;
            Ok(match polarity.unwrap() {
                Polarity::Positive => {
                    VerbSignature::Construct { addr: names.combined.clone(), amount }
                }
                Polarity::Negative => {
                    VerbSignature::Destroy { addr: names.combined.clone(), amount }
                }
            })
        }
        CandidateSet::TransferPair => {
            let indirect = names
                .indirect_combined
                .clone()
                .ok_or(InconsistentInputs::MissingIndirect)?;
            let amount = amount()?;
            Ok(match polarity.unwrap() {
                Polarity::Positive => VerbSignature::PositiveTransfer {
                    subject: names.combined.clone(),
                    indirect,
                    amount,
                },
                Polarity::Negative => VerbSignature::NegativeTransfer {
                    subject: names.combined.clone(),
                    indirect,
                    amount,
                },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::categorize::numwords::NumberWords;
    use crate::categorize::quantifier::find_quantifiers;
    use crate::nlp::{tag_and_parse, tokenize, TaggerLexicon};

    fn parse(text: &str) -> SentenceAnnotation {
        tag_and_parse(&tokenize(text), TaggerLexicon::builtin()).unwrap()
    }

    fn names(subject: &str, object: &str, indirect: Option<&str>) -> InferredNames {
        let combined = Address::new(format!("{subject}_{object}")).unwrap();
        let indirect_combined =
            indirect.map(|i| Address::new(format!("{i}_{object}")).unwrap());
        InferredNames {
            subject: subject.to_string(),
            object: object.to_string(),
            combined,
            indirect: indirect.map(str::to_string),
            indirect_combined,
        }
    }

    fn select(text: &str, declared: &[&str]) -> CandidateSet {
        let ann = parse(text);
        let q = find_quantifiers(&ann, &NumberWords::builtin())
            .into_iter()
            .next()
            .unwrap();
        let cfg = TagClassConfig::default();
        let verb = ann.graph.root();
        let inferred =
            crate::categorize::names::infer_names(verb, &ann.graph, &cfg).unwrap();
        let mut state = ProgramState::new();
        for d in declared {
            state.declare(Address::new(*d).unwrap());
        }
        select_candidates(&ann, &q, &inferred, &state, verb, &cfg)
    }

    #[test]
    fn question_with_unvalued_quantifier_selects_get() {
        let got = select("How many apples does Pooja have now?", &["pooja_apple"]);
        assert_eq!(got, CandidateSet::Get);
    }

    #[test]
    fn undeclared_variable_selects_observation() {
        assert_eq!(select("Pooja has 3 apples", &[]), CandidateSet::Observation);
    }

    #[test]
    fn indirect_object_selects_the_transfer_pair() {
        let got = select("Pooja gave John 2 apples", &["pooja_apple", "john_apple"]);
        assert_eq!(got, CandidateSet::TransferPair);
    }

    #[test]
    fn declared_variable_without_indirect_selects_construct_or_destroy() {
        assert_eq!(
            select("Pooja eats one apple", &["pooja_apple"]),
            CandidateSet::ConstructOrDestroy
        );
    }

    #[test]
    fn decision_tree_is_total_over_the_four_shapes() {
        for (text, declared) in [
            ("How many apples does Pooja have now?", vec!["pooja_apple"]),
            ("Pooja has 3 apples", vec![]),
            ("Pooja gave John 2 apples", vec!["pooja_apple"]),
            ("Pooja eats one apple", vec!["pooja_apple"]),
        ] {
            let declared: Vec<&str> = declared;
            let got = select(text, &declared);
            assert!(matches!(
                got,
                CandidateSet::Get
                    | CandidateSet::Observation
                    | CandidateSet::ConstructOrDestroy
                    | CandidateSet::TransferPair
            ));
        }
    }

    #[test]
    fn builds_observation() {
        let q = Quantifier { token_index: 3, value: Some(3.0) };
        let sig = build_signature(CandidateSet::Observation, None, &names("pooja", "apple", None), &q)
            .unwrap();
        assert_eq!(
            sig,
            VerbSignature::Observation {
                addr: Address::new("pooja_apple").unwrap(),
                amount: Expr::num(3.0)
            }
        );
    }

    #[test]
    fn builds_destroy_from_negative_polarity() {
        let q = Quantifier { token_index: 3, value: Some(1.0) };
        let sig = build_signature(
            CandidateSet::ConstructOrDestroy,
            Some(Polarity::Negative),
            &names("pooja", "apple", None),
            &q,
        )
        .unwrap();
        assert_eq!(
            sig,
            VerbSignature::Destroy {
                addr: Address::new("pooja_apple").unwrap(),
                amount: Expr::num(1.0)
            }
        );
    }

    #[test]
    fn builds_get() {
        let q = Quantifier { token_index: 2, value: None };
        let sig =
            build_signature(CandidateSet::Get, None, &names("pooja", "apple", None), &q).unwrap();
        assert_eq!(sig, VerbSignature::Get { addr: Address::new("pooja_apple").unwrap() });
    }

    #[test]
    fn transfer_uses_subject_and_indirect_variables() {
        let q = Quantifier { token_index: 4, value: Some(2.0) };
        let sig = build_signature(
            CandidateSet::TransferPair,
            Some(Polarity::Negative),
            &names("pooja", "apple", Some("john")),
            &q,
        )
        .unwrap();
        assert_eq!(
            sig,
            VerbSignature::NegativeTransfer {
                subject: Address::new("pooja_apple").unwrap(),
                indirect: Address::new("john_apple").unwrap(),
                amount: Expr::num(2.0)
            }
        );
    }

    #[test]
    fn inconsistent_inputs_are_rejected() {
        let valued = Quantifier { token_index: 1, value: Some(2.0) };
        let unvalued = Quantifier { token_index: 1, value: None };
        let n = names("pooja", "apple", None);
        assert!(matches!(
            build_signature(CandidateSet::ConstructOrDestroy, None, &n, &valued),
            Err(InconsistentInputs::MissingPolarity(_))
        ));
        assert!(matches!(
            build_signature(CandidateSet::Observation, None, &n, &unvalued),
            Err(InconsistentInputs::UnvaluedQuantifier(_))
        ));
        assert!(matches!(
            build_signature(CandidateSet::TransferPair, Some(Polarity::Positive), &n, &valued),
            Err(InconsistentInputs::MissingIndirect)
        ));
    }
}
