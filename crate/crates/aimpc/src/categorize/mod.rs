//! Verb categorization: quantifier detection, the head-verb walk,
//! variable-name inference, heuristic candidate selection, and semantic
//! disambiguation by embedding similarity.

mod candidates;
mod classify;
mod embedding;
mod lexicon;
mod loo;
mod names;
mod numwords;
mod quantifier;

pub use candidates::{
    build_signature, select_candidates, CandidateSet, InconsistentInputs, ProgramState,
};
pub use classify::{classify_vector, classify_verb, Classification, ClassifyError, ScoredWord};
pub use embedding::{cosine_similarity, EmbeddingError, EmbeddingTable, SimilarityError};
pub use lexicon::{LexiconError, Polarity, VerbLexicon};
pub use loo::{leave_one_out_report, leave_one_out_report_sequential, LooReport, LooRow};
pub use names::{
    dependent_of_class, infer_names, infer_variable_name, ArgumentKind, InferredNames,
    MissingArgument,
};
pub use numwords::{NumberWordError, NumberWords};
pub use quantifier::{find_quantifiers, head_verb_of, NoVerbFound, Quantifier};
