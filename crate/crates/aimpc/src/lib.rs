//! aimpc compiles grade-school arithmetic word problems into programs of
//! the small imperative language A-IMP, then typechecks and executes them
//! to produce numeric answers.
//!
//! The pipeline runs preprocess (coreference resolution, conjunction
//! breaking), verb categorization (quantifier detection, head-verb walk,
//! variable-name inference, candidate selection, embedding-based
//! disambiguation), signature lowering, and evaluation.

pub mod aimp;
pub mod categorize;
pub mod nlp;
pub mod pipeline;
pub mod preprocess;
pub mod signatures;
