//! The compiler pipeline: preprocess, per-fragment categorization,
//! signature lowering, sequencing, typechecking, and execution.

mod config;
mod corpus;
mod trace;

pub use config::{ConfigError, PipelineConfig};
pub use corpus::{
    parse_corpus, run_corpus, run_corpus_sequential, solve_batch, solve_batch_sequential,
    CorpusProblem, CorpusReport, ProblemReport, ProblemStatus,
};
pub use trace::{CompilationTrace, Emission, FragmentRecord, QuantifierTrace, VariablesTrace};

use std::collections::HashMap;
use std::fmt;

use crate::aimp::{exec_cmd, seq_all, typecheck_cmd, Cmd, EvalError, Program, Store, TypeError};
use crate::categorize::{
    build_signature, classify_verb, find_quantifiers, head_verb_of, infer_names,
    Classification, EmbeddingTable, InconsistentInputs, MissingArgument, NumberWords,
    ProgramState, Quantifier, VerbLexicon,
};
use crate::nlp::{
    load_conllu, tag_and_parse, tokenize, RelationClass, SentenceAnnotation, TagClassConfig,
    TaggerLexicon, UnsupportedSentence,
};
use crate::preprocess::{break_to_fixpoint, resolve_coreferences, ProblemText};
use crate::signatures::{lower, InvalidSignature, VerbSignature};

/// Everything the pipeline reads, loaded once and shared across problems.
#[derive(Debug, Clone, Default)]
pub struct Resources {
    pub tagger: TaggerLexicon,
    pub numwords: NumberWords,
    pub tagcfg: TagClassConfig,
    pub lexicon: Option<VerbLexicon>,
    pub embeddings: Option<EmbeddingTable>,
    pub conllu: Option<ConlluIndex>,
}

impl Resources {
    /// Built-in tagger, number words and tag classes; no disambiguation
    /// resources and no external parses.
    pub fn builtin() -> Resources {
        Resources {
            tagger: TaggerLexicon::builtin().clone(),
            ..Default::default()
        }
    }

    pub fn load(cfg: &PipelineConfig) -> Result<Resources, ConfigError> {
        let res = |e: String| ConfigError::Resource(e);
        let tagger = match &cfg.tagger_lexicon_path {
            Some(p) => TaggerLexicon::load(p).map_err(|e| res(e.to_string()))?,
            None => TaggerLexicon::builtin().clone(),
        };
        let numwords = match &cfg.numwords_path {
            Some(p) => NumberWords::with_overrides(p).map_err(|e| res(e.to_string()))?,
            None => NumberWords::builtin(),
        };
        let lexicon = match &cfg.lexicon_path {
            Some(p) => Some(VerbLexicon::load(p).map_err(|e| res(e.to_string()))?),
            None => None,
        };
        let embeddings = match &cfg.embeddings_path {
            Some(p) => Some(EmbeddingTable::load(p).map_err(|e| res(e.to_string()))?),
            None => None,
        };
        let conllu = match &cfg.conllu_path {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| res(format!("cannot read {}: {e}", p.display())))?;
                let sentences = load_conllu(&text).map_err(|e| res(e.to_string()))?;
                Some(ConlluIndex::new(sentences))
            }
            None => None,
        };
        Ok(Resources {
            tagger,
            numwords,
            tagcfg: cfg.tagclasses.clone().unwrap_or_default(),
            lexicon,
            embeddings,
            conllu,
        })
    }

    /// Supplied CoNLL-U parse if one matches the text, else the built-in
    /// parser.
    pub fn annotate(&self, text: &str) -> Result<SentenceAnnotation, UnsupportedSentence> {
        if let Some(index) = &self.conllu {
            if let Some(ann) = index.get(text) {
                return Ok(ann);
            }
        }
        tag_and_parse(&tokenize(text), &self.tagger)
    }
}

/// Pre-parsed sentences keyed by their normalized token text.
#[derive(Debug, Clone, Default)]
pub struct ConlluIndex {
    by_text: HashMap<String, SentenceAnnotation>,
}

impl ConlluIndex {
    pub fn new(sentences: Vec<SentenceAnnotation>) -> ConlluIndex {
        let mut by_text = HashMap::new();
        for ann in sentences {
            let key = normalize(&ann.original_text);
            by_text.entry(key).or_insert(ann);
        }
        ConlluIndex { by_text }
    }

    pub fn get(&self, text: &str) -> Option<SentenceAnnotation> {
        self.by_text.get(&normalize(text)).map(|ann| SentenceAnnotation {
            original_text: text.to_string(),
            graph: ann.graph.clone(),
        })
    }

    pub fn len(&self) -> usize {
        self.by_text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_text.is_empty()
    }
}

fn normalize(text: &str) -> String {
    tokenize(text).join(" ").to_lowercase()
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CompileError {
    #[error("empty problem")]
    EmptyProblem,
    #[error("cannot parse fragment {fragment:?}: {reason}")]
    Unparsable { fragment: String, reason: String },
    #[error("no head verb found in fragment {fragment:?}")]
    NoVerb { fragment: String },
    #[error("in fragment {fragment:?}: {source}")]
    MissingArgument { fragment: String, source: MissingArgument },
    #[error("cannot disambiguate verb {lemma:?} in fragment {fragment:?}: {reason}")]
    Disambiguation { fragment: String, lemma: String, reason: String },
    #[error("in fragment {fragment:?}: {source}")]
    Signature { fragment: String, source: InconsistentInputs },
    #[error("in fragment {fragment:?}: {source}")]
    BadSignature { fragment: String, source: InvalidSignature },
    #[error("emitted program failed to typecheck: {source}")]
    IllTyped { source: TypeError },
}

impl CompileError {
    /// The offending fragment, when one exists.
    pub fn fragment(&self) -> Option<&str> {
        match self {
            CompileError::EmptyProblem | CompileError::IllTyped { .. } => None,
            CompileError::Unparsable { fragment, .. }
            | CompileError::NoVerb { fragment }
            | CompileError::MissingArgument { fragment, .. }
            | CompileError::Disambiguation { fragment, .. }
            | CompileError::Signature { fragment, .. }
            | CompileError::BadSignature { fragment, .. } => Some(fragment),
        }
    }
}

/// A compile error plus whatever trace had accumulated before it.
#[derive(Debug, Clone, PartialEq)]
pub struct CompileFailure {
    pub error: CompileError,
    pub trace: CompilationTrace,
}

impl fmt::Display for CompileFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.error.fmt(f)
    }
}

impl std::error::Error for CompileFailure {}

#[derive(Debug, Clone, PartialEq)]
pub struct Compilation {
    pub program: Program,
    pub trace: CompilationTrace,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub answers: Vec<f64>,
    pub program: Program,
    pub trace: CompilationTrace,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SolveError {
    #[error("{0}")]
    Compile(Box<CompileFailure>),
    #[error("evaluation failed: {error}")]
    Eval { error: EvalError, trace: CompilationTrace },
}

/// Runs the whole front end and returns a typechecked program.
pub fn compile(problem: &str, res: &Resources) -> Result<Compilation, Box<CompileFailure>> {
    let mut trace = CompilationTrace::default();
    match compile_inner(problem, res, &mut trace) {
        Ok(program) => Ok(Compilation { program, trace }),
        Err(error) => Err(Box::new(CompileFailure { error, trace })),
    }
}

/// Compiles and executes on an empty store.
pub fn solve(problem: &str, res: &Resources) -> Result<Solution, SolveError> {
    let Compilation { program, mut trace } =
        compile(problem, res).map_err(SolveError::Compile)?;
    match exec_cmd(Store::new(), &program.root) {
        Ok(outcome) => {
            trace.diagnostics.extend(outcome.diagnostics);
            Ok(Solution { answers: outcome.outputs, program, trace })
        }
        Err(error) => Err(SolveError::Eval { error, trace }),
    }
}

fn compile_inner(
    problem: &str,
    res: &Resources,
    trace: &mut CompilationTrace,
) -> Result<Program, CompileError> {
    let problem = problem.trim();
    if problem.is_empty() {
        return Err(CompileError::EmptyProblem);
    }
    let ptext = ProblemText::parse(problem);
    if ptext.sentences.is_empty() {
        return Err(CompileError::EmptyProblem);
    }

    let coref = resolve_coreferences(&ptext, &res.tagger);
    trace.coref_substitutions = coref.substitutions.clone();
    trace.diagnostics.extend(coref.diagnostics.iter().cloned());

    let mut state = ProgramState::new();
    let mut commands: Vec<Cmd> = Vec::new();

    for sentence in &coref.problem.sentences {
        let ann = res.annotate(sentence).map_err(|e| CompileError::Unparsable {
            fragment: sentence.clone(),
            reason: e.to_string(),
        })?;
        let fragments = break_to_fixpoint(&ann, &res.tagcfg, |t| res.annotate(t))
            .map_err(|e| CompileError::Unparsable {
                fragment: sentence.clone(),
                reason: e.to_string(),
            })?;
        for (text, fragment) in fragments {
            process_fragment(&text, &fragment, res, &mut state, &mut commands, trace)?;
        }
    }

    let root = seq_all(commands);
    typecheck_cmd(&root).map_err(|source| CompileError::IllTyped { source })?;
    Ok(Program::new(root))
}

fn process_fragment(
    text: &str,
    ann: &SentenceAnnotation,
    res: &Resources,
    state: &mut ProgramState,
    commands: &mut Vec<Cmd>,
    trace: &mut CompilationTrace,
) -> Result<(), CompileError> {
    let mut record = FragmentRecord { fragment: text.to_string(), emissions: Vec::new() };
    let quantifiers = find_quantifiers(ann, &res.numwords);
    if quantifiers.is_empty() {
        trace
            .diagnostics
            .push(format!("fragment {text:?} skipped: no quantifier"));
        trace.records.push(record);
        return Ok(());
    }

    for quantifier in quantifiers {
        let fragment = || text.to_string();
        let graph = &ann.graph;
        let verb = head_verb_of(&quantifier, graph)
            .map_err(|_| CompileError::NoVerb { fragment: fragment() })?;
        let names = infer_names(verb, graph, &res.tagcfg)
            .map_err(|source| CompileError::MissingArgument { fragment: fragment(), source })?;
        let candidates =
            crate::categorize::select_candidates(ann, &quantifier, &names, state, verb, &res.tagcfg);
        let lemma = graph.token(verb).lemma.to_lowercase();

        let classification: Option<Classification> = if candidates.needs_polarity() {
            Some(disambiguate(&lemma, res, &fragment)?)
        } else {
            None
        };

        let polarity = classification.as_ref().map(|c| c.polarity);
        let signature = build_signature(candidates, polarity, &names, &quantifier)
            .map_err(|source| CompileError::Signature { fragment: fragment(), source })?;
        let command = lower(&signature)
            .map_err(|source| CompileError::BadSignature { fragment: fragment(), source })?;

        declare(&signature, state);
        record.emissions.push(emission_record(
            ann,
            &quantifier,
            verb,
            &names,
            candidates,
            classification.as_ref(),
            &signature,
            &command,
            res,
        ));
        commands.push(command);
    }

    trace.records.push(record);
    Ok(())
}

fn disambiguate(
    lemma: &str,
    res: &Resources,
    fragment: &dyn Fn() -> String,
) -> Result<Classification, CompileError> {
    let lexicon = res.lexicon.as_ref().ok_or_else(|| CompileError::Disambiguation {
        fragment: fragment(),
        lemma: lemma.to_string(),
        reason: "no verb lexicon configured".to_string(),
    })?;
    if let Some(polarity) = lexicon.get(lemma) {
        return Ok(Classification { polarity, best_match: None, scores: Vec::new() });
    }
    let embeddings = res.embeddings.as_ref().ok_or_else(|| CompileError::Disambiguation {
        fragment: fragment(),
        lemma: lemma.to_string(),
        reason: "verb not in the lexicon and no embeddings configured".to_string(),
    })?;
    classify_verb(lemma, lexicon, embeddings).map_err(|e| CompileError::Disambiguation {
        fragment: fragment(),
        lemma: lemma.to_string(),
        reason: e.to_string(),
    })
}

fn declare(signature: &VerbSignature, state: &mut ProgramState) {
    match signature {
        VerbSignature::Observation { addr, .. }
        | VerbSignature::Construct { addr, .. }
        | VerbSignature::Destroy { addr, .. } => state.declare(addr.clone()),
        VerbSignature::PositiveTransfer { subject, indirect, .. }
        | VerbSignature::NegativeTransfer { subject, indirect, .. } => {
            state.declare(subject.clone());
            state.declare(indirect.clone());
        }
        VerbSignature::Get { .. } => {}
    }
}

#[allow(clippy::too_many_arguments)]
fn emission_record(
    ann: &SentenceAnnotation,
    quantifier: &Quantifier,
    verb: usize,
    names: &crate::categorize::InferredNames,
    candidates: crate::categorize::CandidateSet,
    classification: Option<&Classification>,
    signature: &VerbSignature,
    command: &Cmd,
    res: &Resources,
) -> Emission {
    let graph = &ann.graph;
    let polarity_source = classification.map(|c| {
        if c.best_match.is_none() { "lexicon".to_string() } else { "similarity".to_string() }
    });
    Emission {
        quantifier: QuantifierTrace {
            token_index: quantifier.token_index,
            text: graph.token(quantifier.token_index).text.clone(),
            value: quantifier.value,
        },
        head_verb: graph.token(verb).text.clone(),
        head_verb_index: verb,
        head_verb_lemma: graph.token(verb).lemma.clone(),
        variables: VariablesTrace {
            subject: names.subject.clone(),
            object: names.object.clone(),
            combined: names.combined.to_string(),
            indirect: names.indirect.clone(),
            indirect_combined: names.indirect_combined.as_ref().map(|a| a.to_string()),
        },
        candidates: candidates.members().iter().map(|s| s.to_string()).collect(),
        polarity: classification.map(|c| c.polarity.to_string()),
        polarity_source,
        best_match: classification.and_then(|c| c.best_match.clone()),
        similarities: classification.map(|c| c.scores.clone()).unwrap_or_default(),
        preposition_cue: preposition_cue(verb, ann, res),
        signature: signature.to_string(),
        command: crate::aimp::print_cmd(command),
    }
}

/// A from/to case marker under an indirect-object-like arc of the verb.
fn preposition_cue(verb: usize, ann: &SentenceAnnotation, res: &Resources) -> Option<String> {
    let graph = &ann.graph;
    for (dep, rel) in graph.dependents_of(verb) {
        if res.tagcfg.classify(rel) != RelationClass::IndirectObjectLike {
            continue;
        }
        for (marker, marker_rel) in graph.dependents_of(dep) {
            if marker_rel == "case" {
                let word = graph.token(marker).text.to_lowercase();
                if word == "from" || word == "to" {
                    return Some(word);
                }
            }
        }
        // enhanced labels carry the cue directly
        if let Some(cue) = rel.strip_prefix("nmod:").or_else(|| rel.strip_prefix("obl:")) {
            if cue == "from" || cue == "to" {
                return Some(cue.to_string());
            }
        }
    }
    None
}

/// Integral answers print as integers; the 1e-9 slack absorbs float
/// representation noise.
pub fn format_answer(value: f64) -> String {
    let rounded = value.round();
    if (value - rounded).abs() <= 1e-9 && rounded.abs() < 9.0e15 {
        format!("{}", rounded as i64)
    } else {
        format!("{value}")
    }
}
