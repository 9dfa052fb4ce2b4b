//! Command-line front end: compile a problem, run it, or evaluate a
//! corpus.
//!
//! Exit codes: 0 success, 1 corpus answer mismatch, 2 compile/eval
//! error, 3 usage or configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use aimpc::aimp::print_program;
use aimpc::pipeline::{
    compile, format_answer, run_corpus, solve, CompileFailure, PipelineConfig, Resources,
    SolveError,
};

#[derive(Parser)]
#[command(name = "aimpc", version, about = "Compile word problems to A-IMP and run them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a problem file and print the program.
    Compile {
        /// UTF-8 file with one word problem.
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compile a problem file, execute it, and print the answers.
    Run {
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Solve every problem in a ---separated corpus file.
    Corpus {
        path: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// CoNLL-U file with pre-parsed sentences, used when a sentence
    /// matches.
    #[arg(long)]
    conllu: Option<PathBuf>,
    /// Word embeddings in word2vec text format.
    #[arg(long)]
    embeddings: Option<PathBuf>,
    /// Verb polarity lexicon (verb<TAB>positive|negative).
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Tagger lexicon (word<TAB>POS<TAB>lemma); defaults to the built-in.
    #[arg(long)]
    tagger_lexicon: Option<PathBuf>,
    /// Number-word overrides (word<TAB>value).
    #[arg(long)]
    numwords: Option<PathBuf>,
    /// Config file; defaults to $AIMP_CONFIG when set.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Emit::Aimp)]
    emit: Emit,
    /// Write the compilation trace to stderr (aimp mode); json mode
    /// always embeds it.
    #[arg(long)]
    trace: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Aimp,
    Json,
}

const EXIT_OK: u8 = 0;
const EXIT_MISMATCH: u8 = 1;
const EXIT_COMPILE: u8 = 2;
const EXIT_USAGE: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with success
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Compile { file, common } => with_setup(&file, &common, cmd_compile),
        Command::Run { file, common } => with_setup(&file, &common, cmd_run),
        Command::Corpus { path, common } => with_setup(&path, &common, cmd_corpus),
    };
    ExitCode::from(code)
}

fn with_setup(
    path: &PathBuf,
    common: &CommonArgs,
    f: impl FnOnce(String, Resources, &CommonArgs) -> u8,
) -> u8 {
    let base = match &common.config {
        Some(path) => PipelineConfig::from_file(path),
        None => PipelineConfig::from_env(),
    };
    let base = match base {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("config error: {e}");
            return EXIT_USAGE;
        }
    };
    let flags = PipelineConfig {
        embeddings_path: common.embeddings.clone(),
        lexicon_path: common.lexicon.clone(),
        tagger_lexicon_path: common.tagger_lexicon.clone(),
        numwords_path: common.numwords.clone(),
        conllu_path: common.conllu.clone(),
        tagclasses: None,
        trace: common.trace,
    };
    let cfg = flags.over(base);
    let resources = match Resources::load(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("config error: {e}");
            return EXIT_USAGE;
        }
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    f(text, resources, common)
}

fn report_compile_failure(failure: &CompileFailure, common: &CommonArgs) {
    eprintln!("error: {failure}");
    if common.trace {
        match serde_json::to_string_pretty(&failure.trace) {
            Ok(t) => eprintln!("{t}"),
            Err(e) => eprintln!("trace serialization failed: {e}"),
        }
    }
}

fn cmd_compile(text: String, resources: Resources, common: &CommonArgs) -> u8 {
    match compile(&text, &resources) {
        Ok(compilation) => {
            match common.emit {
                Emit::Aimp => {
                    println!("{}", print_program(&compilation.program));
                    if common.trace {
                        emit_trace_stderr(&compilation.trace);
                    }
                }
                Emit::Json => {
                    let doc = json!({
                        "program": compilation.program,
                        "trace": compilation.trace,
                        "answers": serde_json::Value::Null,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            EXIT_OK
        }
        Err(failure) => {
            report_compile_failure(&failure, common);
            EXIT_COMPILE
        }
    }
}

fn cmd_run(text: String, resources: Resources, common: &CommonArgs) -> u8 {
    match solve(&text, &resources) {
        Ok(solution) => {
            match common.emit {
                Emit::Aimp => {
                    println!("{}", print_program(&solution.program));
                    for answer in &solution.answers {
                        // '#' keeps the whole stream valid A-IMP text
                        println!("# output: {}", format_answer(*answer));
                    }
                    if common.trace {
                        emit_trace_stderr(&solution.trace);
                    }
                }
                Emit::Json => {
                    let doc = json!({
                        "program": solution.program,
                        "trace": solution.trace,
                        "answers": solution.answers,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            EXIT_OK
        }
        Err(SolveError::Compile(failure)) => {
            report_compile_failure(&failure, common);
            EXIT_COMPILE
        }
        Err(e @ SolveError::Eval { .. }) => {
            eprintln!("error: {e}");
            EXIT_COMPILE
        }
    }
}

fn cmd_corpus(text: String, resources: Resources, common: &CommonArgs) -> u8 {
    let report = run_corpus(&text, &resources);
    match common.emit {
        Emit::Aimp => print!("{}", report.render_text()),
        Emit::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
    }
    if report.any_mismatch() {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

fn emit_trace_stderr(trace: &aimpc::pipeline::CompilationTrace) {
    match serde_json::to_string_pretty(trace) {
        Ok(t) => eprintln!("{t}"),
        Err(e) => eprintln!("trace serialization failed: {e}"),
    }
}
