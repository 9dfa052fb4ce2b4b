//! The A-IMP target language: abstract syntax, static typing, big-step
//! evaluation, and a concrete textual syntax with parser and printer.

mod ast;
mod eval;
mod parse;
mod print;
mod typecheck;

pub use ast::{seq_all, Address, Cmd, Expr, InvalidAddress, Program, Store, Type, RESERVED_WORDS};
pub use eval::{eval_expr, exec_cmd, EvalError, Evaluated, ExecOutcome};
pub use parse::{parse_program, ParseError};
pub use print::{print_cmd, print_expr, print_program};
pub use typecheck::{typecheck_cmd, typecheck_expr, PathStep, TypeError};
