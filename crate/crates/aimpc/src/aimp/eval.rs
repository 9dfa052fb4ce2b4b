//! Big-step evaluation. Reads of unbound addresses default to 0 and leave
//! a diagnostic instead of failing; the only hard error is a non-finite
//! arithmetic result.

use super::ast::{Cmd, Expr, Store};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("arithmetic overflow: non-finite result")]
    NonFinite,
    /// Precondition breach: evaluation reached a boolean where a number
    /// was required. Well-typed programs never hit this.
    #[error("boolean value in numeric context")]
    IllTyped,
}

/// Value of an expression together with any unbound-address diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluated {
    pub value: f64,
    pub diagnostics: Vec<String>,
}

/// Final store, printed outputs and diagnostics of a command run.
#[derive(Debug, Clone, PartialEq)]
pub struct ExecOutcome {
    pub store: Store,
    pub outputs: Vec<f64>,
    pub diagnostics: Vec<String>,
}

pub fn eval_expr(store: &Store, expr: &Expr) -> Result<Evaluated, EvalError> {
    let mut diagnostics = Vec::new();
    let value = eval_in(store, expr, &mut diagnostics)?;
    Ok(Evaluated { value, diagnostics })
}

fn eval_in(store: &Store, expr: &Expr, diagnostics: &mut Vec<String>) -> Result<f64, EvalError> {
    match expr {
        Expr::Num { value } => Ok(*value),
        Expr::Addr { name } => match store.get(name) {
            Some(v) => Ok(v),
            None => {
                diagnostics.push(format!("unbound address {name}"));
                Ok(0.0)
            }
        },
        Expr::Bool { .. } => Err(EvalError::IllTyped),
        Expr::Plus { left, right } => {
            let l = eval_in(store, left, diagnostics)?;
            let r = eval_in(store, right, diagnostics)?;
            finite(l + r)
        }
        Expr::Minus { left, right } => {
            let l = eval_in(store, left, diagnostics)?;
            let r = eval_in(store, right, diagnostics)?;
            finite(l - r)
        }
    }
}

fn finite(v: f64) -> Result<f64, EvalError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::NonFinite)
    }
}

/// Runs a command against a store. The input store is consumed; callers
/// keep a clone if they need the original.
pub fn exec_cmd(store: Store, cmd: &Cmd) -> Result<ExecOutcome, EvalError> {
    let mut outcome = ExecOutcome {
        store,
        outputs: Vec::new(),
        diagnostics: Vec::new(),
    };
    exec_in(cmd, &mut outcome)?;
    Ok(outcome)
}

fn exec_in(cmd: &Cmd, out: &mut ExecOutcome) -> Result<(), EvalError> {
    match cmd {
        Cmd::Skip => Ok(()),
        Cmd::Set { addr, expr } => {
            let v = eval_in(&out.store, expr, &mut out.diagnostics)?;
            out.store.set(addr.clone(), v);
            Ok(())
        }
        Cmd::Seq { first, second } => {
            exec_in(first, out)?;
            exec_in(second, out)
        }
        Cmd::Print { expr } => {
            let v = eval_in(&out.store, expr, &mut out.diagnostics)?;
            out.outputs.push(v);
            Ok(())
        }
    }
}
