//! Abstract syntax for A-IMP: numeric/boolean expressions, assignment,
//! skip, sequencing and print, plus the store the evaluator runs against.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The two value types of the language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Type {
    Num,
    Bool,
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Type::Num => write!(f, "num"),
            Type::Bool => write!(f, "bool"),
        }
    }
}

/// Words that the concrete syntax claims for itself. `Address::new`
/// rejects them so every well-formed program stays parseable.
pub const RESERVED_WORDS: [&str; 4] = ["skip", "print", "true", "false"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid address {name:?}: {reason}")]
pub struct InvalidAddress {
    pub name: String,
    pub reason: &'static str,
}

/// An address (assignable): a lowercase identifier naming a storage cell.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Address(String);

impl Address {
    /// Accepts `[a-z][a-z0-9_]*`, excluding reserved words.
    pub fn new(name: impl Into<String>) -> Result<Self, InvalidAddress> {
        let name = name.into();
        let mut chars = name.chars();
        match chars.next() {
            None => {
                return Err(InvalidAddress {
                    name,
                    reason: "empty identifier",
                })
            }
            Some(c) if !c.is_ascii_lowercase() => {
                return Err(InvalidAddress {
                    name,
                    reason: "must start with a lowercase letter",
                })
            }
            Some(_) => {}
        }
        if !chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_') {
            return Err(InvalidAddress {
                name,
                reason: "only lowercase letters, digits and underscores allowed",
            });
        }
        if RESERVED_WORDS.contains(&name.as_str()) {
            return Err(InvalidAddress {
                name,
                reason: "reserved word",
            });
        }
        Ok(Address(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl TryFrom<String> for Address {
    type Error = InvalidAddress;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        Address::new(value)
    }
}

impl From<Address> for String {
    fn from(a: Address) -> String {
        a.0
    }
}

/// Expressions. Numeric literals are finite by construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "expr", rename_all = "lowercase")]
pub enum Expr {
    Addr { name: Address },
    Num { value: f64 },
    Bool { value: bool },
    Plus { left: Box<Expr>, right: Box<Expr> },
    Minus { left: Box<Expr>, right: Box<Expr> },
}

impl Expr {
    pub fn addr(a: Address) -> Expr {
        Expr::Addr { name: a }
    }

    /// Panics on NaN or infinity; literals must be finite.
    pub fn num(value: f64) -> Expr {
        assert!(value.is_finite(), "numeric literal must be finite");
        Expr::Num { value }
    }

    pub fn boolean(value: bool) -> Expr {
        Expr::Bool { value }
    }

    pub fn plus(left: Expr, right: Expr) -> Expr {
        Expr::Plus {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn minus(left: Expr, right: Expr) -> Expr {
        Expr::Minus {
            left: Box::new(left),
            right: Box::new(right),
        }
    }
}

/// Commands.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "cmd", rename_all = "lowercase")]
pub enum Cmd {
    Set { addr: Address, expr: Expr },
    Skip,
    Seq { first: Box<Cmd>, second: Box<Cmd> },
    Print { expr: Expr },
}

impl Cmd {
    pub fn set(addr: Address, expr: Expr) -> Cmd {
        Cmd::Set { addr, expr }
    }

    pub fn seq(first: Cmd, second: Cmd) -> Cmd {
        Cmd::Seq {
            first: Box::new(first),
            second: Box::new(second),
        }
    }

    pub fn print(expr: Expr) -> Cmd {
        Cmd::Print { expr }
    }
}

/// Folds commands into one right-nested sequence, mirroring how the
/// pipeline strings sentence commands together. An empty list is `skip`.
pub fn seq_all(cmds: Vec<Cmd>) -> Cmd {
    let mut iter = cmds.into_iter().rev();
    match iter.next() {
        None => Cmd::Skip,
        Some(last) => iter.fold(last, |acc, c| Cmd::seq(c, acc)),
    }
}

/// A whole program; serializes as its root command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Program {
    pub root: Cmd,
}

impl Program {
    pub fn new(root: Cmd) -> Program {
        Program { root }
    }
}

/// Evaluation state: a finite map from addresses to finite numbers.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Store {
    bindings: BTreeMap<Address, f64>,
}

impl Store {
    pub fn new() -> Store {
        Store::default()
    }

    pub fn get(&self, addr: &Address) -> Option<f64> {
        self.bindings.get(addr).copied()
    }

    /// Panics on non-finite values; the evaluator checks before storing.
    pub fn set(&mut self, addr: Address, value: f64) {
        assert!(value.is_finite(), "store values must be finite");
        self.bindings.insert(addr, value);
    }

    pub fn bindings(&self) -> impl Iterator<Item = (&Address, f64)> {
        self.bindings.iter().map(|(a, v)| (a, *v))
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }
}

impl FromIterator<(Address, f64)> for Store {
    fn from_iter<I: IntoIterator<Item = (Address, f64)>>(iter: I) -> Store {
        let mut s = Store::new();
        for (a, v) in iter {
            s.set(a, v);
        }
        s
    }
}
