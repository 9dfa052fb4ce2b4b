//! Static typing: expressions are checked against the `num`/`bool` types,
//! commands against the ok judgment. Only numeric expressions may feed
//! assignment and print.

use std::fmt;

use super::ast::{Cmd, Expr, Type};

/// One step into a syntax tree; a path of steps addresses a subterm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathStep {
    Left,
    Right,
    First,
    Second,
    Source,
}

impl fmt::Display for PathStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PathStep::Left => "left",
            PathStep::Right => "right",
            PathStep::First => "first",
            PathStep::Second => "second",
            PathStep::Source => "source",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub struct TypeError {
    /// Path from the checked root to the offending subterm.
    pub path: Vec<PathStep>,
    pub expected: Type,
    pub found: Type,
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type error at ")?;
        if self.path.is_empty() {
            write!(f, "root")?;
        } else {
            for (i, step) in self.path.iter().enumerate() {
                if i > 0 {
                    write!(f, ".")?;
                }
                write!(f, "{step}")?;
            }
        }
        write!(f, ": expected {}, found {}", self.expected, self.found)
    }
}

impl TypeError {
    fn push_front(mut self, step: PathStep) -> TypeError {
        self.path.insert(0, step);
        self
    }
}

/// Addresses and numerals are `num`, booleans are `bool`; plus and minus
/// require two `num` operands.
pub fn typecheck_expr(expr: &Expr) -> Result<Type, TypeError> {
    match expr {
        Expr::Addr { .. } => Ok(Type::Num),
        Expr::Num { .. } => Ok(Type::Num),
        Expr::Bool { .. } => Ok(Type::Bool),
        Expr::Plus { left, right } | Expr::Minus { left, right } => {
            expect_num(left, PathStep::Left)?;
            expect_num(right, PathStep::Right)?;
            Ok(Type::Num)
        }
    }
}

fn expect_num(expr: &Expr, step: PathStep) -> Result<(), TypeError> {
    match typecheck_expr(expr) {
        Ok(Type::Num) => Ok(()),
        Ok(found) => Err(TypeError {
            path: vec![step],
            expected: Type::Num,
            found,
        }),
        Err(e) => Err(e.push_front(step)),
    }
}

/// `set` and `print` need a `num` source; `skip` is ok; `seq` is ok when
/// both halves are.
pub fn typecheck_cmd(cmd: &Cmd) -> Result<(), TypeError> {
    match cmd {
        Cmd::Set { expr, .. } | Cmd::Print { expr } => {
            expect_num(expr, PathStep::Source)
        }
        Cmd::Skip => Ok(()),
        Cmd::Seq { first, second } => {
            typecheck_cmd(first).map_err(|e| e.push_front(PathStep::First))?;
            typecheck_cmd(second).map_err(|e| e.push_front(PathStep::Second))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aimp::ast::Address;

    fn addr(s: &str) -> Address {
        Address::new(s).unwrap()
    }

    #[test]
    fn numeral_is_num() {
        assert_eq!(typecheck_expr(&Expr::num(3.0)), Ok(Type::Num));
    }

    #[test]
    fn address_is_num() {
        assert_eq!(typecheck_expr(&Expr::addr(addr("a_p"))), Ok(Type::Num));
    }

    #[test]
    fn bool_operand_fails_plus() {
        let e = Expr::plus(Expr::num(1.0), Expr::boolean(true));
        let err = typecheck_expr(&e).unwrap_err();
        assert_eq!(err.expected, Type::Num);
        assert_eq!(err.found, Type::Bool);
        assert_eq!(err.path, vec![PathStep::Right]);
    }

    #[test]
    fn set_of_numeral_is_ok() {
        let c = Cmd::set(addr("a_p"), Expr::num(3.0));
        assert_eq!(typecheck_cmd(&c), Ok(()));
    }

    #[test]
    fn skip_is_ok() {
        assert_eq!(typecheck_cmd(&Cmd::Skip), Ok(()));
    }

    #[test]
    fn print_of_bool_fails_with_path() {
        let c = Cmd::seq(
            Cmd::set(addr("a"), Expr::num(1.0)),
            Cmd::print(Expr::boolean(true)),
        );
        let err = typecheck_cmd(&c).unwrap_err();
        assert_eq!(
            err.path,
            vec![PathStep::Second, PathStep::Source]
        );
        assert_eq!(err.to_string(), "type error at second.source: expected num, found bool");
    }
}
