//! Canonical pretty-printer: one atom per `;` clause, sequences flattened,
//! parentheses only where the left-associative expression grammar needs
//! them.

use std::fmt::Write;

use super::ast::{Cmd, Expr, Program};

pub fn print_program(program: &Program) -> String {
    print_cmd(&program.root)
}

pub fn print_cmd(cmd: &Cmd) -> String {
    let mut atoms = Vec::new();
    flatten(cmd, &mut atoms);
    let mut out = String::new();
    for (i, atom) in atoms.iter().enumerate() {
        if i > 0 {
            out.push_str(" ; ");
        }
        match atom {
            Cmd::Skip => out.push_str("skip"),
            Cmd::Set { addr, expr } => {
                let _ = write!(out, "{addr} := {}", print_expr(expr));
            }
            Cmd::Print { expr } => {
                let _ = write!(out, "print {}", print_expr(expr));
            }
            Cmd::Seq { .. } => unreachable!("sequences are flattened"),
        }
    }
    out
}

fn flatten<'a>(cmd: &'a Cmd, atoms: &mut Vec<&'a Cmd>) {
    match cmd {
        Cmd::Seq { first, second } => {
            flatten(first, atoms);
            flatten(second, atoms);
        }
        other => atoms.push(other),
    }
}

pub fn print_expr(expr: &Expr) -> String {
    match expr {
        Expr::Addr { name } => name.to_string(),
        Expr::Num { value } => format!("{value}"),
        Expr::Bool { value } => format!("{value}"),
        Expr::Plus { left, right } => {
            format!("{} + {}", print_expr(left), print_operand(right))
        }
        Expr::Minus { left, right } => {
            format!("{} - {}", print_expr(left), print_operand(right))
        }
    }
}

// A right operand that is itself a sum or difference needs parentheses to
// survive the left-associative grammar.
fn print_operand(expr: &Expr) -> String {
    match expr {
        Expr::Plus { .. } | Expr::Minus { .. } => format!("({})", print_expr(expr)),
        other => print_expr(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aimp::ast::Address;
    use crate::aimp::parse::parse_program;

    fn addr(s: &str) -> Address {
        Address::new(s).unwrap()
    }

    #[test]
    fn prints_skip() {
        assert_eq!(print_program(&Program::new(Cmd::Skip)), "skip");
    }

    #[test]
    fn prints_the_three_step_program() {
        let a = addr("a_p");
        let p = Program::new(Cmd::seq(
            Cmd::set(a.clone(), Expr::num(3.0)),
            Cmd::seq(
                Cmd::set(a.clone(), Expr::minus(Expr::addr(a.clone()), Expr::num(1.0))),
                Cmd::print(Expr::addr(a)),
            ),
        ));
        assert_eq!(print_program(&p), "a_p := 3 ; a_p := a_p - 1 ; print a_p");
    }

    #[test]
    fn left_nested_subtraction_needs_no_parens() {
        let c = Cmd::set(
            addr("x"),
            Expr::minus(
                Expr::minus(Expr::addr(addr("x")), Expr::num(1.0)),
                Expr::num(2.0),
            ),
        );
        assert_eq!(print_cmd(&c), "x := x - 1 - 2");
    }

    #[test]
    fn right_nested_subtraction_is_parenthesized() {
        let c = Cmd::set(
            addr("x"),
            Expr::minus(
                Expr::addr(addr("x")),
                Expr::minus(Expr::num(1.0), Expr::num(2.0)),
            ),
        );
        let text = print_cmd(&c);
        assert_eq!(text, "x := x - (1 - 2)");
        assert_eq!(parse_program(&text).unwrap().root, c);
    }

    #[test]
    fn integral_floats_print_without_decimal_point() {
        assert_eq!(print_expr(&Expr::num(3.0)), "3");
        assert_eq!(print_expr(&Expr::num(1.5)), "1.5");
    }

    #[test]
    fn left_nested_sequences_flatten() {
        let p = Program::new(Cmd::seq(
            Cmd::seq(Cmd::Skip, Cmd::Skip),
            Cmd::print(Expr::num(1.0)),
        ));
        assert_eq!(print_program(&p), "skip ; skip ; print 1");
    }
}
