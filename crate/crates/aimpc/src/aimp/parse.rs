//! Parser for the concrete A-IMP syntax.
//!
//! ```text
//! program := cmd
//! cmd     := atom { ";" atom }
//! atom    := IDENT ":=" expr | "skip" | "print" expr
//! expr    := term { ("+"|"-") term }     (left-associative)
//! term    := NUMBER | IDENT | "(" expr ")"
//! ```
//!
//! `#` starts a line comment. Command sequences nest to the right, so
//! `a ; b ; c` is `seq(a, seq(b, c))`.

use std::fmt;

use super::ast::{Address, Cmd, Expr, Program, RESERVED_WORDS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.column, self.message)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(f64),
    Assign,
    Semi,
    Plus,
    Minus,
    LParen,
    RParen,
    Skip,
    Print,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Number(n) => write!(f, "number {n}"),
            Tok::Assign => write!(f, "':='"),
            Tok::Semi => write!(f, "';'"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::Skip => write!(f, "'skip'"),
            Tok::Print => write!(f, "'print'"),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    column: usize,
}

type Spanned = (Tok, usize, usize);

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0, line: 1, column: 1 }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }

    fn bump(&mut self, c: char) {
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump(c);
                continue;
            }
            if c == '#' {
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump(c);
                }
                continue;
            }
            let (line, column) = (self.line, self.column);
            let tok = match c {
                ';' => {
                    self.bump(c);
                    Tok::Semi
                }
                '+' => {
                    self.bump(c);
                    Tok::Plus
                }
                '-' => {
                    self.bump(c);
                    Tok::Minus
                }
                '(' => {
                    self.bump(c);
                    Tok::LParen
                }
                ')' => {
                    self.bump(c);
                    Tok::RParen
                }
                ':' => {
                    self.bump(c);
                    match self.peek() {
                        Some('=') => {
                            self.bump('=');
                            Tok::Assign
                        }
                        _ => return Err(self.error("expected '=' after ':'")),
                    }
                }
                c if c.is_ascii_digit() => self.number()?,
                c if c.is_ascii_lowercase() => self.word()?,
                other => return Err(self.error(format!("unexpected character {other:?}"))),
            };
            out.push((tok, line, column));
        }
        Ok(out)
    }

    fn number(&mut self) -> Result<Tok, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump(self.peek().unwrap());
        }
        if self.peek() == Some('.') {
            let dot = self.pos;
            self.bump('.');
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                // "3." is not a literal; leave the dot unconsumed-equivalent error
                let _ = dot;
                return Err(self.error("expected digit after decimal point"));
            }
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.bump(self.peek().unwrap());
            }
        }
        let text = &self.src[start..self.pos];
        let value: f64 = text
            .parse()
            .map_err(|_| self.error(format!("invalid number {text:?}")))?;
        if !value.is_finite() {
            return Err(self.error(format!("numeric literal {text:?} out of range")));
        }
        Ok(Tok::Number(value))
    }

    fn word(&mut self) -> Result<Tok, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        {
            self.bump(self.peek().unwrap());
        }
        let text = &self.src[start..self.pos];
        Ok(match text {
            "skip" => Tok::Skip,
            "print" => Tok::Print,
            w if RESERVED_WORDS.contains(&w) => {
                return Err(self.error(format!("reserved word {w:?} cannot be used here")))
            }
            _ => Tok::Ident(text.to_string()),
        })
    }
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or(self.end)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = self.here();
        ParseError { line, column, message: message.into() }
    }

    fn next(&mut self, expected: &str) -> Result<Tok, ParseError> {
        match self.tokens.get(self.pos) {
            Some((t, _, _)) => {
                let t = t.clone();
                self.pos += 1;
                Ok(t)
            }
            None => Err(self.error(format!("expected {expected}, found end of input"))),
        }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(self.error(format!("expected {want}, found {t}"))),
            None => Err(self.error(format!("expected {want}, found end of input"))),
        }
    }

    fn cmd(&mut self) -> Result<Cmd, ParseError> {
        let mut atoms = vec![self.atom()?];
        while self.peek() == Some(&Tok::Semi) {
            self.pos += 1;
            atoms.push(self.atom()?);
        }
        let mut iter = atoms.into_iter().rev();
        let last = iter.next().expect("at least one atom");
        Ok(iter.fold(last, |acc, c| Cmd::seq(c, acc)))
    }

    fn atom(&mut self) -> Result<Cmd, ParseError> {
        let (line, column) = self.here();
        match self.next("a command")? {
            Tok::Skip => Ok(Cmd::Skip),
            Tok::Print => Ok(Cmd::print(self.expr()?)),
            Tok::Ident(name) => {
                let addr = Address::new(name)
                    .map_err(|e| ParseError { line, column, message: e.to_string() })?;
                self.expect(Tok::Assign)?;
                Ok(Cmd::set(addr, self.expr()?))
            }
            other => Err(ParseError {
                line,
                column,
                message: format!("expected a command, found {other}"),
            }),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::plus(lhs, self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::minus(lhs, self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let (line, column) = self.here();
        match self.next("an expression")? {
            Tok::Number(v) => Ok(Expr::num(v)),
            Tok::Ident(name) => {
                let addr = Address::new(name)
                    .map_err(|e| ParseError { line, column, message: e.to_string() })?;
                Ok(Expr::addr(addr))
            }
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            other => Err(ParseError {
                line,
                column,
                message: format!("expected an expression, found {other}"),
            }),
        }
    }
}

pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let end = {
        let lines: Vec<&str> = text.split('\n').collect();
        let line = lines.len();
        let column = lines.last().map(|l| l.chars().count() + 1).unwrap_or(1);
        (line, column)
    };
    let tokens = Lexer::new(text).tokens()?;
    let mut parser = Parser { tokens, pos: 0, end };
    let root = parser.cmd()?;
    if parser.pos < parser.tokens.len() {
        let (tok, line, column) = &parser.tokens[parser.pos];
        return Err(ParseError {
            line: *line,
            column: *column,
            message: format!("unexpected {tok} after end of program"),
        });
    }
    Ok(Program::new(root))
}
