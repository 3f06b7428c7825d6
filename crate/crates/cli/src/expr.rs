//! The poset expression language.
//!
//! ```text
//! expr := term (('*' | '<>') term)*
//! term := name '(' args ')' | '@' path | '(' expr ')'
//! ```
//!
//! `*` is the Cartesian product and `<>` the dual diamond product; both are
//! left-associative with equal precedence.

use std::fmt;
use std::path::{Path, PathBuf};

use majordex::poset::{
    bipyr_poset, boolean_algebra, cartesian_product, chain, cross_polytope, dual_diamond, fan_poset, pyr_poset,
    simplex_lattice, t_poset, GradedPoset,
};
use majordex::rlabel::LabeledPoset;
use thiserror::Error;

use crate::io::{read_poset_file, IoError};

/// Largest element count any intermediate poset may reach.
pub const MAX_ELEMENTS: usize = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    Boolean,
    Chain,
    T,
    Cross,
    Simplex,
    Fan,
}

impl Atom {
    const ALL: [Atom; 6] = [
        Atom::Boolean,
        Atom::Chain,
        Atom::T,
        Atom::Cross,
        Atom::Simplex,
        Atom::Fan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Atom::Boolean => "B",
            Atom::Chain => "chain",
            Atom::T => "T",
            Atom::Cross => "cross",
            Atom::Simplex => "simplex",
            Atom::Fan => "fan",
        }
    }

    /// Accepted parameter range, chosen so the poset stays small enough
    /// for flag enumeration.
    pub fn range(self) -> (u64, u64) {
        match self {
            Atom::Boolean => (1, 12),
            Atom::Chain => (1, 60),
            Atom::T => (0, 10),
            Atom::Cross => (0, 9),
            Atom::Simplex => (0, 11),
            Atom::Fan => (1, 1000),
        }
    }

    fn build(self, n: usize) -> GradedPoset {
        match self {
            Atom::Boolean => boolean_algebra(n),
            Atom::Chain => chain(n),
            Atom::T => t_poset(n),
            Atom::Cross => cross_polytope(n),
            Atom::Simplex => simplex_lattice(n),
            Atom::Fan => fan_poset(n).expect("parameter checked at parse time"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetExpr {
    Atom(Atom, usize),
    File(PathBuf),
    Pyr(Box<PosetExpr>),
    Bipyr(Box<PosetExpr>),
    Product(Box<PosetExpr>, Box<PosetExpr>),
    Diamond(Box<PosetExpr>, Box<PosetExpr>),
}

impl fmt::Display for PosetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetExpr::Atom(a, n) => write!(f, "{}({n})", a.name()),
            PosetExpr::File(p) => write!(f, "@{}", p.display()),
            PosetExpr::Pyr(e) => write!(f, "pyr({e})"),
            PosetExpr::Bipyr(e) => write!(f, "bipyr({e})"),
            PosetExpr::Product(l, r) => write!(f, "({l} * {r})"),
            PosetExpr::Diamond(l, r) => write!(f, "({l} <> {r})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax {
        expected: String,
        found: String,
    },
    UnknownConstructor(String),
    Arity {
        name: String,
        expected: usize,
        found: usize,
    },
    Range {
        name: String,
        value: String,
        min: u64,
        max: u64,
    },
}

/// A parse error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax { expected, found } => write!(f, "expected {expected}, found {found}"),
            ParseErrorKind::UnknownConstructor(name) => write!(f, "unknown constructor {name:?}"),
            ParseErrorKind::Arity { name, expected, found } => {
                write!(f, "{name} takes {expected} argument(s), found {found}")
            }
            ParseErrorKind::Range { name, value, min, max } => {
                write!(f, "argument {value} of {name} is outside {min}..={max}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    LParen,
    RParen,
    Comma,
    Star,
    Diamond,
    File(String),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "name {s:?}"),
            Tok::Int(s) => write!(f, "integer {s}"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Comma => f.write_str("','"),
            Tok::Star => f.write_str("'*'"),
            Tok::Diamond => f.write_str("'<>'"),
            Tok::File(p) => write!(f, "file @{p}"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut column) = (0, 1, 1);
    let mut out = Vec::new();
    let advance = |i: &mut usize, line: &mut usize, column: &mut usize| {
        if chars[*i] == '\n' {
            *line += 1;
            *column = 1;
        } else {
            *column += 1;
        }
        *i += 1;
    };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut column);
            continue;
        }
        let (start_line, start_col) = (line, column);
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '*' => Tok::Star,
            '<' if chars.get(i + 1) == Some(&'>') => {
                advance(&mut i, &mut line, &mut column);
                Tok::Diamond
            }
            '@' => {
                let mut path = String::new();
                while i + 1 < chars.len() && !chars[i + 1].is_whitespace() && !"(),*".contains(chars[i + 1]) {
                    advance(&mut i, &mut line, &mut column);
                    path.push(chars[i]);
                }
                Tok::File(path)
            }
            c if c.is_ascii_digit() || c == '-' => {
                let mut s = c.to_string();
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    advance(&mut i, &mut line, &mut column);
                    s.push(chars[i]);
                }
                Tok::Int(s)
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut s = c.to_string();
                while i + 1 < chars.len() && (chars[i + 1].is_alphanumeric() || chars[i + 1] == '_') {
                    advance(&mut i, &mut line, &mut column);
                    s.push(chars[i]);
                }
                Tok::Ident(s)
            }
            other => {
                return Err(ParseError {
                    line,
                    column,
                    kind: ParseErrorKind::Syntax {
                        expected: "an expression".into(),
                        found: format!("{other:?}"),
                    },
                })
            }
        };
        advance(&mut i, &mut line, &mut column);
        out.push(Spanned {
            tok,
            line: start_line,
            column: start_col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Spanned, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: t.line,
            column: t.column,
            kind,
        }
    }

    fn unexpected(t: &Spanned, expected: &str) -> ParseError {
        Self::error_at(
            t,
            ParseErrorKind::Syntax {
                expected: expected.into(),
                found: t.tok.to_string(),
            },
        )
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<Spanned, ParseError> {
        let t = self.bump();
        if t.tok == tok {
            Ok(t)
        } else {
            Err(Self::unexpected(&t, expected))
        }
    }

    fn expr(&mut self) -> Result<PosetExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.bump();
                    lhs = PosetExpr::Product(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Diamond => {
                    self.bump();
                    lhs = PosetExpr::Diamond(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<PosetExpr, ParseError> {
        let t = self.bump();
        match t.tok.clone() {
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::File(path) if path.is_empty() => Err(Self::unexpected(&t, "a file path after '@'")),
            Tok::File(path) => Ok(PosetExpr::File(PathBuf::from(path))),
            Tok::Ident(name) => self.constructor(&t, &name),
            _ => Err(Self::unexpected(&t, "a constructor, '@file' or '('")),
        }
    }

    fn constructor(&mut self, at: &Spanned, name: &str) -> Result<PosetExpr, ParseError> {
        let unary: Option<fn(Box<PosetExpr>) -> PosetExpr> = match name {
            "pyr" => Some(PosetExpr::Pyr),
            "bipyr" => Some(PosetExpr::Bipyr),
            _ => None,
        };
        let atom = Atom::ALL.into_iter().find(|a| a.name() == name);
        if unary.is_none() && atom.is_none() {
            return Err(Self::error_at(at, ParseErrorKind::UnknownConstructor(name.to_string())));
        }
        self.expect(Tok::LParen, "'('")?;
        if let Some(wrap) = unary {
            let inner = self.expr()?;
            self.close_args(name, 1)?;
            return Ok(wrap(Box::new(inner)));
        }
        let atom = atom.expect("checked above");
        let t = self.bump();
        let Tok::Int(text) = &t.tok else {
            if t.tok == Tok::RParen {
                return Err(Self::error_at(
                    &t,
                    ParseErrorKind::Arity {
                        name: name.into(),
                        expected: 1,
                        found: 0,
                    },
                ));
            }
            return Err(Self::unexpected(&t, "an integer"));
        };
        let (min, max) = atom.range();
        let range_error = || {
            Self::error_at(
                &t,
                ParseErrorKind::Range {
                    name: name.into(),
                    value: text.clone(),
                    min,
                    max,
                },
            )
        };
        let value: u64 = text.parse().map_err(|_| range_error())?;
        if value < min || value > max {
            return Err(range_error());
        }
        self.close_args(name, 1)?;
        Ok(PosetExpr::Atom(atom, value as usize))
    }

    /// Consumes the closing parenthesis, counting any surplus arguments.
    fn close_args(&mut self, name: &str, expected: usize) -> Result<(), ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::RParen => {
                self.bump();
                Ok(())
            }
            Tok::Comma => {
                let mut found = expected;
                while self.peek().tok == Tok::Comma {
                    self.bump();
                    found += 1;
                    match self.peek().tok {
                        Tok::Eof => break,
                        Tok::Int(_) => {
                            self.bump();
                        }
                        _ => {
                            self.expr()?;
                        }
                    }
                }
                Err(Self::error_at(
                    &t,
                    ParseErrorKind::Arity {
                        name: name.into(),
                        expected,
                        found,
                    },
                ))
            }
            _ => Err(Self::unexpected(&t, "')' or ','")),
        }
    }
}

pub fn parse(src: &str) -> Result<PosetExpr, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::Eof {
        return Err(Parser::unexpected(t, "'*', '<>' or end of input"));
    }
    Ok(e)
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("{0} would have more than {MAX_ELEMENTS} elements")]
    TooLarge(String),
}

/// An evaluated expression; `labeled` is kept only for a bare `@file`
/// that carries labels.
#[derive(Debug, Clone)]
pub struct Evaluated {
    pub poset: GradedPoset,
    pub labeled: Option<LabeledPoset>,
}

impl PosetExpr {
    /// Builds the poset, resolving relative `@file` paths against `base`.
    pub fn eval(&self, base: &Path) -> Result<Evaluated, EvalError> {
        if let PosetExpr::File(path) = self {
            let (poset, labeled) = read_poset_file(&base.join(path))?;
            return Ok(Evaluated { poset, labeled });
        }
        Ok(Evaluated {
            poset: self.build(base)?,
            labeled: None,
        })
    }

    fn build(&self, base: &Path) -> Result<GradedPoset, EvalError> {
        let guard = |len: usize, what: &dyn Fn() -> String| {
            if len > MAX_ELEMENTS {
                Err(EvalError::TooLarge(what()))
            } else {
                Ok(())
            }
        };
        Ok(match self {
            PosetExpr::Atom(a, n) => a.build(*n),
            PosetExpr::File(path) => read_poset_file(&base.join(path))?.0,
            PosetExpr::Pyr(e) => {
                let p = e.build(base)?;
                guard(2 * p.len(), &|| self.to_string())?;
                pyr_poset(&p)
            }
            PosetExpr::Bipyr(e) => {
                let p = e.build(base)?;
                guard(3 * p.len(), &|| self.to_string())?;
                bipyr_poset(&p)
            }
            PosetExpr::Product(l, r) => {
                let (p, q) = (l.build(base)?, r.build(base)?);
                guard(p.len().saturating_mul(q.len()), &|| self.to_string())?;
                cartesian_product(&p, &q)
            }
            PosetExpr::Diamond(l, r) => {
                let (p, q) = (l.build(base)?, r.build(base)?);
                guard(p.len().saturating_mul(q.len()), &|| self.to_string())?;
                dual_diamond(&p, &q)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(src: &str) -> ParseError {
        parse(src).unwrap_err()
    }

    #[test]
    fn parses_constructions() {
        assert_eq!(
            parse("bipyr(T(2))").unwrap(),
            PosetExpr::Bipyr(Box::new(PosetExpr::Atom(Atom::T, 2)))
        );
        assert_eq!(
            parse("B(2) <> B(2)").unwrap(),
            PosetExpr::Diamond(
                Box::new(PosetExpr::Atom(Atom::Boolean, 2)),
                Box::new(PosetExpr::Atom(Atom::Boolean, 2))
            )
        );
        assert_eq!(
            parse("@dir/p.json").unwrap(),
            PosetExpr::File(PathBuf::from("dir/p.json"))
        );
    }

    #[test]
    fn operators_associate_left() {
        let e = parse("B(1) * chain(2) <> fan(3)").unwrap();
        assert_eq!(e.to_string(), "((B(1) * chain(2)) <> fan(3))");
        let e = parse("B(1) * (chain(2) <> fan(3))").unwrap();
        assert_eq!(e.to_string(), "(B(1) * (chain(2) <> fan(3)))");
    }

    #[test]
    fn reports_positions() {
        let e = err("B(2 *");
        assert_eq!((e.line, e.column), (1, 5));
        assert!(matches!(e.kind, ParseErrorKind::Syntax { ref expected, .. } if expected == "')' or ','"));
        let e = err("B(2) *\n  chain(");
        assert_eq!((e.line, e.column), (2, 9));
        let e = err("B(2) B(3)");
        assert_eq!((e.line, e.column), (1, 6));
    }

    #[test]
    fn reports_constructor_problems() {
        assert_eq!(err("cube(3)").kind, ParseErrorKind::UnknownConstructor("cube".into()));
        assert!(matches!(
            err("B(2, 3)").kind,
            ParseErrorKind::Arity {
                expected: 1,
                found: 2,
                ..
            }
        ));
        assert!(matches!(
            err("B()").kind,
            ParseErrorKind::Arity {
                expected: 1,
                found: 0,
                ..
            }
        ));
        assert!(matches!(err("B(0)").kind, ParseErrorKind::Range { min: 1, .. }));
        assert!(matches!(err("fan(-1)").kind, ParseErrorKind::Range { .. }));
        assert!(matches!(
            err("B(99999999999999999999999)").kind,
            ParseErrorKind::Range { .. }
        ));
        assert!(matches!(err("pyr(3)").kind, ParseErrorKind::Syntax { .. }));
        assert!(matches!(err("@").kind, ParseErrorKind::Syntax { .. }));
    }

    #[test]
    fn evaluates() {
        let base = Path::new(".");
        let square = parse("B(2) <> B(2)").unwrap().eval(base).unwrap().poset;
        assert_eq!(square.flag_f(), cross_polytope(2).flag_f());
        let b3 = parse("B(1) * B(1) * B(1)").unwrap().eval(base).unwrap().poset;
        assert_eq!(b3.flag_f(), boolean_algebra(3).flag_f());
        assert!(matches!(
            parse("B(12) * B(12)").unwrap().eval(base),
            Err(EvalError::TooLarge(_))
        ));
    }
}
