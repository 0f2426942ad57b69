//! Terms, identities and quasi-identities over the signature
//! `→ * ⊔ ⋒ ⊙ ⊕ 0 1`, with a parser, a renderer and exhaustive
//! evaluation on a finite algebra.
//!
//! Concrete syntax: `->` is right-associative and binds loosest; postfix `*`
//! binds tightest; `/\` `\/` `(*)` `(+)` sit in between at equal precedence
//! and chains mixing distinct operators must be parenthesised. Relational
//! atoms are `=`, `<=` and `<=Q`; `|-` separates comma-separated premises
//! from the conclusion. The Unicode operator glyphs and the ASCII function
//! aliases `meet(..)`, `join(..)`, `odot(..)`, `oplus(..)`, `star(..)` are
//! accepted on input.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::algebra::{Conn, FiniteAlgebra};
use crate::axioms::CheckStatus;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Star(Box<Term>),
    Bin(Conn, Box<Term>, Box<Term>),
}

impl Term {
    pub fn star(t: Term) -> Term {
        Term::Star(Box::new(t))
    }

    pub fn bin(op: Conn, l: Term, r: Term) -> Term {
        Term::Bin(op, Box::new(l), Box::new(r))
    }

    pub fn free_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Zero | Term::One => {}
            Term::Star(t) => t.free_vars(out),
            Term::Bin(_, l, r) => {
                l.free_vars(out);
                r.free_vars(out);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Eq,
    Leq,
    LeqQ,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub rel: Rel,
    pub lhs: Term,
    pub rhs: Term,
}

/// A quasi-identity: all free variables universally quantified, empty
/// premises meaning a plain identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub premises: Vec<Atom>,
    pub conclusion: Atom,
}

impl Statement {
    pub fn free_vars(&self) -> Vec<String> {
        let mut set = BTreeSet::new();
        for a in &self.premises {
            a.lhs.free_vars(&mut set);
            a.rhs.free_vars(&mut set);
        }
        self.conclusion.lhs.free_vars(&mut set);
        self.conclusion.rhs.free_vars(&mut set);
        set.into_iter().collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("unknown operator token `{token}` at {line}:{col}")]
    UnknownToken {
        line: usize,
        col: usize,
        token: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Arrow,
    Star,
    Meet,
    Join,
    Odot,
    Oplus,
    LParen,
    RParen,
    Comma,
    Eq,
    Leq,
    LeqQ,
    Turnstile,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            chars: input.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
        let mut out = Vec::new();
        while let Some(&c) = self.chars.peek() {
            let (line, col) = (self.line, self.col);
            match c {
                c if c.is_whitespace() => {
                    self.bump();
                }
                '(' => {
                    self.bump();
                    // `(*)` and `(+)` are single mid-level operator tokens
                    match self.chars.peek() {
                        Some('*') => {
                            self.bump();
                            match self.chars.peek() {
                                Some(')') => {
                                    self.bump();
                                    out.push((Tok::Odot, line, col));
                                }
                                _ => return Err(self.error("expected `)` after `(*`")),
                            }
                        }
                        Some('+') => {
                            self.bump();
                            match self.chars.peek() {
                                Some(')') => {
                                    self.bump();
                                    out.push((Tok::Oplus, line, col));
                                }
                                _ => return Err(self.error("expected `)` after `(+`")),
                            }
                        }
                        _ => out.push((Tok::LParen, line, col)),
                    }
                }
                ')' => {
                    self.bump();
                    out.push((Tok::RParen, line, col));
                }
                ',' => {
                    self.bump();
                    out.push((Tok::Comma, line, col));
                }
                '*' => {
                    self.bump();
                    out.push((Tok::Star, line, col));
                }
                '=' => {
                    self.bump();
                    out.push((Tok::Eq, line, col));
                }
                '-' => {
                    self.bump();
                    match self.chars.peek() {
                        Some('>') => {
                            self.bump();
                            out.push((Tok::Arrow, line, col));
                        }
                        _ => return Err(self.error("expected `>` after `-`")),
                    }
                }
                '<' => {
                    self.bump();
                    if self.chars.peek() != Some(&'=') {
                        return Err(self.error("expected `=` after `<`"));
                    }
                    self.bump();
                    if self.chars.peek() == Some(&'Q') {
                        self.bump();
                        out.push((Tok::LeqQ, line, col));
                    } else {
                        out.push((Tok::Leq, line, col));
                    }
                }
                '|' => {
                    self.bump();
                    match self.chars.peek() {
                        Some('-') => {
                            self.bump();
                            out.push((Tok::Turnstile, line, col));
                        }
                        _ => return Err(self.error("expected `-` after `|`")),
                    }
                }
                '/' => {
                    self.bump();
                    match self.chars.peek() {
                        Some('\\') => {
                            self.bump();
                            out.push((Tok::Meet, line, col));
                        }
                        _ => return Err(self.error("expected `\\` after `/`")),
                    }
                }
                '\\' => {
                    self.bump();
                    match self.chars.peek() {
                        Some('/') => {
                            self.bump();
                            out.push((Tok::Join, line, col));
                        }
                        _ => return Err(self.error("expected `/` after `\\`")),
                    }
                }
                '→' => {
                    self.bump();
                    out.push((Tok::Arrow, line, col));
                }
                '⋒' | '⊓' => {
                    self.bump();
                    out.push((Tok::Meet, line, col));
                }
                '⊔' | '⊎' | '∪' => {
                    self.bump();
                    out.push((Tok::Join, line, col));
                }
                '⊙' => {
                    self.bump();
                    out.push((Tok::Odot, line, col));
                }
                '⊕' => {
                    self.bump();
                    out.push((Tok::Oplus, line, col));
                }
                '0' => {
                    self.bump();
                    out.push((Tok::Zero, line, col));
                }
                '1' => {
                    self.bump();
                    out.push((Tok::One, line, col));
                }
                c if c.is_alphabetic() || c == '_' => {
                    let mut s = String::new();
                    while let Some(&c) = self.chars.peek() {
                        if c.is_alphanumeric() || c == '_' {
                            s.push(c);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    out.push((Tok::Ident(s), line, col));
                }
                other => {
                    return Err(ParseError::UnknownToken {
                        line,
                        col,
                        token: other.to_string(),
                    });
                }
            }
        }
        Ok(out)
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|&(_, l, c)| (l, c))
            .unwrap_or((1, 1))
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::Syntax {
            line,
            col,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let first = self.atom()?;
        if self.peek() == Some(&Tok::Turnstile) || self.peek() == Some(&Tok::Comma) {
            let mut premises = vec![first];
            while self.peek() == Some(&Tok::Comma) {
                self.bump();
                premises.push(self.atom()?);
            }
            self.expect(Tok::Turnstile, "`|-`")?;
            let conclusion = self.atom()?;
            Ok(Statement {
                premises,
                conclusion,
            })
        } else {
            Ok(Statement {
                premises: Vec::new(),
                conclusion: first,
            })
        }
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let lhs = self.term()?;
        let rel = match self.bump() {
            Some(Tok::Eq) => Rel::Eq,
            Some(Tok::Leq) => Rel::Leq,
            Some(Tok::LeqQ) => Rel::LeqQ,
            _ => return Err(self.error("expected `=`, `<=` or `<=Q`")),
        };
        let rhs = self.term()?;
        Ok(Atom { rel, lhs, rhs })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let lhs = self.mid()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.bump();
            let rhs = self.term()?; // right-associative
            Ok(Term::bin(Conn::Imp, lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn mid(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.postfix()?;
        let op = match self.peek() {
            Some(Tok::Meet) => Conn::Meet,
            Some(Tok::Join) => Conn::Join,
            Some(Tok::Odot) => Conn::Odot,
            Some(Tok::Oplus) => Conn::Oplus,
            _ => return Ok(lhs),
        };
        while let Some(tok) = self.peek() {
            let next = match tok {
                Tok::Meet => Conn::Meet,
                Tok::Join => Conn::Join,
                Tok::Odot => Conn::Odot,
                Tok::Oplus => Conn::Oplus,
                _ => break,
            };
            if next != op {
                return Err(
                    self.error("mixing distinct infix operators requires parentheses")
                );
            }
            self.bump();
            let rhs = self.postfix()?;
            lhs = Term::bin(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn postfix(&mut self) -> Result<Term, ParseError> {
        let mut t = self.primary()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            t = Term::star(t);
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        match self.bump() {
            Some(Tok::Zero) => Ok(Term::Zero),
            Some(Tok::One) => Ok(Term::One),
            Some(Tok::LParen) => {
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Some(Tok::Ident(name)) => {
                let alias = match name.as_str() {
                    "meet" => Some(Some(Conn::Meet)),
                    "join" => Some(Some(Conn::Join)),
                    "odot" => Some(Some(Conn::Odot)),
                    "oplus" => Some(Some(Conn::Oplus)),
                    "star" => Some(None),
                    _ => None,
                };
                if let (Some(alias), Some(Tok::LParen)) = (alias, self.peek()) {
                    self.bump();
                    let first = self.term()?;
                    let t = match alias {
                        None => {
                            self.expect(Tok::RParen, "`)`")?;
                            Term::star(first)
                        }
                        Some(op) => {
                            self.expect(Tok::Comma, "`,`")?;
                            let second = self.term()?;
                            self.expect(Tok::RParen, "`)`")?;
                            Term::bin(op, first, second)
                        }
                    };
                    Ok(t)
                } else {
                    Ok(Term::Var(name))
                }
            }
            _ => Err(self.error("expected a term")),
        }
    }
}

/// Parse a statement (identity or quasi-identity).
pub fn parse(input: &str) -> Result<Statement, ParseError> {
    let toks = Lexer::new(input).tokens()?;
    let mut p = Parser { toks, pos: 0 };
    let s = p.statement()?;
    if p.pos != p.toks.len() {
        return Err(p.error("trailing input after statement"));
    }
    Ok(s)
}

/// Parse a single term.
pub fn parse_term(input: &str) -> Result<Term, ParseError> {
    let toks = Lexer::new(input).tokens()?;
    let mut p = Parser { toks, pos: 0 };
    let t = p.term()?;
    if p.pos != p.toks.len() {
        return Err(p.error("trailing input after term"));
    }
    Ok(t)
}

fn render_term(t: &Term, out: &mut String) {
    match t {
        Term::Var(v) => out.push_str(v),
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Star(inner) => {
            if matches!(**inner, Term::Bin(..)) {
                out.push('(');
                render_term(inner, out);
                out.push(')');
            } else {
                render_term(inner, out);
            }
            out.push('*');
        }
        Term::Bin(op, l, r) => {
            for (i, side) in [l, r].into_iter().enumerate() {
                if i == 1 {
                    out.push_str(match op {
                        Conn::Imp => " -> ",
                        Conn::Meet => " /\\ ",
                        Conn::Join => " \\/ ",
                        Conn::Odot => " (*) ",
                        Conn::Oplus => " (+) ",
                    });
                }
                if matches!(**side, Term::Bin(..)) {
                    out.push('(');
                    render_term(side, out);
                    out.push(')');
                } else {
                    render_term(side, out);
                }
            }
        }
    }
}

/// Render to the ASCII concrete syntax; `parse(render(s))` equals `s`.
pub fn render(s: &Statement) -> String {
    let mut out = String::new();
    let render_atom = |a: &Atom, out: &mut String| {
        render_term(&a.lhs, out);
        out.push_str(match a.rel {
            Rel::Eq => " = ",
            Rel::Leq => " <= ",
            Rel::LeqQ => " <=Q ",
        });
        render_term(&a.rhs, out);
    };
    for (i, p) in s.premises.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        render_atom(p, &mut out);
    }
    if !s.premises.is_empty() {
        out.push_str(" |- ");
    }
    render_atom(&s.conclusion, &mut out);
    out
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
}

/// Environment binding variable names to element indices.
pub type Env<'a> = &'a [(String, usize)];

/// Evaluate a term under an environment, by structural recursion over the
/// cached tables.
pub fn eval(a: &FiniteAlgebra, t: &Term, env: Env) -> Result<usize, EvalError> {
    match t {
        Term::Var(v) => env
            .iter()
            .find(|(name, _)| name == v)
            .map(|&(_, x)| x)
            .ok_or_else(|| EvalError::UnboundVariable(v.clone())),
        Term::Zero => Ok(a.zero()),
        Term::One => Ok(a.unit()),
        Term::Star(inner) => Ok(a.star(eval(a, inner, env)?)),
        Term::Bin(op, l, r) => {
            let lv = eval(a, l, env)?;
            let rv = eval(a, r, env)?;
            Ok(a.apply(*op, lv, rv))
        }
    }
}

fn atom_holds(a: &FiniteAlgebra, atom: &Atom, env: Env) -> Result<bool, EvalError> {
    let l = eval(a, &atom.lhs, env)?;
    let r = eval(a, &atom.rhs, env)?;
    Ok(match atom.rel {
        Rel::Eq => l == r,
        Rel::Leq => a.leq(l, r),
        Rel::LeqQ => a.leq_q(l, r),
    })
}

/// Outcome of exhaustively checking a statement on one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementOutcome {
    pub status: CheckStatus,
    /// Least assignment (variables sorted by name, elements in input order)
    /// satisfying the premises but not the conclusion.
    pub witness: Option<Vec<(String, usize)>>,
}

impl StatementOutcome {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// PASS iff every assignment satisfying all premises also satisfies the
/// conclusion.
pub fn check_statement(a: &FiniteAlgebra, s: &Statement) -> Result<StatementOutcome, EvalError> {
    let vars = s.free_vars();
    let n = a.size();
    let k = vars.len();
    let mut env: Vec<(String, usize)> = vars.into_iter().map(|v| (v, 0usize)).collect();
    loop {
        let mut premises_hold = true;
        for p in &s.premises {
            if !atom_holds(a, p, &env)? {
                premises_hold = false;
                break;
            }
        }
        if premises_hold && !atom_holds(a, &s.conclusion, &env)? {
            return Ok(StatementOutcome {
                status: CheckStatus::Fail,
                witness: Some(env),
            });
        }
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(StatementOutcome {
                    status: CheckStatus::Pass,
                    witness: None,
                });
            }
            i -= 1;
            env[i].1 += 1;
            if env[i].1 < n {
                break;
            }
            env[i].1 = 0;
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        render_term(self, &mut s);
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata;

    #[test]
    fn parses_commutativity_identity() {
        let s = parse("(x -> y) -> y = (y -> x) -> x").unwrap();
        assert!(s.premises.is_empty());
        assert_eq!(s.free_vars(), vec!["x".to_string(), "y".to_string()]);
    }

    #[test]
    fn parses_quasi_identity() {
        let s = parse("x <=Q y |- (y -> x) (*) y = x").unwrap();
        assert_eq!(s.premises.len(), 1);
        assert_eq!(s.premises[0].rel, Rel::LeqQ);
        assert_eq!(s.conclusion.rel, Rel::Eq);
    }

    #[test]
    fn parses_exchange_law() {
        let s = parse("x -> (y -> z) = y -> (x -> z)").unwrap();
        let expect = Term::bin(
            Conn::Imp,
            Term::Var("x".into()),
            Term::bin(Conn::Imp, Term::Var("y".into()), Term::Var("z".into())),
        );
        assert_eq!(s.conclusion.lhs, expect);
    }

    #[test]
    fn arrow_is_right_associative() {
        assert_eq!(
            parse_term("x -> y -> z").unwrap(),
            parse_term("x -> (y -> z)").unwrap()
        );
    }

    #[test]
    fn mixed_mid_operators_rejected() {
        let err = parse_term("x /\\ y \\/ z").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { .. }));
    }

    #[test]
    fn unicode_and_aliases() {
        assert_eq!(
            parse_term("x ⋒ y").unwrap(),
            parse_term("meet(x, y)").unwrap()
        );
        assert_eq!(parse_term("x → y").unwrap(), parse_term("x -> y").unwrap());
        assert_eq!(parse_term("star(x)").unwrap(), parse_term("x*").unwrap());
    }

    #[test]
    fn syntax_error_reports_position() {
        match parse("x -> (y") {
            Err(ParseError::Syntax { line, col, .. }) => {
                assert_eq!(line, 1);
                assert!(col >= 7);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_token_reported() {
        assert!(matches!(
            parse("x % y"),
            Err(ParseError::UnknownToken { .. })
        ));
    }

    #[test]
    fn render_round_trip() {
        for src in [
            "(x -> y) -> y = (y -> x) -> x",
            "x <=Q y, y <=Q x |- x = y",
            "x -> (z (*) y*) = ((z -> y) (*) x)*",
            "0 /\\ x = 0",
            "x** = x",
        ] {
            let s = parse(src).unwrap();
            assert_eq!(parse(&render(&s)).unwrap(), s);
        }
    }

    #[test]
    fn eval_on_tables() {
        let a = testdata::qw6();
        let (ea, eb) = (a.element_index("a").unwrap(), a.element_index("b").unwrap());
        let env = vec![("x".to_string(), ea), ("y".to_string(), eb)];
        let t = parse_term("x -> y").unwrap();
        assert_eq!(eval(&a, &t, &env).unwrap(), a.element_index("c").unwrap());
        let t = parse_term("x /\\ y").unwrap();
        let (eb2, ec) = (a.element_index("b").unwrap(), a.element_index("c").unwrap());
        let env = vec![("x".to_string(), eb2), ("y".to_string(), ec)];
        assert_eq!(eval(&a, &t, &env).unwrap(), eb2);
        let t = parse_term("1 -> 1").unwrap();
        assert_eq!(eval(&a, &t, &[]).unwrap(), a.unit());
    }

    #[test]
    fn eval_unbound_variable() {
        let a = testdata::qw6();
        let t = parse_term("x -> y").unwrap();
        assert_eq!(
            eval(&a, &t, &[("x".to_string(), 0)]).unwrap_err(),
            EvalError::UnboundVariable("y".into())
        );
    }

    #[test]
    fn check_statement_examples() {
        let a = testdata::qw6();
        let s = parse("(x -> y) -> y = (y -> x) -> x").unwrap();
        let out = check_statement(&a, &s).unwrap();
        assert_eq!(out.status, CheckStatus::Fail);
        let w = out.witness.unwrap();
        assert_eq!(w[0], ("x".to_string(), a.element_index("a").unwrap()));
        assert_eq!(w[1], ("y".to_string(), a.element_index("c").unwrap()));

        let b = testdata::iom6();
        let s = parse("x <=Q y |- (y -> x) -> x = y").unwrap();
        assert!(check_statement(&b, &s).unwrap().passed());

        for m in [testdata::qw6(), testdata::prew6(), testdata::iom6(), testdata::metaw6()] {
            let s = parse("x** = x").unwrap();
            assert!(check_statement(&m, &s).unwrap().passed());
        }
    }
}
