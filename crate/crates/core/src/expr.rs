//! Element expressions over a chosen algebra.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-' factor | primary
//! primary := rational | symbol | call | '(' expr ')'
//! call    := name '(' expr (',' expr)* ')'
//! ```
//!
//! Symbols are basis names. `*` is required (`2i` is an error) and chains
//! associate to the left, so `a*b*c` is `(a*b)*c` even in a non-associative
//! algebra. Calls: `conj`, `re`, `im` take one argument, `comm` two,
//! `assoc` three.

use std::fmt;

use crate::algebra::{Algebra, Element};
use crate::conjugation::{conjugate, has_conjugation, im_part, re_part};
use crate::error::Error;
use crate::exact::{parse_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Conj,
    Re,
    Im,
    Comm,
    Assoc,
}

impl Func {
    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "conj" => Func::Conj,
            "re" => Func::Re,
            "im" => Func::Im,
            "comm" => Func::Comm,
            "assoc" => Func::Assoc,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Conj => "conj",
            Func::Re => "re",
            Func::Im => "im",
            Func::Comm => "comm",
            Func::Assoc => "assoc",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Conj | Func::Re | Func::Im => 1,
            Func::Comm => 2,
            Func::Assoc => 3,
        }
    }

    fn needs_conjugation(self) -> bool {
        matches!(self, Func::Conj | Func::Re | Func::Im)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Ast {
    Literal(Rational),
    Symbol {
        name: String,
        pos: usize,
    },
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Call {
        func: Func,
        args: Vec<Ast>,
        pos: usize,
    },
}

impl Ast {
    /// True if any `conj`, `re` or `im` call occurs.
    pub fn uses_conjugation(&self) -> bool {
        match self {
            Ast::Literal(_) | Ast::Symbol { .. } => false,
            Ast::Neg(a) => a.uses_conjugation(),
            Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) => {
                a.uses_conjugation() || b.uses_conjugation()
            }
            Ast::Call { func, args, .. } => {
                func.needs_conjugation() || args.iter().any(Ast::uses_conjugation)
            }
        }
    }
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ast::Literal(r) => write!(f, "{r}"),
            Ast::Symbol { name, .. } => f.write_str(name),
            Ast::Neg(a) => write!(f, "-({a})"),
            Ast::Add(a, b) => write!(f, "({a} + {b})"),
            Ast::Sub(a, b) => write!(f, "({a} - {b})"),
            Ast::Mul(a, b) => write!(f, "({a} * {b})"),
            Ast::Call { func, args, .. } => {
                let args: Vec<String> = args.iter().map(ToString::to_string).collect();
                write!(f, "{}({})", func.name(), args.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Comma,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Number(s) | Tok::Ident(s) => write!(f, "{s:?}"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Comma => f.write_str("','"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn syntax(pos: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        message: message.into(),
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, Error> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            toks.push((tok, pos));
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let take_while = |mut j: usize, pred: fn(char) -> bool| {
            while j < chars.len() && pred(chars[j].1) {
                j += 1;
            }
            j
        };
        let slice =
            |a: usize, b: usize| -> String { chars[a..b].iter().map(|&(_, c)| c).collect() };
        if c.is_ascii_digit() {
            let mut j = take_while(i, |c| c.is_ascii_digit());
            if j < chars.len() && chars[j].1 == '/' {
                let k = take_while(j + 1, |c| c.is_ascii_digit());
                if k == j + 1 {
                    return Err(syntax(chars[j].0, "expected digits after '/'"));
                }
                j = k;
            }
            if j < chars.len() && is_ident_char(chars[j].1) {
                return Err(syntax(
                    chars[j].0,
                    format!(
                        "missing '*' between {:?} and {:?}",
                        slice(i, j),
                        slice(j, take_while(j, is_ident_char))
                    ),
                ));
            }
            toks.push((Tok::Number(slice(i, j)), pos));
            i = j;
        } else if is_ident_start(c) {
            let j = take_while(i, is_ident_char);
            toks.push((Tok::Ident(slice(i, j)), pos));
            i = j;
        } else {
            return Err(syntax(pos, format!("unexpected character {c:?}")));
        }
    }
    toks.push((Tok::End, text.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), Error> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(
                self.pos(),
                format!("expected {want}, found {}", self.peek()),
            ))
        }
    }

    fn expr(&mut self) -> Result<Ast, Error> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast, Error> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Ast::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Ast, Error> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Ast::Neg(Box::new(self.factor()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Ast, Error> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Number(s) => parse_rational(&s)
                .map(Ast::Literal)
                .map_err(|e| syntax(pos, e.to_string())),
            Tok::Ident(name) if *self.peek() == Tok::LParen => self.call(name, pos),
            Tok::Ident(name) => Ok(Ast::Symbol { name, pos }),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => Err(syntax(pos, format!("expected operand, found {other}"))),
        }
    }

    fn call(&mut self, name: String, pos: usize) -> Result<Ast, Error> {
        let func = Func::from_name(&name)
            .ok_or_else(|| syntax(pos, format!("unknown function {name:?}")))?;
        self.expect(Tok::LParen)?;
        let mut args = vec![self.expr()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            args.push(self.expr()?);
        }
        self.expect(Tok::RParen)?;
        if args.len() != func.arity() {
            return Err(Error::CallArity {
                name,
                expected: func.arity(),
                found: args.len(),
                pos,
            });
        }
        Ok(Ast::Call { func, args, pos })
    }
}

/// Parses an expression. Symbols are resolved later, against an algebra.
pub fn parse(text: &str) -> Result<Ast, Error> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let ast = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.pos(), format!("unexpected {}", p.peek())));
    }
    Ok(ast)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EvalOptions {
    /// Allow `conj`, `re` and `im` on an algebra that fails the conjugation
    /// check.
    pub force_conjugation: bool,
}

pub fn eval_ast(ast: &Ast, algebra: &Algebra, opts: EvalOptions) -> Result<Element, Error> {
    let rec = |a: &Ast| eval_ast(a, algebra, opts);
    Ok(match ast {
        Ast::Literal(r) => algebra.embed_scalar(r.clone()),
        Ast::Symbol { name, pos } => match algebra.basis_index(name) {
            Some(i) => algebra.basis(i),
            None => {
                return Err(Error::UnknownSymbol {
                    name: name.clone(),
                    pos: *pos,
                })
            }
        },
        Ast::Neg(a) => -&rec(a)?,
        Ast::Add(a, b) => &rec(a)? + &rec(b)?,
        Ast::Sub(a, b) => &rec(a)? - &rec(b)?,
        Ast::Mul(a, b) => &rec(a)? * &rec(b)?,
        Ast::Call { func, args, .. } => {
            if func.needs_conjugation() && !opts.force_conjugation && !has_conjugation(algebra) {
                return Err(Error::ConjugationGuard {
                    call: func.name().to_string(),
                    algebra: algebra.name().to_string(),
                });
            }
            let vals = args.iter().map(rec).collect::<Result<Vec<_>, _>>()?;
            match func {
                Func::Conj => conjugate(&vals[0]),
                Func::Re => algebra.embed_scalar(re_part(&vals[0])),
                Func::Im => im_part(&vals[0]),
                Func::Comm => vals[0].commutator(&vals[1])?,
                Func::Assoc => vals[0].associator(&vals[1], &vals[2])?,
            }
        }
    })
}

/// Parses and evaluates in one step.
pub fn evaluate(text: &str, algebra: &Algebra, opts: EvalOptions) -> Result<Element, Error> {
    eval_ast(&parse(text)?, algebra, opts)
}
