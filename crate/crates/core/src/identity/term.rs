//! A small language for multilinear identities in three variables.
//!
//! Identities are written as text, e.g.
//!
//! ```text
//! (x prec y) prec z  =  x prec (y prec z) + x prec (y succ z)
//! ```
//!
//! Variables `x, y, z` range over the base algebra and `u, v, w` over a
//! module; an operation is any identifier between two operands. Every term
//! must use the identity's variables once each, in the same left-to-right
//! order, and nest at most two products deep.

use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::linalg::{parse_rational, Rational};

/// Which space a variable ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    /// The (base) algebra.
    A,
    /// The module or target algebra.
    V,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sort::A => f.write_str("A"),
            Sort::V => f.write_str("V"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var { slot: usize, sort: Sort },
    Apply {
        op: String,
        left: Box<Term>,
        right: Box<Term>,
    },
}

impl Term {
    pub fn depth(&self) -> usize {
        match self {
            Term::Var { .. } => 0,
            Term::Apply { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }

    fn leaves(&self, out: &mut Vec<(usize, Sort)>) {
        match self {
            Term::Var { slot, sort } => out.push((*slot, *sort)),
            Term::Apply { left, right, .. } => {
                left.leaves(out);
                right.leaves(out);
            }
        }
    }

    pub fn operations(&self) -> Vec<&str> {
        match self {
            Term::Var { .. } => Vec::new(),
            Term::Apply { op, left, right } => {
                let mut v = left.operations();
                v.push(op);
                v.extend(right.operations());
                v
            }
        }
    }
}

const VAR_NAMES: [[char; 3]; 2] = [['x', 'y', 'z'], ['u', 'v', 'w']];

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var { slot, sort } => {
                let row = if *sort == Sort::A { 0 } else { 1 };
                write!(f, "{}", VAR_NAMES[row][*slot])
            }
            Term::Apply { op, left, right } => {
                let wrap = |t: &Term| match t {
                    Term::Var { .. } => t.to_string(),
                    _ => format!("({t})"),
                };
                write!(f, "{} {op} {}", wrap(left), wrap(right))
            }
        }
    }
}

/// A linear combination of terms.
pub type Combination = Vec<(Rational, Term)>;

/// One scalar identity `lhs = rhs`, quantified over the three slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySchema {
    pub id: String,
    pub lhs: Combination,
    pub rhs: Combination,
    pub slot_sorts: [Sort; 3],
}

impl IdentitySchema {
    /// Parses `lhs` and `rhs` and validates the variable discipline.
    pub fn parse(id: impl Into<String>, lhs: &str, rhs: &str) -> Result<Self> {
        let id = id.into();
        let lhs = parse_combination(&id, lhs)?;
        let rhs = parse_combination(&id, rhs)?;
        let slot_sorts = validate(&id, &lhs, &rhs)?;
        Ok(IdentitySchema {
            id,
            lhs,
            rhs,
            slot_sorts,
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = &(Rational, Term)> {
        self.lhs.iter().chain(self.rhs.iter())
    }
}

impl fmt::Display for IdentitySchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.id, Comb(&self.lhs), Comb(&self.rhs))
    }
}

struct Comb<'a>(&'a Combination);

impl fmt::Display for Comb<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (c, t)) in self.0.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

fn validate(id: &str, lhs: &Combination, rhs: &Combination) -> Result<[Sort; 3]> {
    let err = |message: String| Error::Schema {
        id: id.to_string(),
        message,
    };
    if lhs.is_empty() || rhs.is_empty() {
        return Err(err("both sides need at least one term".into()));
    }
    let mut reference: Option<Vec<(usize, Sort)>> = None;
    for (c, t) in lhs.iter().chain(rhs) {
        if num_traits::Zero::is_zero(c) {
            return Err(err("zero coefficient".into()));
        }
        if t.depth() > 2 {
            return Err(err(format!("`{t}` nests deeper than two products")));
        }
        let mut leaves = Vec::new();
        t.leaves(&mut leaves);
        if leaves.len() != 3 || leaves.iter().enumerate().any(|(k, (slot, _))| *slot != k) {
            return Err(err(format!(
                "`{t}` must use its three variables once each, in order"
            )));
        }
        match &reference {
            None => reference = Some(leaves),
            Some(r) if *r != leaves => {
                return Err(err(format!("`{t}` uses different variables")));
            }
            Some(_) => {}
        }
    }
    let r = reference.expect("non-empty");
    Ok([r[0].1, r[1].1, r[2].1])
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Ident(String),
    Number(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
}

fn tokenize(id: &str, text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '(' => {
                out.push(Token::LParen);
                i += 1
            }
            ')' => {
                out.push(Token::RParen);
                i += 1
            }
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                out.push(Token::Number(chars[start..i].iter().collect()));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => {
                return Err(Error::Schema {
                    id: id.to_string(),
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    id: &'a str,
    tokens: Vec<Token>,
    pos: usize,
    // Variable slots are assigned in order of appearance within each term.
    next_slot: usize,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Schema {
            id: self.id.to_string(),
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn combination(&mut self) -> Result<Combination> {
        let mut out = Vec::new();
        let mut sign = Rational::one();
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            sign = -sign;
        }
        loop {
            let (c, t) = self.signed_term()?;
            out.push((sign.clone() * c, t));
            match self.bump() {
                None => break,
                Some(Token::Plus) => sign = Rational::one(),
                Some(Token::Minus) => sign = -Rational::one(),
                Some(other) => return Err(self.err(format!("unexpected token {other:?}"))),
            }
        }
        Ok(out)
    }

    fn signed_term(&mut self) -> Result<(Rational, Term)> {
        let mut coeff = Rational::one();
        if let Some(Token::Number(n)) = self.peek().cloned() {
            self.bump();
            coeff = parse_rational(&n).ok_or_else(|| self.err(format!("bad coefficient `{n}`")))?;
            if self.peek() == Some(&Token::Star) {
                self.bump();
            }
        }
        self.next_slot = 0;
        let t = self.product()?;
        Ok((coeff, t))
    }

    fn product(&mut self) -> Result<Term> {
        let left = self.operand()?;
        let op = match self.bump() {
            Some(Token::Ident(op)) => op,
            other => return Err(self.err(format!("expected an operation, found {other:?}"))),
        };
        let right = self.operand()?;
        Ok(Term::Apply {
            op,
            left: Box::new(left),
            right: Box::new(right),
        })
    }

    fn operand(&mut self) -> Result<Term> {
        match self.bump() {
            Some(Token::LParen) => {
                let t = self.product()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(t),
                    _ => Err(self.err("missing `)`")),
                }
            }
            Some(Token::Ident(name)) => {
                let mut chars = name.chars();
                let c = chars.next().unwrap_or(' ');
                if chars.next().is_some() {
                    return Err(self.err(format!("`{name}` is not a variable")));
                }
                let (sort, slot) = match c {
                    'x' | 'y' | 'z' => (Sort::A, c as usize - 'x' as usize),
                    'u' | 'v' | 'w' => (Sort::V, c as usize - 'u' as usize),
                    _ => return Err(self.err(format!("`{name}` is not a variable"))),
                };
                if slot != self.next_slot {
                    // Slot letters are positional: the k-th leaf must be the
                    // k-th letter of its sort's alphabet.
                    return Err(self.err(format!("variable `{name}` out of order")));
                }
                self.next_slot += 1;
                Ok(Term::Var { slot, sort })
            }
            other => Err(self.err(format!("expected an operand, found {other:?}"))),
        }
    }
}

/// Parses a `+`/`-` separated sum of (optionally scaled) products.
pub fn parse_combination(id: &str, text: &str) -> Result<Combination> {
    let tokens = tokenize(id, text)?;
    let mut p = Parser {
        id,
        tokens,
        pos: 0,
        next_slot: 0,
    };
    p.combination()
}
