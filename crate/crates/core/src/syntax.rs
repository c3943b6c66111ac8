//! Formulas over `{→, ∧, ∨, ¬}`: parsing, printing, schemes and matching.
//!
//! Precedence from tightest: `~`, `/\`, `\/`, `->`. Implication associates
//! to the right, conjunction and disjunction to the left. `top` stands for
//! `_t -> _t` and `bot` for `~(_t -> _t)`; `_t` is reserved for this.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// The variable used by the `top` and `bot` abbreviations.
pub const TOP_VAR: &str = "_t";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Imp(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {pos}: {message}")]
pub struct ParseError {
    /// Character offset into the input.
    pub pos: usize,
    pub message: String,
}

impl Formula {
    pub fn var(name: &str) -> Self {
        Formula::Var(name.to_string())
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn not(a: Formula) -> Self {
        Formula::Not(Box::new(a))
    }

    /// `_t -> _t`.
    pub fn top() -> Self {
        Formula::imp(Formula::var(TOP_VAR), Formula::var(TOP_VAR))
    }

    /// `~(_t -> _t)`.
    pub fn bot() -> Self {
        Formula::not(Formula::top())
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser::new(text)?.parse_all()
    }

    /// The two sides of an implication.
    pub fn as_imp(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Imp(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn is_imp(&self) -> bool {
        matches!(self, Formula::Imp(..))
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Imp(a, b) | Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Not(a) => a.collect_vars(out),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::Imp(a, b) | Formula::And(a, b) | Formula::Or(a, b) => 1 + a.size() + b.size(),
            Formula::Not(a) => 1 + a.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::Imp(a, b) | Formula::And(a, b) | Formula::Or(a, b) => 1 + a.depth().max(b.depth()),
            Formula::Not(a) => 1 + a.depth(),
        }
    }

    pub fn uses_connectives(&self) -> Connectives {
        let mut c = Connectives::default();
        self.walk(&mut |f| match f {
            Formula::And(..) => c.and = true,
            Formula::Or(..) => c.or = true,
            Formula::Not(..) => c.not = true,
            _ => {}
        });
        c
    }

    fn walk(&self, visit: &mut dyn FnMut(&Formula)) {
        visit(self);
        match self {
            Formula::Var(_) => {}
            Formula::Imp(a, b) | Formula::And(a, b) | Formula::Or(a, b) => {
                a.walk(visit);
                b.walk(visit);
            }
            Formula::Not(a) => a.walk(visit),
        }
    }

    /// Printed with Unicode connectives.
    pub fn to_unicode(&self) -> String {
        let mut s = String::new();
        write_formula(&mut s, self, 0, &UNICODE).expect("writing to a String");
        s
    }
}

/// Which non-implicative connectives occur in a formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Connectives {
    pub and: bool,
    pub or: bool,
    pub not: bool,
}

/// `(f → f) → f`.
pub fn box_formula(f: &Formula) -> Formula {
    Formula::imp(Formula::imp(f.clone(), f.clone()), f.clone())
}

/// All subformulas, children before parents, without repeats.
pub fn subformulas(f: &Formula) -> Vec<Formula> {
    fn go(f: &Formula, seen: &mut HashSet<Formula>, out: &mut Vec<Formula>) {
        match f {
            Formula::Var(_) => {}
            Formula::Imp(a, b) | Formula::And(a, b) | Formula::Or(a, b) => {
                go(a, seen, out);
                go(b, seen, out);
            }
            Formula::Not(a) => go(a, seen, out),
        }
        if seen.insert(f.clone()) {
            out.push(f.clone());
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    go(f, &mut seen, &mut out);
    out
}

// ---------------------------------------------------------------- printing

struct Symbols {
    imp: &'static str,
    and: &'static str,
    or: &'static str,
    not: &'static str,
    top: &'static str,
    bot: &'static str,
}

const ASCII: Symbols = Symbols {
    imp: " -> ",
    and: " /\\ ",
    or: " \\/ ",
    not: "~",
    top: "top",
    bot: "bot",
};

const UNICODE: Symbols = Symbols {
    imp: " → ",
    and: " ∧ ",
    or: " ∨ ",
    not: "¬",
    top: "⊤",
    bot: "⊥",
};

const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_NOT: u8 = 4;

fn is_top(f: &Formula) -> bool {
    matches!(f, Formula::Imp(a, b) if matches!((&**a, &**b), (Formula::Var(x), Formula::Var(y)) if x == TOP_VAR && y == TOP_VAR))
}

fn write_formula(out: &mut dyn fmt::Write, f: &Formula, ctx: u8, sym: &Symbols) -> fmt::Result {
    if is_top(f) {
        return out.write_str(sym.top);
    }
    if let Formula::Not(a) = f {
        if is_top(a) {
            return out.write_str(sym.bot);
        }
    }
    let (prec, text): (u8, Box<dyn Fn(&mut dyn fmt::Write) -> fmt::Result + '_>) = match f {
        Formula::Var(v) => return out.write_str(v),
        Formula::Not(a) => (
            PREC_NOT,
            Box::new(move |o: &mut dyn fmt::Write| {
                o.write_str(sym.not)?;
                write_formula(o, a, PREC_NOT, sym)
            }),
        ),
        Formula::Imp(a, b) => (
            PREC_IMP,
            Box::new(move |o: &mut dyn fmt::Write| {
                write_formula(o, a, PREC_IMP + 1, sym)?;
                o.write_str(sym.imp)?;
                write_formula(o, b, PREC_IMP, sym)
            }),
        ),
        Formula::Or(a, b) => (
            PREC_OR,
            Box::new(move |o: &mut dyn fmt::Write| {
                write_formula(o, a, PREC_OR, sym)?;
                o.write_str(sym.or)?;
                write_formula(o, b, PREC_OR + 1, sym)
            }),
        ),
        Formula::And(a, b) => (
            PREC_AND,
            Box::new(move |o: &mut dyn fmt::Write| {
                write_formula(o, a, PREC_AND, sym)?;
                o.write_str(sym.and)?;
                write_formula(o, b, PREC_AND + 1, sym)
            }),
        ),
    };
    if prec < ctx {
        out.write_char('(')?;
        text(out)?;
        out.write_char(')')
    } else {
        text(out)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, 0, &ASCII)
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Formula::parse(s)
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Formula {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Formula::parse(&text).map_err(serde::de::Error::custom)
    }
}

// ----------------------------------------------------------------- parsing

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(String),
    Imp,
    And,
    Or,
    Not,
    Top,
    Bot,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Var(v) => format!("variable `{v}`"),
        Tok::Imp => "`->`".into(),
        Tok::And => "`/\\`".into(),
        Tok::Or => "`\\/`".into(),
        Tok::Not => "`~`".into(),
        Tok::Top => "`top`".into(),
        Tok::Bot => "`bot`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, message: String| ParseError { pos, message };
    while i < chars.len() {
        let c = chars[i];
        let next = chars.get(i + 1).copied();
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '-' if next == Some('>') => {
                i += 2;
                Tok::Imp
            }
            '/' if next == Some('\\') => {
                i += 2;
                Tok::And
            }
            '\\' if next == Some('/') => {
                i += 2;
                Tok::Or
            }
            '~' | '¬' => {
                i += 1;
                Tok::Not
            }
            '→' => {
                i += 1;
                Tok::Imp
            }
            '∧' => {
                i += 1;
                Tok::And
            }
            '∨' => {
                i += 1;
                Tok::Or
            }
            '⊤' => {
                i += 1;
                Tok::Top
            }
            '⊥' => {
                i += 1;
                Tok::Bot
            }
            '(' => {
                i += 1;
                Tok::LParen
            }
            ')' => {
                i += 1;
                Tok::RParen
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                match word.as_str() {
                    "top" => Tok::Top,
                    "bot" => Tok::Bot,
                    w if w == TOP_VAR || c.is_ascii_lowercase() => Tok::Var(word),
                    _ => return Err(err(start, format!("variable `{word}` must start with a lowercase letter"))),
                }
            }
            other => return Err(err(start, format!("unexpected character `{other}`"))),
        };
        out.push((start, tok));
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(text)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            message: format!("expected {expected}, found {}", describe(self.peek())),
        })
    }

    fn parse_all(mut self) -> Result<Formula, ParseError> {
        let f = self.imp()?;
        if *self.peek() != Tok::End {
            return self.error("a connective or end of input");
        }
        Ok(f)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            let rhs = self.imp()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Var(v) => {
                self.bump();
                Ok(Formula::Var(v))
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::top())
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::bot())
            }
            Tok::LParen => {
                self.bump();
                let f = self.imp()?;
                if *self.peek() != Tok::RParen {
                    return self.error("`)`");
                }
                self.bump();
                Ok(f)
            }
            _ => self.error("a formula"),
        }
    }
}

// ----------------------------------------------------------------- schemes

/// Assignment of formulas to metavariables.
pub type Substitution = BTreeMap<String, Formula>;

/// A formula whose variables are metavariables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scheme {
    pub body: Formula,
}

impl Scheme {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Ok(Scheme {
            body: Formula::parse(text)?,
        })
    }

    pub fn metavars(&self) -> BTreeSet<String> {
        self.body.vars()
    }

    pub fn instantiate(&self, sigma: &Substitution) -> Formula {
        substitute(sigma, &self.body)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.body.fmt(f)
    }
}

/// Simultaneous substitution; unmapped variables stay as they are.
pub fn substitute(sigma: &Substitution, f: &Formula) -> Formula {
    match f {
        Formula::Var(v) => sigma.get(v).cloned().unwrap_or_else(|| f.clone()),
        Formula::Imp(a, b) => Formula::imp(substitute(sigma, a), substitute(sigma, b)),
        Formula::And(a, b) => Formula::and(substitute(sigma, a), substitute(sigma, b)),
        Formula::Or(a, b) => Formula::or(substitute(sigma, a), substitute(sigma, b)),
        Formula::Not(a) => Formula::not(substitute(sigma, a)),
    }
}

/// The substitution making `s` equal to `f`, if there is one.
pub fn match_scheme(s: &Scheme, f: &Formula) -> Option<Substitution> {
    let mut sigma = Substitution::new();
    extend_match(&s.body, f, &mut sigma).then_some(sigma)
}

/// Extends `sigma` so that `pattern` instantiates to `f`.
pub fn extend_match(pattern: &Formula, f: &Formula, sigma: &mut Substitution) -> bool {
    match (pattern, f) {
        (Formula::Var(m), _) => match sigma.get(m) {
            Some(bound) => bound == f,
            None => {
                sigma.insert(m.clone(), f.clone());
                true
            }
        },
        (Formula::Imp(a, b), Formula::Imp(c, d))
        | (Formula::And(a, b), Formula::And(c, d))
        | (Formula::Or(a, b), Formula::Or(c, d)) => extend_match(a, c, sigma) && extend_match(b, d, sigma),
        (Formula::Not(a), Formula::Not(c)) => extend_match(a, c, sigma),
        _ => false,
    }
}
