//! Hilbert-style calculi R4, IR4, R4*, IR4*, R4† and R4⁺: proof objects, a
//! line-by-line checker, the deduction-theorem transformation, a corpus of
//! worked derivations and a small bounded proof search.
//!
//! Line indices are 0-based. `MP(i, j)` cites the minor premise `i` and the
//! implication `j`; `C(i, j)` cites `δ → α` then `δ → β`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::syntax::{extend_match, subformulas, substitute, Formula, Scheme, Substitution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Calculus {
    R4,
    IR4,
    R4Star,
    IR4Star,
    R4Dagger,
    R4Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    MP,
    T,
    C,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::MP => "MP",
            Rule::T => "T",
            Rule::C => "C",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown calculus `{0}` (expected R4, IR4, R4star, IR4star, R4dagger or R4plus)")]
pub struct UnknownCalculus(pub String);

impl Calculus {
    pub const ALL: [Calculus; 6] = [
        Calculus::R4,
        Calculus::IR4,
        Calculus::R4Star,
        Calculus::IR4Star,
        Calculus::R4Dagger,
        Calculus::R4Plus,
    ];

    /// ASCII name used in proof scripts.
    pub fn as_str(self) -> &'static str {
        match self {
            Calculus::R4 => "R4",
            Calculus::IR4 => "IR4",
            Calculus::R4Star => "R4star",
            Calculus::IR4Star => "IR4star",
            Calculus::R4Dagger => "R4dagger",
            Calculus::R4Plus => "R4plus",
        }
    }

    pub fn pretty(self) -> &'static str {
        match self {
            Calculus::R4 => "R4",
            Calculus::IR4 => "IR4",
            Calculus::R4Star => "R4*",
            Calculus::IR4Star => "IR4*",
            Calculus::R4Dagger => "R4†",
            Calculus::R4Plus => "R4⁺",
        }
    }

    pub fn spec(self) -> CalculusSpec {
        let pick = |table: &[(&'static str, &'static str)], labels: &[&str]| -> Vec<(&'static str, Scheme)> {
            table
                .iter()
                .filter(|(l, _)| labels.contains(l))
                .map(|&(l, s)| (l, Scheme::parse(s).expect("built-in scheme parses")))
                .collect()
        };
        let star_all = ["Ax1", "Ax2", "Ax3", "C1", "C2", "C3", "D1", "D2", "D3", "N1", "N2", "Dist"];
        let (axioms, rules) = match self {
            Calculus::R4 => (pick(R4_SCHEMES, &R4_SCHEMES.iter().map(|p| p.0).collect::<Vec<_>>()), vec![Rule::MP]),
            Calculus::IR4 => (pick(R4_SCHEMES, &["A1", "A2", "A3"]), vec![Rule::MP]),
            Calculus::R4Star => (pick(R4STAR_SCHEMES, &star_all), vec![Rule::MP, Rule::T]),
            Calculus::IR4Star => (pick(R4STAR_SCHEMES, &["Ax1", "Ax2", "Ax3"]), vec![Rule::MP, Rule::T]),
            Calculus::R4Dagger => (pick(R4STAR_SCHEMES, &star_all[..11]), vec![Rule::MP, Rule::T]),
            Calculus::R4Plus => {
                let labels: Vec<&str> = star_all[..11].iter().copied().filter(|&l| l != "C3").collect();
                (pick(R4STAR_SCHEMES, &labels), vec![Rule::MP, Rule::T, Rule::C])
            }
        };
        CalculusSpec {
            name: self,
            axioms,
            rules,
        }
    }
}

impl serde::Serialize for Calculus {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.pretty())
    }
}

impl FromStr for Calculus {
    type Err = UnknownCalculus;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "R4" => Calculus::R4,
            "IR4" => Calculus::IR4,
            "R4star" | "R4*" => Calculus::R4Star,
            "IR4star" | "IR4*" => Calculus::IR4Star,
            "R4dagger" | "R4dag" | "R4†" => Calculus::R4Dagger,
            "R4plus" | "R4+" | "R4⁺" => Calculus::R4Plus,
            _ => return Err(UnknownCalculus(s.to_string())),
        })
    }
}

const R4_SCHEMES: &[(&str, &str)] = &[
    ("A1", "alpha -> alpha"),
    ("A2", "(alpha -> beta) -> delta -> alpha -> beta"),
    ("A3", "(alpha -> beta -> delta) -> (alpha -> beta) -> alpha -> delta"),
    ("A4", "alpha /\\ beta -> alpha"),
    ("A5", "alpha /\\ beta -> beta"),
    ("A6", "(delta -> alpha) -> (delta -> beta) -> delta -> alpha /\\ beta"),
    ("A7", "alpha -> alpha \\/ beta"),
    ("A8", "beta -> alpha \\/ beta"),
    ("A9", "(alpha -> delta) -> (beta -> delta) -> alpha \\/ beta -> delta"),
    ("A10", "alpha /\\ (beta \\/ delta) -> alpha /\\ beta \\/ alpha /\\ delta"),
    ("A11", "~alpha -> alpha -> beta"),
    ("A12", "(alpha -> ~alpha) -> ~alpha"),
];

const R4STAR_SCHEMES: &[(&str, &str)] = &[
    ("Ax1", "alpha -> alpha"),
    ("Ax2", "(alpha -> beta) -> (beta -> delta) -> alpha -> delta"),
    ("Ax3", "(alpha -> beta -> delta) -> (alpha -> beta) -> alpha -> delta"),
    ("C1", "alpha /\\ beta -> alpha"),
    ("C2", "alpha /\\ beta -> beta"),
    ("C3", "(delta -> alpha) -> (delta -> beta) -> delta -> alpha /\\ beta"),
    ("D1", "alpha -> alpha \\/ beta"),
    ("D2", "beta -> alpha \\/ beta"),
    ("D3", "(alpha -> delta) -> (beta -> delta) -> alpha \\/ beta -> delta"),
    ("N1", "~alpha -> alpha -> beta"),
    ("N2", "(alpha -> ~alpha) -> ~alpha"),
    ("Dist", "alpha /\\ (beta \\/ delta) -> alpha /\\ beta \\/ alpha /\\ delta"),
];

/// The axiom schemes and rules of one calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CalculusSpec {
    pub name: Calculus,
    pub axioms: Vec<(&'static str, Scheme)>,
    pub rules: Vec<Rule>,
}

impl CalculusSpec {
    pub fn scheme(&self, label: &str) -> Option<&Scheme> {
        self.axioms.iter().find(|(l, _)| *l == label).map(|(_, s)| s)
    }

    pub fn has_rule(&self, r: Rule) -> bool {
        self.rules.contains(&r)
    }

    /// Label of the `(A3)`/`(Ax3)` scheme, shared by both families.
    fn s_label(&self) -> &'static str {
        if self.scheme("A3").is_some() {
            "A3"
        } else {
            "Ax3"
        }
    }

    fn id_label(&self) -> &'static str {
        if self.scheme("A1").is_some() {
            "A1"
        } else {
            "Ax1"
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Hyp(usize),
    /// The substitution is optional; when absent the checker finds one.
    Axiom { label: String, subst: Option<Substitution> },
    MP(usize, usize),
    T(usize),
    C(usize, usize),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Hyp(i) => write!(f, "hyp:{i}"),
            Justification::Axiom { label, .. } => write!(f, "axiom:{label}"),
            Justification::MP(i, j) => write!(f, "mp:{i},{j}"),
            Justification::T(i) => write!(f, "t:{i}"),
            Justification::C(i, j) => write!(f, "c:{i},{j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad rule `{0}` (expected axiom:LABEL, hyp:N, mp:I,J, t:I or c:I,J)")]
pub struct BadRule(pub String);

impl FromStr for Justification {
    type Err = BadRule;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BadRule(s.to_string());
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let two = |t: &str| -> Result<(usize, usize), BadRule> {
            let (a, b) = t.split_once(',').ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };
        Ok(match kind.trim() {
            "hyp" => Justification::Hyp(num(arg)?),
            "axiom" if !arg.trim().is_empty() => Justification::Axiom {
                label: arg.trim().to_string(),
                subst: None,
            },
            "mp" => {
                let (i, j) = two(arg)?;
                Justification::MP(i, j)
            }
            "t" => Justification::T(num(arg)?),
            "c" => {
                let (i, j) = two(arg)?;
                Justification::C(i, j)
            }
            _ => return Err(bad()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub formula: Formula,
    pub just: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub calculus: Calculus,
    pub hypotheses: Vec<Formula>,
    pub lines: Vec<ProofLine>,
}

impl Proof {
    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }

    /// Checks against the proof's own calculus.
    pub fn check(&self) -> ProofVerdict {
        check_proof(&self.calculus.spec(), self)
    }

    pub fn uses(&self, pred: impl Fn(&Justification) -> bool) -> bool {
        self.lines.iter().any(|l| pred(&l.just))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum LineError {
    #[error("the proof has no lines")]
    Empty,
    #[error("cites line {0}, which does not precede it")]
    BadCitation(usize),
    #[error("hypothesis {0} does not exist")]
    NoSuchHypothesis(usize),
    #[error("formula differs from hypothesis {0}")]
    HypothesisMismatch(usize),
    #[error("no axiom scheme `{0}` in this calculus")]
    UnknownAxiom(String),
    #[error("not an instance of {0}")]
    NotAnInstance(String),
    #[error("rule {0} is not in this calculus")]
    RuleNotInCalculus(Rule),
    #[error("modus ponens needs the second cited line to be the first one implying this line")]
    ModusPonensShape,
    #[error("rule T needs this line to be β → (cited line)")]
    TShape,
    #[error("rule C needs δ → α, δ → β and this line δ → (α ∧ β)")]
    CShape,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineDiagnostic {
    pub line: usize,
    pub error: LineError,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofVerdict {
    pub valid: bool,
    pub diagnostics: Vec<LineDiagnostic>,
}

fn check_line(c: &CalculusSpec, p: &Proof, k: usize) -> Result<(), LineError> {
    let this = &p.lines[k].formula;
    let cite = |i: usize| -> Result<&Formula, LineError> {
        if i < k {
            Ok(&p.lines[i].formula)
        } else {
            Err(LineError::BadCitation(i))
        }
    };
    let need = |r: Rule| if c.has_rule(r) { Ok(()) } else { Err(LineError::RuleNotInCalculus(r)) };
    match &p.lines[k].just {
        Justification::Hyp(i) => match p.hypotheses.get(*i) {
            None => Err(LineError::NoSuchHypothesis(*i)),
            Some(h) if h != this => Err(LineError::HypothesisMismatch(*i)),
            Some(_) => Ok(()),
        },
        Justification::Axiom { label, subst } => {
            let scheme = c.scheme(label).ok_or_else(|| LineError::UnknownAxiom(label.clone()))?;
            let ok = match subst {
                Some(sigma) => substitute(sigma, &scheme.body) == *this,
                None => extend_match(&scheme.body, this, &mut Substitution::new()),
            };
            if ok {
                Ok(())
            } else {
                Err(LineError::NotAnInstance(label.clone()))
            }
        }
        Justification::MP(i, j) => {
            need(Rule::MP)?;
            let (minor, major) = (cite(*i)?, cite(*j)?);
            match major.as_imp() {
                Some((a, b)) if a == minor && b == this => Ok(()),
                _ => Err(LineError::ModusPonensShape),
            }
        }
        Justification::T(i) => {
            need(Rule::T)?;
            let prev = cite(*i)?;
            match this.as_imp() {
                Some((_, b)) if b == prev => Ok(()),
                _ => Err(LineError::TShape),
            }
        }
        Justification::C(i, j) => {
            need(Rule::C)?;
            let (l, r) = (cite(*i)?, cite(*j)?);
            match (l.as_imp(), r.as_imp(), this.as_imp()) {
                (Some((d1, a)), Some((d2, b)), Some((d3, Formula::And(x, y))))
                    if d1 == d2 && d2 == d3 && **x == *a && **y == *b =>
                {
                    Ok(())
                }
                _ => Err(LineError::CShape),
            }
        }
    }
}

/// Checks every line; the proof is valid iff there are no diagnostics.
pub fn check_proof(c: &CalculusSpec, p: &Proof) -> ProofVerdict {
    let mut diagnostics = Vec::new();
    if p.lines.is_empty() {
        diagnostics.push(LineDiagnostic {
            line: 0,
            message: LineError::Empty.to_string(),
            error: LineError::Empty,
        });
    }
    for k in 0..p.lines.len() {
        if let Err(error) = check_line(c, p, k) {
            diagnostics.push(LineDiagnostic {
                line: k,
                message: error.to_string(),
                error,
            });
        }
    }
    ProofVerdict {
        valid: diagnostics.is_empty(),
        diagnostics,
    }
}

// ---------------------------------------------------------------- building

/// Appends lines while computing conclusions, so corpus proofs only spell
/// out hypotheses and axiom instances.
pub struct ProofBuilder {
    calculus: Calculus,
    hypotheses: Vec<Formula>,
    lines: Vec<ProofLine>,
}

fn f(text: &str) -> Formula {
    Formula::parse(text).expect("built-in formula parses")
}

impl ProofBuilder {
    pub fn new(calculus: Calculus, hypotheses: Vec<Formula>) -> Self {
        ProofBuilder {
            calculus,
            hypotheses,
            lines: Vec::new(),
        }
    }

    fn push(&mut self, formula: Formula, just: Justification) -> usize {
        self.lines.push(ProofLine { formula, just });
        self.lines.len() - 1
    }

    pub fn formula(&self, i: usize) -> &Formula {
        &self.lines[i].formula
    }

    pub fn hyp(&mut self, i: usize) -> usize {
        let h = self.hypotheses[i].clone();
        self.push(h, Justification::Hyp(i))
    }

    pub fn axiom(&mut self, label: &str, formula: Formula) -> usize {
        self.push(
            formula,
            Justification::Axiom {
                label: label.to_string(),
                subst: None,
            },
        )
    }

    /// Instance of a scheme of this calculus; metavariables not given stay.
    pub fn instance(&mut self, label: &str, sigma: &[(&str, Formula)]) -> usize {
        let spec = self.calculus.spec();
        let scheme = spec.scheme(label).expect("scheme exists in calculus");
        let sigma: Substitution = sigma.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        self.axiom(label, scheme.instantiate(&sigma))
    }

    /// From `i: φ` and `j: φ → ψ`, derive `ψ`.
    pub fn mp(&mut self, i: usize, j: usize) -> usize {
        let b = self.formula(j).as_imp().expect("major premise is an implication").1.clone();
        self.push(b, Justification::MP(i, j))
    }

    pub fn t(&mut self, i: usize, beta: Formula) -> usize {
        let g = Formula::imp(beta, self.formula(i).clone());
        self.push(g, Justification::T(i))
    }

    pub fn c(&mut self, i: usize, j: usize) -> usize {
        let (d, a) = self.formula(i).as_imp().expect("δ → α");
        let (_, b) = self.formula(j).as_imp().expect("δ → β");
        let g = Formula::imp(d.clone(), Formula::and(a.clone(), b.clone()));
        self.push(g, Justification::C(i, j))
    }

    /// Transitivity: from `i: φ → ψ` and `j: ψ → χ` derive `φ → χ` through
    /// an (Ax2) instance and two modus ponens steps.
    pub fn chain(&mut self, i: usize, j: usize) -> usize {
        let (a, b) = self.formula(i).as_imp().expect("φ → ψ");
        let (_, d) = self.formula(j).as_imp().expect("ψ → χ");
        let (a, b, d) = (a.clone(), b.clone(), d.clone());
        let ax = self.instance("Ax2", &[("alpha", a), ("beta", b), ("delta", d)]);
        let k = self.mp(i, ax);
        self.mp(j, k)
    }

    pub fn finish(self) -> Proof {
        Proof {
            calculus: self.calculus,
            hypotheses: self.hypotheses,
            lines: self.lines,
        }
    }
}

// ------------------------------------------------------------- deduction

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeductionError {
    #[error("the input proof is not valid: {0}")]
    InvalidInput(String),
    #[error("the proof has no hypotheses to discharge")]
    NoHypotheses,
    #[error("hypothesis {0} is not an implication")]
    NotAnImplication(usize),
    #[error("line {0} uses rule {1}, which the transformation does not support")]
    UnsupportedRule(usize, Rule),
    #[error("the transformed proof does not check: {0}")]
    Internal(String),
}

/// From a proof of `β` from `α_1, …, α_n` (T-free and C-free, every
/// hypothesis but the last an implication) builds a proof of `α_n → β` from
/// `α_1, …, α_{n-1}`.
pub fn deduction_transform(c: &CalculusSpec, p: &Proof) -> Result<Proof, DeductionError> {
    let verdict = check_proof(c, p);
    if !verdict.valid {
        let first = &verdict.diagnostics[0];
        return Err(DeductionError::InvalidInput(format!("line {}: {}", first.line, first.message)));
    }
    let n = p.hypotheses.len();
    if n == 0 {
        return Err(DeductionError::NoHypotheses);
    }
    if let Some(i) = (0..n - 1).find(|&i| !p.hypotheses[i].is_imp()) {
        return Err(DeductionError::NotAnImplication(i));
    }
    for (k, line) in p.lines.iter().enumerate() {
        match line.just {
            Justification::T(_) => return Err(DeductionError::UnsupportedRule(k, Rule::T)),
            Justification::C(..) => return Err(DeductionError::UnsupportedRule(k, Rule::C)),
            _ => {}
        }
    }
    let last = p.hypotheses[n - 1].clone();
    let mut b = ProofBuilder::new(c.name, p.hypotheses[..n - 1].to_vec());
    // map[k] is the line proving `last → (line k)`
    let mut map: Vec<usize> = Vec::with_capacity(p.lines.len());
    for line in &p.lines {
        let gamma = &line.formula;
        let target = match &line.just {
            Justification::Hyp(i) if p.hypotheses[*i] == last => {
                let id = c.id_label();
                b.instance(id, &[("alpha", last.clone())])
            }
            Justification::Hyp(i) => {
                let g = b.hyp(*i);
                weaken(c, &mut b, g, &last)
            }
            Justification::Axiom { label, .. } => {
                let g = b.axiom(label, gamma.clone());
                weaken(c, &mut b, g, &last)
            }
            Justification::MP(i, j) => {
                let minor = p.lines[*i].formula.clone();
                let s = c.s_label();
                let ax = b.instance(s, &[("alpha", last.clone()), ("beta", minor), ("delta", gamma.clone())]);
                let k = b.mp(map[*j], ax);
                b.mp(map[*i], k)
            }
            Justification::T(_) | Justification::C(..) => unreachable!("rejected above"),
        };
        map.push(target);
    }
    let out = b.finish();
    let v = check_proof(c, &out);
    if !v.valid {
        let first = &v.diagnostics[0];
        return Err(DeductionError::Internal(format!("line {}: {}", first.line, first.message)));
    }
    Ok(out)
}

/// From line `g: γ` with `γ` an implication, derive `δ → γ`.
fn weaken(c: &CalculusSpec, b: &mut ProofBuilder, g: usize, delta: &Formula) -> usize {
    let (phi, psi) = b.formula(g).as_imp().expect("hypotheses and axioms are implications");
    let (phi, psi) = (phi.clone(), psi.clone());
    let inst = if c.scheme("A2").is_some() {
        b.instance("A2", &[("alpha", phi), ("beta", psi), ("delta", delta.clone())])
    } else {
        weakening_lines(b, &phi, &psi, delta)
    };
    b.mp(g, inst)
}

/// `⊢ (φ → ψ) → (δ → (φ → ψ))` in the T-calculi, through the identity
/// `ψ → ψ`: eight lines.
fn weakening_lines(b: &mut ProofBuilder, phi: &Formula, psi: &Formula, delta: &Formula) -> usize {
    let imp = |x: &Formula, y: &Formula| Formula::imp(x.clone(), y.clone());
    let id = imp(psi, psi);
    let gamma = imp(phi, psi);
    // (φ → ψ) → ((ψ → ψ) → (φ → ψ))
    let l0 = b.instance("Ax2", &[("alpha", phi.clone()), ("beta", psi.clone()), ("delta", psi.clone())]);
    // ((ψ → ψ) → γ) → (δ → γ), via δ → (ψ → ψ)
    let l1 = b.instance("Ax2", &[("alpha", delta.clone()), ("beta", id.clone()), ("delta", gamma)]);
    let l2 = b.instance("Ax1", &[("alpha", psi.clone())]);
    let l3 = b.t(l2, delta.clone());
    let l4 = b.mp(l3, l1);
    b.chain(l0, l4)
}

// ------------------------------------------------------------------ corpus

/// A named derivation with its declared calculus.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub proof: Proof,
}

fn hyps(texts: &[&str]) -> Vec<Formula> {
    texts.iter().map(|t| f(t)).collect()
}

/// `⊢ 0 → β` in R4*, appended to `b`; returns the line of `bot -> beta`.
fn ex_falso_lines(b: &mut ProofBuilder, beta: &Formula) -> usize {
    let one = Formula::top();
    let x = Formula::imp(one.clone(), beta.clone());
    // ¬1 → (1 → β)
    let n1 = b.instance("N1", &[("alpha", one.clone()), ("beta", beta.clone())]);
    // (1 → β) → β, from X → X with X = 1 → β
    let id = b.instance("Ax1", &[("alpha", x.clone())]);
    let s = b.instance("Ax3", &[("alpha", x.clone()), ("beta", one.clone()), ("delta", beta.clone())]);
    let k = b.mp(id, s);
    let t = b.axiom("Ax1", one);
    let w = b.t(t, x);
    let back = b.mp(w, k);
    b.chain(n1, back)
}

/// Every worked derivation, each tagged with the calculus it is stated in.
pub fn proof_corpus() -> Vec<Fixture> {
    let mut out = Vec::new();
    let mut add = |name: &'static str, proof: Proof| out.push(Fixture { name, proof });

    // {α → β, β → δ, α} ⊢ δ
    let mut b = ProofBuilder::new(Calculus::IR4, hyps(&["a -> b", "b -> d", "a"]));
    let a = b.hyp(2);
    let ab = b.hyp(0);
    let bd = b.hyp(1);
    let l = b.mp(a, ab);
    b.mp(l, bd);
    add("transitivity-from-hypotheses", b.finish());

    // α → β, β → δ ⊢ α → δ
    let mut b = ProofBuilder::new(Calculus::IR4Star, hyps(&["a -> b", "b -> d"]));
    let h0 = b.hyp(0);
    let h1 = b.hyp(1);
    let ax = b.axiom("Ax2", f("(a -> b) -> (b -> d) -> a -> d"));
    let l = b.mp(h0, ax);
    b.mp(h1, l);
    add("transitivity-rule", b.finish());

    // ⊢ α → (β → β)
    let mut b = ProofBuilder::new(Calculus::IR4Star, vec![]);
    let id = b.axiom("Ax1", f("b -> b"));
    b.t(id, f("a"));
    add("weakened-identity", b.finish());

    // ⊢ ((β → β) → δ) → (α → δ)
    let mut b = ProofBuilder::new(Calculus::IR4Star, vec![]);
    let ax = b.axiom("Ax2", f("(a -> b -> b) -> ((b -> b) -> d) -> a -> d"));
    let id = b.axiom("Ax1", f("b -> b"));
    let w = b.t(id, f("a"));
    b.mp(w, ax);
    add("identity-antecedent", b.finish());

    // ⊢ (α → β) → (δ → (α → β)), the (A2) scheme
    let mut b = ProofBuilder::new(Calculus::IR4Star, vec![]);
    weakening_lines(&mut b, &f("a"), &f("b"), &f("d"));
    add("implication-weakening", b.finish());

    // {α → β, β → α} ⊢ (α → δ) → (β → δ)
    let mut b = ProofBuilder::new(Calculus::IR4Star, hyps(&["a -> b", "b -> a"]));
    b.hyp(0);
    let h1 = b.hyp(1);
    let ax = b.axiom("Ax2", f("(b -> a) -> (a -> d) -> b -> d"));
    b.mp(h1, ax);
    add("congruence-antecedent", b.finish());

    // {δ → η, η → δ} ⊢ (β → δ) → (β → η)
    let mut b = ProofBuilder::new(Calculus::IR4Star, hyps(&["d -> e", "e -> d"]));
    let h0 = b.hyp(0);
    b.hyp(1);
    let t = b.t(h0, f("b"));
    let ax = b.axiom("Ax3", f("(b -> d -> e) -> (b -> d) -> b -> e"));
    b.mp(t, ax);
    add("congruence-consequent", b.finish());

    // {α → β, β → α} ⊢ (α ∧ δ) → (β ∧ δ)
    let mut b = ProofBuilder::new(Calculus::R4Star, hyps(&["a -> b", "b -> a"]));
    let h0 = b.hyp(0);
    b.hyp(1);
    let c1 = b.axiom("C1", f("a /\\ d -> a"));
    let l4 = b.chain(c1, h0);
    let c2 = b.axiom("C2", f("a /\\ d -> d"));
    let c3 = b.axiom("C3", f("(a /\\ d -> b) -> (a /\\ d -> d) -> a /\\ d -> b /\\ d"));
    let l = b.mp(l4, c3);
    b.mp(c2, l);
    add("congruence-conjunction", b.finish());

    // {α → β, β → α} ⊢ ¬α → ¬β
    let mut b = ProofBuilder::new(Calculus::R4Star, hyps(&["a -> b", "b -> a"]));
    let h1 = b.hyp(1);
    let ax = b.axiom("Ax2", f("(b -> a) -> (a -> ~b) -> b -> ~b"));
    let l3 = b.mp(h1, ax);
    let n1 = b.axiom("N1", f("~a -> a -> ~b"));
    let l5 = b.chain(n1, l3);
    let n2 = b.axiom("N2", f("(b -> ~b) -> ~b"));
    b.chain(l5, n2);
    add("congruence-negation", b.finish());

    // {α → β, β → α} ⊢ (β ∨ δ) → (α ∨ δ)
    let mut b = ProofBuilder::new(Calculus::R4Star, hyps(&["a -> b", "b -> a"]));
    let h1 = b.hyp(1);
    let d1 = b.axiom("D1", f("a -> a \\/ d"));
    let l3 = b.chain(h1, d1);
    let d2 = b.axiom("D2", f("d -> a \\/ d"));
    let d3 = b.axiom("D3", f("(b -> a \\/ d) -> (d -> a \\/ d) -> b \\/ d -> a \\/ d"));
    let l = b.mp(l3, d3);
    b.mp(d2, l);
    add("congruence-disjunction", b.finish());

    // α ∧ (α → β) ⊢ β
    let mut b = ProofBuilder::new(Calculus::R4Star, hyps(&["a /\\ (a -> b)"]));
    let h = b.hyp(0);
    let c1 = b.axiom("C1", f("a /\\ (a -> b) -> a"));
    let c2 = b.axiom("C2", f("a /\\ (a -> b) -> a -> b"));
    let ab = b.mp(h, c2);
    let a = b.mp(h, c1);
    b.mp(a, ab);
    add("conjunction-modus-ponens", b.finish());

    // ⊢ 0 → β
    let mut b = ProofBuilder::new(Calculus::R4Star, vec![]);
    ex_falso_lines(&mut b, &f("b"));
    add("ex-falso", b.finish());

    // ¬β ⊢ β → 0
    let mut b = ProofBuilder::new(Calculus::R4Star, hyps(&["~b"]));
    let h = b.hyp(0);
    let n1 = b.axiom("N1", f("~b -> b -> bot"));
    b.mp(h, n1);
    add("negation-to-bottom", b.finish());

    // β → 0 ⊢ ¬β
    let mut b = ProofBuilder::new(Calculus::R4Star, hyps(&["b -> bot"]));
    let h = b.hyp(0);
    // ex falso at ¬β, so that chaining yields β → ¬β
    let ef = ex_falso_lines(&mut b, &f("~b"));
    let l3 = b.chain(h, ef);
    let n2 = b.axiom("N2", f("(b -> ~b) -> ~b"));
    b.mp(l3, n2);
    add("bottom-to-negation", b.finish());

    // {α → β, β → α} ⊢ (α ∧ δ) → (β ∧ δ) with rule C instead of (C3)
    let mut b = ProofBuilder::new(Calculus::R4Plus, hyps(&["a -> b", "b -> a"]));
    let h0 = b.hyp(0);
    let c1 = b.axiom("C1", f("a /\\ d -> a"));
    let c2 = b.axiom("C2", f("a /\\ d -> d"));
    let l4 = b.chain(c1, h0);
    b.c(l4, c2);
    add("congruence-conjunction-rule-c", b.finish());

    // ⊢ β → γ for an instance γ of each R4 scheme, via (A2)
    let r4 = Calculus::R4.spec();
    let sigma: Substitution = [("alpha", "p"), ("beta", "q"), ("delta", "r")]
        .iter()
        .map(|(k, v)| (k.to_string(), f(v)))
        .collect();
    for (label, scheme) in &r4.axioms {
        let gamma = scheme.instantiate(&sigma);
        let (phi, psi) = gamma.as_imp().expect("every R4 axiom is an implication");
        let mut b = ProofBuilder::new(Calculus::R4, vec![]);
        let g = b.axiom(label, gamma.clone());
        let w = b.instance("A2", &[("alpha", phi.clone()), ("beta", psi.clone()), ("delta", f("s"))]);
        b.mp(g, w);
        add(weak_t_name(label), b.finish());
    }
    out
}

fn weak_t_name(label: &str) -> &'static str {
    match label {
        "A1" => "weak-t-A1",
        "A2" => "weak-t-A2",
        "A3" => "weak-t-A3",
        "A4" => "weak-t-A4",
        "A5" => "weak-t-A5",
        "A6" => "weak-t-A6",
        "A7" => "weak-t-A7",
        "A8" => "weak-t-A8",
        "A9" => "weak-t-A9",
        "A10" => "weak-t-A10",
        "A11" => "weak-t-A11",
        _ => "weak-t-A12",
    }
}

/// The corpus entries declared in calculus `c`.
pub fn fixture_suite(c: Calculus) -> Vec<Fixture> {
    proof_corpus().into_iter().filter(|fx| fx.proof.calculus == c).collect()
}

pub fn corpus_entry(name: &str) -> Option<Fixture> {
    proof_corpus().into_iter().find(|fx| fx.name == name)
}

// ------------------------------------------------------------------ search

#[derive(Debug, Clone)]
enum Origin {
    Hyp(usize),
    Axiom(&'static str),
    MP(usize, usize),
    T(usize),
    C(usize, usize),
}

/// Iterative deepening over rule rounds: round 0 holds the hypotheses and
/// all axiom instances over the subformulas of the sequent; each further
/// round applies every rule once. Rule T and C conclusions are limited to
/// implications between subformulas. Incomplete by design: `None` means
/// "not found within `depth`", nothing more.
pub fn bounded_search(c: &CalculusSpec, hyps: &[Formula], goal: &Formula, depth: usize) -> Option<Proof> {
    let mut sub: Vec<Formula> = Vec::new();
    let mut seen_sub = HashSet::new();
    for h in hyps.iter().chain(std::iter::once(goal)) {
        for s in subformulas(h) {
            if seen_sub.insert(s.clone()) {
                sub.push(s);
            }
        }
    }
    let mut frame: Vec<Formula> = sub.clone();
    for a in &sub {
        for b in &sub {
            let g = Formula::imp(a.clone(), b.clone());
            if seen_sub.insert(g.clone()) {
                frame.push(g);
            }
        }
    }

    let mut st = SearchState::default();
    for (i, h) in hyps.iter().enumerate() {
        st.add(h.clone(), Origin::Hyp(i));
    }
    for (label, scheme) in &c.axioms {
        let metas: Vec<String> = scheme.metavars().into_iter().collect();
        let pools = vec![(0..sub.len()).collect::<Vec<usize>>(); metas.len()];
        crate::enumerate::product(&pools, &mut |pick| {
            let sigma: Substitution = metas.iter().cloned().zip(pick.iter().map(|&i| sub[i].clone())).collect();
            st.add(scheme.instantiate(&sigma), Origin::Axiom(label));
        });
    }

    let mut round = 0;
    while !st.index.contains_key(goal) && round < depth {
        round += 1;
        let snapshot = st.known.len();
        let mut fresh: Vec<(Formula, Origin)> = Vec::new();
        if c.has_rule(Rule::MP) {
            for i in 0..snapshot {
                for &j in st.by_antecedent.get(&st.known[i]).into_iter().flatten() {
                    if j < snapshot {
                        let b = st.known[j].as_imp().expect("indexed by antecedent").1.clone();
                        fresh.push((b, Origin::MP(i, j)));
                    }
                }
            }
        }
        let before = |f: &Formula| st.index.get(f).copied().filter(|&k| k < snapshot);
        for g in &frame {
            let Some((d, rhs)) = g.as_imp() else { continue };
            if c.has_rule(Rule::T) {
                if let Some(i) = before(rhs) {
                    fresh.push((g.clone(), Origin::T(i)));
                }
            }
            if c.has_rule(Rule::C) {
                if let Formula::And(x, y) = rhs {
                    let l = before(&Formula::imp(d.clone(), (**x).clone()));
                    let r = before(&Formula::imp(d.clone(), (**y).clone()));
                    if let (Some(l), Some(r)) = (l, r) {
                        fresh.push((g.clone(), Origin::C(l, r)));
                    }
                }
            }
        }
        for (fm, o) in fresh {
            st.add(fm, o);
        }
        if st.known.len() == snapshot {
            break;
        }
    }
    let found = st.index.get(goal).copied();
    let (known, origin) = (st.known, st.origin);
    let target = found?;

    // extract the lines the goal depends on, premises first
    let mut order: Vec<usize> = Vec::new();
    let mut placed: HashMap<usize, usize> = HashMap::new();
    fn visit(k: usize, origin: &[Origin], order: &mut Vec<usize>, placed: &mut HashMap<usize, usize>) {
        if placed.contains_key(&k) {
            return;
        }
        match origin[k] {
            Origin::MP(i, j) | Origin::C(i, j) => {
                visit(i, origin, order, placed);
                visit(j, origin, order, placed);
            }
            Origin::T(i) => visit(i, origin, order, placed),
            _ => {}
        }
        placed.insert(k, order.len());
        order.push(k);
    }
    visit(target, &origin, &mut order, &mut placed);
    let lines = order
        .iter()
        .map(|&k| ProofLine {
            formula: known[k].clone(),
            just: match origin[k] {
                Origin::Hyp(i) => Justification::Hyp(i),
                Origin::Axiom(l) => Justification::Axiom {
                    label: l.to_string(),
                    subst: None,
                },
                Origin::MP(i, j) => Justification::MP(placed[&i], placed[&j]),
                Origin::T(i) => Justification::T(placed[&i]),
                Origin::C(i, j) => Justification::C(placed[&i], placed[&j]),
            },
        })
        .collect();
    Some(Proof {
        calculus: c.name,
        hypotheses: hyps.to_vec(),
        lines,
    })
}

#[derive(Default)]
struct SearchState {
    known: Vec<Formula>,
    origin: Vec<Origin>,
    index: HashMap<Formula, usize>,
    by_antecedent: HashMap<Formula, Vec<usize>>,
}

impl SearchState {
    fn add(&mut self, fm: Formula, o: Origin) {
        if self.index.contains_key(&fm) {
            return;
        }
        let k = self.known.len();
        self.index.insert(fm.clone(), k);
        if let Some((a, _)) = fm.as_imp() {
            self.by_antecedent.entry(a.clone()).or_default().push(k);
        }
        self.known.push(fm);
        self.origin.push(o);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_have_the_right_shape() {
        assert_eq!(Calculus::R4.spec().axioms.len(), 12);
        assert_eq!(Calculus::IR4.spec().axioms.len(), 3);
        assert_eq!(Calculus::R4Star.spec().axioms.len(), 12);
        assert_eq!(Calculus::R4Dagger.spec().axioms.len(), 11);
        let plus = Calculus::R4Plus.spec();
        assert!(plus.scheme("C3").is_none() && plus.scheme("Dist").is_none());
        assert!(plus.has_rule(Rule::C));
        assert!(!Calculus::R4.spec().has_rule(Rule::T));
        for c in Calculus::ALL {
            assert_eq!(c.as_str().parse::<Calculus>().unwrap(), c);
            assert_eq!(c.pretty().parse::<Calculus>().unwrap(), c);
        }
    }

    #[test]
    fn corpus_is_valid() {
        for fx in proof_corpus() {
            let v = fx.proof.check();
            assert!(v.valid, "{}: {:?}", fx.name, v.diagnostics);
        }
    }

    #[test]
    fn corpus_shapes() {
        let get = |n: &str| corpus_entry(n).unwrap().proof;
        assert_eq!(get("transitivity-from-hypotheses").lines.len(), 5);
        assert_eq!(get("conjunction-modus-ponens").lines.len(), 6);
        assert_eq!(get("congruence-conjunction").lines.len(), 10);
        assert_eq!(get("congruence-conjunction-rule-c").lines.len(), 7);
        assert_eq!(get("ex-falso").conclusion().unwrap(), &f("bot -> b"));
        assert_eq!(get("implication-weakening").conclusion().unwrap(), &f("(a -> b) -> d -> a -> b"));
        assert_eq!(get("congruence-negation").conclusion().unwrap(), &f("~a -> ~b"));
    }

    #[test]
    fn bad_lines_are_reported() {
        let p = Proof {
            calculus: Calculus::R4Star,
            hypotheses: vec![f("a")],
            lines: vec![
                ProofLine { formula: f("a"), just: Justification::Hyp(0) },
                ProofLine { formula: f("b"), just: Justification::MP(0, 0) },
                ProofLine { formula: f("b"), just: Justification::T(5) },
                ProofLine { formula: f("a -> b"), just: "axiom:Ax1".parse().unwrap() },
                ProofLine { formula: f("a -> a"), just: "axiom:A2".parse().unwrap() },
            ],
        };
        let v = p.check();
        assert!(!v.valid);
        let errs: Vec<_> = v.diagnostics.iter().map(|d| (d.line, d.error.clone())).collect();
        assert_eq!(
            errs,
            vec![
                (1, LineError::ModusPonensShape),
                (2, LineError::BadCitation(5)),
                (3, LineError::NotAnInstance("Ax1".into())),
                (4, LineError::UnknownAxiom("A2".into())),
            ]
        );
    }

    #[test]
    fn rule_t_is_not_in_r4() {
        let mut b = ProofBuilder::new(Calculus::R4, vec![]);
        let id = b.axiom("A1", f("b -> b"));
        b.t(id, f("a"));
        let v = b.finish().check();
        assert_eq!(v.diagnostics[0].error, LineError::RuleNotInCalculus(Rule::T));
    }

    #[test]
    fn deduction_three_times() {
        let c = Calculus::IR4.spec();
        let mut p = corpus_entry("transitivity-from-hypotheses").unwrap().proof;
        for _ in 0..3 {
            p = deduction_transform(&c, &p).unwrap();
        }
        assert!(p.hypotheses.is_empty());
        assert_eq!(p.conclusion().unwrap(), &f("(a -> b) -> (b -> d) -> a -> d"));
        assert!(p.check().valid);
    }

    #[test]
    fn deduction_in_star_calculus() {
        let c = Calculus::R4Star.spec();
        let p = corpus_entry("conjunction-modus-ponens").unwrap().proof;
        let q = deduction_transform(&c, &p).unwrap();
        assert_eq!(q.conclusion().unwrap(), &f("a /\\ (a -> b) -> b"));
        let mut tr = corpus_entry("transitivity-from-hypotheses").unwrap().proof;
        tr.calculus = Calculus::IR4Star;
        let q = deduction_transform(&Calculus::IR4Star.spec(), &tr).unwrap();
        assert_eq!(q.conclusion().unwrap(), &f("a -> d"));
    }

    #[test]
    fn deduction_side_conditions() {
        let p = corpus_entry("weakened-identity").unwrap().proof;
        assert_eq!(deduction_transform(&Calculus::IR4Star.spec(), &p), Err(DeductionError::NoHypotheses));
        let p = corpus_entry("congruence-consequent").unwrap().proof;
        assert_eq!(
            deduction_transform(&Calculus::IR4Star.spec(), &p),
            Err(DeductionError::UnsupportedRule(2, Rule::T))
        );
        let p = Proof {
            calculus: Calculus::IR4,
            hypotheses: vec![f("a"), f("b")],
            lines: vec![ProofLine { formula: f("b"), just: Justification::Hyp(1) }],
        };
        assert_eq!(deduction_transform(&Calculus::IR4.spec(), &p), Err(DeductionError::NotAnImplication(0)));
    }

    #[test]
    fn calculus_inclusions_on_corpus() {
        for fx in proof_corpus() {
            let p = &fx.proof;
            if p.calculus == Calculus::R4Plus && !p.uses(|j| matches!(j, Justification::C(..))) {
                assert!(check_proof(&Calculus::R4Dagger.spec(), p).valid);
            }
            if p.calculus == Calculus::R4Dagger {
                assert!(check_proof(&Calculus::R4Star.spec(), p).valid);
            }
            if matches!(p.calculus, Calculus::IR4Star) {
                assert!(check_proof(&Calculus::R4Star.spec(), p).valid, "{}", fx.name);
            }
        }
    }

    #[test]
    fn justification_round_trip() {
        for s in ["hyp:0", "axiom:Ax2", "mp:2,3", "t:1", "c:3,4"] {
            assert_eq!(s.parse::<Justification>().unwrap().to_string(), s);
        }
        assert!("mp:1".parse::<Justification>().is_err());
        assert!("axiom:".parse::<Justification>().is_err());
    }

    #[test]
    fn search_finds_small_proofs() {
        let c = Calculus::R4Star.spec();
        let p = bounded_search(&c, &[], &f("a -> a"), 2).unwrap();
        assert_eq!(p.lines.len(), 1);
        let p = bounded_search(&c, &[], &f("b -> a -> a"), 2).unwrap();
        assert!(p.check().valid);
        assert!(p.uses(|j| matches!(j, Justification::T(_))));
        let p = bounded_search(&c, &[f("a"), f("a -> b")], &f("b"), 2).unwrap();
        assert!(p.check().valid);
    }

    #[test]
    fn search_gives_up_on_the_separating_scheme() {
        let c = Calculus::R4Plus.spec();
        let goal = f("(z -> x) /\\ (z -> y) -> z -> x /\\ y");
        assert!(bounded_search(&c, &[], &goal, 2).is_none());
    }
}
