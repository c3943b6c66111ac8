//! Valuations, countermodel search and the finite-model constructions.

use std::collections::{BTreeMap, HashMap};
use std::thread;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteAlgebra};
use crate::calculi::{Calculus, Rule};
use crate::classes::{check, ClassTag, MissingOperation};
use crate::enumerate::{enumerate_class, product, size_cap, EnumError};
use crate::filters::{build_upset_algebra, FilterError, FilterKind};
use crate::order::OrderError;
use crate::pair::{build_implication, AlgebraPair, PairError};
use crate::syntax::{subformulas, Formula, TOP_VAR};
use crate::{Elem, ElemSet, Limits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("the formula uses {0} but the algebra has no such operation")]
    MissingConnective(&'static str),
    #[error("variable `{0}` has no value")]
    Unbound(String),
    #[error("value {value} of `{var}` is outside a carrier of size {size}")]
    OutOfRange { var: String, value: Elem, size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Missing(#[from] MissingOperation),
    #[error("the algebra is not in {class}: {axioms}")]
    NotInClass { class: ClassTag, axioms: String },
    #[error("this construction takes formulas built from -> only")]
    NotImplicative,
    #[error("the formula evaluates to the top element, so there is nothing to refute")]
    NotFalsified,
}

/// Values for the variables of a formula. `_t` is always the top element.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Valuation {
    pub map: BTreeMap<String, Elem>,
}

impl Valuation {
    pub fn new(pairs: impl IntoIterator<Item = (String, Elem)>) -> Self {
        Valuation {
            map: pairs.into_iter().collect(),
        }
    }

    pub fn get(&self, var: &str) -> Option<Elem> {
        self.map.get(var).copied()
    }

    fn mapped(&self, f: &[Elem]) -> Valuation {
        Valuation::new(self.map.iter().map(|(k, &v)| (k.clone(), f[v])))
    }
}

/// The variables a valuation must cover, in order.
pub fn formula_vars(f: &Formula) -> Vec<String> {
    f.vars().into_iter().filter(|v| v != TOP_VAR).collect()
}

fn needs(a: &FiniteAlgebra, f: &Formula) -> Result<(), EvalError> {
    let c = f.uses_connectives();
    if c.and && a.meet_table().is_none() {
        return Err(EvalError::MissingConnective("/\\"));
    }
    if c.or && a.join_table().is_none() {
        return Err(EvalError::MissingConnective("\\/"));
    }
    if c.not && a.neg_table().is_none() {
        return Err(EvalError::MissingConnective("~"));
    }
    Ok(())
}

pub fn evaluate(a: &FiniteAlgebra, f: &Formula, v: &Valuation) -> Result<Elem, EvalError> {
    needs(a, f)?;
    let vars = formula_vars(f);
    let mut vals = Vec::with_capacity(vars.len());
    for var in &vars {
        let x = v.get(var).ok_or_else(|| EvalError::Unbound(var.clone()))?;
        if x >= a.size() {
            return Err(EvalError::OutOfRange {
                var: var.clone(),
                value: x,
                size: a.size(),
            });
        }
        vals.push(x);
    }
    Ok(Compiled::new(f, &vars).root(a, &vals))
}

/// `a` with `¬x := x → 0` added when `f` needs a negation the algebra lacks
/// but a bottom is available.
pub fn with_semantic_negation(a: &FiniteAlgebra, f: &Formula) -> FiniteAlgebra {
    if f.uses_connectives().not && a.neg_table().is_none() && a.bottom().is_some() {
        a.clone().with_derived_neg().expect("bottom present")
    } else {
        a.clone()
    }
}

#[derive(Debug, Clone, Copy)]
enum Node {
    Top,
    Var(usize),
    Imp(usize, usize),
    And(usize, usize),
    Or(usize, usize),
    Not(usize),
}

/// A formula flattened to its subformulas, children first.
#[derive(Debug, Clone)]
pub struct Compiled {
    pub subformulas: Vec<Formula>,
    nodes: Vec<Node>,
}

impl Compiled {
    /// `vars` fixes the position of each variable in value slices.
    pub fn new(f: &Formula, vars: &[String]) -> Self {
        let subs = subformulas(f);
        let pos: HashMap<&Formula, usize> = subs.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let nodes = subs
            .iter()
            .map(|s| match s {
                Formula::Var(v) if v == TOP_VAR => Node::Top,
                Formula::Var(v) => Node::Var(vars.iter().position(|w| w == v).expect("variable listed")),
                Formula::Imp(x, y) => Node::Imp(pos[&**x], pos[&**y]),
                Formula::And(x, y) => Node::And(pos[&**x], pos[&**y]),
                Formula::Or(x, y) => Node::Or(pos[&**x], pos[&**y]),
                Formula::Not(x) => Node::Not(pos[&**x]),
            })
            .collect();
        Compiled { subformulas: subs, nodes }
    }

    /// Values of every subformula. The signature must already be checked.
    pub fn all(&self, a: &FiniteAlgebra, vals: &[Elem]) -> Vec<Elem> {
        let mut out: Vec<Elem> = Vec::with_capacity(self.nodes.len());
        for n in &self.nodes {
            let x = match *n {
                Node::Top => a.top(),
                Node::Var(i) => vals[i],
                Node::Imp(x, y) => a.imp(out[x], out[y]),
                Node::And(x, y) => a.meet(out[x], out[y]).expect("meet checked"),
                Node::Or(x, y) => a.join(out[x], out[y]).expect("join checked"),
                Node::Not(x) => a.neg(out[x]).expect("negation checked"),
            };
            out.push(x);
        }
        out
    }

    pub fn root(&self, a: &FiniteAlgebra, vals: &[Elem]) -> Elem {
        *self.all(a, vals).last().expect("a formula has at least one subformula")
    }
}

/// A class member and a valuation sending the formula below the top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Countermodel {
    pub class: ClassTag,
    pub algebra: FiniteAlgebra,
    pub valuation: Valuation,
    pub formula: Formula,
    pub value: Elem,
}

impl Countermodel {
    /// Re-evaluates the formula and re-checks class membership.
    pub fn validate(&self) -> Result<(), SemanticsError> {
        let a = with_semantic_negation(&self.algebra, &self.formula);
        let v = evaluate(&a, &self.formula, &self.valuation)?;
        if v != self.value || v == a.top() {
            return Err(SemanticsError::NotFalsified);
        }
        require_class(self.class, &self.algebra)
    }
}

fn require_class(class: ClassTag, a: &FiniteAlgebra) -> Result<(), SemanticsError> {
    let v = check(class, a)?;
    if v.member {
        Ok(())
    } else {
        Err(SemanticsError::NotInClass {
            class,
            axioms: v.labels().join(", "),
        })
    }
}

fn valuations(n: usize, k: usize, visit: &mut dyn FnMut(&[Elem]) -> bool) {
    let pools = vec![(0..n).collect::<Vec<_>>(); k];
    let mut done = false;
    if k == 0 {
        visit(&[]);
        return;
    }
    product(&pools, &mut |vals| {
        if !done {
            done = visit(vals);
        }
    });
}

/// First valuation (lexicographic over the sorted variables) with every
/// hypothesis at the top and the goal below it.
pub fn refute_in(a: &FiniteAlgebra, hyps: &[Formula], goal: &Formula) -> Result<Option<(Valuation, Elem)>, EvalError> {
    let mut all_vars: Vec<String> = formula_vars(goal);
    for h in hyps {
        all_vars.extend(formula_vars(h));
    }
    all_vars.sort();
    all_vars.dedup();
    let mut prepared = a.clone();
    for f in hyps.iter().chain(std::iter::once(goal)) {
        prepared = with_semantic_negation(&prepared, f);
        needs(&prepared, f)?;
    }
    let hs: Vec<Compiled> = hyps.iter().map(|h| Compiled::new(h, &all_vars)).collect();
    let g = Compiled::new(goal, &all_vars);
    let top = prepared.top();
    let mut hit = None;
    valuations(prepared.size(), all_vars.len(), &mut |vals| {
        if hs.iter().any(|h| h.root(&prepared, vals) != top) {
            return false;
        }
        let v = g.root(&prepared, vals);
        if v != top {
            hit = Some((Valuation::new(all_vars.iter().cloned().zip(vals.iter().copied())), v));
            true
        } else {
            false
        }
    });
    Ok(hit)
}

/// Runs `f` over `items` on all cores and returns the hit with the smallest index.
fn first_hit<A: Sync, T: Send>(items: &[A], f: impl Fn(&A) -> Option<T> + Sync) -> Option<T> {
    let threads = thread::available_parallelism().map_or(1, |n| n.get()).min(items.len().max(1));
    if threads <= 1 || items.len() < 8 {
        return items.iter().find_map(f);
    }
    let chunk = items.len().div_ceil(threads);
    let f = &f;
    thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| s.spawn(move || c.iter().find_map(f)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .find(Option::is_some)
            .flatten()
    })
}

fn search(hyps: &[Formula], goal: &Formula, class: ClassTag, max_size: usize, limits: &Limits) -> Result<Option<Countermodel>, SemanticsError> {
    let cap = size_cap(class, limits);
    if max_size > cap {
        return Err(EnumError::CapExceeded { class, size: max_size, cap }.into());
    }
    // Surface signature problems before any enumeration.
    let probe = enumerate_probe(class);
    for f in hyps.iter().chain(std::iter::once(goal)) {
        needs(&with_semantic_negation(&probe, f), f)?;
    }
    for n in 1..=max_size {
        let algebras = enumerate_class(n, class, true, limits)?;
        let hit = first_hit(&algebras, |a| {
            refute_in(a, hyps, goal)
                .expect("signature checked")
                .map(|(valuation, value)| Countermodel {
                    class,
                    algebra: a.clone(),
                    valuation,
                    formula: goal.clone(),
                    value,
                })
        });
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

/// A one-element algebra with exactly the operations of `class`.
fn enumerate_probe(class: ClassTag) -> FiniteAlgebra {
    let sig = class.signature();
    let mut a = FiniteAlgebra::implicative(1, vec![0], 0).expect("trivial algebra");
    if sig.meet {
        a = a.with_meet(vec![0]).expect("trivial");
    }
    if sig.join {
        a = a.with_join(vec![0]).expect("trivial");
    }
    if sig.bottom {
        a = a.with_bottom(0).expect("trivial");
    }
    if sig.neg {
        a = a.with_neg(vec![0]).expect("trivial");
    }
    a
}

/// Members of `class` by increasing size (isomorphism types in enumeration
/// order), then valuations in lexicographic order; the first falsifying pair.
pub fn find_countermodel(f: &Formula, class: ClassTag, max_size: usize, limits: &Limits) -> Result<Option<Countermodel>, SemanticsError> {
    search(&[], f, class, max_size, limits)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entailment {
    Refuted(Countermodel),
    /// Only a bound: no countermodel exists among members of at most this size.
    NoCountermodelUpTo(usize),
}

pub fn entails(hyps: &[Formula], goal: &Formula, class: ClassTag, max_size: usize, limits: &Limits) -> Result<Entailment, SemanticsError> {
    Ok(match search(hyps, goal, class, max_size, limits)? {
        Some(cm) => Entailment::Refuted(cm),
        None => Entailment::NoCountermodelUpTo(max_size),
    })
}

// ------------------------------------------------------------ shrinking

/// Audit data of a finite-model construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ShrinkAudit {
    /// Size of the input carrier (the upset algebra for the sub-Hilbert case).
    pub source_size: usize,
    /// Images of the subformula values.
    pub generators: usize,
    pub result_size: usize,
    pub designated: usize,
    /// Pairs `(a, b)` of generators with `a → b` also a generator.
    pub imp_checked: usize,
    /// Those among them where the new implication disagrees.
    pub imp_failures: Vec<(Elem, Elem)>,
    /// Pairs with `a ∨ b` in the carrier (meet-subsemilattice case only).
    pub join_checked: usize,
    pub join_failures: Vec<(Elem, Elem)>,
    /// Every subformula keeps its value under the new valuation.
    pub subformulas_agree: bool,
    pub result_in_class: bool,
}

impl ShrinkAudit {
    pub fn passed(&self) -> bool {
        self.imp_failures.is_empty() && self.join_failures.is_empty() && self.subformulas_agree && self.result_in_class
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shrunk {
    pub countermodel: Countermodel,
    /// New element index to the element it came from.
    pub embed: Vec<Elem>,
    pub audit: ShrinkAudit,
}

fn subformula_values(a: &FiniteAlgebra, f: &Formula, v: &Valuation) -> Result<(Compiled, Vec<Elem>), SemanticsError> {
    let a = with_semantic_negation(a, f);
    needs(&a, f)?;
    let vars = formula_vars(f);
    let vals: Vec<Elem> = vars
        .iter()
        .map(|x| v.get(x).ok_or_else(|| EvalError::Unbound(x.clone())))
        .collect::<Result<_, _>>()?;
    let c = Compiled::new(f, &vars);
    let all = c.all(&a, &vals);
    Ok((c, all))
}

/// Builds the pair algebra on `carrier` (a lattice, indices into `host`),
/// transports the valuation and audits the result.
struct Finish<'a> {
    cm: &'a Countermodel,
    /// The algebra the generators live in.
    host: &'a FiniteAlgebra,
    /// Map from the input algebra into `host`.
    into_host: Vec<Elem>,
    generators: ElemSet,
}

impl Finish<'_> {
    fn run(self, lattice: crate::order::FiniteLattice, embed: Vec<Elem>, designated: &ElemSet, class: ClassTag) -> Result<Shrunk, SemanticsError> {
        let back: HashMap<Elem, Elem> = embed.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let d: ElemSet = designated.iter().map(|x| back[x]).collect();
        let pair = AlgebraPair::new(lattice, d)?;
        let b = build_implication(&pair)?;

        let mut audit = ShrinkAudit {
            source_size: self.host.size(),
            generators: self.generators.len(),
            result_size: b.size(),
            designated: pair.designated.len(),
            ..Default::default()
        };
        for &x in &self.generators {
            for &y in &self.generators {
                let xy = self.host.imp(x, y);
                if self.generators.contains(&xy) {
                    audit.imp_checked += 1;
                    if embed[b.imp(back[&x], back[&y])] != xy {
                        audit.imp_failures.push((x, y));
                    }
                }
            }
        }

        let valuation = self.cm.valuation.mapped(&self.into_host).mapped_through(&back);
        let (_, old) = subformula_values(&self.cm.algebra, &self.cm.formula, &self.cm.valuation)?;
        let (_, new) = subformula_values(&b, &self.cm.formula, &valuation)?;
        audit.subformulas_agree = old.iter().zip(&new).all(|(&o, &n)| embed[n] == self.into_host[o]);
        audit.result_in_class = check(class, &b)?.member;
        let value = *new.last().expect("nonempty");
        Ok(Shrunk {
            countermodel: Countermodel {
                class,
                algebra: b,
                valuation,
                formula: self.cm.formula.clone(),
                value,
            },
            embed,
            audit,
        })
    }
}

impl Valuation {
    fn mapped_through(&self, back: &HashMap<Elem, Elem>) -> Valuation {
        Valuation::new(self.map.iter().map(|(k, v)| (k.clone(), back[v])))
    }
}

fn falsified(cm: &Countermodel) -> Result<Vec<Elem>, SemanticsError> {
    let (_, vals) = subformula_values(&cm.algebra, &cm.formula, &cm.valuation)?;
    if *vals.last().expect("nonempty") == cm.algebra.top() {
        return Err(SemanticsError::NotFalsified);
    }
    Ok(vals)
}

/// Sub-Hilbert input: embed into the upset algebra of implicative filters,
/// take the bounded sublattice `B` generated by the images of the subformula
/// values and `D = B ∩ □Â`.
pub fn fmp_shrink_sha(cm: &Countermodel, limits: &Limits) -> Result<Shrunk, SemanticsError> {
    let c = cm.formula.uses_connectives();
    if c.and || c.or || c.not {
        return Err(SemanticsError::NotImplicative);
    }
    let a = cm.algebra.imp_reduct();
    require_class(ClassTag::Sha, &a)?;
    let vals = falsified(cm)?;
    let ua = build_upset_algebra(&a, FilterKind::Implicative, limits)?;
    let hat = &ua.algebra;
    let l = &ua.upsets.lattice;
    let x: ElemSet = vals.iter().map(|&v| ua.j[v]).collect();
    let b = l.generated_sublattice(&x, true);
    let boxed = hat.box_set();
    let d: ElemSet = b.intersection(&boxed).copied().collect();
    let (lattice, embed) = l.restrict(&b)?;
    Finish {
        cm,
        host: hat,
        into_host: ua.j.clone(),
        generators: x,
    }
    .run(lattice, embed, &d, ClassTag::Srl)
}

fn generators(cm: &Countermodel, vals: &[Elem]) -> ElemSet {
    let mut x: ElemSet = vals.iter().copied().collect();
    // ¬ψ is read as ψ → 0, so 0 is a value of the formula's reading.
    if cm.formula.uses_connectives().not {
        x.insert(cm.algebra.bottom().expect("negation derived from bottom"));
    }
    x
}

/// Subresiduated lattice input: `L` the bounded sublattice generated by the
/// subformula values `X`, `D` the one generated by `X ∩ □A`.
pub fn fmp_shrink_srl(cm: &Countermodel) -> Result<Shrunk, SemanticsError> {
    let a = &cm.algebra;
    require_class(ClassTag::Srl, a)?;
    let vals = falsified(cm)?;
    let x = generators(cm, &vals);
    let l = a.lattice()?;
    let boxed = a.box_set();
    let xb: ElemSet = x.intersection(&boxed).copied().collect();
    let carrier = l.generated_sublattice(&x, true);
    let d = l.generated_sublattice(&xb, true);
    let (lattice, embed) = l.restrict(&carrier)?;
    Finish {
        cm,
        host: a,
        into_host: (0..a.size()).collect(),
        generators: x,
    }
    .run(lattice, embed, &d, ClassTag::Srl)
}

/// Broad-sense input: `D` generated by the boxed subformula values, `A′` the
/// meet-subsemilattice generated by `X₀ ∪ D` with its own join, and the
/// implication `max{d ∈ D : d ∧ a ≤ b}`.
pub fn fmp_shrink_srlbs(cm: &Countermodel) -> Result<Shrunk, SemanticsError> {
    let a = &cm.algebra;
    require_class(ClassTag::Srlbs, a)?;
    let vals = falsified(cm)?;
    let x0 = generators(cm, &vals);
    let l = a.lattice()?;
    let boxed = a.box_set();
    let x0b: ElemSet = x0.intersection(&boxed).copied().collect();
    let d = l.generated_sublattice(&x0b, true);
    let x: ElemSet = x0.union(&d).copied().collect();
    let carrier = l.generated_meet_subsemilattice(&x);
    let (lattice, embed) = l.induced(&carrier)?;
    let mut shrunk = Finish {
        cm,
        host: a,
        into_host: (0..a.size()).collect(),
        generators: carrier.clone(),
    }
    .run(lattice, embed.clone(), &d, ClassTag::Srlbs)?;
    let b = &shrunk.countermodel.algebra;
    let audit = &mut shrunk.audit;
    audit.generators = x0.len();
    for (i, &p) in embed.iter().enumerate() {
        for (k, &q) in embed.iter().enumerate() {
            if carrier.contains(&l.join(p, q)) {
                audit.join_checked += 1;
                if embed[b.join(i, k).expect("lattice")] != l.join(p, q) {
                    audit.join_failures.push((p, q));
                }
            }
        }
    }
    Ok(shrunk)
}

// ------------------------------------------------------------ soundness

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoundnessReport {
    pub calculus: Calculus,
    pub class: ClassTag,
    pub max_size: usize,
    pub algebras: usize,
    /// `label: witness` for each failing axiom or rule.
    pub failures: Vec<String>,
}

/// Every axiom scheme of `calc` evaluates to the top and every rule
/// preserves the top, in every member of `class` up to `max_size`.
pub fn soundness_scan(calc: Calculus, class: ClassTag, max_size: usize, limits: &Limits) -> Result<SoundnessReport, SemanticsError> {
    let spec = calc.spec();
    let mut report = SoundnessReport {
        calculus: calc,
        class,
        max_size,
        algebras: 0,
        failures: Vec::new(),
    };
    for n in 1..=max_size {
        for raw in enumerate_class(n, class, true, limits)? {
            report.algebras += 1;
            let a = if raw.neg_table().is_none() && raw.bottom().is_some() {
                raw.clone().with_derived_neg()?
            } else {
                raw.clone()
            };
            for (label, scheme) in &spec.axioms {
                if let Some((v, _)) = refute_in(&a, &[], &scheme.body)? {
                    report.failures.push(format!("{label} at size {n}: {:?}", v.map));
                }
            }
            for &rule in &spec.rules {
                if let Some(w) = rule_failure(&a, rule) {
                    report.failures.push(format!("{rule:?} at size {n}: {w:?}"));
                }
            }
        }
    }
    Ok(report)
}

/// A tuple of elements at which `rule` leads from top premises to a non-top
/// conclusion.
pub fn rule_failure(a: &FiniteAlgebra, rule: Rule) -> Option<Vec<Elem>> {
    let n = a.size();
    let top = a.top();
    let mut hit = None;
    match rule {
        Rule::MP => valuations(n, 2, &mut |v| {
            let bad = v[0] == top && a.imp(v[0], v[1]) == top && v[1] != top;
            if bad {
                hit = Some(v.to_vec());
            }
            bad
        }),
        Rule::T => valuations(n, 2, &mut |v| {
            let bad = v[0] == top && a.imp(v[1], v[0]) != top;
            if bad {
                hit = Some(v.to_vec());
            }
            bad
        }),
        Rule::C => {
            a.meet_table()?;
            valuations(n, 3, &mut |v| {
                let (d, x, y) = (v[0], v[1], v[2]);
                let m = a.meet(x, y).expect("meet present");
                let bad = a.imp(d, x) == top && a.imp(d, y) == top && a.imp(d, m) != top;
                if bad {
                    hit = Some(v.to_vec());
                }
                bad
            })
        }
    }
    hit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{b2, chain3_pair, example_m, example_n};

    fn f(s: &str) -> Formula {
        Formula::parse(s).unwrap()
    }

    fn val(pairs: &[(&str, Elem)]) -> Valuation {
        Valuation::new(pairs.iter().map(|&(k, v)| (k.to_string(), v)))
    }

    const SEPARATING: &str = "(z -> x) /\\ (z -> y) -> z -> x /\\ y";

    #[test]
    fn evaluation() {
        let c = chain3_pair();
        assert_eq!(evaluate(&c, &f("p -> p"), &val(&[("p", 1)])).unwrap(), 2);
        // □m = (m → m) → m = 1 → m = 0
        assert_eq!(evaluate(&c, &f("(p -> p) -> p"), &val(&[("p", 1)])).unwrap(), 0);
        assert_eq!(evaluate(&c, &f("top -> p"), &val(&[("p", 1)])).unwrap(), 0);
        assert_eq!(evaluate(&example_m(), &f("p -> q"), &val(&[("p", 1), ("q", 3)])).unwrap(), 2);
        assert_eq!(
            evaluate(&c, &f("~p"), &val(&[("p", 1)])),
            Err(EvalError::MissingConnective("~"))
        );
        assert_eq!(
            evaluate(&c.imp_reduct(), &f("p /\\ q"), &val(&[("p", 1), ("q", 1)])),
            Err(EvalError::MissingConnective("/\\"))
        );
        assert_eq!(evaluate(&c, &f("p -> q"), &val(&[("p", 1)])), Err(EvalError::Unbound("q".into())));
    }

    #[test]
    fn h1_countermodel_in_sha() {
        let l = Limits::default();
        let cm = find_countermodel(&f("p -> q -> p"), ClassTag::Sha, 3, &l).unwrap().unwrap();
        assert_eq!(cm.algebra.size(), 3);
        cm.validate().unwrap();
        assert!(find_countermodel(&f("(p -> q) -> (q -> r) -> p -> r"), ClassTag::Sha, 3, &l)
            .unwrap()
            .is_none());
        assert!(matches!(
            find_countermodel(&f("p"), ClassTag::Sha, 9, &l),
            Err(SemanticsError::Enum(_))
        ));
    }

    #[test]
    fn separating_scheme() {
        let l = Limits::default();
        let sep = f(SEPARATING);
        let cm = find_countermodel(&sep, ClassTag::Shs, 4, &l).unwrap().unwrap();
        assert_eq!(cm.algebra.size(), 4);
        assert!(refute_in(&b2(), &[], &sep).unwrap().is_some());
        assert_eq!(
            entails(&[], &sep, ClassTag::Srlbs, 5, &l).unwrap(),
            Entailment::NoCountermodelUpTo(5)
        );
    }

    #[test]
    fn entailment() {
        let l = Limits::default();
        let hyps = [f("p -> q"), f("q -> r")];
        assert_eq!(
            entails(&hyps, &f("p -> r"), ClassTag::Srl, 4, &l).unwrap(),
            Entailment::NoCountermodelUpTo(4)
        );
        let Entailment::Refuted(cm) = entails(&[], &f("p -> q -> p"), ClassTag::Srl, 4, &l).unwrap() else {
            panic!("h1 is not valid in srl");
        };
        assert_eq!(cm.algebra.size(), 3);
        // modus ponens as an entailment
        assert_eq!(
            entails(&[f("p"), f("p -> q")], &f("q"), ClassTag::Sha, 3, &l).unwrap(),
            Entailment::NoCountermodelUpTo(3)
        );
    }

    #[test]
    fn shrink_sha_keeps_h1_false() {
        let cm = Countermodel {
            class: ClassTag::Sha,
            algebra: chain3_pair().imp_reduct(),
            valuation: val(&[("p", 1), ("q", 2)]),
            formula: f("p -> q -> p"),
            value: 0,
        };
        cm.validate().unwrap();
        let s = fmp_shrink_sha(&cm, &Limits::default()).unwrap();
        assert!(s.audit.passed(), "{:?}", s.audit);
        assert!(s.audit.imp_checked > 0);
        s.countermodel.validate().unwrap();
        assert_ne!(s.countermodel.value, s.countermodel.algebra.top());
    }

    #[test]
    fn shrink_srl_and_srlbs() {
        let c = chain3_pair();
        let cm = Countermodel {
            class: ClassTag::Srl,
            algebra: c,
            valuation: val(&[("p", 1), ("q", 2)]),
            formula: f("p -> q -> p"),
            value: 0,
        };
        let s = fmp_shrink_srl(&cm).unwrap();
        assert!(s.audit.passed());
        assert!(s.countermodel.algebra.size() <= 3);

        // distributivity fails on N at p = c, q = a, r = b
        let n = example_n();
        let dist = f("p /\\ (q \\/ r) -> p /\\ q \\/ p /\\ r");
        let (v, value) = refute_in(&n, &[], &dist).unwrap().unwrap();
        let cm = Countermodel {
            class: ClassTag::Srlbs,
            algebra: n,
            valuation: v,
            formula: dist,
            value,
        };
        cm.validate().unwrap();
        let s = fmp_shrink_srlbs(&cm).unwrap();
        assert!(s.audit.passed(), "{:?}", s.audit);
        assert!(s.audit.join_checked > 0);
        s.countermodel.validate().unwrap();
    }

    #[test]
    fn shrink_rejects_bad_input() {
        let cm = Countermodel {
            class: ClassTag::Srl,
            algebra: chain3_pair(),
            valuation: val(&[("p", 2)]),
            formula: f("p"),
            value: 2,
        };
        assert_eq!(fmp_shrink_srl(&cm), Err(SemanticsError::NotFalsified));
        let cm = Countermodel {
            formula: f("p /\\ p"),
            ..cm
        };
        assert_eq!(fmp_shrink_sha(&cm, &Limits::default()), Err(SemanticsError::NotImplicative));
    }

    #[test]
    fn soundness_small() {
        let l = Limits::default();
        let r = soundness_scan(Calculus::R4Star, ClassTag::Srl, 3, &l).unwrap();
        assert!(r.failures.is_empty(), "{:?}", r.failures);
        let r = soundness_scan(Calculus::R4Plus, ClassTag::Shs, 3, &l).unwrap();
        assert!(r.failures.is_empty(), "{:?}", r.failures);
        // B₂ refutes the separating equation but satisfies the rule form.
        assert!(rule_failure(&b2(), Rule::C).is_none());
        let c = crate::fixtures::two_elt_collapse();
        assert_eq!(rule_failure(&c, Rule::T), None);
        assert_eq!(rule_failure(&c, Rule::MP), Some(vec![0, 1]));
    }
}
