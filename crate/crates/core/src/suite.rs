//! The acceptance suite: eight criteria, each with a wall-clock budget.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::calculi::{corpus_entry, deduction_transform, proof_corpus, Calculus};
use crate::classes::{check, check_box_hilbert, is_member, scan, ClassTag, BOX_LAWS, SRL_LAWS};
use crate::enumerate::{enumerate_class, hemi_base_algebras};
use crate::filters::{bracket_law_failure, generation_disagreement, verify_representation, FilterKind};
use crate::fixtures::{self, audit_fixture, FIXTURE_NAMES};
use crate::pair::{build_implication, extract_pair};
use crate::semantics::{
    find_countermodel, fmp_shrink_sha, fmp_shrink_srl, fmp_shrink_srlbs, refute_in, soundness_scan, Countermodel,
    Shrunk,
};
use crate::syntax::Formula;
use crate::Limits;

/// Result of one criterion run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub within_limit: bool,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
    /// Number of individual checks performed.
    pub checks: usize,
    pub failures: Vec<String>,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{verdict} [{}] {} ({} checks, {} ms / {} ms)",
            self.id, self.title, self.checks, self.elapsed_ms, self.limit_ms
        );
        if !self.within_limit {
            s.push_str(" over time budget");
        }
        if let Some(first) = self.failures.first() {
            s.push_str(&format!("; first failure: {first}"));
        }
        s
    }
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.checks += 1;
        self.failures.push(what);
    }
}

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub limit: Duration,
    pub run: fn() -> Outcome,
}

pub const CRITERIA: [Criterion; 8] = [
    Criterion {
        id: 1,
        title: "fixture classifications",
        limit: Duration::from_secs(1),
        run: fixture_classifications,
    },
    Criterion {
        id: 2,
        title: "quasi-equation soundness scan",
        limit: Duration::from_secs(30),
        run: soundness,
    },
    Criterion {
        id: 3,
        title: "representation theorem instances",
        limit: Duration::from_secs(120),
        run: representation,
    },
    Criterion {
        id: 4,
        title: "bracket calculus properties",
        limit: Duration::from_secs(30),
        run: brackets,
    },
    Criterion {
        id: 5,
        title: "proof corpus and deduction transform",
        limit: Duration::from_secs(5),
        run: proofs,
    },
    Criterion {
        id: 6,
        title: "finite model property end to end",
        limit: Duration::from_secs(120),
        run: fmp,
    },
    Criterion {
        id: 7,
        title: "box operator laws",
        limit: Duration::from_secs(10),
        run: box_laws,
    },
    Criterion {
        id: 8,
        title: "appendix base equivalence",
        limit: Duration::from_secs(60),
        run: appendix,
    },
];

pub fn run(c: &Criterion) -> CriterionReport {
    let start = Instant::now();
    let out = (c.run)();
    report(c, out, start.elapsed())
}

fn report(c: &Criterion, out: Outcome, elapsed: Duration) -> CriterionReport {
    let within_limit = elapsed <= c.limit;
    CriterionReport {
        id: c.id,
        title: c.title,
        passed: within_limit && out.failures.is_empty(),
        within_limit,
        elapsed_ms: elapsed.as_millis(),
        limit_ms: c.limit.as_millis(),
        checks: out.checks,
        failures: out.failures,
    }
}

pub fn run_id(id: u8) -> Option<CriterionReport> {
    CRITERIA.iter().find(|c| c.id == id).map(run)
}

/// Runs every criterion in order. Sequential, so the timings are comparable.
pub fn run_all() -> Vec<CriterionReport> {
    CRITERIA.iter().map(run).collect()
}

fn f(s: &str) -> Formula {
    Formula::parse(s).expect("built-in formula parses")
}

fn members(class: ClassTag, max: usize) -> Vec<FiniteAlgebra> {
    let limits = Limits::default();
    (1..=max)
        .flat_map(|n| enumerate_class(n, class, true, &limits).expect("within the default caps"))
        .collect()
}

// ------------------------------------------------------------ criterion 1

fn fixture_classifications() -> Outcome {
    fixture_classifications_on(fixtures::example_m(), fixtures::example_n())
}

/// Criterion 1 with the two five-element tables supplied by the caller.
pub fn fixture_classifications_on(m: FiniteAlgebra, n: FiniteAlgebra) -> Outcome {
    let mut out = Outcome::default();
    for (name, a) in [("M", &m), ("N", &n)] {
        let v = check(ClassTag::Srlbs, a).expect("lattice signature");
        out.expect(v.member, || format!("{name} is not an srlbs: {:?}", v.labels()));
        match extract_pair(a).and_then(|p| build_implication(&p)) {
            Ok(b) => out.expect(b.imp_table() == a.imp_table(), || {
                format!("{name}: implication rebuilt from its boxed elements differs from the table")
            }),
            Err(e) => out.fail(format!("{name}: rebuilding from the boxed elements failed: {e}")),
        }
    }
    for name in FIXTURE_NAMES {
        if name == "M" || name == "N" {
            continue;
        }
        for m in audit_fixture(name).expect("registered") {
            out.fail(format!("{name}: {m}"));
        }
        out.checks += fixtures::expectations(name).len();
    }
    let src = fixtures::chain3_pair().imp_reduct();
    out.expect(src.is_homomorphism(&fixtures::collapse_map(), &fixtures::two_elt_collapse()), || {
        "the collapse map is not a homomorphism".into()
    });
    out
}

// ------------------------------------------------------------ criterion 2

pub const SEPARATING_SCHEME: &str = "(z -> x) /\\ (z -> y) -> z -> x /\\ y";

fn soundness() -> Outcome {
    let mut out = Outcome::default();
    let limits = Limits::default();
    for (calc, class) in [
        (Calculus::R4Star, ClassTag::Srl),
        (Calculus::R4Dagger, ClassTag::Srlbs),
        (Calculus::R4Plus, ClassTag::Shs),
    ] {
        match soundness_scan(calc, class, 4, &limits) {
            Ok(r) => {
                out.checks += r.algebras;
                out.expect(r.algebras > 0, || format!("no {class} algebras enumerated"));
                for fl in r.failures {
                    out.failures.push(format!("{calc} in {class}: {fl}"));
                }
            }
            Err(e) => out.fail(format!("{calc} in {class}: {e}")),
        }
    }
    let sep = f(SEPARATING_SCHEME);
    match find_countermodel(&sep, ClassTag::Srlbs, 5, &limits) {
        Ok(None) => out.checks += 1,
        Ok(Some(cm)) => out.fail(format!("separating scheme fails in an srlbs of size {}", cm.algebra.size())),
        Err(e) => out.fail(format!("separating scheme scan: {e}")),
    }
    out.expect(matches!(refute_in(&fixtures::b2(), &[], &sep), Ok(Some(_))), || {
        "separating scheme holds on B2".into()
    });
    out
}

// ------------------------------------------------------------ criterion 3

fn representation() -> Outcome {
    let mut out = Outcome::default();
    let limits = Limits::default();
    for (class, kind) in [(ClassTag::Sha, FilterKind::Implicative), (ClassTag::Srs, FilterKind::Lattice)] {
        for a in members(class, 3) {
            match verify_representation(&a, kind, &limits) {
                Ok(r) => out.expect(r.passed, || format!("{class} of size {}: {r:?}", a.size())),
                Err(e) => out.fail(format!("{class} of size {}: {e}", a.size())),
            }
        }
    }
    out
}

// ------------------------------------------------------------ criterion 4

fn brackets() -> Outcome {
    let mut out = Outcome::default();
    for a in members(ClassTag::Sha, 4) {
        if let Some((law, w)) = bracket_law_failure(&a, 3) {
            out.fail(format!("{law} fails at {w:?} on {:?}", a.imp_table()));
        } else {
            out.checks += 1;
        }
        if let Some((x, extra)) = generation_disagreement(&a) {
            out.fail(format!("generated filter of {x:?} with {extra} disagrees on {:?}", a.imp_table()));
        } else {
            out.checks += 1;
        }
    }
    out
}

// ------------------------------------------------------------ criterion 5

fn proofs() -> Outcome {
    let mut out = Outcome::default();
    for fx in proof_corpus() {
        let v = fx.proof.check();
        out.expect(v.valid, || format!("{}: {:?}", fx.name, v.diagnostics.first()));
    }
    let c = Calculus::IR4.spec();
    let mut p = corpus_entry("transitivity-from-hypotheses").expect("in corpus").proof;
    for round in 0..3 {
        match deduction_transform(&c, &p) {
            Ok(q) => p = q,
            Err(e) => {
                out.fail(format!("deduction transform round {}: {e}", round + 1));
                return out;
            }
        }
    }
    out.expect(p.hypotheses.is_empty() && p.check().valid, || "transformed proof is invalid".into());
    let goal = f("(a -> b) -> (b -> d) -> a -> d");
    out.expect(p.conclusion() == Some(&goal), || format!("transformed proof ends in {:?}", p.conclusion()));
    out
}

// ------------------------------------------------------------ criterion 6

fn audit_shrink(out: &mut Outcome, what: &str, r: Result<Shrunk, crate::semantics::SemanticsError>) -> Option<Shrunk> {
    match r {
        Ok(s) => {
            out.expect(s.audit.passed(), || format!("{what}: audit failed: {:?}", s.audit));
            out.expect(s.countermodel.validate().is_ok(), || format!("{what}: output is not a countermodel"));
            Some(s)
        }
        Err(e) => {
            out.fail(format!("{what}: {e}"));
            None
        }
    }
}

fn fmp() -> Outcome {
    let mut out = Outcome::default();
    let limits = Limits::default();
    let h1 = f("p -> q -> p");
    let cm = match find_countermodel(&h1, ClassTag::Sha, 3, &limits) {
        Ok(Some(cm)) => cm,
        Ok(None) => {
            out.fail("no sub-Hilbert countermodel to h1 up to size 3".into());
            return out;
        }
        Err(e) => {
            out.fail(format!("countermodel search: {e}"));
            return out;
        }
    };
    out.expect(cm.algebra.size() == 3, || format!("h1 countermodel has size {}", cm.algebra.size()));
    if let Some(s) = audit_shrink(&mut out, "sub-Hilbert shrink", fmp_shrink_sha(&cm, &limits)) {
        out.expect(s.countermodel.class == ClassTag::Srl, || "shrink output is not declared srl".into());
        audit_shrink(&mut out, "srl shrink of the result", fmp_shrink_srl(&s.countermodel));
    }

    let n = fixtures::example_n();
    let dist = f("p /\\ (q \\/ r) -> p /\\ q \\/ p /\\ r");
    match refute_in(&n, &[], &dist) {
        Ok(Some((valuation, value))) => {
            let cm = Countermodel {
                class: ClassTag::Srlbs,
                algebra: n,
                valuation,
                formula: dist,
                value,
            };
            if let Some(s) = audit_shrink(&mut out, "broad-sense shrink on N", fmp_shrink_srlbs(&cm)) {
                out.expect(s.audit.join_checked > 0 && s.audit.imp_checked > 0, || {
                    "broad-sense shrink audited nothing".into()
                });
            }
        }
        _ => out.fail("distributivity is not refuted on N".into()),
    }
    out
}

// ------------------------------------------------------------ criterion 7

fn box_laws() -> Outcome {
    let mut out = Outcome::default();
    for a in members(ClassTag::Sha, 4) {
        let v = scan(&a, BOX_LAWS);
        out.expect(v.is_empty(), || format!("{:?} on {:?}", v[0], a.imp_table()));
        let h = check_box_hilbert(&a);
        out.expect(h.member, || format!("box image not a Hilbert subalgebra: {:?}", h.labels()));
        out.expect(a.box_set() == a.box_fixpoints(), || "box image differs from its fixpoints".into());
    }
    for a in members(ClassTag::Srl, 4) {
        let v = scan(&a, SRL_LAWS);
        out.expect(v.is_empty(), || format!("{:?} on {:?}", v[0], a.imp_table()));
    }
    out
}

// ------------------------------------------------------------ criterion 8

fn appendix() -> Outcome {
    let mut out = Outcome::default();
    for n in 1..=4 {
        for a in hemi_base_algebras(n) {
            let shs = is_member(ClassTag::Shs, &a).expect("bounded lattice signature");
            let app = is_member(ClassTag::ShrlAppendix, &a).expect("lattice signature");
            out.expect(shs == app, || {
                format!(
                    "divergence at size {n} (shs: {shs}, appendix: {app}): meet {:?}, imp {:?}",
                    a.meet_table(),
                    a.imp_table()
                )
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_criteria_pass() {
        for id in [1, 5] {
            let r = run_id(id).unwrap();
            assert!(r.passed, "{}", r.line());
        }
        assert!(run_id(9).is_none());
    }

    #[test]
    fn corrupted_m_is_reported() {
        let m = fixtures::example_m();
        let mut imp = m.imp_table().to_vec();
        imp[5 + 3] = 0;
        let out = fixture_classifications_on(m.with_imp(imp).unwrap(), fixtures::example_n());
        assert!(out.failures.iter().any(|f| f.starts_with("M")), "{:?}", out.failures);
    }

    #[test]
    fn report_line_shape() {
        let c = &CRITERIA[0];
        let r = report(
            c,
            Outcome {
                checks: 2,
                failures: vec!["x".into()],
            },
            Duration::from_millis(3),
        );
        assert!(!r.passed && r.within_limit);
        assert!(r.line().starts_with("FAIL [1] fixture classifications"));
    }
}
