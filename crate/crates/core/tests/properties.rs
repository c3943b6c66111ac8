use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use subres::calculi::{deduction_transform, proof_corpus, Fixture, Justification, Proof, ProofLine};
use subres::classes::is_member;
use subres::enumerate::{enumerate_class, lattices_up_to_iso};
use subres::pair::{build_implication, extract_pair};
use subres::semantics::{fmp_shrink_sha, fmp_shrink_srl, fmp_shrink_srlbs, refute_in, Countermodel};
use subres::syntax::{match_scheme, substitute, Scheme, Substitution, TOP_VAR};
use subres::{ClassTag, ElemSet, FiniteAlgebra, FiniteLattice, Formula, Limits};

fn pool(class: ClassTag, max: usize) -> Vec<FiniteAlgebra> {
    (1..=max)
        .flat_map(|n| enumerate_class(n, class, true, &Limits::default()).unwrap())
        .collect()
}

fn srl_pool() -> &'static [FiniteAlgebra] {
    static P: OnceLock<Vec<FiniteAlgebra>> = OnceLock::new();
    P.get_or_init(|| pool(ClassTag::Srl, 5))
}

fn srlbs_pool() -> &'static [FiniteAlgebra] {
    static P: OnceLock<Vec<FiniteAlgebra>> = OnceLock::new();
    P.get_or_init(|| pool(ClassTag::Srlbs, 5))
}

fn sha_pool() -> &'static [FiniteAlgebra] {
    static P: OnceLock<Vec<FiniteAlgebra>> = OnceLock::new();
    P.get_or_init(|| pool(ClassTag::Sha, 4))
}

fn lattice_pool() -> &'static [FiniteLattice] {
    static P: OnceLock<Vec<FiniteLattice>> = OnceLock::new();
    P.get_or_init(|| (1..=6).flat_map(lattices_up_to_iso).collect())
}

fn var() -> impl Strategy<Value = Formula> {
    prop_oneof![Just("p"), Just("q"), Just("r")].prop_map(Formula::var)
}

fn imp_formula(depth: u32) -> impl Strategy<Value = Formula> {
    var().prop_recursive(depth, 24, 2, |inner| (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)))
}

fn lattice_formula(depth: u32) -> impl Strategy<Value = Formula> {
    var().prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::or(a, b)),
        ]
    })
}

fn any_formula(depth: u32) -> impl Strategy<Value = Formula> {
    prop_oneof![var(), Just(Formula::top()), Just(Formula::bot())].prop_recursive(depth, 32, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            inner.prop_map(Formula::not),
        ]
    })
}

fn countermodel(class: ClassTag, a: &FiniteAlgebra, f: &Formula) -> Option<Countermodel> {
    let (valuation, value) = refute_in(a, &[], f).unwrap()?;
    Some(Countermodel {
        class,
        algebra: a.clone(),
        valuation,
        formula: f.clone(),
        value,
    })
}

/// Least bounded sublattice containing `xs`, by intersecting every candidate.
fn sublattice_oracle(l: &FiniteLattice, xs: &ElemSet) -> ElemSet {
    let n = l.size();
    let mut best: ElemSet = (0..n).collect();
    for mask in 0u32..(1 << n) {
        let s: ElemSet = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let closed = s.contains(&l.top())
            && s.contains(&l.bottom())
            && s.iter().all(|&a| s.iter().all(|&b| s.contains(&l.meet(a, b)) && s.contains(&l.join(a, b))));
        if closed && xs.is_subset(&s) {
            best = best.intersection(&s).copied().collect();
        }
    }
    best
}

fn rename_proof(p: &Proof, sigma: &Substitution) -> Proof {
    Proof {
        calculus: p.calculus,
        hypotheses: p.hypotheses.iter().map(|h| substitute(sigma, h)).collect(),
        lines: p
            .lines
            .iter()
            .map(|l| ProofLine {
                formula: substitute(sigma, &l.formula),
                just: match &l.just {
                    Justification::Axiom { label, .. } => Justification::Axiom {
                        label: label.clone(),
                        subst: None,
                    },
                    j => j.clone(),
                },
            })
            .collect(),
    }
}

fn corpus() -> &'static [Fixture] {
    static P: OnceLock<Vec<Fixture>> = OnceLock::new();
    P.get_or_init(proof_corpus)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity(f in any_formula(5)) {
        prop_assert_eq!(Formula::parse(&f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(Formula::parse(&f.to_unicode()).unwrap(), f);
    }

    #[test]
    fn matching_recovers_instances(s in lattice_formula(3), a in lattice_formula(2), b in lattice_formula(2), c in lattice_formula(2)) {
        let scheme = Scheme { body: s };
        let mut sigma = Substitution::new();
        for (m, f) in ["p", "q", "r"].into_iter().zip([a, b, c]) {
            sigma.insert(m.to_string(), f);
        }
        let inst = scheme.instantiate(&sigma);
        let found = match_scheme(&scheme, &inst).expect("an instance matches its scheme");
        prop_assert_eq!(scheme.instantiate(&found), inst);
        for m in scheme.metavars() {
            prop_assert_eq!(&found[&m], &sigma[&m]);
        }
    }

    #[test]
    fn generated_sublattice_is_least(i in any::<prop::sample::Index>(), mask in 0u32..64) {
        let l = &lattice_pool()[i.index(lattice_pool().len())];
        let xs: ElemSet = (0..l.size()).filter(|&k| mask >> k & 1 == 1).collect();
        let got = l.generated_sublattice(&xs, true);
        prop_assert!(l.is_sublattice(&got, true));
        prop_assert_eq!(got, sublattice_oracle(l, &xs));
    }

    #[test]
    fn pair_round_trip(i in any::<prop::sample::Index>()) {
        let a = &srlbs_pool()[i.index(srlbs_pool().len())];
        let p = extract_pair(a).unwrap();
        let b = build_implication(&p).unwrap();
        prop_assert_eq!(b.imp_table(), a.imp_table());
        prop_assert_eq!(b.meet_table(), a.meet_table());
    }

    #[test]
    fn class_inclusions(i in any::<prop::sample::Index>()) {
        let a = &srlbs_pool()[i.index(srlbs_pool().len())];
        prop_assert!(is_member(ClassTag::Shs, a).unwrap());
        prop_assert!(is_member(ClassTag::Srs, &a.meet_reduct()).unwrap());
        prop_assert!(is_member(ClassTag::Sha, &a.imp_reduct()).unwrap());
        if a.lattice().unwrap().is_distributive() {
            prop_assert!(is_member(ClassTag::Srl, a).unwrap());
        }
    }

    #[test]
    fn srl_shrink_keeps_the_refutation(i in any::<prop::sample::Index>(), f in lattice_formula(4)) {
        let a = &srl_pool()[i.index(srl_pool().len())];
        if let Some(cm) = countermodel(ClassTag::Srl, a, &f) {
            let s = fmp_shrink_srl(&cm).unwrap();
            prop_assert!(s.audit.passed(), "{:?}", s.audit);
            s.countermodel.validate().unwrap();
            prop_assert!(s.countermodel.algebra.size() <= a.size());
        }
    }

    #[test]
    fn srlbs_shrink_keeps_the_refutation(i in any::<prop::sample::Index>(), f in lattice_formula(4)) {
        let a = &srlbs_pool()[i.index(srlbs_pool().len())];
        if let Some(cm) = countermodel(ClassTag::Srlbs, a, &f) {
            let s = fmp_shrink_srlbs(&cm).unwrap();
            prop_assert!(s.audit.passed(), "{:?}", s.audit);
            s.countermodel.validate().unwrap();
        }
    }

    #[test]
    fn sha_shrink_lands_in_srl(i in any::<prop::sample::Index>(), f in imp_formula(3)) {
        let a = &sha_pool()[i.index(sha_pool().len())];
        if let Some(cm) = countermodel(ClassTag::Sha, a, &f) {
            let s = fmp_shrink_sha(&cm, &Limits::default()).unwrap();
            prop_assert!(s.audit.passed(), "{:?}", s.audit);
            prop_assert_eq!(s.countermodel.class, ClassTag::Srl);
            s.countermodel.validate().unwrap();
        }
    }

    #[test]
    fn proofs_survive_uniform_substitution(i in any::<prop::sample::Index>(), a in any_formula(2), b in any_formula(2)) {
        let fx = &corpus()[i.index(corpus().len())];
        let vars: BTreeSet<String> = fx
            .proof
            .lines
            .iter()
            .flat_map(|l| l.formula.vars())
            .chain(fx.proof.hypotheses.iter().flat_map(|h| h.vars()))
            .filter(|v| v != TOP_VAR)
            .collect();
        let mut sigma = Substitution::new();
        for (k, v) in vars.into_iter().enumerate() {
            let image = if k % 2 == 0 { a.clone() } else { b.clone() };
            sigma.insert(v.clone(), Formula::imp(Formula::var(&v), image));
        }
        let renamed = rename_proof(&fx.proof, &sigma);
        let verdict = renamed.check();
        prop_assert!(verdict.valid, "{}: {:?}", fx.name, verdict.diagnostics);
        let spec = fx.proof.calculus.spec();
        if let Ok(d) = deduction_transform(&spec, &fx.proof) {
            prop_assume!(d.check().valid);
            let d2 = deduction_transform(&spec, &renamed).expect("transform commutes with substitution");
            prop_assert!(d2.check().valid);
        }
    }
}

#[test]
fn pools_are_nonempty() {
    assert!(srl_pool().len() >= 18);
    assert!(srlbs_pool().len() >= 26);
    assert!(!sha_pool().is_empty());
}
