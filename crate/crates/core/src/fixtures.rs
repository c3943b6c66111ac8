//! Built-in algebras with their known classifications.
//!
//! Elements of the five-element lattices are indexed `0, a, b, c, 1`.

use crate::algebra::FiniteAlgebra;
use crate::classes::{check, ClassTag};
use crate::order::{FiniteLattice, FinitePoset};
use crate::Elem;

fn named(a: FiniteAlgebra, names: &[&str]) -> FiniteAlgebra {
    a.with_names(names.iter().map(|s| s.to_string()).collect())
        .expect("one name per element")
}

fn lattice(size: usize, covers: &[(Elem, Elem)]) -> FiniteLattice {
    let p = FinitePoset::from_pairs(size, covers).expect("acyclic covers");
    FiniteLattice::from_poset(p).expect("fixture is a lattice")
}

const FIVE: [&str; 5] = ["0", "a", "b", "c", "1"];

/// `0 < a < c < 1` and `0 < b < 1`.
pub fn lattice_n5() -> FiniteLattice {
    lattice(5, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])
}

/// Three atoms `a, b, c`.
pub fn lattice_m3() -> FiniteLattice {
    lattice(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
}

/// Four-element Boolean lattice `{0, a, b, 1}`.
pub fn lattice_b2() -> FiniteLattice {
    lattice(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
}

/// Chain `0 < m < 1` with `D = {0, 1}`.
pub fn chain3_pair() -> FiniteAlgebra {
    let a = FiniteAlgebra::from_lattice(&FiniteLattice::chain(3), vec![2, 2, 2, 0, 2, 2, 0, 0, 2])
        .expect("3x3 table");
    named(a, &["0", "m", "1"])
}

/// `{a, b}` with `x → y = a` for all `x, y` and `a` as the constant.
pub fn two_elt_collapse() -> FiniteAlgebra {
    named(FiniteAlgebra::implicative(2, vec![0; 4], 0).expect("2x2 table"), &["a", "b"])
}

/// `0 ↦ a`, `m ↦ b`, `1 ↦ a`: a homomorphism from the `{→, 1}`-reduct of
/// [`chain3_pair`] onto [`two_elt_collapse`].
pub fn collapse_map() -> Vec<Elem> {
    vec![0, 1, 0]
}

/// M3 with `D = {0, b, 1}`.
pub fn example_m() -> FiniteAlgebra {
    #[rustfmt::skip]
    let imp = vec![
        4, 4, 4, 4, 4,
        2, 4, 2, 2, 4,
        0, 0, 4, 0, 4,
        2, 2, 2, 4, 4,
        0, 0, 2, 0, 4,
    ];
    named(FiniteAlgebra::from_lattice(&lattice_m3(), imp).expect("5x5 table"), &FIVE)
}

/// N5 with `D = {0, a, 1}`.
pub fn example_n() -> FiniteAlgebra {
    #[rustfmt::skip]
    let imp = vec![
        4, 4, 4, 4, 4,
        0, 4, 0, 4, 4,
        1, 1, 4, 1, 4,
        0, 1, 0, 4, 4,
        0, 1, 0, 1, 4,
    ];
    named(FiniteAlgebra::from_lattice(&lattice_n5(), imp).expect("5x5 table"), &FIVE)
}

/// [`example_n`] with `a → c = 0`, as the table is sometimes transcribed.
/// Since `a ≤ c` this breaks `(x ∧ y) → y = 1`.
pub fn example_n_printed() -> FiniteAlgebra {
    let n = example_n();
    let mut imp = n.imp_table().to_vec();
    imp[5 + 3] = 0;
    n.with_imp(imp).expect("same shape")
}

/// `B₂` with `x → y = 1` if `x ≤ y`, else `y`.
pub fn b2() -> FiniteAlgebra {
    let l = lattice_b2();
    let imp = (0..16)
        .map(|i| if l.leq(i / 4, i % 4) { 3 } else { i % 4 })
        .collect();
    named(FiniteAlgebra::from_lattice(&l, imp).expect("4x4 table"), &["0", "a", "b", "1"])
}

/// The two-element Boolean algebra with `¬x = x → 0`.
pub fn boole2() -> FiniteAlgebra {
    let a = FiniteAlgebra::from_lattice(&FiniteLattice::chain(2), vec![1, 1, 0, 1])
        .and_then(FiniteAlgebra::with_derived_neg)
        .expect("2x2 table");
    named(a, &["0", "1"])
}

pub const FIXTURE_NAMES: [&str; 7] = ["chain3-pair", "two-elt-collapse", "M", "N", "N-printed", "B2", "boole2"];

pub fn algebra_fixture(name: &str) -> Option<FiniteAlgebra> {
    Some(match name {
        "chain3-pair" => chain3_pair(),
        "two-elt-collapse" => two_elt_collapse(),
        "M" => example_m(),
        "N" => example_n(),
        "N-printed" => example_n_printed(),
        "B2" => b2(),
        "boole2" => boole2(),
        _ => return None,
    })
}

pub fn describe(name: &str) -> Option<&'static str> {
    Some(match name {
        "chain3-pair" => "chain 0 < m < 1 with D = {0, 1}",
        "two-elt-collapse" => "{a, b} with constant implication a; image of chain3-pair",
        "M" => "M3 with D = {0, b, 1}",
        "N" => "N5 with D = {0, a, 1}",
        "N-printed" => "N with a -> c = 0; not an srlbs",
        "B2" => "four-element Boolean lattice, x -> y = 1 if x <= y else y",
        "boole2" => "two-element Boolean algebra",
        _ => return None,
    })
}

/// A claim about one fixture and one class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expectation {
    pub class: ClassTag,
    pub member: bool,
    /// Axioms that must appear among the violations.
    pub violated: &'static [&'static str],
    /// A witness the first-listed violated axiom must report.
    pub witness: Option<&'static [Elem]>,
}

const fn yes(class: ClassTag) -> Expectation {
    Expectation {
        class,
        member: true,
        violated: &[],
        witness: None,
    }
}

const fn no(class: ClassTag, violated: &'static [&'static str], witness: Option<&'static [Elem]>) -> Expectation {
    Expectation {
        class,
        member: false,
        violated,
        witness,
    }
}

use ClassTag::*;

const EXPECTATIONS: &[(&str, &[Expectation])] = &[
    (
        "chain3-pair",
        &[
            yes(Srl),
            yes(Srlbs),
            yes(Shs),
            yes(Srs),
            yes(Sha),
            // m → (1 → m) = m → 0 = 0
            no(Hilbert, &["h1"], Some(&[1, 2])),
        ],
    ),
    ("two-elt-collapse", &[no(Sha, &["A"], Some(&[0, 1]))]),
    ("M", &[yes(Srlbs), yes(Shs), yes(Srs), no(Srl, &["Dist"], None)]),
    ("N", &[yes(Srlbs), yes(Shs), yes(Srs), no(Srl, &["Dist"], None)]),
    ("N-printed", &[no(Srlbs, &["SR1"], Some(&[1, 3]))]),
    // a → (a ∧ b) = 0 but (a → a) ∧ (a → b) = b
    (
        "B2",
        &[yes(Shs), yes(ShrlAppendix), no(Srs, &["SR4"], Some(&[1, 2, 1])), no(Srlbs, &["SR4"], None)],
    ),
    ("boole2", &[yes(Srl), yes(Hilbert), yes(Sha), yes(AlgR4Star), yes(AlgPlus)]),
];

pub fn expectations(name: &str) -> &'static [Expectation] {
    EXPECTATIONS
        .iter()
        .find(|(n, _)| *n == name)
        .map_or(&[], |(_, e)| e)
}

/// Checks one expectation; `Err` carries a human-readable mismatch.
pub fn audit(a: &FiniteAlgebra, e: &Expectation) -> Result<(), String> {
    let v = check(e.class, a).map_err(|err| err.to_string())?;
    if v.member != e.member {
        return Err(format!(
            "expected member = {}, got {} (violations: {:?})",
            e.member,
            v.member,
            v.labels()
        ));
    }
    for ax in e.violated {
        if v.violation(ax).is_none() {
            return Err(format!("expected {ax} to fail, violations were {:?}", v.labels()));
        }
    }
    if let (Some(w), Some(ax)) = (e.witness, e.violated.first()) {
        let got = &v.violation(ax).expect("checked above").witness;
        if got.as_slice() != w {
            return Err(format!("{ax}: expected witness {w:?}, got {got:?}"));
        }
    }
    Ok(())
}

/// Every mismatch between a fixture and its expectations, as `class: message`.
pub fn audit_fixture(name: &str) -> Option<Vec<String>> {
    let a = algebra_fixture(name)?;
    Some(
        expectations(name)
            .iter()
            .filter_map(|e| audit(&a, e).err().map(|m| format!("{}: {m}", e.class)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::{build_implication, extract_pair};

    #[test]
    fn every_fixture_matches_its_classification() {
        for name in FIXTURE_NAMES {
            assert!(describe(name).is_some());
            assert!(!expectations(name).is_empty(), "{name}");
            assert_eq!(audit_fixture(name).unwrap(), Vec::<String>::new(), "{name}");
        }
        assert!(algebra_fixture("nope").is_none());
    }

    #[test]
    fn collapse_is_a_homomorphic_image() {
        let src = chain3_pair().imp_reduct();
        assert!(src.is_homomorphism(&collapse_map(), &two_elt_collapse()));
        assert!(crate::classes::check_sha(&src).unwrap().member);
    }

    #[test]
    fn m_and_n_rederive_from_box() {
        for (a, boxed) in [(example_m(), [0, 2, 4]), (example_n(), [0, 1, 4])] {
            let p = extract_pair(&a).unwrap();
            assert_eq!(p.designated.iter().copied().collect::<Vec<_>>(), boxed);
            assert_eq!(build_implication(&p).unwrap().imp_table(), a.imp_table());
        }
    }

    #[test]
    fn spot_values() {
        let m = example_m();
        assert_eq!(m.imp(1, 3), 2);
        let n = example_n();
        assert_eq!(n.imp(1, 3), 4);
        assert_eq!(example_n_printed().imp(1, 3), 0);
        let b = b2();
        assert_eq!(b.imp(1, 2), 2);
        assert_eq!(b.box_set().len(), 4);
    }
}
