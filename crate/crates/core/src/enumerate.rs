//! Exhaustive enumeration of small class members.
//!
//! Carriers are normalised: the top is `n - 1` and, when a lattice backbone
//! is present, the bottom is `0`. Every algebra of size `n` in a class is
//! isomorphic to exactly one normalised labelling family, so "all algebras"
//! below means all normalised ones.
//!
//! Candidate tables are restricted before the full class check using
//! consequences of the axioms that hold cell by cell:
//!
//! * implicative classes: `x → y = 1` iff `x ≤` y in the natural order, which
//!   is a partial order with top `1`; so we range over posets with top and
//!   fill the remaining cells with non-top values;
//! * lattice classes: `x → y = 1` iff `x ≤ y`, and `x ∧ (x → y) ≤ y`;
//! * the appendix class: only `x → x = 1` and `x ∧ (x → y) ≤ y` are used,
//!   so its search space is the whole hemi-implicative base.
//!
//! * srl and srlbs: one candidate per bounded sublattice `D` via the pair
//!   construction, since `D = □A` recovers every member.
//!
//! [`enumerate_raw`] does no restriction at all and is used to cross-check.

use std::collections::HashSet;

use thiserror::Error;

use crate::algebra::FiniteAlgebra;
use crate::classes::{is_member, ClassTag};
use crate::order::{bounded_lattices, posets_with_top, FiniteLattice};
use crate::pair::{build_implication, AlgebraPair};
use crate::{Elem, ElemSet, Limits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("enumerating {class} at size {size} exceeds the cap of {cap}")]
    CapExceeded { class: ClassTag, size: usize, cap: usize },
}

/// Calls `visit` on every tuple of the cartesian product of `pools`, last
/// coordinate fastest.
pub fn product(pools: &[Vec<Elem>], visit: &mut dyn FnMut(&[Elem])) {
    if pools.iter().any(|p| p.is_empty()) {
        return;
    }
    let k = pools.len();
    let mut idx = vec![0usize; k];
    let mut cur: Vec<Elem> = pools.iter().map(|p| p[0]).collect();
    loop {
        visit(&cur);
        let mut p = k;
        loop {
            if p == 0 {
                return;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < pools[p].len() {
                cur[p] = pools[p][idx[p]];
                break;
            }
            idx[p] = 0;
            cur[p] = pools[p][0];
        }
    }
}

/// One lattice per isomorphism type, in the order of [`bounded_lattices`].
pub fn lattices_up_to_iso(n: usize) -> Vec<FiniteLattice> {
    let mut seen = HashSet::new();
    bounded_lattices(n)
        .into_iter()
        .filter(|l| {
            let a = FiniteAlgebra::from_lattice(l, vec![l.top(); n * n]).expect("sizes agree");
            seen.insert(a.canonical_form())
        })
        .collect()
}

/// Largest carrier [`enumerate_class`] accepts for `class`.
pub fn size_cap(class: ClassTag, limits: &Limits) -> usize {
    if class.has_lattice() {
        limits.enum_lattice
    } else {
        limits.enum_implicative
    }
}

/// All (normalised) algebras of size `n` in `class`, deduplicated up to
/// isomorphism when asked. The output order is deterministic.
pub fn enumerate_class(
    n: usize,
    class: ClassTag,
    up_to_iso: bool,
    limits: &Limits,
) -> Result<Vec<FiniteAlgebra>, EnumError> {
    let cap = size_cap(class, limits);
    if n > cap {
        return Err(EnumError::CapExceeded { class, size: n, cap });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    if class.has_lattice() {
        let lattices = if up_to_iso {
            lattices_up_to_iso(n)
        } else {
            bounded_lattices(n)
        };
        for l in &lattices {
            if matches!(class, ClassTag::Srl | ClassTag::Srlbs) {
                out.extend(from_pairs(l).into_iter().filter(|a| is_member(class, a).expect("lattice signature")));
                continue;
            }
            let pools = imp_pools(l, class);
            product(&pools, &mut |imp| {
                let base = FiniteAlgebra::from_lattice(l, imp.to_vec()).expect("pool values in range");
                for a in shape_for(class, base) {
                    if is_member(class, &a).expect("signature fits class") {
                        out.push(a);
                    }
                }
            });
        }
    } else {
        let top = n - 1;
        for p in posets_with_top(n) {
            let pools: Vec<Vec<Elem>> = (0..n * n)
                .map(|i| {
                    if p.leq(i / n, i % n) {
                        vec![top]
                    } else {
                        (0..top).collect()
                    }
                })
                .collect();
            product(&pools, &mut |imp| {
                let a = FiniteAlgebra::implicative(n, imp.to_vec(), top).expect("pool values in range");
                if is_member(class, &a).expect("implicative signature") {
                    out.push(a);
                }
            });
        }
    }
    if up_to_iso {
        out = dedup_iso(out);
    }
    Ok(out)
}

/// Every `{→, ∧, ∨, 0, 1}`-algebra of size `n` satisfying the
/// hemi-implicative base, one lattice per isomorphism type. Operations beyond
/// `{→, ∧, ∨, 1}` are carried along so the bounded classes can be checked too.
pub fn hemi_base_algebras(n: usize) -> Vec<FiniteAlgebra> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for l in lattices_up_to_iso(n) {
        let pools = imp_pools(&l, ClassTag::ShrlAppendix);
        product(&pools, &mut |imp| {
            out.push(FiniteAlgebra::from_lattice(&l, imp.to_vec()).expect("pool values in range"));
        });
    }
    out
}

/// `(l, D)` for every bounded sublattice `D` for which the pair implication
/// is defined. Every member of the lattice classes arises this way with
/// `D = □A`, so this replaces the table scan for them.
fn from_pairs(l: &FiniteLattice) -> Vec<FiniteAlgebra> {
    let n = l.size();
    let (bot, top) = (l.bottom(), l.top());
    let inner: Vec<Elem> = (0..n).filter(|&x| x != bot && x != top).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << inner.len() {
        let mut d: ElemSet = inner.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
        d.insert(bot);
        d.insert(top);
        if !l.is_sublattice(&d, true) {
            continue;
        }
        let pair = AlgebraPair::new(l.clone(), d).expect("contains the top");
        if let Ok(a) = build_implication(&pair) {
            out.push(a);
        }
    }
    out
}

/// The lattice-class enumeration by `→` tables, without the pair shortcut.
/// Only used to cross-check [`enumerate_class`].
pub fn enumerate_by_tables(n: usize, class: ClassTag) -> Vec<FiniteAlgebra> {
    let mut out = Vec::new();
    for l in &bounded_lattices(n) {
        product(&imp_pools(l, class), &mut |imp| {
            let base = FiniteAlgebra::from_lattice(l, imp.to_vec()).expect("pool values in range");
            for a in shape_for(class, base) {
                if is_member(class, &a).expect("signature fits class") {
                    out.push(a);
                }
            }
        });
    }
    out
}

/// Keeps the first algebra of every isomorphism class.
pub fn dedup_iso(algebras: Vec<FiniteAlgebra>) -> Vec<FiniteAlgebra> {
    let mut seen = HashSet::new();
    algebras
        .into_iter()
        .filter(|a| seen.insert(a.canonical_form()))
        .collect()
}

/// Candidate values for each cell of `→` over lattice `l`.
fn imp_pools(l: &FiniteLattice, class: ClassTag) -> Vec<Vec<Elem>> {
    let n = l.size();
    let top = l.top();
    (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            match class {
                ClassTag::ShrlAppendix => {
                    if x == y {
                        vec![top]
                    } else {
                        (0..n).filter(|&v| l.leq(l.meet(x, v), y)).collect()
                    }
                }
                _ => {
                    if l.leq(x, y) {
                        vec![top]
                    } else {
                        (0..n).filter(|&v| v != top && l.leq(l.meet(x, v), y)).collect()
                    }
                }
            }
        })
        .collect()
}

/// Adapts a full lattice-with-implication candidate to the class signature;
/// for the negation classes this yields one candidate per admissible `¬`.
fn shape_for(class: ClassTag, base: FiniteAlgebra) -> Vec<FiniteAlgebra> {
    match class {
        ClassTag::Srs => vec![base.meet_reduct()],
        ClassTag::ShrlAppendix => vec![base.lattice_reduct()],
        ClassTag::AlgR4Star | ClassTag::AlgPlus => with_negations(&base.lattice_reduct()),
        _ => vec![base],
    }
}

/// Every `¬` table satisfying (N1) and (N2), which constrain each `¬x`
/// independently.
pub fn with_negations(a: &FiniteAlgebra) -> Vec<FiniteAlgebra> {
    let n = a.size();
    let top = a.top();
    let pools: Vec<Vec<Elem>> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&c| {
                    (0..n).all(|y| a.imp(c, a.imp(x, y)) == top) && a.imp(a.imp(x, c), c) == top
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    product(&pools, &mut |neg| {
        out.push(a.clone().with_neg(neg.to_vec()).expect("values in range"));
    });
    out
}

/// No pruning: every `→` table (and, for lattice classes, every normalised
/// lattice; for the negation classes every `¬`). Only for tiny `n`.
pub fn enumerate_raw(n: usize, class: ClassTag) -> Vec<FiniteAlgebra> {
    if n == 0 {
        return Vec::new();
    }
    let all: Vec<Vec<Elem>> = vec![(0..n).collect(); n * n];
    let mut out = Vec::new();
    if class.has_lattice() {
        for l in bounded_lattices(n) {
            product(&all, &mut |imp| {
                let base = FiniteAlgebra::from_lattice(&l, imp.to_vec()).expect("in range");
                let shaped: Vec<FiniteAlgebra> = match class {
                    ClassTag::AlgR4Star | ClassTag::AlgPlus => {
                        let r = base.lattice_reduct();
                        let negs: Vec<Vec<Elem>> = vec![(0..n).collect(); n];
                        let mut v = Vec::new();
                        product(&negs, &mut |neg| v.push(r.clone().with_neg(neg.to_vec()).expect("in range")));
                        v
                    }
                    ClassTag::Srs => vec![base.meet_reduct()],
                    ClassTag::ShrlAppendix => vec![base.lattice_reduct()],
                    _ => vec![base],
                };
                out.extend(shaped.into_iter().filter(|a| is_member(class, a).expect("signature fits")));
            });
        }
    } else {
        product(&all, &mut |imp| {
            let a = FiniteAlgebra::implicative(n, imp.to_vec(), n - 1).expect("in range");
            if is_member(class, &a).expect("implicative") {
                out.push(a);
            }
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set_of(v: &[FiniteAlgebra]) -> HashSet<FiniteAlgebra> {
        v.iter().cloned().collect()
    }

    #[test]
    fn size_one_sha() {
        let v = enumerate_class(1, ClassTag::Sha, true, &Limits::default()).unwrap();
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn size_two_sha_by_raw_scan() {
        // 16 candidate tables with top = 1
        let raw = enumerate_raw(2, ClassTag::Sha);
        let boolean = FiniteAlgebra::implicative(2, vec![1, 1, 0, 1], 1).unwrap();
        let collapse = FiniteAlgebra::implicative(2, vec![1, 1, 1, 1], 1).unwrap();
        assert!(raw.contains(&boolean));
        assert!(!raw.contains(&collapse));
        let pruned = enumerate_class(2, ClassTag::Sha, false, &Limits::default()).unwrap();
        assert_eq!(set_of(&raw), set_of(&pruned));
    }

    #[test]
    fn pruned_matches_raw_at_size_three() {
        for class in [ClassTag::Sha, ClassTag::Hilbert, ClassTag::Srl, ClassTag::Srs, ClassTag::Srlbs, ClassTag::Shs, ClassTag::ShrlAppendix] {
            let raw = enumerate_raw(3, class);
            let pruned = enumerate_class(3, class, false, &Limits::default()).unwrap();
            assert_eq!(set_of(&raw), set_of(&pruned), "{class}");
            assert_eq!(raw.len(), pruned.len(), "{class}");
        }
    }

    #[test]
    fn pruned_matches_raw_with_negation() {
        for class in [ClassTag::AlgR4Star, ClassTag::AlgPlus] {
            for n in 1..=2 {
                let raw = enumerate_raw(n, class);
                let pruned = enumerate_class(n, class, false, &Limits::default()).unwrap();
                assert_eq!(set_of(&raw), set_of(&pruned), "{class} {n}");
            }
        }
    }

    #[test]
    fn srl_size_three_has_both_chains() {
        let v = enumerate_class(3, ClassTag::Srl, true, &Limits::default()).unwrap();
        let heyting = vec![2, 2, 2, 0, 2, 2, 0, 1, 2];
        let pair = vec![2, 2, 2, 0, 2, 2, 0, 0, 2];
        assert!(v.iter().any(|a| a.imp_table() == heyting.as_slice()));
        assert!(v.iter().any(|a| a.imp_table() == pair.as_slice()));
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn caps() {
        let limits = Limits::default();
        assert!(matches!(
            enumerate_class(5, ClassTag::Sha, false, &limits),
            Err(EnumError::CapExceeded { .. })
        ));
        assert!(enumerate_class(6, ClassTag::Srl, false, &limits).is_err());
    }

    #[test]
    fn lattice_iso_types() {
        let counts: Vec<usize> = (1..=6).map(|n| lattices_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn deterministic_order() {
        let a = enumerate_class(4, ClassTag::Srlbs, true, &Limits::default()).unwrap();
        let b = enumerate_class(4, ClassTag::Srlbs, true, &Limits::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hemi_base_candidates_satisfy_the_base() {
        for n in 1..=3 {
            let all = hemi_base_algebras(n);
            assert!(!all.is_empty());
            for a in &all {
                assert!(crate::classes::check_hemi_base(a).unwrap().member);
            }
        }
    }

    #[test]
    fn pair_enumeration_matches_tables() {
        let limits = Limits::default();
        for class in [ClassTag::Srl, ClassTag::Srlbs] {
            for n in 1..=4 {
                let fast = enumerate_class(n, class, false, &limits).unwrap();
                let slow = enumerate_by_tables(n, class);
                assert_eq!(set_of(&fast), set_of(&slow), "{class} {n}");
                assert_eq!(fast.len(), slow.len(), "{class} {n}");
            }
        }
    }
}
