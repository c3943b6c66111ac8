//! Finite posets and lattices stored as explicit tables.
//!
//! Carriers are `0..size`. Lattices keep their meet and join tables next to
//! the order relation; every constructor checks the tables against the order
//! so the inner loops of the class checkers can index them directly.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::{Elem, ElemSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("empty carrier")]
    Empty,
    #[error("table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("element {0} out of range")]
    OutOfRange(Elem),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(Elem),
    #[error("relation is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(Elem, Elem),
    #[error("relation is not transitive at ({0}, {1}, {2})")]
    NotTransitive(Elem, Elem, Elem),
    #[error("elements {0} and {1} have no {2}")]
    NotALattice(Elem, Elem, &'static str),
    #[error("{op}({a}, {b}) = {found} disagrees with the order (expected {expected})")]
    InconsistentTable {
        op: &'static str,
        a: Elem,
        b: Elem,
        found: Elem,
        expected: Elem,
    },
    #[error("no greatest element")]
    NoTop,
    #[error("upset construction needs 2^{base} subsets, cap is 2^{cap}")]
    UpsetBaseCap { base: usize, cap: usize },
    #[error("upset lattice has more than {cap} elements")]
    UpsetCountCap { cap: usize },
}

/// A partial order on `0..size`, stored as a dense boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    size: usize,
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn new(size: usize, leq: Vec<bool>) -> Result<Self, OrderError> {
        if size == 0 {
            return Err(OrderError::Empty);
        }
        if leq.len() != size * size {
            return Err(OrderError::TableShape {
                expected: size * size,
                found: leq.len(),
            });
        }
        let p = FinitePoset { size, leq };
        for a in 0..size {
            if !p.leq(a, a) {
                return Err(OrderError::NotReflexive(a));
            }
        }
        for a in 0..size {
            for b in 0..size {
                if a != b && p.leq(a, b) && p.leq(b, a) {
                    return Err(OrderError::NotAntisymmetric(a, b));
                }
            }
        }
        for a in 0..size {
            for b in 0..size {
                if !p.leq(a, b) {
                    continue;
                }
                for c in 0..size {
                    if p.leq(b, c) && !p.leq(a, c) {
                        return Err(OrderError::NotTransitive(a, b, c));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Reflexive-transitive closure of `pairs` (each `(a, b)` meaning `a <= b`).
    pub fn from_pairs(size: usize, pairs: &[(Elem, Elem)]) -> Result<Self, OrderError> {
        if size == 0 {
            return Err(OrderError::Empty);
        }
        let mut leq = vec![false; size * size];
        for a in 0..size {
            leq[a * size + a] = true;
        }
        for &(a, b) in pairs {
            if a >= size {
                return Err(OrderError::OutOfRange(a));
            }
            if b >= size {
                return Err(OrderError::OutOfRange(b));
            }
            leq[a * size + b] = true;
        }
        // Warshall
        for k in 0..size {
            for i in 0..size {
                if leq[i * size + k] {
                    for j in 0..size {
                        if leq[k * size + j] {
                            leq[i * size + j] = true;
                        }
                    }
                }
            }
        }
        Self::new(size, leq)
    }

    pub fn chain(size: usize) -> Self {
        let mut leq = vec![false; size * size];
        for a in 0..size {
            for b in a..size {
                leq[a * size + b] = true;
            }
        }
        FinitePoset { size, leq }
    }

    pub fn antichain(size: usize) -> Self {
        let mut leq = vec![false; size * size];
        for a in 0..size {
            leq[a * size + a] = true;
        }
        FinitePoset { size, leq }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.size + b]
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let n = self.size;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = (0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn greatest(&self) -> Option<Elem> {
        (0..self.size).find(|&t| (0..self.size).all(|a| self.leq(a, t)))
    }

    pub fn least(&self) -> Option<Elem> {
        (0..self.size).find(|&b| (0..self.size).all(|a| self.leq(b, a)))
    }

    /// Whether the bitmask `set` (bit `i` = element `i`) is up-closed.
    pub fn is_upset_mask(&self, set: u64) -> bool {
        (0..self.size).all(|a| {
            set >> a & 1 == 0 || (0..self.size).all(|b| !self.leq(a, b) || set >> b & 1 == 1)
        })
    }

    /// Greatest lower bound of `a` and `b`, if one exists.
    pub fn infimum(&self, a: Elem, b: Elem) -> Option<Elem> {
        let lower: Vec<Elem> = (0..self.size)
            .filter(|&c| self.leq(c, a) && self.leq(c, b))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&c| lower.iter().all(|&d| self.leq(d, c)))
    }

    /// Least upper bound of `a` and `b`, if one exists.
    pub fn supremum(&self, a: Elem, b: Elem) -> Option<Elem> {
        let upper: Vec<Elem> = (0..self.size)
            .filter(|&c| self.leq(a, c) && self.leq(b, c))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&c| upper.iter().all(|&d| self.leq(c, d)))
    }
}

/// A finite lattice with explicit meet/join tables.
///
/// A finite lattice always has a bottom; `bottom` is simply the least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    top: Elem,
    bottom: Elem,
}

impl FiniteLattice {
    /// Derives meet and join from the order; fails if some pair lacks one.
    pub fn from_poset(poset: FinitePoset) -> Result<Self, OrderError> {
        let n = poset.size();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = poset
                    .infimum(a, b)
                    .ok_or(OrderError::NotALattice(a, b, "meet"))?;
                join[a * n + b] = poset
                    .supremum(a, b)
                    .ok_or(OrderError::NotALattice(a, b, "join"))?;
            }
        }
        let top = poset.greatest().ok_or(OrderError::NoTop)?;
        let bottom = poset.least().ok_or(OrderError::NotALattice(0, 0, "bottom"))?;
        Ok(FiniteLattice {
            poset,
            meet,
            join,
            top,
            bottom,
        })
    }

    /// Validates given tables against `poset`.
    pub fn from_parts(poset: FinitePoset, meet: Vec<Elem>, join: Vec<Elem>) -> Result<Self, OrderError> {
        let derived = Self::from_poset(poset)?;
        let n = derived.size();
        for (op, given, expected) in [("meet", &meet, &derived.meet), ("join", &join, &derived.join)] {
            if given.len() != n * n {
                return Err(OrderError::TableShape {
                    expected: n * n,
                    found: given.len(),
                });
            }
            for a in 0..n {
                for b in 0..n {
                    let (g, e) = (given[a * n + b], expected[a * n + b]);
                    if g != e {
                        return Err(OrderError::InconsistentTable {
                            op,
                            a,
                            b,
                            found: g,
                            expected: e,
                        });
                    }
                }
            }
        }
        Ok(derived)
    }

    /// Reads the order off a meet table (`a <= b` iff `a ∧ b = a`).
    ///
    /// A finite meet-semilattice with a greatest element is a lattice, so the
    /// join is derived. The table must be a semilattice operation.
    pub fn from_meet_table(size: usize, meet: &[Elem]) -> Result<Self, OrderError> {
        if size == 0 {
            return Err(OrderError::Empty);
        }
        if meet.len() != size * size {
            return Err(OrderError::TableShape {
                expected: size * size,
                found: meet.len(),
            });
        }
        if let Some(&bad) = meet.iter().find(|&&v| v >= size) {
            return Err(OrderError::OutOfRange(bad));
        }
        let mut leq = vec![false; size * size];
        for a in 0..size {
            for b in 0..size {
                leq[a * size + b] = meet[a * size + b] == a;
            }
        }
        let poset = FinitePoset::new(size, leq)?;
        let lattice = Self::from_poset(poset)?;
        for a in 0..size {
            for b in 0..size {
                let expected = lattice.meet(a, b);
                let found = meet[a * size + b];
                if found != expected {
                    return Err(OrderError::InconsistentTable {
                        op: "meet",
                        a,
                        b,
                        found,
                        expected,
                    });
                }
            }
        }
        Ok(lattice)
    }

    pub fn chain(size: usize) -> Self {
        Self::from_poset(FinitePoset::chain(size)).expect("chains are lattices")
    }

    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.size() + b]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.size() + b]
    }

    pub fn meet_table(&self) -> &[Elem] {
        &self.meet
    }

    pub fn join_table(&self) -> &[Elem] {
        &self.join
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    /// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` for all triples.
    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    pub fn distributivity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Least meet/join-closed superset of `xs`, plus top and bottom when `bounded`.
    pub fn generated_sublattice(&self, xs: &ElemSet, bounded: bool) -> ElemSet {
        let mut set: ElemSet = xs.clone();
        if bounded {
            set.insert(self.top);
            set.insert(self.bottom);
        }
        loop {
            let items: Vec<Elem> = set.iter().copied().collect();
            let before = set.len();
            for &a in &items {
                for &b in &items {
                    set.insert(self.meet(a, b));
                    set.insert(self.join(a, b));
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    /// Least meet-closed superset of `xs` (no joins added).
    pub fn generated_meet_subsemilattice(&self, xs: &ElemSet) -> ElemSet {
        let mut set = xs.clone();
        loop {
            let items: Vec<Elem> = set.iter().copied().collect();
            let before = set.len();
            for &a in &items {
                for &b in &items {
                    set.insert(self.meet(a, b));
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    pub fn is_sublattice(&self, d: &ElemSet, bounded: bool) -> bool {
        if d.iter().any(|&x| x >= self.size()) {
            return false;
        }
        if bounded && !(d.contains(&self.top) && d.contains(&self.bottom)) {
            return false;
        }
        d.iter().all(|&a| {
            d.iter()
                .all(|&b| d.contains(&self.meet(a, b)) && d.contains(&self.join(a, b)))
        })
    }

    /// The sublattice on `subset` (which must be meet/join closed), re-indexed
    /// in increasing order of the original indices. Returns the lattice and the
    /// embedding `new index -> old index`.
    pub fn restrict(&self, subset: &ElemSet) -> Result<(FiniteLattice, Vec<Elem>), OrderError> {
        let embed: Vec<Elem> = subset.iter().copied().collect();
        let m = embed.len();
        if m == 0 {
            return Err(OrderError::Empty);
        }
        let index: HashMap<Elem, Elem> = embed.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut leq = vec![false; m * m];
        let mut meet = vec![0; m * m];
        let mut join = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                let (a, b) = (embed[i], embed[j]);
                leq[i * m + j] = self.leq(a, b);
                meet[i * m + j] = *index
                    .get(&self.meet(a, b))
                    .ok_or(OrderError::NotALattice(a, b, "meet"))?;
                join[i * m + j] = *index
                    .get(&self.join(a, b))
                    .ok_or(OrderError::NotALattice(a, b, "join"))?;
            }
        }
        let poset = FinitePoset::new(m, leq)?;
        Ok((FiniteLattice::from_parts(poset, meet, join)?, embed))
    }

    /// The lattice obtained by ordering `subset` with the inherited order.
    /// Unlike [`FiniteLattice::restrict`], `subset` only has to be a lattice in
    /// its own right (joins may differ from the ambient ones).
    pub fn induced(&self, subset: &ElemSet) -> Result<(FiniteLattice, Vec<Elem>), OrderError> {
        let embed: Vec<Elem> = subset.iter().copied().collect();
        let m = embed.len();
        if m == 0 {
            return Err(OrderError::Empty);
        }
        let mut leq = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                leq[i * m + j] = self.leq(embed[i], embed[j]);
            }
        }
        let poset = FinitePoset::new(m, leq)?;
        Ok((FiniteLattice::from_poset(poset)?, embed))
    }
}

/// Size guards for the upset construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UpsetCaps {
    /// Largest base poset (the scan visits `2^base` subsets).
    pub max_base: usize,
    /// Largest resulting lattice (tables are quadratic in this).
    pub max_lattice: usize,
}

impl Default for UpsetCaps {
    fn default() -> Self {
        UpsetCaps {
            max_base: 20,
            max_lattice: 2048,
        }
    }
}

/// The lattice of upsets of a poset together with the subset each element stands for.
#[derive(Debug, Clone)]
pub struct UpsetLattice {
    pub lattice: FiniteLattice,
    /// `sets[i]` is the bitmask of base elements in upset `i`.
    pub sets: Vec<u64>,
    index: HashMap<u64, Elem>,
}

impl UpsetLattice {
    pub fn index_of(&self, set: u64) -> Option<Elem> {
        self.index.get(&set).copied()
    }
}

/// All upsets of `p`, ordered by inclusion. Index 0 is the empty upset and the
/// last index is the whole carrier.
pub fn upsets(p: &FinitePoset, caps: UpsetCaps) -> Result<UpsetLattice, OrderError> {
    let n = p.size();
    if n > caps.max_base || n > 63 {
        return Err(OrderError::UpsetBaseCap {
            base: n,
            cap: caps.max_base.min(63),
        });
    }
    let mut sets: Vec<u64> = Vec::new();
    for mask in 0..(1u64 << n) {
        if p.is_upset_mask(mask) {
            sets.push(mask);
            if sets.len() > caps.max_lattice {
                return Err(OrderError::UpsetCountCap { cap: caps.max_lattice });
            }
        }
    }
    sets.sort_by_key(|&s| (s.count_ones(), s));
    let index: HashMap<u64, Elem> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let m = sets.len();
    let mut leq = vec![false; m * m];
    let mut meet = vec![0; m * m];
    let mut join = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            let (u, v) = (sets[i], sets[j]);
            leq[i * m + j] = u & !v == 0;
            meet[i * m + j] = index[&(u & v)];
            join[i * m + j] = index[&(u | v)];
        }
    }
    let poset = FinitePoset { size: m, leq };
    let lattice = FiniteLattice {
        poset,
        meet,
        join,
        top: m - 1,
        bottom: 0,
    };
    Ok(UpsetLattice { lattice, sets, index })
}

/// Every lattice on `0..size` with bottom `0` and top `size - 1`, one per
/// labelled order of the middle elements, in a fixed order.
pub fn bounded_lattices(size: usize) -> Vec<FiniteLattice> {
    match size {
        0 => return Vec::new(),
        1 => return vec![FiniteLattice::chain(1)],
        _ => {}
    }
    let mid: Vec<Elem> = (1..size - 1).collect();
    let pairs: Vec<(Elem, Elem)> = mid
        .iter()
        .flat_map(|&a| mid.iter().filter(move |&&b| b != a).map(move |&b| (a, b)))
        .collect();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut rel: Vec<(Elem, Elem)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        // Skip relations that are not already transitive and antisymmetric;
        // each order then appears exactly once.
        if !is_strict_order(&rel) {
            continue;
        }
        for a in 0..size {
            rel.push((0, a));
            rel.push((a, size - 1));
        }
        let Ok(poset) = FinitePoset::from_pairs(size, &rel) else {
            continue;
        };
        if !seen.insert(poset.leq.clone()) {
            continue;
        }
        if let Ok(l) = FiniteLattice::from_poset(poset) {
            out.push(l);
        }
    }
    out
}

fn is_strict_order(rel: &[(Elem, Elem)]) -> bool {
    let has = |a: Elem, b: Elem| rel.contains(&(a, b));
    rel.iter().all(|&(a, b)| !has(b, a))
        && rel
            .iter()
            .all(|&(a, b)| rel.iter().filter(|&&(c, _)| c == b).all(|&(_, d)| has(a, d)))
}

/// Every partial order on `0..size` in which `size - 1` is the greatest element.
pub fn posets_with_top(size: usize) -> Vec<FinitePoset> {
    if size == 0 {
        return Vec::new();
    }
    let mid: Vec<Elem> = (0..size - 1).collect();
    let pairs: Vec<(Elem, Elem)> = mid
        .iter()
        .flat_map(|&a| mid.iter().filter(move |&&b| b != a).map(move |&b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut rel: Vec<(Elem, Elem)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if !is_strict_order(&rel) {
            continue;
        }
        rel.extend((0..size).map(|a| (a, size - 1)));
        if let Ok(p) = FinitePoset::from_pairs(size, &rel) {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[Elem]) -> ElemSet {
        xs.iter().copied().collect()
    }

    /// The five-element modular non-distributive lattice: 0 < a, b, c < 1.
    fn m3() -> FiniteLattice {
        let p = FinitePoset::from_pairs(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        FiniteLattice::from_poset(p).unwrap()
    }

    /// The pentagon: 0 < a < c < 1, 0 < b < 1.
    fn n5() -> FiniteLattice {
        let p = FinitePoset::from_pairs(5, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)]).unwrap();
        FiniteLattice::from_poset(p).unwrap()
    }

    #[test]
    fn distributivity_of_small_lattices() {
        assert!(FiniteLattice::chain(3).is_distributive());
        assert!(!m3().is_distributive());
        assert!(!n5().is_distributive());
    }

    #[test]
    fn upsets_of_antichain_and_chains() {
        let caps = UpsetCaps::default();
        let u = upsets(&FinitePoset::antichain(2), caps).unwrap();
        assert_eq!(u.lattice.size(), 4);
        assert!(u.lattice.is_distributive());
        // two atoms
        assert_eq!(u.lattice.poset().covers().len(), 4);

        let u = upsets(&FinitePoset::chain(2), caps).unwrap();
        assert_eq!(u.sets, vec![0b00, 0b10, 0b11]);

        let u = upsets(&FinitePoset::chain(3), caps).unwrap();
        assert_eq!(u.lattice.size(), 4);
        // a 4-chain: every pair comparable
        let l = &u.lattice;
        assert!((0..4).all(|a| (0..4).all(|b| l.leq(a, b) || l.leq(b, a))));
    }

    #[test]
    fn upsets_cap() {
        let caps = UpsetCaps { max_base: 3, max_lattice: 100 };
        assert!(matches!(
            upsets(&FinitePoset::antichain(4), caps),
            Err(OrderError::UpsetBaseCap { .. })
        ));
        let caps = UpsetCaps { max_base: 10, max_lattice: 8 };
        assert!(matches!(
            upsets(&FinitePoset::antichain(4), caps),
            Err(OrderError::UpsetCountCap { .. })
        ));
    }

    #[test]
    fn generated_sublattices() {
        let m = m3();
        assert_eq!(m.generated_sublattice(&set(&[]), true), set(&[0, 4]));
        assert_eq!(m.generated_sublattice(&set(&[0, 1, 2, 3, 4]), false), set(&[0, 1, 2, 3, 4]));
        assert_eq!(m.generated_sublattice(&set(&[1, 2]), true), set(&[0, 1, 2, 4]));
    }

    #[test]
    fn sublattice_checks() {
        let c3 = FiniteLattice::chain(3);
        assert!(c3.is_sublattice(&set(&[0, 2]), true));
        assert!(!c3.is_sublattice(&set(&[1]), true));
        assert!(m3().is_sublattice(&set(&[0, 1, 4]), true));
        assert!(!m3().is_sublattice(&set(&[1, 2]), false));
    }

    #[test]
    fn inconsistent_tables_rejected() {
        let c2 = FiniteLattice::chain(2);
        let bad_join = vec![0, 0, 0, 1];
        let err = FiniteLattice::from_parts(c2.poset().clone(), c2.meet_table().to_vec(), bad_join).unwrap_err();
        assert!(matches!(err, OrderError::InconsistentTable { op: "join", .. }));
    }

    #[test]
    fn poset_validation() {
        assert!(matches!(
            FinitePoset::new(2, vec![true, true, true, true]),
            Err(OrderError::NotAntisymmetric(0, 1))
        ));
        assert!(matches!(
            FinitePoset::new(2, vec![false, false, false, true]),
            Err(OrderError::NotReflexive(0))
        ));
        // 0 <= 1 <= 2 without 0 <= 2
        let mut leq = vec![false; 9];
        for (a, b) in [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)] {
            leq[a * 3 + b] = true;
        }
        assert!(matches!(FinitePoset::new(3, leq), Err(OrderError::NotTransitive(0, 1, 2))));
    }

    #[test]
    fn bounded_lattice_counts() {
        // labelled lattices with 0 and top fixed
        assert_eq!(bounded_lattices(1).len(), 1);
        assert_eq!(bounded_lattices(2).len(), 1);
        assert_eq!(bounded_lattices(3).len(), 1);
        assert_eq!(bounded_lattices(4).len(), 3);
        // chain: 6 labellings, M3: 1, N5: 6, 1 ⊕ B2: 3, B2 ⊕ 1: 3
        assert_eq!(bounded_lattices(5).len(), 19);
    }

    #[test]
    fn posets_with_top_counts() {
        assert_eq!(posets_with_top(1).len(), 1);
        assert_eq!(posets_with_top(2).len(), 1);
        assert_eq!(posets_with_top(3).len(), 3);
        // labelled posets on 3 points
        assert_eq!(posets_with_top(4).len(), 19);
    }

    #[test]
    fn meet_table_semilattice() {
        let c3 = FiniteLattice::chain(3);
        let l = FiniteLattice::from_meet_table(3, c3.meet_table()).unwrap();
        assert_eq!(l.join_table(), c3.join_table());
    }
}
