//! Finite algebras in the signature `{→, ∧, ∨, ¬, 0, 1}` with `→` and `1`
//! always present, plus the box operator, homomorphisms and isomorphism.

use std::fmt;

use thiserror::Error;

use crate::order::{FiniteLattice, FinitePoset, OrderError};
use crate::{Elem, ElemSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("empty carrier")]
    Empty,
    #[error("{op} table has {found} entries, expected {expected}")]
    TableShape {
        op: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{op} table contains {value}, outside the carrier of size {size}")]
    OutOfRange {
        op: &'static str,
        value: Elem,
        size: usize,
    },
    #[error("the lattice {which} {lattice} disagrees with the algebra constant {constant}")]
    ConstantMismatch {
        which: &'static str,
        lattice: Elem,
        constant: Elem,
    },
    #[error("operation {0} is not in the signature")]
    MissingOperation(&'static str),
    #[error("names list has {found} entries, expected {expected}")]
    Names { expected: usize, found: usize },
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// The relation `a → b = 1` is not a partial order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("natural order is not {reason} at {witness:?}")]
pub struct NotAnOrder {
    pub reason: &'static str,
    pub witness: Vec<Elem>,
}

/// Which optional operations an algebra carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    pub meet: bool,
    pub join: bool,
    pub neg: bool,
    pub bottom: bool,
}

impl Signature {
    pub const IMPLICATIVE: Signature = Signature {
        meet: false,
        join: false,
        neg: false,
        bottom: false,
    };

    /// Operation symbols, for messages: `→` and `1` are always included.
    pub fn symbols(&self) -> Vec<&'static str> {
        let mut out = vec!["->"];
        if self.meet {
            out.push("/\\");
        }
        if self.join {
            out.push("\\/");
        }
        if self.neg {
            out.push("~");
        }
        if self.bottom {
            out.push("0");
        }
        out.push("1");
        out
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.symbols().join(", "))
    }
}

/// A finite algebra with carrier `0..size`, stored as raw operation tables.
///
/// `∧` and `∨` are kept as given rather than as a validated lattice, because
/// several classes (the quasi-equational bases of the calculi) must be able
/// to test lattice laws on arbitrary tables. [`FiniteAlgebra::lattice`]
/// validates on demand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    size: usize,
    imp: Vec<Elem>,
    meet: Option<Vec<Elem>>,
    join: Option<Vec<Elem>>,
    neg: Option<Vec<Elem>>,
    top: Elem,
    bottom: Option<Elem>,
    names: Option<Vec<String>>,
}

fn check_table(op: &'static str, table: &[Elem], size: usize, arity: u32) -> Result<(), AlgebraError> {
    let expected = size.pow(arity);
    if table.len() != expected {
        return Err(AlgebraError::TableShape {
            op,
            expected,
            found: table.len(),
        });
    }
    if let Some(&value) = table.iter().find(|&&v| v >= size) {
        return Err(AlgebraError::OutOfRange { op, value, size });
    }
    Ok(())
}

impl FiniteAlgebra {
    /// An `{→, 1}`-algebra.
    pub fn implicative(size: usize, imp: Vec<Elem>, top: Elem) -> Result<Self, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::Empty);
        }
        check_table("->", &imp, size, 2)?;
        if top >= size {
            return Err(AlgebraError::OutOfRange {
                op: "top",
                value: top,
                size,
            });
        }
        Ok(FiniteAlgebra {
            size,
            imp,
            meet: None,
            join: None,
            neg: None,
            top,
            bottom: None,
            names: None,
        })
    }

    /// Lattice with an implication: signature `{→, ∧, ∨, 0, 1}`.
    pub fn from_lattice(lattice: &FiniteLattice, imp: Vec<Elem>) -> Result<Self, AlgebraError> {
        let a = Self::implicative(lattice.size(), imp, lattice.top())?;
        Ok(FiniteAlgebra {
            meet: Some(lattice.meet_table().to_vec()),
            join: Some(lattice.join_table().to_vec()),
            bottom: Some(lattice.bottom()),
            ..a
        })
    }

    pub fn with_meet(mut self, meet: Vec<Elem>) -> Result<Self, AlgebraError> {
        check_table("/\\", &meet, self.size, 2)?;
        self.meet = Some(meet);
        Ok(self)
    }

    pub fn with_join(mut self, join: Vec<Elem>) -> Result<Self, AlgebraError> {
        check_table("\\/", &join, self.size, 2)?;
        self.join = Some(join);
        Ok(self)
    }

    pub fn with_neg(mut self, neg: Vec<Elem>) -> Result<Self, AlgebraError> {
        check_table("~", &neg, self.size, 1)?;
        self.neg = Some(neg);
        Ok(self)
    }

    pub fn with_bottom(mut self, bottom: Elem) -> Result<Self, AlgebraError> {
        if bottom >= self.size {
            return Err(AlgebraError::OutOfRange {
                op: "bottom",
                value: bottom,
                size: self.size,
            });
        }
        self.bottom = Some(bottom);
        Ok(self)
    }

    /// Adds `¬x := x → 0`.
    pub fn with_derived_neg(self) -> Result<Self, AlgebraError> {
        let bottom = self.bottom.ok_or(AlgebraError::MissingOperation("0"))?;
        let neg = (0..self.size).map(|x| self.imp(x, bottom)).collect();
        self.with_neg(neg)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, AlgebraError> {
        if names.len() != self.size {
            return Err(AlgebraError::Names {
                expected: self.size,
                found: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn without_neg(mut self) -> Self {
        self.neg = None;
        self
    }

    /// The `{→, 1}`-reduct.
    pub fn imp_reduct(&self) -> Self {
        FiniteAlgebra {
            meet: None,
            join: None,
            neg: None,
            bottom: None,
            ..self.clone()
        }
    }

    /// The `{→, ∧, 1}`-reduct.
    pub fn meet_reduct(&self) -> Self {
        FiniteAlgebra {
            join: None,
            neg: None,
            bottom: None,
            ..self.clone()
        }
    }

    /// The `{→, ∧, ∨, 1}`-reduct.
    pub fn lattice_reduct(&self) -> Self {
        FiniteAlgebra {
            neg: None,
            bottom: None,
            ..self.clone()
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn bottom(&self) -> Option<Elem> {
        self.bottom
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of an element (its index when unnamed).
    pub fn name(&self, a: Elem) -> String {
        match &self.names {
            Some(n) => n[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        match &self.names {
            Some(n) => n.iter().position(|s| s == name),
            None => name.parse().ok().filter(|&i| i < self.size),
        }
    }

    pub fn signature(&self) -> Signature {
        Signature {
            meet: self.meet.is_some(),
            join: self.join.is_some(),
            neg: self.neg.is_some(),
            bottom: self.bottom.is_some(),
        }
    }

    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a * self.size + b]
    }

    pub fn imp_table(&self) -> &[Elem] {
        &self.imp
    }

    pub fn meet_table(&self) -> Option<&[Elem]> {
        self.meet.as_deref()
    }

    pub fn join_table(&self) -> Option<&[Elem]> {
        self.join.as_deref()
    }

    pub fn neg_table(&self) -> Option<&[Elem]> {
        self.neg.as_deref()
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.meet.as_ref().map(|t| t[a * self.size + b])
    }

    pub fn join(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.join.as_ref().map(|t| t[a * self.size + b])
    }

    pub fn neg(&self, a: Elem) -> Option<Elem> {
        self.neg.as_ref().map(|t| t[a])
    }

    /// `□a = 1 → a`.
    #[inline]
    pub fn box_of(&self, a: Elem) -> Elem {
        self.imp(self.top, a)
    }

    /// Replaces the implication table, keeping everything else.
    pub fn with_imp(&self, imp: Vec<Elem>) -> Result<Self, AlgebraError> {
        check_table("->", &imp, self.size, 2)?;
        Ok(FiniteAlgebra { imp, ..self.clone() })
    }

    /// The underlying lattice, validated against the order read off `∧`.
    /// Requires both `∧` and `∨`.
    pub fn lattice(&self) -> Result<FiniteLattice, AlgebraError> {
        let meet = self.meet.as_ref().ok_or(AlgebraError::MissingOperation("/\\"))?;
        let join = self.join.as_ref().ok_or(AlgebraError::MissingOperation("\\/"))?;
        let l = FiniteLattice::from_meet_table(self.size, meet)?;
        let l = FiniteLattice::from_parts(l.poset().clone(), meet.clone(), join.clone())?;
        self.check_constants(&l)?;
        Ok(l)
    }

    /// The semilattice order read off `∧`, completed to a lattice.
    pub fn meet_lattice(&self) -> Result<FiniteLattice, AlgebraError> {
        let meet = self.meet.as_ref().ok_or(AlgebraError::MissingOperation("/\\"))?;
        let l = FiniteLattice::from_meet_table(self.size, meet)?;
        self.check_constants(&l)?;
        Ok(l)
    }

    fn check_constants(&self, l: &FiniteLattice) -> Result<(), AlgebraError> {
        if l.top() != self.top {
            return Err(AlgebraError::ConstantMismatch {
                which: "top",
                lattice: l.top(),
                constant: self.top,
            });
        }
        if let Some(b) = self.bottom {
            if l.bottom() != b {
                return Err(AlgebraError::ConstantMismatch {
                    which: "bottom",
                    lattice: l.bottom(),
                    constant: b,
                });
            }
        }
        Ok(())
    }

    /// `a ≤ b` iff `a → b = 1`, provided that relation is a partial order.
    pub fn natural_order(&self) -> Result<FinitePoset, NotAnOrder> {
        let n = self.size;
        let le = |a: Elem, b: Elem| self.imp(a, b) == self.top;
        for a in 0..n {
            if !le(a, a) {
                return Err(NotAnOrder {
                    reason: "reflexive",
                    witness: vec![a],
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && le(a, b) && le(b, a) {
                    return Err(NotAnOrder {
                        reason: "antisymmetric",
                        witness: vec![a, b],
                    });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return Err(NotAnOrder {
                            reason: "transitive",
                            witness: vec![a, b, c],
                        });
                    }
                }
            }
        }
        let leq = (0..n * n).map(|i| le(i / n, i % n)).collect();
        Ok(FinitePoset::new(n, leq).expect("checked above"))
    }

    /// `□A = {1 → a : a ∈ A}`.
    pub fn box_set(&self) -> ElemSet {
        (0..self.size).map(|a| self.box_of(a)).collect()
    }

    /// `{x : □x = x}`; coincides with [`FiniteAlgebra::box_set`] on
    /// sub-Hilbert algebras.
    pub fn box_fixpoints(&self) -> ElemSet {
        (0..self.size).filter(|&a| self.box_of(a) == a).collect()
    }

    /// Whether `f` (indexed by elements of `self`) commutes with every
    /// operation and constant both algebras carry. Signatures must agree.
    pub fn is_homomorphism(&self, f: &[Elem], other: &FiniteAlgebra) -> bool {
        if f.len() != self.size || f.iter().any(|&x| x >= other.size) {
            return false;
        }
        if self.signature() != other.signature() {
            return false;
        }
        if f[self.top] != other.top {
            return false;
        }
        if let (Some(a), Some(b)) = (self.bottom, other.bottom) {
            if f[a] != b {
                return false;
            }
        }
        let n = self.size;
        for a in 0..n {
            if let Some(na) = self.neg(a) {
                if f[na] != other.neg(f[a]).expect("same signature") {
                    return false;
                }
            }
            for b in 0..n {
                if f[self.imp(a, b)] != other.imp(f[a], f[b]) {
                    return false;
                }
                if let Some(m) = self.meet(a, b) {
                    if f[m] != other.meet(f[a], f[b]).expect("same signature") {
                        return false;
                    }
                }
                if let Some(j) = self.join(a, b) {
                    if f[j] != other.join(f[a], f[b]).expect("same signature") {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The algebra transported along the bijection `perm` (old index → new index).
    pub fn permute(&self, perm: &[Elem]) -> FiniteAlgebra {
        let n = self.size;
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let bin = |t: &[Elem]| -> Vec<Elem> {
            (0..n * n)
                .map(|i| perm[t[inv[i / n] * n + inv[i % n]]])
                .collect()
        };
        FiniteAlgebra {
            size: n,
            imp: bin(&self.imp),
            meet: self.meet.as_deref().map(bin),
            join: self.join.as_deref().map(bin),
            neg: self.neg.as_ref().map(|t| (0..n).map(|i| perm[t[inv[i]]]).collect()),
            top: perm[self.top],
            bottom: self.bottom.map(|b| perm[b]),
            names: self
                .names
                .as_ref()
                .map(|ns| (0..n).map(|i| ns[inv[i]].clone()).collect()),
        }
    }

    /// Tables concatenated in a fixed order, used for canonical forms.
    fn flat(&self) -> Vec<Elem> {
        let mut v = self.imp.clone();
        for t in [&self.meet, &self.join, &self.neg].into_iter().flatten() {
            v.extend_from_slice(t);
        }
        v
    }

    /// The lexicographically least flattened table over all relabellings
    /// fixing `top` and `bottom`. Two algebras with the same signature and
    /// constants are isomorphic iff their canonical forms agree.
    pub fn canonical_form(&self) -> Vec<Elem> {
        let n = self.size;
        // constants go to fixed slots: top to n - 1, bottom to 0
        let mut fixed: Vec<(Elem, Elem)> = vec![(self.top, n - 1)];
        if let Some(b) = self.bottom.filter(|&b| b != self.top) {
            fixed.push((b, 0));
        }
        let free: Vec<Elem> = (0..n).filter(|x| fixed.iter().all(|&(c, _)| c != *x)).collect();
        let mut slots: Vec<Elem> = (0..n).filter(|x| fixed.iter().all(|&(_, t)| t != *x)).collect();
        let mut best: Option<Vec<Elem>> = None;
        permutations(&mut slots, 0, &mut |targets| {
            let mut perm: Vec<Elem> = vec![0; n];
            for &(c, t) in &fixed {
                perm[c] = t;
            }
            for (&src, &dst) in free.iter().zip(targets) {
                perm[src] = dst;
            }
            let f = self.permute(&perm).flat();
            if best.as_ref().is_none_or(|b| f < *b) {
                best = Some(f);
            }
        });
        let sig = self.signature();
        let mut out = vec![n, sig.meet as usize, sig.join as usize, sig.neg as usize, sig.bottom as usize];
        out.extend(best.unwrap_or_default());
        out
    }

    /// An isomorphism `self → other` as an index map, found by backtracking.
    pub fn find_isomorphism(&self, other: &FiniteAlgebra) -> Option<Vec<Elem>> {
        if self.size != other.size || self.signature() != other.signature() {
            return None;
        }
        let n = self.size;
        let mut f = vec![usize::MAX; n];
        let mut used = vec![false; n];
        f[self.top] = other.top;
        used[other.top] = true;
        if let (Some(a), Some(b)) = (self.bottom, other.bottom) {
            if f[a] != usize::MAX && f[a] != b {
                return None;
            }
            if f[a] == usize::MAX {
                if used[b] {
                    return None;
                }
                f[a] = b;
                used[b] = true;
            }
        }
        let order: Vec<Elem> = (0..n).filter(|&a| f[a] == usize::MAX).collect();
        if self.iso_consistent(other, &f) && self.iso_extend(other, &order, 0, &mut f, &mut used) {
            Some(f)
        } else {
            None
        }
    }

    fn iso_extend(
        &self,
        other: &FiniteAlgebra,
        order: &[Elem],
        k: usize,
        f: &mut Vec<Elem>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return self.is_homomorphism(f, other);
        }
        let a = order[k];
        for b in 0..self.size {
            if used[b] {
                continue;
            }
            f[a] = b;
            used[b] = true;
            if self.iso_consistent(other, f) && self.iso_extend(other, order, k + 1, f, used) {
                return true;
            }
            used[b] = false;
            f[a] = usize::MAX;
        }
        false
    }

    /// Partial-map consistency: wherever all arguments and the result are
    /// mapped, the operation commutes; where the result is unmapped, its image
    /// must not already be taken.
    fn iso_consistent(&self, other: &FiniteAlgebra, f: &[Elem]) -> bool {
        let n = self.size;
        let unset = usize::MAX;
        let taken = |x: Elem| f.contains(&x);
        let ok = |r: Elem, r2: Elem| if f[r] == unset { !taken(r2) } else { f[r] == r2 };
        for a in (0..n).filter(|&a| f[a] != unset) {
            if let (Some(x), Some(y)) = (self.neg(a), other.neg(f[a])) {
                if !ok(x, y) {
                    return false;
                }
            }
            for b in (0..n).filter(|&b| f[b] != unset) {
                if !ok(self.imp(a, b), other.imp(f[a], f[b])) {
                    return false;
                }
                if let (Some(x), Some(y)) = (self.meet(a, b), other.meet(f[a], f[b])) {
                    if !ok(x, y) {
                        return false;
                    }
                }
                if let (Some(x), Some(y)) = (self.join(a, b), other.join(f[a], f[b])) {
                    if !ok(x, y) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Calls `visit` with every permutation of `items[k..]` (prefix fixed).
pub(crate) fn permutations(items: &mut Vec<Elem>, k: usize, visit: &mut dyn FnMut(&[Elem])) {
    if k >= items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 3-chain 0 < m < 1 with D = {0, 1}.
    fn chain3_pair() -> FiniteAlgebra {
        let l = FiniteLattice::chain(3);
        FiniteAlgebra::from_lattice(&l, vec![2, 2, 2, 0, 2, 2, 0, 0, 2]).unwrap()
    }

    fn collapse() -> FiniteAlgebra {
        FiniteAlgebra::implicative(2, vec![0, 0, 0, 0], 0).unwrap()
    }

    fn boole2_imp() -> FiniteAlgebra {
        FiniteAlgebra::implicative(2, vec![1, 1, 0, 1], 1).unwrap()
    }

    #[test]
    fn natural_order_of_pair_is_lattice_order() {
        let a = chain3_pair();
        let p = a.natural_order().unwrap();
        assert_eq!(&p, FiniteLattice::chain(3).poset());
    }

    #[test]
    fn collapse_has_no_natural_order() {
        let err = collapse().natural_order().unwrap_err();
        assert_eq!(err.reason, "antisymmetric");
        assert_eq!(err.witness, vec![0, 1]);
    }

    #[test]
    fn one_point_order() {
        let a = FiniteAlgebra::implicative(1, vec![0], 0).unwrap();
        assert_eq!(a.natural_order().unwrap().size(), 1);
    }

    #[test]
    fn box_sets() {
        assert_eq!(chain3_pair().box_set(), [0, 2].into_iter().collect());
        assert_eq!(boole2_imp().box_set(), [0, 1].into_iter().collect());
    }

    #[test]
    fn collapse_map_is_homomorphism() {
        let f = [0, 1, 0];
        assert!(chain3_pair().imp_reduct().is_homomorphism(&f, &collapse()));
        let a = boole2_imp();
        assert!(a.is_homomorphism(&[0, 1], &a));
        assert!(!a.is_homomorphism(&[1, 0], &a));
    }

    #[test]
    fn isomorphism_search() {
        let a = chain3_pair();
        assert_eq!(a.find_isomorphism(&a), Some(vec![0, 1, 2]));
        assert_eq!(a.find_isomorphism(&boole2_imp()), None);
        let b = boole2_imp().permute(&[1, 0]);
        assert_eq!(boole2_imp().find_isomorphism(&b), Some(vec![1, 0]));
        assert_eq!(boole2_imp().canonical_form(), b.canonical_form());
    }

    #[test]
    fn derived_negation() {
        let a = chain3_pair().with_derived_neg().unwrap();
        assert_eq!(a.neg_table().unwrap(), &[2, 0, 0]);
    }

    #[test]
    fn table_validation() {
        assert!(matches!(
            FiniteAlgebra::implicative(2, vec![0, 0, 0], 0),
            Err(AlgebraError::TableShape { .. })
        ));
        assert!(matches!(
            FiniteAlgebra::implicative(2, vec![0, 0, 0, 2], 0),
            Err(AlgebraError::OutOfRange { .. })
        ));
    }
}
