//! Implications from pairs `(L, D)`: `a → b = max{d ∈ D : d ∧ a ≤ b}`.

use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteAlgebra};
use crate::order::FiniteLattice;
use crate::{Elem, ElemSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("{{d ∈ D : d ∧ {a} ≤ {b}}} has no greatest element")]
    NoMaximum { a: Elem, b: Elem },
    #[error("D contains {0}, outside the lattice")]
    OutOfRange(Elem),
    #[error("D does not contain the top element")]
    MissingTop,
    #[error("D is not closed under {0}")]
    NotClosed(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A lattice together with a designated subset `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPair {
    pub lattice: FiniteLattice,
    pub designated: ElemSet,
}

impl AlgebraPair {
    /// Checks that `D ⊆ L` and `1 ∈ D`. Closure requirements differ between
    /// the constructions and are checked there.
    pub fn new(lattice: FiniteLattice, designated: ElemSet) -> Result<Self, PairError> {
        if let Some(&x) = designated.iter().find(|&&x| x >= lattice.size()) {
            return Err(PairError::OutOfRange(x));
        }
        if !designated.contains(&lattice.top()) {
            return Err(PairError::MissingTop);
        }
        Ok(AlgebraPair { lattice, designated })
    }

    /// `max{d ∈ D : d ∧ a ≤ b}`, if the maximum exists.
    pub fn max_e(&self, a: Elem, b: Elem) -> Option<Elem> {
        let l = &self.lattice;
        let e: Vec<Elem> = self
            .designated
            .iter()
            .copied()
            .filter(|&d| l.leq(l.meet(d, a), b))
            .collect();
        e.iter().copied().find(|&u| e.iter().all(|&d| l.leq(d, u)))
    }

    fn table(&self) -> Result<Vec<Elem>, PairError> {
        let n = self.lattice.size();
        let mut imp = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                imp.push(self.max_e(a, b).ok_or(PairError::NoMaximum { a, b })?);
            }
        }
        Ok(imp)
    }
}

/// The algebra `(L, ∧, ∨, →, 0, 1)` with `→` from the pair. `D` must be a
/// bounded sublattice.
pub fn build_implication(p: &AlgebraPair) -> Result<FiniteAlgebra, PairError> {
    let l = &p.lattice;
    if !p.designated.contains(&l.bottom()) {
        return Err(PairError::NotClosed("bottom"));
    }
    if !l.is_sublattice(&p.designated, true) {
        return Err(PairError::NotClosed("meet/join"));
    }
    Ok(FiniteAlgebra::from_lattice(l, p.table()?)?)
}

/// The `{∧, →, 1}`-algebra of an SRS-pair: `D` only needs to be closed under
/// meets and contain the top. The join of `L` is not used.
pub fn build_srs_pair(p: &AlgebraPair) -> Result<FiniteAlgebra, PairError> {
    let l = &p.lattice;
    let closed = p
        .designated
        .iter()
        .all(|&a| p.designated.iter().all(|&b| p.designated.contains(&l.meet(a, b))));
    if !closed {
        return Err(PairError::NotClosed("meet"));
    }
    let a = FiniteAlgebra::implicative(l.size(), p.table()?, l.top())?;
    Ok(a.with_meet(l.meet_table().to_vec())?)
}

/// `a → b = 1` if `a ≤ b`, else `0`.
pub fn two_srl(l: &FiniteLattice) -> FiniteAlgebra {
    let n = l.size();
    let imp = (0..n * n)
        .map(|i| if l.leq(i / n, i % n) { l.top() } else { l.bottom() })
        .collect();
    FiniteAlgebra::from_lattice(l, imp).expect("table has the lattice's shape")
}

/// The underlying lattice and `D = □A`.
pub fn extract_pair(a: &FiniteAlgebra) -> Result<AlgebraPair, PairError> {
    let lattice = a.lattice()?;
    AlgebraPair::new(lattice, a.box_set())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{check_srl, check_srlbs, check_srs};
    use crate::order::FinitePoset;

    fn set(xs: &[Elem]) -> ElemSet {
        xs.iter().copied().collect()
    }

    fn m3() -> FiniteLattice {
        let p = FinitePoset::from_pairs(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        FiniteLattice::from_poset(p).unwrap()
    }

    #[test]
    fn chain3_pair_table() {
        let p = AlgebraPair::new(FiniteLattice::chain(3), set(&[0, 2])).unwrap();
        let a = build_implication(&p).unwrap();
        assert_eq!(a.imp_table(), &[2, 2, 2, 0, 2, 2, 0, 0, 2]);
        assert!(check_srl(&a).unwrap().member);
        assert_eq!(extract_pair(&a).unwrap(), p);
    }

    #[test]
    fn heyting_case_is_relative_pseudocomplement() {
        let l = FiniteLattice::chain(3);
        let p = AlgebraPair::new(l.clone(), set(&[0, 1, 2])).unwrap();
        let a = build_implication(&p).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                let expected = if x <= y { 2 } else { y };
                assert_eq!(a.imp(x, y), expected);
            }
        }
        let s = build_srs_pair(&p).unwrap();
        assert_eq!(s.imp_table(), a.imp_table());
        assert!(check_srs(&s).unwrap().member);
    }

    #[test]
    fn top_only_has_no_maximum() {
        let p = AlgebraPair::new(FiniteLattice::chain(2), set(&[1])).unwrap();
        assert_eq!(build_srs_pair(&p), Err(PairError::NoMaximum { a: 1, b: 0 }));
    }

    #[test]
    fn m3_pair_is_srlbs() {
        let p = AlgebraPair::new(m3(), set(&[0, 2, 4])).unwrap();
        let a = build_implication(&p).unwrap();
        assert!(check_srlbs(&a).unwrap().member);
        assert!(!check_srl(&a).unwrap().member);
    }

    #[test]
    fn no_maximum_in_m3() {
        // D = {0, a, b, 1}: the set {d ∈ D : d ∧ c ≤ 0} = {0, a, b} has two
        // maximal elements.
        let p = AlgebraPair::new(m3(), set(&[0, 1, 2, 4])).unwrap();
        assert_eq!(build_implication(&p), Err(PairError::NoMaximum { a: 3, b: 0 }));
    }

    #[test]
    fn two_srl_agrees_with_pair() {
        let l = m3();
        let p = AlgebraPair::new(l.clone(), set(&[0, 4])).unwrap();
        assert_eq!(build_implication(&p).unwrap(), two_srl(&l));
    }
}
