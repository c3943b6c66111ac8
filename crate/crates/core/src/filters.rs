//! Implicative and lattice filters, brackets, and the embedding of an
//! algebra into the upsets of its filter poset.
//!
//! Filters are bitmasks over the carrier (bit `a` set iff `a ∈ F`), which is
//! why the carrier is capped well below 64.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::FiniteAlgebra;
use crate::classes::{check_sha, check_srl, check_srs, MissingOperation};
use crate::order::{upsets, FinitePoset, OrderError, UpsetLattice};
use crate::pair::{build_implication, AlgebraPair, PairError};
use crate::{Elem, ElemSet, Limits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FilterError {
    #[error("carrier of size {size} exceeds the filter cap of {cap}")]
    CarrierCap { size: usize, cap: usize },
    #[error("lattice filters need a meet operation")]
    NoMeet,
    #[error("the algebra is not in {class}: {axioms}")]
    NotInClass { class: &'static str, axioms: String },
    #[error("{a} → {b} belongs to the filter, so no separating filter exists")]
    NotSeparable { a: Elem, b: Elem },
    #[error("the given set is not an implicative filter")]
    NotAFilter,
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Missing(#[from] MissingOperation),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FilterKind {
    /// Contains `1`, closed under modus ponens.
    Implicative,
    /// Nonempty, up-closed and `∧`-closed.
    Lattice,
}

impl std::str::FromStr for FilterKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "implicative" => Ok(FilterKind::Implicative),
            "lattice" => Ok(FilterKind::Lattice),
            other => Err(format!("unknown filter kind `{other}` (expected implicative or lattice)")),
        }
    }
}

pub fn to_set(mask: u64) -> ElemSet {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn to_mask(set: &ElemSet) -> u64 {
    set.iter().fold(0, |m, &a| m | 1 << a)
}

/// Every filter of one kind, in increasing `(size, mask)` order.
#[derive(Debug, Clone)]
pub struct FilterFamily {
    pub base: FiniteAlgebra,
    pub kind: FilterKind,
    pub filters: Vec<u64>,
}

impl FilterFamily {
    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    pub fn sets(&self) -> Vec<ElemSet> {
        self.filters.iter().map(|&m| to_set(m)).collect()
    }

    pub fn position(&self, set: &ElemSet) -> Option<usize> {
        let m = to_mask(set);
        self.filters.iter().position(|&f| f == m)
    }

    /// The filters ordered by inclusion.
    pub fn poset(&self) -> FinitePoset {
        let k = self.filters.len();
        let leq = (0..k * k)
            .map(|i| self.filters[i / k] & !self.filters[i % k] == 0)
            .collect();
        FinitePoset::new(k, leq).expect("inclusion is a partial order")
    }
}

/// `[x_n, …, x_1, a] = x_n → (… → (x_1 → a))`, with `xs = [x_n, …, x_1]`.
pub fn bracket(a: &FiniteAlgebra, xs: &[Elem], last: Elem) -> Elem {
    xs.iter().rev().fold(last, |acc, &x| a.imp(x, acc))
}

pub fn is_implicative_filter(a: &FiniteAlgebra, f: u64) -> bool {
    let n = a.size();
    let has = |x: Elem| f >> x & 1 == 1;
    has(a.top()) && (0..n).all(|x| !has(x) || (0..n).all(|y| !has(a.imp(x, y)) || has(y)))
}

/// Filter of the meet semilattice, with `x ≤ y` iff `x ∧ y = x`.
pub fn is_lattice_filter(a: &FiniteAlgebra, f: u64) -> Result<bool, FilterError> {
    let meet = a.meet_table().ok_or(FilterError::NoMeet)?;
    let n = a.size();
    let has = |x: Elem| f >> x & 1 == 1;
    if f == 0 {
        return Ok(false);
    }
    for x in (0..n).filter(|&x| has(x)) {
        for y in 0..n {
            let m = meet[x * n + y];
            if m == x && !has(y) {
                return Ok(false);
            }
            if has(y) && !has(m) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn scan_filters(a: &FiniteAlgebra, cap: usize, keep: &mut dyn FnMut(u64) -> bool) -> Result<Vec<u64>, FilterError> {
    let n = a.size();
    if n > cap || n > 63 {
        return Err(FilterError::CarrierCap { size: n, cap });
    }
    let top = 1u64 << a.top();
    let mut out: Vec<u64> = (0..1u64 << n).filter(|m| m & top != 0).filter(|&m| keep(m)).collect();
    out.sort_by_key(|&m| (m.count_ones(), m));
    Ok(out)
}

/// All implicative filters, by subset scan.
pub fn all_implicative_filters(a: &FiniteAlgebra, cap: usize) -> Result<FilterFamily, FilterError> {
    let filters = scan_filters(a, cap, &mut |m| is_implicative_filter(a, m))?;
    Ok(FilterFamily {
        base: a.clone(),
        kind: FilterKind::Implicative,
        filters,
    })
}

/// All lattice filters of the `∧`-semilattice.
pub fn all_lattice_filters(a: &FiniteAlgebra, cap: usize) -> Result<FilterFamily, FilterError> {
    if a.meet_table().is_none() {
        return Err(FilterError::NoMeet);
    }
    let filters = scan_filters(a, cap, &mut |m| is_lattice_filter(a, m).unwrap_or(false))?;
    Ok(FilterFamily {
        base: a.clone(),
        kind: FilterKind::Lattice,
        filters,
    })
}

pub fn all_filters(a: &FiniteAlgebra, kind: FilterKind, cap: usize) -> Result<FilterFamily, FilterError> {
    match kind {
        FilterKind::Implicative => all_implicative_filters(a, cap),
        FilterKind::Lattice => all_lattice_filters(a, cap),
    }
}

/// `⟨X⟩`: close `X ∪ {1}` under modus ponens.
pub fn generated_implicative_filter(a: &FiniteAlgebra, xs: &ElemSet) -> ElemSet {
    let n = a.size();
    let mut f = xs.clone();
    f.insert(a.top());
    loop {
        let new: Vec<Elem> = (0..n)
            .filter(|y| !f.contains(y))
            .filter(|&y| f.iter().any(|&x| f.contains(&a.imp(x, y))))
            .collect();
        if new.is_empty() {
            return f;
        }
        f.extend(new);
    }
}

/// `{b : [x_1, …, x_n, a, b] = 1 for some n ≥ 1 and x_i ∈ X}`.
///
/// The reachable values of `[x_1, …, x_n, a, b]` are computed as a closure
/// of `{x → (a → b) : x ∈ X}` under `v ↦ x → v`, so every length is covered.
pub fn bracket_generated_filter(a: &FiniteAlgebra, xs: &ElemSet, extra: Elem) -> ElemSet {
    let n = a.size();
    (0..n)
        .filter(|&b| {
            let start = a.imp(extra, b);
            let mut seen: ElemSet = xs.iter().map(|&x| a.imp(x, start)).collect();
            let mut frontier: Vec<Elem> = seen.iter().copied().collect();
            while let Some(v) = frontier.pop() {
                for &x in xs {
                    let w = a.imp(x, v);
                    if seen.insert(w) {
                        frontier.push(w);
                    }
                }
            }
            seen.contains(&a.top())
        })
        .collect()
}

/// A filter containing `x`, missing `y` and extending `F ∩ □A`, given
/// `x → y ∉ F`.
pub fn separate(a: &FiniteAlgebra, f: &ElemSet, x: Elem, y: Elem) -> Result<ElemSet, FilterError> {
    if !is_implicative_filter(a, to_mask(f)) {
        return Err(FilterError::NotAFilter);
    }
    if f.contains(&a.imp(x, y)) {
        return Err(FilterError::NotSeparable { a: x, b: y });
    }
    let boxed = a.box_set();
    let mut gen: ElemSet = f.intersection(&boxed).copied().collect();
    gen.insert(x);
    let g = generated_implicative_filter(a, &gen);
    debug_assert!(g.contains(&x) && !g.contains(&y));
    Ok(g)
}

/// `(Φ⁺, D, ⇒)` for the filter family `Φ` of an algebra, with the embedding.
#[derive(Debug, Clone)]
pub struct UpsetAlgebra {
    pub filters: FilterFamily,
    /// Upsets of the filter poset; bit `i` of a set stands for filter `i`.
    pub upsets: UpsetLattice,
    /// The bounded sublattice generated by `j(□A)`.
    pub designated: ElemSet,
    /// The upset lattice with `U ⇒ V = max{W ∈ D : W ∩ U ⊆ V}`.
    pub algebra: FiniteAlgebra,
    /// `j[a]` is the index of the upset `{F : a ∈ F}`.
    pub j: Vec<Elem>,
}

impl UpsetAlgebra {
    /// `U ⇒ V` as the union of all `W ∈ D` with `W ∩ U ⊆ V`.
    pub fn union_residuum(&self, u: Elem, v: Elem) -> Elem {
        let sets = &self.upsets.sets;
        let (su, sv) = (sets[u], sets[v]);
        let union = self
            .designated
            .iter()
            .filter(|&&w| sets[w] & su & !sv == 0)
            .fold(0u64, |acc, &w| acc | sets[w]);
        self.upsets.index_of(union).expect("a union of upsets is an upset")
    }
}

fn require_class(a: &FiniteAlgebra, kind: FilterKind) -> Result<(), FilterError> {
    let (class, verdict) = match kind {
        FilterKind::Implicative => ("sha", check_sha(a)?),
        FilterKind::Lattice => {
            if a.meet_table().is_none() {
                return Err(FilterError::NoMeet);
            }
            ("srs", check_srs(&a.meet_reduct())?)
        }
    };
    if verdict.member {
        Ok(())
    } else {
        Err(FilterError::NotInClass {
            class,
            axioms: verdict.labels().join(", "),
        })
    }
}

/// Embeds a sub-Hilbert algebra (implicative filters) or a subresiduated
/// semilattice (lattice filters) into a subresiduated lattice of upsets.
pub fn build_upset_algebra(a: &FiniteAlgebra, kind: FilterKind, limits: &Limits) -> Result<UpsetAlgebra, FilterError> {
    require_class(a, kind)?;
    let filters = all_filters(a, kind, limits.filter_carrier)?;
    let ups = upsets(&filters.poset(), limits.upsets)?;
    let j = j_images(a, &filters, &ups);
    let boxed: ElemSet = a.box_set().iter().map(|&x| j[x]).collect();
    let designated = ups.lattice.generated_sublattice(&boxed, true);
    let pair = AlgebraPair::new(ups.lattice.clone(), designated.clone())?;
    let algebra = build_implication(&pair)?;
    Ok(UpsetAlgebra {
        filters,
        upsets: ups,
        designated,
        algebra,
        j,
    })
}

fn j_images(a: &FiniteAlgebra, filters: &FilterFamily, ups: &UpsetLattice) -> Vec<Elem> {
    (0..a.size())
        .map(|x| {
            let mask = filters
                .filters
                .iter()
                .enumerate()
                .filter(|(_, &f)| f >> x & 1 == 1)
                .fold(0u64, |m, (i, _)| m | 1 << i);
            ups.index_of(mask).expect("{F : a ∈ F} is an upset")
        })
        .collect()
}

/// `a ↦ {F : a ∈ F}` as indices into the upset lattice of `ua`.
pub fn j_map(ua: &UpsetAlgebra) -> &[Elem] {
    &ua.j
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationReport {
    pub kind: FilterKind,
    pub carrier: usize,
    pub filters: usize,
    pub upsets: usize,
    pub designated: usize,
    pub injective: bool,
    pub order_embedding: bool,
    /// Pairs `(a, b)` with `j(a → b) ≠ j(a) ⇒ j(b)`.
    pub imp_failures: Vec<(Elem, Elem)>,
    /// Pairs `(a, b)` with `j(a ∧ b) ≠ j(a) ∩ j(b)` (lattice kind only).
    pub meet_failures: Vec<(Elem, Elem)>,
    pub srl_violations: Vec<String>,
    pub union_formula_agrees: bool,
    pub designated_distributive: bool,
    /// `W ∈ D`, `F ∈ W` and `F ∩ □A ⊆ G` imply `G ∈ W`.
    pub designated_box_closed: bool,
    pub passed: bool,
}

/// Builds the upset algebra and checks every property of the embedding.
pub fn verify_representation(a: &FiniteAlgebra, kind: FilterKind, limits: &Limits) -> Result<RepresentationReport, FilterError> {
    let ua = build_upset_algebra(a, kind, limits)?;
    Ok(report_for(a, &ua))
}

pub fn report_for(a: &FiniteAlgebra, ua: &UpsetAlgebra) -> RepresentationReport {
    let n = a.size();
    let j = &ua.j;
    let l = &ua.upsets.lattice;
    let u = &ua.algebra;
    let le = |x: Elem, y: Elem| match ua.filters.kind {
        FilterKind::Implicative => a.imp(x, y) == a.top(),
        FilterKind::Lattice => a.meet(x, y) == Some(x),
    };

    let mut images: BTreeMap<Elem, Elem> = BTreeMap::new();
    let injective = (0..n).all(|x| images.insert(j[x], x).is_none());
    let order_embedding = (0..n).all(|x| (0..n).all(|y| le(x, y) == l.leq(j[x], j[y])));

    let mut imp_failures = Vec::new();
    let mut meet_failures = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if j[a.imp(x, y)] != u.imp(j[x], j[y]) {
                imp_failures.push((x, y));
            }
            if ua.filters.kind == FilterKind::Lattice {
                let m = a.meet(x, y).expect("lattice kind has a meet");
                if j[m] != l.meet(j[x], j[y]) {
                    meet_failures.push((x, y));
                }
            }
        }
    }

    let srl_violations = check_srl(u)
        .map(|v| v.labels().iter().map(|s| s.to_string()).collect())
        .unwrap_or_else(|e| vec![e.to_string()]);

    let m = l.size();
    let union_formula_agrees = (0..m).all(|x| (0..m).all(|y| ua.union_residuum(x, y) == u.imp(x, y)));

    let designated_distributive = l
        .restrict(&ua.designated)
        .map(|(d, _)| d.is_distributive())
        .unwrap_or(false);

    let boxed = to_mask(&a.box_set());
    let fs = &ua.filters.filters;
    let designated_box_closed = ua.designated.iter().all(|&w| {
        let set = ua.upsets.sets[w];
        (0..fs.len()).filter(|&f| set >> f & 1 == 1).all(|f| {
            (0..fs.len())
                .filter(|&g| fs[f] & boxed & !fs[g] == 0)
                .all(|g| set >> g & 1 == 1)
        })
    });

    let passed = injective
        && order_embedding
        && imp_failures.is_empty()
        && meet_failures.is_empty()
        && srl_violations.is_empty()
        && union_formula_agrees
        && designated_distributive
        && designated_box_closed;
    RepresentationReport {
        kind: ua.filters.kind,
        carrier: n,
        filters: ua.filters.len(),
        upsets: m,
        designated: ua.designated.len(),
        injective,
        order_embedding,
        imp_failures,
        meet_failures,
        srl_violations,
        union_formula_agrees,
        designated_distributive,
        designated_box_closed,
        passed,
    }
}

/// First failure of the bracket identities on `a`, for lists of length at
/// most `max_len`, as a label and the offending arguments.
pub fn bracket_law_failure(a: &FiniteAlgebra, max_len: usize) -> Option<(&'static str, Vec<Elem>)> {
    let n = a.size();
    let all: Vec<Elem> = (0..n).collect();
    let boxed: Vec<Elem> = a.box_set().into_iter().collect();
    let le = |x: Elem, y: Elem| a.imp(x, y) == a.top();

    for k in 0..=max_len {
        // permutations of boxed arguments
        for xs in tuples(&boxed, k) {
            for last in 0..n {
                let v = bracket(a, &xs, last);
                let mut perm = xs.clone();
                let mut bad = None;
                crate::algebra::permutations(&mut perm, 0, &mut |p| {
                    if bad.is_none() && bracket(a, p, last) != v {
                        bad = Some(p.to_vec());
                    }
                });
                if let Some(mut p) = bad {
                    let mut w = xs.clone();
                    w.push(last);
                    w.append(&mut p);
                    return Some(("permutation", w));
                }
            }
        }
        for xs in tuples(&all, k) {
            for x in 0..n {
                for y in 0..n {
                    if le(x, y) && !le(bracket(a, &xs, x), bracket(a, &xs, y)) {
                        return Some(("monotone", [xs.clone(), vec![x, y]].concat()));
                    }
                }
            }
            for abcd in tuples(&all, 4) {
                let (p, q, r, s) = (abcd[0], abcd[1], abcd[2], abcd[3]);
                let lhs = bracket(a, &[xs.clone(), vec![p, q, r]].concat(), s);
                let rhs = bracket(a, &[xs.clone(), vec![bracket(a, &[p, q], r), p, q]].concat(), s);
                if !le(lhs, rhs) {
                    return Some(("expansion", [xs.clone(), abcd].concat()));
                }
            }
        }
        for xs in tuples(&boxed, k) {
            for &x in &boxed {
                for &y in &boxed {
                    let lhs = bracket(a, &[xs.clone(), vec![x]].concat(), y);
                    let rhs = bracket(a, &[vec![bracket(a, &xs, x)], xs.clone()].concat(), y);
                    if lhs != rhs {
                        return Some(("distributive", [xs.clone(), vec![x, y]].concat()));
                    }
                }
            }
        }
    }
    None
}

/// First `(X, a)` with `X ⊆ □A`, `1 ∈ X`, where closure-based and
/// bracket-based generation of `⟨X ∪ {a}⟩` disagree.
pub fn generation_disagreement(a: &FiniteAlgebra) -> Option<(ElemSet, Elem)> {
    let top = a.top();
    let others: Vec<Elem> = a.box_set().into_iter().filter(|&x| x != top).collect();
    for bits in 0..1u64 << others.len() {
        let mut xs: ElemSet = others.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &x)| x).collect();
        xs.insert(top);
        for extra in 0..a.size() {
            let mut with = xs.clone();
            with.insert(extra);
            if generated_implicative_filter(a, &with) != bracket_generated_filter(a, &xs, extra) {
                return Some((xs, extra));
            }
        }
    }
    None
}

fn tuples(pool: &[Elem], k: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    crate::enumerate::product(&vec![pool.to_vec(); k], &mut |t| out.push(t.to_vec()));
    if k == 0 {
        out.push(Vec::new());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::ClassTag;
    use crate::enumerate::enumerate_class;
    use crate::order::FiniteLattice;

    fn chain3_pair() -> FiniteAlgebra {
        FiniteAlgebra::from_lattice(&FiniteLattice::chain(3), vec![2, 2, 2, 0, 2, 2, 0, 0, 2]).unwrap()
    }

    fn set(xs: &[Elem]) -> ElemSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn brackets_nest_to_the_right() {
        let a = chain3_pair();
        assert_eq!(bracket(&a, &[], 1), 1);
        assert_eq!(bracket(&a, &[1], 0), a.imp(1, 0));
        assert_eq!(bracket(&a, &[2, 1, 0], 1), a.imp(2, a.imp(1, a.imp(0, 1))));
    }

    #[test]
    fn chain3_filters() {
        let a = chain3_pair().imp_reduct();
        let fam = all_implicative_filters(&a, 6).unwrap();
        // oracle: all subsets containing the top, closed under modus ponens
        let mut expected = Vec::new();
        for m in 0..8u64 {
            let s = to_set(m);
            let closed = s.contains(&2)
                && s.iter().all(|&x| (0..3).all(|y| !s.contains(&a.imp(x, y)) || s.contains(&y)));
            if closed {
                expected.push(s);
            }
        }
        assert_eq!(fam.sets().len(), expected.len());
        assert!(fam.sets().iter().all(|s| expected.contains(s)));
        assert_eq!(fam.sets(), vec![set(&[2]), set(&[1, 2]), set(&[0, 1, 2])]);
    }

    #[test]
    fn one_element_has_one_filter() {
        let a = FiniteAlgebra::implicative(1, vec![0], 0).unwrap();
        assert_eq!(all_implicative_filters(&a, 6).unwrap().len(), 1);
        let ua = build_upset_algebra(&a, FilterKind::Implicative, &Limits::default()).unwrap();
        assert_eq!(ua.upsets.lattice.size(), 2);
        assert!(verify_representation(&a, FilterKind::Implicative, &Limits::default()).unwrap().passed);
    }

    #[test]
    fn cap_is_enforced() {
        let a = FiniteAlgebra::implicative(7, vec![6; 49], 6).unwrap();
        assert_eq!(all_implicative_filters(&a, 6).unwrap_err(), FilterError::CarrierCap { size: 7, cap: 6 });
    }

    #[test]
    fn generated_filters() {
        let a = chain3_pair();
        assert_eq!(generated_implicative_filter(&a, &ElemSet::new()), set(&[2]));
        assert_eq!(generated_implicative_filter(&a, &set(&[1])), set(&[1, 2]));
    }

    #[test]
    fn separation() {
        let a = chain3_pair();
        assert_eq!(separate(&a, &set(&[2]), 1, 0).unwrap(), set(&[1, 2]));
        assert_eq!(separate(&a, &set(&[2]), 0, 1), Err(FilterError::NotSeparable { a: 0, b: 1 }));
    }

    #[test]
    fn separation_on_small_sha() {
        let limits = Limits::default();
        for n in 1..=4 {
            for a in enumerate_class(n, ClassTag::Sha, true, &limits).unwrap() {
                let boxed = a.box_set();
                for f in all_implicative_filters(&a, 6).unwrap().sets() {
                    for x in 0..n {
                        for y in 0..n {
                            if f.contains(&a.imp(x, y)) {
                                continue;
                            }
                            let g = separate(&a, &f, x, y).unwrap();
                            assert!(g.contains(&x) && !g.contains(&y));
                            assert!(f.intersection(&boxed).all(|z| g.contains(z)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_filters_are_implicative() {
        let a = chain3_pair();
        let lat = all_lattice_filters(&a, 6).unwrap();
        let imp = all_implicative_filters(&a, 6).unwrap();
        assert!(lat.filters.iter().all(|f| imp.filters.contains(f)));
        // principal filters ↑x
        for x in 0..3 {
            let up: ElemSet = (0..3).filter(|&y| y >= x).collect();
            assert!(lat.position(&up).is_some());
        }
    }

    #[test]
    fn boolean_embedding() {
        let a = FiniteAlgebra::implicative(2, vec![1, 1, 0, 1], 1).unwrap();
        let ua = build_upset_algebra(&a, FilterKind::Implicative, &Limits::default()).unwrap();
        let r = report_for(&a, &ua);
        assert!(r.passed, "{r:?}");
        assert_eq!(ua.j[1], ua.upsets.lattice.top());
    }

    #[test]
    fn chain3_embedding_commutes() {
        let a = chain3_pair().imp_reduct();
        let ua = build_upset_algebra(&a, FilterKind::Implicative, &Limits::default()).unwrap();
        assert_eq!(ua.j[a.imp(1, 0)], ua.algebra.imp(ua.j[1], ua.j[0]));
        assert!(report_for(&a, &ua).passed);
    }

    #[test]
    fn non_member_is_rejected() {
        let a = FiniteAlgebra::implicative(2, vec![1, 1, 1, 1], 1).unwrap();
        assert!(matches!(
            build_upset_algebra(&a, FilterKind::Implicative, &Limits::default()),
            Err(FilterError::NotInClass { class: "sha", .. })
        ));
    }

    #[test]
    fn brackets_on_small_sha() {
        for n in 1..=3 {
            for a in enumerate_class(n, ClassTag::Sha, true, &Limits::default()).unwrap() {
                assert_eq!(bracket_law_failure(&a, 2), None);
                assert_eq!(generation_disagreement(&a), None);
            }
        }
    }
}
