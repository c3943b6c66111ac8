//! Membership checks for the algebra classes, by exhaustive scan of each
//! (quasi-)equation over the carrier.
//!
//! Every check reports, per failing axiom, the lexicographically first
//! assignment of its variables that falsifies it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{FiniteAlgebra, Signature};
use crate::{Elem, ElemSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    /// Sub-Hilbert algebras `(A, →, 1)`.
    Sha,
    /// Hilbert algebras.
    Hilbert,
    /// Subresiduated lattices.
    Srl,
    /// Subresiduated semilattices `(A, ∧, →, 1)`.
    Srs,
    /// Subresiduated lattices in the broad sense (no distributivity).
    Srlbs,
    /// Bounded sub-Hilbert lattices.
    Shs,
    /// Sub-Hilbert lattices via the hemi-implicative base and conditions (a)-(f).
    ShrlAppendix,
    /// The quasi-equational base of the algebraic semantics of R4*.
    AlgR4Star,
    /// The quasi-equational base of the algebraic semantics of R4⁺.
    AlgPlus,
}

impl ClassTag {
    pub const ALL: [ClassTag; 9] = [
        ClassTag::Sha,
        ClassTag::Hilbert,
        ClassTag::Srl,
        ClassTag::Srs,
        ClassTag::Srlbs,
        ClassTag::Shs,
        ClassTag::ShrlAppendix,
        ClassTag::AlgR4Star,
        ClassTag::AlgPlus,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Sha => "sha",
            ClassTag::Hilbert => "hilbert",
            ClassTag::Srl => "srl",
            ClassTag::Srs => "srs",
            ClassTag::Srlbs => "srlbs",
            ClassTag::Shs => "shs",
            ClassTag::ShrlAppendix => "shrl-appendix",
            ClassTag::AlgR4Star => "alg-r4star",
            ClassTag::AlgPlus => "alg-plus",
        }
    }

    /// Operations the class is stated in; `→` and `1` are implicit.
    pub fn signature(self) -> Signature {
        let (meet, join, neg, bottom) = match self {
            ClassTag::Sha | ClassTag::Hilbert => (false, false, false, false),
            ClassTag::Srs => (true, false, false, false),
            ClassTag::Srl | ClassTag::Srlbs | ClassTag::Shs => (true, true, false, true),
            ClassTag::ShrlAppendix => (true, true, false, false),
            ClassTag::AlgR4Star | ClassTag::AlgPlus => (true, true, true, false),
        };
        Signature {
            meet,
            join,
            neg,
            bottom,
        }
    }

    /// Classes whose members are enumerated over a lattice backbone.
    pub fn has_lattice(self) -> bool {
        !matches!(self, ClassTag::Sha | ClassTag::Hilbert)
    }

    pub fn axioms(self) -> &'static [Axiom] {
        match self {
            ClassTag::Sha => SHA,
            ClassTag::Hilbert => HILBERT,
            ClassTag::Srl => SRL,
            ClassTag::Srs => SRS,
            ClassTag::Srlbs => SRLBS,
            ClassTag::Shs => SHS,
            ClassTag::ShrlAppendix => SHRL_APPENDIX,
            ClassTag::AlgR4Star => ALG_R4STAR,
            ClassTag::AlgPlus => ALG_PLUS,
        }
    }
}

impl serde::Serialize for ClassTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown class `{0}` (expected one of sha, hilbert, srl, srs, srlbs, shs, shrl-appendix, alg-r4star, alg-plus)")]
pub struct UnknownClass(pub String);

impl FromStr for ClassTag {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("class {class} needs operation {op}, which the algebra lacks")]
pub struct MissingOperation {
    pub class: String,
    pub op: &'static str,
}

/// A falsifying assignment for one axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub vars: Vec<String>,
    pub witness: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub member: bool,
    pub violations: Vec<Violation>,
}

impl ClassVerdict {
    pub fn from_violations(violations: Vec<Violation>) -> Self {
        ClassVerdict {
            member: violations.is_empty(),
            violations,
        }
    }

    pub fn violation(&self, axiom: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.axiom.as_str()).collect()
    }
}

/// Borrowed operation tables with the lookups the axioms use. Missing
/// operations are empty tables; callers check the signature first.
pub struct Tables<'a> {
    pub n: usize,
    imp: &'a [Elem],
    meet: &'a [Elem],
    join: &'a [Elem],
    neg: &'a [Elem],
    pub top: Elem,
    pub bottom: Elem,
}

impl<'a> Tables<'a> {
    pub fn new(a: &'a FiniteAlgebra) -> Self {
        Tables {
            n: a.size(),
            imp: a.imp_table(),
            meet: a.meet_table().unwrap_or(&[]),
            join: a.join_table().unwrap_or(&[]),
            neg: a.neg_table().unwrap_or(&[]),
            top: a.top(),
            bottom: a.bottom().unwrap_or(usize::MAX),
        }
    }

    #[inline]
    pub fn i(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a * self.n + b]
    }
    #[inline]
    pub fn m(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.n + b]
    }
    #[inline]
    pub fn j(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.n + b]
    }
    #[inline]
    pub fn ng(&self, a: Elem) -> Elem {
        self.neg[a]
    }
    /// `□a = 1 → a`.
    #[inline]
    pub fn bx(&self, a: Elem) -> Elem {
        self.i(self.top, a)
    }
    /// `a → b = 1`.
    #[inline]
    pub fn one(&self, a: Elem, b: Elem) -> bool {
        self.i(a, b) == self.top
    }
    /// Order of the meet semilattice: `a ∧ b = a`.
    #[inline]
    pub fn le(&self, a: Elem, b: Elem) -> bool {
        self.m(a, b) == a
    }
}

/// A labelled (quasi-)equation over `vars.len()` variables.
pub struct Axiom {
    pub label: &'static str,
    pub vars: &'static [&'static str],
    pub holds: fn(&Tables, &[Elem]) -> bool,
}

impl Axiom {
    /// First falsifying assignment, scanning `domain^k` lexicographically.
    pub fn first_failure(&self, t: &Tables, domain: &[Elem]) -> Option<Vec<Elem>> {
        let k = self.vars.len();
        if domain.is_empty() {
            return None;
        }
        let mut idx = vec![0usize; k];
        let mut xs: Vec<Elem> = vec![domain[0]; k];
        loop {
            if !(self.holds)(t, &xs) {
                return Some(xs);
            }
            // odometer, last variable fastest
            let mut p = k;
            loop {
                if p == 0 {
                    return None;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < domain.len() {
                    xs[p] = domain[idx[p]];
                    break;
                }
                idx[p] = 0;
                xs[p] = domain[0];
            }
        }
    }

    fn violation(&self, witness: Vec<Elem>) -> Violation {
        Violation {
            axiom: self.label.to_string(),
            vars: self.vars.iter().map(|v| v.to_string()).collect(),
            witness,
        }
    }
}

/// All violations of `axioms` over the full carrier.
pub fn scan(a: &FiniteAlgebra, axioms: &[Axiom]) -> Vec<Violation> {
    let domain: Vec<Elem> = (0..a.size()).collect();
    scan_on(a, axioms, &domain)
}

/// All violations of `axioms` with variables ranging over `domain`.
pub fn scan_on(a: &FiniteAlgebra, axioms: &[Axiom], domain: &[Elem]) -> Vec<Violation> {
    let t = Tables::new(a);
    axioms
        .iter()
        .filter_map(|ax| ax.first_failure(&t, domain).map(|w| ax.violation(w)))
        .collect()
}

/// Whether every axiom holds; stops at the first failure.
pub fn holds_all(a: &FiniteAlgebra, axioms: &[Axiom]) -> bool {
    let domain: Vec<Elem> = (0..a.size()).collect();
    let t = Tables::new(a);
    axioms.iter().all(|ax| ax.first_failure(&t, &domain).is_none())
}

fn require(a: &FiniteAlgebra, class: &str, sig: Signature) -> Result<(), MissingOperation> {
    let have = a.signature();
    let missing = [
        (sig.meet && !have.meet, "/\\"),
        (sig.join && !have.join, "\\/"),
        (sig.neg && !have.neg, "~"),
        (sig.bottom && !have.bottom, "0"),
    ];
    match missing.iter().find(|(m, _)| *m) {
        Some(&(_, op)) => Err(MissingOperation {
            class: class.to_string(),
            op,
        }),
        None => Ok(()),
    }
}

/// Full verdict for `class`. Operations outside the class signature are ignored.
pub fn check(class: ClassTag, a: &FiniteAlgebra) -> Result<ClassVerdict, MissingOperation> {
    require(a, class.as_str(), class.signature())?;
    Ok(ClassVerdict::from_violations(scan(a, class.axioms())))
}

/// Membership only, stopping at the first failing axiom.
pub fn is_member(class: ClassTag, a: &FiniteAlgebra) -> Result<bool, MissingOperation> {
    require(a, class.as_str(), class.signature())?;
    Ok(holds_all(a, class.axioms()))
}

pub fn check_sha(a: &FiniteAlgebra) -> Result<ClassVerdict, MissingOperation> {
    check(ClassTag::Sha, a)
}

pub fn check_srl(a: &FiniteAlgebra) -> Result<ClassVerdict, MissingOperation> {
    check(ClassTag::Srl, a)
}

pub fn check_srs(a: &FiniteAlgebra) -> Result<ClassVerdict, MissingOperation> {
    check(ClassTag::Srs, a)
}

pub fn check_srlbs(a: &FiniteAlgebra) -> Result<ClassVerdict, MissingOperation> {
    check(ClassTag::Srlbs, a)
}

pub fn check_shs(a: &FiniteAlgebra) -> Result<ClassVerdict, MissingOperation> {
    check(ClassTag::Shs, a)
}

pub fn check_shrl_appendix(a: &FiniteAlgebra) -> Result<ClassVerdict, MissingOperation> {
    check(ClassTag::ShrlAppendix, a)
}

pub fn check_alg_r4star(a: &FiniteAlgebra) -> Result<ClassVerdict, MissingOperation> {
    check(ClassTag::AlgR4Star, a)
}

pub fn check_alg_plus(a: &FiniteAlgebra) -> Result<ClassVerdict, MissingOperation> {
    check(ClassTag::AlgPlus, a)
}

/// The R4* base with the quasi-equation `1 → x = 1 ⟹ x = 1` in place of (A).
pub fn check_alg_r4star_mp(a: &FiniteAlgebra) -> Result<ClassVerdict, MissingOperation> {
    require(a, "alg-r4star", ClassTag::AlgR4Star.signature())?;
    Ok(ClassVerdict::from_violations(scan(a, ALG_R4STAR_MP)))
}

/// Sub-Hilbert lattices: `shs` without the bottom constant.
pub fn check_sub_hilbert_lattice(a: &FiniteAlgebra) -> Result<ClassVerdict, MissingOperation> {
    require(a, "shl", ClassTag::ShrlAppendix.signature())?;
    Ok(ClassVerdict::from_violations(scan(a, SHL)))
}

/// The hemi-implicative base alone (meet semilattice with top, `x → x = 1`,
/// `x ∧ (x → y) ≤ x ∧ y`), plus the lattice laws.
pub fn check_hemi_base(a: &FiniteAlgebra) -> Result<ClassVerdict, MissingOperation> {
    require(a, "shrl-appendix", ClassTag::ShrlAppendix.signature())?;
    Ok(ClassVerdict::from_violations(scan(a, HEMI_BASE)))
}

/// `□A` is a subalgebra (closed under `→`, contains 1) and a Hilbert algebra.
pub fn check_box_hilbert(a: &FiniteAlgebra) -> ClassVerdict {
    let boxed: Vec<Elem> = a.box_set().into_iter().collect();
    let mut v = scan_on(a, BOX_SUBALGEBRA, &boxed);
    if !boxed.contains(&a.top()) {
        v.insert(
            0,
            Violation {
                axiom: "Unit".into(),
                vars: vec![],
                witness: vec![],
            },
        );
    }
    v.extend(scan_on(a, HILBERT, &boxed));
    ClassVerdict::from_violations(v)
}

/// `□A` as a set together with whether it equals `{x : □x = x}`.
pub fn box_set(a: &FiniteAlgebra) -> (ElemSet, bool) {
    let s = a.box_set();
    let agree = s == a.box_fixpoints();
    (s, agree)
}

macro_rules! ax {
    ($label:literal, [$($v:literal),*], |$t:ident, $x:ident| $body:expr) => {
        Axiom {
            label: $label,
            vars: &[$($v),*],
            holds: |$t: &Tables, $x: &[Elem]| $body,
        }
    };
}

// Lattice structure shared by the lattice-based classes.
const LAT: Axiom = ax!("Lat", ["x", "y", "z"], |t, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    t.m(x, t.m(y, z)) == t.m(t.m(x, y), z)
        && t.j(x, t.j(y, z)) == t.j(t.j(x, y), z)
        && t.m(x, y) == t.m(y, x)
        && t.j(x, y) == t.j(y, x)
        && t.m(x, x) == x
        && t.j(x, x) == x
        && t.m(x, t.j(x, y)) == x
        && t.j(x, t.m(x, y)) == x
});
const BOUNDS: Axiom = ax!("Bounds", ["x"], |t, v| t.m(v[0], t.top) == v[0] && t.j(v[0], t.bottom) == v[0]);
const TOP: Axiom = ax!("Top", ["x"], |t, v| t.m(v[0], t.top) == v[0]);
const DIST: Axiom = ax!("Dist", ["x", "y", "z"], |t, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    t.m(x, t.j(y, z)) == t.j(t.m(x, y), t.m(x, z))
});

const B: Axiom = ax!("B", ["x", "y", "z"], |t, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    t.one(t.i(x, y), t.i(t.i(y, z), t.i(x, z)))
});
const I: Axiom = ax!("I", ["x"], |t, v| t.one(v[0], v[0]));
const T: Axiom = ax!("T", ["x"], |t, v| t.one(v[0], t.top));
const A: Axiom = ax!("A", ["x", "y"], |t, v| !(t.one(v[0], v[1]) && t.one(v[1], v[0])) || v[0] == v[1]);
const S: Axiom = ax!("S", ["x", "y", "z"], |t, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    t.one(t.i(x, t.i(y, z)), t.i(t.i(x, y), t.i(x, z)))
});
const H1: Axiom = ax!("h1", ["x", "y"], |t, v| t.one(v[0], t.i(v[1], v[0])));
const MP: Axiom = ax!("MP", ["x"], |t, v| !t.one(t.top, v[0]) || v[0] == t.top);

const SHA: &[Axiom] = &[B, I, T, A, S];
const HILBERT: &[Axiom] = &[A, S, H1];

const SRL: &[Axiom] = &[
    LAT,
    BOUNDS,
    DIST,
    ax!("A1", ["x"], |t, v| t.i(v[0], v[0]) == t.top),
    ax!("A2", ["x", "y", "z"], |t, v| t.le(t.i(v[0], v[1]), t.i(v[2], t.i(v[0], v[1])))),
    ax!("A3", ["x", "y"], |t, v| t.le(t.m(v[0], t.i(v[0], v[1])), v[1])),
    ax!("A4", ["x", "y", "z"], |t, v| {
        let (x, y, z) = (v[0], v[1], v[2]);
        t.i(z, t.m(x, y)) == t.m(t.i(z, x), t.i(z, y))
    }),
    ax!("A5", ["x", "y", "z"], |t, v| {
        let (x, y, z) = (v[0], v[1], v[2]);
        t.i(t.j(x, y), z) == t.m(t.i(x, z), t.i(y, z))
    }),
    ax!("A6", ["x", "y", "z"], |t, v| {
        let (x, y, z) = (v[0], v[1], v[2]);
        t.le(t.m(t.i(x, y), t.i(y, z)), t.i(x, z))
    }),
];

const SR1: Axiom = ax!("SR1", ["x", "y"], |t, v| t.i(t.m(v[0], v[1]), v[1]) == t.top);
const SR2: Axiom = ax!("SR2", ["x", "y", "z"], |t, v| t.le(t.i(v[0], v[1]), t.i(v[2], t.i(v[0], v[1]))));
const SR3: Axiom = ax!("SR3", ["x", "y"], |t, v| t.le(t.m(v[0], t.i(v[0], v[1])), v[1]));
const SR4: Axiom = ax!("SR4", ["x", "y", "z"], |t, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    t.i(z, t.m(x, y)) == t.m(t.i(z, x), t.i(z, y))
});

const SRS: &[Axiom] = &[
    ax!("SL1", ["x", "y", "z"], |t, v| t.m(v[0], t.m(v[1], v[2])) == t.m(t.m(v[0], v[1]), v[2])),
    ax!("SL2", ["x", "y"], |t, v| t.m(v[0], v[1]) == t.m(v[1], v[0])),
    ax!("SL3", ["x"], |t, v| t.m(v[0], v[0]) == v[0]),
    ax!("SL4", ["x"], |t, v| t.m(v[0], t.top) == v[0]),
    SR1,
    SR2,
    SR3,
    SR4,
];

const SRLBS: &[Axiom] = &[LAT, BOUNDS, SR1, SR2, SR3, SR4];

const SH1: Axiom = ax!("SH1", ["x", "y"], |t, v| t.i(t.m(v[0], v[1]), v[1]) == t.top);
const SH2: Axiom = ax!("SH2", ["x", "y"], |t, v| t.le(t.m(v[0], t.i(v[0], v[1])), v[1]));
const SH3: Axiom = ax!("SH3", ["x", "y", "z"], |t, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    t.le(t.i(x, y), t.i(t.i(y, z), t.i(x, z)))
});
const SH4: Axiom = ax!("SH4", ["x", "y", "z"], |t, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    t.le(t.i(x, t.i(y, z)), t.i(t.i(x, y), t.i(x, z)))
});

const SHS: &[Axiom] = &[LAT, BOUNDS, SH1, SH2, SH3, SH4];
const SHL: &[Axiom] = &[LAT, TOP, SH1, SH2, SH3, SH4];

const HIS1: Axiom = ax!("HIS1", ["x"], |t, v| t.i(v[0], v[0]) == t.top);
const HIS2: Axiom = ax!("HIS2", ["x", "y"], |t, v| t.le(t.m(v[0], t.i(v[0], v[1])), t.m(v[0], v[1])));
const HEMI_BASE: &[Axiom] = &[LAT, TOP, HIS1, HIS2];

const SHRL_APPENDIX: &[Axiom] = &[
    LAT,
    TOP,
    HIS1,
    HIS2,
    ax!("a", ["a", "b", "c"], |t, v| t.le(t.i(v[0], v[1]), t.i(v[2], t.i(v[0], v[1])))),
    ax!("b", ["a", "b", "c"], |t, v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        t.le(t.i(t.j(a, b), c), t.m(t.i(a, c), t.i(b, c)))
    }),
    ax!("c", ["a", "b", "c"], |t, v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        t.le(t.i(a, t.m(b, c)), t.m(t.i(a, b), t.i(a, c)))
    }),
    ax!("d", ["a", "b", "c", "d"], |t, v| {
        let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
        t.le(t.i(d, t.i(a, t.i(b, c))), t.i(t.i(d, t.i(a, b)), t.i(d, t.i(a, c))))
    }),
    ax!("e", ["a", "b", "c"], |t, v| {
        let (a, b, c) = (t.bx(v[0]), t.bx(v[1]), t.bx(v[2]));
        t.i(a, t.i(b, c)) == t.i(b, t.i(a, c))
    }),
    ax!("f", ["a", "b", "c"], |t, v| {
        let (a, b, c) = (t.bx(v[0]), t.bx(v[1]), t.bx(v[2]));
        t.i(a, t.i(b, c)) == t.i(t.i(a, b), t.i(a, c))
    }),
];

const EC1: Axiom = ax!("EC1", ["x", "y"], |t, v| t.one(t.m(v[0], v[1]), v[0]));
const EC2: Axiom = ax!("EC2", ["x", "y"], |t, v| t.one(t.m(v[0], v[1]), v[1]));
const EC3: Axiom = ax!("EC3", ["x", "y", "z"], |t, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    t.one(t.i(z, x), t.i(t.i(z, y), t.i(z, t.m(x, y))))
});
const ED1: Axiom = ax!("ED1", ["x", "y"], |t, v| t.one(v[0], t.j(v[0], v[1])));
const ED2: Axiom = ax!("ED2", ["x", "y"], |t, v| t.one(v[1], t.j(v[0], v[1])));
const ED3: Axiom = ax!("ED3", ["x", "y", "z"], |t, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    t.one(t.i(x, z), t.i(t.i(y, z), t.i(t.j(x, y), z)))
});
const N1: Axiom = ax!("N1", ["x", "y"], |t, v| t.one(t.ng(v[0]), t.i(v[0], v[1])));
const N2: Axiom = ax!("N2", ["x"], |t, v| t.one(t.i(v[0], t.ng(v[0])), t.ng(v[0])));
const EDIST: Axiom = ax!("Dist", ["x", "y", "z"], |t, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    t.one(t.m(x, t.j(y, z)), t.j(t.m(x, y), t.m(x, z)))
});
const QC: Axiom = ax!("QC", ["x", "y", "z"], |t, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    !(t.one(z, x) && t.one(z, y)) || t.one(z, t.m(x, y))
});

const ALG_R4STAR: &[Axiom] = &[I, B, S, T, A, EC1, EC2, EC3, ED1, ED2, ED3, N1, N2, EDIST];
const ALG_R4STAR_MP: &[Axiom] = &[I, B, S, T, MP, EC1, EC2, EC3, ED1, ED2, ED3, N1, N2, EDIST];
const ALG_PLUS: &[Axiom] = &[B, I, A, T, S, EC1, EC2, ED1, ED2, ED3, N1, N2, QC];

const BOX_SUBALGEBRA: &[Axiom] = &[ax!("Closed", ["x", "y"], |t, v| t.bx(t.i(v[0], v[1])) == t.i(v[0], v[1]))];

/// Consequences of the sub-Hilbert base concerning `□`.
pub const BOX_LAWS: &[Axiom] = &[
    ax!("box-idempotent", ["x"], |t, v| t.bx(t.bx(v[0])) == t.bx(v[0])),
    ax!("box-deflationary", ["x"], |t, v| t.one(t.bx(v[0]), v[0])),
    ax!("imp-boxed", ["x", "y"], |t, v| t.bx(t.i(v[0], v[1])) == t.i(v[0], v[1])),
    ax!("box-self-distributive", ["x", "y", "z"], |t, v| {
        let (x, y, z) = (t.bx(v[0]), t.bx(v[1]), t.bx(v[2]));
        t.i(x, t.i(y, z)) == t.i(t.i(x, y), t.i(x, z))
    }),
    ax!("box-exchange", ["x", "y", "z"], |t, v| {
        let (x, y, z) = (t.bx(v[0]), t.bx(v[1]), v[2]);
        t.one(t.i(x, t.i(y, z)), t.i(y, t.i(x, z)))
    }),
];

/// Identities valid in every subresiduated lattice.
pub const SRL_LAWS: &[Axiom] = &[
    ax!("S1", ["x", "y", "z"], |t, v| t.one(t.i(v[0], v[1]), t.i(v[2], t.i(v[0], v[1])))),
    ax!("S2", ["w", "x", "y", "z"], |t, v| {
        let (w, x, y, z) = (v[0], v[1], v[2], v[3]);
        t.one(t.i(w, t.i(x, t.i(y, z))), t.i(t.i(w, t.i(x, y)), t.i(w, t.i(x, z))))
    }),
    // S2 at w = 1, rewritten with □(a → b) = a → b, is (S).
    ax!("S", ["x", "y", "z"], |t, v| {
        let (w, x, y, z) = (t.top, v[0], v[1], v[2]);
        let s2 = t.i(t.i(w, t.i(x, t.i(y, z))), t.i(t.i(w, t.i(x, y)), t.i(w, t.i(x, z))));
        let s = t.i(t.i(x, t.i(y, z)), t.i(t.i(x, y), t.i(x, z)));
        s2 == t.top && s == t.top
    }),
];

/// Order properties of `→` in subresiduated semilattices.
pub const SRS_LAWS: &[Axiom] = &[
    ax!("monotone", ["a", "b", "c"], |t, v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        !t.le(a, b) || t.le(t.i(c, a), t.i(c, b))
    }),
    ax!("transitive", ["a", "b", "c"], |t, v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        t.le(t.m(t.i(a, b), t.i(b, c)), t.i(a, c))
    }),
    ax!("order", ["a", "b"], |t, v| t.le(v[0], v[1]) == (t.i(v[0], v[1]) == t.top)),
    ax!("antitone", ["a", "b", "c"], |t, v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        !t.le(a, b) || t.le(t.i(b, c), t.i(a, c))
    }),
    ax!("imp-boxed", ["a", "b"], |t, v| t.bx(t.i(v[0], v[1])) == t.i(v[0], v[1])),
];

/// Structure forced by the R4* base: `∧`/`∨` are infimum/supremum of the
/// natural order, and (EC4).
pub const R4STAR_LAWS: &[Axiom] = &[
    ax!("meet-infimum", ["x", "y", "z"], |t, v| {
        let (x, y, z) = (v[0], v[1], v[2]);
        let m = t.m(x, y);
        t.one(m, x) && t.one(m, y) && (!(t.one(z, x) && t.one(z, y)) || t.one(z, m))
    }),
    ax!("join-supremum", ["x", "y", "z"], |t, v| {
        let (x, y, z) = (v[0], v[1], v[2]);
        let j = t.j(x, y);
        t.one(x, j) && t.one(y, j) && (!(t.one(x, z) && t.one(y, z)) || t.one(j, z))
    }),
    ax!("EC4", ["x", "y"], |t, v| t.one(t.m(v[0], t.i(v[0], v[1])), v[1])),
];

/// `((z → x) ∧ (z → y)) → (z → (x ∧ y)) = 1`, which separates R4† from R4⁺.
pub const SEPARATING: Axiom = ax!("separating", ["x", "y", "z"], |t, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    t.one(t.m(t.i(z, x), t.i(z, y)), t.i(z, t.m(x, y)))
});

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{FiniteLattice, FinitePoset};

    fn chain3_pair() -> FiniteAlgebra {
        FiniteAlgebra::from_lattice(&FiniteLattice::chain(3), vec![2, 2, 2, 0, 2, 2, 0, 0, 2]).unwrap()
    }

    /// B₂ = {0, a, b, 1}: x → y = 1 if x ≤ y, else y.
    fn b2() -> FiniteAlgebra {
        let p = FinitePoset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let l = FiniteLattice::from_poset(p).unwrap();
        let imp = (0..16)
            .map(|i| if l.leq(i / 4, i % 4) { 3 } else { i % 4 })
            .collect();
        FiniteAlgebra::from_lattice(&l, imp).unwrap()
    }

    #[test]
    fn tags_round_trip() {
        for t in ClassTag::ALL {
            assert_eq!(t.as_str().parse::<ClassTag>().unwrap(), t);
        }
        assert!("lattice".parse::<ClassTag>().is_err());
    }

    #[test]
    fn chain3_pair_memberships() {
        let a = chain3_pair();
        assert!(check_srl(&a).unwrap().member);
        assert!(check_sha(&a.imp_reduct()).unwrap().member);
        assert!(check_srs(&a.meet_reduct()).unwrap().member);
        let h = check(ClassTag::Hilbert, &a).unwrap();
        assert_eq!(h.labels(), vec!["h1"]);
        // m → (1 → m) = m → 0 = 0
        assert_eq!(h.violation("h1").unwrap().witness, vec![1, 2]);
        let neg = a.with_derived_neg().unwrap();
        assert!(check_alg_r4star(&neg).unwrap().member);
        assert!(check_alg_plus(&neg).unwrap().member);
    }

    #[test]
    fn collapse_fails_a() {
        let a = FiniteAlgebra::implicative(2, vec![0, 0, 0, 0], 0).unwrap();
        let v = check_sha(&a).unwrap();
        assert_eq!(v.labels(), vec!["A"]);
        assert_eq!(v.violation("A").unwrap().witness, vec![0, 1]);
    }

    #[test]
    fn b2_is_shs_not_srs() {
        let a = b2();
        assert!(check_shs(&a).unwrap().member);
        let v = check_srs(&a.meet_reduct()).unwrap();
        assert_eq!(v.labels(), vec!["SR4"]);
        // x = a, y = b, z = a: a → (a ∧ b) = 0 but (a → a) ∧ (a → b) = b
        assert_eq!(v.violation("SR4").unwrap().witness, vec![1, 2, 1]);
        assert!(!check_srlbs(&a).unwrap().member);
        assert!(check_shrl_appendix(&a.lattice_reduct()).unwrap().member);
    }

    #[test]
    fn negation_violations() {
        let l = FiniteLattice::chain(2);
        let base = FiniteAlgebra::from_lattice(&l, vec![1, 1, 0, 1]).unwrap();
        // ¬0 = ¬1 = 1: N2 holds, but ¬1 → (1 → 0) = 0
        let a = base.clone().with_neg(vec![1, 1]).unwrap();
        let v = check_alg_r4star(&a).unwrap();
        assert_eq!(v.labels(), vec!["N1"]);
        assert_eq!(v.violation("N1").unwrap().witness, vec![1, 0]);
        // ¬0 = 0: (0 → ¬0) → ¬0 = 1 → 0 = 0
        let a = base.with_neg(vec![0, 0]).unwrap();
        let v = check_alg_r4star(&a).unwrap();
        assert_eq!(v.violation("N2").unwrap().witness, vec![0]);
    }

    #[test]
    fn missing_signature_is_an_error() {
        let a = FiniteAlgebra::implicative(1, vec![0], 0).unwrap();
        assert!(check_srs(&a).is_err());
        assert!(check_sha(&a).unwrap().member);
    }

    #[test]
    fn one_element_algebra_is_in_every_class() {
        let l = FiniteLattice::chain(1);
        let a = FiniteAlgebra::from_lattice(&l, vec![0]).unwrap().with_derived_neg().unwrap();
        for t in ClassTag::ALL {
            assert!(check(t, &a).unwrap().member, "{t}");
        }
    }

    #[test]
    fn box_hilbert() {
        assert!(check_box_hilbert(&chain3_pair()).member);
        let (s, agree) = box_set(&chain3_pair());
        assert_eq!(s, [0, 2].into_iter().collect());
        assert!(agree);
    }

    #[test]
    fn broken_sh2_is_rejected() {
        let a = b2();
        let mut imp = a.imp_table().to_vec();
        // 1 → 0 := 1 makes 1 ∧ (1 → 0) = 1 ≰ 0
        imp[3 * 4] = 3;
        let broken = a.lattice_reduct().with_imp(imp).unwrap();
        let v = check_shrl_appendix(&broken).unwrap();
        assert!(!v.member);
        assert!(v.violation("HIS2").is_some());
    }

    #[test]
    fn qc_violation() {
        // chain 0 < m < 1 with a meet table claiming m ∧ m = 0
        let a = chain3_pair().with_derived_neg().unwrap();
        let mut meet = a.meet_table().unwrap().to_vec();
        meet[4] = 0;
        let bad = a.clone().with_meet(meet).unwrap();
        let v = check_alg_plus(&bad).unwrap();
        assert_eq!(v.violation("QC").unwrap().witness, vec![1, 1, 1]);
    }
}
