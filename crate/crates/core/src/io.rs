//! JSON documents for algebras, proofs and countermodels.
//!
//! Binary operations are written as row-major nested arrays:
//! `imp[a][b] = a → b`. Elements are carrier indices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteAlgebra};
use crate::calculi::{BadRule, Calculus, Justification, Proof, ProofLine, UnknownCalculus};
use crate::order::{FiniteLattice, FinitePoset, OrderError};
use crate::pair::{build_implication, build_srs_pair, AlgebraPair, PairError};
use crate::semantics::Countermodel;
use crate::syntax::{Formula, ParseError};
use crate::{Elem, ElemSet};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error("line {line}: {source}")]
    Formula { line: usize, source: ParseError },
    #[error("hypothesis {index}: {source}")]
    Hypothesis { index: usize, source: ParseError },
    #[error("line {line}: {source}")]
    Rule { line: usize, source: BadRule },
    #[error(transparent)]
    Calculus(#[from] UnknownCalculus),
    #[error("row {row} of {op} has {found} entries, expected {expected}")]
    Ragged {
        op: &'static str,
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("the document gives neither an imp table nor a lattice with D")]
    Underdetermined,
}

/// A finite algebra on disk.
///
/// Either `imp` is given, or a lattice (`meet`/`join` tables, or the order as
/// `leq` pairs) together with `designated`; then `→` is built from the pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    /// Pairs `[a, b]` with `a ≤ b`; reflexive and transitive closure is taken.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<(Elem, Elem)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<Elem>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<Elem>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imp: Option<Vec<Vec<Elem>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<Elem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<Elem>,
    /// `D`; on output this is `□A`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub designated: Option<Vec<Elem>>,
}

fn rows(table: &[Elem], n: usize) -> Vec<Vec<Elem>> {
    table.chunks(n).map(<[Elem]>::to_vec).collect()
}

fn flat(op: &'static str, t: &[Vec<Elem>], n: usize) -> Result<Vec<Elem>, IoError> {
    if t.len() != n {
        return Err(AlgebraError::TableShape {
            op,
            expected: n,
            found: t.len(),
        }
        .into());
    }
    for (row, r) in t.iter().enumerate() {
        if r.len() != n {
            return Err(IoError::Ragged {
                op,
                row,
                expected: n,
                found: r.len(),
            });
        }
    }
    Ok(t.concat())
}

impl AlgebraDoc {
    pub fn from_algebra(a: &FiniteAlgebra) -> Self {
        let n = a.size();
        AlgebraDoc {
            size: n,
            names: a.names().map(<[String]>::to_vec),
            leq: None,
            meet: a.meet_table().map(|t| rows(t, n)),
            join: a.join_table().map(|t| rows(t, n)),
            imp: Some(rows(a.imp_table(), n)),
            neg: a.neg_table().map(<[Elem]>::to_vec),
            top: Some(a.top()),
            bottom: a.bottom(),
            designated: Some(a.box_set().into_iter().collect()),
        }
    }

    fn lattice(&self) -> Result<Option<FiniteLattice>, IoError> {
        let n = self.size;
        if let Some(pairs) = &self.leq {
            let p = FinitePoset::from_pairs(n, pairs)?;
            return Ok(Some(FiniteLattice::from_poset(p)?));
        }
        match (&self.meet, &self.join) {
            (Some(m), Some(j)) => {
                let meet = flat("meet", m, n)?;
                let join = flat("join", j, n)?;
                let l = FiniteLattice::from_meet_table(n, &meet)?;
                let l = FiniteLattice::from_parts(l.poset().clone(), meet, join)?;
                Ok(Some(l))
            }
            _ => Ok(None),
        }
    }

    pub fn to_algebra(&self) -> Result<FiniteAlgebra, IoError> {
        let n = self.size;
        let mut a = match (&self.imp, self.lattice()?) {
            (Some(imp), Some(l)) => FiniteAlgebra::from_lattice(&l, flat("imp", imp, n)?)?,
            (Some(imp), None) => {
                let top = self.top.unwrap_or(n.saturating_sub(1));
                let mut a = FiniteAlgebra::implicative(n, flat("imp", imp, n)?, top)?;
                if let Some(m) = &self.meet {
                    a = a.with_meet(flat("meet", m, n)?)?;
                }
                if let Some(b) = self.bottom {
                    a = a.with_bottom(b)?;
                }
                a
            }
            (None, Some(l)) => {
                let d: ElemSet = self.designated.as_ref().ok_or(IoError::Underdetermined)?.iter().copied().collect();
                let pair = AlgebraPair::new(l, d)?;
                if self.join.is_none() && self.leq.is_none() {
                    build_srs_pair(&pair)?
                } else {
                    build_implication(&pair)?
                }
            }
            (None, None) => {
                // A meet table alone with D: an SRS-pair.
                let m = self.meet.as_ref().ok_or(IoError::Underdetermined)?;
                let d: ElemSet = self.designated.as_ref().ok_or(IoError::Underdetermined)?.iter().copied().collect();
                let l = FiniteLattice::from_meet_table(n, &flat("meet", m, n)?)?;
                build_srs_pair(&AlgebraPair::new(l, d)?)?
            }
        };
        if let Some(t) = self.top {
            if t != a.top() {
                return Err(AlgebraError::ConstantMismatch {
                    which: "top",
                    lattice: a.top(),
                    constant: t,
                }
                .into());
            }
        }
        if let Some(neg) = &self.neg {
            a = a.with_neg(neg.clone())?;
        }
        if let Some(names) = &self.names {
            a = a.with_names(names.clone())?;
        }
        Ok(a)
    }
}

pub fn algebra_from_json(text: &str) -> Result<FiniteAlgebra, IoError> {
    serde_json::from_str::<AlgebraDoc>(text)?.to_algebra()
}

pub fn algebra_to_json(a: &FiniteAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraDoc::from_algebra(a)).expect("documents serialize")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofLineDoc {
    pub formula: String,
    /// `hyp:N`, `axiom:LABEL`, `mp:I,J`, `t:I` or `c:I,J`; indices are 0-based.
    pub rule: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofScript {
    pub calculus: String,
    #[serde(default)]
    pub hypotheses: Vec<String>,
    pub lines: Vec<ProofLineDoc>,
}

impl ProofScript {
    pub fn from_proof(p: &Proof) -> Self {
        ProofScript {
            calculus: p.calculus.as_str().to_string(),
            hypotheses: p.hypotheses.iter().map(ToString::to_string).collect(),
            lines: p
                .lines
                .iter()
                .map(|l| ProofLineDoc {
                    formula: l.formula.to_string(),
                    rule: l.just.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_proof(&self) -> Result<Proof, IoError> {
        let calculus: Calculus = self.calculus.parse()?;
        let hypotheses = self
            .hypotheses
            .iter()
            .enumerate()
            .map(|(index, h)| Formula::parse(h).map_err(|source| IoError::Hypothesis { index, source }))
            .collect::<Result<_, _>>()?;
        let lines = self
            .lines
            .iter()
            .enumerate()
            .map(|(line, l)| {
                Ok(ProofLine {
                    formula: Formula::parse(&l.formula).map_err(|source| IoError::Formula { line, source })?,
                    just: l
                        .rule
                        .parse::<Justification>()
                        .map_err(|source| IoError::Rule { line, source })?,
                })
            })
            .collect::<Result<_, IoError>>()?;
        Ok(Proof {
            calculus,
            hypotheses,
            lines,
        })
    }
}

pub fn proof_from_json(text: &str) -> Result<Proof, IoError> {
    serde_json::from_str::<ProofScript>(text)?.to_proof()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountermodelDoc {
    pub class: String,
    pub formula: String,
    pub algebra: AlgebraDoc,
    pub valuation: std::collections::BTreeMap<String, Elem>,
    pub value: Elem,
    pub value_name: String,
}

impl CountermodelDoc {
    pub fn new(cm: &Countermodel) -> Self {
        CountermodelDoc {
            class: cm.class.to_string(),
            formula: cm.formula.to_string(),
            algebra: AlgebraDoc::from_algebra(&cm.algebra),
            valuation: cm.valuation.map.clone(),
            value: cm.value,
            value_name: cm.algebra.name(cm.value),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculi::proof_corpus;
    use crate::fixtures::{algebra_fixture, FIXTURE_NAMES};

    #[test]
    fn algebra_round_trip() {
        for name in FIXTURE_NAMES {
            let a = algebra_fixture(name).unwrap();
            let text = algebra_to_json(&a);
            assert_eq!(algebra_from_json(&text).unwrap(), a, "{name}");
        }
    }

    #[test]
    fn build_from_lattice_and_d() {
        let doc = r#"{"size": 3, "leq": [[0, 1], [1, 2]], "designated": [0, 2]}"#;
        let a = algebra_from_json(doc).unwrap();
        assert_eq!(a.imp_table(), &[2, 2, 2, 0, 2, 2, 0, 0, 2]);
        let doc = r#"{"size": 3, "meet": [[0,0,0],[0,1,1],[0,1,2]], "designated": [0, 2]}"#;
        let a = algebra_from_json(doc).unwrap();
        assert!(a.join_table().is_none());
        assert_eq!(a.imp(1, 0), 0);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(algebra_from_json("{"), Err(IoError::Json(_))));
        assert!(matches!(
            algebra_from_json(r#"{"size": 2, "imp": [[1, 1], [0]]}"#),
            Err(IoError::Ragged { row: 1, .. })
        ));
        assert!(matches!(
            algebra_from_json(r#"{"size": 2, "imp": [[1, 1], [0, 5]]}"#),
            Err(IoError::Algebra(AlgebraError::OutOfRange { .. }))
        ));
        assert!(matches!(algebra_from_json(r#"{"size": 2}"#), Err(IoError::Underdetermined)));
    }

    #[test]
    fn proof_round_trip() {
        for fx in proof_corpus() {
            let text = serde_json::to_string(&ProofScript::from_proof(&fx.proof)).unwrap();
            let p = proof_from_json(&text).unwrap();
            assert!(p.check().valid, "{}", fx.name);
            assert_eq!(p.calculus, fx.proof.calculus);
        }
        let bad = r#"{"calculus": "R4star", "lines": [{"formula": "a -> a", "rule": "axiom"}]}"#;
        assert!(matches!(proof_from_json(bad), Err(IoError::Rule { line: 0, .. })));
    }
}
