//! Pass/fail reporting with exact witnesses.
//!
//! Every checker returns one `LawReport` per named law, and a failed law
//! carries every violating basis tuple together with the full residual
//! (left side minus right side, expanded in the relevant basis). Nothing is
//! truncated: callers and tests rely on the witness list being complete.

use crate::scalar::{format_scalar, Scalar};
use crate::tensor::{Element2, Element3};
use num::Zero;
use serde::Serialize;

/// Sparse exact residual: (basis multi-index, coefficient) pairs in
/// lexicographic index order.
pub type Residual = Vec<(Vec<usize>, Scalar)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Basis tuple at which the law was instantiated.
    pub indices: Vec<usize>,
    /// LHS - RHS of the law at that tuple, sparse over the ambient basis.
    #[serde(serialize_with = "serialize_residual")]
    pub residual: Residual,
}

fn serialize_residual<S: serde::Serializer>(r: &Residual, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(r.len()))?;
    for (idx, c) in r {
        seq.serialize_element(&(idx, format_scalar(c)))?;
    }
    seq.end()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub pass: bool,
    pub violations: Vec<Violation>,
}

impl LawReport {
    pub fn new(law: &str, violations: Vec<Violation>) -> Self {
        LawReport {
            law: law.to_string(),
            pass: violations.is_empty(),
            violations,
        }
    }

    pub fn passing(law: &str) -> Self {
        LawReport::new(law, Vec::new())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CheckReport {
    pub laws: Vec<LawReport>,
}

impl CheckReport {
    pub fn new(laws: Vec<LawReport>) -> Self {
        CheckReport { laws }
    }

    pub fn pass(&self) -> bool {
        self.laws.iter().all(|l| l.pass)
    }

    pub fn push(&mut self, law: LawReport) {
        self.laws.push(law);
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.laws.extend(other.laws);
    }

    /// Prefixes every law name, for reports assembled from sub-checks.
    pub fn namespaced(mut self, prefix: &str) -> CheckReport {
        for l in &mut self.laws {
            l.law = format!("{prefix}.{}", l.law);
        }
        self
    }

    pub fn law(&self, name: &str) -> Option<&LawReport> {
        self.laws.iter().find(|l| l.law == name)
    }
}

/// Collects a residual vector into sparse witness form; empty means the law
/// holds at this tuple.
pub fn residual_from_vec(v: &[Scalar]) -> Residual {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (vec![k], x.clone()))
        .collect()
}

pub fn residual_from_pairs(entries: &[(usize, usize, Scalar)]) -> Residual {
    entries
        .iter()
        .map(|(i, j, x)| (vec![*i, *j], x.clone()))
        .collect()
}

pub fn residual_from_triples(entries: &[(usize, usize, usize, Scalar)]) -> Residual {
    entries
        .iter()
        .map(|(i, j, k, x)| (vec![*i, *j, *k], x.clone()))
        .collect()
}

// One law instantiation each: Some(witness) exactly when the residual is
// nonzero, with the residual rank in the name.

pub(crate) fn violation1(indices: Vec<usize>, v: &[Scalar]) -> Option<Violation> {
    if v.iter().all(Scalar::is_zero) {
        None
    } else {
        Some(Violation {
            indices,
            residual: residual_from_vec(v),
        })
    }
}

pub(crate) fn violation2(indices: Vec<usize>, e: &Element2) -> Option<Violation> {
    if e.is_zero() {
        None
    } else {
        Some(Violation {
            indices,
            residual: residual_from_pairs(&e.entries()),
        })
    }
}

pub(crate) fn violation3(indices: Vec<usize>, e: &Element3) -> Option<Violation> {
    if e.is_zero() {
        None
    } else {
        Some(Violation {
            indices,
            residual: residual_from_triples(&e.entries()),
        })
    }
}
