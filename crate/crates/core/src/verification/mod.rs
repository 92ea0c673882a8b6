//! Executable checkers for the extremal theorems and their supporting lemmas.
//!
//! Theorem checkers enumerate a class exhaustively, evaluate one invariant on
//! every member and compare the extremum with the claimed construction.
//! Lemma suites evaluate both sides of each inequality on concrete instances.
//! Either way the outcome is a [`Verdict`].

mod counterexamples;
pub mod corpus;
mod formulas;
mod lemmas;
mod theorems;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::canon::CanonicalKey;
use crate::error::{Error, Result};
use crate::graph::{Graph, SegmentSequence};
use crate::invariants::Invariant;

pub use counterexamples::{reproduce_counterexamples, CounterexampleReport, ReproCheck};
pub use formulas::{formula_audit, FormulaCheck};
pub use lemmas::check_lemma;
pub use theorems::{admissible_params, admissible_segment_sequences, check_theorem, check_theorem_with_workers};

pub(crate) fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

macro_rules! ids {
    ($($variant:ident => $name:literal, $short:literal;)*) => {
        /// Theorem and lemma identifiers.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }

            fn short(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $short,)*
                }
            }
        }
    };
}

ids! {
    T1Uni => "T1_uni", "T1";
    T2Girth => "T2_girth", "T2";
    T3SubtreeSegseq => "T3_subtree_segseq", "T3";
    T4ShortSubtree => "T4_short_subtree", "T4";
    T5SegnumSubtree => "T5_segnum_subtree", "T5";
    T6SigmaSegseq => "T6_sigma_segseq", "T6";
    T7ShortSigma => "T7_short_sigma", "T7";
    T8SegnumSigma => "T8_segnum_sigma", "T8";
    L2_3 => "L2_3", "L2_3";
    L3_1 => "L3_1", "L3_1";
    L3_2 => "L3_2", "L3_2";
    L3_3 => "L3_3", "L3_3";
    L3_4 => "L3_4", "L3_4";
    L3_5 => "L3_5", "L3_5";
    L3_6 => "L3_6", "L3_6";
    L3_7 => "L3_7", "L3_7";
    R3_8 => "R3_8", "R3_8";
    L4_1 => "L4_1", "L4_1";
    L4_2 => "L4_2", "L4_2";
    L4_3 => "L4_3", "L4_3";
    L4_4 => "L4_4", "L4_4";
    L4_5 => "L4_5", "L4_5";
    L4_6 => "L4_6", "L4_6";
    MergeIdentity => "merge_identity", "merge_identity";
}

impl TheoremId {
    pub fn is_theorem(self) -> bool {
        self.as_str().starts_with('T')
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    /// Accepts the full identifier or its short form (`T3`), any case.
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s) || id.short().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::OutOfRange(format!("unknown theorem or lemma identifier {s:?}")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Checker parameters. Each checker reads the fields it needs and rejects
/// missing ones.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub girth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub segments: Option<SegmentSequence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub segment_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
}

impl Params {
    pub fn order(n: usize) -> Self {
        Params { n: Some(n), ..Default::default() }
    }

    pub fn girth(n: usize, girth: usize) -> Self {
        Params { n: Some(n), girth: Some(girth), ..Default::default() }
    }

    pub fn segments(seq: SegmentSequence) -> Self {
        Params { segments: Some(seq), ..Default::default() }
    }

    pub fn segment_count(n: usize, m: usize) -> Self {
        Params { n: Some(n), segment_count: Some(m), ..Default::default() }
    }

    pub(crate) fn need_n(&self, id: TheoremId) -> Result<usize> {
        self.n.ok_or_else(|| Error::HypothesisViolated(format!("{id} needs n")))
    }

    pub(crate) fn need_segments(&self, id: TheoremId) -> Result<&SegmentSequence> {
        self.segments.as_ref().ok_or_else(|| Error::HypothesisViolated(format!("{id} needs a segment sequence")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FindingKind {
    /// An expression quoted from a proof disagrees with exact computation.
    FormulaDiscrepancy,
    /// Several classes attain the extremum.
    CoExtremal,
    /// Which member attains an existential claim.
    Witness,
    /// A strictness or equality clause fails only on a degenerate instance.
    Degenerate,
    /// Engine and brute-force oracle disagree.
    OracleMismatch,
    /// A result depends on a labelling or membership convention.
    Convention,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub kind: FindingKind,
    pub detail: String,
}

impl Finding {
    pub fn new(kind: FindingKind, detail: impl Into<String>) -> Self {
        Finding { kind, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph: Graph,
    #[serde(serialize_with = "decimal")]
    pub expected: BigUint,
    #[serde(serialize_with = "decimal")]
    pub actual: BigUint,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Max,
    Min,
}

/// One extremal claim over a class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extremum {
    pub sense: Sense,
    pub invariant: Invariant,
    #[serde(serialize_with = "decimal")]
    pub value: BigUint,
    pub claimed: CanonicalKey,
    pub achieved_by: Vec<CanonicalKey>,
    pub attained: bool,
}

/// Outcome of a theorem check or lemma suite.
///
/// For theorems, `extremal_value`, `claimed` and `achieved_by` describe the
/// primary claim and `also` holds any further one (the lower bound of a
/// two-sided theorem). For lemma suites `class_size` counts the instances
/// evaluated, `extremal_value` is zero and `claimed` is absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub theorem: TheoremId,
    pub params: Params,
    pub holds: bool,
    pub class_size: usize,
    #[serde(serialize_with = "decimal")]
    pub extremal_value: BigUint,
    pub claimed: Option<CanonicalKey>,
    pub achieved_by: Vec<CanonicalKey>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub findings: Vec<Finding>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub also: Vec<Extremum>,
}

impl Verdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serializes")
    }

    pub fn has_finding(&self, kind: FindingKind) -> bool {
        self.findings.iter().any(|f| f.kind == kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_parse_and_print() {
        assert_eq!("T3".parse::<TheoremId>().unwrap(), TheoremId::T3SubtreeSegseq);
        assert_eq!("t6_sigma_segseq".parse::<TheoremId>().unwrap(), TheoremId::T6SigmaSegseq);
        assert_eq!("merge_identity".parse::<TheoremId>().unwrap(), TheoremId::MergeIdentity);
        assert!("T9".parse::<TheoremId>().is_err());
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), *id);
        }
        assert!(TheoremId::T8SegnumSigma.is_theorem());
        assert!(!TheoremId::R3_8.is_theorem());
    }
}
