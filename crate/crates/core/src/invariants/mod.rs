//! Exact graph invariants: subtree counts (total, per size, anchored), the
//! Wiener index, and the Merrifield-Simmons and Hosoya indices, each paired
//! with a definition-level oracle in [`oracle`].

pub mod closed_form;
mod indices;
pub mod oracle;
mod subtrees;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;

pub use closed_form::closed_form;
pub use indices::{hosoya, merrifield_simmons, wiener};
pub use subtrees::{rooted_subtree_count, rooted_subtree_profile, subtree_count, subtree_profile, Anchor};

/// Exact counts `n_k(G)` for `k = 0..=|V|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeProfile {
    counts: Vec<BigUint>,
}

impl SubtreeProfile {
    pub fn new(counts: Vec<BigUint>) -> Self {
        SubtreeProfile { counts }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `n_k`, zero beyond the graph order.
    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl Serialize for SubtreeProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.counts.iter().map(|c| c.to_string()))
    }
}

/// The four indices of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBundle {
    pub subtree_total: BigUint,
    pub wiener: BigUint,
    pub merrifield_simmons: BigUint,
    pub hosoya: BigUint,
}

pub fn invariant_bundle(g: &Graph) -> Result<InvariantBundle> {
    Ok(InvariantBundle {
        subtree_total: subtree_count(g)?,
        wiener: wiener(g)?,
        merrifield_simmons: merrifield_simmons(g),
        hosoya: hosoya(g),
    })
}

/// Selector for the index a checker or table is driven by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Subtrees,
    Wiener,
    Sigma,
    Hosoya,
}

impl Invariant {
    pub fn evaluate(self, g: &Graph) -> Result<BigUint> {
        match self {
            Invariant::Subtrees => subtree_count(g),
            Invariant::Wiener => wiener(g),
            Invariant::Sigma => Ok(merrifield_simmons(g)),
            Invariant::Hosoya => Ok(hosoya(g)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Subtrees => "subtrees",
            Invariant::Wiener => "wiener",
            Invariant::Sigma => "sigma",
            Invariant::Hosoya => "hosoya",
        }
    }
}
