//! Exact subtree counts, Wiener index, Merrifield-Simmons index and Hosoya
//! index for trees and unicyclic graphs, constructors for the extremal
//! unicyclic families, isomorphism-free class enumeration, and executable
//! checkers for the extremal results over those classes.

pub mod canon;
pub mod correlate;
pub mod edgelist;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod parallel;
pub mod verification;

pub use canon::{canonical_form, canonical_key, is_isomorphic, CanonicalKey};
pub use enumeration::{class_count, trees, unicyclic, ClassFilter, Member};
pub use error::{Error, Result};
pub use graph::{CycleInfo, Graph, SegmentSequence};
pub use invariants::{
    hosoya, invariant_bundle, merrifield_simmons, rooted_subtree_count, rooted_subtree_profile, subtree_count,
    subtree_profile, wiener, Anchor, Invariant, InvariantBundle, SubtreeProfile,
};
