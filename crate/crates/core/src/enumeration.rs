//! Isomorphism-free generation of trees and unicyclic graphs.
//!
//! Trees of order `n` come from adding a leaf to every tree of order `n − 1`;
//! unicyclic graphs from adding one edge to every tree of the same order. Both
//! deduplicate on the canonical key and emit canonical forms in ascending key
//! order. Results are cached per order for the life of the process.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::canon::{canonical_form, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::{Graph, SegmentSequence};

pub const MAX_TREE_ORDER: usize = 12;
pub const MAX_UNICYCLIC_ORDER: usize = 11;

/// One isomorphism class: its key and canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub key: CanonicalKey,
    pub graph: Graph,
}

fn collect(graphs: impl IntoIterator<Item = Graph>) -> Vec<Member> {
    let mut classes = BTreeMap::new();
    for g in graphs {
        let (key, graph) = canonical_form(&g).expect("order within canonical bound");
        classes.entry(key).or_insert(graph);
    }
    classes.into_iter().map(|(key, graph)| Member { key, graph }).collect()
}

static TREES: [OnceLock<Vec<Member>>; MAX_TREE_ORDER + 1] = [const { OnceLock::new() }; MAX_TREE_ORDER + 1];
static UNICYCLIC: [OnceLock<Vec<Member>>; MAX_UNICYCLIC_ORDER + 1] = [const { OnceLock::new() }; MAX_UNICYCLIC_ORDER + 1];

fn tree_members(n: usize) -> &'static [Member] {
    TREES[n].get_or_init(|| {
        if n == 1 {
            return collect([Graph::empty(1)]);
        }
        let smaller = tree_members(n - 1);
        collect(smaller.iter().flat_map(|m| {
            (0..n - 1).map(move |v| m.graph.merge_vertices(v, &Graph::new(2, &[(0, 1)]).unwrap(), 0).unwrap())
        }))
    })
}

/// One representative per isomorphism class of `n`-vertex trees.
pub fn trees(n: usize) -> Result<Vec<Member>> {
    if n == 0 {
        return Err(Error::OutOfRange("trees need at least one vertex".into()));
    }
    if n > MAX_TREE_ORDER {
        return Err(Error::TooLarge(format!("tree generation supports n <= {MAX_TREE_ORDER}, got {n}")));
    }
    Ok(tree_members(n).to_vec())
}

fn unicyclic_members(n: usize) -> &'static [Member] {
    UNICYCLIC[n].get_or_init(|| {
        let trees = tree_members(n);
        collect(trees.iter().flat_map(|m| {
            let g = &m.graph;
            (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| !g.has_edge(u, v)).map(move |v| g.add_edge(u, v).unwrap()))
        }))
    })
}

/// Predicate bundle describing a class of unicyclic graphs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClassFilter {
    pub order: usize,
    pub girth: Option<usize>,
    pub segment_sequence: Option<SegmentSequence>,
    pub segment_count: Option<usize>,
}

impl ClassFilter {
    pub fn order(order: usize) -> Self {
        ClassFilter { order, ..Default::default() }
    }

    pub fn with_girth(order: usize, girth: usize) -> Self {
        ClassFilter { order, girth: Some(girth), ..Default::default() }
    }

    /// `𝕌(l_1, …, l_m)`; the order is the sum of the lengths.
    pub fn segments(seq: SegmentSequence) -> Self {
        ClassFilter { order: seq.total(), segment_sequence: Some(seq), ..Default::default() }
    }

    /// `𝕌_{n,m}`.
    pub fn segment_count(order: usize, count: usize) -> Self {
        ClassFilter { order, segment_count: Some(count), ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.segment_sequence.is_some() && self.segment_count.is_some() {
            return Err(Error::InfeasibleFilter("set either a segment sequence or a segment count, not both".into()));
        }
        if let Some(seq) = &self.segment_sequence {
            if seq.total() != self.order {
                return Err(Error::InfeasibleFilter(format!("segments {seq} sum to {} but order is {}", seq.total(), self.order)));
            }
        }
        if self.order < 3 {
            return Err(Error::InfeasibleFilter(format!("no unicyclic graph has {} vertices", self.order)));
        }
        if self.order > MAX_UNICYCLIC_ORDER {
            return Err(Error::TooLarge(format!("unicyclic generation supports order <= {MAX_UNICYCLIC_ORDER}, got {}", self.order)));
        }
        if let Some(l) = self.girth {
            if l < 3 || l > self.order {
                return Err(Error::InfeasibleFilter(format!("girth {l} impossible at order {}", self.order)));
            }
        }
        Ok(())
    }

    pub fn matches(&self, g: &Graph) -> bool {
        if g.vertex_count() != self.order || !g.is_unicyclic() {
            return false;
        }
        if let Some(l) = self.girth {
            if g.cycle_info().map(|c| c.girth) != Ok(l) {
                return false;
            }
        }
        if self.segment_sequence.is_some() || self.segment_count.is_some() {
            let seq = g.segment_sequence().expect("unicyclic");
            if self.segment_sequence.as_ref().is_some_and(|s| *s != seq) {
                return false;
            }
            if self.segment_count.is_some_and(|m| m != seq.len()) {
                return false;
            }
        }
        true
    }
}

/// Every unicyclic isomorphism class satisfying `filter`, ascending by key.
pub fn unicyclic(filter: &ClassFilter) -> Result<Vec<Member>> {
    filter.validate()?;
    Ok(unicyclic_members(filter.order).iter().filter(|m| filter.matches(&m.graph)).cloned().collect())
}

pub fn class_count(filter: &ClassFilter) -> Result<usize> {
    filter.validate()?;
    Ok(unicyclic_members(filter.order).iter().filter(|m| filter.matches(&m.graph)).count())
}

/// Independent generator: every labelled graph with `n` vertices and `n`
/// edges that is connected, reduced to classes. Exponential; meant for
/// cross-checking at `n <= 7`.
pub fn unicyclic_brute_force(n: usize) -> Result<Vec<Member>> {
    if !(3..=7).contains(&n) {
        return Err(Error::TooLarge(format!("brute-force generation supports 3 <= n <= 7, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut found = Vec::new();
    let mut chosen = Vec::with_capacity(n);
    fn rec(pairs: &[(usize, usize)], start: usize, need: usize, n: usize, chosen: &mut Vec<(usize, usize)>, out: &mut Vec<Graph>) {
        if need == 0 {
            let g = Graph::new(n, chosen).expect("distinct pairs");
            if g.is_connected() {
                out.push(g);
            }
            return;
        }
        for i in start..=pairs.len() - need {
            chosen.push(pairs[i]);
            rec(pairs, i + 1, need - 1, n, chosen, out);
            chosen.pop();
        }
    }
    rec(&pairs, 0, n, n, &mut chosen, &mut found);
    Ok(collect(found))
}

/// Independent tree generator: decode every Prüfer sequence of length
/// `n − 2` and reduce to classes.
pub fn trees_brute_force(n: usize) -> Result<Vec<Member>> {
    if !(1..=8).contains(&n) {
        return Err(Error::TooLarge(format!("Prüfer enumeration supports 1 <= n <= 8, got {n}")));
    }
    if n <= 2 {
        return Ok(collect([Graph::new(n, if n == 2 { &[(0, 1)] } else { &[] }).unwrap()]));
    }
    let total = n.pow((n - 2) as u32);
    let mut graphs = Vec::with_capacity(total);
    let mut seq = vec![0usize; n - 2];
    for code in 0..total {
        let mut c = code;
        for s in seq.iter_mut() {
            *s = c % n;
            c /= n;
        }
        graphs.push(prufer_decode(&seq, n));
    }
    Ok(collect(graphs))
}

pub(crate) fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).expect("Prüfer decoding yields a tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tree_counts() {
        assert_eq!(trees(1).unwrap().len(), 1);
        assert_eq!(trees(4).unwrap().len(), 2);
        assert_eq!(trees(7).unwrap().len(), 11);
        assert!(matches!(trees(13), Err(Error::TooLarge(_))));
    }

    #[test]
    fn small_unicyclic_counts() {
        assert_eq!(class_count(&ClassFilter::order(3)).unwrap(), 1);
        assert_eq!(class_count(&ClassFilter::order(4)).unwrap(), 2);
        assert_eq!(class_count(&ClassFilter::with_girth(5, 5)).unwrap(), 1);
    }

    #[test]
    fn filter_validation() {
        let both = ClassFilter {
            order: 6,
            segment_sequence: Some("3,3".parse().unwrap()),
            segment_count: Some(2),
            ..Default::default()
        };
        assert!(matches!(unicyclic(&both), Err(Error::InfeasibleFilter(_))));
        assert!(matches!(unicyclic(&ClassFilter::with_girth(5, 6)), Err(Error::InfeasibleFilter(_))));
        assert!(matches!(unicyclic(&ClassFilter::order(12)), Err(Error::TooLarge(_))));
        let wrong_sum = ClassFilter { order: 7, segment_sequence: Some("3,3".parse().unwrap()), ..Default::default() };
        assert!(matches!(unicyclic(&wrong_sum), Err(Error::InfeasibleFilter(_))));
    }

    #[test]
    fn prufer_decode_star() {
        let g = prufer_decode(&[0, 0, 0], 5);
        assert_eq!(g.degree(0), 4);
    }
}
