//! Deterministic instance corpora for the lemma suites and the randomized
//! cross-checks.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::canonical_form;
use crate::enumeration::prufer_decode;
use crate::graph::Graph;

pub const DEFAULT_SEED: u64 = 20_240_611;

/// One representative of every connected graph with `1..=max_n` vertices,
/// ordered by vertex count and then canonical key.
pub fn small_connected_graphs(max_n: usize) -> Vec<Graph> {
    assert!(max_n <= 6, "exhaustive connected-graph listing is capped at 6 vertices");
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut classes = BTreeMap::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::new(n, &edges).expect("distinct pairs");
            if g.is_connected() {
                let (key, canon) = canonical_form(&g).expect("small graph");
                classes.entry(key).or_insert(canon);
            }
        }
        out.extend(classes.into_values());
    }
    out
}

/// Uniform random labelled tree on `n` vertices (uniform Prüfer sequence).
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    match n {
        0 | 1 => Graph::empty(n),
        2 => Graph::new(2, &[(0, 1)]).unwrap(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            prufer_decode(&seq, n)
        }
    }
}

/// A random tree on `n >= 3` vertices plus one random non-edge.
pub fn random_unicyclic<R: Rng>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 3, "a unicyclic graph needs three vertices");
    let t = random_tree(rng, n);
    let non_edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !t.has_edge(u, v)).collect();
    let (u, v) = non_edges[rng.random_range(0..non_edges.len())];
    t.add_edge(u, v).unwrap()
}

/// Random trees with `2..=max_n` vertices.
pub fn random_trees(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=max_n);
            random_tree(&mut rng, n)
        })
        .collect()
}

/// Every connected graph on at most five vertices followed by fifty seeded
/// random trees on at most eight.
pub fn seeded_corpus(seed: u64) -> Vec<Graph> {
    let mut graphs = small_connected_graphs(5);
    graphs.extend(random_trees(50, 8, seed));
    graphs
}

/// Alternating random trees and unicyclic graphs with `3..=max_n` vertices.
pub fn random_instances(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.random_range(3..=max_n);
            if i % 2 == 0 {
                random_tree(&mut rng, n)
            } else {
                random_unicyclic(&mut rng, n)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        // 1, 1, 2, 6, 21 connected graphs on 1..=5 vertices
        assert_eq!(small_connected_graphs(5).len(), 31);
    }

    #[test]
    fn corpus_is_deterministic() {
        assert_eq!(seeded_corpus(7), seeded_corpus(7));
        assert_eq!(seeded_corpus(DEFAULT_SEED).len(), 81);
        assert!(random_trees(50, 8, 1).iter().all(|t| t.is_tree() && t.vertex_count() <= 8));
    }

    #[test]
    fn random_instances_have_expected_shape() {
        let inst = random_instances(40, 12, 3);
        for (i, g) in inst.iter().enumerate() {
            assert!(g.vertex_count() <= 12);
            assert!(if i % 2 == 0 { g.is_tree() } else { g.is_unicyclic() });
        }
    }
}
