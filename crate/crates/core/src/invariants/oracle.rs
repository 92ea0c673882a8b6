//! Definition-level enumerators used to cross-check the fast routines. Each
//! walks every vertex or edge subset, so inputs are capped at 22 elements.

use num_bigint::BigUint;

use super::subtrees::Anchor;
use super::SubtreeProfile;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_LIMIT: usize = 22;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// For every edge subset that forms a tree, report (vertex mask, edge mask).
fn for_each_tree_edge_set(g: &Graph, mut visit: impl FnMut(u32, u32)) -> Result<()> {
    let edges = g.edges();
    if edges.len() > ORACLE_LIMIT || g.vertex_count() > 32 {
        return Err(Error::TooLarge(format!("subtree oracle handles at most {ORACLE_LIMIT} edges")));
    }
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    'subsets: for mask in 1u32..(1u32 << edges.len()) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut vmask = 0u32;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                continue 'subsets;
            }
            parent[a] = b;
            vmask |= 1 << u | 1 << v;
        }
        // acyclic with |V| = |E| + 1 means connected
        if vmask.count_ones() == mask.count_ones() + 1 {
            visit(vmask, mask);
        }
    }
    Ok(())
}

/// `n_k(G)` by enumerating edge subsets: a subset counts iff it is a tree.
/// The empty subtree and the single vertices are added directly.
pub fn subtree_count_oracle(g: &Graph) -> Result<SubtreeProfile> {
    let n = g.vertex_count();
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    if n >= 1 {
        counts[1] = n as u64;
    }
    for_each_tree_edge_set(g, |vmask, _| counts[vmask.count_ones() as usize] += 1)?;
    Ok(SubtreeProfile::new(counts.into_iter().map(BigUint::from).collect()))
}

/// `n_k(A, G)` by enumeration.
pub fn rooted_subtree_oracle(g: &Graph, anchors: &[Anchor]) -> Result<SubtreeProfile> {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut need_v = 0u32;
    let mut need_e = 0u32;
    for &a in anchors {
        match a {
            Anchor::Vertex(v) if v < n => need_v |= 1 << v,
            Anchor::Edge(u, v) => {
                let key = (u.min(v), u.max(v));
                let i = edges.iter().position(|&e| e == key).ok_or(Error::AnchorNotInGraph)?;
                need_e |= 1 << i;
            }
            _ => return Err(Error::AnchorNotInGraph),
        }
    }
    let mut counts = vec![0u64; n + 1];
    if need_e == 0 && need_v.count_ones() == 1 {
        counts[1] = 1;
    }
    for_each_tree_edge_set(g, |vmask, emask| {
        if vmask & need_v == need_v && emask & need_e == need_e {
            counts[vmask.count_ones() as usize] += 1;
        }
    })?;
    Ok(SubtreeProfile::new(counts.into_iter().map(BigUint::from).collect()))
}

/// Independent vertex subsets, by testing every subset.
pub fn sigma_oracle(g: &Graph) -> Result<BigUint> {
    let n = g.vertex_count();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge(format!("sigma oracle handles at most {ORACLE_LIMIT} vertices")));
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let count = (0u32..(1u32 << n))
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .count();
    Ok(BigUint::from(count))
}

/// Matchings, by testing every edge subset.
pub fn hosoya_oracle(g: &Graph) -> Result<BigUint> {
    let edges = g.edges();
    if edges.len() > ORACLE_LIMIT || g.vertex_count() > 64 {
        return Err(Error::TooLarge(format!("hosoya oracle handles at most {ORACLE_LIMIT} edges")));
    }
    let count = (0u32..(1u32 << edges.len()))
        .filter(|&s| {
            let mut used = 0u64;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if s >> i & 1 == 1 {
                    let m = 1u64 << u | 1u64 << v;
                    if used & m != 0 {
                        return false;
                    }
                    used |= m;
                }
            }
            true
        })
        .count();
    Ok(BigUint::from(count))
}

/// Sum of pairwise distances via Floyd-Warshall, independent of the BFS route.
pub fn wiener_oracle(g: &Graph) -> Result<BigUint> {
    let n = g.vertex_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    let mut total = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            if d[i][j] >= inf {
                return Err(Error::Disconnected);
            }
            total += d[i][j];
        }
    }
    Ok(BigUint::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn tiny_cases() {
        assert_eq!(sigma_oracle(&Graph::empty(1)).unwrap(), BigUint::from(2u32));
        assert_eq!(hosoya_oracle(&Graph::empty(1)).unwrap(), BigUint::from(1u32));
        assert_eq!(sigma_oracle(&path(3).disjoint_union(&path(3))).unwrap(), BigUint::from(25u32));
        assert_eq!(hosoya_oracle(&path(4)).unwrap(), BigUint::from(5u32));
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(sigma_oracle(&c4).unwrap(), BigUint::from(7u32));
    }

    #[test]
    fn limits() {
        assert!(matches!(sigma_oracle(&Graph::empty(23)), Err(Error::TooLarge(_))));
        assert!(matches!(subtree_count_oracle(&path(24)), Err(Error::TooLarge(_))));
    }

    #[test]
    fn rooted_oracle_single_vertex_anchor() {
        let p = rooted_subtree_oracle(&path(3), &[Anchor::Vertex(0)]).unwrap();
        assert_eq!(p.total(), BigUint::from(3u32));
        let p = rooted_subtree_oracle(&path(3), &[Anchor::Edge(1, 2)]).unwrap();
        assert_eq!(p.total(), BigUint::from(2u32));
    }
}
