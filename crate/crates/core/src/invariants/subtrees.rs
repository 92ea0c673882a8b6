//! Subtree counting by size.
//!
//! On a tree, `f_v(x) = x · Π_children (1 + f_c(x))` counts the subtrees whose
//! topmost vertex is `v`. A unicyclic graph splits along one cycle edge `e`:
//! subtrees avoiding `e` are subtrees of the tree `G − e`, and a subtree using
//! `e` meets the cycle in a contiguous arc through `e` (never the whole cycle),
//! so it is an arc together with a rooted choice in each arc vertex's pendant
//! tree.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::oracle;
use super::SubtreeProfile;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Something a subtree may be required to contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Anchor {
    Vertex(usize),
    Edge(usize, usize),
}

type Poly = Vec<BigUint>;

fn poly_mul(a: &[BigUint], b: &[BigUint]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_assign(a: &mut Poly, b: &[BigUint]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigUint::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

fn one_plus(p: &[BigUint]) -> Poly {
    let mut q = p.to_vec();
    if q.is_empty() {
        q.push(BigUint::one());
    } else {
        q[0] += 1u32;
    }
    q
}

/// x · p
fn shift(p: Poly) -> Poly {
    let mut q = Vec::with_capacity(p.len() + 1);
    q.push(BigUint::zero());
    q.extend(p);
    q
}

/// DFS orientation of the component of `root` in a forest.
struct Rooted {
    order: Vec<usize>,
    children: Vec<Vec<usize>>,
    down: Vec<Poly>,
}

fn orient(adj: &[Vec<usize>], root: usize) -> Rooted {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut children = vec![Vec::new(); n];
    let mut order = vec![root];
    let mut visited = vec![false; n];
    visited[root] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &w in &adj[u] {
            if !visited[w] {
                visited[w] = true;
                parent[w] = u;
                children[u].push(w);
                order.push(w);
            }
        }
    }
    let mut down: Vec<Poly> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut acc: Poly = vec![BigUint::one()];
        for &c in &children[u] {
            acc = poly_mul(&acc, &one_plus(&down[c]));
        }
        down[u] = shift(acc);
    }
    Rooted { order, children, down }
}

/// Subtrees of the forest component containing `root` that contain `root` and
/// every marked vertex of that component.
fn anchored_at(adj: &[Vec<usize>], root: usize, marked: &[bool]) -> Poly {
    let r = orient(adj, root);
    let mut needed = vec![false; adj.len()];
    for &u in r.order.iter().rev() {
        needed[u] = marked[u] || r.children[u].iter().any(|&c| needed[c]);
    }
    needed[root] = true;
    let mut acc: Poly = vec![BigUint::one()];
    for &u in &r.order {
        if !needed[u] {
            continue;
        }
        let mut local: Poly = vec![BigUint::zero(), BigUint::one()];
        for &c in r.children[u].iter().filter(|&&c| !needed[c]) {
            local = poly_mul(&local, &one_plus(&r.down[c]));
        }
        acc = poly_mul(&acc, &local);
    }
    acc
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect()
}

/// Nonempty subtrees of a tree containing every marked vertex.
fn tree_poly(adj: &[Vec<usize>], marked: &[bool]) -> Poly {
    match marked.iter().position(|&b| b) {
        Some(root) => anchored_at(adj, root, marked),
        None if adj.is_empty() => Vec::new(),
        None => {
            let r = orient(adj, 0);
            let mut total = Vec::new();
            for p in &r.down {
                poly_add_assign(&mut total, p);
            }
            total
        }
    }
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Nonempty subtrees of a connected tree or unicyclic graph containing every
/// marked vertex and every listed edge.
fn anchored_poly(g: &Graph, marked_in: &[bool], edges: &BTreeSet<(usize, usize)>) -> Poly {
    let mut marked = marked_in.to_vec();
    for &(u, v) in edges {
        marked[u] = true;
        marked[v] = true;
    }
    if g.is_tree() {
        return tree_poly(&adjacency(g), &marked);
    }
    let info = g.cycle_info().expect("caller checked unicyclic");
    let len = info.girth;
    let cyc = info.cycle;
    let cycle_edge = |j: usize| norm(cyc[j % len], cyc[(j + 1) % len]);
    let Some(free) = (0..len).find(|&j| !edges.contains(&cycle_edge(j))) else {
        return Vec::new();
    };
    let cyc: Vec<usize> = (0..len).map(|i| cyc[(free + i) % len]).collect();
    let cycle_edge = |j: usize| norm(cyc[j % len], cyc[(j + 1) % len]);

    let without_e = g.delete_edge(cyc[0], cyc[1]).expect("cycle edge exists");
    let mut total = tree_poly(&adjacency(&without_e), &marked);

    let cycle_edges: BTreeSet<_> = (0..len).map(cycle_edge).collect();
    let mut forest = adjacency(g);
    for &(u, v) in &cycle_edges {
        forest[u].retain(|&w| w != v);
        forest[v].retain(|&w| w != u);
    }
    let mut owner = vec![usize::MAX; g.vertex_count()];
    for (pos, &c) in cyc.iter().enumerate() {
        let mut stack = vec![c];
        owner[c] = pos;
        while let Some(u) = stack.pop() {
            for &w in &forest[u] {
                if owner[w] == usize::MAX {
                    owner[w] = pos;
                    stack.push(w);
                }
            }
        }
    }
    let mut required_pos = vec![false; len];
    for v in (0..g.vertex_count()).filter(|&v| marked[v]) {
        required_pos[owner[v]] = true;
    }
    let required_edges: Vec<usize> = (0..len).filter(|&j| edges.contains(&cycle_edge(j))).collect();
    let rooted: Vec<Poly> = (0..len).map(|pos| anchored_at(&forest, cyc[pos], &marked)).collect();

    for arc_len in 2..=len {
        for back in 0..=arc_len - 2 {
            let start = len - back;
            let covers_pos = |p: usize| (p + back) % len < arc_len;
            let covers_edge = |j: usize| (j + back) % len < arc_len - 1;
            if (0..len).any(|p| required_pos[p] && !covers_pos(p)) || required_edges.iter().any(|&j| !covers_edge(j)) {
                continue;
            }
            let mut prod: Poly = vec![BigUint::one()];
            for t in 0..arc_len {
                prod = poly_mul(&prod, &rooted[(start + t) % len]);
            }
            poly_add_assign(&mut total, &prod);
        }
    }
    total
}

fn finish(mut poly: Poly, n: usize, include_empty: bool) -> SubtreeProfile {
    poly.resize(n + 1, BigUint::zero());
    poly[0] = if include_empty { BigUint::one() } else { BigUint::zero() };
    SubtreeProfile::new(poly)
}

/// `n_k(G)` for every `k`, including the empty subtree at `k = 0`.
///
/// Trees and unicyclic graphs use the polynomial recursion; any other
/// connected graph falls back to edge-subset enumeration.
pub fn subtree_profile(g: &Graph) -> Result<SubtreeProfile> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(finish(Vec::new(), 0, true));
    }
    if g.is_tree() || g.is_unicyclic() {
        Ok(finish(anchored_poly(g, &vec![false; n], &BTreeSet::new()), n, true))
    } else {
        oracle::subtree_count_oracle(g)
    }
}

pub fn subtree_count(g: &Graph) -> Result<BigUint> {
    subtree_profile(g).map(|p| p.total())
}

/// `n_k(A, G)`: subtrees containing every anchor. `counts[0]` is zero.
pub fn rooted_subtree_profile(g: &Graph, anchors: &[Anchor]) -> Result<SubtreeProfile> {
    if anchors.is_empty() {
        return Err(Error::OutOfRange("anchor set must be nonempty".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut marked = vec![false; n];
    let mut edges = BTreeSet::new();
    for &a in anchors {
        match a {
            Anchor::Vertex(v) if v < n => marked[v] = true,
            Anchor::Edge(u, v) if g.has_edge(u, v) => {
                edges.insert(norm(u, v));
            }
            _ => return Err(Error::AnchorNotInGraph),
        }
    }
    if g.is_tree() || g.is_unicyclic() {
        Ok(finish(anchored_poly(g, &marked, &edges), n, false))
    } else {
        oracle::rooted_subtree_oracle(g, anchors)
    }
}

pub fn rooted_subtree_count(g: &Graph, anchors: &[Anchor]) -> Result<BigUint> {
    rooted_subtree_profile(g, anchors).map(|p| p.total())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn path_profile() {
        let p = subtree_profile(&path(4)).unwrap();
        let expected: Vec<BigUint> = [1u64, 4, 3, 2, 1].into_iter().map(big).collect();
        assert_eq!(p.counts(), expected.as_slice());
        assert_eq!(p.total(), big(11));
    }

    #[test]
    fn cycle_profile() {
        let p = subtree_profile(&cycle(5)).unwrap();
        assert!((1..=5).all(|k| p.get(k) == big(5)));
        assert_eq!(p.total(), big(26));
    }

    #[test]
    fn star_profile() {
        let s5 = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let p = subtree_profile(&s5).unwrap();
        assert_eq!(p.get(3), big(6));
        assert_eq!(p.total(), big(21));
    }

    #[test]
    fn rooted_counts_on_cycle() {
        assert_eq!(rooted_subtree_count(&cycle(5), &[Anchor::Vertex(3)]).unwrap(), big(15));
        // all cycle edges anchored: no subtree can contain them
        let c4 = cycle(4);
        let all: Vec<Anchor> = c4.edges().into_iter().map(|(u, v)| Anchor::Edge(u, v)).collect();
        assert_eq!(rooted_subtree_count(&c4, &all).unwrap(), big(0));
        // three of four edges: exactly the spanning path
        assert_eq!(rooted_subtree_count(&c4, &all[..3]).unwrap(), big(1));
    }

    #[test]
    fn anchor_errors() {
        let c4 = cycle(4);
        assert_eq!(rooted_subtree_count(&c4, &[Anchor::Vertex(7)]), Err(Error::AnchorNotInGraph));
        assert_eq!(rooted_subtree_count(&c4, &[Anchor::Edge(0, 2)]), Err(Error::AnchorNotInGraph));
        assert!(rooted_subtree_count(&c4, &[]).is_err());
        assert_eq!(subtree_profile(&path(2).disjoint_union(&path(2))), Err(Error::Disconnected));
    }

    #[test]
    fn singletons() {
        assert_eq!(subtree_count(&Graph::empty(1)).unwrap(), big(2));
        assert_eq!(subtree_count(&Graph::empty(0)).unwrap(), big(1));
    }

    #[test]
    fn general_graph_uses_enumeration() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        // empty + 4 vertices + 6 edges + 12 paths on 3 vertices + 16 spanning trees
        assert_eq!(subtree_count(&k4).unwrap(), big(1 + 4 + 6 + 12 + 16));
    }
}
