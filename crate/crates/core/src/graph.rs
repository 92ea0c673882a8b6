//! Simple undirected graphs on `0..n` and the structural queries the rest of
//! the crate is built on: connectivity, the unique cycle of a unicyclic graph,
//! segment sequences, and the surgery operations (deletion, merging, unions).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An immutable simple undirected graph.
///
/// Adjacency lists are kept sorted, so two graphs with the same edge set
/// compare equal regardless of construction order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.vertex_count(), self.edges())
    }
}

/// Serialized as `{"n": …, "edges": [[u, v], …]}` with sorted edges.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("n", &self.vertex_count())?;
        s.serialize_field("edges", &self.edges())?;
        s.end()
    }
}

impl Graph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); vertex_count];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(Error::IndexOutOfRange { index: x, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edge_count: seen.len() })
    }

    /// Edgeless graph on `vertex_count` vertices.
    pub fn empty(vertex_count: usize) -> Self {
        Graph { adj: vec![Vec::new(); vertex_count], edge_count: 0 }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree_vertex(&self) -> Option<usize> {
        (0..self.vertex_count()).max_by(|&a, &b| self.degree(a).cmp(&self.degree(b)).then(b.cmp(&a)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: v, vertex_count: self.vertex_count() })
        }
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1 && self.edge_count + 1 == self.vertex_count() && self.is_connected()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.vertex_count() >= 3 && self.edge_count == self.vertex_count() && self.is_connected()
    }

    /// Vertices remaining after repeatedly stripping vertices of degree ≤ 1.
    fn core_vertices(&self) -> Vec<bool> {
        let n = self.vertex_count();
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut alive = vec![true; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &w in &self.adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        alive
    }

    pub fn cycle_info(&self) -> Result<CycleInfo> {
        if !self.is_unicyclic() {
            return Err(Error::NotUnicyclic);
        }
        let on_cycle = self.core_vertices();
        let start = on_cycle.iter().position(|&b| b).expect("unicyclic graph has a cycle");
        let cycle_nbrs = |v: usize| -> Vec<usize> {
            self.adj[v].iter().copied().filter(|&w| on_cycle[w]).collect()
        };
        let first = cycle_nbrs(start);
        debug_assert_eq!(first.len(), 2);
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = first[0].min(first[1]);
        while cur != start {
            cycle.push(cur);
            let next = cycle_nbrs(cur).into_iter().find(|&w| w != prev).expect("cycle continues");
            prev = cur;
            cur = next;
        }
        let branch_vertices = cycle.iter().copied().filter(|&v| self.degree(v) >= 3).collect::<BTreeSet<_>>();
        Ok(CycleInfo { girth: cycle.len(), cycle, branch_vertices: branch_vertices.into_iter().collect() })
    }

    /// Segment lengths of a connected tree or unicyclic graph, non-increasing.
    ///
    /// A cycle with a single branch vertex contributes one closed segment;
    /// the bare cycle `C_n` reads as the single segment `(n)`.
    pub fn segment_sequence(&self) -> Result<SegmentSequence> {
        let n = self.vertex_count();
        if !(self.is_tree() || self.is_unicyclic()) {
            return Err(Error::NotTreeOrUnicyclic);
        }
        if n == 1 {
            return Ok(SegmentSequence(Vec::new()));
        }
        let key: Vec<bool> = (0..n).map(|v| self.degree(v) != 2).collect();
        if !key.iter().any(|&b| b) {
            return Ok(SegmentSequence(vec![n]));
        }
        let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut lengths = Vec::new();
        for s in (0..n).filter(|&v| key[v]) {
            for &first in &self.adj[s] {
                if used.contains(&(s.min(first), s.max(first))) {
                    continue;
                }
                let (mut prev, mut cur, mut len) = (s, first, 1);
                used.insert((s.min(first), s.max(first)));
                while !key[cur] {
                    let next = self.adj[cur].iter().copied().find(|&w| w != prev).expect("degree-2 vertex");
                    used.insert((cur.min(next), cur.max(next)));
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                lengths.push(len);
            }
        }
        Ok(SegmentSequence::new(lengths))
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut out = self.adj[v].clone();
        out.push(v);
        out.sort_unstable();
        Ok(out)
    }

    /// Induced subgraph on the vertices not in `removed`.
    ///
    /// Survivors keep their relative order; the returned vector maps each new
    /// index to its old index.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.vertex_count();
        let mut gone = vec![false; n];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let kept: Vec<usize> = (0..n).filter(|&v| !gone[v]).collect();
        let mut new_index = vec![usize::MAX; n];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| !gone[w]).map(|&w| new_index[w]).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok((Graph { adj, edge_count }, kept))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Ok(Graph { adj, edge_count: self.edge_count - 1 })
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges = self.edges();
        edges.push((u, v));
        Graph::new(self.vertex_count(), &edges)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&w| w + shift).collect::<Vec<_>>()));
        Graph { adj, edge_count: self.edge_count + other.edge_count }
    }

    /// Glue `other` onto `self` by identifying `other`'s vertex `v` with `u`.
    ///
    /// `self` keeps its labels; the remaining vertices of `other` follow in
    /// their original order.
    pub fn merge_vertices(&self, u: usize, other: &Graph, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        let shift = self.vertex_count();
        let map = |w: usize| -> usize {
            match w.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => shift + w,
                std::cmp::Ordering::Greater => shift + w - 1,
            }
        };
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(a, b)| (map(a), map(b))));
        Graph::new(shift + other.vertex_count() - 1, &edges)
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(Error::OutOfRange(format!("permutation has length {} but graph has {n} vertices", perm.len())));
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
        Graph::new(n, &edges)
    }

    /// Breadth-first distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = std::collections::VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// The unique cycle of a unicyclic graph, starting at its smallest vertex and
/// heading towards the smaller of that vertex's two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleInfo {
    pub girth: usize,
    pub cycle: Vec<usize>,
    pub branch_vertices: Vec<usize>,
}

/// Non-increasing list of segment lengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SegmentSequence(Vec<usize>);

impl SegmentSequence {
    pub fn new(mut lengths: Vec<usize>) -> Self {
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        SegmentSequence(lengths)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Longest entry, `l_1`.
    pub fn longest(&self) -> Option<usize> {
        self.0.first().copied()
    }
}

impl fmt::Display for SegmentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for SegmentSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut lengths = Vec::new();
        for part in trimmed.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let l: usize = part
                .parse()
                .map_err(|_| Error::Parse { line: 1, message: format!("bad segment length `{part}`") })?;
            if l == 0 {
                return Err(Error::OutOfRange("segment lengths must be positive".into()));
            }
            lengths.push(l);
        }
        Ok(SegmentSequence::new(lengths))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap().is_unicyclic());
        assert_eq!(Graph::new(1, &[]).unwrap().vertex_count(), 1);
        assert_eq!(Graph::new(4, &[(0, 1), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(4, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(Graph::new(2, &[(0, 2)]), Err(Error::IndexOutOfRange { index: 2, .. })));
    }

    #[test]
    fn unicyclic_detection() {
        assert!(cycle(4).is_unicyclic());
        assert!(!path(5).is_unicyclic());
        let two_triangles = cycle(3).disjoint_union(&cycle(3));
        assert!(!two_triangles.is_unicyclic());
        assert!(matches!(path(5).cycle_info(), Err(Error::NotUnicyclic)));
    }

    #[test]
    fn cycle_info_is_rotation_invariant() {
        let c7 = cycle(7);
        let info = c7.cycle_info().unwrap();
        assert_eq!(info.girth, 7);
        assert!(info.branch_vertices.is_empty());
        assert_eq!(info.cycle, vec![0, 1, 2, 3, 4, 5, 6]);
        for shift in 0..7 {
            for reflect in [false, true] {
                let perm: Vec<usize> =
                    (0..7).map(|v| if reflect { (7 + shift - v) % 7 } else { (v + shift) % 7 }).collect();
                assert_eq!(c7.relabel(&perm).unwrap().cycle_info().unwrap(), info);
            }
        }
    }

    #[test]
    fn segments_of_simple_shapes() {
        let star = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(star.segment_sequence().unwrap().lengths(), &[1, 1, 1, 1, 1]);
        assert_eq!(path(6).segment_sequence().unwrap().lengths(), &[5]);
        assert_eq!(cycle(5).segment_sequence().unwrap().lengths(), &[5]);
        // UP_6: triangle with a pendant path of length 3
        let up6 = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(up6.segment_sequence().unwrap().lengths(), &[3, 3]);
        assert!(cycle(3).disjoint_union(&path(2)).segment_sequence().is_err());
    }

    #[test]
    fn deletion_and_neighbourhoods() {
        let c4 = cycle(4);
        let (p3, kept) = c4.delete_vertices(&[0]).unwrap();
        assert_eq!(kept, vec![1, 2, 3]);
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        let (single, _) = c4.delete_vertices(&c4.closed_neighborhood(0).unwrap()).unwrap();
        assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));
        let (split, _) = path(5).delete_vertices(&[2]).unwrap();
        assert_eq!(split.components().len(), 2);
        assert_eq!(cycle(5).closed_neighborhood(2).unwrap(), vec![1, 2, 3]);
        assert!(c4.closed_neighborhood(9).is_err());
    }

    #[test]
    fn edge_deletion() {
        let p = cycle(6).delete_edge(5, 0).unwrap();
        assert_eq!(p, path(6));
        assert_eq!(path(3).delete_edge(0, 2), Err(Error::NoSuchEdge(0, 2)));
    }

    #[test]
    fn merging_and_unions() {
        let p5 = path(3).merge_vertices(2, &path(3), 0).unwrap();
        assert_eq!(p5, path(5));
        let u = path(2).disjoint_union(&Graph::empty(1));
        assert_eq!((u.vertex_count(), u.edge_count()), (3, 1));
        assert_eq!(Graph::empty(0).disjoint_union(&cycle(3)), cycle(3));
        let s4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s7 = s4.merge_vertices(0, &s4, 0).unwrap();
        assert_eq!(s7.degree(0), 6);
        assert_eq!(s7.vertex_count(), 7);
    }

    #[test]
    fn segment_sequence_parsing() {
        let s: SegmentSequence = "4,1,4,1".parse().unwrap();
        assert_eq!(s.lengths(), &[4, 4, 1, 1]);
        assert_eq!(s.to_string(), "(4,4,1,1)");
        assert!("4,0".parse::<SegmentSequence>().is_err());
        assert!("4,x".parse::<SegmentSequence>().is_err());
    }
}
