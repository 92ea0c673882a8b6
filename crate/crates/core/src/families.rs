//! Constructors for the named graph families.
//!
//! Labelling conventions: a cycle `C_l` occupies vertices `0..l` in cyclic
//! order, and pendant paths are appended afterwards in the order given, each
//! path's vertices listed from the attachment point outwards.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, SegmentSequence};

fn out_of_range(msg: impl Into<String>) -> Error {
    Error::OutOfRange(msg.into())
}

/// Incremental edge-list builder.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn cycle(len: usize) -> Self {
        Builder { n: len, edges: (0..len).map(|i| (i, (i + 1) % len)).collect() }
    }

    fn single() -> Self {
        Builder { n: 1, edges: Vec::new() }
    }

    /// Hang a path with `len` new vertices off `at`.
    fn pendant(&mut self, at: usize, len: usize) {
        let mut prev = at;
        for _ in 0..len {
            self.edges.push((prev, self.n));
            prev = self.n;
            self.n += 1;
        }
    }

    fn build(self) -> Result<Graph> {
        Graph::new(self.n, &self.edges)
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(out_of_range("path needs n >= 1"));
    }
    let mut b = Builder::single();
    b.pendant(0, n - 1);
    b.build()
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(out_of_range("cycle needs n >= 3"));
    }
    Builder::cycle(n).build()
}

/// `S_n`: centre 0, leaves `1..n`.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(out_of_range("star needs n >= 1"));
    }
    let mut b = Builder::single();
    for _ in 1..n {
        b.pendant(0, 1);
    }
    b.build()
}

/// `US_n^l`: `C_l` with `n − l` pendant vertices at vertex 0.
pub fn us(n: usize, girth: usize) -> Result<Graph> {
    if girth < 3 || n < girth {
        return Err(out_of_range(format!("US needs n >= l >= 3, got n = {n}, l = {girth}")));
    }
    let mut b = Builder::cycle(girth);
    for _ in girth..n {
        b.pendant(0, 1);
    }
    b.build()
}

/// `UP_n^l`: `C_l` with a pendant path of length `n − l` at vertex 0.
pub fn up(n: usize, girth: usize) -> Result<Graph> {
    if girth < 3 || n < girth {
        return Err(out_of_range(format!("UP needs n >= l >= 3, got n = {n}, l = {girth}")));
    }
    let mut b = Builder::cycle(girth);
    b.pendant(0, n - girth);
    b.build()
}

/// `U_i(l_1, …, l_m)`: the cycle is `C_{l_i}` and every other length hangs as
/// a pendant path from cycle vertex 0. `index` is 1-based into `lengths` as
/// given (the order is not re-sorted).
pub fn u_cycle_seg(lengths: &[usize], index: usize) -> Result<Graph> {
    if index == 0 || index > lengths.len() {
        return Err(out_of_range(format!("segment index {index} outside 1..={}", lengths.len())));
    }
    if lengths.contains(&0) {
        return Err(out_of_range("segment lengths must be positive"));
    }
    let cyc = lengths[index - 1];
    if cyc < 3 {
        return Err(Error::CycleTooShort(cyc));
    }
    let mut b = Builder::cycle(cyc);
    for (j, &l) in lengths.iter().enumerate() {
        if j != index - 1 {
            b.pendant(0, l);
        }
    }
    b.build()
}

/// `U_1` of a segment sequence.
pub fn u1(segments: &SegmentSequence) -> Result<Graph> {
    u_cycle_seg(segments.lengths(), 1)
}

/// `U_{l_i,l_j}(left; right)`: the cycle `C_{l_i + l_j}` with branch vertices
/// 0 and `l_i` (so the two arcs have lengths `l_i` and `l_j`), the `left`
/// paths hung at 0 and the `right` paths at `l_i`.
pub fn u_two_branch(li: usize, lj: usize, left: &[usize], right: &[usize]) -> Result<Graph> {
    if li == 0 || lj == 0 {
        return Err(out_of_range("arc lengths must be positive"));
    }
    if li + lj < 3 {
        return Err(Error::NotSimple(format!("arcs {li} and {lj} close a cycle of length {}", li + lj)));
    }
    if left.is_empty() || right.is_empty() {
        return Err(out_of_range("both branch vertices need at least one pendant path"));
    }
    if left.contains(&0) || right.contains(&0) {
        return Err(out_of_range("pendant path lengths must be positive"));
    }
    let mut b = Builder::cycle(li + lj);
    for &l in left {
        b.pendant(0, l);
    }
    for &l in right {
        b.pendant(li, l);
    }
    b.build()
}

/// `U¹_n`: a triangle with one pendant vertex at vertices 1 and 2 and `n − 5`
/// pendant vertices at vertex 0.
pub fn u1n(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(out_of_range(format!("U1_n needs n >= 6, got {n}")));
    }
    let mut b = Builder::cycle(3);
    b.pendant(1, 1);
    b.pendant(2, 1);
    for _ in 5..n {
        b.pendant(0, 1);
    }
    b.build()
}

/// Starlike tree: paths of the given lengths sharing the end vertex 0.
pub fn starlike(lengths: &[usize]) -> Result<Graph> {
    if lengths.contains(&0) {
        return Err(out_of_range("path lengths must be positive"));
    }
    let mut b = Builder::single();
    for &l in lengths {
        b.pendant(0, l);
    }
    b.build()
}

/// `C_g` with pendant paths: `attachments[p]` lists the path lengths hung at
/// cycle position `p`.
pub fn cycle_with_pendants(girth: usize, attachments: &BTreeMap<usize, Vec<usize>>) -> Result<Graph> {
    if girth < 3 {
        return Err(out_of_range("cycle needs length >= 3"));
    }
    let mut b = Builder::cycle(girth);
    for (&pos, paths) in attachments {
        if pos >= girth {
            return Err(out_of_range(format!("attachment position {pos} outside 0..{girth}")));
        }
        for &l in paths {
            if l == 0 {
                return Err(out_of_range("pendant path lengths must be positive"));
            }
            b.pendant(pos, l);
        }
    }
    b.build()
}

/// `P(n, k, G, v)`: vertex `v` of `g` identified with the `k`-th vertex
/// (1-based) of `P_n`. The path occupies labels `0..n`.
pub fn slide(n: usize, k: usize, g: &Graph, v: usize) -> Result<Graph> {
    if k == 0 || k > n {
        return Err(out_of_range(format!("slide position {k} outside 1..={n}")));
    }
    g.check_vertex(v)?;
    path(n)?.merge_vertices(k - 1, g, v)
}

/// Graph `g` with `v` identified with vertex 0 of `host` (the branching vertex
/// of every `U_i` built here): the `U_i(…, v, G)` notation.
pub fn attach_at_branch(host: &Graph, g: &Graph, v: usize) -> Result<Graph> {
    host.merge_vertices(0, g, v)
}

/// A parsed family request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Us { n: usize, girth: usize },
    Up { n: usize, girth: usize },
    CycleSegment { lengths: Vec<usize>, index: usize },
    TwoBranch { arcs: (usize, usize), left: Vec<usize>, right: Vec<usize> },
    U1n(usize),
    Starlike(Vec<usize>),
    CyclePendants { girth: usize, attachments: BTreeMap<usize, Vec<usize>> },
    Slide { n: usize, k: usize, graph: Graph, vertex: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Star(n) => star(*n),
            FamilySpec::Us { n, girth } => us(*n, *girth),
            FamilySpec::Up { n, girth } => up(*n, *girth),
            FamilySpec::CycleSegment { lengths, index } => u_cycle_seg(lengths, *index),
            FamilySpec::TwoBranch { arcs, left, right } => u_two_branch(arcs.0, arcs.1, left, right),
            FamilySpec::U1n(n) => u1n(*n),
            FamilySpec::Starlike(lengths) => starlike(lengths),
            FamilySpec::CyclePendants { girth, attachments } => cycle_with_pendants(*girth, attachments),
            FamilySpec::Slide { n, k, graph, vertex } => slide(*n, *k, graph, *vertex),
        }
    }
}
