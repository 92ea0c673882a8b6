//! Canonical labelling by individualisation-refinement.
//!
//! Colour refinement produces an ordered equitable partition; non-singleton
//! cells are split by individualising each member in turn, and the smallest
//! upper-triangle adjacency certificate over all discrete leaves is the key.
//! Vertices in the target cell that are twins of an already tried vertex are
//! skipped: the swap is an automorphism fixing the current partition, so its
//! subtree yields the same certificates.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for which canonical keys are computed (the certificate is a
/// 128-bit upper triangle).
pub const MAX_CANON_VERTICES: usize = 16;

/// Isomorphism-class identifier: vertex count followed by the minimal
/// adjacency certificate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

fn pair_bit(a: usize, b: usize) -> u32 {
    // row-major upper triangle index of (a, b), a < b
    (b * (b - 1) / 2 + a) as u32
}

struct Search<'a> {
    n: usize,
    adj: &'a [u16],
    edges: Vec<(usize, usize)>,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn refine(&self, colors: &mut [usize]) {
        let mut cells = colors.iter().max().map_or(0, |m| m + 1);
        loop {
            let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..self.n)
                .map(|v| {
                    let mut nc: Vec<usize> = (0..self.n).filter(|&w| self.adj[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                    nc.sort_unstable();
                    (colors[v], nc, v)
                })
                .collect();
            sigs.sort();
            let mut next = 0;
            for i in 0..sigs.len() {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    next += 1;
                }
                colors[sigs[i].2] = next;
            }
            let new_cells = next + 1;
            if new_cells == cells {
                return;
            }
            cells = new_cells;
        }
    }

    fn certificate(&self, colors: &[usize]) -> u128 {
        let mut cert = 0u128;
        for &(u, v) in &self.edges {
            let (a, b) = (colors[u].min(colors[v]), colors[u].max(colors[v]));
            cert |= 1u128 << pair_bit(a, b);
        }
        cert
    }

    fn run(&mut self, colors: Vec<usize>) {
        let cells = colors.iter().max().map_or(0, |m| m + 1);
        if cells == self.n {
            let cert = self.certificate(&colors);
            if self.best.as_ref().is_none_or(|(b, _)| cert < *b) {
                self.best = Some((cert, colors));
            }
            return;
        }
        let mut sizes = vec![0usize; cells];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..cells).find(|&c| sizes[c] > 1).expect("non-discrete partition");
        let members: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            let twin = tried.iter().any(|&w| {
                let (bv, bw) = (1u16 << v, 1u16 << w);
                self.adj[v] & !bw == self.adj[w] & !bv
            });
            if twin {
                continue;
            }
            tried.push(v);
            let mut next: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| if c > target || (c == target && w != v) { c + 1 } else { c })
                .collect();
            self.refine(&mut next);
            self.run(next);
        }
    }
}

/// Canonical key together with the canonical labelling (old vertex `v` maps
/// to position `labelling[v]`).
pub fn canonical_labelling(g: &Graph) -> Result<(CanonicalKey, Vec<usize>)> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(Error::TooLarge(format!("canonical labelling supports at most {MAX_CANON_VERTICES} vertices, got {n}")));
    }
    let adj: Vec<u16> = (0..n).map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w)).collect();
    let mut search = Search { n, adj: &adj, edges: g.edges(), best: None };
    let mut colors = vec![0usize; n];
    search.refine(&mut colors);
    if n == 0 {
        return Ok((CanonicalKey(vec![0]), Vec::new()));
    }
    search.run(colors);
    let (cert, labelling) = search.best.expect("search reaches a leaf");
    let mut bytes = vec![n as u8];
    let used = (n * n.saturating_sub(1) / 2).div_ceil(8);
    bytes.extend_from_slice(&cert.to_be_bytes()[16 - used.max(1)..]);
    Ok((CanonicalKey(bytes), labelling))
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    canonical_labelling(g).map(|(k, _)| k)
}

/// The representative of `g`'s isomorphism class in canonical labelling.
pub fn canonical_form(g: &Graph) -> Result<(CanonicalKey, Graph)> {
    let (key, labelling) = canonical_labelling(g)?;
    let relabelled = g.relabel(&labelling)?;
    Ok((key, relabelled))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_key(a)? == canonical_key(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn relabelled_cycle_has_same_key() {
        let a = cycle(4);
        let b = Graph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_key(&a).unwrap(), canonical_key(&b).unwrap());
    }

    #[test]
    fn distinguishes_degree_sequences() {
        let us5 = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]).unwrap();
        let up5 = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)]).unwrap();
        assert_ne!(canonical_key(&us5).unwrap(), canonical_key(&up5).unwrap());
    }

    #[test]
    fn distinguishes_cospectral_regular_pair() {
        // C_6 versus two disjoint triangles: same degree sequence
        let c6 = cycle(6);
        let tt = cycle(3).disjoint_union(&cycle(3));
        assert!(!is_isomorphic(&c6, &tt).unwrap());
    }

    #[test]
    fn canonical_form_is_a_fixed_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (2, 6)]).unwrap();
        let (key, form) = canonical_form(&g).unwrap();
        for _ in 0..50 {
            let mut perm: Vec<usize> = (0..7).collect();
            perm.shuffle(&mut rng);
            let (k2, f2) = canonical_form(&g.relabel(&perm).unwrap()).unwrap();
            assert_eq!(k2, key);
            assert_eq!(f2, form);
        }
    }

    #[test]
    fn rejects_large_graphs() {
        assert!(matches!(canonical_key(&Graph::empty(17)), Err(Error::TooLarge(_))));
        assert!(canonical_key(&cycle(16)).is_ok());
    }

    #[test]
    fn empty_and_singleton() {
        assert_ne!(canonical_key(&Graph::empty(0)).unwrap(), canonical_key(&Graph::empty(1)).unwrap());
        assert_ne!(canonical_key(&Graph::empty(2)).unwrap(), canonical_key(&Graph::new(2, &[(0, 1)]).unwrap()).unwrap());
    }
}
