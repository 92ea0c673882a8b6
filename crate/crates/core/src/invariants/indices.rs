use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::canon::{canonical_key, CanonicalKey, MAX_CANON_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sum of distances over unordered vertex pairs.
pub fn wiener(g: &Graph) -> Result<BigUint> {
    let n = g.vertex_count();
    let mut total: u128 = 0;
    for s in 0..n {
        for d in g.distances_from(s).into_iter().skip(s + 1) {
            if d == usize::MAX {
                return Err(Error::Disconnected);
            }
            total += d as u128;
        }
    }
    Ok(BigUint::from(total))
}

type Memo = HashMap<CanonicalKey, BigUint>;

fn induced_components(g: &Graph) -> Vec<Graph> {
    let comps = g.components();
    if comps.len() == 1 {
        return vec![g.clone()];
    }
    let n = g.vertex_count();
    comps
        .into_iter()
        .map(|comp| {
            let mut inside = vec![false; n];
            for &v in &comp {
                inside[v] = true;
            }
            let removed: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
            g.delete_vertices(&removed).expect("valid vertices").0
        })
        .collect()
}

/// Product over components of `connected`, memoised on the canonical key of
/// each component small enough to be labelled.
fn over_components(g: &Graph, memo: &mut Memo, connected: fn(&Graph, &mut Memo) -> BigUint) -> BigUint {
    let mut product = BigUint::one();
    for comp in induced_components(g) {
        let key = if comp.vertex_count() <= MAX_CANON_VERTICES && comp.vertex_count() > 2 {
            Some(canonical_key(&comp).expect("within canonical bound"))
        } else {
            None
        };
        if let Some(hit) = key.as_ref().and_then(|k| memo.get(k)) {
            product *= hit;
            continue;
        }
        let value = connected(&comp, memo);
        if let Some(k) = key {
            memo.insert(k, value.clone());
        }
        product *= value;
    }
    product
}

fn sigma_connected(g: &Graph, memo: &mut Memo) -> BigUint {
    match (g.vertex_count(), g.edge_count()) {
        (0, _) => return BigUint::one(),
        (1, _) => return BigUint::from(2u32),
        (2, 1) => return BigUint::from(3u32),
        _ => {}
    }
    let v = g.max_degree_vertex().expect("nonempty graph");
    let (without_v, _) = g.delete_vertices(&[v]).expect("valid vertex");
    let closed = g.closed_neighborhood(v).expect("valid vertex");
    let (without_nbhd, _) = g.delete_vertices(&closed).expect("valid vertices");
    over_components(&without_v, memo, sigma_connected) + over_components(&without_nbhd, memo, sigma_connected)
}

fn hosoya_connected(g: &Graph, memo: &mut Memo) -> BigUint {
    match g.edge_count() {
        0 => return BigUint::one(),
        1 => return BigUint::from(2u32),
        _ => {}
    }
    let (u, v) = g.edges()[0];
    let without_e = g.delete_edge(u, v).expect("edge exists");
    let (without_ends, _) = g.delete_vertices(&[u, v]).expect("valid vertices");
    over_components(&without_e, memo, hosoya_connected) + over_components(&without_ends, memo, hosoya_connected)
}

/// Merrifield-Simmons index: independent vertex subsets, the empty set
/// included. Deletion recursion `σ(G) = σ(G − v) + σ(G − [v])` on a
/// maximum-degree vertex, multiplied over components.
pub fn merrifield_simmons(g: &Graph) -> BigUint {
    over_components(g, &mut Memo::new(), sigma_connected)
}

/// Hosoya index: matchings, the empty matching included. Edge recursion
/// `Z(G) = Z(G − e) + Z(G − u − v)`, multiplied over components.
pub fn hosoya(g: &Graph) -> BigUint {
    over_components(g, &mut Memo::new(), hosoya_connected)
}
