//! Property suites for the supporting lemmas. Each suite evaluates both sides
//! of every inequality exactly on concrete instances: small exhaustive families
//! plus seeded random attachments drawn from [`corpus::seeded_corpus`].

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::corpus::{self, DEFAULT_SEED};
use super::{Counterexample, Finding, FindingKind, Params, TheoremId, Verdict};
use crate::enumeration::{trees, MAX_TREE_ORDER};
use crate::error::{Error, Result};
use crate::families::{attach_at_branch, cycle, cycle_with_pendants, path, slide, star, u_cycle_seg};
use crate::graph::Graph;
use crate::invariants::closed_form::{closed_form, fibonacci};
use crate::invariants::{
    hosoya, merrifield_simmons, rooted_subtree_count, rooted_subtree_profile, subtree_count, subtree_profile, Anchor,
    SubtreeProfile,
};

/// Largest edge count for which a merged graph with several cycles is sent to
/// the edge-subset enumerator.
const ORACLE_BUDGET: usize = 16;

const MAX_SAMPLES: usize = 10_000;

struct Tally {
    id: TheoremId,
    params: Params,
    instances: usize,
    violations: usize,
    counterexample: Option<Counterexample>,
    findings: Vec<Finding>,
    /// label -> (occurrences, first example)
    notes: BTreeMap<(u8, String), (usize, String)>,
}

impl Tally {
    fn new(id: TheoremId, params: Params) -> Self {
        Tally {
            id,
            params,
            instances: 0,
            violations: 0,
            counterexample: None,
            findings: Vec::new(),
            notes: BTreeMap::new(),
        }
    }

    fn case(&mut self) {
        self.instances += 1;
    }

    /// `graph` has value `actual` where the claim required a relation to `expected`.
    fn violation(&mut self, graph: &Graph, expected: BigUint, actual: BigUint, detail: String) {
        self.violations += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample { graph: graph.clone(), expected, actual, detail });
        }
    }

    /// Claim `lo < hi`, where `lo` is the value of `graph`.
    fn less(&mut self, graph: &Graph, lo: &BigUint, hi: &BigUint, what: impl FnOnce() -> String) {
        if lo >= hi {
            self.violation(graph, hi.clone(), lo.clone(), format!("expected {what} strictly below", what = what()));
        }
    }

    /// Claim `lo <= hi`, where `lo` is the value of `graph`.
    fn at_most(&mut self, graph: &Graph, lo: &BigUint, hi: &BigUint, what: impl FnOnce() -> String) {
        if lo > hi {
            self.violation(graph, hi.clone(), lo.clone(), format!("expected {what} not above", what = what()));
        }
    }

    /// Count an occurrence of a grouped observation; the first example is kept.
    fn note(&mut self, kind: FindingKind, label: impl Into<String>, example: impl FnOnce() -> String) {
        let key = (kind as u8, label.into());
        let entry = self.notes.entry(key).or_insert_with(|| (0, example()));
        entry.0 += 1;
    }

    fn finish(mut self) -> Verdict {
        let kinds = [
            FindingKind::FormulaDiscrepancy,
            FindingKind::CoExtremal,
            FindingKind::Witness,
            FindingKind::Degenerate,
            FindingKind::OracleMismatch,
            FindingKind::Convention,
        ];
        for ((k, label), (count, example)) in std::mem::take(&mut self.notes) {
            let kind = kinds.iter().copied().find(|x| *x as u8 == k).expect("known kind");
            self.findings.push(Finding::new(kind, format!("{label} ({count} instance(s); e.g. {example})")));
        }
        if self.violations > 1 {
            if let Some(ce) = &mut self.counterexample {
                ce.detail = format!("{} ({} violations in total)", ce.detail, self.violations);
            }
        }
        Verdict {
            theorem: self.id,
            params: self.params,
            holds: self.counterexample.is_none(),
            class_size: self.instances,
            extremal_value: BigUint::zero(),
            claimed: None,
            achieved_by: Vec::new(),
            counterexample: self.counterexample,
            findings: self.findings,
            also: Vec::new(),
        }
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn total(g: &Graph) -> Result<BigUint> {
    subtree_count(g)
}

fn at(g: &Graph, v: usize) -> Result<BigUint> {
    rooted_subtree_count(g, &[Anchor::Vertex(v)])
}

fn path0(n: usize) -> Graph {
    if n == 0 {
        Graph::empty(0)
    } else {
        path(n).expect("positive order")
    }
}

fn affordable(g: &Graph) -> bool {
    g.is_tree() || g.is_unicyclic() || g.edge_count() <= ORACLE_BUDGET
}

fn show(g: &Graph, v: usize) -> String {
    format!("{} vertices, edges {:?}, at {v}", g.vertex_count(), g.edges())
}

/// Small attachment graphs: `K_2`, `P_3` at an end and at the middle, `K_3`.
fn small_rooted() -> Vec<(Graph, usize)> {
    let k2 = path(2).unwrap();
    let p3 = path(3).unwrap();
    let k3 = cycle(3).unwrap();
    vec![(k2, 0), (p3.clone(), 0), (p3, 1), (k3, 0)]
}

fn pick<R: Rng>(rng: &mut R, pool: &[Graph], min_order: usize) -> (Graph, usize) {
    loop {
        let g = &pool[rng.random_range(0..pool.len())];
        if g.vertex_count() >= min_order {
            let v = rng.random_range(0..g.vertex_count());
            return (g.clone(), v);
        }
    }
}

fn pick_with_edges<R: Rng>(rng: &mut R, pool: &[Graph]) -> (Graph, usize) {
    pick(rng, pool, 2)
}

fn seed_of(params: &Params) -> u64 {
    params.seed.unwrap_or(DEFAULT_SEED)
}

fn count_of(params: &Params, default: usize) -> Result<usize> {
    let c = params.count.unwrap_or(default);
    if c > MAX_SAMPLES {
        return Err(Error::TooLarge(format!("at most {MAX_SAMPLES} random instances, got {c}")));
    }
    Ok(c)
}

fn order_of(params: &Params, default: usize, min: usize, max: usize) -> Result<usize> {
    let n = params.n.unwrap_or(default);
    if n > max {
        return Err(Error::TooLarge(format!("order {n} above the suite limit {max}")));
    }
    if n < min {
        return Err(Error::OutOfRange(format!("order {n} below the suite minimum {min}")));
    }
    Ok(n)
}

/// Positions of the sliding chain for `P_n`: `2, 4, …, 2m + 2l` followed by
/// `2m + 1, 2m − 1, …, 1`, where `n = 4m + h`, `h ∈ {1, 2, 3, 4}` and
/// `l = ⌊(h − 1)/2⌋`.
pub(crate) fn sliding_chain(n: usize) -> Vec<usize> {
    assert!(n >= 1);
    let m = (n - 1) / 4;
    let h = n - 4 * m;
    let l = (h - 1) / 2;
    let mut out: Vec<usize> = (1..=m + l).map(|i| 2 * i).collect();
    out.extend((0..=m).rev().map(|i| 2 * i + 1));
    out
}

/// Run the suite for a lemma identifier. Defaults: seed
/// [`DEFAULT_SEED`]; orders and sample counts per suite.
pub fn check_lemma(id: TheoremId, params: &Params) -> Result<Verdict> {
    use TheoremId::*;
    match id {
        L2_3 => l2_3(params),
        L3_1 => l3_1(params),
        L3_2 => l3_2(params),
        L3_3 => l3_3(params),
        L3_4 => l3_4(params),
        L3_5 => l3_5(params),
        L3_6 => l3_6(params),
        L3_7 => l3_7(params),
        R3_8 => r3_8(params),
        L4_1 => l4_1(params),
        L4_2 => l4_2(params),
        L4_3 => l4_3(params),
        L4_4 => l4_4(params),
        L4_5 => l4_5(params),
        L4_6 => l4_6(params),
        MergeIdentity => merge_identity(params),
        _ => Err(Error::HypothesisViolated(format!("{id} is a theorem; use the theorem checker"))),
    }
}

/// Rooted profiles of every tree against the star centre and a path end.
fn l2_3(params: &Params) -> Result<Verdict> {
    let n = order_of(params, 9, 1, MAX_TREE_ORDER)?;
    let mut t = Tally::new(TheoremId::L2_3, Params { n: Some(n), ..Default::default() });
    for order in 1..=n {
        let top = rooted_subtree_profile(&star(order)?, &[Anchor::Vertex(0)])?;
        let bottom = rooted_subtree_profile(&path(order)?, &[Anchor::Vertex(0)])?;
        for member in trees(order)? {
            for v in 0..order {
                t.case();
                let p = rooted_subtree_profile(&member.graph, &[Anchor::Vertex(v)])?;
                for k in 0..=order {
                    let (hi, mid, lo) = (top.get(k), p.get(k), bottom.get(k));
                    t.at_most(&member.graph, &mid, &hi, || format!("n_{k}(v = {v}, T) vs the star centre"));
                    if lo > mid {
                        t.violation(&member.graph, lo.clone(), mid.clone(), format!("n_{k}(v = {v}, T) below a path end"));
                    }
                }
            }
        }
    }
    Ok(t.finish())
}

fn profile_le(t: &mut Tally, small: &SubtreeProfile, g_small: &Graph, large: &SubtreeProfile, what: &str) {
    for k in 0..small.len().max(large.len()) {
        t.at_most(g_small, &small.get(k), &large.get(k), || format!("{what} at k = {k}"));
    }
}

/// Pendant paths spread over a cycle versus all gathered at one vertex.
fn l3_1(params: &Params) -> Result<Verdict> {
    let n = order_of(params, 12, 3, 14)?;
    let mut t = Tally::new(TheoremId::L3_1, Params { n: Some(n), ..Default::default() });
    for g in 3..=n.min(6) {
        for lengths in nonincreasing(3, 3, n - g) {
            let sc = cycle_with_pendants(g, &BTreeMap::from([(0, lengths.clone())]))?;
            let sc_prof = subtree_profile(&sc)?;
            let sc_root = rooted_subtree_profile(&sc, &[Anchor::Vertex(0)])?;
            for placement in tuples(g, lengths.len()) {
                let mut att: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for (&p, &l) in placement.iter().zip(&lengths) {
                    att.entry(p).or_default().push(l);
                }
                let c = cycle_with_pendants(g, &att)?;
                t.case();
                profile_le(&mut t, &subtree_profile(&c)?, &c, &sc_prof, "n_k(C) vs n_k(SC)");
                for v in 0..g {
                    let r = rooted_subtree_profile(&c, &[Anchor::Vertex(v)])?;
                    profile_le(&mut t, &r, &c, &sc_root, &format!("n_k(v = {v}, C) vs the gathered vertex"));
                }
            }
        }
    }
    Ok(t.finish())
}

/// Nonincreasing sequences with 1..=`max_parts` parts in `1..=max_part`
/// summing to at most `budget`.
fn nonincreasing(max_parts: usize, max_part: usize, budget: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, cap: usize, left: usize, max_parts: usize, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_parts {
            return;
        }
        for x in 1..=cap.min(left) {
            cur.push(x);
            go(cur, x, left - x, max_parts, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), max_part, budget, max_parts, &mut out);
    out
}

/// All `len`-tuples over `0..base`.
fn tuples(base: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|t| (0..base).map(move |x| [t.clone(), vec![x]].concat())).collect();
    }
    out
}

/// `H`: path `u … v` with `G` glued at `u` and `K` at `v`; `H'`: both at `u`.
fn l3_2(params: &Params) -> Result<Verdict> {
    let count = count_of(params, 200)?;
    let seed = seed_of(params);
    let mut t = Tally::new(TheoremId::L3_2, Params { seed: Some(seed), count: Some(count), ..Default::default() });
    let mut instances = Vec::new();
    let mut small: Vec<(Graph, usize)> = vec![(Graph::empty(1), 0)];
    small.extend(small_rooted());
    for (g, a) in &small {
        for (k, b) in &small {
            for len in 1..=3 {
                instances.push((g.clone(), *a, k.clone(), *b, len));
            }
        }
    }
    let pool = corpus::seeded_corpus(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x32);
    while instances.len() < small.len() * small.len() * 3 + count {
        let (g, a) = pick(&mut rng, &pool, 1);
        let (k, b) = pick(&mut rng, &pool, 1);
        let len = rng.random_range(1..=3);
        if g.edge_count() + k.edge_count() + len <= ORACLE_BUDGET || (g.is_tree() && k.is_tree()) {
            instances.push((g, a, k, b, len));
        }
    }
    for (g, a, k, b, len) in instances {
        let p = path(len + 1)?;
        let h = p.merge_vertices(0, &g, a)?.merge_vertices(len, &k, b)?;
        let h2 = p.merge_vertices(0, &g, a)?.merge_vertices(0, &k, b)?;
        let (ph, ph2) = (subtree_profile(&h)?, subtree_profile(&h2)?);
        t.case();
        let trivial = g.vertex_count() == 1 || k.vertex_count() == 1;
        let order = h.vertex_count();
        for kk in 0..=order {
            let (x, y) = (ph.get(kk), ph2.get(kk));
            t.at_most(&h, &x, &y, || format!("n_{kk}(H) vs n_{kk}(H')"));
            if (trivial || kk <= 2) && x != y {
                t.violation(&h2, x.clone(), y.clone(), format!("equality expected at k = {kk}"));
            }
            if !trivial && kk >= 3 && x == y {
                let label = if kk == order {
                    "equality at k = |V| (spanning trees) with G and K nontrivial"
                } else {
                    "equality at some 3 <= k < |V| with G and K nontrivial"
                };
                t.note(FindingKind::Degenerate, label, || format!("k = {kk}, H {}", show(&h, 0)));
            }
        }
    }
    Ok(t.finish())
}

/// `H`: `R` with `G` at `u` and `K` at `v`; `H'`: both at `u`, where
/// `n(u, R) >= n(v, R)`.
fn l3_3(params: &Params) -> Result<Verdict> {
    let count = count_of(params, 200)?;
    let seed = seed_of(params);
    let mut t = Tally::new(TheoremId::L3_3, Params { seed: Some(seed), count: Some(count), ..Default::default() });
    let mut small: Vec<(Graph, usize)> = vec![(Graph::empty(1), 0)];
    small.extend(small_rooted().into_iter().take(3));
    let mut instances = Vec::new();
    for r in corpus::small_connected_graphs(4).into_iter().filter(|r| r.vertex_count() >= 2) {
        for u in 0..r.vertex_count() {
            for v in 0..r.vertex_count() {
                if u == v {
                    continue;
                }
                for (g, a) in &small {
                    for (k, b) in &small {
                        instances.push((r.clone(), u, v, g.clone(), *a, k.clone(), *b));
                    }
                }
            }
        }
    }
    let pool = corpus::seeded_corpus(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x33);
    let target = instances.len() + count;
    while instances.len() < target {
        let (r, u) = pick(&mut rng, &pool, 2);
        let v = (u + rng.random_range(1..r.vertex_count())) % r.vertex_count();
        let (g, a) = pick(&mut rng, &pool, 1);
        let (k, b) = pick(&mut rng, &pool, 1);
        let cyclic = [&r, &g, &k].iter().filter(|x| !x.is_tree()).count();
        if cyclic <= 1 || r.edge_count() + g.edge_count() + k.edge_count() <= ORACLE_BUDGET {
            instances.push((r, u, v, g, a, k, b));
        }
    }
    for (r, mut u, mut v, g, a, k, b) in instances {
        let (mut nu, mut nv) = (at(&r, u)?, at(&r, v)?);
        if nu < nv {
            std::mem::swap(&mut u, &mut v);
            std::mem::swap(&mut nu, &mut nv);
        }
        let h = r.merge_vertices(u, &g, a)?.merge_vertices(v, &k, b)?;
        let h2 = r.merge_vertices(u, &g, a)?.merge_vertices(u, &k, b)?;
        let (nh, nh2) = (total(&h)?, total(&h2)?);
        t.case();
        t.at_most(&h, &nh, &nh2, || "n(H) vs n(H')".into());
        let (ng, nk) = (at(&g, a)?, at(&k, b)?);
        let equal_claimed = nu == nv && k.vertex_count() == 1;
        if equal_claimed && nh != nh2 {
            t.violation(&h2, nh.clone(), nh2.clone(), "equality expected when n(u,R) = n(v,R) and K = K_1".into());
        }
        if !equal_claimed && nh == nh2 {
            let label = if k.vertex_count() == 1 {
                "equality whenever K is a single vertex, also with n(u,R) > n(v,R)"
            } else if g.vertex_count() == 1 && nu == nv {
                "equality with G a single vertex and n(u,R) = n(v,R), outside the stated equality case"
            } else {
                "equality outside the stated equality case"
            };
            t.note(FindingKind::Degenerate, label, || format!("R {}, v = {v}, K {}", show(&r, u), show(&k, b)));
        }
        // displayed difference (n(u,R) - n(v,R)) n(v',K) + (n(u',G) - 1)(n(v',K) - 1)
        let quoted = (&nu - &nv) * &nk + (&ng - 1u32) * (&nk - 1u32);
        if nh2 >= nh && quoted != &nh2 - &nh {
            t.note(
                FindingKind::FormulaDiscrepancy,
                "the displayed expression for n(H') - n(H) differs from the exact difference",
                || format!("R {}, v = {v}: expression {quoted}, exact {}", show(&r, u), &nh2 - &nh),
            );
        }
    }
    Ok(t.finish())
}

/// `n(G) = n(H) + n(K) − 2 + (n(w,H) − 1)(n(u,K) − 1)` for `G` = `K` and `H`
/// glued at `u = w`.
fn merge_identity(params: &Params) -> Result<Verdict> {
    let count = count_of(params, 200)?;
    let seed = seed_of(params);
    let mut t = Tally::new(TheoremId::MergeIdentity, Params { seed: Some(seed), count: Some(count), ..Default::default() });
    let pool = corpus::seeded_corpus(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x34);
    while t.instances < count {
        let (k, u) = pick_with_edges(&mut rng, &pool);
        let (h, w) = pick(&mut rng, &pool, 1);
        let g = k.merge_vertices(u, &h, w)?;
        if !affordable(&g) {
            continue;
        }
        t.case();
        let exact = total(&g)?;
        let rhs = total(&h)? + total(&k)? - 2u32 + (at(&h, w)? - 1u32) * (at(&k, u)? - 1u32);
        if exact != rhs {
            t.violation(&g, rhs, exact, format!("merge identity, K {}, H {}", show(&k, u), show(&h, w)));
        }
    }
    Ok(t.finish())
}

/// `G` and `G'` share `K`; `G'` wins whenever `H'` dominates `H` both in total
/// and at the glued vertex.
fn l3_4(params: &Params) -> Result<Verdict> {
    let count = count_of(params, 200)?;
    let seed = seed_of(params);
    let mut t = Tally::new(TheoremId::L3_4, Params { seed: Some(seed), count: Some(count), ..Default::default() });
    let pool = corpus::seeded_corpus(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x35);
    let mut attempts = 0usize;
    while t.instances < count && attempts < 50 * count.max(1) {
        attempts += 1;
        let (k, u) = pick_with_edges(&mut rng, &pool);
        let (mut h, mut w) = pick(&mut rng, &pool, 1);
        let (mut h2, mut w2) = pick(&mut rng, &pool, 1);
        let (mut a, mut aw) = (total(&h)?, at(&h, w)?);
        let (mut b, mut bw) = (total(&h2)?, at(&h2, w2)?);
        if a > b || (a == b && aw > bw) {
            std::mem::swap(&mut h, &mut h2);
            std::mem::swap(&mut w, &mut w2);
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut aw, &mut bw);
        }
        if bw < aw {
            continue;
        }
        let g = k.merge_vertices(u, &h, w)?;
        let g2 = k.merge_vertices(u, &h2, w2)?;
        if !affordable(&g) || !affordable(&g2) {
            continue;
        }
        t.case();
        let (ng, ng2) = (total(&g)?, total(&g2)?);
        if a < b || aw < bw {
            t.less(&g, &ng, &ng2, || "n(G) vs n(G') with a strict condition".into());
        } else if ng != ng2 {
            t.violation(&g2, ng.clone(), ng2.clone(), "both conditions tight, equality expected".into());
        }
    }
    Ok(t.finish())
}

/// `U_1(l_1, l_2)` against `U_2(l_1, l_2)`, totals and at the branch vertex.
fn l3_5(params: &Params) -> Result<Verdict> {
    let n = order_of(params, 16, 6, 40)?;
    let mut t = Tally::new(TheoremId::L3_5, Params { n: Some(n), ..Default::default() });
    for l1 in 3..=n - 3 {
        for l2 in 3..=l1.min(n - l1) {
            let a = u_cycle_seg(&[l1, l2], 1)?;
            let b = u_cycle_seg(&[l1, l2], 2)?;
            t.case();
            let (na, nb, ra, rb) = (total(&a)?, total(&b)?, at(&a, 0)?, at(&b, 0)?);
            t.at_most(&b, &nb, &na, || format!("n(U_2({l1},{l2})) vs n(U_1)"));
            t.at_most(&b, &rb, &ra, || format!("n(v, U_2({l1},{l2})) vs n(u, U_1)"));
            let eq = (na == nb, ra == rb);
            if (l1 == l2) != eq.0 || (l1 == l2) != eq.1 {
                t.violation(&a, nb.clone(), na.clone(), format!("equality must hold exactly when l_1 = l_2 ({l1},{l2})"));
            }
            let (p1, p2) = (l1 as u64, l2 as u64);
            let pairs = [
                ("n_u1_two", &na),
                ("n_u2_two", &nb),
                ("n_u1_two_rooted", &ra),
                ("n_u2_two_rooted", &rb),
            ];
            for (fam, exact) in pairs {
                let f = closed_form(fam, &[p1, p2])?;
                if &f != exact {
                    t.note(FindingKind::FormulaDiscrepancy, format!("{fam} disagrees"), || format!("({l1},{l2}): {f} vs {exact}"));
                }
            }
            let diff = big((p1 - p2) * (p1 * p2 + p2 + p1 - 1) / 2);
            let rdiff = big((p1 + 1) * (p2 + 1) * (p1 - p2) / 2);
            if diff != &na - &nb {
                t.note(FindingKind::FormulaDiscrepancy, "difference of totals", || format!("({l1},{l2})"));
            }
            if rdiff != &ra - &rb {
                t.note(FindingKind::FormulaDiscrepancy, "difference at the branch vertices", || format!("({l1},{l2})"));
            }
        }
    }
    Ok(t.finish())
}

/// `U_1(4,3)` against `U_1(3,2,2)`.
fn l3_6(_params: &Params) -> Result<Verdict> {
    let mut t = Tally::new(TheoremId::L3_6, Params::default());
    let a = u_cycle_seg(&[4, 3], 1)?;
    let b = u_cycle_seg(&[3, 2, 2], 1)?;
    let (na, nb, ra, rb) = (total(&a)?, total(&b)?, at(&a, 0)?, at(&b, 0)?);
    t.case();
    t.less(&a, &na, &nb, || "n(U_1(4,3)) vs n(U_1(3,2,2))".into());
    t.case();
    t.less(&a, &ra, &rb, || "n(c, U_1(4,3)) vs n(b, U_1(3,2,2))".into());
    t.findings.push(Finding::new(
        FindingKind::Witness,
        format!("n(U_1(4,3)) = {na}, n(U_1(3,2,2)) = {nb}; at the branch vertices {ra} and {rb}"),
    ));
    Ok(t.finish())
}

/// `n(z, U_1(l_1, l_2))` for `z` on the cycle at distance `d` from the branch vertex.
fn rooted_u1_formula(l1: i128, l2: i128, d: i128) -> i128 {
    (l1 * l1 + l1) / 2 + l2 * (l1 - d + 1) * (l1 - d) / 2 + l2 * (d + 1) * d / 2
}

/// The lower bound `l_2(l_1(l_1 − d − 2) + d² − l_2)` for `n(U) − n(C)`.
fn gap_expression(l1: i128, l2: i128, d: i128) -> i128 {
    l2 * (l1 * (l1 - d - 2) + d * d - l2)
}

fn to_i128(v: &BigUint) -> i128 {
    i128::try_from(v.clone()).expect("fits in i128")
}

/// Shared body of the cycle-shortening suites: `G` glued at a vertex of `C_n`
/// versus at the cycle vertex of `U_1(l_1, l_2)` at distance `d` from the
/// branch vertex.
fn shortening(t: &mut Tally, l1: usize, l2: usize, d: usize, attachments: &[(Graph, usize)]) -> Result<()> {
    let n = l1 + l2;
    let cn = cycle(n)?;
    let u = u_cycle_seg(&[l1, l2], 1)?;
    let (nu1, nz) = (total(&u)?, at(&u, d)?);
    let (ncn, nucn) = (total(&cn)?, at(&cn, 0)?);
    let (a, b, dd) = (l1 as i128, l2 as i128, d as i128);
    if to_i128(&nz) != rooted_u1_formula(a, b, dd) {
        t.note(FindingKind::FormulaDiscrepancy, format!("rooted count of U_1(l_1,l_2) at distance {d}"), || {
            format!("({l1},{l2}): formula {}, exact {nz}", rooted_u1_formula(a, b, dd))
        });
    }
    if to_i128(&nucn) != (n * n + n) as i128 / 2 {
        t.note(FindingKind::FormulaDiscrepancy, "rooted count of C_n", || format!("n = {n}"));
    }
    let rooted_gap = b * (a * (a - 1 - dd) + dd * dd - b - 1);
    if rooted_gap != 2 * (to_i128(&nz) - to_i128(&nucn)) {
        t.note(FindingKind::FormulaDiscrepancy, format!("displayed n(z,U_1) - n(u,C_n) at d = {d}"), || {
            format!("({l1},{l2}): expression {}/2, exact {}", rooted_gap, to_i128(&nz) - to_i128(&nucn))
        });
    }
    let base_gap = to_i128(&nu1) - to_i128(&ncn) + to_i128(&nz) - to_i128(&nucn);
    let expr = gap_expression(a, b, dd);
    if expr != base_gap {
        t.note(FindingKind::FormulaDiscrepancy, format!("lower-bound expression at d = {d} is not the stated simplification"), || {
            format!("({l1},{l2}): expression {expr}, exact {base_gap}")
        });
    }
    for (g, v) in attachments {
        let c = cn.merge_vertices(0, g, *v)?;
        let uu = u.merge_vertices(d, g, *v)?;
        t.case();
        let (nc, nuu) = (total(&c)?, total(&uu)?);
        t.at_most(&c, &nc, &nuu, || format!("n(C_{n}(v,G)) vs U_1({l1},{l2}) glued at distance {d}"));
        if d == 0 && nc == nuu {
            t.note(FindingKind::Degenerate, "strict inequality fails: n(C) = n(U) at d = 0", || {
                format!("(l_1, l_2) = ({l1},{l2}), G {}, both {nc}", show(g, *v))
            });
        }
    }
    Ok(())
}

fn random_attachments(seed: u64, salt: u64, count: usize, cycle_len: usize) -> Vec<(Graph, usize)> {
    let pool = corpus::seeded_corpus(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt);
    let mut out = Vec::new();
    while out.len() < count {
        let (g, v) = pick_with_edges(&mut rng, &pool);
        if g.is_tree() || g.edge_count() + cycle_len <= ORACLE_BUDGET {
            out.push((g, v));
        }
    }
    out
}

/// Lemma for `d = 0`: `n(C) < n(U)` whenever `n = l_1 + l_2`, `l_1 >= l_2 >= 1`, `l_1 >= 3`.
fn l3_7(params: &Params) -> Result<Verdict> {
    let n = order_of(params, 10, 4, 14)?;
    let count = count_of(params, 10)?;
    let seed = seed_of(params);
    let mut t = Tally::new(TheoremId::L3_7, Params { n: Some(n), seed: Some(seed), count: Some(count), ..Default::default() });
    for l1 in 3..n {
        for l2 in 1..=l1.min(n - l1) {
            let mut att = small_rooted();
            att.extend(random_attachments(seed, (l1 * 64 + l2) as u64, count, l1 + l2));
            shortening(&mut t, l1, l2, 0, &att)?;
            let expr = gap_expression(l1 as i128, l2 as i128, 0);
            if expr <= 0 {
                t.note(FindingKind::FormulaDiscrepancy, "the lower-bound expression is not positive at d = 0", || {
                    format!("(l_1, l_2) = ({l1},{l2}) gives {expr}")
                });
            }
        }
    }
    Ok(t.finish())
}

/// Sign checks for `d ∈ {0, 1, 2}` under the conditions `d = 0`; `d = 1, l_2 = 1`;
/// `d = 2, l_2 <= 2`.
fn r3_8(params: &Params) -> Result<Verdict> {
    let n = order_of(params, 12, 4, 14)?;
    let count = count_of(params, 5)?;
    let seed = seed_of(params);
    let mut t = Tally::new(TheoremId::R3_8, Params { n: Some(n), seed: Some(seed), count: Some(count), ..Default::default() });
    for d in 0..=2usize {
        for l1 in 3..n {
            for l2 in 1..=l1.min(n - l1) {
                let allowed = match d {
                    0 => true,
                    1 => l2 == 1,
                    _ => l2 <= 2,
                };
                if !allowed || l1 <= d + 1 {
                    continue;
                }
                let expr = gap_expression(l1 as i128, l2 as i128, d as i128);
                t.case();
                if expr < 0 {
                    t.violation(
                        &u_cycle_seg(&[l1, l2], 1)?,
                        BigUint::zero(),
                        BigUint::zero(),
                        format!("expression negative ({expr}) at l_1 = {l1}, l_2 = {l2}, d = {d}"),
                    );
                }
                let mut att = small_rooted();
                att.extend(random_attachments(seed, (d * 4096 + l1 * 64 + l2) as u64, count, l1 + l2));
                shortening(&mut t, l1, l2, d, &att)?;
            }
        }
    }
    Ok(t.finish())
}

/// Both sliding chains on `P(n, k, G, v)` for every order up to `n`.
fn l4_1(params: &Params) -> Result<Verdict> {
    let n = order_of(params, 12, 1, 20)?;
    let seed = seed_of(params);
    let mut t = Tally::new(TheoremId::L4_1, Params { n: Some(n), seed: Some(seed), ..Default::default() });
    let pool = corpus::seeded_corpus(seed);
    for g in &pool {
        for v in 0..g.vertex_count() {
            for order in 1..=n {
                let chain = sliding_chain(order);
                let graphs: Vec<Graph> = chain.iter().map(|&k| slide(order, k, g, v)).collect::<Result<_>>()?;
                let sig: Vec<BigUint> = graphs.iter().map(merrifield_simmons).collect();
                let z: Vec<BigUint> = graphs.iter().map(hosoya).collect();
                t.case();
                for i in 1..chain.len() {
                    let (a, b) = (chain[i - 1], chain[i]);
                    if g.vertex_count() == 1 {
                        if sig[i] == sig[i - 1] {
                            t.note(FindingKind::Degenerate, "G = K_1 makes every position the same graph P_n", || format!("n = {order}"));
                        }
                        continue;
                    }
                    t.less(&graphs[i], &sig[i], &sig[i - 1], || format!("sigma(P({order},{b},G,v)) after position {a}"));
                    t.less(&graphs[i - 1], &z[i - 1], &z[i], || format!("Z(P({order},{a},G,v)) before position {b}"));
                }
            }
        }
    }
    Ok(t.finish())
}

/// Gathering two branches at one of their attachment vertices.
fn l4_2(params: &Params) -> Result<Verdict> {
    let count = count_of(params, 200)?;
    let seed = seed_of(params);
    let mut t = Tally::new(TheoremId::L4_2, Params { seed: Some(seed), count: Some(count), ..Default::default() });
    let mut instances = Vec::new();
    let small = small_rooted();
    for k in corpus::small_connected_graphs(4).into_iter().filter(|k| k.vertex_count() >= 2) {
        for v in 0..k.vertex_count() {
            for u in 0..k.vertex_count() {
                if u != v {
                    for h1 in &small {
                        for h2 in &small {
                            instances.push((k.clone(), v, u, h1.clone(), h2.clone()));
                        }
                    }
                }
            }
        }
    }
    let pool = corpus::seeded_corpus(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x42);
    for _ in 0..count {
        let (k, v) = pick(&mut rng, &pool, 2);
        let u = (v + rng.random_range(1..k.vertex_count())) % k.vertex_count();
        instances.push((k, v, u, pick_with_edges(&mut rng, &pool), pick_with_edges(&mut rng, &pool)));
    }
    for (k, v, u, (h1, v1), (h2, u2)) in instances {
        let g = k.merge_vertices(v, &h1, v1)?.merge_vertices(u, &h2, u2)?;
        let g1 = k.merge_vertices(v, &h1, v1)?.merge_vertices(v, &h2, u2)?;
        let g2 = k.merge_vertices(u, &h1, v1)?.merge_vertices(u, &h2, u2)?;
        t.case();
        let best = merrifield_simmons(&g1).max(merrifield_simmons(&g2));
        t.less(&g, &merrifield_simmons(&g), &best, || "sigma(G) vs max(sigma(G_1), sigma(G_2))".into());
    }
    Ok(t.finish())
}

/// Pulling a pendant segment off a long cycle.
fn l4_3(params: &Params) -> Result<Verdict> {
    let n = order_of(params, 12, 4, 24)?;
    let mut t = Tally::new(TheoremId::L4_3, Params { n: Some(n), ..Default::default() });
    for lengths in nonincreasing(4, n, n) {
        for i in 0..lengths.len() {
            if lengths[i] <= 3 || (i > 0 && lengths[i] == lengths[i - 1]) {
                continue;
            }
            let before = u_cycle_seg(&lengths, i + 1)?;
            let s0 = merrifield_simmons(&before);
            for a in 3..lengths[i] {
                let mut split = lengths.clone();
                split[i] = a;
                split.push(lengths[i] - a);
                let after = u_cycle_seg(&split, i + 1)?;
                t.case();
                if lengths.len() == 1 {
                    // a bare cycle has no branching vertex to pull towards
                    let s1 = merrifield_simmons(&after);
                    if s0 >= s1 {
                        t.note(FindingKind::Degenerate, "pure cycle (single segment): pulling does not increase sigma", || {
                            format!("C_{} has sigma {s0}, C_{a} with a pendant path of length {} has {s1}", lengths[0], lengths[0] - a)
                        });
                    }
                    continue;
                }
                t.less(&before, &s0, &merrifield_simmons(&after), || format!("sigma(U_{}({lengths:?})) vs split {split:?}", i + 1));
            }
        }
    }
    Ok(t.finish())
}

/// Three strict inequalities with `G` glued at the branch vertex.
fn l4_4(params: &Params) -> Result<Verdict> {
    let seed = seed_of(params);
    let mut t = Tally::new(TheoremId::L4_4, Params { seed: Some(seed), ..Default::default() });
    let pool = corpus::seeded_corpus(seed);
    let mut hosts: Vec<(usize, Graph, Graph, &str)> = Vec::new();
    for l in 3..=6 {
        hosts.push((l, u_cycle_seg(&[l, 4], 2)?, u_cycle_seg(&[l, 2, 2], 1)?, "U_2(l,4) vs U_1(l,2,2)"));
        hosts.push((l, u_cycle_seg(&[l, 3], 2)?, u_cycle_seg(&[l, 2, 1], 1)?, "U_2(l,3) vs U_1(l,2,1)"));
        hosts.push((l, u_cycle_seg(&[l, 3], 2)?, u_cycle_seg(&[l, 1, 1, 1], 1)?, "U_2(l,3) vs U_1(l,1,1,1)"));
    }
    for g in &pool {
        for v in 0..g.vertex_count() {
            for (l, lhs, rhs, what) in &hosts {
                let (x, y) = (attach_at_branch(lhs, g, v)?, attach_at_branch(rhs, g, v)?);
                let (sx, sy) = (merrifield_simmons(&x), merrifield_simmons(&y));
                t.case();
                if g.vertex_count() == 1 && sx == sy {
                    t.note(FindingKind::Degenerate, format!("{what}: equality when G is a single vertex"), || {
                        format!("l = {l}, sigma = {sx}")
                    });
                    continue;
                }
                t.less(&x, &sx, &sy, || format!("{what}, l = {l}"));
            }
        }
    }
    Ok(t.finish())
}

/// Parity comparison of `sigma(P_n ∪ P_{m−1})` and `sigma(P_{n−1} ∪ P_m)`.
fn l4_5(params: &Params) -> Result<Verdict> {
    let n = order_of(params, 15, 1, 60)?;
    let mut t = Tally::new(TheoremId::L4_5, Params { n: Some(n), ..Default::default() });
    for nn in 1..=n {
        for m in 1..=nn {
            let a = path0(nn).disjoint_union(&path0(m - 1));
            let b = path0(nn - 1).disjoint_union(&path0(m));
            let (sa, sb) = (merrifield_simmons(&a), merrifield_simmons(&b));
            t.case();
            if m % 2 == 1 {
                t.at_most(&a, &sa, &sb, || format!("sigma(P_{nn} ∪ P_{}) for odd m = {m}", m - 1));
            } else {
                t.at_most(&b, &sb, &sa, || format!("sigma(P_{} ∪ P_{m}) for even m", nn - 1));
            }
        }
    }
    Ok(t.finish())
}

/// The two-path chain for every order up to `n`, plus the Fibonacci identity
/// `sigma(P_i ∪ P_j) = F_{i+2} F_{j+2} = Z(P_{i+1} ∪ P_{j+1})` for `0 <= i, j <= 15`.
fn l4_6(params: &Params) -> Result<Verdict> {
    let n = order_of(params, 20, 2, 60)?;
    let mut t = Tally::new(TheoremId::L4_6, Params { n: Some(n), ..Default::default() });
    for order in 2..=n {
        let chain = sliding_chain(order);
        let graphs: Vec<Graph> = chain.iter().map(|&k| path0(order - k).disjoint_union(&path0(k))).collect();
        let sig: Vec<BigUint> = graphs.iter().map(merrifield_simmons).collect();
        t.case();
        for i in 1..chain.len() {
            let pair = |k: usize| {
                let (a, b) = (order - k, k);
                (a.min(b), a.max(b))
            };
            if pair(chain[i - 1]) == pair(chain[i]) {
                t.note(FindingKind::Degenerate, "adjacent positions compare isomorphic unions", || {
                    format!("n = {order}, k = {} and {}", chain[i - 1], chain[i])
                });
                continue;
            }
            t.less(&graphs[i - 1], &sig[i - 1], &sig[i], || format!("sigma at k = {} vs k = {} (n = {order})", chain[i - 1], chain[i]));
        }
    }
    for i in 0..=15usize {
        for j in 0..=15usize {
            let s = merrifield_simmons(&path0(i).disjoint_union(&path0(j)));
            let f = fibonacci(i as u64 + 2) * fibonacci(j as u64 + 2);
            let z = hosoya(&path0(i + 1).disjoint_union(&path0(j + 1)));
            t.case();
            if s != f || z != f {
                let g = path0(i).disjoint_union(&path0(j));
                t.violation(&g, f.clone(), s.clone(), format!("Fibonacci identity at ({i},{j}): sigma {s}, Z {z}, product {f}"));
            }
        }
    }
    Ok(t.finish())
}
