use std::collections::BTreeSet;

use num_bigint::BigUint;

use super::{Counterexample, Extremum, Finding, FindingKind, Params, Sense, TheoremId, Verdict};
use crate::canon::{canonical_key, CanonicalKey};
use crate::enumeration::{unicyclic, ClassFilter, Member, MAX_UNICYCLIC_ORDER};
use crate::error::{Error, Result};
use crate::families::{u1n, u_cycle_seg, u_two_branch, up, us};
use crate::graph::{Graph, SegmentSequence};
use crate::invariants::oracle::{hosoya_oracle, sigma_oracle, subtree_count_oracle, wiener_oracle};
use crate::invariants::{subtree_profile, Invariant, SubtreeProfile};
use crate::parallel::par_map;

fn violated(msg: impl Into<String>) -> Error {
    Error::HypothesisViolated(msg.into())
}

fn oracle_value(inv: Invariant, g: &Graph) -> Option<BigUint> {
    match inv {
        Invariant::Subtrees => subtree_count_oracle(g).ok().map(|p| p.total()),
        Invariant::Wiener => wiener_oracle(g).ok(),
        Invariant::Sigma => sigma_oracle(g).ok(),
        Invariant::Hosoya => hosoya_oracle(g).ok(),
    }
}

/// A class with one invariant evaluated on every member.
struct Scan {
    members: Vec<Member>,
    values: Vec<BigUint>,
    invariant: Invariant,
}

impl Scan {
    fn new(filter: &ClassFilter, invariant: Invariant, workers: usize) -> Result<Self> {
        let members = unicyclic(filter)?;
        let values = par_map(&members, workers, |m| invariant.evaluate(&m.graph)).into_iter().collect::<Result<_>>()?;
        Ok(Scan { members, values, invariant })
    }

    fn extremum(&self, sense: Sense) -> (BigUint, Vec<usize>) {
        let best = match sense {
            Sense::Max => self.values.iter().max(),
            Sense::Min => self.values.iter().min(),
        }
        .cloned()
        .unwrap_or_default();
        let idx = (0..self.values.len()).filter(|&i| self.values[i] == best).collect();
        (best, idx)
    }

    fn contains(&self, key: &CanonicalKey) -> bool {
        self.members.binary_search_by(|m| m.key.cmp(key)).is_ok()
    }
}

/// Outcome of comparing one claimed construction with a class extremum.
struct Judged {
    extremum: Extremum,
    counterexample: Option<Counterexample>,
    findings: Vec<Finding>,
}

fn judge(scan: &Scan, sense: Sense, claimed: &Graph, label: &str) -> Result<Judged> {
    let key = canonical_key(claimed)?;
    let claimed_value = scan.invariant.evaluate(claimed)?;
    let (value, idx) = scan.extremum(sense);
    let achieved_by: Vec<CanonicalKey> = idx.iter().map(|&i| scan.members[i].key.clone()).collect();
    let in_class = scan.contains(&key);
    let attained = in_class && achieved_by.contains(&key);
    let mut findings = Vec::new();
    if !in_class {
        findings.push(Finding::new(FindingKind::Convention, format!("{label} is not a member of the class")));
    }
    if attained && achieved_by.len() > 1 {
        let others: Vec<String> = achieved_by.iter().filter(|k| **k != key).map(|k| k.to_hex()).collect();
        findings.push(Finding::new(
            FindingKind::CoExtremal,
            format!("{} {} = {value} also attained by {}", sense_word(sense), scan.invariant.name(), others.join(", ")),
        ));
    }
    let mut oracle_disagrees = None;
    if let Some(&first) = idx.first() {
        if let Some(o) = oracle_value(scan.invariant, &scan.members[first].graph) {
            if o != value {
                oracle_disagrees = Some(o.clone());
                findings.push(Finding::new(
                    FindingKind::OracleMismatch,
                    format!("{} of {}: engine {value}, oracle {o}", scan.invariant.name(), scan.members[first].key),
                ));
            }
        }
    }
    let witness = idx.first().map(|&i| scan.members[i].graph.clone()).unwrap_or_else(|| claimed.clone());
    let counterexample = if !attained {
        Some(Counterexample {
            graph: witness,
            expected: claimed_value,
            actual: value.clone(),
            detail: format!("{} {} over the class differs from {label}", sense_word(sense), scan.invariant.name()),
        })
    } else if let Some(o) = oracle_disagrees {
        Some(Counterexample {
            graph: witness,
            expected: o,
            actual: value.clone(),
            detail: format!("engine {} disagrees with the brute-force oracle", scan.invariant.name()),
        })
    } else {
        None
    };
    Ok(Judged {
        extremum: Extremum { sense, invariant: scan.invariant, value, claimed: key, achieved_by, attained },
        counterexample,
        findings,
    })
}

fn sense_word(s: Sense) -> &'static str {
    match s {
        Sense::Max => "maximum",
        Sense::Min => "minimum",
    }
}

fn verdict(id: TheoremId, params: &Params, class_size: usize, primary: Judged, rest: Vec<Judged>, extra: Vec<Finding>) -> Verdict {
    let mut counterexample = primary.counterexample;
    let mut findings = primary.findings;
    let mut also = Vec::new();
    for j in rest {
        counterexample = counterexample.or(j.counterexample);
        findings.extend(j.findings);
        also.push(j.extremum);
    }
    findings.extend(extra);
    Verdict {
        theorem: id,
        params: params.clone(),
        holds: counterexample.is_none(),
        class_size,
        extremal_value: primary.extremum.value,
        claimed: Some(primary.extremum.claimed),
        achieved_by: primary.extremum.achieved_by,
        counterexample,
        findings,
        also,
    }
}

fn single_claim(id: TheoremId, params: &Params, filter: ClassFilter, inv: Invariant, claimed: Graph, label: &str, workers: usize) -> Result<Verdict> {
    let scan = Scan::new(&filter, inv, workers)?;
    let j = judge(&scan, Sense::Max, &claimed, label)?;
    let mut extra = Vec::new();
    if filter.segment_sequence.as_ref().is_some_and(|s| s.len() == 1) {
        extra.push(Finding::new(FindingKind::Convention, "pure cycle read as a single closed segment"));
    }
    Ok(verdict(id, params, scan.members.len(), j, Vec::new(), extra))
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_UNICYCLIC_ORDER {
        return Err(Error::TooLarge(format!("classes are enumerated up to order {MAX_UNICYCLIC_ORDER}, got {n}")));
    }
    Ok(())
}

fn t1(params: &Params, workers: usize) -> Result<Verdict> {
    let id = TheoremId::T1Uni;
    let n = params.need_n(id)?;
    if n < 3 {
        return Err(violated("T1 needs n >= 3"));
    }
    check_order(n)?;
    let scan = Scan::new(&ClassFilter::order(n), Invariant::Subtrees, workers)?;
    let top = judge(&scan, Sense::Max, &us(n, 3)?, &format!("US_{n}"))?;
    let bottom = judge(&scan, Sense::Min, &up(n, 3)?, &format!("UP_{n}"))?;
    let extra = super::formulas::family_findings(n);
    Ok(verdict(id, params, scan.members.len(), top, vec![bottom], extra))
}

fn t2(params: &Params, workers: usize) -> Result<Verdict> {
    let id = TheoremId::T2Girth;
    let n = params.need_n(id)?;
    let l = params.girth.ok_or_else(|| violated("T2 needs a girth"))?;
    if l < 3 || n < l {
        return Err(violated(format!("T2 needs n >= l >= 3, got n = {n}, l = {l}")));
    }
    check_order(n)?;
    let filter = ClassFilter::with_girth(n, l);
    let members = unicyclic(&filter)?;
    let profiles: Vec<SubtreeProfile> = par_map(&members, workers, |m| subtree_profile(&m.graph)).into_iter().collect::<Result<_>>()?;
    let top_graph = us(n, l)?;
    let bottom_graph = up(n, l)?;
    let top = subtree_profile(&top_graph)?;
    let bottom = subtree_profile(&bottom_graph)?;
    let mut counterexample = None;
    'scan: for (m, p) in members.iter().zip(&profiles) {
        for k in 0..=n {
            let (v, hi, lo) = (p.get(k), top.get(k), bottom.get(k));
            if v > hi || v < lo {
                let expected = if v > hi { hi } else { lo };
                counterexample = Some(Counterexample {
                    graph: m.graph.clone(),
                    expected,
                    actual: v,
                    detail: format!("n_{k} outside [n_{k}(UP), n_{k}(US)]"),
                });
                break 'scan;
            }
        }
    }
    let scan = Scan { values: profiles.iter().map(|p| p.total()).collect(), members, invariant: Invariant::Subtrees };
    let hi = judge(&scan, Sense::Max, &top_graph, &format!("US_{n}^{l}"))?;
    let lo = judge(&scan, Sense::Min, &bottom_graph, &format!("UP_{n}^{l}"))?;
    let mut v = verdict(id, params, scan.members.len(), hi, vec![lo], Vec::new());
    if counterexample.is_some() {
        v.holds = false;
        v.counterexample = counterexample;
    }
    Ok(v)
}

fn seq_filter(seq: &SegmentSequence) -> Result<ClassFilter> {
    check_order(seq.total())?;
    Ok(ClassFilter::segments(seq.clone()))
}

fn t3(params: &Params, workers: usize) -> Result<Verdict> {
    let id = TheoremId::T3SubtreeSegseq;
    let seq = params.need_segments(id)?;
    if seq.longest().unwrap_or(0) < 3 {
        return Err(violated(format!("T3 needs l_1 >= 3, got {seq}")));
    }
    let claimed = u_cycle_seg(seq.lengths(), 1)?;
    single_claim(id, params, seq_filter(seq)?, Invariant::Subtrees, claimed, &format!("U_1{seq}"), workers)
}

/// Extremal graph for short segments: `U_{l1,l2}(left; right)` or `U¹_m`.
fn short_claim(id: TheoremId, seq: &SegmentSequence, sigma: bool) -> Result<(Graph, String)> {
    let l = seq.lengths();
    let m = l.len();
    match l.first().copied() {
        Some(2) if m >= 4 => {
            let (left, right) = if sigma { (l[3..].to_vec(), vec![l[2]]) } else { (l[2..m - 1].to_vec(), vec![l[m - 1]]) };
            let g = u_two_branch(l[0], l[1], &left, &right)?;
            Ok((g, format!("U_{{{},{}}}({left:?}; {right:?})", l[0], l[1])))
        }
        Some(1) if m >= 6 => Ok((u1n(m)?, format!("U1_{m}"))),
        Some(2) => Err(violated(format!("{id} with l_1 = 2 needs m >= 4, got m = {m}"))),
        Some(1) => Err(violated(format!("{id} with l_1 = 1 needs m >= 6, got m = {m}"))),
        _ => Err(violated(format!("{id} needs l_1 <= 2, got {seq}"))),
    }
}

fn t4(params: &Params, workers: usize) -> Result<Verdict> {
    let id = TheoremId::T4ShortSubtree;
    let seq = params.need_segments(id)?;
    let (claimed, label) = short_claim(id, seq, false)?;
    single_claim(id, params, seq_filter(seq)?, Invariant::Subtrees, claimed, &label, workers)
}

/// Non-increasing sequences of `m` positive parts summing to `n`.
fn compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, parts: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = left.div_ceil(parts).max(1);
        for x in (lo..=cap.min(left + 1 - parts)).rev() {
            cur.push(x);
            rec(left - x, parts - 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m >= 1 && n >= m {
        rec(n, m, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Sequences meeting the balance window `2 l_i + 1 <= l_1 <= 2 l_i + 3`.
fn balanced_sequences(n: usize, m: usize) -> Vec<Vec<usize>> {
    compositions(n, m)
        .into_iter()
        .filter(|l| l[0] >= 3 && l[1..].iter().all(|&x| 2 * x + 1 <= l[0] && l[0] <= 2 * x + 3))
        .collect()
}

fn segnum_bounds(id: TheoremId, params: &Params) -> Result<(usize, usize)> {
    let n = params.need_n(id)?;
    let m = params.segment_count.ok_or_else(|| violated(format!("{id} needs a segment count")))?;
    if n < 3 || m < 1 || n < m {
        return Err(violated(format!("{id} needs n >= 3 and n >= m >= 1, got n = {n}, m = {m}")));
    }
    check_order(n)?;
    Ok((n, m))
}

fn t5(params: &Params, workers: usize) -> Result<Verdict> {
    let id = TheoremId::T5SegnumSubtree;
    let (n, m) = segnum_bounds(id, params)?;
    let filter = ClassFilter::segment_count(n, m);
    if n >= m + 2 {
        let candidates = balanced_sequences(n, m);
        let scan = Scan::new(&filter, Invariant::Subtrees, workers)?;
        let (best, _) = scan.extremum(Sense::Max);
        let mut extra = Vec::new();
        let mut chosen = None;
        for c in &candidates {
            let g = u_cycle_seg(c, 1)?;
            let value = Invariant::Subtrees.evaluate(&g)?;
            let seq = SegmentSequence::new(c.clone());
            if value == best {
                extra.push(Finding::new(FindingKind::Witness, format!("maximum attained by U_1{seq}")));
                chosen.get_or_insert(g);
            } else {
                extra.push(Finding::new(FindingKind::Witness, format!("balanced U_1{seq} gives {value} < {best}")));
            }
        }
        let Some(first) = candidates.first() else {
            return Ok(no_balanced_sequence(id, params, &scan, n, m));
        };
        let claimed = match chosen {
            Some(g) => g,
            None => u_cycle_seg(first, 1)?,
        };
        let j = judge(&scan, Sense::Max, &claimed, "balanced U_1")?;
        return Ok(verdict(id, params, scan.members.len(), j, Vec::new(), extra));
    }
    let (claimed, label) = if n == m + 1 {
        if m < 4 {
            return Err(violated(format!("T5(ii) needs m >= 4, got m = {m}")));
        }
        (u_two_branch(2, 1, &vec![1; m - 3], &[1])?, format!("U_{{2,1}}(1^{}; 1)", m - 3))
    } else {
        if n < 6 {
            return Err(violated(format!("T5(iii) needs n >= 6, got n = {n}")));
        }
        (u1n(n)?, format!("U1_{n}"))
    };
    single_claim(id, params, filter, Invariant::Subtrees, claimed, &label, workers)
}

fn no_balanced_sequence(id: TheoremId, params: &Params, scan: &Scan, n: usize, m: usize) -> Verdict {
    let (best, idx) = scan.extremum(Sense::Max);
    let detail = format!("no balanced sequence exists for n = {n}, m = {m}");
    Verdict {
        theorem: id,
        params: params.clone(),
        holds: false,
        class_size: scan.members.len(),
        extremal_value: best.clone(),
        claimed: None,
        achieved_by: idx.iter().map(|&i| scan.members[i].key.clone()).collect(),
        counterexample: idx.first().map(|&i| Counterexample {
            graph: scan.members[i].graph.clone(),
            expected: best.clone(),
            actual: best.clone(),
            detail: detail.clone(),
        }),
        findings: vec![Finding::new(FindingKind::Witness, detail)],
        also: Vec::new(),
    }
}

/// Index (1-based) of the first occurrence of the smallest even entry that is
/// at least 4, if any.
fn sigma_cycle_index(l: &[usize]) -> usize {
    let best = l.iter().copied().filter(|&x| x >= 4 && x % 2 == 0).min();
    match best {
        Some(b) => l.iter().position(|&x| x == b).unwrap() + 1,
        None => 1,
    }
}

fn t6(params: &Params, workers: usize) -> Result<Verdict> {
    let id = TheoremId::T6SigmaSegseq;
    let seq = params.need_segments(id)?;
    if seq.longest().unwrap_or(0) < 3 {
        return Err(violated(format!("T6 needs l_1 >= 3, got {seq}")));
    }
    let i = sigma_cycle_index(seq.lengths());
    let claimed = u_cycle_seg(seq.lengths(), i)?;
    single_claim(id, params, seq_filter(seq)?, Invariant::Sigma, claimed, &format!("U_{i}{seq}"), workers)
}

fn t7(params: &Params, workers: usize) -> Result<Verdict> {
    let id = TheoremId::T7ShortSigma;
    let seq = params.need_segments(id)?;
    let (claimed, label) = short_claim(id, seq, true)?;
    single_claim(id, params, seq_filter(seq)?, Invariant::Sigma, claimed, &label, workers)
}

fn t8(params: &Params, workers: usize) -> Result<Verdict> {
    let id = TheoremId::T8SegnumSigma;
    let (n, m) = segnum_bounds(id, params)?;
    let (claimed, label) = if n >= m + 3 {
        if m < 2 {
            return Err(violated("T8(i) needs m >= 2"));
        }
        let mut l = vec![n - m - 2, 4];
        l.extend(std::iter::repeat_n(1, m - 2));
        (u_cycle_seg(&l, 2)?, format!("U_2{l:?}"))
    } else if n == m + 2 || n == m + 1 {
        if m < 4 {
            return Err(violated(format!("T8 at n - m = {} needs m >= 4, got m = {m}", n - m)));
        }
        let arc = n - m;
        (u_two_branch(2, arc, &vec![1; m - 3], &[1])?, format!("U_{{2,{arc}}}(1^{}; 1)", m - 3))
    } else {
        if n < 6 {
            return Err(violated(format!("T8(iv) needs n >= 6, got n = {n}")));
        }
        (u1n(n)?, format!("U1_{n}"))
    };
    single_claim(id, params, ClassFilter::segment_count(n, m), Invariant::Sigma, claimed, &label, workers)
}

/// Check a theorem on one parameter set, single-threaded.
pub fn check_theorem(id: TheoremId, params: &Params) -> Result<Verdict> {
    check_theorem_with_workers(id, params, 1)
}

/// Check a theorem, evaluating class members on up to `workers` threads. The
/// verdict does not depend on `workers`.
pub fn check_theorem_with_workers(id: TheoremId, params: &Params, workers: usize) -> Result<Verdict> {
    match id {
        TheoremId::T1Uni => t1(params, workers),
        TheoremId::T2Girth => t2(params, workers),
        TheoremId::T3SubtreeSegseq => t3(params, workers),
        TheoremId::T4ShortSubtree => t4(params, workers),
        TheoremId::T5SegnumSubtree => t5(params, workers),
        TheoremId::T6SigmaSegseq => t6(params, workers),
        TheoremId::T7ShortSigma => t7(params, workers),
        TheoremId::T8SegnumSigma => t8(params, workers),
        other => Err(violated(format!("{other} is a lemma; use check_lemma"))),
    }
}

/// Segment sequences of all unicyclic graphs with at most `max_order`
/// vertices, ascending.
pub fn admissible_segment_sequences(max_order: usize) -> Result<Vec<SegmentSequence>> {
    check_order(max_order)?;
    let mut seen = BTreeSet::new();
    for n in 3..=max_order {
        for m in unicyclic(&ClassFilter::order(n))? {
            seen.insert(m.graph.segment_sequence()?);
        }
    }
    Ok(seen.into_iter().collect())
}

/// Every parameter set with order at most `max_order` that meets the
/// theorem's hypotheses.
pub fn admissible_params(id: TheoremId, max_order: usize) -> Result<Vec<Params>> {
    check_order(max_order)?;
    let seqs = || admissible_segment_sequences(max_order);
    let out = match id {
        TheoremId::T1Uni => (3..=max_order).map(Params::order).collect(),
        TheoremId::T2Girth => (3..=max_order).flat_map(|n| (3..=n).map(move |l| Params::girth(n, l))).collect(),
        TheoremId::T3SubtreeSegseq | TheoremId::T6SigmaSegseq => {
            seqs()?.into_iter().filter(|s| s.longest().unwrap_or(0) >= 3).map(Params::segments).collect()
        }
        TheoremId::T4ShortSubtree | TheoremId::T7ShortSigma => seqs()?
            .into_iter()
            .filter(|s| matches!((s.longest(), s.len()), (Some(2), m) if m >= 4) || matches!((s.longest(), s.len()), (Some(1), m) if m >= 6))
            .map(Params::segments)
            .collect(),
        TheoremId::T5SegnumSubtree => segnum_pairs(max_order, |n, m| n >= m + 2 || (n == m + 1 && m >= 4) || (n == m && n >= 6)),
        TheoremId::T8SegnumSigma => segnum_pairs(max_order, |n, m| (n >= m + 3 && m >= 2) || ((n == m + 2 || n == m + 1) && m >= 4) || (n == m && n >= 6)),
        other => return Err(violated(format!("{other} is a lemma"))),
    };
    Ok(out)
}

fn segnum_pairs(max_order: usize, ok: impl Fn(usize, usize) -> bool) -> Vec<Params> {
    (3..=max_order).flat_map(|n| (1..=n).map(move |m| (n, m))).filter(|&(n, m)| ok(n, m)).map(|(n, m)| Params::segment_count(n, m)).collect()
}
