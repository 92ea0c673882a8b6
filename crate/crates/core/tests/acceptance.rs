//! Runs every acceptance criterion and prints one PASS/FAIL line each.
//!
//! Criterion 8 is known to fail: the σ-maximum claim over 𝕌_{n,m} is wrong
//! for the pairs in `KNOWN_T8_FAILURES`. The target reports it as FAIL and
//! exits non-zero only if the set of failing pairs changes or any other
//! criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;

use unicyclic::families::{cycle, path, star, u_cycle_seg, u_two_branch, up, us};
use unicyclic::invariants::closed_form::closed_form;
use unicyclic::invariants::oracle::{hosoya_oracle, sigma_oracle, subtree_count_oracle};
use unicyclic::verification::corpus::{random_instances, DEFAULT_SEED};
use unicyclic::verification::{
    admissible_params, check_lemma, check_theorem, check_theorem_with_workers, reproduce_counterexamples, FindingKind, Params,
    TheoremId, Verdict,
};
use unicyclic::*;

const KNOWN_T8_FAILURES: [(usize, usize); 10] = [(6, 4), (7, 3), (7, 5), (8, 3), (8, 4), (8, 6), (9, 3), (9, 4), (9, 5), (9, 7)];

type Outcome = std::result::Result<String, String>;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn total(g: &Graph) -> std::result::Result<BigUint, String> {
    subtree_count(g).map_err(err)
}

fn rooted(g: &Graph, v: usize) -> std::result::Result<BigUint, String> {
    rooted_subtree_count(g, &[Anchor::Vertex(v)]).map_err(err)
}

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(big(1), |acc, i| acc * big(n - i) / big(i + 1))
}

fn criterion_1() -> Outcome {
    for n in 1..=15u64 {
        let nu = n as usize;
        let p = subtree_profile(&path(nu).map_err(err)?).map_err(err)?;
        let s = subtree_profile(&star(nu).map_err(err)?).map_err(err)?;
        ensure(p.total() == big((n * n + n + 2) / 2), || format!("n(P_{n}) = {}", p.total()))?;
        ensure(s.total() == big(n) + (big(1) << (n - 1)), || format!("n(S_{n}) = {}", s.total()))?;
        ensure(p.total() == closed_form("n_path", &[n]).map_err(err)?, || format!("n_path at {n}"))?;
        for k in 1..=n {
            ensure(p.get(k as usize) == big(n - k + 1), || format!("n_{k}(P_{n})"))?;
            let expect_star = if k == 1 { big(n) } else { binomial(n - 1, k - 1) };
            ensure(s.get(k as usize) == expect_star, || format!("n_{k}(S_{n})"))?;
        }
        if n >= 3 {
            let c = subtree_profile(&cycle(nu).map_err(err)?).map_err(err)?;
            ensure(c.total() == big(n * n + 1), || format!("n(C_{n}) = {}", c.total()))?;
            for k in 1..=n {
                ensure(c.get(k as usize) == big(n), || format!("n_{k}(C_{n})"))?;
            }
        }
    }
    Ok("P_n, C_n, S_n totals and per-k entries for n in 1..=15".into())
}

fn criterion_2() -> Outcome {
    for n in 4..=14u64 {
        let v = total(&us(n as usize, 3).map_err(err)?)?;
        let want = (big(1) << (n - 1)) + (big(1) << (n - 2)) + big(n + 1);
        ensure(v == want, || format!("n(US_{n}) = {v}, expected {want}"))?;
    }
    let (u4, c4) = (total(&us(4, 3).map_err(err)?)?, total(&cycle(4).map_err(err)?)?);
    ensure(u4 == big(17) && c4 == big(17), || format!("n(US_4) = {u4}, n(C_4) = {c4}"))?;
    Ok("n(US_n) for n in 4..=14; n(US_4) = n(C_4) = 17".into())
}

fn criterion_3() -> Outcome {
    let h1 = u_two_branch(4, 4, &[1], &[1]).map_err(err)?;
    let h2 = u_cycle_seg(&[4, 4, 1, 1], 1).map_err(err)?;
    let a1 = u_cycle_seg(&[6, 4], 1).map_err(err)?;
    let a2 = u_cycle_seg(&[6, 4], 2).map_err(err)?;
    let got = [wiener(&h1).map_err(err)?, wiener(&h2).map_err(err)?, hosoya(&a1), hosoya(&a2)];
    let want = [118u64, 120, 114, 115].map(big);
    ensure(got == want, || format!("got {got:?}"))?;
    let report = reproduce_counterexamples().map_err(err)?;
    ensure(report.all_hold(), || format!("{:?}", report.checks.iter().filter(|c| !c.ok).collect::<Vec<_>>()))?;
    Ok("W = 118/120, Z = 114/115; extremal graphs diverge".into())
}

fn criterion_4() -> Outcome {
    let u = u_two_branch(2, 1, &[1], &[1]).map_err(err)?;
    let c5 = cycle(5).map_err(err)?;
    let (nu, nc) = (total(&u)?, total(&c5)?);
    ensure(nu == big(28) && nc == big(26), || format!("n(U_{{2,1}}(1;1)) = {nu}, n(C_5) = {nc}"))?;
    // vertex 1 is the degree-2 vertex on the length-2 arc
    ensure(u.degree(1) == 2, || "vertex 1 is not the middle of the 2-arc".into())?;
    let (ru, rc) = (rooted(&u, 1)?, rooted(&c5, 0)?);
    ensure(ru == big(17) && rc == big(15), || format!("rooted totals {ru} and {rc}"))?;
    Ok("28, 26, rooted 17 and 15".into())
}

fn criterion_5() -> Outcome {
    let v = check_theorem(TheoremId::T1Uni, &Params::order(5)).map_err(err)?;
    let flagged = v.findings.iter().any(|f| f.kind == FindingKind::FormulaDiscrepancy && f.detail.contains("22") && f.detail.contains("25"));
    ensure(flagged, || format!("no discrepancy finding: {:?}", v.findings))?;
    ensure(closed_form("n_up_inline", &[5]).map_err(err)? == big(22), || "inline formula at 5".into())?;
    let oracle_total = |g: &Graph| subtree_count_oracle(g).map(|p| p.total()).map_err(err);
    ensure(oracle_total(&up(5, 3).map_err(err)?)? == big(25), || "oracle n(UP_5)".into())?;
    for n in 4..=12 {
        let lo = oracle_total(&up(n, 3).map_err(err)?)?;
        let mid = oracle_total(&cycle(n).map_err(err)?)?;
        let hi = oracle_total(&us(n, 3).map_err(err)?)?;
        ensure(lo <= mid && mid <= hi, || format!("n = {n}: {lo} <= {mid} <= {hi} fails"))?;
    }
    Ok("UP_5: inline 22 vs exact 25 flagged; n(UP_n) <= n(C_n) <= n(US_n) for 4..=12".into())
}

fn oracle_equivalent(g: &Graph) -> std::result::Result<(), String> {
    let show = || crate_edges(g);
    ensure(subtree_profile(g).map_err(err)? == subtree_count_oracle(g).map_err(err)?, || format!("profile on {}", show()))?;
    ensure(merrifield_simmons(g) == sigma_oracle(g).map_err(err)?, || format!("sigma on {}", show()))?;
    ensure(hosoya(g) == hosoya_oracle(g).map_err(err)?, || format!("hosoya on {}", show()))
}

fn crate_edges(g: &Graph) -> String {
    format!("{:?}", g.edges())
}

fn criterion_6() -> Outcome {
    let mut classes = 0;
    for n in 3..=8 {
        for m in unicyclic(&ClassFilter::order(n)).map_err(err)? {
            oracle_equivalent(&m.graph)?;
            classes += 1;
        }
    }
    let sample = random_instances(500, 12, DEFAULT_SEED);
    ensure(sample.len() == 500, || format!("{} random instances", sample.len()))?;
    for g in &sample {
        oracle_equivalent(g)?;
    }
    Ok(format!("{classes} classes with n <= 8 and 500 seeded instances with n <= 12"))
}

fn sweep(id: TheoremId, max_order: usize) -> std::result::Result<Vec<Verdict>, String> {
    admissible_params(id, max_order)
        .map_err(err)?
        .iter()
        .map(|p| check_theorem(id, p).map_err(err))
        .collect()
}

fn criterion_7() -> Outcome {
    let mut runs = 0;
    for id in [TheoremId::T1Uni, TheoremId::T2Girth] {
        for v in sweep(id, 9)? {
            ensure(v.holds, || format!("{id} fails at {:?}", v.params))?;
            runs += 1;
        }
    }
    Ok(format!("T1 and T2 hold on {runs} parameter sets with n <= 9"))
}

fn criterion_8() -> Outcome {
    let mut runs = 0;
    for id in [TheoremId::T3SubtreeSegseq, TheoremId::T4ShortSubtree, TheoremId::T5SegnumSubtree, TheoremId::T6SigmaSegseq, TheoremId::T7ShortSigma] {
        for v in sweep(id, 9)? {
            ensure(v.holds, || format!("{id} fails at {:?}", v.params))?;
            runs += 1;
        }
    }
    let t8 = sweep(TheoremId::T8SegnumSigma, 9)?;
    let failing: Vec<(usize, usize)> = t8
        .iter()
        .filter(|v| !v.holds)
        .map(|v| (v.params.n.unwrap_or(0), v.params.segment_count.unwrap_or(0)))
        .collect();
    runs += t8.len();
    if failing.is_empty() {
        return Ok(format!("all {runs} parameter sets hold"));
    }
    Err(format!("T3-T7 hold; T8 fails on {} of {} pairs: {failing:?}", failing.len(), t8.len()))
}

fn criterion_9() -> Outcome {
    let a1 = u_cycle_seg(&[6, 4], 1).map_err(err)?;
    let a2 = u_cycle_seg(&[6, 4], 2).map_err(err)?;
    let (s2, s1) = (merrifield_simmons(&a2), merrifield_simmons(&a1));
    ensure(s2 == big(131) && s1 == big(129), || format!("sigma {s2} and {s1}"))?;
    ensure(sigma_oracle(&a2).map_err(err)? == s2 && sigma_oracle(&a1).map_err(err)? == s1, || "oracle disagrees".into())?;
    Ok("sigma(U_2(6,4)) = 131 > 129 = sigma(U_1(6,4)), oracle confirmed".into())
}

fn criterion_10() -> Outcome {
    let mut instances = 0;
    for &id in TheoremId::ALL.iter().filter(|id| !id.is_theorem()) {
        let v = check_lemma(id, &Params::default()).map_err(err)?;
        ensure(v.holds, || format!("{id}: {:?}", v.counterexample))?;
        ensure(v.class_size > 0, || format!("{id} evaluated nothing"))?;
        instances += v.class_size;
    }
    Ok(format!("every lemma suite holds ({instances} instances)"))
}

fn criterion_11() -> Outcome {
    let (c3, c4) = (class_count(&ClassFilter::order(3)).map_err(err)?, class_count(&ClassFilter::order(4)).map_err(err)?);
    ensure(c3 == 1 && c4 == 2, || format!("class counts {c3} and {c4}"))?;
    for n in 3..=7 {
        let fast = unicyclic(&ClassFilter::order(n)).map_err(err)?;
        let brute = enumeration::unicyclic_brute_force(n).map_err(err)?;
        ensure(fast == brute, || format!("unicyclic generation differs at n = {n}"))?;
    }
    for n in 1..=7 {
        ensure(trees(n).map_err(err)? == enumeration::trees_brute_force(n).map_err(err)?, || format!("tree generation differs at n = {n}"))?;
    }
    let mut reports: BTreeMap<usize, String> = BTreeMap::new();
    for workers in [1, 4] {
        let mut out = String::new();
        for id in [TheoremId::T1Uni, TheoremId::T3SubtreeSegseq, TheoremId::T8SegnumSigma] {
            for p in admissible_params(id, 8).map_err(err)? {
                out += &check_theorem_with_workers(id, &p, workers).map_err(err)?.to_json();
            }
        }
        out += &correlate::correlation_table(&ClassFilter::order(8), workers).map_err(err)?.to_csv();
        reports.insert(workers, out);
    }
    ensure(reports[&1] == reports[&4], || "reports differ between 1 and 4 workers".into())?;
    Ok(format!("counts 1 and 2; brute force agrees for n <= 7; {} report bytes identical at 1 and 4 workers", reports[&1].len()))
}

fn main() -> ExitCode {
    let criteria: [fn() -> Outcome; 11] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
        criterion_11,
    ];
    let mut unexpected = false;
    for (i, run) in criteria.iter().enumerate() {
        let number = i + 1;
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("criterion {number}: PASS ({elapsed:.2}s) {detail}"),
            Err(detail) => println!("criterion {number}: FAIL ({elapsed:.2}s) {detail}"),
        }
        if number == 8 {
            let expected = format!("{:?}", KNOWN_T8_FAILURES.to_vec());
            let known = matches!(&outcome, Err(d) if d.ends_with(&expected) && d.starts_with("T3-T7 hold"));
            if !known {
                println!("criterion 8: failing set differs from the recorded one {expected}");
                unexpected = true;
            }
        } else if outcome.is_err() {
            unexpected = true;
        }
    }
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
