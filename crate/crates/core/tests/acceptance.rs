//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use k4sat_core::constructions::saturation_number;
use k4sat_core::enumeration::{audit, proof_bound_from, theorem_a_from, AuditReport};
use k4sat_core::sweeps::{
    all_labeled_graphs, checker_equivalence, non_bipartite_witnesses, sweep_edge_formula,
    sweep_family_saturation, sweep_interval_coverage, sweep_overlap,
};
use k4sat_core::{
    bipartite_threshold, canonical_form, construct_complete_bipartite, construct_star_matching,
    enumerate_saturated, is_k4_minus_saturated, naive_is_saturated, spectrum_formula,
    CheckerMode, EnumerationOptions, Graph,
};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn within(label: &str, started: Instant, limit: Duration) -> Result<(), String> {
    let took = started.elapsed();
    if took > limit {
        return Err(format!("{label} took {took:.1?}, limit {limit:?}"));
    }
    Ok(())
}

fn c1_edge_formula() -> Outcome {
    let t = Instant::now();
    let s = sweep_edge_formula(10..=60, 2).map_err(|e| e.to_string())?;
    within("sweep", t, Duration::from_secs(10))?;
    if !s.holds() {
        return Err(format!("{} mismatches, first {:?}", s.mismatches.len(), s.mismatches[0]));
    }
    Ok(format!("{} constructions match b(n-b-3)+n+a-b+1 in {:.1?}", s.checked, t.elapsed()))
}

fn c2a_family_saturated() -> Outcome {
    let t = Instant::now();
    let s = sweep_family_saturation(10..=60).map_err(|e| e.to_string())?;
    within("sweep", t, Duration::from_secs(120))?;
    if !s.holds() {
        return Err(format!("{} b>=2 instances not saturated: {:?}", s.failures.len(), &s.failures[..1]));
    }
    Ok(format!("{} instances with b >= 2 saturated in {:.1?}", s.checked, t.elapsed()))
}

fn c2b_small_b_not_saturated() -> Outcome {
    let s = sweep_family_saturation(10..=60).map_err(|e| e.to_string())?;
    let bad_witness = s.small_b.iter().filter(|v| !v.saturated && !v.witness_valid).count();
    let saturated: Vec<_> = s.small_b_saturated().map(|v| v.params).collect();
    if bad_witness > 0 || !saturated.is_empty() {
        let sample: Vec<String> = saturated
            .iter()
            .take(6)
            .map(|p| format!("F_{}({},{})", p.n, p.a, p.b))
            .collect();
        return Err(format!(
            "{} of {} instances with b in {{0,1}} are saturated (e.g. {}); {} invalid witnesses",
            saturated.len(),
            s.small_b.len(),
            sample.join(", "),
            bad_witness
        ));
    }
    Ok(format!("{} instances with b in {{0,1}} not saturated, witnesses valid", s.small_b.len()))
}

fn c3_coverage() -> Outcome {
    let t = Instant::now();
    let cov = sweep_interval_coverage(10..=500).map_err(|e| e.to_string())?;
    let ov = sweep_overlap(11..=500).map_err(|e| e.to_string())?;
    within("sweep", t, Duration::from_secs(10))?;
    if let Some(c) = cov.iter().find(|c| !c.holds) {
        return Err(format!("n={} missing {:?}", c.n, c.missing));
    }
    if let Some(o) = ov.iter().find(|o| !o.holds) {
        return Err(format!("overlap fails at n={} for b={:?}", o.n, o.failures));
    }
    let pairs: usize = ov.iter().map(|o| o.checked.len()).sum();
    Ok(format!("interval covered for n in [10,500]; {pairs} overlap inequalities hold in {:.1?}", t.elapsed()))
}

fn c4_non_bipartite_witnesses() -> Outcome {
    let t = Instant::now();
    let mut sizes = 0;
    for n in 10..=60 {
        for w in non_bipartite_witnesses(n).map_err(|e| e.to_string())? {
            if !w.ok() {
                return Err(format!("n={n}: no confirmed witness for m={}: {w:?}", w.m));
            }
            sizes += 1;
        }
    }
    within("sweep", t, Duration::from_secs(300))?;
    Ok(format!("{sizes} (n, m) pairs witnessed by saturated non-bipartite F_n(a,b) in {:.1?}", t.elapsed()))
}

fn c5_extremal_endpoints() -> Outcome {
    let t = Instant::now();
    let failures: Vec<String> = (4..=60usize)
        .into_par_iter()
        .flat_map_iter(|n| {
            let mut bad = Vec::new();
            let sm = construct_star_matching(n).unwrap();
            if sm.edge_count() as u64 != saturation_number(n) || !is_k4_minus_saturated(&sm).saturated {
                bad.push(format!("star-matching n={n}"));
            }
            for i in 2..=n - 2 {
                let g = construct_complete_bipartite(n, i).unwrap();
                if !is_k4_minus_saturated(&g).saturated {
                    bad.push(format!("K_{{{i},{}}}", n - i));
                }
            }
            bad
        })
        .collect();
    within("sweep", t, Duration::from_secs(120))?;
    if !failures.is_empty() {
        return Err(format!("not saturated: {failures:?}"));
    }
    Ok(format!("star-matching and K_(i,n-i), 2<=i<=n-2, saturated for n in [4,60] in {:.1?}", t.elapsed()))
}

fn audits() -> Result<Vec<(AuditReport, Duration)>, String> {
    (4..=8)
        .map(|n| {
            let workers = if n == 8 { 8 } else { 1 };
            let t = Instant::now();
            let a = audit(n, EnumerationOptions { workers, ..EnumerationOptions::default() }, true)
                .map_err(|e| e.to_string())?;
            Ok((a, t.elapsed()))
        })
        .collect()
}

fn c6_theorem_a(audits: &[(AuditReport, Duration)]) -> Outcome {
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    for (a, took) in audits {
        let n = a.report.n;
        let limit = Duration::from_secs(if n == 8 { 30 * 60 } else { 60 });
        if *took > limit {
            failures.push(format!("n={n} took {took:.1?}"));
        }
        let chk = theorem_a_from(a);
        if !chk.holds {
            failures.push(format!(
                "n={n}: saturated non-bipartite graphs above {} edges: {:?}",
                chk.threshold, chk.counterexamples
            ));
        }
        notes.push(format!("n={n} {:.1?}", took));
    }
    if !failures.is_empty() {
        return Err(failures.join("; "));
    }
    Ok(format!("no counterexample for n in [4,8] ({})", notes.join(", ")))
}

fn c7_proof_bounds(audits: &[(AuditReport, Duration)]) -> Outcome {
    let mut failures = Vec::new();
    let mut neighbor = 0;
    let mut edge = 0;
    for n in 1..=3 {
        let a = audit(n, EnumerationOptions::default(), true).map_err(|e| e.to_string())?;
        let chk = proof_bound_from(&a);
        neighbor += chk.neighbor_bound_checked;
        edge += chk.edge_bound_checked;
        if !chk.holds {
            failures.push(format!("n={n}: {chk:?}"));
        }
    }
    for (a, _) in audits {
        let chk = proof_bound_from(a);
        neighbor += chk.neighbor_bound_checked;
        edge += chk.edge_bound_checked;
        if !chk.neighbor_bound_violations.is_empty() {
            failures.push(format!("n={}: e(v,C) > t on {:?}", chk.n, chk.neighbor_bound_violations));
        }
        if !chk.edge_bound_violations.is_empty() {
            failures.push(format!(
                "n={}: e(G) > threshold-(t-1)^2 on {:?}",
                chk.n, chk.edge_bound_violations
            ));
        }
    }
    if !failures.is_empty() {
        return Err(format!(
            "{} (neighbour bound checked on {neighbor} graphs, edge bound on {edge})",
            failures.join("; ")
        ));
    }
    Ok(format!("neighbour bound on {neighbor} graphs, edge bound on {edge} saturated graphs"))
}

fn c8_checker_equivalence() -> Outcome {
    let t = Instant::now();
    let r = checker_equivalence(6, 7..=12, 10_000, 0x6b34).map_err(|e| e.to_string())?;
    within("comparison", t, Duration::from_secs(300))?;
    if !r.holds() {
        return Err(format!("{} disagreements, e.g. {:?}", r.disagreements.len(), &r.disagreements[..1]));
    }
    Ok(format!(
        "{} exhaustive (n<=6) + {} random graphs agree in {:.1?}",
        r.exhaustive_graphs,
        r.random_graphs,
        t.elapsed()
    ))
}

fn c9_n4_census() -> Outcome {
    // ground truth from the naive oracle alone, no pruned search
    let saturated: Vec<Graph> = all_labeled_graphs(4)
        .filter(|g| naive_is_saturated(g).saturated)
        .collect();
    let sizes: BTreeSet<usize> = saturated.iter().map(Graph::edge_count).collect();
    let classes: BTreeSet<String> = saturated.iter().map(|g| canonical_form(g).unwrap().0).collect();
    let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let paw = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
    let expected: BTreeSet<String> =
        [canonical_form(&c4).unwrap().0, canonical_form(&paw).unwrap().0].into();
    if sizes != BTreeSet::from([4]) || classes != expected {
        return Err(format!("sizes {sizes:?}, classes {classes:?}"));
    }
    let enumerated = enumerate_saturated(
        4,
        EnumerationOptions { mode: CheckerMode::Naive, ..EnumerationOptions::default() },
    )
    .map_err(|e| e.to_string())?;
    let entry = &enumerated.sizes[&4];
    if enumerated.sizes.len() != 1 || entry.unlabeled_count != Some(2) {
        return Err(format!("enumerator disagrees: {enumerated:?}"));
    }
    Ok(format!("ES(4) = {{4}}, classes {:?} (C4, paw)", entry.certificates))
}

fn c10_spectrum_formula() -> Outcome {
    let s10 = spectrum_formula(10).map_err(|e| e.to_string())?;
    let s11 = spectrum_formula(11).map_err(|e| e.to_string())?;
    let e10: BTreeSet<u64> = [9, 13, 16, 17, 18, 19, 20, 21, 22, 24, 25].into();
    let mut e11: BTreeSet<u64> = [10, 15, 28, 30].into();
    e11.extend(18..=27);
    if s10.sizes != e10 || s11.sizes != e11 {
        return Err(format!("n=10 {:?}, n=11 {:?}", s10.sizes, s11.sizes));
    }
    if s10.contains(23) {
        return Err("23 must not be in ES(10)".into());
    }
    if s10.unwitnessed != BTreeSet::from([9]) || s11.unwitnessed != BTreeSet::from([10]) {
        return Err("i in {1, n-1} members not flagged".into());
    }
    if bipartite_threshold(10) != 22 {
        return Err("threshold at n=10".into());
    }
    Ok("ES(10), ES(11) match; n-1 flagged as unwitnessed".into())
}

fn main() {
    let started = Instant::now();
    let mut results: Vec<(&str, Outcome)> = vec![
        ("1  Lemma 1 edge formula", c1_edge_formula()),
        ("2a Lemma 2 saturation (b >= 2)", c2a_family_saturated()),
        ("2b b in {0,1} reported not saturated", c2b_small_b_not_saturated()),
        ("3  Lemma 3 coverage + overlap", c3_coverage()),
        ("4  Theorem (b) witnesses", c4_non_bipartite_witnesses()),
        ("5  extremal endpoints", c5_extremal_endpoints()),
    ];
    match audits() {
        Ok(a) => {
            results.push(("6  Theorem (a) at n <= 8", c6_theorem_a(&a)));
            results.push(("7  odd-cycle proof bounds", c7_proof_bounds(&a)));
        }
        Err(e) => {
            results.push(("6  Theorem (a) at n <= 8", Err(e.clone())));
            results.push(("7  odd-cycle proof bounds", Err(e)));
        }
    }
    results.push(("8  checker equivalence", c8_checker_equivalence()));
    results.push(("9  n=4 census", c9_n4_census()));
    results.push(("10 spectrum formula n=10,11", c10_spectrum_formula()));

    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1?}",
        results.len() - failed,
        started.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
