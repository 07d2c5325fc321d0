//! Parameter sweeps that check the closed-form statements against the
//! constructions and checkers. Each sweep is parallel over its outer index
//! and returns results in index order.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bipartite::{is_bipartite, Bipartiteness};
use crate::constructions::{
    bipartite_threshold, construct_complete_bipartite, construct_f, construct_star_matching,
    f_formula, find_f_params, saturation_number, verify_interval_coverage,
    verify_overlap_inequality, ConstructionParams, IntervalCheck, OverlapCheck,
};
use crate::error::{usage, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::graph6;
use crate::saturation::{is_k4_minus_saturated, naive_is_saturated};

fn check_construct_range(range: &RangeInclusive<usize>, min: usize) -> Result<()> {
    if *range.start() < min || *range.end() > MAX_VERTICES || range.is_empty() {
        return Err(usage(format!(
            "n range {range:?} must lie within {min}..={MAX_VERTICES}"
        )));
    }
    Ok(())
}

/// A construction whose edge count differs from the formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountMismatch {
    pub params: ConstructionParams,
    pub formula: u64,
    pub counted: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeFormulaSweep {
    pub checked: u64,
    pub mismatches: Vec<CountMismatch>,
}

impl EdgeFormulaSweep {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `e(F_n(a,b))` with `f_formula` for every admissible `(a, b)`
/// with `b >= b_min`.
pub fn sweep_edge_formula(ns: RangeInclusive<usize>, b_min: usize) -> Result<EdgeFormulaSweep> {
    check_construct_range(&ns, 5)?;
    let per_n: Vec<Result<(u64, Vec<CountMismatch>)>> = ns
        .into_par_iter()
        .map(|n| {
            let mut checked = 0;
            let mut bad = Vec::new();
            for p in ConstructionParams::grid(n, b_min..=n.saturating_sub(5)) {
                let (g, _) = construct_f(p)?;
                let formula = f_formula(p.n, p.a, p.b)?;
                checked += 1;
                if g.edge_count() as u64 != formula {
                    bad.push(CountMismatch { params: p, formula, counted: g.edge_count() as u64 });
                }
            }
            Ok((checked, bad))
        })
        .collect();
    let mut out = EdgeFormulaSweep { checked: 0, mismatches: Vec::new() };
    for r in per_n {
        let (c, bad) = r?;
        out.checked += c;
        out.mismatches.extend(bad);
    }
    Ok(out)
}

/// Saturation verdict for one `F_n(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyVerdict {
    pub params: ConstructionParams,
    pub edges: u64,
    pub saturated: bool,
    /// A non-edge whose addition creates no K4^-, when not saturated.
    pub nonedge_witness: Option<[usize; 2]>,
    /// Whether every witness in the verdict re-verified against the graph.
    pub witness_valid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySaturationSweep {
    /// `b >= 2` instances checked.
    pub checked: u64,
    /// `b >= 2` instances that failed (expected: none).
    pub failures: Vec<FamilyVerdict>,
    /// Every `b ∈ {0, 1}` instance in the range.
    pub small_b: Vec<FamilyVerdict>,
}

impl FamilySaturationSweep {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn small_b_saturated(&self) -> impl Iterator<Item = &FamilyVerdict> {
        self.small_b.iter().filter(|v| v.saturated)
    }
}

fn family_verdict(p: ConstructionParams) -> Result<FamilyVerdict> {
    let (g, _) = construct_f(p)?;
    let verdict = is_k4_minus_saturated(&g);
    Ok(FamilyVerdict {
        params: p,
        edges: g.edge_count() as u64,
        saturated: verdict.saturated,
        nonedge_witness: verdict.nonedge_witness,
        witness_valid: verdict.verify_against(&g).is_ok(),
    })
}

/// Saturation of `F_n(a, b)` over the whole admissible grid.
pub fn sweep_family_saturation(ns: RangeInclusive<usize>) -> Result<FamilySaturationSweep> {
    check_construct_range(&ns, 5)?;
    let params: Vec<ConstructionParams> = ns
        .flat_map(|n| ConstructionParams::grid(n, 0..=n - 5))
        .collect();
    let verdicts: Vec<FamilyVerdict> = params
        .into_par_iter()
        .map(family_verdict)
        .collect::<Result<_>>()?;
    let mut out = FamilySaturationSweep { checked: 0, failures: Vec::new(), small_b: Vec::new() };
    for v in verdicts {
        if v.params.b < 2 {
            out.small_b.push(v);
        } else {
            out.checked += 1;
            if !v.saturated || !v.witness_valid {
                out.failures.push(v);
            }
        }
    }
    Ok(out)
}

pub fn sweep_interval_coverage(ns: RangeInclusive<usize>) -> Result<Vec<IntervalCheck>> {
    ns.into_par_iter().map(verify_interval_coverage).collect()
}

pub fn sweep_overlap(ns: RangeInclusive<usize>) -> Result<Vec<OverlapCheck>> {
    ns.into_par_iter().map(verify_overlap_inequality).collect()
}

/// A non-bipartite saturated graph of a given size taken from the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeWitness {
    pub m: u64,
    pub params: Option<ConstructionParams>,
    pub saturated: bool,
    /// Length of the odd-cycle witness to non-bipartiteness.
    pub odd_cycle_len: Option<usize>,
    pub edges_match: bool,
}

impl SizeWitness {
    pub fn ok(&self) -> bool {
        self.params.is_some() && self.saturated && self.odd_cycle_len.is_some() && self.edges_match
    }
}

/// For every `m` in `[3n-11, ⌊(n-1)/2⌋⌈(n-1)/2⌉+2]`, find `F_n(a, b)` with
/// `b >= 2` and `m` edges and confirm it is saturated and non-bipartite.
pub fn non_bipartite_witnesses(n: usize) -> Result<Vec<SizeWitness>> {
    if !(10..=MAX_VERTICES).contains(&n) {
        return Err(usage(format!("witness range needs 10 <= n <= {MAX_VERTICES}, got {n}")));
    }
    let lo = 3 * n as u64 - 11;
    let hi = bipartite_threshold(n);
    (lo..=hi)
        .into_par_iter()
        .map(|m| {
            let Some(p) = find_f_params(n, m) else {
                return Ok(SizeWitness {
                    m,
                    params: None,
                    saturated: false,
                    odd_cycle_len: None,
                    edges_match: false,
                });
            };
            let (g, _) = construct_f(p)?;
            let odd_cycle_len = match is_bipartite(&g) {
                Bipartiteness::OddCycle(c) => Some(c.len()),
                Bipartiteness::Bipartite { .. } => None,
            };
            Ok(SizeWitness {
                m,
                params: Some(p),
                saturated: is_k4_minus_saturated(&g).saturated,
                odd_cycle_len,
                edges_match: g.edge_count() as u64 == m,
            })
        })
        .collect()
}

/// Saturation of the two extremal families at one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndpointCheck {
    pub n: usize,
    pub star_matching_edges: u64,
    pub star_matching_saturated: bool,
    /// `i` in `2..=n-2` for which `K_{i,n-i}` is not saturated.
    pub bipartite_failures: Vec<usize>,
    /// Whether `K_{1,n-1}` is (unexpectedly) saturated.
    pub star_saturated: bool,
}

impl EndpointCheck {
    pub fn ok(&self) -> bool {
        self.star_matching_saturated
            && self.star_matching_edges == saturation_number(self.n)
            && self.bipartite_failures.is_empty()
            && !self.star_saturated
    }
}

pub fn sweep_endpoints(ns: RangeInclusive<usize>) -> Result<Vec<EndpointCheck>> {
    check_construct_range(&ns, 4)?;
    ns.into_par_iter()
        .map(|n| {
            let sm = construct_star_matching(n)?;
            let mut bipartite_failures = Vec::new();
            for i in 2..=n - 2 {
                if !is_k4_minus_saturated(&construct_complete_bipartite(n, i)?).saturated {
                    bipartite_failures.push(i);
                }
            }
            Ok(EndpointCheck {
                n,
                star_matching_edges: sm.edge_count() as u64,
                star_matching_saturated: is_k4_minus_saturated(&sm).saturated,
                bipartite_failures,
                star_saturated: is_k4_minus_saturated(&construct_complete_bipartite(n, 1)?)
                    .saturated,
            })
        })
        .collect()
}

/// Fast-versus-naive checker agreement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerEquivalence {
    pub exhaustive_max_n: usize,
    pub exhaustive_graphs: u64,
    pub random_graphs: u64,
    /// graph6 of graphs where the verdicts differ.
    pub disagreements: Vec<String>,
}

impl CheckerEquivalence {
    pub fn holds(&self) -> bool {
        self.disagreements.is_empty()
    }
}

fn disagrees(g: &Graph) -> bool {
    is_k4_minus_saturated(g) != naive_is_saturated(g)
}

/// All labeled graphs on `n` vertices, via the pair-slot mask.
pub fn all_labeled_graphs(n: usize) -> impl ParallelIterator<Item = Graph> {
    let slots = crate::graph::pair_count(n);
    (0..1u64 << slots)
        .into_par_iter()
        .map(move |mask| Graph::from_slot_mask(n, mask))
}

/// Compares full verdicts (flags and witnesses) of the fast and naive
/// checkers on every labeled graph with `n <= exhaustive_max_n`, then on
/// `samples` random graphs with `n` uniform in `random_ns` and edge
/// density uniform in `[0, 1)`, seeded by `seed`.
pub fn checker_equivalence(
    exhaustive_max_n: usize,
    random_ns: RangeInclusive<usize>,
    samples: u64,
    seed: u64,
) -> Result<CheckerEquivalence> {
    if exhaustive_max_n > 7 {
        return Err(usage("exhaustive checker comparison is limited to n <= 7"));
    }
    check_construct_range(&random_ns, 1)?;
    let mut disagreements: Vec<String> = Vec::new();
    let mut exhaustive_graphs = 0;
    for n in 1..=exhaustive_max_n {
        let bad: Vec<String> = all_labeled_graphs(n)
            .filter(disagrees)
            .map(|g| graph6::encode(&g))
            .collect();
        exhaustive_graphs += 1u64 << crate::graph::pair_count(n);
        disagreements.extend(bad);
    }
    let bad: Vec<String> = (0..samples)
        .into_par_iter()
        .filter_map(|k| {
            let g = random_graph(seed, k, &random_ns);
            disagrees(&g).then(|| graph6::encode(&g))
        })
        .collect();
    disagreements.extend(bad);
    Ok(CheckerEquivalence {
        exhaustive_max_n,
        exhaustive_graphs,
        random_graphs: samples,
        disagreements,
    })
}

/// The `k`-th graph of a seeded random stream; independent of scheduling.
pub fn random_graph(seed: u64, k: u64, ns: &RangeInclusive<usize>) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k);
    let n = rng.gen_range(ns.clone());
    let p: f64 = rng.gen();
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("random graph is within range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_formula_small_range() {
        let s = sweep_edge_formula(10..=14, 0).unwrap();
        assert!(s.holds(), "{:?}", s.mismatches);
        assert!(s.checked > 0);
    }

    #[test]
    fn family_saturation_small_range() {
        let s = sweep_family_saturation(10..=12).unwrap();
        assert!(s.holds(), "{:?}", s.failures);
        assert!(s.small_b.iter().all(|v| v.witness_valid));
    }

    #[test]
    fn witnesses_at_10() {
        let w = non_bipartite_witnesses(10).unwrap();
        assert_eq!(w.len(), 4);
        assert!(w.iter().all(SizeWitness::ok));
        assert_eq!(w[0].odd_cycle_len, Some(3));
    }

    #[test]
    fn endpoints_small() {
        for e in sweep_endpoints(4..=12).unwrap() {
            assert!(e.ok(), "{e:?}");
        }
    }

    #[test]
    fn random_stream_is_reproducible() {
        let a = random_graph(5, 17, &(7..=12));
        let b = random_graph(5, 17, &(7..=12));
        assert_eq!(a, b);
    }

    #[test]
    fn small_equivalence() {
        let r = checker_equivalence(4, 7..=9, 200, 1).unwrap();
        assert!(r.holds(), "{:?}", r.disagreements);
        assert_eq!(r.exhaustive_graphs, 1 + 2 + 8 + 64);
    }
}
