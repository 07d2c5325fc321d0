//! Graph families realizing K4^--saturated sizes, and the closed-form
//! edge counts and spectrum that go with them.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Parameters of the family `F_n(a, b)`.
///
/// Parts: `I` (1 vertex), `A1` (2), `A2` (`a`), `B1` (2), `B2` (`b`) and
/// `C` (`n - a - b - 5`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub n: usize,
    pub a: usize,
    pub b: usize,
}

impl ConstructionParams {
    pub fn new(n: usize, a: usize, b: usize) -> Result<Self> {
        let needed = a
            .checked_add(b)
            .and_then(|s| s.checked_add(5))
            .ok_or(Error::Overflow("a + b + 5"))?;
        if n < needed {
            return Err(usage(format!(
                "F_n(a,b) needs n >= a + b + 5, got n={n}, a={a}, b={b}"
            )));
        }
        Ok(ConstructionParams { n, a, b })
    }

    /// `|C| = n - a - b - 5`.
    pub fn c(&self) -> usize {
        self.n - self.a - self.b - 5
    }

    /// Every admissible `(a, b)` for this `n` with `b` in `b_range`.
    pub fn grid(n: usize, b_range: std::ops::RangeInclusive<usize>) -> Vec<ConstructionParams> {
        let mut out = Vec::new();
        for b in b_range {
            if n < b + 5 {
                break;
            }
            for a in 0..=n - b - 5 {
                out.push(ConstructionParams { n, a, b });
            }
        }
        out
    }
}

/// Which part each vertex of `F_n(a, b)` belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartLabels {
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "A1")]
    pub a1: Vec<usize>,
    #[serde(rename = "A2")]
    pub a2: Vec<usize>,
    #[serde(rename = "B1")]
    pub b1: Vec<usize>,
    #[serde(rename = "B2")]
    pub b2: Vec<usize>,
    #[serde(rename = "C")]
    pub c: Vec<usize>,
    /// The two matching edges `u_k v_k` between `A1` and `B1`.
    #[serde(rename = "M")]
    pub matching: [[usize; 2]; 2],
}

/// Builds `F_n(a, b)`: the union of `K(A1 ∪ A2 ∪ C, B2)`, `K(A2, B1)`,
/// `K(I, A1 ∪ B1 ∪ C)` and the matching `M`.
///
/// Labels are assigned in part order `I, A1, A2, B1, B2, C`, so `I = {0}`
/// and `A1 = {1, 2}`.
pub fn construct_f(params: ConstructionParams) -> Result<(Graph, PartLabels)> {
    let ConstructionParams { n, a, b } = ConstructionParams::new(params.n, params.a, params.b)?;
    if n > MAX_VERTICES {
        return Err(usage(format!("n={n} exceeds {MAX_VERTICES} vertices")));
    }
    let mut next = 0;
    let mut take = |k: usize| {
        let part: Vec<usize> = (next..next + k).collect();
        next += k;
        part
    };
    let i = take(1);
    let a1 = take(2);
    let a2 = take(a);
    let b1 = take(2);
    let b2 = take(b);
    let c = take(n - a - b - 5);
    let matching = [[a1[0], b1[0]], [a1[1], b1[1]]];

    let mut edges = Vec::new();
    let mut join = |xs: &[usize], ys: &[usize]| {
        for &x in xs {
            for &y in ys {
                edges.push((x, y));
            }
        }
    };
    let a_side: Vec<usize> = [&a1[..], &a2[..], &c[..]].concat();
    join(&a_side, &b2);
    join(&a2, &b1);
    let hub_side: Vec<usize> = [&a1[..], &b1[..], &c[..]].concat();
    join(&i, &hub_side);
    edges.extend(matching.iter().map(|&[u, v]| (u, v)));

    let g = Graph::new(n, &edges)?;
    Ok((g, PartLabels { i, a1, a2, b1, b2, c, matching }))
}

/// `b(n - b - 3) + n + a - b + 1`, the edge count of `F_n(a, b)`.
pub fn f_formula(n: usize, a: usize, b: usize) -> Result<u64> {
    ConstructionParams::new(n, a, b)?;
    let (n, a, b) = (n as u64, a as u64, b as u64);
    const WHAT: &str = "b(n-b-3)+n+a-b+1";
    // n >= a + b + 5 keeps both subtractions non-negative
    let span = n - b - 3;
    b.checked_mul(span)
        .and_then(|x| x.checked_add(n))
        .and_then(|x| x.checked_add(a))
        .and_then(|x| x.checked_add(1))
        .map(|x| x - b)
        .ok_or(Error::Overflow(WHAT))
}

/// `K_{1,n-1}` plus the matching `(1,2), (3,4), ...` on its leaves.
pub fn construct_star_matching(n: usize) -> Result<Graph> {
    if !(2..=MAX_VERTICES).contains(&n) {
        return Err(usage(format!("star-matching needs 2 <= n <= {MAX_VERTICES}, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    edges.extend((0..(n - 1) / 2).map(|k| (2 * k + 1, 2 * k + 2)));
    Graph::new(n, &edges)
}

/// `K_{i, n-i}` with parts `{0..i}` and `{i..n}`.
pub fn construct_complete_bipartite(n: usize, i: usize) -> Result<Graph> {
    if n > MAX_VERTICES || i == 0 || i >= n {
        return Err(usage(format!(
            "complete bipartite needs 1 <= i <= n-1 and n <= {MAX_VERTICES}, got n={n}, i={i}"
        )));
    }
    let edges: Vec<_> = (0..i).flat_map(|u| (i..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges)
}

/// `⌊(n-1)/2⌋·⌈(n-1)/2⌉ + 2`: above this size a saturated graph is claimed
/// to be bipartite.
pub fn bipartite_threshold(n: usize) -> u64 {
    let m = n.saturating_sub(1) as u64;
    (m / 2) * m.div_ceil(2) + 2
}

/// `⌊3(n-1)/2⌋`.
pub fn saturation_number(n: usize) -> u64 {
    3 * n.saturating_sub(1) as u64 / 2
}

/// `⌊n/2⌋·⌈n/2⌉`.
pub fn turan_number(n: usize) -> u64 {
    let n = n as u64;
    (n / 2) * n.div_ceil(2)
}

/// A set of edge counts for graphs on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumSet {
    pub n: usize,
    pub sizes: BTreeSet<u64>,
    /// Set when `n` lies outside the range the closed form is stated for.
    pub formula_out_of_range: bool,
    /// Members with no saturated graph behind them (see [`spectrum_formula`]).
    pub unwitnessed: BTreeSet<u64>,
}

impl SpectrumSet {
    fn plain(n: usize, sizes: BTreeSet<u64>) -> Self {
        SpectrumSet {
            n,
            sizes,
            formula_out_of_range: false,
            unwitnessed: BTreeSet::new(),
        }
    }

    pub fn contains(&self, m: u64) -> bool {
        self.sizes.contains(&m)
    }

    /// Maximal runs of consecutive sizes as closed intervals.
    pub fn intervals(&self) -> Vec<(u64, u64)> {
        let mut runs: Vec<(u64, u64)> = Vec::new();
        for &m in &self.sizes {
            match runs.last_mut() {
                Some((_, hi)) if *hi + 1 == m => *hi = m,
                _ => runs.push((m, m)),
            }
        }
        runs
    }
}

/// Smallest `n` for which the closed-form spectrum is stated.
pub const SPECTRUM_FORMULA_MIN_N: usize = 10;

/// The closed-form edge spectrum, evaluated literally:
/// `{⌊3(n-1)/2⌋} ∪ [2n-4, ⌊(n-1)/2⌋⌈(n-1)/2⌉+2] ∪ {i(n-i) : 1 <= i <= n-1}`.
///
/// The `i ∈ {1, n-1}` term contributes `n - 1`, which is below the
/// saturation number and is not realized by `K_{1,n-1}`; it is kept in
/// `sizes` and listed in `unwitnessed`. For `3 <= n < 10` the result is
/// returned with `formula_out_of_range` set.
pub fn spectrum_formula(n: usize) -> Result<SpectrumSet> {
    if n < 3 {
        return Err(usage(format!(
            "spectrum formula leaves 0..=n(n-1)/2 for n={n}; need n >= 3"
        )));
    }
    let nn = n as u64;
    let mut core = BTreeSet::new();
    core.insert(saturation_number(n));
    let lo = 2 * nn - 4;
    let hi = bipartite_threshold(n);
    core.extend(lo..=hi);
    let bipartite_sizes: BTreeSet<u64> = (2..=nn - 2).map(|i| i * (nn - i)).collect();
    let star_size = nn - 1;

    let mut sizes = core.clone();
    sizes.extend(bipartite_sizes.iter().copied());
    sizes.insert(star_size);
    let mut unwitnessed = BTreeSet::new();
    if !core.contains(&star_size) && !bipartite_sizes.contains(&star_size) {
        unwitnessed.insert(star_size);
    }
    Ok(SpectrumSet {
        n,
        sizes,
        formula_out_of_range: n < SPECTRUM_FORMULA_MIN_N,
        unwitnessed,
    })
}

/// Largest `b` in the coverage grid, `⌊(n-5)/2⌋`.
fn coverage_b_max(n: usize) -> usize {
    (n - 5) / 2
}

/// `{ f_n(a, b) : 2 <= b <= ⌊(n-5)/2⌋, 0 <= a <= n-b-5 }`.
pub fn coverage_set(n: usize) -> Result<SpectrumSet> {
    if n < 9 {
        return Err(usage(format!("coverage grid is empty for n={n}; need n >= 9")));
    }
    let mut sizes = BTreeSet::new();
    for p in ConstructionParams::grid(n, 2..=coverage_b_max(n)) {
        sizes.insert(f_formula(p.n, p.a, p.b)?);
    }
    Ok(SpectrumSet::plain(n, sizes))
}

/// Result of checking `[3n-11, ⌊(n-1)/2⌋⌈(n-1)/2⌉+2] ⊆ coverage_set(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalCheck {
    pub n: usize,
    pub lo: u64,
    pub hi: u64,
    pub holds: bool,
    pub missing: Vec<u64>,
}

pub fn verify_interval_coverage(n: usize) -> Result<IntervalCheck> {
    if n < SPECTRUM_FORMULA_MIN_N {
        return Err(usage(format!("interval coverage is stated for n >= 10, got {n}")));
    }
    let covered = coverage_set(n)?;
    let lo = 3 * n as u64 - 11;
    let hi = bipartite_threshold(n);
    let missing: Vec<u64> = (lo..=hi).filter(|m| !covered.contains(*m)).collect();
    Ok(IntervalCheck {
        n,
        lo,
        hi,
        holds: missing.is_empty(),
        missing,
    })
}

/// Result of checking `f_n(0, b+1) <= f_n(n-b-5, b)` for consecutive `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapCheck {
    pub n: usize,
    pub checked: Vec<usize>,
    pub holds: bool,
    /// `b` values where the next run starts after the current one ends.
    pub failures: Vec<usize>,
}

pub fn verify_overlap_inequality(n: usize) -> Result<OverlapCheck> {
    if n < 11 {
        return Err(usage(format!("overlap needs two b values, i.e. n >= 11, got {n}")));
    }
    let mut checked = Vec::new();
    let mut failures = Vec::new();
    for b in 2..coverage_b_max(n) {
        checked.push(b);
        if f_formula(n, 0, b + 1)? > f_formula(n, n - b - 5, b)? {
            failures.push(b);
        }
    }
    Ok(OverlapCheck {
        n,
        checked,
        holds: failures.is_empty(),
        failures,
    })
}

/// Some `(a, b)` with `b >= 2` whose `F_n(a, b)` has exactly `m` edges;
/// smallest `b` first, then smallest `a`.
pub fn find_f_params(n: usize, m: u64) -> Option<ConstructionParams> {
    if n < 7 {
        return None;
    }
    ConstructionParams::grid(n, 2..=n - 5)
        .into_iter()
        .find(|p| f_formula(p.n, p.a, p.b).ok() == Some(m))
}
