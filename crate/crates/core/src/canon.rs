//! Brute-force canonical forms for graphs on at most 8 vertices.
//!
//! A graph is coded as an integer whose bits, most significant first, are
//! the pair slots in graph6 column order. For a fixed `n` all graph6
//! strings have the same length and compare like these codes, so the
//! minimum code over all relabelings is the minimum graph6 string.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::error::{usage, Result};
use crate::graph::{pair_count, Graph};
use crate::graph6;

pub const MAX_CANON_N: usize = 8;

/// Lexicographically smallest graph6 string over all vertex relabelings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub String);

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

#[inline]
pub(crate) fn slot_of(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

/// Code of a graph: slot `k` lives at bit `N - 1 - k`, `N = n(n-1)/2`.
pub(crate) fn code_of(g: &Graph) -> u64 {
    let top = pair_count(g.n());
    g.edges()
        .fold(0u64, |acc, (i, j)| acc | 1u64 << (top - 1 - slot_of(i, j)))
}

pub(crate) fn graph_of_code(n: usize, code: u64) -> Graph {
    let top = pair_count(n);
    let mut mask = 0u64;
    for k in 0..top {
        if (code >> (top - 1 - k)) & 1 == 1 {
            mask |= 1u64 << k;
        }
    }
    Graph::from_slot_mask(n, mask)
}

pub(crate) fn graph6_of_code(n: usize, code: u64) -> String {
    graph6::encode(&graph_of_code(n, code))
}

/// For every permutation of `0..n`, the image bit of each code bit.
struct BitPermutations {
    bits: usize,
    images: Vec<u8>,
}

impl BitPermutations {
    fn build(n: usize) -> Self {
        let bits = pair_count(n);
        let mut images = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut push = |perm: &[usize]| {
            for j in 1..n {
                for i in 0..j {
                    let image = slot_of(perm[i], perm[j]);
                    images.push((bits - 1 - image) as u8);
                }
            }
        };
        heap_permutations(n, &mut perm, &mut push);
        BitPermutations { bits, images }
    }

    fn images_of(&self, code: u64) -> impl Iterator<Item = u64> + '_ {
        let bits = self.bits;
        let set: Vec<usize> = (0..bits)
            .filter(|&k| (code >> (bits - 1 - k)) & 1 == 1)
            .collect();
        self.images.chunks_exact(bits.max(1)).map(move |table| {
            set.iter().fold(0u64, |acc, &k| acc | 1u64 << table[k])
        })
    }
}

fn heap_permutations(k: usize, perm: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(perm);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(k - 1, perm, visit);
        if k.is_multiple_of(2) {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
    heap_permutations(k - 1, perm, visit);
}

fn permutations_for(n: usize) -> &'static BitPermutations {
    static TABLES: [OnceLock<BitPermutations>; MAX_CANON_N + 1] = [const { OnceLock::new() }; MAX_CANON_N + 1];
    TABLES[n].get_or_init(|| BitPermutations::build(n))
}

pub(crate) fn canonical_code(n: usize, code: u64) -> u64 {
    if n <= 1 {
        return code;
    }
    permutations_for(n).images_of(code).min().expect("at least one permutation")
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.n() > MAX_CANON_N {
        return Err(usage(format!(
            "canonical form by permutation is limited to n <= {MAX_CANON_N}, got {}",
            g.n()
        )));
    }
    Ok(CanonicalForm(graph6_of_code(g.n(), canonical_code(g.n(), code_of(g)))))
}

/// Splits a set of labeled codes, closed under relabeling, into
/// isomorphism classes. Returns the canonical (minimum) code of every
/// class in ascending order.
///
/// Every class is visited once: all of its images are marked seen the
/// first time any member shows up.
pub(crate) fn classes_of_closed_set(n: usize, codes: &[u64]) -> Vec<u64> {
    let mut sorted = codes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if n <= 1 {
        return sorted;
    }
    let table = permutations_for(n);
    let mut seen: HashSet<u64> = HashSet::with_capacity(sorted.len());
    let mut classes = Vec::new();
    for &code in &sorted {
        if seen.contains(&code) {
            continue;
        }
        let mut min = code;
        for image in table.images_of(code) {
            min = min.min(image);
            seen.insert(image);
        }
        classes.push(min);
    }
    classes.sort_unstable();
    classes
}

/// Canonical codes of arbitrary labeled codes, deduplicated and sorted.
pub(crate) fn classes_of(n: usize, codes: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = codes.iter().map(|&c| canonical_code(n, c)).collect();
    out.sort_unstable();
    out.dedup();
    out
}
