//! Frozen simple graphs on at most 62 labeled vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex; bit `w` of `adj[v]`
//! is set iff `vw` is an edge. Graphs never change after construction:
//! "adding an edge" always produces a new value.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::{format_err, usage, Result};

/// Largest vertex count representable (short-form graph6 limit).
pub const MAX_VERTICES: usize = 62;

/// A set of vertex labels packed into a single word.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_slice(vs: &[usize]) -> Self {
        VertexSet(vs.iter().fold(0u64, |acc, &v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// An undirected simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse into a single edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(format_err(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(format_err(format!("loop at vertex {u}")));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Self::from_adjacency_unchecked(n, adj))
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = VertexSet::full(n).bits();
        let adj = (0..n).map(|v| full & !(1u64 << v)).collect();
        Ok(Self::from_adjacency_unchecked(n, adj))
    }

    /// Builds a graph from raw neighbourhood bitsets, validating symmetry,
    /// loop-freeness and range.
    pub fn from_adjacency(n: usize, adj: Vec<u64>) -> Result<Self> {
        check_order(n)?;
        if adj.len() != n {
            return Err(format_err(format!(
                "adjacency has {} rows for {n} vertices",
                adj.len()
            )));
        }
        let full = VertexSet::full(n).bits();
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(format_err(format!("vertex {v} has a neighbour >= {n}")));
            }
            if (row >> v) & 1 == 1 {
                return Err(format_err(format!("loop at vertex {v}")));
            }
            for w in VertexSet(row) {
                if (adj[w] >> v) & 1 == 0 {
                    return Err(format_err(format!("asymmetric adjacency at ({v},{w})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(n: usize, adj: Vec<u64>) -> Self {
        debug_assert!(Self::from_adjacency(n, adj.clone()).is_ok());
        Graph { n, adj }
    }

    /// Builds a graph on `n <= 8` vertices from a pair-slot mask, where bit
    /// `k` is the `k`-th pair in column order `(0,1),(0,2),(1,2),(0,3),...`.
    pub(crate) fn from_slot_mask(n: usize, mask: u64) -> Self {
        let mut adj = vec![0u64; n];
        for (k, (i, j)) in column_pairs(n).enumerate() {
            if (mask >> k) & 1 == 1 {
                adj[i] |= 1u64 << j;
                adj[j] |= 1u64 << i;
            }
        }
        Graph { n, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbourhood bitsets, one per vertex.
    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    /// `N(u) ∩ N(v)`.
    ///
    /// # Panics
    /// If `u == v` or either vertex is out of range.
    pub fn common_neighbors(&self, u: usize, v: usize) -> VertexSet {
        assert!(u != v, "common_neighbors needs two distinct vertices");
        assert!(u < self.n && v < self.n, "vertex out of range");
        VertexSet(self.adj[u] & self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let full = VertexSet::full(self.n).bits();
        (0..self.n).flat_map(move |u| {
            VertexSet(!self.adj[u] & full & !((2u64 << u) - 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// The graph with the single extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || u == v {
            return Err(usage(format!("cannot add edge ({u},{v}) on {} vertices", self.n)));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1u64 << v;
        adj[v] |= 1u64 << u;
        Ok(Graph { n: self.n, adj })
    }

    /// The image of this graph under `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(usage("permutation length differs from vertex count"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || (seen >> p) & 1 == 1 {
                return Err(usage("not a permutation"));
            }
            seen |= 1u64 << p;
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1u64 << perm[v];
            adj[perm[v]] |= 1u64 << perm[u];
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Number of edges with one end in `from` and the other in `to`.
    /// The sets are expected to be disjoint.
    pub fn edge_cut(&self, from: VertexSet, to: VertexSet) -> usize {
        from.iter().map(|v| (self.neighbors(v) & to).len()).sum()
    }

    /// Number of edges with both ends in `set`.
    pub fn induced_edge_count(&self, set: VertexSet) -> usize {
        set.iter().map(|v| (self.neighbors(v) & set).len()).sum::<usize>() / 2
    }

    /// Number of triangles.
    pub fn triangle_count(&self) -> usize {
        self.edges()
            .map(|(u, v)| {
                let above = !((2u64 << v) - 1);
                (self.adj[u] & self.adj[v] & above).count_ones() as usize
            })
            .sum()
    }

    /// Edge-list text: a header line `n m` followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text produced by [`Graph::to_edge_list`].
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| format_err("empty edge list"))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(format_err(format!(
                "header announces {m} edges but {} were listed",
                edges.len()
            )));
        }
        Graph::new(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(format_err(format!(
            "vertex count {n} outside 1..={MAX_VERTICES}"
        )));
    }
    Ok(())
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| format_err(format!("expected two integers in {line:?}")))?
            .parse()
            .map_err(|_| format_err(format!("bad integer in {line:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(format_err(format!("trailing tokens in {line:?}")));
    }
    Ok((a, b))
}

/// Vertex pairs in graph6 column order: `(0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...`.
pub fn column_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

/// `n(n-1)/2`.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn builds_c4() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g, cycle(4));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.non_edges().count(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Graph::new(3, &[(0, 3)]), Err(crate::Error::Format(_))));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(crate::Error::Format(_))));
        assert!(Graph::new(0, &[]).is_err());
        assert!(Graph::new(63, &[]).is_err());
        assert!(Graph::new(62, &[(0, 61)]).is_ok());
        assert!(Graph::from_adjacency(2, vec![0b10, 0]).is_err());
    }

    #[test]
    fn common_neighbors_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.common_neighbors(0, 1).to_vec(), vec![2, 3]);
        let c4 = cycle(4);
        assert_eq!(c4.common_neighbors(0, 2).to_vec(), vec![1, 3]);
        let c5 = cycle(5);
        for (u, v) in c5.edges() {
            assert!(c5.common_neighbors(u, v).is_empty());
        }
    }

    #[test]
    fn edge_and_non_edge_iterators_partition_pairs() {
        let g = Graph::new(6, &[(0, 5), (2, 3), (1, 4), (3, 5)]).unwrap();
        let mut all: Vec<_> = g.edges().chain(g.non_edges()).collect();
        all.sort();
        let expected: Vec<_> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        assert_eq!(all, expected);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let text = g.to_edge_list();
        assert!(text.starts_with("5 3\n"));
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
        assert!(Graph::from_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::from_edge_list("3 1\n0 x\n").is_err());
    }

    #[test]
    fn cuts_and_triangles() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.triangle_count(), 4);
        assert_eq!(
            k4.edge_cut(VertexSet::from_slice(&[0]), VertexSet::from_slice(&[1, 2, 3])),
            3
        );
        assert_eq!(k4.induced_edge_count(VertexSet::from_slice(&[0, 1, 2])), 3);
    }

    #[test]
    fn column_pair_order() {
        let pairs: Vec<_> = column_pairs(4).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
        assert_eq!(pair_count(8), 28);
    }

    #[test]
    fn slot_mask_matches_column_order() {
        // bits 0 and 2: (0,1) and (1,2)
        let g = Graph::from_slot_mask(3, 0b101);
        assert_eq!(g, Graph::new(3, &[(0, 1), (1, 2)]).unwrap());
    }
}
