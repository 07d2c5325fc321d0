//! Two-colouring and shortest odd cycles.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};

/// A shortest odd cycle `c_0 c_1 ... c_{2t}` of its host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycleInfo {
    pub cycle: Vec<usize>,
    pub t: usize,
}

impl OddCycleInfo {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_slice(&self.cycle)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    /// `coloring[v]` is the side of `v`; no edge joins equal sides.
    Bipartite { coloring: Vec<bool> },
    /// Witness: a shortest odd cycle.
    OddCycle(OddCycleInfo),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// BFS two-colouring; on failure the witness is a shortest odd cycle.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let s = side[v].unwrap();
            for w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!s);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == s => {
                        let cycle = shortest_odd_cycle(g)
                            .expect("a monochromatic edge implies an odd cycle");
                        return Bipartiteness::OddCycle(cycle);
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartiteness::Bipartite {
        coloring: side.into_iter().map(|s| s.unwrap()).collect(),
    }
}

/// A shortest odd cycle, or `None` iff the graph is bipartite.
///
/// For every source `s` this runs a layered BFS over the bipartite double
/// cover (vertex, parity) until `(s, odd)` is reached; the global minimum
/// odd closed walk is always a simple cycle.
pub fn shortest_odd_cycle(g: &Graph) -> Option<OddCycleInfo> {
    shortest_odd_cycle_adj(g.adjacency()).map(|cycle| OddCycleInfo {
        t: (cycle.len() - 1) / 2,
        cycle,
    })
}

pub(crate) fn shortest_odd_cycle_adj(adj: &[u64]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut best: Option<(usize, usize)> = None; // (length, source)
    let mut layers: Vec<u64> = Vec::with_capacity(2 * n + 1);
    for s in 0..n {
        let limit = best.map_or(2 * n + 1, |(len, _)| len);
        if let Some(len) = odd_closed_walk_len(adj, s, limit, &mut layers) {
            if best.is_none_or(|(b, _)| len < b) {
                best = Some((len, s));
                if len == 3 {
                    break;
                }
            }
        }
    }
    let (len, s) = best?;
    odd_closed_walk_len(adj, s, len + 1, &mut layers);
    // walk back from (s, odd) at depth len to (s, even) at depth 0
    let mut cycle = Vec::with_capacity(len);
    let mut cur = s;
    for depth in (1..len).rev() {
        let prev = VertexSet(adj[cur] & layers[depth]).first().expect("BFS layer predecessor");
        cycle.push(prev);
        cur = prev;
    }
    cycle.push(s);
    cycle.reverse();
    debug_assert_eq!(cycle.len(), len);
    debug_assert_eq!(VertexSet::from_slice(&cycle).len(), len, "odd walk is not simple");
    Some(cycle)
}

/// Length of the shortest odd closed walk through `s` if it is below
/// `limit`. `layers[d]` receives the vertices first reached at depth `d`
/// with parity `d mod 2`.
fn odd_closed_walk_len(adj: &[u64], s: usize, limit: usize, layers: &mut Vec<u64>) -> Option<usize> {
    layers.clear();
    let mut seen = [1u64 << s, 0u64];
    let mut frontier = 1u64 << s;
    layers.push(frontier);
    for depth in 1..limit {
        let parity = depth & 1;
        let mut reach = 0u64;
        for v in VertexSet(frontier) {
            reach |= adj[v];
        }
        frontier = reach & !seen[parity];
        if frontier == 0 {
            return None;
        }
        seen[parity] |= frontier;
        layers.push(frontier);
        if parity == 1 && (frontier >> s) & 1 == 1 {
            return Some(depth);
        }
    }
    None
}
