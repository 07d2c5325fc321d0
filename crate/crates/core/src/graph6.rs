//! Short-form graph6 (n <= 62).
//!
//! One header byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column order `(0,1),(0,2),(1,2),(0,3),...`, packed big-endian into
//! 6-bit groups (zero padded), each group offset by 63.

use crate::error::{format_err, Result};
use crate::graph::{column_pairs, pair_count, Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const OPTIONAL_HEADER: &[u8] = b">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = Vec::with_capacity(1 + pair_count(n).div_ceil(6));
    out.push(n as u8 + OFFSET);
    let mut group = 0u8;
    let mut filled = 0;
    for (i, j) in column_pairs(n) {
        group = (group << 1) | g.has_edge(i, j) as u8;
        filled += 1;
        if filled == 6 {
            out.push(group + OFFSET);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(bytes: &[u8]) -> Result<Graph> {
    let bytes = bytes.strip_prefix(OPTIONAL_HEADER).unwrap_or(bytes);
    let (&head, payload) = bytes
        .split_first()
        .ok_or_else(|| format_err("empty graph6 string"))?;
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(format_err(format!(
            "byte {:#04x} at offset {pos} is outside the graph6 range 63..=126",
            bytes[pos]
        )));
    }
    let n = (head - OFFSET) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(format_err(format!(
            "graph6 header encodes n={n}; only short form with 1..={MAX_VERTICES} vertices is supported"
        )));
    }
    let bits = pair_count(n);
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(format_err(format!(
            "graph6 payload has {} bytes, expected {expected} for n={n}",
            payload.len()
        )));
    }
    let mut adj = vec![0u64; n];
    for (k, (i, j)) in column_pairs(n).enumerate() {
        let group = payload[k / 6] - OFFSET;
        if (group >> (5 - k % 6)) & 1 == 1 {
            adj[i] |= 1u64 << j;
            adj[j] |= 1u64 << i;
        }
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (payload[expected - 1] - OFFSET) & ((1u8 << pad) - 1) != 0 {
        return Err(format_err("graph6 padding bits are not zero"));
    }
    Graph::from_adjacency(n, adj)
}

/// [`decode`] for text input, ignoring surrounding whitespace.
pub fn decode_str(s: &str) -> Result<Graph> {
    decode(s.trim().as_bytes())
}
