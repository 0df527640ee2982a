//! graph6 text encoding.
//!
//! Order `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order `(0,1),(0,2),(1,2),(0,3),…`, packed big-endian into 6-bit
//! groups, each written as the byte `63 + value`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(err(offset, format!("byte {b} outside 63..=126"))),
        None => Err(err(offset, "unexpected end of input")),
    }
}

/// Decodes the order prefix; returns `(n, bytes consumed)`.
fn parse_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = sextet(bytes, 0)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    if bytes.get(1) == Some(&126) {
        let mut n = 0u64;
        for i in 2..8 {
            n = n << 6 | sextet(bytes, i)?;
        }
        if n <= 258_047 {
            return Err(err(2, format!("non-canonical 8-byte order prefix for n = {n}")));
        }
        return Ok((n as usize, 8));
    }
    let mut n = 0u64;
    for i in 1..4 {
        n = n << 6 | sextet(bytes, i)?;
    }
    if n < 63 {
        return Err(err(1, format!("non-canonical 4-byte order prefix for n = {n}")));
    }
    Ok((n as usize, 4))
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing line
/// terminators are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (line, base) = match line.strip_prefix(">>graph6<<") {
        Some(rest) => (rest, 10),
        None => (line, 0),
    };
    let bytes = line.as_bytes();
    let (n, head) = parse_order(bytes).map_err(|e| shift(e, base))?;
    if n == 0 {
        return Err(err(base, "graph has no vertices"));
    }
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "graph6 order",
            n,
            limit: MAX_VERTICES,
        });
    }
    let bits = n * (n - 1) / 2;
    let body = bits.div_ceil(6);
    if bytes.len() != head + body {
        return Err(err(
            base + bytes.len().min(head + body),
            format!("expected {} bytes for n = {n}, found {}", head + body, bytes.len()),
        ));
    }
    let mut adj = vec![VertexSet::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let off = head + k / 6;
            let s = sextet(bytes, off).map_err(|e| shift(e, base))?;
            if s >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let off = head + body - 1;
        let s = sextet(bytes, off).map_err(|e| shift(e, base))?;
        let pad = 6 - bits % 6;
        if s & ((1 << pad) - 1) != 0 {
            return Err(err(base + off, "nonzero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + (n >> shift & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
