//! The graph6 text format.
//!
//! Header: one byte `n + 63` for `n <= 62`, otherwise `~` followed by three
//! 6-bit groups. Body: the upper triangle read column-wise
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed big-endian into 6-bit groups,
//! each offset by 63, zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |msg: String| Error::Graph6(msg);
    if bytes.is_empty() {
        return Err(bad("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {pos} ({:#04x}) is outside the graph6 range", bytes[pos])));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(bad("malformed extended header".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(bad(format!("header declares {n} vertices; supported range is 1..=64")));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!("expected {expected} body bytes for n = {n}, found {}", body.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        if (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits".into()));
        }
    }
    Graph::new(n, &edges)
}
