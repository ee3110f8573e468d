//! graph6 encoding, restricted to the one-byte size form (`n <= 62`).
//!
//! Layout: byte `n + 63`, then the upper-triangle bits in the order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte (most significant
//! first), each byte offset by 63, final byte zero-padded.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte} at offset {offset} outside [63, 126]")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("vertex count {0} outside [1, {MAX_ORDER}]")]
    OrderOutOfRange(usize),
    #[error("expected {expected} data bytes for n = {n}, found {found}")]
    WrongLength { n: usize, expected: usize, found: usize },
}

fn data_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        let row = g.row(v);
        for u in 0..v {
            acc = acc << 1 | (row >> u & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// [`encode_graph6`] as a `String` (graph6 is always printable ASCII).
pub fn to_graph6_string(g: &Graph) -> String {
    String::from_utf8(encode_graph6(g)).expect("graph6 is ASCII")
}

pub fn decode_graph6(s: &[u8]) -> Result<Graph, Graph6Error> {
    let (&head, data) = s.split_first().ok_or(Graph6Error::Empty)?;
    if let Some(offset) = s.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte { offset, byte: s[offset] });
    }
    let n = (head - 63) as usize;
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(Graph6Error::OrderOutOfRange(n));
    }
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength { n, expected, found: data.len() });
    }
    let mut g = Graph::empty(n).expect("order checked above");
    let mut bits = data
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |k| (b - 63) >> k & 1 == 1));
    for v in 1..n {
        for u in 0..v {
            if bits.next().expect("length checked above") {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}
