//! graph6 encoding (header-free), restricted to graphs of at most 64 vertices.
//!
//! The decoder is strict: it accepts exactly the strings the encoder can
//! produce, so `encode(decode(s)?) == s` for every accepted `s`.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;
const LONG_SIZE: u8 = 126;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes `g` as a single graph6 line without a trailing newline.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_SIZE);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    // every byte lies in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        None => Err(Error::Graph6 { offset, reason: "truncated input" }),
        Some(&b) if (BIAS..=LONG_SIZE).contains(&b) => Ok(b - BIAS),
        Some(_) => Err(Error::Graph6 { offset, reason: "byte outside the printable range 63..=126" }),
    }
}

/// Decodes one graph6 string.
pub fn decode(text: &str) -> Result<Graph> {
    decode_bytes(text.as_bytes())
}

pub fn decode_bytes(bytes: &[u8]) -> Result<Graph> {
    if bytes.is_empty() {
        return Err(Error::Graph6 { offset: 0, reason: "empty input" });
    }
    let (n, start) = if bytes[0] == LONG_SIZE {
        if bytes.get(1) == Some(&LONG_SIZE) {
            return Err(Error::Graph6 { offset: 1, reason: "more than 64 vertices" });
        }
        let mut n = 0usize;
        for k in 1..4 {
            n = (n << 6) | sextet(bytes, k)? as usize;
        }
        if n < 63 {
            return Err(Error::Graph6 { offset: 0, reason: "long size header used for fewer than 63 vertices" });
        }
        if n > MAX_VERTICES {
            return Err(Error::Graph6 { offset: 1, reason: "more than 64 vertices" });
        }
        (n, 4)
    } else {
        (sextet(bytes, 0)? as usize, 1)
    };

    let len = body_len(n);
    if bytes.len() > start + len {
        return Err(Error::Graph6 { offset: start + len, reason: "trailing bytes after adjacency data" });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                current = sextet(bytes, start + bit / 6)?;
            }
            if current >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let pad = 6 - bit % 6;
        if current & ((1u8 << pad) - 1) != 0 {
            return Err(Error::Graph6 { offset: start + bit / 6, reason: "nonzero padding bits" });
        }
    }
    Ok(g)
}

/// One decoded line of a newline-separated graph6 stream.
#[derive(Debug)]
pub struct StreamLine {
    /// 1-based line number in the input.
    pub line: usize,
    pub graph: Result<Graph>,
}

/// Splits `text` into lines, skipping blank ones, and decodes each
/// independently so that one malformed line does not stop the rest.
pub fn decode_stream(text: &str) -> Vec<StreamLine> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| StreamLine { line: i + 1, graph: decode(l.trim_end_matches('\r')) })
        .collect()
}

/// Encodes each graph on its own line, each line newline-terminated.
pub fn encode_stream<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&encode(g));
        out.push('\n');
    }
    out
}
