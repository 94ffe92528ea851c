//! The graph6 text format.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        assert!(n < 1 << 36, "graph too large for graph6");
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// whitespace are accepted; error offsets are byte positions in `text`.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    let start = if bytes.starts_with(HEADER.as_bytes()) {
        HEADER.len()
    } else {
        0
    };
    let data = &bytes[start..];
    let sextet = |i: usize| -> Result<usize> {
        match data.get(i) {
            None => Err(err(start + i, "unexpected end of input")),
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(err(start + i, format!("byte {b:#04x} outside 63..=126"))),
        }
    };
    let read = |from: usize, count: usize| -> Result<usize> {
        (from..from + count).try_fold(0usize, |acc, i| Ok(acc << 6 | sextet(i)?))
    };
    let (n, mut pos) = match data.first() {
        None => return Err(err(start, "empty input")),
        Some(b'~') if data.get(1) == Some(&b'~') => (read(2, 6)?, 8),
        Some(b'~') => (read(1, 3)?, 4),
        Some(_) => (sextet(0)?, 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if data.len() != pos + needed {
        let at = start + data.len().min(pos + needed);
        return Err(err(
            at,
            format!(
                "expected {needed} adjacency bytes for n = {n}, found {}",
                data.len() - pos.min(data.len())
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    let mut chunk = 0;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                chunk = sextet(pos)?;
                pos += 1;
            }
            if chunk >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 && chunk & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(err(start + pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}
