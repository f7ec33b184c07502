//! graph6 and edge-list text formats.
//!
//! Only the short graph6 form (n <= 62) is supported. The upper triangle is
//! packed in column order `(0,1), (0,2), (1,2), (0,3), ...`, six bits per
//! byte, most significant bit first, each group offset by 63.

use super::Graph;
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_SHORT: usize = 62;

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parse one graph6 line. A trailing newline and a leading `>>graph6<<`
/// header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_at(text, 0)
}

fn parse_at(text: &str, base: usize) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (body, skip) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (line, 0),
    };
    let bytes = body.as_bytes();
    let at = |i: usize| base + skip + i;
    let Some(&first) = bytes.first() else {
        return Err(g6_err(at(0), "empty input"));
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(at(i), format!("byte {b} outside 63..=126")));
        }
    }
    if first == 126 {
        return Err(g6_err(at(0), "long form (n > 62) is not supported"));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() < expected {
        return Err(g6_err(
            at(bytes.len()),
            format!("truncated: expected {expected} bytes for n = {n}"),
        ));
    }
    if bytes.len() > expected {
        return Err(g6_err(at(expected), "trailing garbage"));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.set(u, v, true);
            }
            k += 1;
        }
    }
    // padding bits of the final byte must be zero for an exact round trip
    if !bits.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(at(expected - 1), "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parse a graph6 file: one graph per non-empty line, optional header.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim().is_empty() {
            out.push(parse_at(line, offset)?);
        }
        offset += line.len();
    }
    Ok(out)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_SHORT {
        return Err(Error::BudgetExceeded {
            what: "graph6 short form",
            n,
            limit: MAX_SHORT,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut packed = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                packed[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut s = String::with_capacity(1 + packed.len());
    s.push((n as u8 + 63) as char);
    s.extend(packed.into_iter().map(|b| (b + 63) as char));
    Ok(s)
}

/// Parse the edge-list format: a header `n m`, then `m` lines `u v`
/// (0-indexed). Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(Error::EdgeList {
                line,
                reason: format!("expected two non-negative integers, got {l:?}"),
            }),
        }
    };

    let Some((hl, header)) = lines.next() else {
        return Err(Error::EdgeList {
            line: 1,
            reason: "missing `n m` header".into(),
        });
    };
    let (n, m) = parse_pair(hl, header)?;
    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n || u == v {
            return Err(Error::EdgeList {
                line,
                reason: format!("invalid edge ({u}, {v}) for n = {n}"),
            });
        }
        g.set(u, v, true);
        seen += 1;
    }
    if seen != m {
        return Err(Error::EdgeList {
            line: hl,
            reason: format!("header declares {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
