//! graph6 and plain edge-list text formats.
//!
//! The edge-list format is a `n=<N>` header line followed by one `u v` pair
//! per line. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use super::{edge_slots, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const G6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for (i, j) in edge_slots(n) {
        acc = acc << 1 | g.has_edge(i, j) as u8;
        nbits += 1;
        if nbits == 6 {
            out.push(acc + 63);
            acc = 0;
            nbits = 0;
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(G6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |msg: String| Error::Graph6(msg);
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(bad(format!("byte {:#04x} at offset {pos} outside 63..=126", bytes[pos])));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(bad("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated 8-byte size header".into()));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| acc << 6 | six(b));
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated 4-byte size header".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | six(b));
            (n, &rest[3..])
        }
        [first, rest @ ..] => (six(*first), rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
    }
    let slots = n * n.saturating_sub(1) / 2;
    let want = slots.div_ceil(6);
    if body.len() != want {
        return Err(bad(format!("expected {want} data bytes for n={n}, found {}", body.len())));
    }
    let mut g = Graph::new(n);
    for (k, (i, j)) in edge_slots(n).enumerate() {
        if six(body[k / 6]) >> (5 - k % 6) & 1 == 1 {
            g.add_edge(i, j);
        }
    }
    let pad = want * 6 - slots;
    if pad > 0 && six(body[want - 1]) & ((1 << pad) - 1) != 0 {
        return Err(bad("nonzero padding bits".into()));
    }
    Ok(g)
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn decode_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        msg: "missing n=<N> header".into(),
    })?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::EdgeList {
            line: hline,
            msg: format!("expected n=<N> header, found {header:?}"),
        })?;
    let mut g = Graph::try_new(n)?;
    for (line, l) in lines {
        let err = |msg: String| Error::EdgeList { line, msg };
        let mut it = l.split_whitespace();
        let mut next = || -> Result<usize> {
            it.next()
                .ok_or_else(|| err("expected two vertices".into()))?
                .parse()
                .map_err(|e| err(format!("{e}")))
        };
        let (u, v) = (next()?, next()?);
        if it.next().is_some() {
            return Err(err("trailing tokens".into()));
        }
        g.try_add_edge(u, v).map_err(|e| err(e.to_string()))?;
    }
    Ok(g)
}

/// Decodes a graph, detecting the format from the first non-blank line
/// unless one is given.
pub fn parse_graph(text: &str, format: Option<Format>) -> Result<Graph> {
    let format = format.unwrap_or_else(|| {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        if first.starts_with("n=") || first.starts_with('#') {
            Format::EdgeList
        } else {
            Format::Graph6
        }
    });
    match format {
        Format::EdgeList => decode_edge_list(text),
        Format::Graph6 => {
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            decode_graph6(line)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, empty};

    #[test]
    fn single_vertex_is_at_sign() {
        assert_eq!(encode_graph6(&empty(1)), "@");
        assert_eq!(encode_graph6(&empty(0)), "?");
        assert_eq!(decode_graph6("@").unwrap(), empty(1));
    }

    #[test]
    fn known_small_encodings() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(decode_graph6("DQc").unwrap(), g);
        assert_eq!(encode_graph6(&complete(4)), "C~");
    }

    #[test]
    fn large_order_uses_long_header() {
        let mut g = empty(63);
        g.add_edge(0, 62);
        let s = encode_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode_graph6(&s).unwrap(), g);
        let big = empty(300);
        assert_eq!(decode_graph6(&encode_graph6(&big)).unwrap(), big);
    }

    #[test]
    fn multipartite_round_trip_with_header() {
        let g = complete_multipartite(&[2, 2, 2]);
        let s = encode_graph6(&g);
        assert_eq!(decode_graph6(&s).unwrap(), g);
        assert_eq!(decode_graph6(&format!(">>graph6<<{s}\n")).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_graph6() {
        assert!(decode_graph6("garbage\x01").is_err());
        assert!(decode_graph6("").is_err());
        assert!(decode_graph6("D").is_err());
        assert!(decode_graph6("DQcc").is_err());
        assert!(decode_graph6("~?").is_err());
        // n=2 has a single slot; padding bits must be zero
        assert!(decode_graph6("AA").is_err());
        assert!(decode_graph6("A_").is_ok());
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = complete_multipartite(&[1, 2, 3]);
        let text = encode_edge_list(&g);
        assert!(text.starts_with("n=6\n"));
        assert_eq!(decode_edge_list(&text).unwrap(), g);
        assert_eq!(parse_graph(&text, None).unwrap(), g);
        assert_eq!(parse_graph(&encode_graph6(&g), None).unwrap(), g);

        assert!(decode_edge_list("").is_err());
        assert!(decode_edge_list("n=3\n0 3\n").is_err());
        assert!(decode_edge_list("n=3\n1 1\n").is_err());
        assert!(decode_edge_list("n=3\n0\n").is_err());
        assert!(decode_edge_list("n=3\n0 1 2\n").is_err());
        assert!(decode_edge_list("3\n0 1\n").is_err());
    }
}
