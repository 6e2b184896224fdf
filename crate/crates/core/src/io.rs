//! Text formats: graph6 and a plain edge list.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses one graph6 token. Surrounding whitespace and a leading
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some((i, &c)) = bytes.iter().enumerate().find(|(_, &c)| !(63..=126).contains(&c)) {
        return Err(bad(format!("graph6: byte {c:#04x} at offset {i} is outside 63..=126")));
    }
    let value = |b: &[u8]| b.iter().fold(0usize, |acc, &c| acc << 6 | (c - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(bad("graph6: empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("graph6: truncated size field"));
            }
            (value(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("graph6: truncated size field"));
            }
            (value(&rest[..3]), &rest[3..])
        }
        [c, rest @ ..] => ((c - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { what: "graph", n, limit: MAX_VERTICES });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() < needed {
        return Err(bad(format!("graph6: expected {needed} payload bytes for {n} vertices, found {}", body.len())));
    }
    if body.len() > needed {
        return Err(bad(format!("graph6: {} trailing bytes after the payload", body.len() - needed)));
    }
    let mut k = 0;
    Ok(Graph::from_fn(n, |_, _| {
        let bit = (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
        k += 1;
        bit
    }))
}

/// Encodes `g` as graph6, using the one-byte size form when `n <= 62`.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses `"n m"` followed by `m` lines `"u v"`. Blank lines and `#`
/// comments are skipped.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .enumerate()
        .filter(|(_, l)| !l.is_empty());
    let pair = |lineno: usize, line: &str| -> Result<(usize, usize)> {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = parts.as_slice() else {
            return Err(bad(format!("edge list line {}: expected two integers, found {line:?}", lineno + 1)));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| bad(format!("edge list line {}: {s:?} is not a vertex index", lineno + 1)))
        };
        Ok((parse(a)?, parse(b)?))
    };
    let (lineno, header) = lines.next().ok_or_else(|| bad("edge list: missing \"n m\" header"))?;
    let (n, m) = pair(lineno, header)?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { what: "graph", n, limit: MAX_VERTICES });
    }
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        edges.push(pair(lineno, line)?);
    }
    if edges.len() != m {
        return Err(bad(format!("edge list: header promises {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

pub fn write_edgelist(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use proptest::prelude::*;

    #[test]
    fn graph6_examples() {
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(write_graph6(&path(4)), "Ch");
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2));
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6(">>graph6<<Ch\n").unwrap(), path(4));
    }

    #[test]
    fn graph6_errors() {
        for text in ["C", "B w", "Bww", "~?", "", "B\u{7f}"] {
            assert!(matches!(parse_graph6(text), Err(Error::Parse(_))), "{text:?}");
        }
    }

    #[test]
    fn graph6_long_size_form() {
        let g = Graph::from_fn(70, |u, v| (u * 7 + v) % 5 == 0);
        let text = write_graph6(&g);
        assert!(text.starts_with('~'));
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edgelist_examples() {
        assert_eq!(parse_edgelist("4 3\n0 1\n1 2\n2 3").unwrap(), path(4));
        assert_eq!(parse_edgelist("3 0").unwrap(), Graph::empty(3));
        assert_eq!(parse_edgelist("2 1\n0 0"), Err(Error::SelfLoop(0)));
        assert!(parse_edgelist("# comment\n\n3 1\n0 2 # trailing\n").is_ok());
        assert!(matches!(parse_edgelist("3 2\n0 1"), Err(Error::Parse(_))));
        assert!(matches!(parse_edgelist("3 1\n0 5"), Err(Error::EdgeOutOfRange { .. })));
        assert!(matches!(parse_edgelist("3 1\n0 x"), Err(Error::Parse(_))));
        assert!(matches!(parse_edgelist(""), Err(Error::Parse(_))));
    }

    proptest! {
        #[test]
        fn round_trips(n in 0usize..80, seed in any::<u64>()) {
            let g = crate::corpus::random_graph(n, 0.4, seed).unwrap();
            prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_edgelist(&write_edgelist(&g)).unwrap(), g);
        }
    }
}
