//! Text formats: edge lists, graph6 and DOT.
//!
//! Edge-list format: a header line `n m`, then `m` lines `u v` with 0-based
//! ids. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line: usize, s: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = s.split_whitespace().collect();
    if fields.len() != 2 {
        return parse_err(line, format!("expected two integers, found {:?}", s));
    }
    let num = |f: &str| f.parse::<usize>().or_else(|_| parse_err(line, format!("{f:?} is not a vertex id")));
    Ok((num(fields[0])?, num(fields[1])?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return parse_err(1, "empty input");
    };
    let (n, m) = two_numbers(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    for (line, s) in lines {
        let (u, v) = two_numbers(line, s)?;
        if u >= n || v >= n {
            return parse_err(line, format!("vertex id out of range 0..{n}"));
        }
        if u == v {
            return parse_err(line, format!("self-loop at {u}"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return parse_err(line, format!("edge {{{u}, {v}}} repeated"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return parse_err(hl, format!("header announces {m} edges, found {}", edges.len()));
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let Some((line, s)) = content_lines(text).next() else {
        return parse_err(1, "empty input");
    };
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return parse_err(line, "graph6 characters must lie in 63..=126");
    }
    let (n, rest) = match bytes.first() {
        None => return parse_err(line, "missing vertex count"),
        Some(&126) => {
            if bytes.len() < 4 || bytes[1] == 126 {
                return parse_err(line, "unsupported graph6 size header");
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
            (n, &bytes[4..])
        }
        Some(&b) => (usize::from(b - 63), &bytes[1..]),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return parse_err(line, format!("expected {} data bytes for {n} vertices, found {}", bits.div_ceil(6), rest.len()));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 short form holds at most 258047 vertices");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(word + 63);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Edge list if the first content line is two integers, graph6 otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match content_lines(text).next() {
        None => parse_err(1, "empty input"),
        Some((_, first)) if first.split_whitespace().count() == 2 => parse_edge_list(text),
        Some(_) => parse_graph6(text),
    }
}

/// Graphviz rendering; `colors` optionally assigns a fill colour per vertex.
pub fn to_dot(g: &Graph, colors: Option<&[&str]>) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let label = g.labels().map_or_else(|| v.to_string(), |l| l[v].clone());
        match colors {
            Some(c) => {
                let _ = writeln!(s, "  {v} [label=\"{label}\", style=filled, fillcolor={}];", c[v]);
            }
            None => {
                let _ = writeln!(s, "  {v} [label=\"{label}\"];");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::labeled_graphs;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::path(4);
        let text = write_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(parse_graph("# comment\n\n2 1\n0 1\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 5\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 x\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn graph6_known_strings() {
        // reference encodings from the format description
        assert_eq!(write_graph6(&Graph::complete(4)), "C~");
        assert_eq!(write_graph6(&Graph::path(4)), "Ch");
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph("Ch\n").unwrap(), Graph::path(4));
        assert!(parse_graph6("C").is_err());
    }

    #[test]
    fn graph6_round_trip() {
        for g in labeled_graphs(5) {
            assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
        let big = Graph::cycle(70);
        assert_eq!(parse_graph6(&write_graph6(&big)).unwrap(), big);
    }

    #[test]
    fn dot_lists_edges() {
        let dot = to_dot(&Graph::path(3), None);
        assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"));
    }
}
