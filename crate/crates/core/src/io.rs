//! Text formats: graph6, DIMACS edge format, and a plain 0-based edge list.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6 (upper triangle, column-major, 6 bits per byte).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 supports at most 258047 vertices");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("invalid graph6 byte {b:#x}")));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Parse("unsupported graph6 size prefix".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() != needed {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {needed} for n = {n}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses every non-blank line of a graph6 file.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(from_graph6)
        .collect()
}

/// DIMACS: `c` comments, one `p edge n m` header, `e u v` lines with 1-based ids.
pub fn from_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut declared = 0;
    for (lineno, line) in text.lines().enumerate() {
        let mut tok = line.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if graph.is_some() {
                    return Err(Error::Parse(format!("line {}: second header", lineno + 1)));
                }
                let kind = tok.next();
                if !matches!(kind, Some("edge") | Some("col")) {
                    return Err(Error::Parse(format!("line {}: expected `p edge`", lineno + 1)));
                }
                let n = parse_num(tok.next(), lineno)?;
                declared = parse_num(tok.next(), lineno)?;
                graph = Some(Graph::empty(n));
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| Error::Parse(format!("line {}: edge before header", lineno + 1)))?;
                let u = parse_num(tok.next(), lineno)?;
                let v = parse_num(tok.next(), lineno)?;
                if u == 0 || v == 0 {
                    return Err(Error::Parse(format!("line {}: DIMACS ids are 1-based", lineno + 1)));
                }
                g.try_add_edge(u - 1, v - 1)?;
            }
            Some(other) => {
                return Err(Error::Parse(format!("line {}: unknown record `{other}`", lineno + 1)))
            }
        }
    }
    let g = graph.ok_or_else(|| Error::Parse("missing `p edge` header".into()))?;
    if g.m() > declared {
        return Err(Error::Parse(format!(
            "header declares {declared} edges but {} distinct edges were read",
            g.m()
        )));
    }
    Ok(g)
}

/// Edge list: first line `n m`, then `m` lines `u v` (0-based).
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let mut tok = header.split_whitespace();
    let n = parse_num(tok.next(), hl)?;
    let m = parse_num(tok.next(), hl)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let mut tok = line.split_whitespace();
        let u = parse_num(tok.next(), lineno)?;
        let v = parse_num(tok.next(), lineno)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges but {} lines follow",
            edges.len()
        )));
    }
    Graph::new(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_num(tok: Option<&str>, lineno: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse(format!("line {}: missing field", lineno + 1)))?;
    tok.parse()
        .map_err(|_| Error::Parse(format!("line {}: `{tok}` is not a count", lineno + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use proptest::prelude::*;

    #[test]
    fn graph6_known_strings() {
        // reference strings cross-checked against networkx's encoder
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&complete(2)), "A_");
        assert_eq!(to_graph6(&complete(4)), "C~");
        assert_eq!(to_graph6(&cycle(5).unwrap()), "Dhc");
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn graph6_long_form() {
        let t = path(100).unwrap();
        let s = to_graph6(&t);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), t);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err());
        assert!(from_graph6("Dh c").is_err());
        assert_eq!(from_graph6(">>graph6<<Dhc").unwrap(), cycle(5).unwrap());
    }

    #[test]
    fn dimacs_reader() {
        let text = "c a 4-cycle\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
        assert_eq!(from_dimacs(text).unwrap(), cycle(4).unwrap());
        assert!(from_dimacs("e 1 2\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 0 1\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 1 1\n").is_err());
    }

    #[test]
    fn edge_list_reader() {
        let g = from_edge_list("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g, path(4).unwrap());
        assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(from_edge_list("3 2\n0 1\n").is_err());
        assert!(from_edge_list("3 1\n0 3\n").is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_roundtrip(g in arb_graph(70)) {
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
