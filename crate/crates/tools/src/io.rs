//! Edge-list, DIMACS and JSON graph files.
//!
//! Edge list: one `u v` pair per line, `#` starts a comment, and a line with
//! a single id declares a vertex without edges. Ids are arbitrary unsigned
//! integers and are compacted to `0..n` in increasing order.
//!
//! DIMACS: `c` comments, one `p edge n m` line, `e u v` lines with 1-based ids.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use homwarm_core::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] homwarm_core::Error),
    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

fn perr(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse { line, msg: msg.into() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
    Json,
}

impl Format {
    /// Guess from the extension, then from the first meaningful line.
    pub fn detect(path: &Path, text: &str) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("dimacs" | "col") => return Format::Dimacs,
            Some("json") => return Format::Json,
            _ => {}
        }
        let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(l) if l.starts_with("p ") || l.starts_with("c ") || l == "c" => Format::Dimacs,
            Some(l) if l.starts_with('{') => Format::Json,
            _ => Format::EdgeList,
        }
    }
}

fn parse_id(tok: &str, line: usize) -> Result<usize, IoError> {
    tok.parse().map_err(|_| perr(line, format!("expected a vertex id, found {tok:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut ids = BTreeMap::new();
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.as_slice() {
            [v] => {
                ids.insert(parse_id(v, line)?, 0);
            }
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                ids.insert(u, 0);
                ids.insert(v, 0);
                pairs.push((u, v));
            }
            _ => return Err(perr(line, format!("expected `u v`, found {} fields", toks.len()))),
        }
    }
    for (k, slot) in ids.values_mut().enumerate() {
        *slot = k;
    }
    Ok(Graph::from_edges(ids.len(), pairs.into_iter().map(|(u, v)| (ids[&u], ids[&v])))?)
}

pub fn parse_dimacs(text: &str) -> Result<Graph, IoError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(perr(line, "second problem line"));
                }
                if toks.len() != 4 || !matches!(toks[1], "edge" | "col") {
                    return Err(perr(line, "expected `p edge <n> <m>`"));
                }
                n = Some(parse_id(toks[2], line)?);
            }
            Some("e") => {
                let Some(n) = n else { return Err(perr(line, "edge before problem line")) };
                if toks.len() != 3 {
                    return Err(perr(line, "expected `e <u> <v>`"));
                }
                let (u, v) = (parse_id(toks[1], line)?, parse_id(toks[2], line)?);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(perr(line, format!("vertex out of range 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(perr(line, format!("unknown line type {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| perr(text.lines().count().max(1), "missing problem line"))?;
    Ok(Graph::from_edges(n, edges)?)
}

/// Plain graph record used in JSON files and reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDto {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphDto {
    fn from(g: &Graph) -> Self {
        GraphDto { n: g.n(), edges: g.edges().collect() }
    }
}

impl TryFrom<GraphDto> for Graph {
    type Error = homwarm_core::Error;
    fn try_from(d: GraphDto) -> Result<Graph, Self::Error> {
        Graph::from_edges(d.n, d.edges)
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph, IoError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
        Format::Json => Ok(serde_json::from_str::<GraphDto>(text)?.try_into()?),
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::File { path: path.display().to_string(), source })?;
    parse(&text, Format::detect(path, &text))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    // Vertices without edges would otherwise vanish.
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            writeln!(s, "{v}").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
    }
    s
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Dimacs => write_dimacs(g),
        Format::Json => serde_json::to_string(&GraphDto::from(g)).unwrap() + "\n",
    }
}

/// SHA-256 of the sorted edge list, prefixed by the vertex count.
pub fn canonical_hash(g: &Graph) -> String {
    use sha2::{Digest, Sha256};
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    let mut h = Sha256::new();
    h.update(format!("n={};", g.n()));
    for (u, v) in edges {
        h.update(format!("{u}-{v};"));
    }
    hex::encode(h.finalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use homwarm_core::generators::{cycle, kneser};

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 2)]).unwrap();
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn ids_are_compacted() {
        let g = parse_edge_list("# triangle\n10 20\n20 30 # tail comment\n30 10\n\n99\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 3));
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn dimacs_round_trip() {
        let g = kneser(5, 2).unwrap();
        assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_edge_list("0 1\n1 x\n").unwrap_err();
        assert!(matches!(e, IoError::Parse { line: 2, .. }), "{e}");
        let e = parse_edge_list("0 1 2\n").unwrap_err();
        assert!(matches!(e, IoError::Parse { line: 1, .. }));
        let e = parse_dimacs("c hi\np edge 3 1\ne 1 4\n").unwrap_err();
        assert!(matches!(e, IoError::Parse { line: 3, .. }), "{e}");
        let e = parse_dimacs("e 1 2\n").unwrap_err();
        assert!(matches!(e, IoError::Parse { line: 1, .. }));
        assert!(parse_dimacs("c nothing\n").is_err());
    }

    #[test]
    fn format_detection() {
        assert_eq!(Format::detect(Path::new("g.txt"), "p edge 3 0\n"), Format::Dimacs);
        assert_eq!(Format::detect(Path::new("g.col"), ""), Format::Dimacs);
        assert_eq!(Format::detect(Path::new("g"), "# x\n0 1\n"), Format::EdgeList);
        assert_eq!(Format::detect(Path::new("g"), "{\"n\":2}"), Format::Json);
        let g = cycle(4).unwrap();
        assert_eq!(parse(&write(&g, Format::Json), Format::Json).unwrap(), g);
    }

    #[test]
    fn hash_ignores_edge_order() {
        let a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(canonical_hash(&a), canonical_hash(&b));
        assert_ne!(canonical_hash(&a), canonical_hash(&cycle(3).unwrap()));
    }
}
