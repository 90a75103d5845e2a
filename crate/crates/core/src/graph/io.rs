//! DIMACS-style edge files: `p edge <n> <m>`, then `m` lines `e <u> <v>`
//! with 1-based ids. Lines starting with `c` are comments.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(err("duplicate `p` line".into()));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(err(format!("expected `p edge <n> <m>`, got `{line}`")));
                }
                let n = fields[2].parse().map_err(|e| err(format!("bad vertex count: {e}")))?;
                let m = fields[3].parse().map_err(|e| err(format!("bad edge count: {e}")))?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| err("`e` line before `p` line".into()))?;
                if fields.len() != 3 {
                    return Err(err(format!("expected `e <u> <v>`, got `{line}`")));
                }
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip(&fields[1..]) {
                    let id: usize = tok.parse().map_err(|e| err(format!("bad vertex id `{tok}`: {e}")))?;
                    if id == 0 || id > n {
                        return Err(err(format!("vertex id {id} outside 1..={n}")));
                    }
                    *slot = id - 1;
                }
                if ends[0] == ends[1] {
                    return Err(err(format!("loop at vertex {}", ends[0] + 1)));
                }
                pairs.push((ends[0], ends[1]));
            }
            other => return Err(err(format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing `p edge` line".into() })?;
    if pairs.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header announces {m} edges but {} were listed", pairs.len()),
        });
    }
    Graph::from_edges(n, &pairs)
}

pub fn read_graph(path: &std::path::Path) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.order(), g.size()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
