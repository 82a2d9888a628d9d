//! Edge-list text format: a header `n m`, then `m` lines `u v` (1-indexed).
//! Blank lines and `#` comments are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let [n, m] = two_numbers(header, lineno)?;

    let mut pairs = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let [u, v] = two_numbers(line, lineno)?;
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {}",
            pairs.len()
        )));
    }
    Graph::from_edges(n, pairs)
}

fn two_numbers(line: &str, lineno: usize) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse(format!(
            "line {lineno}: expected two integers, got {line:?}"
        )));
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| Error::Parse(format!("line {lineno}: bad integer {f:?}")))?;
    }
    Ok(out)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    s
}
