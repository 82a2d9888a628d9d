//! All graphs on a few vertices, one per isomorphism class.
//!
//! Classes are grown one edge at a time and deduplicated by a canonical
//! code: the smallest adjacency bitmask over relabelings that respect an
//! iteratively refined degree partition.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Blocks, Edge, Graph};

pub const CATALOG_MAX_N: usize = 7;

/// Bit index of the pair `i < j` (0-indexed).
fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn code_of(n: usize, adj: &[u32]) -> u64 {
    let mut code = 0u64;
    for (i, row) in adj.iter().enumerate().take(n) {
        for j in i + 1..n {
            if row >> j & 1 == 1 {
                code |= 1 << pair_bit(n, i, j);
            }
        }
    }
    code
}

fn adj_of(n: usize, code: u64) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for i in 0..n {
        for j in i + 1..n {
            if code >> pair_bit(n, i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Color classes of the stable refinement, in canonical order.
fn refined_cells(n: usize, adj: &[u32]) -> Vec<Vec<usize>> {
    let mut color: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| color[w])
                    .collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let distinct: Vec<&(usize, Vec<usize>)> =
            keys.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| distinct.binary_search(&k).expect("present"))
            .collect();
        let stable = distinct.len() == color.iter().collect::<BTreeSet<_>>().len();
        color = next;
        if stable {
            break;
        }
    }
    let classes = color.iter().max().map_or(0, |&c| c + 1);
    (0..classes)
        .map(|c| (0..n).filter(|&v| color[v] == c).collect())
        .collect()
}

fn canonical_code(n: usize, adj: &[u32]) -> u64 {
    let cells = refined_cells(n, adj);
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    permute_cells(&cells, 0, &mut order, &mut |order| {
        // order[k] is the old vertex placed at new position k
        let mut new_adj = vec![0u32; n];
        for (a, &va) in order.iter().enumerate() {
            for (b, &vb) in order.iter().enumerate() {
                if adj[va] >> vb & 1 == 1 {
                    new_adj[a] |= 1 << b;
                }
            }
        }
        best = best.min(code_of(n, &new_adj));
    });
    best
}

fn permute_cells(
    cells: &[Vec<usize>],
    k: usize,
    order: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if k == cells.len() {
        f(order);
        return;
    }
    let mut cell = cells[k].clone();
    let len = cell.len();
    heap_permutations(&mut cell, len, &mut |perm| {
        let base = order.len();
        order.extend_from_slice(perm);
        permute_cells(cells, k + 1, order, f);
        order.truncate(base);
    });
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, f);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        items.swap(j, k - 1);
    }
}

/// Canonical code of a graph on at most 8 vertices.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > 8 {
        return Err(Error::TooLarge {
            what: "canonical form",
            n,
            cap: 8,
        });
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << (w - 1)))
        .collect();
    Ok(canonical_code(n, &adj))
}

fn graph_of(n: usize, code: u64) -> Graph {
    let adj = adj_of(n, code);
    let mut edges = Vec::new();
    for (i, row) in adj.iter().enumerate() {
        for j in i + 1..n {
            if row >> j & 1 == 1 {
                edges.push(Edge::new(i + 1, j + 1));
            }
        }
    }
    Graph::from_edge_set(n, edges)
}

/// One representative per isomorphism class on `n` vertices, ordered by
/// edge count and then canonical code.
pub fn graphs(n: usize) -> Result<Vec<Graph>> {
    if n > CATALOG_MAX_N {
        return Err(Error::TooLarge {
            what: "graph catalog",
            n,
            cap: CATALOG_MAX_N,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    let mut out: Vec<Graph> = vec![graph_of(n, 0)];
    for _ in 0..pairs {
        let mut next = BTreeSet::new();
        for &code in &level {
            for b in (0..pairs).filter(|&b| code >> b & 1 == 0) {
                let grown = code | 1 << b;
                next.insert(canonical_code(n, &adj_of(n, grown)));
            }
        }
        out.extend(next.iter().map(|&c| graph_of(n, c)));
        level = next;
    }
    Ok(out)
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(graphs(n)?
        .into_iter()
        .filter(|g| g.is_connected())
        .collect())
}
