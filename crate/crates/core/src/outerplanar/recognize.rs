//! Outerplanarity: no subdivision of `K_4` and none of `K_{2,3}`.
//!
//! Both forbidden graphs have maximum degree 3, so containing one as a
//! subdivision is the same as containing it as a minor. `K_4`-minor-free
//! graphs reduce to nothing under leaf deletion and degree-2 suppression.
//! A `K_{2,3}` subdivision with hubs `x, y` is exactly three internally
//! disjoint `x–y` paths avoiding the edge `xy`.

use std::collections::BTreeSet;

use crate::flow::FlowNetwork;
use crate::graph::{Blocks, Graph};

pub fn is_outerplanar(g: &Graph) -> bool {
    let dec = g.blocks_and_cut_vertices();
    dec.blocks.iter().filter(|b| b.len() >= 3).all(|b| {
        let (h, _) = g.edge_subgraph(b);
        block_is_outerplanar(&h)
    })
}

/// For a 2-connected graph.
pub(crate) fn block_is_outerplanar(h: &Graph) -> bool {
    let n = h.n();
    if n >= 2 && h.edge_count() > 2 * n - 3 {
        return false;
    }
    is_k4_minor_free(h) && !has_k23_subdivision(h)
}

pub fn is_k4_minor_free(g: &Graph) -> bool {
    let mut adj: Vec<BTreeSet<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut queue: Vec<usize> = (0..g.n()).filter(|&v| adj[v].len() <= 2).collect();
    let mut alive = vec![true; g.n()];
    while let Some(x) = queue.pop() {
        if !alive[x] || adj[x].len() > 2 {
            continue;
        }
        alive[x] = false;
        let nbrs: Vec<usize> = adj[x].iter().map(|&w| w - 1).collect();
        adj[x].clear();
        for &w in &nbrs {
            adj[w].remove(&(x + 1));
        }
        if let [v, w] = nbrs[..] {
            adj[v].insert(w + 1);
            adj[w].insert(v + 1);
        }
        queue.extend(nbrs.into_iter().filter(|&w| adj[w].len() <= 2));
    }
    adj.iter().all(BTreeSet::is_empty)
}

/// Whether some pair has three internally disjoint paths in `g − xy`.
pub fn has_k23_subdivision(g: &Graph) -> bool {
    let deg3: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    for (k, &x) in deg3.iter().enumerate() {
        for &y in &deg3[k + 1..] {
            if local_connectivity_without_edge(g, x, y, 3) >= 3 {
                return true;
            }
        }
    }
    false
}

/// Internally disjoint `x–y` paths not using the edge `xy`, up to `limit`.
fn local_connectivity_without_edge(g: &Graph, x: usize, y: usize, limit: u32) -> u32 {
    // vertex v splits into in = 2(v−1), out = 2(v−1)+1
    let node_in = |v: usize| 2 * (v - 1);
    let node_out = |v: usize| 2 * (v - 1) + 1;
    let mut net = FlowNetwork::new(2 * g.n());
    for v in g.vertices() {
        let cap = if v == x || v == y { limit } else { 1 };
        net.add_arc(node_in(v), node_out(v), cap);
    }
    for e in g.edges() {
        if (e.u(), e.v()) == (x.min(y), x.max(y)) {
            continue;
        }
        net.add_arc(node_out(e.u()), node_in(e.v()), 1);
        net.add_arc(node_out(e.v()), node_in(e.u()), 1);
    }
    net.max_flow(node_out(x), node_in(y), limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn small_cases() {
        let c5 = Family::Cycle(5).build().unwrap();
        assert!(is_outerplanar(&c5));
        assert!(is_outerplanar(&c5.add_edge((1, 3)).unwrap()));
        assert!(!is_outerplanar(&Family::Complete(4).build().unwrap()));
        assert!(!is_outerplanar(
            &Family::CompleteBipartite(2, 3).build().unwrap()
        ));
        assert!(is_outerplanar(
            &Family::CompleteMinusMatching(4, 1).build().unwrap()
        ));
        assert!(is_outerplanar(&Family::Star(5).build().unwrap()));
        assert!(is_outerplanar(&Graph::empty(3)));
        assert!(!is_outerplanar(&Family::Wheel(5).build().unwrap()));
    }

    #[test]
    fn forbidden_pieces_separately() {
        let k4 = Family::Complete(4).build().unwrap();
        assert!(!is_k4_minor_free(&k4));
        assert!(!has_k23_subdivision(&k4));
        let k23 = Family::CompleteBipartite(2, 3).build().unwrap();
        assert!(is_k4_minor_free(&k23));
        assert!(has_k23_subdivision(&k23));
        // subdivided K4 is still caught
        let sk4 = k4.subdivide((1, 2)).unwrap().subdivide((3, 4)).unwrap();
        assert!(!is_outerplanar(&sk4));
    }

    #[test]
    fn random_outerplanar_recognized() {
        for seed in 0..30 {
            let g = Family::RandomOuterplanar { n: 12, seed }.build().unwrap();
            assert!(is_outerplanar(&g), "{g}");
        }
    }
}
