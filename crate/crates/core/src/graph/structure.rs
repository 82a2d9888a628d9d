use std::collections::BTreeSet;

use super::{Edge, Graph};

/// Blocks (as edge sets) plus cut vertices. Isolated vertices have no block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<Edge>>,
    pub cut_vertices: BTreeSet<usize>,
}

pub trait Blocks {
    fn connected_components(&self) -> Vec<Vec<usize>>;
    fn is_connected(&self) -> bool;
    fn blocks_and_cut_vertices(&self) -> BlockDecomposition;
    fn is_two_connected(&self) -> bool;
}

impl Blocks for Graph {
    /// Components as sorted vertex lists, ordered by smallest vertex.
    fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s - 1] {
                continue;
            }
            seen[s - 1] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Hopcroft–Tarjan with an explicit edge stack; blocks come out with
    /// sorted edges, ordered by their smallest edge.
    fn blocks_and_cut_vertices(&self) -> BlockDecomposition {
        let n = self.n();
        let mut disc = vec![0usize; n + 1];
        let mut low = vec![0usize; n + 1];
        let mut time = 0;
        let mut blocks = Vec::new();
        let mut cuts = BTreeSet::new();
        let mut edge_stack: Vec<Edge> = Vec::new();

        for root in self.vertices() {
            if disc[root] != 0 {
                continue;
            }
            time += 1;
            disc[root] = time;
            low[root] = time;
            let mut root_children = 0;
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, 0usize, 0usize)];
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if let Some(&w) = self.neighbors(v).get(*idx) {
                    *idx += 1;
                    if disc[w] == 0 {
                        edge_stack.push(Edge::new(v, w));
                        time += 1;
                        disc[w] = time;
                        low[w] = time;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent && disc[w] < disc[v] {
                        edge_stack.push(Edge::new(v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != 0 {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] >= disc[parent] {
                            if parent != root {
                                cuts.insert(parent);
                            }
                            let stop = Edge::new(parent, v);
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == stop {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children > 1 {
                cuts.insert(root);
            }
        }
        blocks.sort();
        BlockDecomposition {
            blocks,
            cut_vertices: cuts,
        }
    }

    /// Connected with no cut vertex. `K_1` and `K_2` count as 2-connected.
    fn is_two_connected(&self) -> bool {
        self.n() > 0
            && self.is_connected()
            && self.blocks_and_cut_vertices().cut_vertices.is_empty()
    }
}
