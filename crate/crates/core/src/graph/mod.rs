//! Simple undirected graphs on the vertex set `1..=n`.
//!
//! Vertices are always labeled `1..=n`. Operations that remove vertices
//! return a [`VertexMap`] so callers can follow labels across the edit;
//! operations that add a vertex append it as `n + 1`.

mod double;
mod generate;
mod io;
mod sp;
mod structure;

pub use double::{pq_to_root, BipartiteDouble, LatticePoint};
pub use generate::{random_outerplanar, random_tree, Family};
pub use io::{parse_edge_list, write_edge_list};
pub use sp::{SpKind, TwoTerminal};
pub use structure::{BlockDecomposition, Blocks};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Edge(usize, usize);

impl Edge {
    /// Normalizes the endpoint order. Panics on a self-loop.
    pub fn new(u: usize, v: usize) -> Self {
        assert_ne!(u, v, "self-loop");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn other(self, x: usize) -> usize {
        if x == self.0 {
            self.1
        } else {
            self.0
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((u, v): (usize, usize)) -> Self {
        Edge::new(u, v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Relabeling produced by vertex-removing operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    old_to_new: Vec<Option<usize>>,
    new_to_old: Vec<usize>,
}

impl VertexMap {
    fn from_kept(old_n: usize, kept: &[usize]) -> Self {
        let mut old_to_new = vec![None; old_n];
        for (i, &old) in kept.iter().enumerate() {
            old_to_new[old - 1] = Some(i + 1);
        }
        VertexMap {
            old_to_new,
            new_to_old: kept.to_vec(),
        }
    }

    pub fn new_label(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old.checked_sub(1)?).copied().flatten()
    }

    pub fn old_label(&self, new: usize) -> Option<usize> {
        self.new_to_old.get(new.checked_sub(1)?).copied()
    }

    /// Old labels in new-label order.
    pub fn kept(&self) -> &[usize] {
        &self.new_to_old
    }
}

/// A simple undirected graph on `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    // adj[v - 1] is the sorted neighbor list of v.
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from 1-indexed pairs. Duplicates collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I, E>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for p in pairs {
            let (u, v) = p.into();
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_edge_set(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut g = Graph::empty(n);
        for e in edges {
            g.insert_edge(e.u(), e.v());
        }
        g
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && (1..=self.n).contains(&u) && (1..=self.n).contains(&v));
        let a = &mut self.adj[u - 1];
        if let Err(pos) = a.binary_search(&v) {
            a.insert(pos, v);
            let b = &mut self.adj[v - 1];
            let pos = b.binary_search(&u).unwrap_err();
            b.insert(pos, u);
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, nb)| {
            let u = i + 1;
            nb.iter().filter(move |&&v| v > u).map(move |&v| Edge(u, v))
        })
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v
            && (1..=self.n).contains(&u)
            && (1..=self.n).contains(&v)
            && self.adj[u - 1].binary_search(&v).is_ok()
    }

    fn require_edge(&self, e: Edge) -> Result<()> {
        if self.has_edge(e.u(), e.v()) {
            Ok(())
        } else {
            Err(Error::MissingEdge(e.u(), e.v()))
        }
    }

    /// `g ∖ e`.
    pub fn delete_edge(&self, e: impl Into<Edge>) -> Result<Graph> {
        let e = e.into();
        self.require_edge(e)?;
        let mut g = self.clone();
        g.adj[e.u() - 1].retain(|&x| x != e.v());
        g.adj[e.v() - 1].retain(|&x| x != e.u());
        Ok(g)
    }

    /// Adds an edge; a no-op when it is already present.
    pub fn add_edge(&self, e: impl Into<Edge>) -> Result<Graph> {
        let e = e.into();
        self.check_vertex(e.v())?;
        let mut g = self.clone();
        g.insert_edge(e.u(), e.v());
        Ok(g)
    }

    /// `g − v`, relabeling the survivors `1..=n−1` in order.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, VertexMap)> {
        self.check_vertex(v)?;
        let kept: Vec<usize> = self.vertices().filter(|&x| x != v).collect();
        Ok(self.induced_subgraph(&kept))
    }

    /// Induced subgraph on `vertices` (given in the desired new order).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, VertexMap) {
        let map = VertexMap::from_kept(self.n, vertices);
        let mut g = Graph::empty(vertices.len());
        for (i, &old) in vertices.iter().enumerate() {
            for &w in self.neighbors(old) {
                if let Some(j) = map.new_label(w) {
                    if j > i + 1 {
                        g.insert_edge(i + 1, j);
                    }
                }
            }
        }
        (g, map)
    }

    /// Subgraph spanned by an edge set, on the vertices those edges touch,
    /// relabeled in increasing order of old label.
    pub fn edge_subgraph(&self, edges: &[Edge]) -> (Graph, VertexMap) {
        let verts: BTreeSet<usize> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect();
        let kept: Vec<usize> = verts.into_iter().collect();
        let map = VertexMap::from_kept(self.n, &kept);
        let g = Graph::from_edge_set(
            kept.len(),
            edges.iter().map(|e| {
                Edge::new(
                    map.new_label(e.u()).expect("endpoint kept"),
                    map.new_label(e.v()).expect("endpoint kept"),
                )
            }),
        );
        (g, map)
    }

    /// `g : e`: replaces `e = uv` with `u–(n+1)–v`.
    pub fn subdivide(&self, e: impl Into<Edge>) -> Result<Graph> {
        let e = e.into();
        let mut g = self.delete_edge(e)?;
        let w = g.push_vertex();
        g.insert_edge(e.u(), w);
        g.insert_edge(e.v(), w);
        Ok(g)
    }

    /// `g △ e`: keeps `e = uv` and adds vertex `n+1` adjacent to `u` and `v`.
    pub fn triangle_join(&self, e: impl Into<Edge>) -> Result<Graph> {
        let e = e.into();
        self.require_edge(e)?;
        let mut g = self.clone();
        let w = g.push_vertex();
        g.insert_edge(e.u(), w);
        g.insert_edge(e.v(), w);
        Ok(g)
    }

    fn push_vertex(&mut self) -> usize {
        self.n += 1;
        self.adj.push(Vec::new());
        self.n
    }

    /// `g + h`, with `h` relabeled to `n_g+1..=n_g+n_h`.
    pub fn disjoint_union(&self, h: &Graph) -> Graph {
        let off = self.n;
        let mut g = self.clone();
        g.n += h.n;
        g.adj
            .extend(h.adj.iter().map(|nb| nb.iter().map(|&x| x + off).collect()));
        g
    }

    /// `g ∨ h`: disjoint union plus every cross edge.
    pub fn join(&self, h: &Graph) -> Graph {
        let mut g = self.disjoint_union(h);
        for u in 1..=self.n {
            for v in self.n + 1..=self.n + h.n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Applies `perm`, where vertex `v` becomes `perm[v - 1]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::Parse(format!("{p} repeated in permutation")));
            }
        }
        Ok(Graph::from_edge_set(
            self.n,
            self.edges()
                .map(|e| Edge::new(perm[e.u() - 1], perm[e.v() - 1])),
        ))
    }

    /// Stable content hash of `(n, sorted edges)`, 16 hex digits.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.canonical_text().as_bytes());
        let digest = h.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// `n;u-v,u-v,...` with edges sorted. Used as a memo key and hash input.
    pub fn canonical_text(&self) -> String {
        let edges: Vec<String> = self.edges().map(|e| e.to_string()).collect();
        format!("{};{}", self.n, edges.join(","))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (k, e) in self.edges().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}
