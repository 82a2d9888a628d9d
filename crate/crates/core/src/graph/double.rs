use super::Graph;
use crate::bits::Bits;
use crate::error::{Error, Result};

/// The bipartite double `D(G)`: left vertex `i` is joined to right vertex
/// `j̄` iff `i = j` or `ij ∈ E(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteDouble {
    n: usize,
    // rows[i] holds the right neighbors of left vertex i + 1, 0-indexed.
    rows: Vec<Bits>,
}

/// A point with integer coordinates.
pub type LatticePoint = Vec<i32>;

impl BipartiteDouble {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let rows = g
            .vertices()
            .map(|v| {
                let mut b = Bits::new(n);
                b.insert(v - 1);
                for &w in g.neighbors(v) {
                    b.insert(w - 1);
                }
                b
            })
            .collect();
        BipartiteDouble { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Right neighbors of left vertex `i` (1-indexed), as 0-indexed bits.
    pub fn row(&self, i: usize) -> &Bits {
        &self.rows[i - 1]
    }

    pub(crate) fn rows(&self) -> &[Bits] {
        &self.rows
    }

    /// Edges `(i, j)` meaning `i–j̄`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |j| (i + 1, j + 1)))
            .collect()
    }

    /// `|∪_{i ∈ s} 𝒩_{D(G)}(i)|` for a nonempty subset of `1..=n`.
    pub fn neighborhood_union_size(&self, s: &[usize]) -> Result<usize> {
        if s.is_empty() {
            return Err(Error::Hypothesis("subset must be nonempty".into()));
        }
        let mut acc = Bits::new(self.n);
        for &i in s {
            if i == 0 || i > self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: i,
                    n: self.n,
                });
            }
            acc.union_with(&self.rows[i - 1]);
        }
        Ok(acc.len())
    }

    /// Whether `D(G)` is connected as a bipartite graph (direct search).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut left = vec![false; self.n];
        let mut right = vec![false; self.n];
        let mut stack = vec![0usize];
        left[0] = true;
        while let Some(i) = stack.pop() {
            for j in self.rows[i].iter() {
                if !right[j] {
                    right[j] = true;
                    for (k, r) in self.rows.iter().enumerate() {
                        if !left[k] && r.contains(j) {
                            left[k] = true;
                            stack.push(k);
                        }
                    }
                }
            }
        }
        left.iter().chain(&right).all(|&x| x)
    }

    /// Vertices `e_i − e_{N+j}` of the root polytope `Q_{D(G)}` in `R^{2N}`,
    /// one per edge `i j̄`.
    pub fn root_vertices(&self) -> Vec<LatticePoint> {
        self.edges()
            .into_iter()
            .map(|(i, j)| {
                let mut p = vec![0; 2 * self.n];
                p[i - 1] = 1;
                p[self.n + j - 1] = -1;
                p
            })
            .collect()
    }
}

impl Graph {
    pub fn double(&self) -> BipartiteDouble {
        BipartiteDouble::new(self)
    }

    /// Vertices `(e_i, e_j)` of `∇^PQ_G` for `i = j` or `ij ∈ E`, sorted.
    pub fn pq_vertices(&self) -> Vec<LatticePoint> {
        let n = self.n();
        let mut out = Vec::with_capacity(n + 2 * self.edge_count());
        for i in self.vertices() {
            let mut js: Vec<usize> = self.neighbors(i).to_vec();
            js.push(i);
            js.sort_unstable();
            for j in js {
                let mut p = vec![0; 2 * n];
                p[i - 1] = 1;
                p[n + j - 1] = 1;
                out.push(p);
            }
        }
        out
    }
}

/// The unimodular identification `e_{N+j} ↦ −e_{N+j}` taking `∇^PQ_G`
/// onto `Q_{D(G)}`.
pub fn pq_to_root(p: &[i32]) -> LatticePoint {
    let half = p.len() / 2;
    p.iter()
        .enumerate()
        .map(|(k, &x)| if k >= half { -x } else { x })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn pendant_triangle_double() {
        let g = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = g.double();
        assert_eq!(
            d.edges(),
            vec![
                (1, 1),
                (1, 2),
                (2, 1),
                (2, 2),
                (2, 3),
                (2, 4),
                (3, 2),
                (3, 3),
                (3, 4),
                (4, 2),
                (4, 3),
                (4, 4)
            ]
        );
        assert_eq!(d.root_vertices().len(), 12);
        assert_eq!(g.pq_vertices().len(), 12);
    }

    #[test]
    fn small_doubles() {
        let d = Graph::empty(1).double();
        assert_eq!(d.edges(), vec![(1, 1)]);
        let k2 = Family::Path(2).build().unwrap().double();
        assert_eq!(k2.row(1).iter().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(k2.row(2).iter().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(Graph::empty(1).pq_vertices(), vec![vec![1, 1]]);
        let c3 = Family::Cycle(3).build().unwrap();
        let pts = c3.pq_vertices();
        assert_eq!(pts.len(), 9);
        assert!(pts
            .iter()
            .all(|p| p.len() == 6 && p.iter().sum::<i32>() == 2));
    }

    #[test]
    fn star_union_sizes() {
        let g = Graph::from_edges(4, [(1, 2), (2, 3), (2, 4)]).unwrap();
        let d = g.double();
        assert_eq!(d.neighborhood_union_size(&[1]).unwrap(), 2);
        assert_eq!(d.neighborhood_union_size(&[2]).unwrap(), 4);
        assert_eq!(d.neighborhood_union_size(&[1, 3, 4]).unwrap(), 4);
        assert!(d.neighborhood_union_size(&[]).is_err());
        assert!(d.neighborhood_union_size(&[5]).is_err());
    }

    #[test]
    fn pq_and_root_correspond() {
        let g = Family::Wheel(5).build().unwrap();
        let mut a: Vec<_> = g.pq_vertices().iter().map(|p| pq_to_root(p)).collect();
        let mut b = g.double().root_vertices();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}
