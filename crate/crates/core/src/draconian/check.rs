//! Membership tests for `𝔇(G)`.
//!
//! `a` is `D(G)`-draconian when `Σa = n − 1` and every nonempty `S ⊆ [n]`
//! has `Σ_{i∈S} a_i < |∪_{i∈S} 𝒩_{D(G)}(i)|`.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::BipartiteDouble;

/// Up to this size every subset is visited; above it only subsets whose
/// neighborhoods form one overlapping cluster.
pub const ALL_SUBSETS_MAX_N: usize = 22;

/// Which family of subsets the subset checker visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetScope {
    /// `ALL_SUBSETS_MAX_N` decides.
    Auto,
    All,
    /// Subsets connected in the overlap graph (`i ~ j` iff their
    /// neighborhoods in `D(G)` meet). A disconnected `S` splits into parts
    /// with disjoint unions, so its inequality is the sum of the parts'.
    Clustered,
}

/// The leaf checker used by constructions that need membership tests.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Checker {
    Subset,
    #[default]
    Flow,
}

impl Checker {
    pub fn check(self, d: &BipartiteDouble, a: &[u32]) -> Result<bool> {
        match self {
            Checker::Subset => check_subset(d, a),
            Checker::Flow => check_flow(d, a),
        }
    }
}

fn precheck(d: &BipartiteDouble, a: &[u32]) -> Result<bool> {
    if a.len() != d.n() {
        return Err(Error::LengthMismatch {
            expected: d.n(),
            got: a.len(),
        });
    }
    let total: u64 = a.iter().map(|&x| x as u64).sum();
    if total + 1 != d.n() as u64 {
        return Ok(false);
    }
    // singletons: a_i < 1 + deg(i)
    Ok(a.iter().zip(d.rows()).all(|(&x, r)| (x as usize) < r.len()))
}

pub fn check_subset(d: &BipartiteDouble, a: &[u32]) -> Result<bool> {
    check_subset_scoped(d, a, SubsetScope::Auto)
}

pub fn check_subset_scoped(d: &BipartiteDouble, a: &[u32], scope: SubsetScope) -> Result<bool> {
    if !precheck(d, a)? {
        return Ok(false);
    }
    let all = match scope {
        SubsetScope::Auto => d.n() <= ALL_SUBSETS_MAX_N,
        SubsetScope::All => {
            if d.n() > 40 {
                return Err(Error::TooLarge {
                    what: "all-subsets check",
                    n: d.n(),
                    cap: 40,
                });
            }
            true
        }
        SubsetScope::Clustered => false,
    };
    Ok(if all {
        all_subsets(d, a)
    } else {
        clustered_subsets(d, a)
    })
}

/// Gray-code walk over every nonempty subset, keeping per-right-vertex
/// cover counts so each step touches one row.
fn all_subsets(d: &BipartiteDouble, a: &[u32]) -> bool {
    let n = d.n();
    let rows: Vec<Vec<usize>> = d.rows().iter().map(|r| r.iter().collect()).collect();
    let mut cover = vec![0u32; n];
    let mut in_set = vec![false; n];
    let mut covered = 0usize;
    let mut sum = 0u64;
    for k in 1u64..(1u64 << n) {
        let i = k.trailing_zeros() as usize;
        if in_set[i] {
            in_set[i] = false;
            sum -= a[i] as u64;
            for &j in &rows[i] {
                cover[j] -= 1;
                if cover[j] == 0 {
                    covered -= 1;
                }
            }
        } else {
            in_set[i] = true;
            sum += a[i] as u64;
            for &j in &rows[i] {
                if cover[j] == 0 {
                    covered += 1;
                }
                cover[j] += 1;
            }
        }
        if sum >= covered as u64 {
            return false;
        }
    }
    true
}

/// Visits each connected induced subset of the overlap graph exactly once
/// (smallest member first, extensions restricted to exclusive neighbors).
fn clustered_subsets(d: &BipartiteDouble, a: &[u32]) -> bool {
    let n = d.n();
    let rows = d.rows();
    let overlap: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && rows[i].intersects(&rows[j]))
                .collect()
        })
        .collect();

    struct Walk<'a> {
        a: &'a [u32],
        rows: &'a [Bits],
        overlap: &'a [Vec<usize>],
        // members of the current subset plus their overlap neighbors
        touched: Vec<u32>,
    }

    impl Walk<'_> {
        fn touch(&mut self, w: usize, delta: i32) {
            self.touched[w] = (self.touched[w] as i32 + delta) as u32;
            for k in 0..self.overlap[w].len() {
                let u = self.overlap[w][k];
                self.touched[u] = (self.touched[u] as i32 + delta) as u32;
            }
        }

        fn extend(&mut self, root: usize, mut ext: Vec<usize>, union: &Bits, sum: u64) -> bool {
            if sum >= union.len() as u64 {
                return false;
            }
            while let Some(w) = ext.pop() {
                let mut next = ext.clone();
                next.extend(
                    self.overlap[w]
                        .iter()
                        .copied()
                        .filter(|&u| u > root && self.touched[u] == 0),
                );
                self.touch(w, 1);
                let mut grown = union.clone();
                grown.union_with(&self.rows[w]);
                let ok = self.extend(root, next, &grown, sum + self.a[w] as u64);
                self.touch(w, -1);
                if !ok {
                    return false;
                }
            }
            true
        }
    }

    let mut walk = Walk {
        a,
        rows,
        overlap: &overlap,
        touched: vec![0; n],
    };
    (0..n).all(|root| {
        walk.touch(root, 1);
        let ext: Vec<usize> = overlap[root]
            .iter()
            .copied()
            .filter(|&u| u > root)
            .collect();
        let ok = walk.extend(root, ext, &rows[root], a[root] as u64);
        walk.touch(root, -1);
        ok
    })
}

/// Hall-type checker: for every right vertex `ȳ`, the transportation
/// problem with left supplies `a_i`, unit right capacities and `ȳ` deleted
/// must route all `n − 1` units. Taking `ȳ ∈ 𝒩(S)` recovers each strict
/// inequality `Σ_S a ≤ |𝒩(S)| − 1`.
pub fn check_flow(d: &BipartiteDouble, a: &[u32]) -> Result<bool> {
    if !precheck(d, a)? {
        return Ok(false);
    }
    let n = d.n();
    let need = (n - 1) as u32;
    let (s, t) = (2 * n, 2 * n + 1);
    for y in 0..n {
        let mut net = FlowNetwork::new(2 * n + 2);
        for (i, row) in d.rows().iter().enumerate() {
            if a[i] > 0 {
                net.add_arc(s, i, a[i]);
                for j in row.iter().filter(|&j| j != y) {
                    net.add_arc(i, n + j, 1);
                }
            }
        }
        for j in (0..n).filter(|&j| j != y) {
            net.add_arc(n + j, t, 1);
        }
        if net.max_flow(s, t, need) < need {
            return Ok(false);
        }
    }
    Ok(true)
}
