use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Edge, Graph};
use crate::error::{Error, Result};

/// Named graph families.
///
/// Text syntax is `name:params`, e.g. `cycle:5`, `wheel:7`, `kmm:6,2`,
/// `kbip:2,3`, `tree:9,42` (n, seed), `outerplanar:8,1` (n, seed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,leaves}`, center labeled 1.
    Star(usize),
    /// `W_n = K_1 ∨ C_n` on `n + 1` vertices, apex labeled 1.
    Wheel(usize),
    /// `K_n` minus the matching `{1,2}, {3,4}, …` of size `k`.
    CompleteMinusMatching(usize, usize),
    RandomTree {
        n: usize,
        seed: u64,
    },
    RandomOuterplanar {
        n: usize,
        seed: u64,
    },
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        use Family::*;
        match *self {
            Path(n) => {
                need(n >= 1, "path", "n >= 1")?;
                Ok(Graph::from_edge_set(n, (1..n).map(|i| Edge::new(i, i + 1))))
            }
            Cycle(n) => {
                need(n >= 3, "cycle", "n >= 3")?;
                Ok(cycle(n))
            }
            Complete(n) => {
                need(n >= 1, "complete", "n >= 1")?;
                Ok(complete(n))
            }
            CompleteBipartite(m, k) => {
                need(
                    m >= 1 && k >= 1,
                    "complete_bipartite",
                    "both parts nonempty",
                )?;
                Ok(Graph::from_edge_set(
                    m + k,
                    (1..=m).flat_map(|u| (m + 1..=m + k).map(move |v| Edge::new(u, v))),
                ))
            }
            Star(leaves) => Family::CompleteBipartite(1, leaves).build(),
            Wheel(n) => {
                need(n >= 3, "wheel", "n >= 3")?;
                Ok(Graph::empty(1).join(&cycle(n)))
            }
            CompleteMinusMatching(n, k) => {
                need(n >= 1, "complete_minus_matching", "n >= 1")?;
                need(k <= n / 2, "complete_minus_matching", "k <= n/2")?;
                let g = complete(n);
                Ok(Graph::from_edge_set(
                    n,
                    g.edges()
                        .filter(|e| !(e.v() == e.u() + 1 && e.u() % 2 == 1 && e.u() < 2 * k)),
                ))
            }
            RandomTree { n, seed } => {
                need(n >= 1, "random_tree", "n >= 1")?;
                Ok(random_tree(n, seed))
            }
            RandomOuterplanar { n, seed } => {
                need(n >= 3, "random_outerplanar", "n >= 3")?;
                Ok(random_outerplanar(n, seed))
            }
        }
    }
}

fn need(ok: bool, family: &str, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::params(family, format!("requires {what}")))
    }
}

fn cycle(n: usize) -> Graph {
    Graph::from_edge_set(n, (1..=n).map(|i| Edge::new(i, i % n + 1)))
}

fn complete(n: usize) -> Graph {
    Graph::from_edge_set(
        n,
        (1..=n).flat_map(|u| (u + 1..=n).map(move |v| Edge::new(u, v))),
    )
}

/// Uniform labeled tree via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        return Graph::from_edge_set(n, (n == 2).then(|| Edge::new(1, 2)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    let mut degree = vec![1usize; n + 1];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (1..=n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push(Edge::new(leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push(Edge::new(rest[0], rest[1]));
    Graph::from_edge_set(n, edges)
}

/// A 2-connected outerplanar graph: an `n`-cycle plus a random
/// non-crossing chord set, with labels shuffled.
///
/// Chords come from recursive polygon splitting: each polygon with at
/// least four corners is split by a uniformly chosen diagonal with
/// probability one half.
pub fn random_outerplanar(n: usize, seed: u64) -> Graph {
    assert!(n >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Edge> = (1..=n).map(|i| Edge::new(i, i % n + 1)).collect();
    let mut polygons = vec![(1..=n).collect::<Vec<_>>()];
    while let Some(poly) = polygons.pop() {
        let k = poly.len();
        if k < 4 || !rng.gen_bool(0.5) {
            continue;
        }
        let diagonals: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (i + 2..k).map(move |j| (i, j)))
            .filter(|&(i, j)| !(i == 0 && j == k - 1))
            .collect();
        let &(i, j) = diagonals.choose(&mut rng).expect("k >= 4 has diagonals");
        edges.push(Edge::new(poly[i], poly[j]));
        polygons.push(poly[i..=j].to_vec());
        let mut other = poly[j..].to_vec();
        other.extend_from_slice(&poly[..=i]);
        polygons.push(other);
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(&mut rng);
    Graph::from_edge_set(
        n,
        edges
            .into_iter()
            .map(|e| Edge::new(perm[e.u() - 1], perm[e.v() - 1])),
    )
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected family:params, got {s:?}")))?;
        let nums: Vec<u64> = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad parameter {p:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!(
                    "{name} takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let u = |i: usize| nums[i] as usize;
        let fam = match name {
            "path" => {
                arity(1)?;
                Family::Path(u(0))
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(u(0))
            }
            "complete" => {
                arity(1)?;
                Family::Complete(u(0))
            }
            "kbip" | "complete_bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(u(0), u(1))
            }
            "star" => {
                arity(1)?;
                Family::Star(u(0))
            }
            "wheel" => {
                arity(1)?;
                Family::Wheel(u(0))
            }
            "kmm" | "complete_minus_matching" => {
                arity(2)?;
                Family::CompleteMinusMatching(u(0), u(1))
            }
            "tree" | "random_tree" => {
                arity(2)?;
                Family::RandomTree {
                    n: u(0),
                    seed: nums[1],
                }
            }
            "outerplanar" | "random_outerplanar" => {
                arity(2)?;
                Family::RandomOuterplanar {
                    n: u(0),
                    seed: nums[1],
                }
            }
            _ => return Err(Error::Parse(format!("unknown family {name:?}"))),
        };
        Ok(fam)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            CompleteBipartite(m, k) => write!(f, "kbip:{m},{k}"),
            Star(n) => write!(f, "star:{n}"),
            Wheel(n) => write!(f, "wheel:{n}"),
            CompleteMinusMatching(n, k) => write!(f, "kmm:{n},{k}"),
            RandomTree { n, seed } => write!(f, "tree:{n},{seed}"),
            RandomOuterplanar { n, seed } => write!(f, "outerplanar:{n},{seed}"),
        }
    }
}
