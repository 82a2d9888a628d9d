//! Slow reference checks for small graphs.

use crate::error::{Error, Result};
use crate::graph::{Blocks, Edge, Graph};

/// Which forbidden graph a subdivision realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Forbidden {
    K4,
    K23,
}

/// A located subdivision: branch vertices plus one path per branch edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub kind: Forbidden,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

pub const ORACLE_MAX_N: usize = 12;

/// Exhaustive search: every choice of branch vertices, then backtracking
/// over internally disjoint paths that avoid the other branch vertices.
pub fn find_forbidden_subdivision(g: &Graph) -> Result<Option<Subdivision>> {
    if g.n() > ORACLE_MAX_N {
        return Err(Error::TooLarge {
            what: "subdivision search",
            n: g.n(),
            cap: ORACLE_MAX_N,
        });
    }
    let cand: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    for quad in choose(&cand, 4) {
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .map(|(i, j)| (quad[i], quad[j]))
            .collect();
        if let Some(paths) = link_all(g, &quad, &pairs) {
            return Ok(Some(Subdivision {
                kind: Forbidden::K4,
                branch: quad,
                paths,
            }));
        }
    }
    for hubs in choose(&cand, 2) {
        let rest: Vec<usize> = g
            .vertices()
            .filter(|v| !hubs.contains(v) && g.degree(*v) >= 2)
            .collect();
        for leaves in choose(&rest, 3) {
            let branch: Vec<usize> = hubs.iter().chain(&leaves).copied().collect();
            let pairs: Vec<(usize, usize)> = hubs
                .iter()
                .flat_map(|&h| leaves.iter().map(move |&l| (h, l)))
                .collect();
            if let Some(paths) = link_all(g, &branch, &pairs) {
                return Ok(Some(Subdivision {
                    kind: Forbidden::K23,
                    branch,
                    paths,
                }));
            }
        }
    }
    Ok(None)
}

fn choose(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

fn link_all(g: &Graph, branch: &[usize], pairs: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut used = vec![false; g.n() + 1];
    for &b in branch {
        used[b] = true;
    }
    let mut paths = Vec::new();
    link(g, pairs, &mut used, &mut paths).then_some(paths)
}

fn link(
    g: &Graph,
    pairs: &[(usize, usize)],
    used: &mut [bool],
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    let Some(&(a, b)) = pairs.first() else {
        return true;
    };
    let mut path = vec![a];
    walk(g, a, b, &pairs[1..], used, &mut path, paths)
}

fn walk(
    g: &Graph,
    at: usize,
    goal: usize,
    rest: &[(usize, usize)],
    used: &mut [bool],
    path: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    for &w in g.neighbors(at) {
        if w == goal {
            path.push(w);
            paths.push(path.clone());
            if link(g, rest, used, paths) {
                return true;
            }
            paths.pop();
            path.pop();
        } else if !used[w] {
            used[w] = true;
            path.push(w);
            if walk(g, w, goal, rest, used, path, paths) {
                return true;
            }
            path.pop();
            used[w] = false;
        }
    }
    false
}

/// Every block with three or more vertices has a Hamiltonian cycle whose
/// remaining edges are pairwise non-crossing chords.
pub fn hamiltonian_chord_check(g: &Graph) -> Result<bool> {
    if g.n() > ORACLE_MAX_N {
        return Err(Error::TooLarge {
            what: "Hamiltonian chord check",
            n: g.n(),
            cap: ORACLE_MAX_N,
        });
    }
    let dec = g.blocks_and_cut_vertices();
    Ok(dec.blocks.iter().filter(|b| b.len() >= 3).all(|b| {
        let (h, _) = g.edge_subgraph(b);
        let mut found = false;
        let mut seen = vec![false; h.n() + 1];
        seen[1] = true;
        hamiltonian(&h, &mut vec![1], &mut seen, &mut |cyc| {
            found = chords_noncrossing(&h, cyc);
            found
        });
        found
    }))
}

fn hamiltonian(
    g: &Graph,
    path: &mut Vec<usize>,
    seen: &mut [bool],
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let last = *path.last().expect("nonempty");
    if path.len() == g.n() {
        return g.has_edge(last, path[0]) && f(path);
    }
    for &w in g.neighbors(last) {
        if !seen[w] {
            seen[w] = true;
            path.push(w);
            if hamiltonian(g, path, seen, f) {
                return true;
            }
            path.pop();
            seen[w] = false;
        }
    }
    false
}

fn chords_noncrossing(g: &Graph, cycle: &[usize]) -> bool {
    let n = cycle.len();
    let mut pos = vec![0; g.n() + 1];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let chords: Vec<Edge> = g
        .edges()
        .filter(|e| {
            let d = pos[e.u()].abs_diff(pos[e.v()]);
            d != 1 && d != n - 1
        })
        .collect();
    chords.iter().enumerate().all(|(i, a)| {
        let (lo, hi) = (pos[a.u()].min(pos[a.v()]), pos[a.u()].max(pos[a.v()]));
        chords[i + 1..].iter().all(|b| {
            let inside = |v: usize| lo < pos[v] && pos[v] < hi;
            let shared = [b.u(), b.v()].iter().any(|&v| v == a.u() || v == a.v());
            shared || inside(b.u()) == inside(b.v())
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn finds_the_forbidden_graphs() {
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(
            find_forbidden_subdivision(&k4).unwrap().unwrap().kind,
            Forbidden::K4
        );
        let k23 = Family::CompleteBipartite(2, 3).build().unwrap();
        let s = find_forbidden_subdivision(&k23).unwrap().unwrap();
        assert_eq!(s.kind, Forbidden::K23);
        assert_eq!(s.paths.len(), 6);
        let c6 = Family::Cycle(6).build().unwrap().add_edge((1, 4)).unwrap();
        assert!(find_forbidden_subdivision(&c6).unwrap().is_none());
        assert!(hamiltonian_chord_check(&c6).unwrap());
        assert!(!hamiltonian_chord_check(&k4).unwrap());
        assert!(!hamiltonian_chord_check(&k23).unwrap());
    }
}
