use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use super::recognize::block_is_outerplanar;
use crate::error::{Error, Result};
use crate::graph::{Blocks, Edge, Graph};

/// A bounded face of a 2-connected outerplane graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    /// Boundary vertices in outer-cycle order, starting at the smallest.
    pub vertices: Vec<usize>,
    pub boundary_length: usize,
    /// Boundary edges that lie on the outer cycle, `o(F)`.
    pub outer_edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OuterStructure {
    pub n: usize,
    /// Hamiltonian outer cycle, starting at 1, second entry < last entry.
    pub cycle: Vec<usize>,
    pub chords: Vec<Edge>,
    pub faces: Vec<Face>,
}

pub const STRUCTURE_HEADER: &str = "outer-structure v1";

impl OuterStructure {
    pub fn has_interior_face(&self) -> bool {
        self.faces.iter().any(|f| f.outer_edges == 0)
    }

    /// Sizes and counts that any valid structure satisfies.
    pub fn totals_hold(&self) -> bool {
        let chords_ok = self
            .chords
            .iter()
            .enumerate()
            .all(|(i, a)| self.chords[i + 1..].iter().all(|b| !self.crosses(*a, *b)));
        chords_ok
            && self.faces.len() == self.chords.len() + 1
            && self.faces.iter().map(|f| f.outer_edges).sum::<usize>() == self.n
            && self.faces.iter().map(|f| f.boundary_length).sum::<usize>()
                == self.n + 2 * self.chords.len()
    }

    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n + 1];
        for (i, &v) in self.cycle.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Whether two chords cross with respect to the outer cycle.
    pub fn crosses(&self, a: Edge, b: Edge) -> bool {
        let pos = self.positions();
        let (a0, a1) = {
            let (x, y) = (pos[a.u()], pos[a.v()]);
            (x.min(y), x.max(y))
        };
        let inside = |v: usize| a0 < pos[v] && pos[v] < a1;
        let shared = [b.u(), b.v()].iter().any(|&v| v == a.u() || v == a.v());
        !shared && inside(b.u()) != inside(b.v())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(out, "{STRUCTURE_HEADER}");
        let _ = writeln!(out, "cycle {}", join(&self.cycle));
        let chords: Vec<String> = self.chords.iter().map(|e| e.to_string()).collect();
        let _ = writeln!(out, "chords {}", chords.join(" "));
        for f in &self.faces {
            let _ = writeln!(
                out,
                "face {} length={} outer={}",
                join(&f.vertices),
                f.boundary_length,
                f.outer_edges
            );
        }
        out
    }
}

/// Outer cycle, chords and bounded faces of a 2-connected outerplanar graph.
pub fn outer_structure(g: &Graph) -> Result<OuterStructure> {
    if g.n() < 3 || !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    if !block_is_outerplanar(g) {
        return Err(Error::NotOuterplanar);
    }
    let cycle = peel_cycle(g).ok_or(Error::NotOuterplanar)?;
    let n = g.n();
    let mut pos = vec![0; n + 1];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let is_outer = |a: usize, b: usize| {
        let d = pos[a].abs_diff(pos[b]);
        d == 1 || d == n - 1
    };
    let chords: Vec<Edge> = g.edges().filter(|e| !is_outer(e.u(), e.v())).collect();
    let mut faces = Vec::with_capacity(chords.len() + 1);
    split_polygon(cycle.clone(), &chords, &mut faces);
    let mut faces: Vec<Face> = faces
        .into_iter()
        .map(|mut poly| {
            let start = (0..poly.len()).min_by_key(|&i| poly[i]).unwrap_or(0);
            poly.rotate_left(start);
            let k = poly.len();
            let outer_edges = (0..k)
                .filter(|&i| is_outer(poly[i], poly[(i + 1) % k]))
                .count();
            Face {
                boundary_length: k,
                outer_edges,
                vertices: poly,
            }
        })
        .collect();
    faces.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(OuterStructure {
        n,
        cycle,
        chords,
        faces,
    })
}

/// Removes degree-2 vertices one at a time (joining their neighbors) down
/// to a triangle, then threads them back into the cycle.
fn peel_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..=n)
        .map(|v| {
            if v == 0 {
                BTreeSet::new()
            } else {
                g.neighbors(v).iter().copied().collect()
            }
        })
        .collect();
    let mut alive: BTreeSet<usize> = g.vertices().collect();
    let mut steps = Vec::with_capacity(n);
    while alive.len() > 3 {
        let x = *alive.iter().find(|&&x| adj[x].len() == 2)?;
        let (v, w) = {
            let mut it = adj[x].iter();
            (*it.next()?, *it.next()?)
        };
        alive.remove(&x);
        adj[v].remove(&x);
        adj[w].remove(&x);
        adj[v].insert(w);
        adj[w].insert(v);
        adj[x].clear();
        steps.push((x, v, w));
    }
    let mut cycle: Vec<usize> = alive.into_iter().collect();
    if cycle.len() == 3 && !cycle.iter().all(|&v| adj[v].len() == 2) {
        return None;
    }
    while let Some((x, v, w)) = steps.pop() {
        let k = cycle.len();
        let i = cycle.iter().position(|&y| y == v)?;
        if cycle[(i + 1) % k] == w {
            cycle.insert(i + 1, x);
        } else if cycle[(i + k - 1) % k] == w {
            cycle.insert(i, x);
        } else {
            return None;
        }
    }
    let start = cycle.iter().position(|&v| v == 1)?;
    cycle.rotate_left(start);
    if cycle.len() > 2 && cycle[1] > cycle[cycle.len() - 1] {
        cycle[1..].reverse();
    }
    Some(cycle)
}

fn split_polygon(poly: Vec<usize>, chords: &[Edge], out: &mut Vec<Vec<usize>>) {
    let k = poly.len();
    let at = |v: usize| poly.iter().position(|&y| y == v);
    for e in chords {
        if let (Some(i), Some(j)) = (at(e.u()), at(e.v())) {
            let (i, j) = (i.min(j), i.max(j));
            if j - i == 1 || (i == 0 && j == k - 1) {
                continue;
            }
            let left = poly[i..=j].to_vec();
            let right: Vec<usize> = poly[j..].iter().chain(&poly[..=i]).copied().collect();
            split_polygon(left, chords, out);
            split_polygon(right, chords, out);
            return;
        }
    }
    out.push(poly);
}

/// `deg_ewd(v_F)` for each face: every boundary edge of `F` is either a
/// chord shared with another bounded face or an outer edge with its own
/// pendant leaf, so the degree is the boundary length.
pub fn ewd_degrees(s: &OuterStructure) -> Vec<usize> {
    s.faces.iter().map(|f| f.boundary_length).collect()
}

/// The extended weak dual built literally: faces are vertices `1..=|F|`
/// (in `s.faces` order), joined when they share a chord, and every outer
/// edge adds a pendant leaf to its face.
pub fn extended_weak_dual(s: &OuterStructure) -> Graph {
    let f = s.faces.len();
    let sides = |face: &Face| -> Vec<Edge> {
        let k = face.vertices.len();
        (0..k)
            .map(|i| Edge::new(face.vertices[i], face.vertices[(i + 1) % k]))
            .collect()
    };
    let face_sides: Vec<Vec<Edge>> = s.faces.iter().map(sides).collect();
    let mut edges = Vec::new();
    for c in &s.chords {
        let owners: Vec<usize> = (0..f).filter(|&i| face_sides[i].contains(c)).collect();
        if let [a, b] = owners[..] {
            edges.push((a + 1, b + 1));
        }
    }
    let mut next = f;
    for (i, fs) in face_sides.iter().enumerate() {
        for e in fs {
            if !s.chords.contains(e) {
                next += 1;
                edges.push((i + 1, next));
            }
        }
    }
    Graph::from_edges(next, edges).expect("valid dual")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn cycle_structure() {
        let s = outer_structure(&Family::Cycle(6).build().unwrap()).unwrap();
        assert_eq!(s.cycle, vec![1, 2, 3, 4, 5, 6]);
        assert!(s.chords.is_empty());
        assert_eq!(s.faces.len(), 1);
        assert_eq!((s.faces[0].boundary_length, s.faces[0].outer_edges), (6, 6));
        assert_eq!(ewd_degrees(&s), vec![6]);
        assert!(s.totals_hold());
    }

    #[test]
    fn pentagon_with_chord() {
        let g = Family::Cycle(5).build().unwrap().add_edge((1, 3)).unwrap();
        let s = outer_structure(&g).unwrap();
        let mut shape: Vec<_> = s
            .faces
            .iter()
            .map(|f| (f.boundary_length, f.outer_edges))
            .collect();
        shape.sort();
        assert_eq!(shape, vec![(3, 2), (4, 3)]);
        let mut degs = ewd_degrees(&s);
        degs.sort();
        assert_eq!(degs, vec![3, 4]);
        assert!(s.totals_hold());
        assert_eq!(
            s.to_text(),
            "outer-structure v1\ncycle 1 2 3 4 5\nchords 1-3\nface 1 2 3 length=3 outer=2\nface 1 3 4 5 length=4 outer=3\n"
        );
    }

    #[test]
    fn literal_dual_matches_lengths() {
        let k3 = Family::Cycle(3).build().unwrap();
        let s = outer_structure(&k3).unwrap();
        assert_eq!((s.faces[0].boundary_length, s.faces[0].outer_edges), (3, 3));
        for seed in 0..40 {
            let g = Family::RandomOuterplanar { n: 8, seed }.build().unwrap();
            let s = outer_structure(&g).unwrap();
            assert!(s.totals_hold(), "{g}");
            let ewd = extended_weak_dual(&s);
            assert!(
                ewd.is_connected() && ewd.edge_count() + 1 == ewd.n(),
                "ewd must be a tree"
            );
            let literal: Vec<usize> = (1..=s.faces.len()).map(|v| ewd.degree(v)).collect();
            assert_eq!(literal, ewd_degrees(&s));
        }
    }

    #[test]
    fn precondition_errors() {
        let p3 = Family::Path(3).build().unwrap();
        assert_eq!(outer_structure(&p3), Err(Error::NotTwoConnected));
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(outer_structure(&k4), Err(Error::NotOuterplanar));
    }
}
