//! Explicit bijections behind the subdivision and triangle recurrences.
//!
//! Both moves add vertex `n+1` next to an edge `e = uv` with
//! `deg(u) = 2`. Sequences of the new graph are built from sequences of
//! the old ones by appending the new vertex's entry and shifting one unit
//! among `u`, `v` and `n+1`.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use serde::Serialize;

use crate::draconian::{Checker, DraconianSequence, DraconianSet, Enumerator};
use crate::error::{Error, Result};
use crate::graph::{Blocks, Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Move {
    Subdivision,
    Triangle,
}

/// An image sequence together with the sequence it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pair {
    pub image: DraconianSequence,
    pub preimage: DraconianSequence,
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionWitness {
    pub kind: Move,
    pub graph: Graph,
    pub edge: Edge,
    pub u: usize,
    /// `g : e` or `g △ e`.
    pub target: Graph,
    pub set_a: Vec<Pair>,
    pub set_b: Vec<Pair>,
    pub set_c: Vec<Pair>,
}

/// Outcome of comparing a witness with an enumeration of its target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    pub sizes: [usize; 3],
    pub disjoint: bool,
    pub exact: bool,
}

impl WitnessCheck {
    pub fn passed(&self) -> bool {
        self.disjoint && self.exact
    }
}

fn images(set: &[Pair]) -> BTreeSet<&DraconianSequence> {
    set.iter().map(|p| &p.image).collect()
}

impl BijectionWitness {
    pub fn total(&self) -> usize {
        self.set_a.len() + self.set_b.len() + self.set_c.len()
    }

    pub fn value(&self) -> BigUint {
        BigUint::from(self.total())
    }

    /// Image sets, each sorted.
    pub fn image_sets(&self) -> [Vec<DraconianSequence>; 3] {
        [&self.set_a, &self.set_b, &self.set_c].map(|s| images(s).into_iter().cloned().collect())
    }

    /// Pairwise disjoint, and the union is exactly `expected`.
    pub fn check_against(&self, expected: &DraconianSet) -> WitnessCheck {
        let [a, b, c] = [&self.set_a, &self.set_b, &self.set_c].map(|s| images(s));
        let sizes = [self.set_a.len(), self.set_b.len(), self.set_c.len()];
        let distinct = a.len() + b.len() + c.len();
        let union: BTreeSet<_> = a.iter().chain(&b).chain(&c).copied().collect();
        let disjoint = distinct == sizes.iter().sum::<usize>() && union.len() == distinct;
        let target: BTreeSet<_> = expected.sequences.iter().collect();
        WitnessCheck {
            sizes,
            disjoint,
            exact: union == target,
        }
    }

    /// Enumerates the target graph and checks the witness against it.
    pub fn verify(&self, enumerator: &Enumerator) -> Result<WitnessCheck> {
        Ok(self.check_against(&enumerator.enumerate(&self.target)?))
    }
}

fn shifted(c: &DraconianSequence, delta: &[(usize, i64)], last: i64) -> Result<DraconianSequence> {
    let mut v: Vec<i64> = c.entries().iter().map(|&x| x as i64).collect();
    for &(i, d) in delta {
        v[i - 1] += d;
    }
    v.push(last);
    DraconianSequence::from_signed(&v).map_err(|_| {
        Error::Hypothesis(format!(
            "construction left the nonnegative orthant at {c:?}"
        ))
    })
}

fn pair(image: DraconianSequence, preimage: &DraconianSequence) -> Pair {
    Pair {
        image,
        preimage: preimage.clone(),
    }
}

fn check_degree_two(g: &Graph, e: Edge, u: usize) -> Result<usize> {
    if !g.has_edge(e.u(), e.v()) {
        return Err(Error::MissingEdge(e.u(), e.v()));
    }
    if u != e.u() && u != e.v() {
        return Err(Error::Hypothesis(format!("{u} is not an endpoint of {e}")));
    }
    if g.degree(u) != 2 {
        return Err(Error::Hypothesis(format!(
            "deg({u}) = {} but must be 2",
            g.degree(u)
        )));
    }
    Ok(e.other(u))
}

/// An endpoint of `e` with degree 2, preferring the smaller label.
pub fn degree_two_endpoint(g: &Graph, e: Edge) -> Option<usize> {
    [e.u(), e.v()].into_iter().find(|&x| g.degree(x) == 2)
}

/// `|𝔇(g:e)| = 2|𝔇(g)| + |𝔇(g∖e)|` for 2-connected `g`, with the sets
/// `𝒜 = α(𝔇(g))`, `ℬ = β(𝔇(g∖e))` and `𝒞 = γ(𝔇(g))`.
pub fn subdivision_step(
    g: &Graph,
    e: Edge,
    u: usize,
    enumerator: &Enumerator,
    checker: Checker,
) -> Result<BijectionWitness> {
    let v = check_degree_two(g, e, u)?;
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let target = g.subdivide(e)?;
    let minus = g.delete_edge(e)?;
    let d_target = target.double();
    let d_minus = minus.double();
    let base = enumerator.enumerate(g)?;
    let base_minus = enumerator.enumerate(&minus)?;

    let set_a = base
        .sequences
        .iter()
        .map(|c| Ok(pair(shifted(c, &[], 1)?, c)))
        .collect::<Result<_>>()?;
    let set_b = base_minus
        .sequences
        .iter()
        .map(|c| Ok(pair(shifted(c, &[(u, 1)], 0)?, c)))
        .collect::<Result<_>>()?;
    let mut set_c = Vec::with_capacity(base.sequences.len());
    for c in &base.sequences {
        // γ'(c) = c − e_u with the new entry 2, when it lies in 𝔇(g:e)
        let gamma = if c.entries()[u - 1] > 0 {
            let cand = shifted(c, &[(u, -1)], 2)?;
            checker.check(&d_target, cand.entries())?.then_some(cand)
        } else {
            None
        };
        let image = match gamma {
            Some(img) => img,
            None if checker.check(&d_minus, c.entries())? => shifted(c, &[(v, 1)], 0)?,
            None => shifted(c, &[(u, 1)], 0)?,
        };
        set_c.push(pair(image, c));
    }
    Ok(BijectionWitness {
        kind: Move::Subdivision,
        graph: g.clone(),
        edge: e,
        u,
        target,
        set_a,
        set_b,
        set_c,
    })
}

/// `|𝔇(g△e)| = 3|𝔇(g)|` for connected `g`, with `𝒜△`, `ℬ△`, `𝒞△` all
/// built from `𝔇(g)`.
pub fn triangle_step(
    g: &Graph,
    e: Edge,
    u: usize,
    enumerator: &Enumerator,
) -> Result<BijectionWitness> {
    let v = check_degree_two(g, e, u)?;
    if !g.is_connected() {
        return Err(Error::Hypothesis("graph must be connected".into()));
    }
    let target = g.triangle_join(e)?;
    let base = enumerator.enumerate(g)?;
    let set_a: Vec<Pair> = base
        .sequences
        .iter()
        .map(|c| Ok(pair(shifted(c, &[], 1)?, c)))
        .collect::<Result<_>>()?;
    let set_b: Vec<Pair> = base
        .sequences
        .iter()
        .map(|c| Ok(pair(shifted(c, &[(u, 1)], 0)?, c)))
        .collect::<Result<_>>()?;
    let in_b: HashSet<&DraconianSequence> = set_b.iter().map(|p| &p.image).collect();
    let mut set_c = Vec::with_capacity(base.sequences.len());
    for c in &base.sequences {
        let plus_v = shifted(c, &[(v, 1)], 0)?;
        let image = if in_b.contains(&plus_v) {
            shifted(c, &[(u, -1)], 2)?
        } else {
            plus_v
        };
        set_c.push(pair(image, c));
    }
    Ok(BijectionWitness {
        kind: Move::Triangle,
        graph: g.clone(),
        edge: e,
        u,
        target,
        set_a,
        set_b,
        set_c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn seqs(v: &[[u32; 4]]) -> Vec<DraconianSequence> {
        let mut out: Vec<_> = v.iter().map(|s| DraconianSequence(s.to_vec())).collect();
        out.sort();
        out
    }

    #[test]
    fn subdivision_of_triangle() {
        let c3 = Family::Cycle(3).build().unwrap();
        let w = subdivision_step(
            &c3,
            Edge::new(1, 3),
            1,
            &Enumerator::default(),
            Checker::Flow,
        )
        .unwrap();
        let [a, b, c] = w.image_sets();
        assert_eq!(
            a,
            seqs(&[
                [2, 0, 0, 1],
                [0, 2, 0, 1],
                [0, 0, 2, 1],
                [1, 1, 0, 1],
                [1, 0, 1, 1],
                [0, 1, 1, 1]
            ])
        );
        assert_eq!(
            b,
            seqs(&[[1, 2, 0, 0], [2, 1, 0, 0], [2, 0, 1, 0], [1, 1, 1, 0]])
        );
        assert_eq!(
            c,
            seqs(&[
                [1, 0, 0, 2],
                [1, 0, 2, 0],
                [0, 1, 0, 2],
                [0, 0, 1, 2],
                [0, 1, 2, 0],
                [0, 2, 1, 0]
            ])
        );
        assert!(w.verify(&Enumerator::default()).unwrap().passed());
        assert_eq!(w.total(), 16);
    }

    #[test]
    fn triangle_on_triangle() {
        let c3 = Family::Cycle(3).build().unwrap();
        let w = triangle_step(&c3, Edge::new(1, 3), 1, &Enumerator::default()).unwrap();
        let [_, b, c] = w.image_sets();
        assert_eq!(
            b,
            seqs(&[
                [3, 0, 0, 0],
                [1, 2, 0, 0],
                [1, 0, 2, 0],
                [2, 1, 0, 0],
                [2, 0, 1, 0],
                [1, 1, 1, 0]
            ])
        );
        assert_eq!(
            c,
            seqs(&[
                [1, 0, 0, 2],
                [0, 2, 1, 0],
                [0, 0, 3, 0],
                [0, 1, 0, 2],
                [0, 0, 1, 2],
                [0, 1, 2, 0]
            ])
        );
        assert!(w.verify(&Enumerator::default()).unwrap().passed());
        assert_eq!(w.total(), 18);
    }

    #[test]
    fn hypotheses_are_checked() {
        let k4 = Family::Complete(4).build().unwrap();
        let en = Enumerator::default();
        assert!(matches!(
            subdivision_step(&k4, Edge::new(1, 2), 1, &en, Checker::Flow),
            Err(Error::Hypothesis(_))
        ));
        let p3 = Family::Path(3).build().unwrap();
        assert_eq!(
            subdivision_step(&p3, Edge::new(1, 2), 2, &en, Checker::Flow).unwrap_err(),
            Error::NotTwoConnected
        );
        assert!(triangle_step(&p3, Edge::new(1, 3), 1, &en).is_err());
        assert!(triangle_step(&p3, Edge::new(1, 2), 2, &en).is_ok());
    }
}
