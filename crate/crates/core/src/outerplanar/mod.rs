//! Outerplanar graphs: recognition, outer-cycle and face recovery, and the
//! face-product volume formula.
//!
//! For a 2-connected outerplanar block `B` with bounded faces `𝓕(B)`,
//!
//! ```text
//! NVol = 2^{|V(B)| − |𝓕(B)| − 1} · Π_F deg_ewd(v_F)
//! ```
//!
//! which is proven when every bounded face has an outer edge and is
//! conjectured otherwise. Bridges contribute 2.

pub mod oracle;
mod recognize;
mod structure;

use num_bigint::BigUint;
use num_traits::One;

pub use recognize::{has_k23_subdivision, is_k4_minor_free, is_outerplanar};
pub use structure::{
    ewd_degrees, extended_weak_dual, outer_structure, Face, OuterStructure, STRUCTURE_HEADER,
};

use crate::error::{Error, Result};
use crate::graph::{Blocks, Graph};

/// Exponent of 2 in the block formula.
pub fn block_exponent(s: &OuterStructure) -> usize {
    s.n - s.faces.len() - 1
}

/// Formula value for one 2-connected block.
pub fn block_value(s: &OuterStructure) -> BigUint {
    ewd_degrees(s)
        .into_iter()
        .fold(BigUint::one() << block_exponent(s), |acc, d| acc * d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterplanarValue {
    pub value: BigUint,
    /// Some bounded face has no outer edge, so the value rests on the
    /// conjectured extension of the formula.
    pub conjectural: bool,
}

/// Product of block values over all components and blocks.
pub fn nvol_outerplanar(g: &Graph) -> Result<OuterplanarValue> {
    if !is_outerplanar(g) {
        return Err(Error::NotOuterplanar);
    }
    let mut value = BigUint::one();
    let mut conjectural = false;
    for block in g.blocks_and_cut_vertices().blocks {
        if block.len() == 1 {
            value *= 2u32;
            continue;
        }
        let (h, _) = g.edge_subgraph(&block);
        let s = outer_structure(&h)?;
        conjectural |= s.has_interior_face();
        value *= block_value(&s);
    }
    Ok(OuterplanarValue { value, conjectural })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::draconian::count;
    use crate::graph::Family;

    fn ov(g: &Graph) -> (u64, bool) {
        let r = nvol_outerplanar(g).unwrap();
        (r.value.try_into().unwrap(), r.conjectural)
    }

    #[test]
    fn formula_examples() {
        assert_eq!(ov(&Family::Cycle(4).build().unwrap()), (16, false));
        assert_eq!(ov(&Family::Path(4).build().unwrap()), (8, false));
        let pent = Family::Cycle(5).build().unwrap().add_edge((1, 3)).unwrap();
        assert_eq!(ov(&pent), (48, false));
        assert_eq!(count(&pent, 1).unwrap(), BigUint::from(48u32));
        let k4e = Family::CompleteMinusMatching(4, 1).build().unwrap();
        assert_eq!(ov(&k4e), (18, false));
        assert_eq!(ov(&Graph::empty(1)), (1, false));
        assert!(nvol_outerplanar(&Family::Complete(4).build().unwrap()).is_err());
    }

    #[test]
    fn interior_face_is_flagged() {
        // hexagon with the inner triangle 1-3-5
        let g = Family::Cycle(6).build().unwrap();
        let g = g
            .add_edge((1, 3))
            .unwrap()
            .add_edge((3, 5))
            .unwrap()
            .add_edge((1, 5))
            .unwrap();
        let (v, conj) = ov(&g);
        assert!(conj);
        assert_eq!(v, 2 * 27 * 3);
    }

    #[test]
    fn formula_matches_enumeration_on_small_samples() {
        for seed in 0..25 {
            let g = Family::RandomOuterplanar { n: 8, seed }.build().unwrap();
            let r = nvol_outerplanar(&g).unwrap();
            if !r.conjectural {
                assert_eq!(r.value, count(&g, 1).unwrap(), "{g}");
            }
        }
    }
}
