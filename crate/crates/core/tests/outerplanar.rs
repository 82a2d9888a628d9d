use adjvol_core::catalog;
use adjvol_core::outerplanar::oracle::{find_forbidden_subdivision, hamiltonian_chord_check};
use adjvol_core::outerplanar::{
    ewd_degrees, extended_weak_dual, is_outerplanar, nvol_outerplanar, outer_structure,
};
use adjvol_core::{Blocks, Enumerator, Family};

#[test]
fn recognition_matches_oracles_on_catalog() {
    for n in 1..=catalog::CATALOG_MAX_N {
        for g in catalog::graphs(n).unwrap() {
            let fast = is_outerplanar(&g);
            let forbidden = find_forbidden_subdivision(&g).unwrap().is_none();
            assert_eq!(fast, forbidden, "subdivision oracle disagrees on {g}");
            assert_eq!(
                fast,
                hamiltonian_chord_check(&g).unwrap(),
                "chord oracle disagrees on {g}"
            );
        }
    }
}

#[test]
fn literal_dual_degrees_match_boundary_lengths() {
    for n in 3..=8 {
        for seed in 0..40 {
            let g = Family::RandomOuterplanar { n, seed }.build().unwrap();
            for block in g
                .blocks_and_cut_vertices()
                .blocks
                .iter()
                .filter(|b| b.len() > 1)
            {
                let (h, _) = g.edge_subgraph(block);
                let s = outer_structure(&h).unwrap();
                assert!(s.totals_hold(), "{h}");
                let dual = extended_weak_dual(&s);
                let literal: Vec<usize> = (1..=s.faces.len()).map(|v| dual.degree(v)).collect();
                assert_eq!(literal, ewd_degrees(&s), "{h}");
                if !s.has_interior_face() {
                    assert!(
                        dual.is_connected() && dual.edge_count() + 1 == dual.n(),
                        "dual of {h} is not a tree"
                    );
                }
            }
        }
    }
}

#[test]
fn formula_matches_oracle_on_catalog_outerplanar_graphs() {
    let en = Enumerator::default();
    for n in 1..=6 {
        for g in catalog::connected_graphs(n)
            .unwrap()
            .into_iter()
            .filter(is_outerplanar)
        {
            let f = nvol_outerplanar(&g).unwrap();
            assert_eq!(f.value, en.count(&g).unwrap(), "{g}");
        }
    }
}

#[test]
fn catalog_reaches_seven_vertices() {
    assert_eq!(catalog::graphs(7).unwrap().len(), 1044);
    assert_eq!(catalog::connected_graphs(7).unwrap().len(), 853);
}
