//! `D(G)`-draconian sequences: membership tests and enumeration of `𝔇(G)`.

mod check;
mod enumerate;
mod sequence;

pub use check::{
    check_flow, check_subset, check_subset_scoped, Checker, SubsetScope, ALL_SUBSETS_MAX_N,
};
pub use enumerate::{brute_force_enumerate, count, enumerate, Enumerator, TABLE_MAX_N};
pub use sequence::{parse_listing, DraconianSequence, DraconianSet};
