//! Normalized volumes of PQ-type adjacency polytopes.
//!
//! For a connected graph `G` on `[N]`, the normalized volume of
//! `∇^PQ_G = conv{(e_i, e_j) : ij ∈ E(G) or i = j}` equals the number of
//! `D(G)`-draconian sequences. This crate enumerates those sequences,
//! evaluates the known closed forms and recurrences, and combines them in a
//! planner that records how each value was derived.

pub mod bits;
pub mod catalog;
pub mod draconian;
mod error;
mod flow;
pub mod graph;
pub mod harness;
pub mod outerplanar;
pub mod recurrence;

pub use draconian::{Checker, DraconianSequence, DraconianSet, Enumerator};
pub use error::{Error, Result};
pub use graph::{BipartiteDouble, Blocks, Edge, Family, Graph, TwoTerminal, VertexMap};
pub use num_bigint::BigUint;
pub use outerplanar::OuterStructure;
pub use recurrence::{nvol, BijectionWitness, Planner, Strategy, Trace, VolumeResult};
