//! Closed forms, product rules, the subdivision and triangle recurrences
//! with their bijections, and the planner that combines them.

pub mod formulas;
mod planner;
mod trace;
mod witness;

pub use formulas::{
    binomial, nvol_complete_minus_matching, nvol_cycle, nvol_forest, nvol_k2m, stirling2,
    stirling_identity_check, wheel_conjecture_value,
};
pub use planner::{closed_form, nvol, Planner, Strategy, VolumeResult};
pub use trace::{ClosedForm, Rule, Trace, TRACE_HEADER};
pub use witness::{
    degree_two_endpoint, subdivision_step, triangle_step, BijectionWitness, Move, Pair,
    WitnessCheck,
};
