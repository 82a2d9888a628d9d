//! Benchmark fixtures shared by the criterion targets.

use adjvol_core::{Family, Graph};

/// Graphs whose enumeration cost grows quickly with `n`.
pub fn fixture(name: &str, n: usize) -> Graph {
    let fam = match name {
        "wheel" => Family::Wheel(n - 1),
        "cycle" => Family::Cycle(n),
        "complete" => Family::Complete(n),
        "outerplanar" => Family::RandomOuterplanar { n, seed: 7 },
        _ => panic!("unknown fixture {name}"),
    };
    fam.build().expect("valid fixture")
}
