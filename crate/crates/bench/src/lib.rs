//! Fixtures shared by the benchmarks.

use belief_kernel::logic::WorldSet;
use belief_kernel::{EpistemicState, Signature, TotalPreorder};

/// The three-atom signature used by the operator benchmarks.
pub fn signature() -> Signature {
    Signature::with_size(3).expect("three atoms fit")
}

/// A fixed spread of states over three atoms: a chain, a flat order and
/// a few mixed shapes.
pub fn states(sig: &Signature) -> Vec<EpistemicState> {
    let shapes: [[u32; 8]; 4] = [
        [0, 1, 2, 3, 4, 5, 6, 7],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 1, 2, 2, 3, 3, 4],
        [3, 0, 2, 1, 0, 2, 3, 1],
    ];
    shapes
        .iter()
        .map(|r| EpistemicState::new(sig, TotalPreorder::from_ranks(r).expect("valid ranks")).expect("sizes match"))
        .collect()
}

/// Every consistent, non-tautological input over `worlds` worlds.
pub fn inputs(worlds: usize) -> Vec<WorldSet> {
    let full = (1u64 << worlds) - 1;
    (1..full).map(WorldSet).collect()
}
