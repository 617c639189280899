//! Deterministic inputs shared by the benchmarks.

use sixblock_core::graph::generate_strong_oriented;
use sixblock_core::Digraph;

/// Oriented strong digraph used as a benchmark input.
pub fn oriented(n: usize, density: f64, seed: u64) -> Digraph {
    generate_strong_oriented(n, density, seed).expect("n is at least 3")
}

/// Complete digraph on `n` vertices, both directions on every pair.
pub fn complete(n: usize) -> Digraph {
    Digraph::new(n, (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))))
        .expect("simple digraph")
}
