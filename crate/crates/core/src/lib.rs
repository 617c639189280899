//! Certifying engine for the six-block oriented cycle pattern `(k,1,1,1,1,1)`
//! on strongly connected digraphs: every run ends in a verified colouring or
//! a verified subdivision.

pub mod certify;
pub mod coloring;
pub mod decompose;
pub mod graph;
pub mod search;
pub mod subdivision;
pub mod tree;

pub use certify::{certify, palette_bound, verify_certificate, verify_coloring, Certificate, CertifyConfig, CertifyError, PipelineReport, Status};
pub use coloring::{
    chromatic_number_exact, color_acyclic_by_outdegree, color_di2, exact_color_within, greedy_degeneracy_color,
    product_coloring, ExactLimits, ExactOutcome,
};
pub use decompose::{classify_arc, decompose, ArcClass, Decomposition};
pub use graph::{generate_strong_digraph, parse_digraph, Digraph, NamedDigraph, Vertex, VertexColoring};
pub use search::{Budget, Search};
pub use subdivision::{
    find_antidirected_cycle, find_block_cycle, find_subdivision_bruteforce, verify_subdivision, AntidirectedCycle,
    CyclePattern, Direction, SubdivisionWitness,
};
pub use tree::OutTree;
