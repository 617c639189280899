//! Turning structural certificates (antidirected cycles, dense out-neighbourhoods)
//! into verified subdivisions.

mod d1;
mod d2;
mod d3;

pub use d1::extract_from_adc_d1;
pub use d2::extract_from_di2;
pub use d3::extract_from_adc_d3;

use thiserror::Error;

use super::{assemble, CyclePattern, Piece, SubdivisionWitness};
use crate::graph::Digraph;
use crate::tree::OutTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    /// The input does not have the shape the extractor expects.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// No covered case produced a verified witness.
    #[error("fallback required: {0}")]
    FallbackRequired(String),
}

/// A verified witness and the case of the construction that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub witness: SubdivisionWitness,
    pub case: String,
}

/// Assembles candidate piece lists and keeps the first that verifies.
pub(crate) struct Builder<'a> {
    pub d: &'a Digraph,
    pub t: &'a OutTree,
    pub pattern: CyclePattern,
    pub attempts: usize,
}

impl<'a> Builder<'a> {
    pub fn new(d: &'a Digraph, t: &'a OutTree, k: usize) -> Self {
        Builder { d, t, pattern: CyclePattern::six_block(k), attempts: 0 }
    }

    pub fn attempt(&mut self, case: &str, pieces: Vec<Piece>) -> Option<Extraction> {
        self.attempts += 1;
        assemble(self.d, self.t, &pieces, &self.pattern)
            .ok()
            .map(|witness| Extraction { witness, case: case.to_string() })
    }
}

/// Returns from the enclosing function as soon as an attempt verifies.
macro_rules! try_pieces {
    ($b:expr, $case:expr, [$([$($seg:expr),+ $(,)?]),+ $(,)?]) => {
        if let Some(found) = $b.attempt($case, vec![$(vec![$($seg),+]),+]) {
            return Some(found);
        }
    };
}
pub(crate) use try_pieces;
