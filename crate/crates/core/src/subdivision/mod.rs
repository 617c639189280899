//! Oriented-cycle patterns, witnesses, their verifier and the searches.

mod adc;
mod blocks;
pub mod extract;
mod oracle;
mod recipe;

pub use adc::{find_antidirected_cycle, AntidirectedCycle};
pub use blocks::find_block_cycle;
pub use oracle::find_subdivision_bruteforce;
pub use recipe::{arc, assemble, tp, witness_from_cycle, AssembleError, Piece, Seg};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Digraph, Vertex};

/// Block lengths of an oriented cycle, read cyclically with alternating directions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CyclePattern(pub Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("a pattern needs an even, positive number of blocks, got {0}")]
    OddOrEmpty(usize),
    #[error("block lengths must be at least 1")]
    ZeroBlock,
}

impl CyclePattern {
    pub fn new(blocks: Vec<usize>) -> Result<Self, PatternError> {
        if blocks.is_empty() || blocks.len() % 2 == 1 {
            return Err(PatternError::OddOrEmpty(blocks.len()));
        }
        if blocks.contains(&0) {
            return Err(PatternError::ZeroBlock);
        }
        Ok(CyclePattern(blocks))
    }

    /// `(k, 1, 1, 1, 1, 1)`.
    pub fn six_block(k: usize) -> Self {
        let mut v = vec![1; 6];
        v[0] = k.max(1);
        CyclePattern(v)
    }

    pub fn blocks(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn is_valid(&self) -> bool {
        !self.0.is_empty() && self.0.len().is_multiple_of(2) && !self.0.contains(&0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// `paths[j]` is a directed path of the digraph, listed in arc order. Read
/// around the cycle, path `j` runs from branch vertex `b_j` to `b_{j+1}`
/// when `directions[j]` is forward and from `b_{j+1}` to `b_j` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionWitness {
    pub paths: Vec<Vec<Vertex>>,
    pub directions: Vec<Direction>,
}

impl SubdivisionWitness {
    /// Branch vertices `b_0 .. b_{n-1}` in cyclic order.
    pub fn branch_vertices(&self) -> Vec<Vertex> {
        self.paths
            .iter()
            .zip(&self.directions)
            .map(|(p, dir)| match dir {
                Direction::Forward => p[0],
                Direction::Backward => *p.last().expect("non-empty path"),
            })
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.paths.iter().map(|p| p.len() - 1).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("invalid pattern")]
    BadPattern,
    #[error("expected {expected} paths and directions, found {paths} and {directions}")]
    Count { expected: usize, paths: usize, directions: usize },
    #[error("directions do not alternate at block {0}")]
    NotAlternating(usize),
    #[error("path {0} has no arcs")]
    EmptyPath(usize),
    #[error("path {path} uses a vertex outside the digraph")]
    OutOfRange { path: usize },
    #[error("path {path}: {from} -> {to} is not an arc")]
    MissingArc { path: usize, from: Vertex, to: Vertex },
    #[error("path {path} has length {len}, pattern requires {need}")]
    TooShort { path: usize, len: usize, need: usize },
    #[error("paths {0} and {1} do not meet at a common branch vertex")]
    Disconnected(usize, usize),
    #[error("vertex {0} is used more than once")]
    Repeated(Vertex),
}

/// The trusted check that `w` is a subdivision of pattern `p` inside `d`.
pub fn verify_subdivision(d: &Digraph, w: &SubdivisionWitness, p: &CyclePattern) -> Result<(), VerifyError> {
    if !p.is_valid() {
        return Err(VerifyError::BadPattern);
    }
    let n = p.len();
    if w.paths.len() != n || w.directions.len() != n {
        return Err(VerifyError::Count { expected: n, paths: w.paths.len(), directions: w.directions.len() });
    }
    for j in 0..n {
        if w.directions[j] == w.directions[(j + 1) % n] {
            return Err(VerifyError::NotAlternating(j));
        }
    }
    for (j, path) in w.paths.iter().enumerate() {
        if path.len() < 2 {
            return Err(VerifyError::EmptyPath(j));
        }
        if path.iter().any(|&v| v >= d.n()) {
            return Err(VerifyError::OutOfRange { path: j });
        }
        for a in path.windows(2) {
            if !d.has_arc(a[0], a[1]) {
                return Err(VerifyError::MissingArc { path: j, from: a[0], to: a[1] });
            }
        }
        if path.len() - 1 < p.0[j] {
            return Err(VerifyError::TooShort { path: j, len: path.len() - 1, need: p.0[j] });
        }
    }
    // end of path j on the cycle must be the start of path j+1
    let ends = |j: usize| {
        let path = &w.paths[j];
        let (a, b) = (path[0], *path.last().unwrap());
        match w.directions[j] {
            Direction::Forward => (a, b),
            Direction::Backward => (b, a),
        }
    };
    for j in 0..n {
        let next = (j + 1) % n;
        if ends(j).1 != ends(next).0 {
            return Err(VerifyError::Disconnected(j, next));
        }
    }
    // walking the cycle, every vertex except the closing one appears once
    let mut seen = vec![false; d.n()];
    for j in 0..n {
        let path = &w.paths[j];
        let walk: Box<dyn Iterator<Item = &Vertex>> = match w.directions[j] {
            Direction::Forward => Box::new(path.iter()),
            Direction::Backward => Box::new(path.iter().rev()),
        };
        for &v in walk.skip(1) {
            if seen[v] {
                return Err(VerifyError::Repeated(v));
            }
            seen[v] = true;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Direction::{Backward as B, Forward as F};

    /// Antidirected hexagon 0>1<2>3<4>5<0.
    fn hexagon() -> Digraph {
        Digraph::new(6, [(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (0, 5)]).unwrap()
    }

    fn hex_witness() -> SubdivisionWitness {
        SubdivisionWitness {
            paths: vec![vec![0, 1], vec![2, 1], vec![2, 3], vec![4, 3], vec![4, 5], vec![0, 5]],
            directions: vec![F, B, F, B, F, B],
        }
    }

    #[test]
    fn hexagon_verifies() {
        let w = hex_witness();
        assert_eq!(verify_subdivision(&hexagon(), &w, &CyclePattern::six_block(1)), Ok(()));
        assert_eq!(w.branch_vertices(), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(
            verify_subdivision(&hexagon(), &w, &CyclePattern::six_block(2)),
            Err(VerifyError::TooShort { path: 0, len: 1, need: 2 })
        );
    }

    #[test]
    fn rejects_broken_witnesses() {
        let d = hexagon();
        let p = CyclePattern::six_block(1);
        let mut w = hex_witness();
        w.directions[1] = F;
        assert_eq!(verify_subdivision(&d, &w, &p), Err(VerifyError::NotAlternating(0)));
        let mut w = hex_witness();
        w.paths[2] = vec![3, 2];
        assert!(matches!(verify_subdivision(&d, &w, &p), Err(VerifyError::MissingArc { .. })));
        let mut w = hex_witness();
        w.paths.pop();
        assert!(matches!(verify_subdivision(&d, &w, &p), Err(VerifyError::Count { .. })));
        let w = SubdivisionWitness {
            paths: vec![vec![0, 1], vec![2, 1], vec![2, 3], vec![4, 3], vec![4, 5], vec![2, 5]],
            directions: vec![F, B, F, B, F, B],
        };
        let d2 = Digraph::new(6, [(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (2, 5)]).unwrap();
        assert!(verify_subdivision(&d2, &w, &p).is_err());
    }

    #[test]
    fn repeated_internal_vertex() {
        // two blocks sharing the internal vertex 4
        let d = Digraph::new(5, [(0, 4), (4, 1), (2, 4), (4, 3), (0, 3), (2, 1)]).unwrap();
        let w = SubdivisionWitness {
            paths: vec![vec![0, 4, 1], vec![2, 1], vec![2, 4, 3], vec![0, 3]],
            directions: vec![F, B, F, B],
        };
        let p = CyclePattern::new(vec![1, 1, 1, 1]).unwrap();
        assert_eq!(verify_subdivision(&d, &w, &p), Err(VerifyError::Repeated(4)));
    }

    #[test]
    fn pattern_validation() {
        assert!(CyclePattern::new(vec![1, 1, 1]).is_err());
        assert!(CyclePattern::new(vec![]).is_err());
        assert!(CyclePattern::new(vec![1, 0]).is_err());
        assert_eq!(CyclePattern::six_block(3).blocks(), &[3, 1, 1, 1, 1, 1]);
    }
}
