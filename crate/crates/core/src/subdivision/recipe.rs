//! Witnesses described as tree paths and single arcs, chained and aligned to a pattern.

use thiserror::Error;

use super::{verify_subdivision, CyclePattern, Direction, SubdivisionWitness, VerifyError};
use crate::graph::{Digraph, Vertex};
use crate::tree::OutTree;

/// A directed segment: the tree path from an ancestor down, or one arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Seg {
    Tree(Vertex, Vertex),
    Arc(Vertex, Vertex),
}

pub fn tp(a: Vertex, b: Vertex) -> Seg {
    Seg::Tree(a, b)
}

pub fn arc(a: Vertex, b: Vertex) -> Seg {
    Seg::Arc(a, b)
}

/// Concatenated segments forming one directed path.
pub type Piece = Vec<Seg>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssembleError {
    #[error("{0} is not an ancestor of {1}")]
    NotAncestor(Vertex, Vertex),
    #[error("{0} -> {1} is not an arc")]
    MissingArc(Vertex, Vertex),
    #[error("segments of piece {0} do not join")]
    Discontinuous(usize),
    #[error("pieces do not close into a single cycle")]
    Chain,
    #[error("no alignment of the blocks matches the pattern")]
    NoAlignment,
    #[error("candidate rejected: {0}")]
    Invalid(VerifyError),
}

fn materialize(d: &Digraph, t: &OutTree, idx: usize, piece: &[Seg]) -> Result<Vec<Vertex>, AssembleError> {
    let mut path: Vec<Vertex> = Vec::new();
    for seg in piece {
        let part = match *seg {
            Seg::Tree(a, b) => t.tree_path(a, b).map_err(|_| AssembleError::NotAncestor(a, b))?,
            Seg::Arc(a, b) => {
                if !d.has_arc(a, b) {
                    return Err(AssembleError::MissingArc(a, b));
                }
                vec![a, b]
            }
        };
        match path.last() {
            None => path = part,
            Some(&end) if end == part[0] => path.extend_from_slice(&part[1..]),
            Some(_) => return Err(AssembleError::Discontinuous(idx)),
        }
    }
    if path.len() < 2 {
        return Err(AssembleError::Discontinuous(idx));
    }
    Ok(path)
}

/// Picks a rotation or reflection of the cyclic block sequence that meets
/// the pattern's length requirements.
fn align(blocks: Vec<(Vec<Vertex>, Direction)>, p: &CyclePattern) -> Option<SubdivisionWitness> {
    let n = blocks.len();
    if n != p.len() {
        return None;
    }
    let reflected: Vec<(Vec<Vertex>, Direction)> =
        blocks.iter().rev().map(|(path, dir)| (path.clone(), dir.flip())).collect();
    for seq in [&blocks, &reflected] {
        for r in 0..n {
            let fits = (0..n).all(|j| seq[(r + j) % n].0.len() > p.0[j]);
            if fits {
                let (paths, directions) = (0..n).map(|j| seq[(r + j) % n].clone()).unzip();
                return Some(SubdivisionWitness { paths, directions });
            }
        }
    }
    None
}

/// Chains directed pieces into an oriented cycle, aligns it to `p` and
/// runs the verifier on the result.
pub fn assemble(d: &Digraph, t: &OutTree, pieces: &[Piece], p: &CyclePattern) -> Result<SubdivisionWitness, AssembleError> {
    let paths = pieces
        .iter()
        .enumerate()
        .map(|(i, pc)| materialize(d, t, i, pc))
        .collect::<Result<Vec<_>, _>>()?;
    let n = paths.len();
    if n == 0 {
        return Err(AssembleError::Chain);
    }
    let mut used = vec![false; n];
    used[0] = true;
    let start = paths[0][0];
    let mut current = *paths[0].last().unwrap();
    let mut blocks = vec![(paths[0].clone(), Direction::Forward)];
    for _ in 1..n {
        let next = (0..n).find(|&i| !used[i] && (paths[i][0] == current || *paths[i].last().unwrap() == current));
        let Some(i) = next else {
            return Err(AssembleError::Chain);
        };
        used[i] = true;
        if paths[i][0] == current {
            current = *paths[i].last().unwrap();
            blocks.push((paths[i].clone(), Direction::Forward));
        } else {
            current = paths[i][0];
            blocks.push((paths[i].clone(), Direction::Backward));
        }
    }
    if current != start {
        return Err(AssembleError::Chain);
    }
    let w = align(blocks, p).ok_or(AssembleError::NoAlignment)?;
    verify_subdivision(d, &w, p).map_err(AssembleError::Invalid)?;
    Ok(w)
}

/// Splits a cycle of the underlying graph (consecutive vertices adjacent,
/// closing back to the first) into maximal directed blocks and aligns them.
pub fn witness_from_cycle(d: &Digraph, cycle: &[Vertex], p: &CyclePattern) -> Option<SubdivisionWitness> {
    let len = cycle.len();
    let fwd: Vec<bool> = (0..len).map(|i| d.has_arc(cycle[i], cycle[(i + 1) % len])).collect();
    witness_from_walk(d, cycle, &fwd, p)
}

/// As [`witness_from_cycle`], with the arc direction of each step given:
/// `fwd[i]` means `cycle[i] -> cycle[i+1]`.
pub(crate) fn witness_from_walk(
    d: &Digraph,
    cycle: &[Vertex],
    fwd: &[bool],
    p: &CyclePattern,
) -> Option<SubdivisionWitness> {
    let len = cycle.len();
    if len < 3 || fwd.len() != len {
        return None;
    }
    let start = (0..len).find(|&i| fwd[i] != fwd[(i + len - 1) % len])?;
    let mut blocks: Vec<(Vec<Vertex>, Direction)> = Vec::new();
    for step in 0..len {
        let i = (start + step) % len;
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        let dir = if fwd[i] { Direction::Forward } else { Direction::Backward };
        match blocks.last_mut() {
            Some((walk, d0)) if *d0 == dir => walk.push(b),
            _ => blocks.push((vec![a, b], dir)),
        }
    }
    let blocks = blocks
        .into_iter()
        .map(|(walk, dir)| match dir {
            Direction::Forward => (walk, dir),
            Direction::Backward => (walk.into_iter().rev().collect(), dir),
        })
        .collect();
    let w = align(blocks, p)?;
    verify_subdivision(d, &w, p).ok().map(|_| w)
}
