//! Level classes modulo `k` and the three-way arc split inside each class.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Digraph, Vertex};
use crate::tree::OutTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("tree is not final: arc {0} -> {1} violates finality")]
    NotFinal(Vertex, Vertex),
    #[error("tree has {tree} vertices but the digraph has {digraph}")]
    SizeMismatch { tree: usize, digraph: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ArcClass {
    /// Forward along the tree: `x` a strict ancestor of `y`.
    A1,
    /// Backward to an ancestor.
    A2,
    /// Everything else.
    A3,
}

impl ArcClass {
    pub const ALL: [ArcClass; 3] = [ArcClass::A1, ArcClass::A2, ArcClass::A3];

    pub fn index(self) -> usize {
        match self {
            ArcClass::A1 => 0,
            ArcClass::A2 => 1,
            ArcClass::A3 => 2,
        }
    }
}

pub fn classify_arc(t: &OutTree, x: Vertex, y: Vertex) -> ArcClass {
    let (lx, ly) = (t.level(x), t.level(y));
    if lx < ly && t.is_ancestor(x, y) {
        ArcClass::A1
    } else if lx > ly && t.is_ancestor(y, x) {
        ArcClass::A2
    } else {
        ArcClass::A3
    }
}

/// Class index in `1..=k` of a level.
pub fn class_of_level(level: usize, k: usize) -> usize {
    (level - 1) % k + 1
}

/// One level class with its vertices and intra-class arcs split by type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelClass {
    pub index: usize,
    /// Global vertex ids in increasing order.
    pub vertices: Vec<Vertex>,
    /// Arcs of each type (global ids), indexed by [`ArcClass::index`].
    pub arcs: [Vec<(Vertex, Vertex)>; 3],
}

impl LevelClass {
    /// Spanning digraph of one arc type on the class, with local ids
    /// following the order of `vertices`.
    pub fn part(&self, class: ArcClass) -> Digraph {
        let n = self.vertices.len();
        let local = |v: Vertex| self.vertices.binary_search(&v).expect("class vertex");
        Digraph::new(n, self.arcs[class.index()].iter().map(|&(x, y)| (local(x), local(y))))
            .expect("arcs of a simple digraph")
    }

    pub fn local_index(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub k: usize,
    /// Class index per vertex.
    pub class_of: Vec<usize>,
    pub classes: Vec<LevelClass>,
    /// Arcs whose endpoints lie in different classes.
    pub cross_arcs: Vec<(Vertex, Vertex)>,
}

impl Decomposition {
    pub fn class(&self, i: usize) -> &LevelClass {
        &self.classes[i - 1]
    }
}

/// Splits `d` along a final tree. Non-final trees are refused.
pub fn decompose(d: &Digraph, t: &OutTree, k: usize) -> Result<Decomposition, DecomposeError> {
    if k == 0 {
        return Err(DecomposeError::ZeroK);
    }
    if t.n() != d.n() {
        return Err(DecomposeError::SizeMismatch { tree: t.n(), digraph: d.n() });
    }
    if let Some((x, y)) = t.violating_arc(d) {
        return Err(DecomposeError::NotFinal(x, y));
    }
    let class_of: Vec<usize> = (0..d.n()).map(|v| class_of_level(t.level(v), k)).collect();
    let mut classes: Vec<LevelClass> = (1..=k)
        .map(|index| LevelClass { index, vertices: Vec::new(), arcs: Default::default() })
        .collect();
    for v in 0..d.n() {
        classes[class_of[v] - 1].vertices.push(v);
    }
    let mut cross_arcs = Vec::new();
    for (x, y) in d.arcs() {
        if class_of[x] != class_of[y] {
            cross_arcs.push((x, y));
            continue;
        }
        let c = classify_arc(t, x, y);
        classes[class_of[x] - 1].arcs[c.index()].push((x, y));
    }
    Ok(Decomposition { k, class_of, classes, cross_arcs })
}
