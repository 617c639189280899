//! Spanning out-trees, levels and the finalisation procedure.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Digraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("root {root} out of range for {n} vertices")]
    BadRoot { root: Vertex, n: usize },
    #[error("vertex {0} is not reachable from the root")]
    Unreachable(Vertex),
    #[error("tree arc {0} -> {1} is not an arc of the digraph")]
    MissingArc(Vertex, Vertex),
    #[error("parent array does not describe a tree rooted at {0}")]
    Malformed(Vertex),
    #[error("{0} is not an ancestor of {1}")]
    NotAncestor(Vertex, Vertex),
}

/// A spanning out-tree with levels; the root has level 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutTree {
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    level: Vec<usize>,
    children: Vec<Vec<Vertex>>,
}

impl OutTree {
    /// Breadth-first spanning out-tree, exploring out-neighbours in increasing order.
    pub fn bfs(d: &Digraph, root: Vertex) -> Result<Self, TreeError> {
        let n = d.n();
        if root >= n {
            return Err(TreeError::BadRoot { root, n });
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in d.out_neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        if let Some(v) = (0..n).find(|&v| !seen[v]) {
            return Err(TreeError::Unreachable(v));
        }
        Self::from_parents(d, root, parent)
    }

    /// Seeded random spanning out-tree: grows from `root` by repeatedly
    /// taking either the newest or a uniformly chosen frontier arc.
    pub fn random(d: &Digraph, root: Vertex, seed: u64) -> Result<Self, TreeError> {
        let n = d.n();
        if root >= n {
            return Err(TreeError::BadRoot { root, n });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut frontier: Vec<(Vertex, Vertex)> = d.out_neighbors(root).iter().map(|&w| (root, w)).collect();
        while !frontier.is_empty() {
            let i = if rng.gen_bool(0.5) { frontier.len() - 1 } else { rng.gen_range(0..frontier.len()) };
            let (u, w) = frontier.swap_remove(i);
            if seen[w] {
                continue;
            }
            seen[w] = true;
            parent[w] = Some(u);
            frontier.extend(d.out_neighbors(w).iter().filter(|&&x| !seen[x]).map(|&x| (w, x)));
        }
        if let Some(v) = (0..n).find(|&v| !seen[v]) {
            return Err(TreeError::Unreachable(v));
        }
        Self::from_parents(d, root, parent)
    }

    /// Builds a tree from a parent array, checking that every tree arc is in `d`.
    pub fn from_parents(d: &Digraph, root: Vertex, parent: Vec<Option<Vertex>>) -> Result<Self, TreeError> {
        let n = d.n();
        if root >= n || parent.len() != n || parent[root].is_some() {
            return Err(TreeError::BadRoot { root, n });
        }
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            match *p {
                Some(p) if p >= n => return Err(TreeError::Malformed(root)),
                Some(p) if !d.has_arc(p, v) => return Err(TreeError::MissingArc(p, v)),
                Some(p) => children[p].push(v),
                None if v != root => return Err(TreeError::Unreachable(v)),
                None => {}
            }
        }
        let mut t = OutTree { root, parent, level: vec![0; n], children };
        if t.relevel(root, 1) != n {
            return Err(TreeError::Malformed(root));
        }
        Ok(t)
    }

    /// Sets levels below `v` from `level(v) = lv`; returns the subtree size.
    fn relevel(&mut self, v: Vertex, lv: usize) -> usize {
        let mut stack = vec![(v, lv)];
        let mut count = 0;
        while let Some((u, l)) = stack.pop() {
            count += 1;
            if count > self.level.len() {
                break;
            }
            self.level[u] = l;
            stack.extend(self.children[u].iter().map(|&c| (c, l + 1)));
        }
        count
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn level(&self, v: Vertex) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn depth(&self) -> usize {
        self.level.iter().copied().max().unwrap_or(0)
    }

    /// `x` lies on the root path of `y` (reflexive).
    pub fn is_ancestor(&self, x: Vertex, y: Vertex) -> bool {
        let mut y = y;
        while self.level[y] > self.level[x] {
            y = self.parent[y].expect("non-root has a parent");
        }
        x == y
    }

    pub fn comparable(&self, x: Vertex, y: Vertex) -> bool {
        self.is_ancestor(x, y) || self.is_ancestor(y, x)
    }

    /// Strictly between `a` and `b` on the tree path from `a` down to `b`.
    pub fn strictly_between(&self, a: Vertex, v: Vertex, b: Vertex) -> bool {
        v != a && v != b && self.is_ancestor(a, v) && self.is_ancestor(v, b)
    }

    pub fn lca(&self, x: Vertex, y: Vertex) -> Vertex {
        let (mut x, mut y) = (x, y);
        while self.level[x] > self.level[y] {
            x = self.parent[x].expect("non-root has a parent");
        }
        while self.level[y] > self.level[x] {
            y = self.parent[y].expect("non-root has a parent");
        }
        while x != y {
            x = self.parent[x].expect("non-root has a parent");
            y = self.parent[y].expect("non-root has a parent");
        }
        x
    }

    /// The directed tree path from `x` down to `y`, both included.
    pub fn tree_path(&self, x: Vertex, y: Vertex) -> Result<Vec<Vertex>, TreeError> {
        if !self.is_ancestor(x, y) {
            return Err(TreeError::NotAncestor(x, y));
        }
        let mut path = vec![y];
        let mut v = y;
        while v != x {
            v = self.parent[v].expect("non-root has a parent");
            path.push(v);
        }
        path.reverse();
        Ok(path)
    }

    fn reparent(&mut self, y: Vertex, x: Vertex) {
        if let Some(p) = self.parent[y] {
            self.children[p].retain(|&c| c != y);
        }
        self.parent[y] = Some(x);
        let pos = self.children[x].binary_search(&y).unwrap_or_else(|e| e);
        self.children[x].insert(pos, y);
        let lv = self.level[x] + 1;
        self.relevel(y, lv);
    }

    /// The backward arc `(x, y)` with `y` not an ancestor of `x` minimising
    /// `(level(y), y, x)`, if any.
    pub fn violating_arc(&self, d: &Digraph) -> Option<(Vertex, Vertex)> {
        let (enter, exit) = self.intervals();
        let ancestor = |a: Vertex, b: Vertex| enter[a] <= enter[b] && exit[b] <= exit[a];
        d.arcs()
            .filter(|&(x, y)| self.level[x] >= self.level[y] && !ancestor(y, x))
            .min_by_key(|&(x, y)| (self.level[y], y, x))
    }

    /// Preorder entry and exit times: `a` is an ancestor of `b` exactly when
    /// `b`'s interval nests inside `a`'s.
    fn intervals(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let (mut enter, mut exit) = (vec![0; n], vec![0; n]);
        let mut clock = 0;
        let mut stack = vec![(self.root, 0)];
        while let Some((v, i)) = stack.pop() {
            if i == 0 {
                enter[v] = clock;
                clock += 1;
            }
            match self.children[v].get(i) {
                Some(&c) => {
                    stack.push((v, i + 1));
                    stack.push((c, 0));
                }
                None => exit[v] = clock,
            }
        }
        (enter, exit)
    }

    pub fn is_final(&self, d: &Digraph) -> bool {
        self.violating_arc(d).is_none()
    }

    /// Rotates violating arcs into the tree until it is final.
    /// Returns the number of rotations; levels never decrease.
    pub fn finalize(&mut self, d: &Digraph) -> usize {
        let mut rotations = 0;
        while let Some((x, y)) = self.violating_arc(d) {
            self.reparent(y, x);
            rotations += 1;
            debug_assert!(rotations <= self.n() * self.n());
        }
        rotations
    }
}
