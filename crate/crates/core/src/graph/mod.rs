//! Simple digraphs on dense vertex ids, parsing and generation.

mod generate;
mod io;

pub use generate::{generate_strong_digraph, generate_strong_oriented};
pub use io::{parse_digraph, to_dot, to_edge_list, NamedDigraph, ParseError, ParseErrorKind};

use thiserror::Error;

/// Vertex identifier, dense in `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(Vertex, Vertex),
    #[error("antiparallel arcs between {0} and {1}")]
    Antiparallel(Vertex, Vertex),
}

/// A finite digraph without loops or parallel arcs.
///
/// Antiparallel pairs are allowed unless rejected explicitly with
/// [`Digraph::check_oriented`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
    arcs: usize,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph {
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            arcs: 0,
        }
    }

    pub fn new(n: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut d = Digraph::empty(n);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        match self.out[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateArc(u, v)),
            Err(pos) => {
                self.out[u].insert(pos, v);
                let pos = self.inn[v].binary_search(&u).unwrap_err();
                self.inn[v].insert(pos, u);
                self.arcs += 1;
                Ok(())
            }
        }
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.out[u].binary_search(&v).is_ok()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// Out-neighbours in increasing order.
    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    /// In-neighbours in increasing order.
    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.inn[v].len()
    }

    pub fn max_out_degree(&self) -> usize {
        self.out.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// Sorted, deduplicated neighbours in the underlying undirected graph.
    pub fn underlying_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut ns: Vec<Vertex> = self.out[v].iter().chain(&self.inn[v]).copied().collect();
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    pub fn antiparallel_pair(&self) -> Option<(Vertex, Vertex)> {
        self.arcs().find(|&(u, v)| u < v && self.has_arc(v, u))
    }

    pub fn check_oriented(&self) -> Result<(), GraphError> {
        match self.antiparallel_pair() {
            Some((u, v)) => Err(GraphError::Antiparallel(u, v)),
            None => Ok(()),
        }
    }

    /// Subdigraph induced on `verts`, relabelled `0..verts.len()` in the given order.
    pub fn induced(&self, verts: &[Vertex]) -> Digraph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let mut d = Digraph::empty(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.out[v] {
                if local[w] != usize::MAX {
                    d.out[i].push(local[w]);
                    d.inn[local[w]].push(i);
                    d.arcs += 1;
                }
            }
        }
        for list in d.out.iter_mut().chain(d.inn.iter_mut()) {
            list.sort_unstable();
        }
        d
    }

    pub fn is_strongly_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        self.reach_count(0, false) == n && self.reach_count(0, true) == n
    }

    fn reach_count(&self, start: Vertex, reverse: bool) -> usize {
        let adj = if reverse { &self.inn } else { &self.out };
        let mut seen = vec![false; self.n()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    }

    /// A topological order, or a vertex lying on a directed cycle.
    pub fn topological_order(&self) -> Result<Vec<Vertex>, Vertex> {
        let n = self.n();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.in_degree(v)).collect();
        let mut order: Vec<Vertex> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &self.out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    order.push(w);
                }
            }
        }
        if order.len() == n {
            Ok(order)
        } else {
            Err((0..n).find(|&v| indeg[v] > 0).expect("leftover vertex"))
        }
    }
}

/// A vertex colouring with a declared palette: every colour lies in `0..palette`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring {
    pub colors: Vec<usize>,
    pub palette: usize,
}

impl VertexColoring {
    /// Palette is taken to be one more than the largest colour.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let palette = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        VertexColoring { colors, palette }
    }

    pub fn palette_size(&self) -> usize {
        self.palette
    }

    pub fn distinct_colors(&self) -> usize {
        let mut cs = self.colors.clone();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    /// First arc whose endpoints share a colour.
    pub fn conflict(&self, d: &Digraph) -> Option<(Vertex, Vertex)> {
        d.arcs().find(|&(u, v)| self.colors[u] == self.colors[v])
    }

    pub fn is_proper(&self, d: &Digraph) -> bool {
        self.colors.len() == d.n() && self.conflict(d).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Digraph::new(2, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Digraph::new(2, [(0, 1), (0, 1)]),
            Err(GraphError::DuplicateArc(0, 1))
        );
        assert!(matches!(
            Digraph::new(2, [(0, 2)]),
            Err(GraphError::OutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn antiparallel_allowed_but_detectable() {
        let d = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(d.antiparallel_pair(), Some((0, 1)));
        assert!(d.check_oriented().is_err());
        assert!(cycle(3).check_oriented().is_ok());
    }

    #[test]
    fn strong_connectivity() {
        assert!(cycle(5).is_strongly_connected());
        assert!(Digraph::empty(1).is_strongly_connected());
        assert!(!Digraph::empty(0).is_strongly_connected());
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!path.is_strongly_connected());
    }

    #[test]
    fn induced_relabels() {
        let d = cycle(4);
        let sub = d.induced(&[1, 2, 3]);
        assert_eq!(sub.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn topological_order_detects_cycles() {
        assert!(cycle(3).topological_order().is_err());
        let dag = Digraph::new(3, [(2, 0), (0, 1)]).unwrap();
        assert_eq!(dag.topological_order(), Ok(vec![2, 0, 1]));
    }

    #[test]
    fn coloring_conflicts() {
        let d = cycle(3);
        assert!(VertexColoring::from_colors(vec![0, 1, 2]).is_proper(&d));
        let bad = VertexColoring::from_colors(vec![0, 1, 1]);
        assert_eq!(bad.conflict(&d), Some((1, 2)));
        assert_eq!(bad.palette_size(), 2);
    }
}
