use crate::graph::{Digraph, Vertex};
use crate::search::{Budget, Search, Stop};

/// A cycle whose arcs alternate direction. `vertices[0]` is a source;
/// even positions are sources and odd positions sinks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntidirectedCycle {
    pub vertices: Vec<Vertex>,
}

impl AntidirectedCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_source(&self, i: usize) -> bool {
        i.is_multiple_of(2)
    }

    pub fn at(&self, i: isize) -> Vertex {
        let n = self.len() as isize;
        self.vertices[i.rem_euclid(n) as usize]
    }

    /// Arcs of the cycle as `(source, sink)` pairs.
    pub fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
                if i % 2 == 0 {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    /// Even length, distinct vertices and all arcs present.
    pub fn is_valid_in(&self, d: &Digraph) -> bool {
        let n = self.len();
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        n >= 4 && n.is_multiple_of(2) && vs.len() == n && self.arcs().iter().all(|&(u, v)| d.has_arc(u, v))
    }
}

struct Dfs<'a> {
    d: &'a Digraph,
    min_len: usize,
    path: Vec<Vertex>,
    on_path: Vec<bool>,
    budget: &'a mut Budget,
}

impl Dfs<'_> {
    /// Extends an alternating path whose first vertex is the smallest on it.
    /// `start_source` tells whether `path[0]` emits its arcs.
    fn grow(&mut self, start_source: bool) -> Result<(), Stop<AntidirectedCycle>> {
        if !self.budget.tick() {
            return Err(Stop::Budget);
        }
        let len = self.path.len();
        let last = *self.path.last().unwrap();
        let first = self.path[0];
        // the vertex at position len-1 is a source iff its parity matches the start
        let last_source = (len - 1).is_multiple_of(2) && start_source || (len - 1) % 2 == 1 && !start_source;
        if len.is_multiple_of(2) && len >= self.min_len.max(4) {
            let closes = if last_source { self.d.has_arc(last, first) } else { self.d.has_arc(first, last) };
            if closes {
                let mut vertices = self.path.clone();
                if !start_source {
                    vertices.rotate_left(1);
                }
                return Err(Stop::Found(AntidirectedCycle { vertices }));
            }
        }
        let next: &[Vertex] = if last_source { self.d.out_neighbors(last) } else { self.d.in_neighbors(last) };
        for &w in next {
            if w <= first || self.on_path[w] {
                continue;
            }
            self.on_path[w] = true;
            self.path.push(w);
            let r = self.grow(start_source);
            self.path.pop();
            self.on_path[w] = false;
            r?;
        }
        Ok(())
    }
}

/// First antidirected cycle of even length at least `min_len`, scanning
/// start vertices in increasing order.
pub fn find_antidirected_cycle(d: &Digraph, min_len: usize, budget: &mut Budget) -> Search<AntidirectedCycle> {
    let n = d.n();
    let mut dfs = Dfs { d, min_len, path: Vec::new(), on_path: vec![false; n], budget };
    let run = (|| {
        for s in 0..n {
            for start_source in [true, false] {
                dfs.path = vec![s];
                dfs.on_path[s] = true;
                let r = dfs.grow(start_source);
                dfs.on_path[s] = false;
                r?;
            }
        }
        Ok(())
    })();
    Stop::into_search(run)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn antidirected(len: usize) -> Digraph {
        Digraph::new(
            len,
            (0..len).map(|i| if i % 2 == 0 { (i, (i + 1) % len) } else { ((i + 1) % len, i) }),
        )
        .unwrap()
    }

    #[test]
    fn finds_hexagon_and_respects_min_len() {
        let d = antidirected(6);
        let c = find_antidirected_cycle(&d, 6, &mut Budget::unlimited()).found().unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.is_valid_in(&d));
        assert_eq!(find_antidirected_cycle(&d, 8, &mut Budget::unlimited()), Search::NotFound);
    }

    #[test]
    fn sink_at_minimum_vertex() {
        // 0 is a sink on the only antidirected cycle
        let d = Digraph::new(4, [(1, 0), (3, 0), (1, 2), (3, 2)]).unwrap();
        let c = find_antidirected_cycle(&d, 4, &mut Budget::unlimited()).found().unwrap();
        assert!(c.is_valid_in(&d));
        assert!(d.out_degree(c.vertices[0]) > 0);
    }

    #[test]
    fn directed_cycle_has_none() {
        let d = Digraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(find_antidirected_cycle(&d, 4, &mut Budget::unlimited()), Search::NotFound);
    }

    #[test]
    fn budget() {
        let d = antidirected(10);
        assert_eq!(find_antidirected_cycle(&d, 10, &mut Budget::new(3)), Search::BudgetExceeded);
    }
}
