//! Colouring routines used by the pipeline.

mod exact;
mod split;

pub use exact::{
    chromatic_number_exact, exact_color_within, exact_color_within_limits, ExactLimits, ExactOutcome,
    CHROMATIC_CAP, EXACT_CAP,
};
pub use split::{color_di2, Di2Outcome, SplitColoring};

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Digraph, Vertex, VertexColoring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("digraph has a directed cycle through vertex {0}")]
    Cyclic(Vertex),
    #[error("vertex {vertex} has out-degree {degree} above the bound {bound}")]
    OutDegree { vertex: Vertex, degree: usize, bound: usize },
    #[error("{n} vertices exceed the exact-colouring cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("exact search exceeded {0} nodes")]
    BudgetExceeded(u64),
    #[error("colourings cover {0} and {1} vertices")]
    LengthMismatch(usize, usize),
}

/// Smallest-last elimination order and the degeneracy of the underlying graph.
pub fn degeneracy_order(d: &Digraph) -> (Vec<Vertex>, usize) {
    let n = d.n();
    let nbrs: Vec<Vec<Vertex>> = (0..n).map(|v| d.underlying_neighbors(v)).collect();
    let mut deg: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let mut queue: BTreeSet<(usize, Vertex)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    while let Some((dv, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(dv);
        removed[v] = true;
        order.push(v);
        for &w in &nbrs[v] {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    (order, degeneracy)
}

/// Greedy colouring in reverse smallest-last order; uses at most
/// degeneracy + 1 colours.
pub fn greedy_degeneracy_color(d: &Digraph) -> VertexColoring {
    let (order, _) = degeneracy_order(d);
    let mut colors = vec![usize::MAX; d.n()];
    for &v in order.iter().rev() {
        colors[v] = lowest_free(d, &colors, v);
    }
    VertexColoring::from_colors(colors)
}

fn lowest_free(d: &Digraph, colors: &[usize], v: Vertex) -> usize {
    let mut taken: Vec<usize> = d
        .out_neighbors(v)
        .iter()
        .chain(d.in_neighbors(v))
        .map(|&w| colors[w])
        .filter(|&c| c != usize::MAX)
        .collect();
    taken.sort_unstable();
    taken.dedup();
    taken.iter().enumerate().find(|&(i, &c)| i != c).map_or(taken.len(), |(i, _)| i)
}

/// Colours an acyclic digraph with maximum out-degree at most `bound`
/// using at most `bound + 1` colours, sinks first.
pub fn color_acyclic_by_outdegree(d: &Digraph, bound: usize) -> Result<VertexColoring, ColoringError> {
    if let Some(v) = (0..d.n()).find(|&v| d.out_degree(v) > bound) {
        return Err(ColoringError::OutDegree { vertex: v, degree: d.out_degree(v), bound });
    }
    let order = d.topological_order().map_err(ColoringError::Cyclic)?;
    let mut colors = vec![usize::MAX; d.n()];
    for &v in order.iter().rev() {
        colors[v] = lowest_free(d, &colors, v);
    }
    Ok(VertexColoring::from_colors(colors))
}

/// Pairs two colourings of the same vertex set: `c1(v) * p2 + c2(v)`.
/// Proper for the union of the two arc sets when each input is proper for its own.
pub fn product_coloring(c1: &VertexColoring, c2: &VertexColoring) -> Result<VertexColoring, ColoringError> {
    if c1.colors.len() != c2.colors.len() {
        return Err(ColoringError::LengthMismatch(c1.colors.len(), c2.colors.len()));
    }
    let colors = c1
        .colors
        .iter()
        .zip(&c2.colors)
        .map(|(&a, &b)| a * c2.palette + b)
        .collect();
    Ok(VertexColoring { colors, palette: c1.palette * c2.palette })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Digraph {
        Digraph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn greedy_on_complete_graph() {
        let d = complete(5);
        let c = greedy_degeneracy_color(&d);
        assert!(c.is_proper(&d));
        assert_eq!(c.palette_size(), 5);
        assert_eq!(degeneracy_order(&d).1, 4);
    }

    #[test]
    fn greedy_on_even_cycle_uses_two() {
        let d = Digraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let c = greedy_degeneracy_color(&d);
        assert!(c.is_proper(&d));
        assert_eq!(c.palette_size(), 2);
    }

    #[test]
    fn acyclic_bound() {
        // transitive tournament on 4 vertices: out-degrees 3,2,1,0
        let d = complete(4);
        let c = color_acyclic_by_outdegree(&d, 3).unwrap();
        assert!(c.is_proper(&d));
        assert!(c.palette_size() <= 4);
        assert_eq!(
            color_acyclic_by_outdegree(&d, 2),
            Err(ColoringError::OutDegree { vertex: 0, degree: 3, bound: 2 })
        );
        let cyc = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(color_acyclic_by_outdegree(&cyc, 5), Err(ColoringError::Cyclic(_))));
    }

    #[test]
    fn empty_and_arcless() {
        assert_eq!(greedy_degeneracy_color(&Digraph::empty(0)).palette_size(), 0);
        assert_eq!(greedy_degeneracy_color(&Digraph::empty(3)).palette_size(), 1);
    }

    #[test]
    fn product_with_constant() {
        let c1 = VertexColoring::from_colors(vec![0, 1, 2]);
        let c2 = VertexColoring::from_colors(vec![0, 0, 0]);
        let p = product_coloring(&c1, &c2).unwrap();
        assert_eq!(p, c1);
        assert!(product_coloring(&c1, &VertexColoring::from_colors(vec![0])).is_err());
    }
}
