use super::{try_pieces, Builder, ExtractError, Extraction};
use crate::decompose::{classify_arc, ArcClass};
use crate::graph::{Digraph, Vertex};
use crate::subdivision::{arc, tp, AntidirectedCycle};
use crate::tree::OutTree;

/// Extracts a subdivision of `(k,1,1,1,1,1)` from an antidirected cycle of
/// length at least 8 whose arcs all point down the tree.
pub fn extract_from_adc_d1(
    d: &Digraph,
    t: &OutTree,
    c: &AntidirectedCycle,
    k: usize,
) -> Result<Extraction, ExtractError> {
    if c.len() < 8 || !c.is_valid_in(d) {
        return Err(ExtractError::Precondition(format!(
            "need a valid antidirected cycle of length at least 8, got length {}",
            c.len()
        )));
    }
    if let Some((u, v)) = c.arcs().into_iter().find(|&(u, v)| classify_arc(t, u, v) != ArcClass::A1) {
        return Err(ExtractError::Precondition(format!("arc {u} -> {v} is not a tree-forward arc")));
    }
    let len = c.len() as isize;
    // highest source, lowest id on ties
    let p = (0..c.len())
        .filter(|&i| c.is_source(i))
        .max_by_key(|&i| (t.level(c.vertices[i]), std::cmp::Reverse(c.vertices[i])))
        .expect("cycle has sources") as isize;
    // orient so that x2 is the shallower of the two second in-neighbours
    let dir: isize = if t.level(c.at(p + 2)) < t.level(c.at(p - 2)) { 1 } else { -1 };
    let x = |j: isize| -> Vertex { c.at(p + dir * j) };
    let m = len - 1;
    let (x0, x1, x2, xm, s) = (x(0), x(1), x(2), x(m), x(m - 1));
    if !(t.level(x2) < t.level(s) && t.level(s) < t.level(x0)) {
        return Err(ExtractError::Precondition("cycle sources are not nested above the top source".into()));
    }
    let i = (2..=m - 3)
        .step_by(2)
        .find(|&i| t.is_ancestor(s, x(i + 2)))
        .expect("x_{m-1} itself lies in its subtree");
    let mut b = Builder::new(d, t, k);
    let found = (|| {
        if i == 2 {
            try_pieces!(b, "d1/first-source", [
                [tp(s, x(4)), arc(x(4), x(3))],
                [arc(x2, x(3))],
                [arc(x2, x1)],
                [arc(x0, x1)],
                [arc(x0, xm)],
                [arc(s, xm)],
            ]);
        } else if t.is_ancestor(x2, x(i)) {
            try_pieces!(b, "d1/below-second", [
                [tp(x2, x(i)), arc(x(i), x(i + 1))],
                [tp(s, x(i + 2)), arc(x(i + 2), x(i + 1))],
                [arc(s, xm)],
                [arc(x0, xm)],
                [arc(x0, x1)],
                [arc(x2, x1)],
            ]);
        } else if t.is_ancestor(x(i), x2) {
            try_pieces!(b, "d1/above-second", [
                [tp(x(i), x2), arc(x2, x1)],
                [arc(x0, x1)],
                [arc(x0, xm)],
                [arc(s, xm)],
                [tp(s, x(i + 2)), arc(x(i + 2), x(i + 1))],
                [arc(x(i), x(i + 1))],
            ]);
        }
        None
    })();
    found.ok_or_else(|| ExtractError::FallbackRequired(format!("no candidate verified at index {i}")))
}
