use super::{try_pieces, Builder, ExtractError, Extraction};
use crate::graph::{Digraph, Vertex};
use crate::subdivision::{arc, tp};
use crate::tree::OutTree;

/// Extracts a subdivision of `(k,1,1,1,1,1)` from a vertex `x` whose
/// back-arc out-neighbours `ys` (ordered from the root down) have three
/// interior members `a`, `b`, `c` of out-degree at least 2.
///
/// `out2[v]` lists the back-arc out-neighbours of `v` in the same class.
pub fn extract_from_di2(
    d: &Digraph,
    t: &OutTree,
    k: usize,
    x: Vertex,
    ys: &[Vertex],
    trio: [Vertex; 3],
    out2: &[Vec<Vertex>],
) -> Result<Extraction, ExtractError> {
    let [a, b, c] = trio;
    if ys.len() < 5 || ys.windows(2).any(|w| !t.is_ancestor(w[0], w[1])) {
        return Err(ExtractError::Precondition("out-neighbours are not a chain of ancestors".into()));
    }
    let (y1, yp) = (ys[0], ys[ys.len() - 1]);
    let interior = &ys[1..ys.len() - 1];
    if !(interior.contains(&a) && interior.contains(&b) && interior.contains(&c))
        || !(t.level(a) < t.level(b) && t.level(b) < t.level(c))
    {
        return Err(ExtractError::Precondition("trio must be ordered interior out-neighbours".into()));
    }
    let mut bld = Builder::new(d, t, k);
    for &z2 in &out2[a] {
        for &z4 in out2[c].iter().filter(|&&z| z != a) {
            if let Some(found) = candidates(&mut bld, x, y1, yp, a, b, c, z2, z4) {
                return Ok(found);
            }
        }
    }
    Err(ExtractError::FallbackRequired("no candidate verified".into()))
}

#[allow(clippy::too_many_arguments)]
fn candidates(
    bld: &mut Builder,
    x: Vertex,
    y1: Vertex,
    yp: Vertex,
    a: Vertex,
    b: Vertex,
    c: Vertex,
    z2: Vertex,
    z4: Vertex,
) -> Option<Extraction> {
    let t = bld.t;
    if t.is_ancestor(a, z4) && z4 != a {
        if t.is_ancestor(y1, z2) {
            try_pieces!(bld, "d2/below-first/z2-below-y1", [
                [tp(a, z4)], [arc(c, z4)], [tp(c, yp)], [arc(x, yp)], [arc(x, y1), tp(y1, z2)], [arc(a, z2)],
            ]);
        } else {
            try_pieces!(bld, "d2/below-first/z2-above-y1", [
                [tp(a, z4)], [arc(c, z4)], [tp(c, yp)], [arc(x, yp)], [arc(x, y1)], [arc(a, z2), tp(z2, y1)],
            ]);
        }
    } else if t.is_ancestor(z2, z4) {
        try_pieces!(bld, "d2/above-first/z2-above-z4", [
            [tp(c, yp)], [arc(x, yp)], [arc(x, b)], [tp(a, b)], [arc(a, z2), tp(z2, z4)], [arc(c, z4)],
        ]);
    } else {
        try_pieces!(bld, "d2/above-first/z4-above-z2", [
            [tp(c, yp)], [arc(x, yp)], [arc(x, b)], [tp(a, b)], [arc(a, z2)], [arc(c, z4), tp(z4, z2)],
        ]);
    }
    None
}
