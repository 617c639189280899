use super::color_acyclic_by_outdegree;
use crate::decompose::{ArcClass, LevelClass};
use crate::graph::{Digraph, Vertex, VertexColoring};
use crate::subdivision::extract::{extract_from_di2, Extraction};
use crate::tree::OutTree;

/// Colouring of the back-arc part of one class: low out-degree vertices
/// take colours `0..2`, the rest take colours from `2` upwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitColoring {
    /// Indexed like the class's vertex list.
    pub coloring: VertexColoring,
    /// Global ids with out-degree at most 1 in the part.
    pub s1: Vec<Vertex>,
    pub s2: Vec<Vertex>,
    /// Maximum out-degree of the part induced on `s2`.
    pub max_s2_out_degree: usize,
    /// Vertices that triggered extraction without producing a witness.
    pub unresolved: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Di2Outcome {
    Split(SplitColoring),
    Witness(Extraction),
}

/// Colours the back-arc part of `class` with at most 7 colours, or returns
/// a witness when some vertex has three interior back-neighbours of
/// out-degree at least 2.
pub fn color_di2(d: &Digraph, t: &OutTree, class: &LevelClass, k: usize) -> Di2Outcome {
    let part = class.part(ArcClass::A2);
    let verts = &class.vertices;
    let mut out2: Vec<Vec<Vertex>> = vec![Vec::new(); d.n()];
    for &(u, v) in &class.arcs[ArcClass::A2.index()] {
        out2[u].push(v);
    }
    for list in &mut out2 {
        list.sort_by_key(|&v| t.level(v));
    }
    let in_s2 = |v: Vertex| out2[v].len() >= 2;
    let mut unresolved = Vec::new();
    for &x in verts.iter().filter(|&&x| in_s2(x)) {
        let ys = &out2[x];
        let interior: Vec<Vertex> = ys[1..ys.len() - 1].iter().copied().filter(|&y| in_s2(y)).collect();
        if interior.len() < 3 {
            continue;
        }
        let trio = [interior[0], interior[1], interior[2]];
        match extract_from_di2(d, t, k, x, ys, trio, &out2) {
            Ok(found) => return Di2Outcome::Witness(found),
            Err(_) => unresolved.push(x),
        }
    }
    let (s1_local, s2_local): (Vec<usize>, Vec<usize>) = (0..verts.len()).partition(|&i| part.out_degree(i) <= 1);
    let sub1 = part.induced(&s1_local);
    let sub2 = part.induced(&s2_local);
    let max_s2_out_degree = sub2.max_out_degree();
    let c1 = color_acyclic_by_outdegree(&sub1, 1).expect("back arcs are acyclic");
    let c2 = color_acyclic_by_outdegree(&sub2, max_s2_out_degree).expect("back arcs are acyclic");
    let mut colors = vec![0; verts.len()];
    for (j, &i) in s1_local.iter().enumerate() {
        colors[i] = c1.colors[j];
    }
    for (j, &i) in s2_local.iter().enumerate() {
        colors[i] = 2 + c2.colors[j];
    }
    let palette = if s2_local.is_empty() { c1.palette } else { 2 + c2.palette };
    Di2Outcome::Split(SplitColoring {
        coloring: VertexColoring { colors, palette },
        s1: s1_local.iter().map(|&i| verts[i]).collect(),
        s2: s2_local.iter().map(|&i| verts[i]).collect(),
        max_s2_out_degree,
        unresolved,
    })
}
