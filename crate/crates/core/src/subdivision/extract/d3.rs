use super::{try_pieces, Builder, ExtractError, Extraction};
use crate::decompose::{class_of_level, classify_arc, ArcClass};
use crate::graph::{Digraph, Vertex};
use crate::subdivision::{arc, tp, AntidirectedCycle};
use crate::tree::OutTree;

/// Extracts a subdivision of `(k,1,1,1,1,1)` from an antidirected cycle of
/// length at least 8 made of arcs between tree-incomparable vertices.
///
/// Covers two configurations of the cycle around its deepest sink; any
/// other configuration, or a covered one whose candidates all fail
/// verification, yields [`ExtractError::FallbackRequired`].
pub fn extract_from_adc_d3(
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
    let class = class_of_level(t.level(c.vertices[0]), k);
    let same_class = |v: Vertex| class_of_level(t.level(v), k) == class;
    if !c.vertices.iter().all(|&v| same_class(v)) {
        return Err(ExtractError::Precondition("cycle spans several level classes".into()));
    }
    if let Some((u, v)) = c.arcs().into_iter().find(|&(u, v)| classify_arc(t, u, v) != ArcClass::A3) {
        return Err(ExtractError::Precondition(format!("arc {u} -> {v} joins tree-comparable vertices")));
    }
    let d3_arcs: Vec<(Vertex, Vertex)> = d
        .arcs()
        .filter(|&(u, v)| same_class(u) && same_class(v) && classify_arc(t, u, v) == ArcClass::A3)
        .collect();
    let mut e = Engine { b: Builder::new(d, t, k), x: normalize(t, c), d3_arcs };
    e.run()
}

/// Cycle re-indexed from its deepest sink `x_0`, turned so that
/// `lca(x_1, x_0)` is an ancestor of `lca(x_s, x_0)`.
fn normalize(t: &OutTree, c: &AntidirectedCycle) -> Vec<Vertex> {
    let n = c.len() as isize;
    let p = (0..c.len())
        .filter(|&i| !c.is_source(i))
        .max_by_key(|&i| (t.level(c.vertices[i]), std::cmp::Reverse(c.vertices[i])))
        .expect("cycle has sinks") as isize;
    let fwd: Vec<Vertex> = (0..n).map(|j| c.at(p + j)).collect();
    let bwd: Vec<Vertex> = (0..n).map(|j| c.at(p - j)).collect();
    let x0 = fwd[0];
    let (z1, zs) = (t.lca(fwd[1], x0), t.lca(fwd[n as usize - 1], x0));
    let keep = if z1 == zs {
        t.level(fwd[1]) <= t.level(fwd[n as usize - 1])
    } else {
        t.is_ancestor(z1, zs)
    };
    if keep {
        fwd
    } else {
        bwd
    }
}

struct Engine<'a> {
    b: Builder<'a>,
    x: Vec<Vertex>,
    d3_arcs: Vec<(Vertex, Vertex)>,
}

/// Named cycle vertices and their anchors on the root path of `x_0`.
#[derive(Clone, Copy)]
struct Frame {
    s: usize,
    x0: Vertex,
    x1: Vertex,
    x2: Vertex,
    x3: Vertex,
    x4: Vertex,
    xs: Vertex,
    xs1: Vertex,
    xs2: Vertex,
    xs3: Vertex,
    z1: Vertex,
    zs: Vertex,
    zs1: Vertex,
}

type Stage<'a> = fn(&mut Engine<'a>, &Frame) -> Option<Extraction>;

impl<'a> Engine<'a> {
    fn t(&self) -> &'a OutTree {
        self.b.t
    }

    fn frame(&self) -> Frame {
        let x = &self.x;
        let s = x.len() - 1;
        let t = self.t();
        Frame {
            s,
            x0: x[0],
            x1: x[1],
            x2: x[2],
            x3: x[3],
            x4: x[4],
            xs: x[s],
            xs1: x[s - 1],
            xs2: x[s - 2],
            xs3: x[s - 3],
            z1: t.lca(x[1], x[0]),
            zs: t.lca(x[s], x[0]),
            zs1: t.lca(x[s - 1], x[0]),
        }
    }

    /// `v` lies in the subtree of `r`.
    fn under(&self, v: Vertex, r: Vertex) -> bool {
        self.t().is_ancestor(r, v)
    }

    fn lca(&self, a: Vertex, b: Vertex) -> Vertex {
        self.t().lca(a, b)
    }

    fn run(&mut self) -> Result<Extraction, ExtractError> {
        let f = self.frame();
        let t = self.t();
        let distinct = f.z1 != f.zs1 && f.zs1 != f.zs && f.z1 != f.zs;
        let chain = distinct && t.is_ancestor(f.z1, f.zs1) && t.is_ancestor(f.zs1, f.zs);
        let shared = f.z1 == f.zs && t.is_ancestor(f.x1, f.xs) && t.is_ancestor(f.xs1, f.x0);
        let (label, primary, sweep): (&str, Vec<Stage<'a>>, Vec<Stage<'a>>) = if chain {
            let primary: Vec<Stage<'a>> = if self.under(f.x2, f.xs1) {
                vec![Self::chain_a]
            } else if t.strictly_between(f.zs1, f.x2, f.xs1) {
                vec![Self::chain_b]
            } else if f.x2 != f.z1 && t.is_ancestor(f.z1, f.x2) && t.is_ancestor(f.x2, f.zs1) {
                vec![Self::chain_c]
            } else {
                vec![Self::incomparable]
            };
            let all: Vec<Stage<'a>> = vec![Self::chain_a, Self::chain_b, Self::chain_c, Self::incomparable];
            ("chain", primary, all)
        } else if shared {
            let all: Vec<Stage<'a>> = vec![Self::shared_incomparable, Self::shared_below, Self::shared_between];
            let primary: Vec<Stage<'a>> = if !t.comparable(f.x2, f.xs1) {
                vec![Self::shared_incomparable]
            } else if t.strictly_between(f.xs1, f.x2, f.x0) {
                vec![Self::shared_between]
            } else if self.under(f.x2, f.xs1) {
                vec![Self::shared_below]
            } else {
                vec![]
            };
            ("shared", primary, all)
        } else {
            return Err(ExtractError::FallbackRequired("configuration of the deepest sink is not covered".into()));
        };
        for stage in primary.iter().chain(&sweep) {
            if let Some(found) = stage(self, &f) {
                return Ok(found);
            }
        }
        Err(ExtractError::FallbackRequired(format!(
            "{label} configuration: none of {} candidates verified",
            self.b.attempts
        )))
    }

    fn arcs_where(&self, pred: impl Fn(&Self, Vertex, Vertex) -> bool) -> Vec<(Vertex, Vertex)> {
        self.d3_arcs.iter().copied().filter(|&(x, y)| pred(self, x, y)).collect()
    }

    // ---- chain configuration: z1 < z_{s-1} < z_s ----

    fn chain_a(&mut self, f: &Frame) -> Option<Extraction> {
        let &Frame { x0, x1, x2, x3, xs, xs1, zs, zs1, .. } = f;
        for (x, y) in self.arcs_where(|e, x, y| e.under(y, x2) && !e.under(x, x1) && !e.under(x, xs1)) {
            let z = self.lca(x, xs1);
            try_pieces!(self.b, "d3/chain/a/in-arc-below-second/off-last", [
                [tp(z, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)], [arc(x1, x2), tp(x2, y)], [tp(z, x), arc(x, y)],
            ]);
            try_pieces!(self.b, "d3/chain/a/in-arc-below-second/under-last", [
                [tp(xs, x), arc(x, y)], [arc(x1, x2), tp(x2, y)], [arc(x1, x0)], [tp(zs1, x0)], [tp(zs1, xs1)], [arc(xs, xs1)],
            ]);
            try_pieces!(self.b, "d3/chain/a/in-arc-below-second/deep-lca", [
                [tp(zs, x0)], [arc(x1, x0)], [arc(x1, x2), tp(x2, y)], [tp(z, x), arc(x, y)], [tp(z, xs1)], [tp(zs, xs), arc(xs, xs1)],
            ]);
        }
        if self.under(x3, xs1) {
            if let Some(found) = self.chain_a_third_below(f) {
                return Some(found);
            }
        }
        if self.under(x3, x1) && self.under(f.xs2, x3) {
            try_pieces!(self.b, "d3/chain/a/third-under-first", [
                [tp(x3, f.xs2), arc(f.xs2, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)], [arc(x1, x2)], [arc(x3, x2)],
            ]);
        }
        None
    }

    fn chain_a_third_below(&mut self, f: &Frame) -> Option<Extraction> {
        let &Frame { s, x0, x1, x2, x3, xs, xs1, z1, zs, zs1, .. } = f;
        // out-arcs leaving the subtree of x3
        for (x, y) in self.arcs_where(|e, x, y| e.under(x, x3) && !e.under(y, x2) && !e.under(y, x3)) {
            try_pieces!(self.b, "d3/chain/a/out-arc-below-third/to-root-path", [
                [arc(xs, xs1), tp(xs1, x2)], [arc(x3, x2)], [tp(x3, x), arc(x, y)], [tp(z1, y)], [tp(z1, x1), arc(x1, x0)], [arc(xs, x0)],
            ]);
            let z = self.lca(x0, y);
            try_pieces!(self.b, "d3/chain/a/out-arc-below-third/elsewhere", [
                [arc(xs, xs1), tp(xs1, x2)], [arc(x3, x2)], [tp(x3, x), arc(x, y)], [tp(z, y)], [tp(z, x0)], [arc(xs, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/a/out-arc-below-third/under-last", [
                [tp(xs, y)], [tp(x3, x), arc(x, y)], [arc(x3, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/a/out-arc-below-third/under-second-last", [
                [arc(xs, xs1), tp(xs1, y)], [tp(x3, x), arc(x, y)], [arc(x3, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)],
            ]);
        }
        if !self.under(f.x4, x2) {
            return None;
        }
        // out-arcs leaving the subtree of x_{s-1}
        for (x, y) in self.arcs_where(|e, x, y| e.under(x, xs1) && !e.under(y, x1) && !e.under(y, xs1)) {
            let z = self.lca(xs1, y);
            try_pieces!(self.b, "d3/chain/a/out-arc-below-second-last/from-second", [
                [tp(z, y)], [arc(x1, x2), tp(x2, x), arc(x, y)], [arc(x1, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(z, xs1)],
            ]);
            try_pieces!(self.b, "d3/chain/a/out-arc-below-second-last/from-second-into-last", [
                [tp(xs, y)], [arc(x1, x2), tp(x2, x), arc(x, y)], [arc(x1, x0)], [tp(zs1, x0)], [tp(zs1, xs1)], [arc(xs, xs1)],
            ]);
            try_pieces!(self.b, "d3/chain/a/out-arc-below-second-last/between-to-root-path", [
                [tp(zs, y)], [arc(x, y)], [tp(x, x2)], [arc(x1, x2)], [arc(x1, x0)], [tp(zs, xs), arc(xs, x0)],
            ]);
            let z0 = self.lca(x0, y);
            try_pieces!(self.b, "d3/chain/a/out-arc-below-second-last/between", [
                [tp(x, x2)], [arc(x1, x2)], [arc(x1, x0)], [tp(z0, x0)], [tp(z0, y)], [arc(x, y)],
            ]);
            let zp = self.lca(x2, x);
            try_pieces!(self.b, "d3/chain/a/out-arc-below-second-last/side-into-last", [
                [tp(xs, y)], [tp(zp, x), arc(x, y)], [tp(zp, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)],
            ]);
            let zq = self.lca(xs, y);
            try_pieces!(self.b, "d3/chain/a/out-arc-below-second-last/side", [
                [tp(zq, y)], [tp(zp, x), arc(x, y)], [tp(zp, x2)], [arc(x1, x2)], [arc(x1, x0)], [tp(zq, xs), arc(xs, x0)],
            ]);
        }
        // in-arcs entering the subtree of x_{s-1}
        for (x, y) in self.arcs_where(|e, x, y| e.under(y, xs1) && !e.under(x, x1) && !e.under(x, xs1)) {
            try_pieces!(self.b, "d3/chain/a/in-arc-below-second-last/above-second-from-last", [
                [tp(xs, x), arc(x, y), tp(y, x2)], [arc(x1, x2)], [arc(x1, x0)], [tp(zs1, x0)], [tp(zs1, xs1)], [arc(xs, xs1)],
            ]);
            let z = self.lca(xs1, x);
            try_pieces!(self.b, "d3/chain/a/in-arc-below-second-last/above-second", [
                [tp(z, x), arc(x, y), tp(y, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(z, xs1)],
            ]);
            let zp = self.lca(x2, y);
            try_pieces!(self.b, "d3/chain/a/in-arc-below-second-last/from-root-path", [
                [tp(x, x0)], [arc(x1, x0)], [arc(x1, x2)], [tp(zp, x2)], [tp(zp, y)], [arc(x, y)],
            ]);
            let z0 = self.lca(x0, x);
            try_pieces!(self.b, "d3/chain/a/in-arc-below-second-last/side", [
                [tp(z0, x0)], [arc(x1, x0)], [arc(x1, x2)], [tp(zp, x2)], [tp(zp, y)], [tp(z0, x), arc(x, y)],
            ]);
        }
        let in_w = |e: &Self, v: Vertex| e.under(v, x2) || e.under(v, x3);
        let i = (4..=s - 2).find(|&i| in_w(self, self.x[i]) && !in_w(self, self.x[i + 1]))?;
        let (a, b) = (self.x[i], self.x[i + 1]);
        let (a1, a2) = (self.x[i - 1], self.x[i.saturating_sub(2)]);
        let x4 = f.x4;
        let a_source = i % 2 == 1;
        if a_source {
            try_pieces!(self.b, "d3/chain/a/exit/third-source/to-second-last", [
                [arc(xs, xs1), tp(xs1, b)], [tp(x3, a), arc(a, b)], [arc(x3, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/a/exit/third-source/to-first", [
                [tp(x1, b)], [tp(x3, a), arc(a, b)], [arc(x3, x2)], [arc(xs, xs1), tp(xs1, x2)], [arc(xs, x0)], [arc(x1, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/a/exit/second-source/back-in-second/to-second-last", [
                [arc(x1, x2), tp(x2, a1)], [arc(a, a1)], [arc(a, b)], [arc(xs, xs1), tp(xs1, b)], [arc(xs, x0)], [arc(x1, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/a/exit/second-source/to-first", [
                [tp(x1, b)], [arc(a, b)], [arc(a, a1)], [arc(xs, xs1), tp(xs1, a1)], [arc(xs, x0)], [arc(x1, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/a/exit/second-source/back-in-third/to-second-last", [
                [tp(x3, a1)], [arc(a, a1)], [arc(a, b)], [tp(z1, b)], [tp(z1, x1), arc(x1, x2)], [arc(x3, x2)],
            ]);
        } else {
            try_pieces!(self.b, "d3/chain/a/exit/third-sink/to-second-last", [
                [arc(xs, xs1), tp(xs1, b), arc(b, a)], [tp(x3, a)], [arc(x3, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/a/exit/third-sink/to-first", [
                [arc(xs, xs1), tp(xs1, x2)], [arc(x3, x2)], [tp(x3, a)], [tp(x1, b), arc(b, a)], [arc(x1, x0)], [arc(xs, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/a/exit/second-sink/prev-in-third/to-second-last", [
                [arc(xs, xs1), tp(xs1, b), arc(b, a)], [tp(x3, a1), arc(a1, a)], [arc(x3, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/a/exit/second-sink/prev-in-third/to-first", [
                [tp(x1, b), arc(b, a)], [tp(x3, a1), arc(a1, a)], [arc(x3, x2)], [arc(xs, xs1), tp(xs1, x2)], [arc(xs, x0)], [arc(x1, x0)],
            ]);
            let zz = self.lca(x4, a1);
            try_pieces!(self.b, "d3/chain/a/exit/second-sink/to-first/side-of-fourth", [
                [tp(x1, b), arc(b, a)], [tp(zz, a1), arc(a1, a)], [tp(zz, x4)], [arc(xs, xs1), tp(xs1, x3), arc(x3, x4)], [arc(xs, x0)], [arc(x1, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/a/exit/second-sink/to-first/above-fourth", [
                [tp(x1, b), arc(b, a)], [arc(a1, a)], [tp(a1, x4)], [arc(x3, x4)], [arc(x3, x2)], [arc(x1, x2)],
            ]);
            try_pieces!(self.b, "d3/chain/a/exit/second-sink/to-first/below-fourth", [
                [tp(x1, b), arc(b, a)], [arc(x3, x4), tp(x4, a1), arc(a1, a)], [arc(x3, x2)], [arc(xs, xs1), tp(xs1, x2)], [arc(xs, x0)], [arc(x1, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/a/exit/second-sink/to-second-last/prev2-in-second", [
                [arc(x1, x2), tp(x2, a2)], [arc(a1, a2)], [arc(a1, a)], [arc(xs, xs1), tp(xs1, b), arc(b, a)], [arc(xs, x0)], [arc(x1, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/a/exit/second-sink/to-second-last/prev2-in-third", [
                [arc(xs, xs1), tp(xs1, a2)], [arc(a1, a2)], [arc(a1, a)], [arc(x1, x2), tp(x2, a)], [arc(x1, x0)], [arc(xs, x0)],
            ]);
        }
        None
    }

    fn chain_b(&mut self, f: &Frame) -> Option<Extraction> {
        let &Frame { x0, x1, x2, xs, xs1, xs2, xs3, z1, zs1, .. } = f;
        let t = self.t();
        try_pieces!(self.b, "d3/chain/b/prev-under-first", [
            [tp(x1, xs2), arc(xs2, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [tp(zs1, x0)], [tp(zs1, x2)], [arc(x1, x2)],
        ]);
        try_pieces!(self.b, "d3/chain/b/prev-above-first", [
            [tp(z1, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(z1, xs2), arc(xs2, xs1)],
        ]);
        let z = self.lca(x1, xs2);
        try_pieces!(self.b, "d3/chain/b/prev-off-anchor", [
            [tp(zs1, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(z, xs2), arc(xs2, xs1)], [tp(z, x1), arc(x1, x2)], [tp(zs1, x2)],
        ]);
        let w = xs3;
        let zp = self.lca(xs2, x2);
        try_pieces!(self.b, "d3/chain/b/third-last-under-second-last", [
            [arc(xs, xs1), tp(xs1, w)], [tp(zp, xs2), arc(xs2, w)], [tp(zp, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)],
        ]);
        try_pieces!(self.b, "d3/chain/b/third-last-under-last", [
            [tp(xs, w)], [arc(xs2, w)], [arc(xs2, xs1)], [arc(x1, x2), tp(x2, xs1)], [arc(x1, x0)], [arc(xs, x0)],
        ]);
        try_pieces!(self.b, "d3/chain/b/third-last-under-first", [
            [tp(x1, w)], [arc(xs2, w)], [arc(xs2, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)],
        ]);
        if t.is_ancestor(xs2, x0) {
            try_pieces!(self.b, "d3/chain/b/third-last-above-first/prev-on-root-path", [
                [tp(xs2, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(z1, xs1)], [tp(z1, w)], [arc(xs2, w)],
            ]);
        } else {
            try_pieces!(self.b, "d3/chain/b/third-last-above-first", [
                [tp(z1, x0)], [arc(xs, x0)], [arc(xs, xs1)], [arc(xs2, xs1)], [arc(xs2, w)], [tp(z1, w)],
            ]);
        }
        let zq = self.lca(w, x1);
        try_pieces!(self.b, "d3/chain/b/third-last-side/long-branch", [
            [tp(zq, w)], [arc(xs2, w)], [arc(xs2, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [tp(zq, x1), arc(x1, x0)],
        ]);
        if t.is_ancestor(xs2, x0) {
            try_pieces!(self.b, "d3/chain/b/third-last-side/prev-on-root-path", [
                [tp(xs2, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(zq, x1), arc(x1, x2), tp(x2, xs1)], [tp(zq, w)], [arc(xs2, w)],
            ]);
        } else {
            try_pieces!(self.b, "d3/chain/b/third-last-side", [
                [arc(x1, x2), tp(x2, xs1)], [arc(xs2, xs1)], [arc(xs2, w)], [tp(z1, w)], [tp(z1, x0)], [arc(x1, x0)],
            ]);
        }
        None
    }

    fn chain_c(&mut self, f: &Frame) -> Option<Extraction> {
        let &Frame { x0, x1, x2, xs, xs1, z1, zs, .. } = f;
        let t = self.t();
        // arcs entering the strict subtree of x2 from outside T_x1 and T_x2
        for (x, y) in self.arcs_where(|e, x, y| y != x2 && e.under(y, x2) && !e.under(x, x1) && !e.under(x, x2)) {
            for z in [self.lca(x0, x), self.lca(x2, x)] {
                try_pieces!(self.b, "d3/chain/c/into-second/above-second-last", [
                    [tp(z, x), arc(x, y), tp(y, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)], [arc(x1, x2)], [tp(z, x2)],
                ]);
                try_pieces!(self.b, "d3/chain/c/into-second/below-second-last", [
                    [tp(zs, x0)], [arc(x1, x0)], [arc(x1, x2)], [tp(z, x2)], [tp(z, x), arc(x, y)], [tp(zs, xs), arc(xs, xs1), tp(xs1, y)],
                ]);
                try_pieces!(self.b, "d3/chain/c/into-second/under-last", [
                    [tp(xs, y)], [tp(z, x), arc(x, y)], [tp(z, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)],
                ]);
                let zp = self.lca(y, xs1);
                try_pieces!(self.b, "d3/chain/c/into-second/deep-lca", [
                    [tp(z, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(zp, xs1)], [tp(zp, y)], [tp(z, x), arc(x, y)],
                ]);
            }
            let zp = self.lca(y, xs1);
            let zq = self.lca(x, x1);
            try_pieces!(self.b, "d3/chain/c/into-second/shallow-lca", [
                [tp(zp, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [tp(zq, x1), arc(x1, x0)], [tp(zq, x), arc(x, y)], [tp(zp, y)],
            ]);
        }
        // arcs leaving the strict subtree of x2 to outside T_x1 and T_x2
        for (x, y) in self.arcs_where(|e, x, y| x != x2 && e.under(x, x2) && !e.under(y, x1) && !e.under(y, x2)) {
            let z = self.lca(y, x2);
            try_pieces!(self.b, "d3/chain/c/out-of-second/on-root-path", [
                [tp(x, x0)], [arc(x1, x0)], [arc(x1, x2)], [tp(z, x2)], [tp(z, y)], [arc(x, y)],
            ]);
            let zp = self.lca(x, x0);
            try_pieces!(self.b, "d3/chain/c/out-of-second/branching", [
                [tp(z, y)], [tp(zp, x), arc(x, y)], [tp(zp, x0)], [arc(x1, x0)], [arc(x1, x2)], [tp(z, x2)],
            ]);
            let zq = self.lca(x1, y);
            try_pieces!(self.b, "d3/chain/c/out-of-second/at-second/side", [
                [tp(zq, y)], [tp(x2, x), arc(x, y)], [tp(x2, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [tp(zq, x1), arc(x1, x0)],
            ]);
            try_pieces!(self.b, "d3/chain/c/out-of-second/at-second/above-second-last", [
                [tp(z, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(x, xs1)], [arc(x, y)], [tp(z, y)],
            ]);
            try_pieces!(self.b, "d3/chain/c/out-of-second/at-second/below-second-last", [
                [tp(z, y)], [arc(xs, xs1), tp(xs1, x), arc(x, y)], [arc(xs, x0)], [arc(x1, x0)], [arc(x1, x2)], [tp(z, x2)],
            ]);
        }
        // arcs entering the strict subtree of x1 from outside T_x1 and T_x2
        for (x, y) in self.arcs_where(|e, x, y| y != x1 && e.under(y, x1) && !e.under(x, x1) && !e.under(x, x2)) {
            for z in [self.lca(x, xs1), self.lca(x, x2)] {
                try_pieces!(self.b, "d3/chain/c/into-first/side", [
                    [tp(z, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)], [tp(x1, y)], [tp(z, x), arc(x, y)],
                ]);
            }
            try_pieces!(self.b, "d3/chain/c/into-first/on-root-path", [
                [tp(x, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)], [tp(x1, y)], [arc(x, y)],
            ]);
        }
        // arcs leaving the strict subtree of x1 to outside T_x1 and T_x2, off the root path of x2
        for (x, y) in self.arcs_where(|e, x, y| {
            x != x1 && e.under(x, x1) && !e.under(y, x1) && !e.under(y, x2) && !e.t().is_ancestor(y, x2)
        }) {
            for z in [self.lca(y, xs1), self.lca(y, x2)] {
                try_pieces!(self.b, "d3/chain/c/out-of-first", [
                    [tp(z, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)], [tp(x1, x), arc(x, y)], [tp(z, y)],
                ]);
            }
        }
        // closing the cycle: a source below x1 reaching the root path of x2
        let n = self.x.len();
        for i in (1..n).step_by(2) {
            let x = self.x[i];
            if x == x1 || !self.under(x, x1) {
                continue;
            }
            let (u, v) = (self.x[i - 1], self.x[(i + 1) % n]);
            for (y, yp) in [(u, v), (v, u)] {
                if !(y != z1 && t.is_ancestor(z1, y) && t.is_ancestor(y, x2)) {
                    continue;
                }
                try_pieces!(self.b, "d3/chain/c/closing/into-first", [
                    [tp(x1, yp)], [arc(x, yp)], [arc(x, y), tp(y, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)],
                ]);
                try_pieces!(self.b, "d3/chain/c/closing/above-second-last", [
                    [arc(x, yp), tp(yp, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)], [arc(x1, x2)], [arc(x, y), tp(y, x2)],
                ]);
                try_pieces!(self.b, "d3/chain/c/closing/below-second-last", [
                    [tp(zs, x0)], [arc(x1, x0)], [arc(x1, x2)], [arc(x, y), tp(y, x2)], [arc(x, yp)], [tp(zs, xs), arc(xs, xs1), tp(xs1, yp)],
                ]);
                let z = self.lca(yp, xs1);
                try_pieces!(self.b, "d3/chain/c/closing/side", [
                    [tp(x1, x), arc(x, yp)], [tp(z, yp)], [tp(z, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)],
                ]);
                try_pieces!(self.b, "d3/chain/c/closing/under-last", [
                    [tp(xs, yp)], [arc(x, yp)], [arc(x, y)], [tp(z1, y)], [tp(z1, x1), arc(x1, x0)], [arc(xs, x0)],
                ]);
            }
        }
        None
    }

    fn incomparable(&mut self, f: &Frame) -> Option<Extraction> {
        let &Frame { x0, x1, x2, xs, xs1, zs, zs1, .. } = f;
        let z = self.lca(x2, xs1);
        try_pieces!(self.b, "d3/chain/incomparable/shallow-lca", [
            [tp(z, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)], [arc(x1, x2)], [tp(z, x2)],
        ]);
        try_pieces!(self.b, "d3/chain/incomparable/under-last", [
            [tp(xs, x2)], [arc(x1, x2)], [arc(x1, x0)], [tp(zs1, x0)], [tp(zs1, xs1)], [arc(xs, xs1)],
        ]);
        try_pieces!(self.b, "d3/chain/incomparable/deep-lca", [
            [tp(zs, x0)], [arc(x1, x0)], [arc(x1, x2)], [tp(z, x2)], [tp(z, xs1)], [tp(zs, xs), arc(xs, xs1)],
        ]);
        None
    }

    // ---- shared configuration: z1 = z_s, x1 <= x_s, x_{s-1} <= x0 ----

    fn shared_incomparable(&mut self, f: &Frame) -> Option<Extraction> {
        let &Frame { x0, x1, x2, x3, xs, xs1, .. } = f;
        for z2 in [self.lca(x2, x0), self.lca(x2, xs1)] {
            try_pieces!(self.b, "d3/shared/incomparable", [
                [tp(z2, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(z2, xs1)],
            ]);
            try_pieces!(self.b, "d3/shared/incomparable/third-under-first", [
                [tp(x1, x3), arc(x3, x2)], [tp(z2, x2)], [tp(z2, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)],
            ]);
        }
        for z3 in [self.lca(x3, x0), self.lca(x3, xs1)] {
            try_pieces!(self.b, "d3/shared/incomparable/third-off-first", [
                [tp(z3, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)], [arc(x1, x2)], [tp(z3, x3), arc(x3, x2)],
            ]);
        }
        None
    }

    fn shared_below(&mut self, f: &Frame) -> Option<Extraction> {
        let &Frame { x0, x1, x2, x3, xs, xs1, zs, .. } = f;
        for z3 in [self.lca(x3, x0), self.lca(x3, xs1)] {
            try_pieces!(self.b, "d3/shared/below-second-last/third-off", [
                [tp(z3, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)], [arc(x1, x2)], [tp(z3, x3), arc(x3, x2)],
            ]);
        }
        try_pieces!(self.b, "d3/shared/below-second-last/third-on-root-path", [
            [tp(x3, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(zs, xs1)], [tp(zs, x1), arc(x1, x2)], [arc(x3, x2)],
        ]);
        None
    }

    fn shared_between(&mut self, f: &Frame) -> Option<Extraction> {
        let &Frame { x0, x1, x2, x3, x4, xs, xs1, zs, .. } = f;
        let z4s = [self.lca(x4, x0), self.lca(x4, xs1)];
        let z3s = [self.lca(x3, x0), self.lca(x3, xs1)];
        for z4 in z4s {
            try_pieces!(self.b, "d3/shared/between/fourth-side", [
                [arc(x3, x2), tp(x2, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(z4, xs1)], [tp(z4, x4)], [arc(x3, x4)],
            ]);
        }
        try_pieces!(self.b, "d3/shared/between/fourth-under-last", [
            [tp(xs, x4)], [arc(x3, x4)], [arc(x3, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)],
        ]);
        try_pieces!(self.b, "d3/shared/between/fourth-under-second-last", [
            [arc(xs, xs1), tp(xs1, x4)], [arc(x3, x4)], [arc(x3, x2)], [arc(x1, x2)], [arc(x1, x0)], [arc(xs, x0)],
        ]);
        try_pieces!(self.b, "d3/shared/between/fourth-on-root-path", [
            [arc(x3, x4), tp(x4, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(zs, xs1)], [tp(zs, x1), arc(x1, x2)], [arc(x3, x2)],
        ]);
        try_pieces!(self.b, "d3/shared/between/fourth-above-second-last", [
            [arc(x3, x4), tp(x4, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)], [arc(x1, x2)], [arc(x3, x2)],
        ]);
        for z4 in z4s {
            try_pieces!(self.b, "d3/shared/between/fourth-side-of-second-last", [
                [tp(x1, xs), arc(xs, xs1)], [tp(z4, xs1)], [tp(z4, x4)], [arc(x3, x4)], [arc(x3, x2)], [arc(x1, x2)],
            ]);
            try_pieces!(self.b, "d3/shared/between/third-under-last/fourth-below-second", [
                [tp(z4, x4)], [tp(xs, x3), arc(x3, x4)], [arc(xs, xs1)], [tp(zs, xs1)], [tp(zs, x1), arc(x1, x0)], [tp(z4, x0)],
            ]);
            try_pieces!(self.b, "d3/shared/between/fourth-side-of-root-path", [
                [tp(zs, x4)], [arc(x3, x4)], [arc(x3, x2), tp(x2, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(zs, xs1)],
            ]);
            try_pieces!(self.b, "d3/shared/between/third-under-first/fourth-off-root-path", [
                [tp(zs, x3), arc(x3, x4)], [tp(z4, x4)], [tp(z4, x0)], [arc(xs, x0)], [arc(xs, xs1)], [tp(zs, xs1)],
            ]);
            for z3 in z3s {
                try_pieces!(self.b, "d3/shared/between/third-side/fourth-off-root-path", [
                    [tp(x1, xs), arc(xs, xs1)], [tp(z3, xs1)], [tp(z3, x3), arc(x3, x4)], [tp(z4, x4)], [tp(z4, x0)], [arc(x1, x0)],
                ]);
            }
        }
        for z3 in z3s {
            try_pieces!(self.b, "d3/shared/between/third-side", [
                [tp(z3, xs1)], [arc(xs, xs1)], [arc(xs, x0)], [arc(x1, x0)], [arc(x1, x2)], [tp(z3, x3), arc(x3, x2)],
            ]);
        }
        try_pieces!(self.b, "d3/shared/between/fourth-under-first", [
            [tp(x1, x4)], [arc(x3, x4)], [arc(x3, x2)], [arc(xs, xs1), tp(xs1, x2)], [arc(xs, x0)], [arc(x1, x0)],
        ]);
        None
    }
}
