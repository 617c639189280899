//! Shared test fixtures: small trees with extra arcs on which a specific
//! extraction case fires.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sixblock_core::{Digraph, OutTree};

/// Random strong digraph with a final tree rooted at 0: a random shallow
/// tree, arcs from every leaf back to the root, and random arcs between
/// tree-incomparable vertices pointing to a deeper level.
pub fn bushy_instance(seed: u64) -> (Digraph, OutTree) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n: usize = rng.gen_range(12..40);
    let branch: usize = rng.gen_range(2..6);
    let parents: Vec<Option<usize>> =
        (0..n).map(|i| if i == 0 { None } else { Some(rng.gen_range(i.saturating_sub(branch)..i)) }).collect();
    let mut d = Digraph::empty(n);
    for (v, p) in parents.iter().enumerate().skip(1) {
        d.add_arc(p.unwrap(), v).unwrap();
    }
    let t = OutTree::from_parents(&d, 0, parents.clone()).unwrap();
    for (v, &p) in parents.iter().enumerate().skip(1) {
        if t.children(v).is_empty() && p != Some(0) {
            d.add_arc(v, 0).unwrap();
        }
    }
    let p = rng.gen_range(0.1..0.5);
    for x in 0..n {
        for y in 0..n {
            if t.level(x) < t.level(y) && !t.is_ancestor(x, y) && rng.gen_bool(p) {
                d.add_arc(x, y).unwrap();
            }
        }
    }
    let t = OutTree::from_parents(&d, 0, parents).unwrap();
    (d, t)
}

/// Vertex 0 is the root; `parents[0]` is ignored. `cycle` is empty for
/// fixtures aimed at the back-arc split.
pub struct Fixture {
    pub case: &'static str,
    pub k: usize,
    pub parents: &'static [usize],
    pub arcs: &'static [(usize, usize)],
    pub cycle: &'static [usize],
}

impl Fixture {
    pub fn build(&self) -> (Digraph, OutTree) {
        let n = self.parents.len();
        let mut d = Digraph::empty(n);
        let parents: Vec<Option<usize>> =
            (0..n).map(|v| if v == 0 { None } else { Some(self.parents[v]) }).collect();
        for v in 1..n {
            d.add_arc(self.parents[v], v).unwrap();
        }
        for &(a, b) in self.arcs {
            d.add_arc(a, b).unwrap();
        }
        let t = OutTree::from_parents(&d, 0, parents).unwrap();
        (d, t)
    }

    pub fn family(&self) -> &'static str {
        &self.case[..2]
    }
}

pub const FIXTURES: &[Fixture] = &[
    // Built by hand: the cycle's second sink sits on a branch incomparable
    // with every lca of the deepest sink.
    Fixture {
        case: "d3/chain/incomparable",
        k: 1,
        parents: &[0, 0, 1, 2, 3, 4, 0, 6, 6, 8, 2, 1, 11, 12, 11, 0],
        arcs: &[(7, 5), (7, 9), (15, 9), (15, 14), (6, 14), (6, 13), (10, 13), (10, 5)],
        cycle: &[7, 9, 15, 14, 6, 13, 10, 5],
    },
    Fixture {
        case: "d1/above-second",
        k: 1,
        parents: &[0, 0, 1, 2, 3, 4, 5, 5],
        arcs: &[(0, 2), (0, 4), (1, 7), (3, 6)],
        cycle: &[0, 2, 1, 7, 5, 6, 3, 4],
    },
    Fixture {
        case: "d1/below-second",
        k: 1,
        parents: &[0, 0, 1, 1, 3, 4, 5, 5],
        arcs: &[(0, 2), (0, 7), (1, 4), (3, 6)],
        cycle: &[0, 2, 1, 4, 3, 6, 5, 7],
    },
    Fixture {
        case: "d1/first-source",
        k: 1,
        parents: &[0, 0, 1, 1, 2, 2, 3, 3],
        arcs: &[(0, 5), (0, 7), (1, 4), (1, 6)],
        cycle: &[0, 5, 2, 4, 1, 6, 3, 7],
    },
    Fixture {
        case: "d2/above-first/z2-above-z4",
        k: 1,
        parents: &[0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13],
        arcs: &[(4, 0), (4, 2), (5, 2), (5, 3), (6, 1), (6, 4), (7, 0), (7, 5), (8, 1), (8, 4), (8, 5), (8, 6), (9, 0), (10, 4), (10, 6), (11, 1), (11, 9), (12, 1), (12, 3), (12, 9), (13, 7), (14, 3), (14, 6), (14, 7), (14, 10), (14, 12)],
        cycle: &[],
    },
    Fixture {
        case: "d2/above-first/z4-above-z2",
        k: 1,
        parents: &[0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14],
        arcs: &[(3, 1), (6, 2), (6, 4), (7, 0), (7, 1), (7, 3), (8, 0), (8, 4), (9, 1), (9, 6), (10, 1), (10, 5), (11, 0), (11, 3), (11, 7), (11, 9), (12, 2), (12, 7), (12, 9), (13, 2), (13, 10), (13, 11), (14, 7), (14, 12), (15, 0), (15, 1), (15, 4), (15, 6), (15, 7), (15, 9), (15, 11), (15, 12)],
        cycle: &[],
    },
    Fixture {
        case: "d2/below-first/z2-above-y1",
        k: 1,
        parents: &[0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18],
        arcs: &[(3, 1), (5, 0), (5, 2), (7, 0), (7, 3), (7, 5), (8, 0), (8, 2), (8, 6), (9, 3), (9, 7), (10, 8), (11, 1), (11, 5), (12, 8), (12, 10), (13, 5), (14, 2), (14, 9), (15, 2), (15, 7), (15, 8), (15, 9), (16, 4), (17, 13), (18, 1), (18, 4), (18, 6), (18, 7), (18, 11), (18, 12), (18, 14), (18, 15), (19, 2), (19, 9), (19, 10), (19, 12), (19, 13), (19, 14), (19, 17)],
        cycle: &[],
    },
    Fixture {
        case: "d2/below-first/z2-below-y1",
        k: 1,
        parents: &[0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18],
        arcs: &[(4, 0), (4, 1), (7, 1), (7, 2), (7, 5), (8, 0), (8, 3), (10, 4), (10, 8), (11, 6), (11, 9), (12, 1), (12, 3), (12, 7), (13, 4), (14, 2), (14, 6), (14, 11), (15, 0), (15, 1), (15, 4), (15, 6), (15, 10), (15, 11), (15, 13), (16, 14), (17, 1), (17, 6), (17, 12), (19, 2), (19, 3), (19, 5), (19, 6), (19, 10)],
        cycle: &[],
    },
    Fixture {
        case: "d3/chain/b/prev-off-anchor",
        k: 1,
        parents: &[0, 0, 0, 1, 2, 2, 3, 3, 7, 7, 7, 9, 8, 9, 13, 11, 13, 16, 15],
        arcs: &[(2, 8), (2, 15), (4, 8), (4, 12), (5, 11), (5, 17), (6, 11), (6, 12), (10, 15), (10, 18), (14, 17), (14, 18)],
        cycle: &[2, 8, 4, 12, 6, 11, 5, 17, 14, 18, 10, 15],
    },
    Fixture {
        case: "d3/chain/b/third-last-side/long-branch",
        k: 1,
        parents: &[0, 0, 1, 1, 1, 2, 2, 6, 6, 6, 7, 7, 8, 9, 12, 11, 13, 15, 14],
        arcs: &[(3, 11), (3, 16), (4, 12), (4, 17), (5, 11), (5, 12), (7, 16), (7, 18), (10, 17), (10, 18)],
        cycle: &[3, 11, 5, 12, 4, 17, 10, 18, 7, 16],
    },
    Fixture {
        case: "d3/chain/c/into-second/above-second-last",
        k: 1,
        parents: &[0, 0, 1, 1, 2, 3, 4, 6, 7, 8, 9, 9, 9, 10, 12, 14, 15, 15, 16, 16, 17, 19, 20],
        arcs: &[(3, 11), (3, 22), (5, 11), (5, 15), (13, 15), (13, 21), (18, 21), (18, 22)],
        cycle: &[3, 11, 5, 15, 13, 21, 18, 22],
    },
    Fixture {
        case: "d3/chain/incomparable/shallow-lca",
        k: 1,
        parents: &[0, 0, 0, 2, 2, 3, 3, 4, 4, 5, 7, 7, 7],
        arcs: &[(1, 9), (1, 12), (3, 10), (3, 11), (6, 9), (6, 11), (8, 10), (8, 12)],
        cycle: &[1, 9, 6, 11, 3, 10, 8, 12],
    },
    Fixture {
        case: "d3/shared/below-second-last/third-off",
        k: 1,
        parents: &[0, 0, 1, 1, 1, 2, 4, 3, 7, 8, 8, 8],
        arcs: &[(2, 8), (2, 11), (4, 9), (4, 10), (5, 10), (5, 11), (6, 8), (6, 9)],
        cycle: &[2, 8, 6, 9, 4, 10, 5, 11],
    },
    Fixture {
        case: "d3/shared/below-second-last/third-on-root-path",
        k: 1,
        parents: &[0, 0, 1, 1, 2, 2, 3, 6, 7, 8, 8, 9, 10, 10],
        arcs: &[(2, 11), (2, 12), (4, 8), (4, 11), (5, 8), (5, 13), (9, 12), (9, 13)],
        cycle: &[2, 11, 4, 8, 5, 13, 9, 12],
    },
    Fixture {
        case: "d3/shared/between/fourth-above-second-last",
        k: 1,
        parents: &[0, 0, 0, 1, 1, 4, 3, 4, 7, 8, 9],
        arcs: &[(2, 7), (2, 8), (3, 7), (3, 10), (5, 8), (5, 9), (6, 9), (6, 10)],
        cycle: &[3, 7, 2, 8, 5, 9, 6, 10],
    },
    Fixture {
        case: "d3/shared/between/fourth-on-root-path",
        k: 1,
        parents: &[0, 0, 0, 1, 2, 4, 5, 6, 6, 7, 8, 10, 10, 11, 13, 14, 15, 16],
        arcs: &[(1, 14), (1, 17), (3, 13), (3, 17), (9, 13), (9, 15), (12, 14), (12, 15)],
        cycle: &[1, 14, 12, 15, 9, 13, 3, 17],
    },
    Fixture {
        case: "d3/shared/between/fourth-side",
        k: 1,
        parents: &[0, 0, 0, 1, 3, 3, 4, 5, 6, 6, 7, 8, 9, 11, 12, 13],
        arcs: &[(2, 11), (2, 14), (5, 13), (5, 15), (7, 11), (7, 15), (10, 13), (10, 14)],
        cycle: &[2, 11, 7, 15, 5, 13, 10, 14],
    },
    Fixture {
        case: "d3/shared/between/fourth-side-of-second-last",
        k: 1,
        parents: &[0, 0, 0, 0, 2, 1, 4, 4, 5, 8, 9, 9, 11, 12],
        arcs: &[(2, 8), (2, 13), (3, 8), (3, 10), (4, 12), (4, 13), (6, 11), (6, 12), (7, 10), (7, 11)],
        cycle: &[2, 8, 3, 10, 7, 11, 6, 12, 4, 13],
    },
    Fixture {
        case: "d3/shared/between/fourth-under-last",
        k: 1,
        parents: &[0, 0, 0, 1, 2, 1, 4, 4, 5, 8, 6, 9],
        arcs: &[(1, 6), (1, 10), (2, 8), (2, 11), (3, 6), (3, 8), (4, 9), (4, 11), (7, 9), (7, 10)],
        cycle: &[1, 6, 3, 8, 2, 11, 4, 9, 7, 10],
    },
    Fixture {
        case: "d3/shared/between/fourth-under-second-last",
        k: 1,
        parents: &[0, 0, 0, 1, 2, 1, 4, 5, 6, 8, 9],
        arcs: &[(1, 9), (1, 10), (3, 6), (3, 8), (5, 6), (5, 10), (7, 8), (7, 9)],
        cycle: &[1, 9, 7, 8, 3, 6, 5, 10],
    },
    Fixture {
        case: "d3/shared/between/third-side/fourth-off-root-path",
        k: 1,
        parents: &[0, 0, 0, 1, 2, 4, 3, 5, 5, 8, 9, 9],
        arcs: &[(1, 9), (1, 10), (3, 8), (3, 10), (6, 8), (6, 11), (7, 9), (7, 11)],
        cycle: &[1, 9, 7, 11, 6, 8, 3, 10],
    },
    Fixture {
        case: "d3/shared/between/third-under-first/fourth-off-root-path",
        k: 1,
        parents: &[0, 0, 0, 1, 2, 3, 4, 5, 6, 7, 9, 10, 10, 11, 13, 14, 15],
        arcs: &[(2, 10), (2, 16), (4, 9), (4, 12), (6, 10), (6, 12), (8, 9), (8, 16)],
        cycle: &[2, 10, 6, 12, 4, 9, 8, 16],
    },
    Fixture {
        case: "d3/shared/between/third-under-last/fourth-below-second",
        k: 1,
        parents: &[0, 0, 0, 1, 1, 1, 2, 6, 4, 6, 9, 8, 10, 11, 11, 13, 14, 14],
        arcs: &[(1, 7), (1, 12), (2, 11), (2, 15), (3, 12), (3, 17), (5, 7), (5, 8), (6, 8), (6, 15), (9, 11), (9, 16), (10, 16), (10, 17)],
        cycle: &[1, 7, 5, 8, 6, 15, 2, 11, 9, 16, 10, 17, 3, 12],
    },
    Fixture {
        case: "d3/shared/incomparable",
        k: 1,
        parents: &[0, 0, 0, 1, 1, 2, 3, 3, 5, 7, 9, 10],
        arcs: &[(2, 6), (2, 11), (4, 6), (4, 10), (5, 9), (5, 10), (8, 9), (8, 11)],
        cycle: &[2, 6, 4, 10, 5, 9, 8, 11],
    },
    Fixture {
        case: "d1/above-second",
        k: 2,
        parents: &[0, 0, 1, 2, 2, 3, 4, 6, 7, 8, 9, 9, 9],
        arcs: &[(0, 5), (0, 10), (2, 5), (2, 11), (6, 10), (6, 12), (8, 11), (8, 12)],
        cycle: &[0, 5, 2, 11, 8, 12, 6, 10],
    },
    Fixture {
        case: "d1/below-second",
        k: 2,
        parents: &[0, 0, 1, 2, 2, 3, 4, 5, 7, 7, 9, 10, 10],
        arcs: &[(0, 6), (0, 11), (2, 6), (2, 8), (5, 8), (5, 12), (9, 11), (9, 12)],
        cycle: &[0, 6, 2, 8, 5, 12, 9, 11],
    },
    Fixture {
        case: "d1/first-source",
        k: 2,
        parents: &[0, 0, 1, 2, 3, 4, 5, 5, 6, 6, 9, 8, 9],
        arcs: &[(0, 11), (0, 12), (2, 7), (2, 10), (4, 7), (4, 11), (6, 10), (6, 12)],
        cycle: &[0, 11, 4, 7, 2, 10, 6, 12],
    },
    Fixture {
        case: "d2/above-first/z2-above-z4",
        k: 2,
        parents: &[0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21],
        arcs: &[(6, 0), (6, 4), (10, 2), (12, 4), (12, 8), (14, 0), (14, 4), (14, 8), (16, 8), (16, 10), (18, 6), (18, 8), (20, 10), (22, 6), (22, 10), (22, 14), (22, 16), (22, 18), (22, 20)],
        cycle: &[],
    },
    Fixture {
        case: "d2/below-first/z2-below-y1",
        k: 2,
        parents: &[0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25],
        arcs: &[(6, 0), (6, 2), (8, 0), (10, 4), (12, 10), (14, 10), (16, 0), (16, 4), (16, 10), (18, 6), (18, 16), (20, 4), (22, 6), (24, 0), (24, 6), (24, 16), (24, 18), (24, 20), (26, 2), (26, 4), (26, 14)],
        cycle: &[],
    },
    Fixture {
        case: "d3/chain/b/third-last-under-second-last",
        k: 2,
        parents: &[0, 0, 0, 1, 2, 2, 5, 5, 7, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16],
        arcs: &[(3, 9), (3, 17), (4, 9), (4, 18), (8, 14), (8, 18), (10, 14), (10, 17)],
        cycle: &[3, 9, 4, 18, 8, 14, 10, 17],
    },
    Fixture {
        case: "d3/chain/incomparable/shallow-lca",
        k: 2,
        parents: &[0, 0, 1, 1, 2, 4, 4, 5, 6, 7, 7, 8, 10, 11, 13, 13, 12, 16, 14, 17, 18],
        arcs: &[(3, 19), (3, 20), (5, 14), (5, 15), (9, 15), (9, 19), (10, 14), (10, 20)],
        cycle: &[5, 14, 10, 20, 3, 19, 9, 15],
    },
    Fixture {
        case: "d3/shared/below-second-last/third-off",
        k: 2,
        parents: &[0, 0, 0, 1, 2, 3, 4, 5, 6, 6, 6, 10, 11, 12, 13, 14, 15, 15],
        arcs: &[(3, 16), (3, 17), (7, 14), (7, 16), (8, 12), (8, 17), (9, 12), (9, 14)],
        cycle: &[3, 16, 7, 14, 9, 12, 8, 17],
    },
    Fixture {
        case: "d3/shared/between/fourth-under-second-last",
        k: 2,
        parents: &[0, 0, 0, 0, 2, 1, 3, 4, 5, 6, 9, 10, 11, 12, 12, 14, 15],
        arcs: &[(1, 9), (1, 16), (2, 9), (2, 13), (7, 11), (7, 13), (8, 11), (8, 16)],
        cycle: &[1, 9, 2, 13, 7, 11, 8, 16],
    },
    Fixture {
        case: "d3/shared/incomparable",
        k: 2,
        parents: &[0, 0, 0, 0, 3, 4, 4, 5, 6, 7, 8, 10, 10, 11, 12, 14, 15],
        arcs: &[(1, 10), (1, 14), (2, 10), (2, 13), (5, 13), (5, 16), (9, 14), (9, 16)],
        cycle: &[1, 10, 2, 13, 5, 16, 9, 14],
    },
];
