use super::ColoringError;
use crate::graph::{Digraph, VertexColoring};

/// Largest vertex count accepted by [`chromatic_number_exact`].
pub const CHROMATIC_CAP: usize = 20;
/// Largest vertex count accepted by [`exact_color_within`].
pub const EXACT_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactLimits {
    pub max_vertices: usize,
    pub max_nodes: u64,
}

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits { max_vertices: EXACT_CAP, max_nodes: 5_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactOutcome {
    Colored(VertexColoring),
    Unsatisfiable,
}

struct Dsatur {
    adj: Vec<u64>,
    colors: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

const NONE: usize = usize::MAX;

impl Dsatur {
    fn new(d: &Digraph, max_nodes: u64) -> Self {
        let n = d.n();
        let mut adj = vec![0u64; n];
        for (u, v) in d.arcs() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Dsatur { adj, colors: vec![NONE; n], nodes: 0, max_nodes }
    }

    fn saturation(&self, v: usize) -> u64 {
        let mut mask = 0u64;
        let mut nb = self.adj[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if self.colors[w] != NONE {
                mask |= 1 << self.colors[w];
            }
        }
        mask
    }

    /// Uncoloured vertex of maximum saturation, then maximum uncoloured degree.
    fn pick(&self) -> Option<(usize, u64)> {
        let uncolored: u64 = (0..self.colors.len())
            .filter(|&v| self.colors[v] == NONE)
            .fold(0, |m, v| m | 1 << v);
        let mut best: Option<(usize, u64, (u32, u32))> = None;
        for v in (0..self.colors.len()).filter(|&v| self.colors[v] == NONE) {
            let sat = self.saturation(v);
            let key = (sat.count_ones(), (self.adj[v] & uncolored).count_ones());
            if best.is_none_or(|(_, _, k)| key > k) {
                best = Some((v, sat, key));
            }
        }
        best.map(|(v, sat, _)| (v, sat))
    }

    fn greedy(&mut self) -> usize {
        let mut used = 0;
        while let Some((v, sat)) = self.pick() {
            let c = (!sat).trailing_zeros() as usize;
            self.colors[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    /// Backtracking search for a colouring with at most `palette` colours.
    fn search(&mut self, used: usize, palette: usize) -> Result<bool, ColoringError> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(ColoringError::BudgetExceeded(self.max_nodes));
        }
        let Some((v, sat)) = self.pick() else {
            return Ok(true);
        };
        for c in 0..palette.min(used + 1) {
            if sat & (1 << c) != 0 {
                continue;
            }
            self.colors[v] = c;
            if self.search(used.max(c + 1), palette)? {
                return Ok(true);
            }
        }
        self.colors[v] = NONE;
        Ok(false)
    }

    fn clique_lower_bound(&self) -> usize {
        let n = self.adj.len();
        let mut best = usize::from(n > 0);
        for v in 0..n {
            let mut cand = self.adj[v];
            let mut size = 1;
            while cand != 0 {
                let w = (0..n)
                    .filter(|&w| cand & (1 << w) != 0)
                    .max_by_key(|&w| ((self.adj[w] & cand).count_ones(), std::cmp::Reverse(w)))
                    .expect("non-empty candidate set");
                size += 1;
                cand &= self.adj[w];
            }
            best = best.max(size);
        }
        best
    }

    fn coloring(&self) -> VertexColoring {
        VertexColoring::from_colors(self.colors.clone())
    }
}

/// A colouring with at most `palette` colours or a proof that none exists.
pub fn exact_color_within(d: &Digraph, palette: usize) -> Result<ExactOutcome, ColoringError> {
    exact_color_within_limits(d, palette, &ExactLimits::default())
}

pub fn exact_color_within_limits(
    d: &Digraph,
    palette: usize,
    limits: &ExactLimits,
) -> Result<ExactOutcome, ColoringError> {
    let cap = limits.max_vertices.min(EXACT_CAP);
    if d.n() > cap {
        return Err(ColoringError::CapExceeded { n: d.n(), cap });
    }
    if d.n() == 0 {
        return Ok(ExactOutcome::Colored(VertexColoring { colors: vec![], palette: 0 }));
    }
    let mut s = Dsatur::new(d, limits.max_nodes);
    if s.greedy() <= palette {
        return Ok(ExactOutcome::Colored(s.coloring()));
    }
    if s.clique_lower_bound() > palette {
        return Ok(ExactOutcome::Unsatisfiable);
    }
    s.colors.fill(NONE);
    if s.search(0, palette)? {
        Ok(ExactOutcome::Colored(s.coloring()))
    } else {
        Ok(ExactOutcome::Unsatisfiable)
    }
}

/// Chromatic number of the underlying graph together with an optimal colouring.
pub fn chromatic_number_exact(d: &Digraph) -> Result<(usize, VertexColoring), ColoringError> {
    if d.n() > CHROMATIC_CAP {
        return Err(ColoringError::CapExceeded { n: d.n(), cap: CHROMATIC_CAP });
    }
    let mut s = Dsatur::new(d, u64::MAX);
    let upper = s.greedy();
    let mut best = s.coloring();
    for k in s.clique_lower_bound()..upper {
        s.colors.fill(NONE);
        if s.search(0, k)? {
            best = s.coloring();
            break;
        }
    }
    Ok((best.palette, best))
}
