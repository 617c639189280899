use super::recipe::witness_from_walk;
use super::{CyclePattern, SubdivisionWitness};
use crate::graph::{Digraph, Vertex};
use crate::search::{Budget, Search, Stop};

struct Walk<'a> {
    d: &'a Digraph,
    p: &'a CyclePattern,
    path: Vec<Vertex>,
    fwd: Vec<bool>,
    on_path: Vec<bool>,
    min_len: usize,
    budget: &'a mut Budget,
}

impl Walk<'_> {
    fn try_close(&self, changes: usize) -> Option<SubdivisionWitness> {
        let (first, last) = (self.path[0], *self.path.last().unwrap());
        for close in [true, false] {
            let present = if close { self.d.has_arc(last, first) } else { self.d.has_arc(first, last) };
            if !present {
                continue;
            }
            let last_dir = *self.fwd.last().unwrap();
            let cyclic = changes + usize::from(close != last_dir) + usize::from(close != self.fwd[0]);
            if cyclic != self.p.len() {
                continue;
            }
            let mut fwd = self.fwd.clone();
            fwd.push(close);
            if let Some(w) = witness_from_walk(self.d, &self.path, &fwd, self.p) {
                return Some(w);
            }
        }
        None
    }

    fn grow(&mut self, changes: usize) -> Result<(), Stop<SubdivisionWitness>> {
        if !self.budget.tick() {
            return Err(Stop::Budget);
        }
        if self.path.len() >= self.min_len.max(3) {
            if let Some(w) = self.try_close(changes) {
                return Err(Stop::Found(w));
            }
        }
        let last = *self.path.last().unwrap();
        let first = self.path[0];
        for w in self.d.underlying_neighbors(last) {
            if w <= first || self.on_path[w] {
                continue;
            }
            for dir in [true, false] {
                let present = if dir { self.d.has_arc(last, w) } else { self.d.has_arc(w, last) };
                if !present {
                    continue;
                }
                let c = changes + usize::from(self.fwd.last().is_some_and(|&prev| prev != dir));
                if c > self.p.len() {
                    continue;
                }
                self.on_path[w] = true;
                self.path.push(w);
                self.fwd.push(dir);
                let r = self.grow(c);
                self.fwd.pop();
                self.path.pop();
                self.on_path[w] = false;
                r?;
            }
        }
        Ok(())
    }
}

/// Searches cycles of the underlying graph, tracking direction changes,
/// for one whose blocks realise pattern `p`. Complete when it returns
/// `NotFound`.
pub fn find_block_cycle(d: &Digraph, p: &CyclePattern, budget: &mut Budget) -> Search<SubdivisionWitness> {
    let n = d.n();
    let min_len = p.blocks().iter().sum::<usize>();
    let mut walk = Walk { d, p, path: Vec::new(), fwd: Vec::new(), on_path: vec![false; n], min_len, budget };
    let run = (|| {
        for s in 0..n {
            walk.path = vec![s];
            walk.on_path[s] = true;
            let r = walk.grow(0);
            walk.on_path[s] = false;
            r?;
        }
        Ok(())
    })();
    Stop::into_search(run)
}
