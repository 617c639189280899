use super::{CyclePattern, Direction, SubdivisionWitness};
use crate::graph::{Digraph, Vertex};
use crate::search::{Budget, Search, Stop};

struct Oracle<'a> {
    d: &'a Digraph,
    p: &'a CyclePattern,
    /// Whether `b_0` is a source.
    first_source: bool,
    branch: Vec<Vertex>,
    paths: Vec<Vec<Vertex>>,
    used: Vec<bool>,
    budget: &'a mut Budget,
}

type R = Result<(), Stop<SubdivisionWitness>>;

impl Oracle<'_> {
    fn is_source(&self, j: usize) -> bool {
        j.is_multiple_of(2) == self.first_source
    }

    fn direction(&self, j: usize) -> Direction {
        if self.is_source(j) {
            Direction::Forward
        } else {
            Direction::Backward
        }
    }

    fn role_ok(&self, v: Vertex, j: usize) -> bool {
        if self.is_source(j) {
            self.d.out_degree(v) >= 2
        } else {
            self.d.in_degree(v) >= 2
        }
    }

    /// Chooses `b_{j+1}` and then the path for block `j`.
    fn block(&mut self, j: usize) -> R {
        let n = self.p.len();
        if j == n {
            let witness = SubdivisionWitness {
                paths: self.paths.clone(),
                directions: (0..n).map(|i| self.direction(i)).collect(),
            };
            return Err(Stop::Found(witness));
        }
        if j + 1 == n {
            let b0 = self.branch[0];
            return self.connect(j, b0);
        }
        for v in 0..self.d.n() {
            if self.used[v] || !self.role_ok(v, j + 1) {
                continue;
            }
            if !self.budget.tick() {
                return Err(Stop::Budget);
            }
            self.used[v] = true;
            self.branch.push(v);
            let r = self.connect(j, v);
            self.branch.pop();
            self.used[v] = false;
            r?;
        }
        Ok(())
    }

    /// Enumerates internally unused directed paths between `b_j` and `target`
    /// with the orientation block `j` requires.
    fn connect(&mut self, j: usize, target: Vertex) -> R {
        let bj = self.branch[j];
        let forward = self.is_source(j);
        let mut walk = vec![bj];
        self.extend(j, target, forward, &mut walk)
    }

    fn extend(&mut self, j: usize, target: Vertex, forward: bool, walk: &mut Vec<Vertex>) -> R {
        if !self.budget.tick() {
            return Err(Stop::Budget);
        }
        let last = *walk.last().unwrap();
        let next: Vec<Vertex> = if forward {
            self.d.out_neighbors(last).to_vec()
        } else {
            self.d.in_neighbors(last).to_vec()
        };
        for w in next {
            if w == target {
                if walk.len() >= self.p.0[j] {
                    let mut path = walk.clone();
                    path.push(w);
                    if !forward {
                        path.reverse();
                    }
                    self.paths.push(path);
                    let r = self.block(j + 1);
                    self.paths.pop();
                    r?;
                }
                continue;
            }
            if self.used[w] {
                continue;
            }
            self.used[w] = true;
            walk.push(w);
            let r = self.extend(j, target, forward, walk);
            walk.pop();
            self.used[w] = false;
            r?;
        }
        Ok(())
    }
}

/// Exhaustive search for a subdivision of `p`: branch vertices are chosen
/// one at a time and joined by internally disjoint directed paths.
/// `NotFound` is authoritative.
pub fn find_subdivision_bruteforce(d: &Digraph, p: &CyclePattern, budget: &mut Budget) -> Search<SubdivisionWitness> {
    let n = d.n();
    let mut o = Oracle {
        d,
        p,
        first_source: true,
        branch: Vec::new(),
        paths: Vec::new(),
        used: vec![false; n],
        budget,
    };
    let run = (|| {
        if p.is_empty() || p.len() % 2 == 1 || p.blocks().iter().sum::<usize>() > n {
            return Ok(());
        }
        for first_source in [true, false] {
            o.first_source = first_source;
            for b0 in 0..n {
                if !o.role_ok(b0, 0) {
                    continue;
                }
                o.used[b0] = true;
                o.branch = vec![b0];
                let r = o.block(0);
                o.used[b0] = false;
                r?;
            }
        }
        Ok(())
    })();
    Stop::into_search(run)
}
