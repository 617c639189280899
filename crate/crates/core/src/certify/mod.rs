//! End-to-end pipeline: tree, finalisation, decomposition, per-part
//! colouring or extraction, composition and final verification.

mod report;

pub use report::{certificate_from_json, certificate_to_json, report_to_json, REPORT_SCHEMA};

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{
    color_di2, exact_color_within_limits, greedy_degeneracy_color, product_coloring, Di2Outcome, ExactLimits,
    ExactOutcome,
};
use crate::decompose::{decompose, ArcClass, LevelClass};
use crate::graph::{Digraph, Vertex, VertexColoring};
use crate::search::{Budget, Search};
use crate::subdivision::extract::{extract_from_adc_d1, extract_from_adc_d3, Extraction};
use crate::subdivision::{
    find_antidirected_cycle, find_block_cycle, find_subdivision_bruteforce, verify_subdivision, witness_from_cycle,
    AntidirectedCycle, CyclePattern, SubdivisionWitness,
};
use crate::tree::OutTree;

/// Colour budget allowed for each of the forward and cross parts.
pub fn part_palette(k: usize) -> usize {
    if k == 1 {
        16
    } else {
        24
    }
}

/// Largest palette a colouring certificate may use for a given `k`.
pub fn palette_bound(k: usize) -> usize {
    bound_for(part_palette(k), k)
}

fn bound_for(p: usize, k: usize) -> usize {
    7 * p * p * k
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifyConfig {
    pub root: Vertex,
    /// Reject inputs containing antiparallel pairs.
    pub strict_orientation: bool,
    /// Expansion budget for each search.
    pub budget: u64,
    pub exact: ExactLimits,
    /// After a colouring is found, also look for a witness by exhaustive
    /// cycle search and prefer it when found.
    pub witness_search: bool,
    /// Per-part palette; `None` uses [`part_palette`]. Smaller values
    /// push small inputs into the cycle-search and extraction branches.
    pub part_palette: Option<usize>,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            root: 0,
            strict_orientation: true,
            budget: 10_000_000,
            exact: ExactLimits::default(),
            witness_search: false,
            part_palette: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("digraph is empty")]
    Empty,
    #[error("digraph is not strongly connected")]
    NotStrong,
    #[error("antiparallel arcs between {0} and {1}")]
    Antiparallel(Vertex, Vertex),
    #[error("root {0} out of range")]
    BadRoot(Vertex),
    #[error("certificate failed verification: {0}")]
    Verification(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Colored { coloring: VertexColoring, bound: usize },
    Subdivided { witness: SubdivisionWitness, pattern: CyclePattern },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Colored,
    Subdivided,
    Incomplete,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartTrace {
    pub arcs: usize,
    pub palette: Option<usize>,
    pub route: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitTrace {
    pub arcs: usize,
    pub palette: Option<usize>,
    pub route: String,
    pub s1: usize,
    pub s2: usize,
    pub max_s2_out_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassTrace {
    pub class: usize,
    pub vertices: usize,
    pub back: Option<SplitTrace>,
    pub forward: Option<PartTrace>,
    pub cross: Option<PartTrace>,
    /// Product of the three part palettes.
    pub palette: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counters {
    pub finalize_rotations: usize,
    pub search_expansions: u64,
    pub exact_solves: usize,
    pub cycle_searches: usize,
    pub extractions: usize,
    pub fallbacks: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    pub k: usize,
    pub pattern: CyclePattern,
    pub status: Status,
    pub certificate: Option<Certificate>,
    /// How the final certificate was obtained.
    pub route: String,
    pub reason: Option<String>,
    pub classes: Vec<ClassTrace>,
    pub counters: Counters,
    pub elapsed: Duration,
}

/// Proper on the underlying graph and within `bound` colours.
pub fn verify_coloring(d: &Digraph, c: &VertexColoring, bound: usize) -> bool {
    verify_certificate(d, &Certificate::Colored { coloring: c.clone(), bound }).is_ok()
}

/// Checks a certificate independently of how it was produced.
pub fn verify_certificate(d: &Digraph, cert: &Certificate) -> Result<(), String> {
    match cert {
        Certificate::Colored { coloring, bound } => {
            if coloring.colors.len() != d.n() {
                return Err(format!("colouring covers {} of {} vertices", coloring.colors.len(), d.n()));
            }
            if let Some(&c) = coloring.colors.iter().find(|&&c| c >= coloring.palette) {
                return Err(format!("colour {c} outside palette {}", coloring.palette));
            }
            if coloring.palette > *bound {
                return Err(format!("palette {} exceeds bound {bound}", coloring.palette));
            }
            match coloring.conflict(d) {
                Some((u, v)) => Err(format!("arc {u} -> {v} is monochromatic")),
                None => Ok(()),
            }
        }
        Certificate::Subdivided { witness, pattern } => {
            verify_subdivision(d, witness, pattern).map_err(|e| e.to_string())
        }
    }
}

enum PartResult {
    Colored(VertexColoring, String),
    Witness(SubdivisionWitness, String),
    Incomplete(String),
}

struct Run<'a> {
    d: &'a Digraph,
    t: OutTree,
    k: usize,
    cfg: &'a CertifyConfig,
    pattern: CyclePattern,
    counters: Counters,
}

/// Runs the full pipeline on a strongly connected digraph.
pub fn certify(d: &Digraph, k: usize, cfg: &CertifyConfig) -> Result<PipelineReport, CertifyError> {
    let start = Instant::now();
    if k == 0 {
        return Err(CertifyError::ZeroK);
    }
    if d.n() == 0 {
        return Err(CertifyError::Empty);
    }
    if cfg.root >= d.n() {
        return Err(CertifyError::BadRoot(cfg.root));
    }
    if cfg.strict_orientation {
        if let Some((u, v)) = d.antiparallel_pair() {
            return Err(CertifyError::Antiparallel(u, v));
        }
    }
    if !d.is_strongly_connected() {
        return Err(CertifyError::NotStrong);
    }
    let mut t = OutTree::bfs(d, cfg.root).map_err(|_| CertifyError::NotStrong)?;
    let rotations = t.finalize(d);
    let mut run = Run {
        d,
        t,
        k,
        cfg,
        pattern: CyclePattern::six_block(k),
        counters: Counters { finalize_rotations: rotations, ..Counters::default() },
    };
    let mut report = run.classes();
    if report.status == Status::Colored && cfg.witness_search {
        let mut budget = Budget::new(cfg.budget);
        let r = find_block_cycle(d, &run.pattern, &mut budget);
        run.counters.search_expansions += budget.used;
        if let Search::Found(witness) = r {
            report.status = Status::Subdivided;
            report.route = "block-cycle-search".into();
            report.certificate = Some(Certificate::Subdivided { witness, pattern: run.pattern.clone() });
        }
    }
    if let Some(cert) = &report.certificate {
        verify_certificate(d, cert).map_err(CertifyError::Verification)?;
    }
    report.counters = run.counters;
    report.elapsed = start.elapsed();
    Ok(report)
}

impl Run<'_> {
    fn palette(&self) -> usize {
        self.cfg.part_palette.unwrap_or_else(|| part_palette(self.k))
    }

    fn report(&self, status: Status, certificate: Option<Certificate>, route: String, reason: Option<String>, classes: Vec<ClassTrace>) -> PipelineReport {
        PipelineReport {
            k: self.k,
            pattern: self.pattern.clone(),
            status,
            certificate,
            route,
            reason,
            classes,
            counters: Counters::default(),
            elapsed: Duration::ZERO,
        }
    }

    fn classes(&mut self) -> PipelineReport {
        let dec = decompose(self.d, &self.t, self.k).expect("tree was finalised");
        let mut traces = Vec::new();
        let mut colors = vec![usize::MAX; self.d.n()];
        let mut offset = 0;
        for class in &dec.classes {
            let mut trace = ClassTrace {
                class: class.index,
                vertices: class.vertices.len(),
                back: None,
                forward: None,
                cross: None,
                palette: None,
            };
            let back = match color_di2(self.d, &self.t, class, self.k) {
                Di2Outcome::Witness(e) => {
                    trace.back = Some(SplitTrace {
                        arcs: class.arcs[ArcClass::A2.index()].len(),
                        palette: None,
                        route: e.case.clone(),
                        s1: 0,
                        s2: 0,
                        max_s2_out_degree: 0,
                    });
                    traces.push(trace);
                    return self.subdivided(e.witness, format!("extract:{}", e.case), traces);
                }
                Di2Outcome::Split(s) => {
                    trace.back = Some(SplitTrace {
                        arcs: class.arcs[ArcClass::A2.index()].len(),
                        palette: Some(s.coloring.palette),
                        route: if s.unresolved.is_empty() { "split".into() } else { "split-unresolved".into() },
                        s1: s.s1.len(),
                        s2: s.s2.len(),
                        max_s2_out_degree: s.max_s2_out_degree,
                    });
                    s.coloring
                }
            };
            let mut parts = Vec::new();
            for kind in [ArcClass::A1, ArcClass::A3] {
                let arcs = class.arcs[kind.index()].len();
                let result = self.color_part(class, kind);
                let (palette, route) = match &result {
                    PartResult::Colored(c, r) => (Some(c.palette), r.clone()),
                    PartResult::Witness(_, r) => (None, r.clone()),
                    PartResult::Incomplete(r) => (None, format!("incomplete: {r}")),
                };
                let pt = Some(PartTrace { arcs, palette, route: route.clone() });
                if kind == ArcClass::A1 {
                    trace.forward = pt;
                } else {
                    trace.cross = pt;
                }
                match result {
                    PartResult::Colored(c, _) => parts.push(c),
                    PartResult::Witness(w, r) => {
                        traces.push(trace);
                        return self.subdivided(w, r, traces);
                    }
                    PartResult::Incomplete(r) => {
                        traces.push(trace);
                        return self.report(Status::Incomplete, None, "incomplete".into(), Some(r), traces);
                    }
                }
            }
            let combined = product_coloring(&back, &parts[0]).and_then(|c| product_coloring(&c, &parts[1]));
            let combined = combined.expect("part colourings cover the class");
            trace.palette = Some(combined.palette);
            for (i, &v) in class.vertices.iter().enumerate() {
                colors[v] = offset + combined.colors[i];
            }
            offset += combined.palette;
            traces.push(trace);
        }
        let bound = bound_for(self.palette(), self.k);
        let coloring = VertexColoring { colors, palette: offset };
        if coloring.palette > bound {
            let reason = format!("composed palette {} exceeds bound {bound}", coloring.palette);
            return self.report(Status::Incomplete, None, "incomplete".into(), Some(reason), traces);
        }
        let cert = Certificate::Colored { coloring, bound };
        self.report(Status::Colored, Some(cert), "decomposition".into(), None, traces)
    }

    fn subdivided(&self, witness: SubdivisionWitness, route: String, traces: Vec<ClassTrace>) -> PipelineReport {
        let cert = Certificate::Subdivided { witness, pattern: self.pattern.clone() };
        self.report(Status::Subdivided, Some(cert), route, None, traces)
    }

    fn color_part(&mut self, class: &LevelClass, kind: ArcClass) -> PartResult {
        let part = class.part(kind);
        let palette = self.palette();
        let greedy = greedy_degeneracy_color(&part);
        if greedy.palette <= palette {
            return PartResult::Colored(greedy, "greedy".into());
        }
        self.counters.exact_solves += 1;
        if let Ok(ExactOutcome::Colored(c)) = exact_color_within_limits(&part, palette, &self.cfg.exact) {
            return PartResult::Colored(c, "exact".into());
        }
        let min_len = if self.k == 1 { 6 } else { 8 };
        let mut budget = Budget::new(self.cfg.budget);
        self.counters.cycle_searches += 1;
        let found = find_antidirected_cycle(&part, min_len, &mut budget);
        self.counters.search_expansions += budget.used;
        let local = match found {
            Search::Found(c) => c,
            Search::NotFound => return PartResult::Incomplete("no colouring within the part palette and no long antidirected cycle found".into()),
            Search::BudgetExceeded => return PartResult::Incomplete("antidirected cycle search exceeded its budget".into()),
        };
        let cycle = AntidirectedCycle { vertices: local.vertices.iter().map(|&i| class.vertices[i]).collect() };
        if cycle.len() == 6 {
            if let Some(w) = witness_from_cycle(self.d, &cycle.vertices, &self.pattern) {
                return PartResult::Witness(w, "antidirected-hexagon".into());
            }
        }
        self.counters.extractions += 1;
        let extracted = if kind == ArcClass::A1 {
            extract_from_adc_d1(self.d, &self.t, &cycle, self.k)
        } else {
            extract_from_adc_d3(self.d, &self.t, &cycle, self.k)
        };
        match extracted {
            Ok(Extraction { witness, case }) => PartResult::Witness(witness, format!("extract:{case}")),
            Err(_) => self.fallback(&cycle),
        }
    }

    /// Exhaustive search, first near the cycle and then on the whole digraph.
    fn fallback(&mut self, cycle: &AntidirectedCycle) -> PartResult {
        self.counters.fallbacks += 1;
        let mut budget = Budget::new(self.cfg.budget);
        let mut keep = vec![false; self.d.n()];
        for &v in &cycle.vertices {
            let mut u = v;
            keep[u] = true;
            while let Some(p) = self.t.parent(u) {
                u = p;
                keep[u] = true;
            }
        }
        let focus: Vec<Vertex> = (0..self.d.n()).filter(|&v| keep[v]).collect();
        let sub = self.d.induced(&focus);
        let local = find_subdivision_bruteforce(&sub, &self.pattern, &mut budget);
        let result = if let Search::Found(w) = local {
            let mut w = w;
            for p in &mut w.paths {
                p.iter_mut().for_each(|v| *v = focus[*v]);
            }
            PartResult::Witness(w, "oracle-fallback:focused".into())
        } else {
            match find_subdivision_bruteforce(self.d, &self.pattern, &mut budget) {
                Search::Found(w) => PartResult::Witness(w, "oracle-fallback".into()),
                Search::NotFound => PartResult::Incomplete("exhaustive search found no witness".into()),
                Search::BudgetExceeded => PartResult::Incomplete("exhaustive search exceeded its budget".into()),
            }
        };
        self.counters.search_expansions += budget.used;
        result
    }
}
