//! Exhaustive verification suites over enumerated graphs.
//!
//! Each suite streams the isomorphism classes on `n` vertices through a
//! set of hereditary filters and runs one check per surviving graph.
//! Results are aggregated in enumeration order, so a report depends only
//! on the suite, the range and the seed.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::colorers::{color_general, color_girth5, color_triangle_free, edge_color_subcubic, Mode};
use crate::decompose::{maximal_flat_paths, reduce_flat_path};
use crate::error::{Error, Result};
use crate::graph::{bfs_layering, is_proper_coloring, Graph, Vertex};
use crate::io::to_graph6;
use crate::layering::{check_upstairs_path, classify_confluence, find_confluence, upstairs_path, ConfluenceKind};
use crate::patterns::{enumerate_holes, find_triangle};

use super::{
    chromatic_number_exact, classify_hole_attachment, contains_isk4_unbounded, enumerate_graphs,
    verify_layer_forests, EnumOptions, Filter,
};

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 14] = [
    "flat-path-reduction",
    "upstairs-path",
    "confluence",
    "hole-attachment",
    "layer-forests",
    "subcubic-edge-coloring",
    "wheel-free-chi",
    "girth5-degree",
    "triangle-free-bound",
    "general-bound",
    "chi-at-most-4",
    "triangle-free-chi-at-most-3",
    "min-degree-3",
    "min-degree-2",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Restrict to connected graphs (always on for the layering suites).
    pub connected: bool,
    /// Attachment sets sampled per hole when exhaustive search is too big.
    pub samples: usize,
    /// Worker threads; `None` uses the global pool.
    #[serde(skip)]
    pub jobs: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            connected: false,
            samples: 200,
            jobs: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteParameters {
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    pub connected: bool,
    pub filters: Vec<Filter>,
    /// What `max_value` measures.
    pub statistic: &'static str,
    /// Largest value the checked statement allows.
    pub threshold: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteCount {
    pub n: usize,
    /// Graphs that passed the filters.
    pub graphs: usize,
    /// Individual checks run on them.
    pub checks: usize,
    pub max_value: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteViolation {
    pub graph6: String,
    pub message: String,
}

/// A graph attaining the largest observed value, or exceeding the threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extremal {
    pub graph6: String,
    pub value: usize,
    pub exceeds_threshold: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub parameters: SuiteParameters,
    pub counts: Vec<SuiteCount>,
    pub graphs: usize,
    pub checks: usize,
    pub max_value: Option<usize>,
    pub violations: Vec<SuiteViolation>,
    pub extremal: Vec<Extremal>,
    /// Milliseconds; filled in only by callers that ask for it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Graphs attaining the maximum kept per report, beyond those over threshold.
const EXTREMAL_CAP: usize = 8;

#[derive(Default)]
struct Outcome {
    checks: usize,
    value: Option<usize>,
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }
}

struct Suite {
    filters: &'static [Filter],
    connected: bool,
    statistic: &'static str,
    threshold: usize,
    run: fn(&Graph, &SuiteOptions) -> Outcome,
}

fn suite(name: &str) -> Option<Suite> {
    use Filter::*;
    let s = |filters, connected, statistic, threshold, run| Suite {
        filters,
        connected,
        statistic,
        threshold,
        run,
    };
    Some(match name {
        "flat-path-reduction" => s(&[Isk4Free], false, "flat paths reduced", usize::MAX, flat_path_reduction),
        "upstairs-path" => s(&[], true, "upstairs path length", usize::MAX, upstairs),
        "confluence" => s(&[], true, "confluence size", usize::MAX, confluence),
        "hole-attachment" => s(&[Isk4Free, TriangleFree, K33Free], false, "attachment case", 3, hole_attachment),
        "layer-forests" => s(&[Isk4Free, TriangleFree, K33Free], false, "BFS roots checked", usize::MAX, layer_forests),
        "subcubic-edge-coloring" => s(&[Subcubic], false, "edge colors", 4, subcubic_edges),
        "wheel-free-chi" => s(&[Isk4Free, WheelFree], false, "chromatic number", 3, chi),
        "girth5-degree" => s(&[Isk4Free, Girth5], false, "minimum degree", 2, girth5),
        "triangle-free-bound" => s(&[Isk4Free, TriangleFree], false, "colors used", 4, triangle_free_bound),
        "general-bound" => s(&[Isk4Free], false, "colors used", 24, general_bound),
        "chi-at-most-4" => s(&[Isk4Free], false, "chromatic number", 4, chi),
        "triangle-free-chi-at-most-3" => s(&[Isk4Free, TriangleFree], false, "chromatic number", 3, chi),
        "min-degree-3" => s(&[Isk4Free, K33Free, PrismFree, K222Free], false, "minimum degree", 3, min_degree),
        "min-degree-2" => s(&[Isk4Free, K33Free, TriangleFree], false, "minimum degree", 2, min_degree),
        _ => return None,
    })
}

/// Runs `name` over every graph with `n` in `range`.
pub fn run_suite(name: &str, range: RangeInclusive<usize>, opts: &SuiteOptions) -> Result<SuiteReport> {
    let s = suite(name).ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    match opts.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Precondition(format!("cannot start {k} workers: {e}")))?
            .install(|| execute(name, &s, range, opts)),
        None => execute(name, &s, range, opts),
    }
}

fn execute(name: &str, s: &Suite, range: RangeInclusive<usize>, opts: &SuiteOptions) -> Result<SuiteReport> {
    let connected = opts.connected || s.connected;
    let mut enum_opts = EnumOptions {
        connected,
        ..EnumOptions::default()
    };
    for &f in s.filters {
        enum_opts = enum_opts.with(f);
    }
    let mut report = SuiteReport {
        suite: name.to_string(),
        parameters: SuiteParameters {
            n_min: *range.start(),
            n_max: *range.end(),
            seed: opts.seed,
            connected,
            filters: s.filters.to_vec(),
            statistic: s.statistic,
            threshold: s.threshold,
        },
        counts: Vec::new(),
        graphs: 0,
        checks: 0,
        max_value: None,
        violations: Vec::new(),
        extremal: Vec::new(),
        wall_time_ms: None,
    };
    let mut at_max: Vec<(usize, String)> = Vec::new();
    for n in range {
        let graphs = enumerate_graphs(n, &enum_opts)?;
        let outcomes: Vec<Outcome> = graphs.par_iter().map(|g| (s.run)(g, opts)).collect();
        let mut count = SuiteCount {
            n,
            graphs: graphs.len(),
            checks: 0,
            max_value: None,
        };
        for (g, mut o) in graphs.iter().zip(outcomes) {
            if let (Some(v), true) = (o.value, s.threshold < usize::MAX) {
                o.check(v <= s.threshold, || format!("{} {v} exceeds {}", s.statistic, s.threshold));
            }
            count.checks += o.checks;
            let code = || to_graph6(g);
            for message in o.failures {
                report.violations.push(SuiteViolation { graph6: code(), message });
            }
            let Some(v) = o.value else { continue };
            count.max_value = count.max_value.max(Some(v));
            if v > s.threshold {
                report.extremal.push(Extremal {
                    graph6: code(),
                    value: v,
                    exceeds_threshold: true,
                });
            }
            match report.max_value {
                Some(m) if v < m => {}
                Some(m) if v == m => {
                    if at_max.len() < EXTREMAL_CAP {
                        at_max.push((v, code()));
                    }
                }
                _ => {
                    report.max_value = Some(v);
                    at_max = vec![(v, code())];
                }
            }
        }
        report.graphs += count.graphs;
        report.checks += count.checks;
        report.counts.push(count);
    }
    for (value, graph6) in at_max {
        if value <= s.threshold {
            report.extremal.push(Extremal {
                graph6,
                value,
                exceeds_threshold: false,
            });
        }
    }
    Ok(report)
}

fn flat_path_reduction(g: &Graph, _: &SuiteOptions) -> Outcome {
    let mut o = Outcome::default();
    let paths = maximal_flat_paths(g);
    o.value = Some(paths.len());
    for p in paths {
        let ok = match reduce_flat_path(g, &p) {
            Ok((h, _)) => matches!(contains_isk4_unbounded(&h), Ok(None)),
            Err(_) => false,
        };
        o.check(ok, || format!("reducing {:?} creates an ISK4", p.vertices));
    }
    o
}

/// Same-layer pairs (or triples) below every root.
fn layer_tuples<const K: usize>(g: &Graph, mut visit: impl FnMut(&crate::graph::Layering, usize, [Vertex; K])) {
    for root in g.vertices() {
        let l = bfs_layering(g, root).expect("root in range");
        for (i, layer) in l.layers.iter().enumerate().skip(1) {
            let mut idx = [0usize; K];
            let k = layer.len();
            if k < K {
                continue;
            }
            for (j, slot) in idx.iter_mut().enumerate() {
                *slot = j;
            }
            loop {
                visit(&l, i, idx.map(|j| layer[j]));
                let Some(p) = (0..K).rev().find(|&p| idx[p] < k - K + p) else { break };
                idx[p] += 1;
                for q in p + 1..K {
                    idx[q] = idx[q - 1] + 1;
                }
            }
        }
    }
}

fn upstairs(g: &Graph, _: &SuiteOptions) -> Outcome {
    let mut o = Outcome::default();
    layer_tuples::<2>(g, |l, i, [x, y]| {
        let ok = match upstairs_path(g, l, i, x, y) {
            Ok(p) => {
                o.value = o.value.max(Some(p.len()));
                check_upstairs_path(g, l, i, x, y, &p)
            }
            Err(_) => false,
        };
        o.check(ok, || format!("upstairs path {x}-{y} from root {} fails", l.root));
    });
    o
}

fn confluence(g: &Graph, _: &SuiteOptions) -> Outcome {
    let triangle_free = find_triangle(g).is_none();
    let mut o = Outcome::default();
    layer_tuples::<3>(g, |l, i, [x, y, z]| {
        let ok = match find_confluence(g, l, i, x, y, z) {
            Ok(c) => {
                o.value = o.value.max(Some(c.vertices.len()));
                let upper_ok = c
                    .vertices
                    .iter()
                    .all(|&v| l.layer_of(v).is_some_and(|j| j < i) || [x, y, z].contains(&v));
                classify_confluence(g, &c.vertices, [x, y, z]).is_some()
                    && upper_ok
                    && (!triangle_free || c.kind == ConfluenceKind::Type1)
            }
            Err(_) => false,
        };
        o.check(ok, || format!("confluence of {x},{y},{z} from root {} fails", l.root));
    });
    o
}

/// Largest attachment set searched exhaustively.
const EXHAUSTIVE_ATTACH: usize = 12;

fn hole_attachment(g: &Graph, opts: &SuiteOptions) -> Outcome {
    let mut o = Outcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ super::canonical_code(g) as u64);
    for hole in enumerate_holes(g) {
        let around: Vec<Vertex> = g
            .vertices()
            .filter(|v| !hole.contains(v) && hole.iter().any(|&c| g.has_edge(*v, c)))
            .collect();
        let full: u64 = hole.iter().fold(0, |m, &c| m | 1 << c);
        let covers = |s: &[Vertex]| s.iter().fold(0u64, |m, &u| m | g.mask(u)) & full == full;
        let try_set = |s: &[Vertex], o: &mut Outcome| {
            match classify_hole_attachment(g, &hole, s) {
                Ok(Some(a)) => {
                    o.value = o.value.max(Some(a.case as usize));
                    o.check(true, String::new);
                }
                other => o.check(false, || format!("hole {hole:?} with S = {s:?}: {other:?}")),
            }
        };
        if around.len() <= EXHAUSTIVE_ATTACH {
            for mask in 1u32..1 << around.len() {
                let s: Vec<Vertex> = (0..around.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| around[i])
                    .collect();
                if covers(&s) {
                    try_set(&s, &mut o);
                }
            }
        } else {
            let mut taken = 0;
            let mut attempts = 0;
            while taken < opts.samples && attempts < opts.samples * 64 {
                attempts += 1;
                let mut pool = around.clone();
                pool.shuffle(&mut rng);
                let mut s = Vec::new();
                for u in pool {
                    if covers(&s) {
                        break;
                    }
                    s.push(u);
                }
                s.sort_unstable();
                try_set(&s, &mut o);
                taken += 1;
            }
        }
    }
    o
}

fn layer_forests(g: &Graph, _: &SuiteOptions) -> Outcome {
    let mut o = Outcome {
        value: Some(g.n()),
        ..Outcome::default()
    };
    let r = verify_layer_forests(g);
    o.check(r.is_ok(), || format!("{:?}", r.unwrap_err()));
    o
}

fn subcubic_edges(g: &Graph, _: &SuiteOptions) -> Outcome {
    let mut o = Outcome::default();
    let ec = edge_color_subcubic(g);
    o.value = Some(ec.palette);
    o.check(ec.is_proper(g.n()) && ec.within_contract, || "improper edge coloring".into());
    o.check(ec.palette <= 4, || format!("{} edge colors", ec.palette));
    o
}

fn chi(g: &Graph, _: &SuiteOptions) -> Outcome {
    let mut o = Outcome::default();
    match chromatic_number_exact(g) {
        Ok(k) => o.value = Some(k),
        Err(e) => o.check(false, || e.to_string()),
    }
    o
}

fn girth5(g: &Graph, _: &SuiteOptions) -> Outcome {
    let mut o = Outcome::default();
    if g.n() == 0 {
        return o;
    }
    o.value = Some(g.min_degree());
    match color_girth5(g) {
        Ok(c) => {
            let ok = is_proper_coloring(g, &c).unwrap_or(false) && c.palette_size() <= 3;
            o.check(ok, || format!("girth-5 coloring with {} colors", c.palette_size()));
        }
        Err(e) => o.check(false, || e.to_string()),
    }
    o
}

fn bounded(g: &Graph, r: Result<crate::colorers::ColoringResult>, bound: usize) -> Outcome {
    let mut o = Outcome::default();
    match r {
        Ok(r) => {
            let k = r.coloring.colors_used();
            o.value = Some(k);
            let ok = is_proper_coloring(g, &r.coloring).unwrap_or(false) && k <= bound && r.violations.is_empty();
            o.check(ok, || format!("{k} colors, {} violations", r.violations.len()));
        }
        Err(e) => o.check(false, || e.to_string()),
    }
    o
}

fn triangle_free_bound(g: &Graph, _: &SuiteOptions) -> Outcome {
    bounded(g, color_triangle_free(g, Mode::Strict), 4)
}

fn general_bound(g: &Graph, _: &SuiteOptions) -> Outcome {
    bounded(g, color_general(g, Mode::Strict), 24)
}

fn min_degree(g: &Graph, _: &SuiteOptions) -> Outcome {
    Outcome {
        value: (g.n() > 0).then(|| g.min_degree()),
        ..Outcome::default()
    }
}
