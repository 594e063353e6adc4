//! Constructive colorings: the triangle-free and general procedures, the
//! nested layering chain behind them, and the leaf colorers they bottom out
//! in.

mod chain;
mod leaf;
mod recursive;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_proper_coloring, Coloring, Graph, Vertex};

pub use chain::{color_c1, color_c2, color_c3};
pub use leaf::{
    color_forest, color_girth5, color_line_graph, color_rich_square, color_thick_multipartite,
    edge_color_subcubic, greedy_fallback, EdgeColoring,
};
pub use recursive::{color_general, color_triangle_free};

/// How to react when the input turns out to lie outside the class a
/// procedure is meant for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Stop with the first violation as an error.
    #[default]
    Strict,
    /// Greedy-color the offending piece, record the violation, carry on.
    Tolerant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    ContainsK4,
    LayerNotForest,
    LayerGirth,
    Degeneracy,
    K33NotMultipartite,
    UnresolvedPrismOrK222,
    DepthLimit,
}

/// A place where the input broke an assumption of the procedure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub message: String,
    /// Offending vertices, in the ids of the input graph.
    pub witness: Vec<Vertex>,
}

impl Violation {
    pub fn new(kind: ViolationKind, message: impl Into<String>, witness: Vec<Vertex>) -> Self {
        Violation {
            kind,
            message: message.into(),
            witness,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (witness {:?})", self.message, self.witness)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Trivial,
    Component,
    CliqueCutset,
    ThickMultipartite,
    Proper2Cutset,
    LineGraph,
    RichSquare,
    /// Layers colored as forests.
    ForestLayers,
    /// Layers colored with girth-5 greedy.
    C1,
    /// Layers colored with `C1`.
    C2,
    /// Layers colored with `C2`.
    C3,
    Greedy,
}

/// One decision of a colorer, recorded in pre-order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    /// Nesting depth, 0 for a whole component.
    pub depth: usize,
    pub rule: Rule,
    /// Vertices of the piece, in the ids of the input graph.
    pub piece: Vec<Vertex>,
    /// Cutset, pattern or hub vertices behind the decision.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<Vertex>,
    /// For layering rules, the palette of each layer.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub layer_palettes: Vec<usize>,
    /// Palette of the coloring this step produced.
    pub palette: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringResult {
    pub coloring: Coloring,
    pub bound_claimed: usize,
    pub trace: Vec<TraceStep>,
    pub violations: Vec<Violation>,
}

/// Shared state threaded through a coloring run.
pub(crate) struct Ctx {
    pub mode: Mode,
    pub trace: Vec<TraceStep>,
    pub violations: Vec<Violation>,
    pub depth_limit: usize,
}

impl Ctx {
    pub fn new(mode: Mode, n: usize) -> Self {
        Ctx {
            mode,
            trace: Vec::new(),
            violations: Vec::new(),
            depth_limit: n.max(1),
        }
    }

    /// Opens a trace step and returns its index for [`Ctx::close`].
    pub fn open(&mut self, depth: usize, rule: Rule, ids: &[Vertex], witness: Vec<Vertex>) -> usize {
        self.trace.push(TraceStep {
            depth,
            rule,
            piece: ids.to_vec(),
            witness,
            layer_palettes: Vec::new(),
            palette: 0,
        });
        self.trace.len() - 1
    }

    pub fn close(&mut self, step: usize, palette: usize) {
        self.trace[step].palette = palette;
    }

    /// Strict mode: the violation becomes the error. Tolerant mode: it is
    /// recorded and the piece is greedy-colored.
    pub fn violate(&mut self, g: &Graph, ids: &[Vertex], depth: usize, v: Violation) -> Result<Coloring> {
        match self.mode {
            Mode::Strict => Err(Error::ClassViolation(Box::new(v))),
            Mode::Tolerant => {
                self.violations.push(v);
                let c = greedy_fallback(g);
                let s = self.open(depth, Rule::Greedy, ids, Vec::new());
                self.close(s, c.palette_size());
                Ok(c)
            }
        }
    }

    pub fn finish(self, g: &Graph, coloring: Coloring, bound: usize) -> ColoringResult {
        assert!(
            is_proper_coloring(g, &coloring).unwrap_or(false),
            "colorers always return proper colorings"
        );
        ColoringResult {
            coloring,
            bound_claimed: bound,
            trace: self.trace,
            violations: self.violations,
        }
    }
}

/// Maps a violation's witness from piece ids to input ids.
pub(crate) fn lift(mut v: Violation, ids: &[Vertex]) -> Violation {
    for w in &mut v.witness {
        *w = ids[*w];
    }
    v
}

/// Colors each component of `g` with `color` and unions the results; the
/// palette is the largest component palette.
pub(crate) fn per_component(
    ctx: &mut Ctx,
    g: &Graph,
    ids: &[Vertex],
    depth: usize,
    mut color: impl FnMut(&mut Ctx, &Graph, &[Vertex], usize) -> Result<Coloring>,
) -> Result<Coloring> {
    let comps = crate::graph::connected_components(g);
    if comps.len() == 1 {
        return color(ctx, g, ids, depth);
    }
    let mut colors = vec![0; g.n()];
    let mut palette = 0;
    for comp in comps {
        let sub = crate::graph::induced_subgraph(g, &comp);
        let sub_ids: Vec<Vertex> = sub.ids.iter().map(|&v| ids[v]).collect();
        let c = color(ctx, &sub.graph, &sub_ids, depth)?;
        for (i, &v) in sub.ids.iter().enumerate() {
            colors[v] = c.color(i);
        }
        palette = palette.max(c.palette_size());
    }
    Coloring::new(colors, palette)
}

/// Greedy coloring along a vertex order shuffled by `seed`; at most
/// `Δ + 1` colors.
pub fn color_greedy(g: &Graph, seed: u64) -> ColoringResult {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    let mut order: Vec<Vertex> = g.vertices().collect();
    order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    let coloring = crate::graph::greedy_coloring(g, &order);
    let mut ctx = Ctx::new(Mode::Tolerant, g.n());
    let s = ctx.open(0, Rule::Greedy, &order, Vec::new());
    ctx.close(s, coloring.palette_size());
    let bound = if g.n() == 0 { 0 } else { g.max_degree() + 1 };
    ctx.finish(g, coloring, bound)
}
