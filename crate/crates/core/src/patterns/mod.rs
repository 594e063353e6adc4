//! Detectors for the induced structures the colorers forbid or split on.
//!
//! Every detector returns a [`PatternWitness`] whose vertex set can be
//! re-checked with [`PatternWitness::verify`], which goes through the
//! definition-level checkers in [`check`] rather than the detector code.

pub mod check;
mod detect;
mod line_graph;
mod multipartite;
mod rich_square;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::{Graph, Vertex};

pub use detect::{
    enumerate_holes, find_boat, find_c4, find_four_wheel, find_hole, find_k222, find_k33, find_k4,
    find_prism, find_triangle, find_wheel, for_each_hole,
};
pub(crate) use detect::{grow_path, squares};
pub use line_graph::{recognize_line_graph_subcubic, KrauszPartition};
pub use multipartite::{recognize_thick_multipartite, MultipartiteShape};
pub use rich_square::find_rich_square;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    Triangle,
    C4,
    Hole,
    K33,
    K222,
    Prism,
    Boat,
    FourWheel,
    Wheel,
    RichSquare,
}

impl PatternKind {
    pub const ALL: [PatternKind; 10] = [
        PatternKind::Triangle,
        PatternKind::C4,
        PatternKind::Hole,
        PatternKind::K33,
        PatternKind::K222,
        PatternKind::Prism,
        PatternKind::Boat,
        PatternKind::FourWheel,
        PatternKind::Wheel,
        PatternKind::RichSquare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Triangle => "triangle",
            PatternKind::C4 => "c4",
            PatternKind::Hole => "hole",
            PatternKind::K33 => "k33",
            PatternKind::K222 => "k222",
            PatternKind::Prism => "prism",
            PatternKind::Boat => "boat",
            PatternKind::FourWheel => "four_wheel",
            PatternKind::Wheel => "wheel",
            PatternKind::RichSquare => "rich_square",
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.to_ascii_lowercase().replace('-', "_");
        PatternKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| format!("unknown pattern `{s}`"))
    }
}

/// Role annotations attached to a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Roles {
    None,
    /// A hole in cyclic order.
    Cycle { order: Vec<Vertex> },
    /// Hub of a wheel, boat or 4-wheel, with its hole in cyclic order.
    Apex { apex: Vertex, hole: Vec<Vertex> },
    /// The two stable sides of a `K_{3,3}`.
    Sides { left: Vec<Vertex>, right: Vec<Vertex> },
    /// The three non-adjacent pairs of a `K_{2,2,2}`.
    Pairs { pairs: Vec<(Vertex, Vertex)> },
    /// Triangles `a` and `b` with `paths[k]` running from `a[k]` to `b[k]`.
    Prism {
        triangles: [[Vertex; 3]; 2],
        paths: Vec<Vec<Vertex>>,
    },
    /// Square `u1 u2 u3 u4` in cyclic order; each link runs from the end
    /// seeing `{u1,u2}` or `{u1,u4}` to the opposite end.
    RichSquare {
        square: [Vertex; 4],
        links: Vec<Vec<Vertex>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    /// Sorted vertex set.
    pub vertices: Vec<Vertex>,
    pub roles: Roles,
}

impl PatternWitness {
    pub fn new(kind: PatternKind, mut vertices: Vec<Vertex>, roles: Roles) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        PatternWitness {
            kind,
            vertices,
            roles,
        }
    }

    /// Re-checks the witness against the definition of its kind.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        if !check::induces(g, self.kind, &self.vertices) {
            return false;
        }
        match &self.roles {
            Roles::Cycle { order } => is_cyclic_order(g, order),
            Roles::Apex { apex, hole } => {
                is_cyclic_order(g, hole) && !hole.contains(apex) && hole.len() + 1 == self.vertices.len()
            }
            Roles::Sides { left, right } => {
                g.is_stable(left)
                    && g.is_stable(right)
                    && left.iter().all(|&u| right.iter().all(|&v| g.has_edge(u, v)))
            }
            Roles::Pairs { pairs } => pairs.iter().all(|&(u, v)| !g.has_edge(u, v)),
            Roles::Prism { triangles, paths } => {
                triangles.iter().all(|t| g.is_clique(t))
                    && paths.len() == 3
                    && paths.iter().enumerate().all(|(k, p)| {
                        p.first() == Some(&triangles[0][k])
                            && p.last() == Some(&triangles[1][k])
                            && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
                    })
            }
            Roles::RichSquare { square, links } => {
                is_cyclic_order(g, square)
                    && links.len() >= 2
                    && links.iter().map(Vec::len).sum::<usize>() + 4 == self.vertices.len()
            }
            Roles::None => true,
        }
    }
}

fn is_cyclic_order(g: &Graph, order: &[Vertex]) -> bool {
    let k = order.len();
    k >= 3 && (0..k).all(|i| g.has_edge(order[i], order[(i + 1) % k]))
}

/// Runs the detector for `kind`.
pub fn find(g: &Graph, kind: PatternKind) -> Option<PatternWitness> {
    match kind {
        PatternKind::Triangle => find_triangle(g),
        PatternKind::C4 => find_c4(g),
        PatternKind::Hole => find_hole(g, 4, None),
        PatternKind::K33 => find_k33(g),
        PatternKind::K222 => find_k222(g),
        PatternKind::Prism => find_prism(g),
        PatternKind::Boat => find_boat(g),
        PatternKind::FourWheel => find_four_wheel(g),
        PatternKind::Wheel => find_wheel(g),
        PatternKind::RichSquare => find_rich_square(g),
    }
}
