use serde::Serialize;

use crate::graph::{connected_components, Graph, Vertex};

/// A complete bipartite or complete tripartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultipartiteShape {
    /// Two or three stable sets, each sorted, ordered by smallest member.
    pub parts: Vec<Vec<Vertex>>,
    /// At least two parts have three or more vertices.
    pub thick: bool,
}

/// Recognizes `g` as a complete bipartite or tripartite graph.
///
/// The parts are the components of the complement; `g` qualifies when
/// there are two or three of them and each is a clique of the complement.
pub fn recognize_thick_multipartite(g: &Graph) -> Option<MultipartiteShape> {
    let parts = connected_components(&g.complement());
    if !(2..=3).contains(&parts.len()) || parts.iter().any(|p| !g.is_stable(p)) {
        return None;
    }
    let thick = parts.iter().filter(|p| p.len() >= 3).count() >= 2;
    Some(MultipartiteShape { parts, thick })
}
