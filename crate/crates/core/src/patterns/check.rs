//! Definition-level checkers. Each takes the whole graph `h` (usually an
//! induced subgraph) and decides whether `h` itself is the named structure.
//! They share no code with the detectors and serve as the standalone check
//! for every witness.

use crate::graph::{connected_components, induced_subgraph, Graph, Vertex};

use super::PatternKind;

/// Does `G|s` have the shape `kind`?
pub fn induces(g: &Graph, kind: PatternKind, s: &[Vertex]) -> bool {
    let h = induced_subgraph(g, s).graph;
    match kind {
        PatternKind::Triangle => h.n() == 3 && h.m() == 3,
        PatternKind::C4 => is_hole_graph(&h) && h.n() == 4,
        PatternKind::Hole => is_hole_graph(&h),
        PatternKind::K33 => is_k33_graph(&h),
        PatternKind::K222 => is_k222_graph(&h),
        PatternKind::Prism => is_prism_graph(&h),
        PatternKind::Boat => is_boat_graph(&h),
        PatternKind::FourWheel => is_boat_graph(&h) && h.n() == 5,
        PatternKind::Wheel => is_wheel_graph(&h),
        PatternKind::RichSquare => is_rich_square_graph(&h),
    }
}

pub fn is_cycle_graph(h: &Graph) -> bool {
    h.n() >= 3 && h.vertices().all(|v| h.degree(v) == 2) && h.is_connected()
}

pub fn is_hole_graph(h: &Graph) -> bool {
    h.n() >= 4 && is_cycle_graph(h)
}

/// The only triangle-free cubic graph on six vertices is `K_{3,3}`.
pub fn is_k33_graph(h: &Graph) -> bool {
    if h.n() != 6 || h.vertices().any(|v| h.degree(v) != 3) {
        return false;
    }
    let e = h.edges();
    !e.iter().any(|&(u, v)| (0..6).any(|w| h.has_edge(u, w) && h.has_edge(v, w)))
}

/// The only 4-regular graph on six vertices is the octahedron.
pub fn is_k222_graph(h: &Graph) -> bool {
    h.n() == 6 && h.vertices().all(|v| h.degree(v) == 4)
}

/// Is `h` an induced path (as a whole graph)? Returns the vertex order.
pub fn path_order(h: &Graph) -> Option<Vec<Vertex>> {
    if h.n() == 0 || h.m() + 1 != h.n() || !h.is_connected() || h.max_degree() > 2 {
        return None;
    }
    if h.n() == 1 {
        return Some(vec![0]);
    }
    let start = h.vertices().find(|&v| h.degree(v) == 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = h.neighbors(cur).iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order)
}

pub fn is_prism_graph(h: &Graph) -> bool {
    if !h.is_connected() || h.vertices().any(|v| !(2..=3).contains(&h.degree(v))) {
        return false;
    }
    let branch: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) == 3).collect();
    if branch.len() != 6 {
        return false;
    }
    // Split the six cubic vertices into two triangles in every possible way.
    for mask in 0u32..64 {
        if mask.count_ones() != 3 || mask & 1 == 0 {
            continue;
        }
        let (a, b): (Vec<Vertex>, Vec<Vertex>) =
            (0..6).partition(|&i| mask >> i & 1 == 1);
        let a: Vec<Vertex> = a.into_iter().map(|i| branch[i]).collect();
        let b: Vec<Vertex> = b.into_iter().map(|i| branch[i]).collect();
        if !h.is_clique(&a) || !h.is_clique(&b) {
            continue;
        }
        let triangle_edges: Vec<(Vertex, Vertex)> = [&a, &b]
            .iter()
            .flat_map(|t| [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])])
            .collect();
        let rest: Vec<(Vertex, Vertex)> = h
            .edges()
            .into_iter()
            .filter(|&(u, v)| !triangle_edges.contains(&(u.min(v), u.max(v))))
            .collect();
        let f = Graph::from_edges(h.n(), &rest).unwrap();
        let comps = connected_components(&f);
        if comps.len() != 3 {
            continue;
        }
        let ok = comps.iter().all(|c| {
            let sub = induced_subgraph(&f, c).graph;
            path_order(&sub).is_some_and(|_| {
                c.iter().filter(|v| a.contains(v)).count() == 1
                    && c.iter().filter(|v| b.contains(v)).count() == 1
                    && c.len() >= 2
            })
        });
        if ok {
            return true;
        }
    }
    false
}

/// A hole plus an apex with at least three neighbors on it.
pub fn is_wheel_graph(h: &Graph) -> bool {
    h.vertices().any(|v| {
        let rest: Vec<Vertex> = h.vertices().filter(|&w| w != v).collect();
        is_hole_graph(&induced_subgraph(h, &rest).graph) && h.degree(v) >= 3
    })
}

/// A hole plus an apex whose neighbors on it are four consecutive vertices.
pub fn is_boat_graph(h: &Graph) -> bool {
    h.vertices().any(|v| {
        let rest: Vec<Vertex> = h.vertices().filter(|&w| w != v).collect();
        if h.degree(v) != 4 || !is_hole_graph(&induced_subgraph(h, &rest).graph) {
            return false;
        }
        let nbrs = induced_subgraph(h, h.neighbors(v)).graph;
        if rest.len() == 4 {
            is_hole_graph(&nbrs)
        } else {
            path_order(&nbrs).is_some()
        }
    })
}

/// Whether `h` itself is a rich square: some induced square `S` such that
/// `h - S` has at least two components, each a link of `S`.
pub fn is_rich_square_graph(h: &Graph) -> bool {
    let n = h.n();
    if n < 6 {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let sq = [a, b, c, d];
                    if a >= b.min(c).min(d) || b >= d {
                        continue;
                    }
                    let square_edges = h.has_edge(a, b)
                        && h.has_edge(b, c)
                        && h.has_edge(c, d)
                        && h.has_edge(d, a)
                        && !h.has_edge(a, c)
                        && !h.has_edge(b, d);
                    if square_edges && links_around(h, sq) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn links_around(h: &Graph, sq: [Vertex; 4]) -> bool {
    let rest: Vec<Vertex> = h.vertices().filter(|v| !sq.contains(v)).collect();
    let sub = induced_subgraph(h, &rest);
    let comps = connected_components(&sub.graph);
    if comps.len() < 2 {
        return false;
    }
    let seen = |v: Vertex| -> Vec<usize> {
        (0..4).filter(|&i| h.has_edge(v, sq[i])).collect::<Vec<_>>()
    };
    comps.iter().all(|c| {
        let piece = induced_subgraph(&sub.graph, c);
        let Some(order) = path_order(&piece.graph) else {
            return false;
        };
        let verts: Vec<Vertex> = order.iter().map(|&i| sub.ids[piece.ids[i]]).collect();
        if verts.len() == 1 {
            return seen(verts[0]).len() == 4;
        }
        let interior_clear = verts[1..verts.len() - 1].iter().all(|&v| seen(v).is_empty());
        let (p, q) = (seen(verts[0]), seen(*verts.last().unwrap()));
        let opposite = |x: &[usize], y: &[usize]| {
            (x == [0, 1] && y == [2, 3])
                || (x == [2, 3] && y == [0, 1])
                || (x == [0, 3] && y == [1, 2])
                || (x == [1, 2] && y == [0, 3])
        };
        interior_clear && opposite(&p, &q)
    })
}
