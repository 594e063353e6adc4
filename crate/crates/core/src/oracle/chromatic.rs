use crate::error::{Error, Result};
use crate::graph::{degeneracy_coloring, Coloring, Graph, Vertex};

pub const CHROMATIC_LIMIT: usize = 16;

/// Exact chromatic number. Fails above [`CHROMATIC_LIMIT`] vertices.
pub fn chromatic_number_exact(g: &Graph) -> Result<usize> {
    optimal_coloring(g).map(|c| c.palette_size())
}

/// A coloring with the minimum number of colors.
pub fn optimal_coloring(g: &Graph) -> Result<Coloring> {
    if g.n() > CHROMATIC_LIMIT {
        return Err(Error::SizeLimit {
            n: g.n(),
            limit: CHROMATIC_LIMIT,
        });
    }
    Ok(optimal_coloring_unbounded(g))
}

/// Iterative deepening from below: the first `k` admitting a coloring wins.
pub fn optimal_coloring_unbounded(g: &Graph) -> Coloring {
    let n = g.n();
    if n == 0 {
        return Coloring::from_colors(Vec::new());
    }
    let (greedy, _) = degeneracy_coloring(g);
    let lower = if g.m() == 0 { 1 } else { 2 };
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for k in lower..greedy.palette_size() {
        let mut colors = vec![usize::MAX; n];
        if extend(g, &order, 0, k, 0, &mut colors) {
            return Coloring::from_colors(colors);
        }
    }
    greedy
}

fn extend(g: &Graph, order: &[Vertex], i: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
    let Some(&v) = order.get(i) else {
        return true;
    };
    // a fresh color is only ever the next unused one
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if extend(g, order, i + 1, k, used.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}
