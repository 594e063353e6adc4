use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{degeneracy_coloring, is_proper_coloring, shortest_cycle, Coloring, Graph, Vertex};
use crate::patterns::{KrauszPartition, MultipartiteShape, PatternKind, PatternWitness, Roles};

use super::{Violation, ViolationKind};

/// Proper coloring of a forest by BFS parity.
pub fn color_forest(g: &Graph) -> Result<Coloring> {
    if let Some(c) = shortest_cycle(g) {
        return Err(Error::NotAForest(c));
    }
    let mut colors = vec![usize::MAX; g.n()];
    for s in g.vertices() {
        if colors[s] != usize::MAX {
            continue;
        }
        colors[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if colors[w] == usize::MAX {
                    colors[w] = 1 - colors[u];
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(Coloring::from_colors(colors))
}

/// Vertices left after repeatedly deleting vertices of degree at most two.
fn three_core(g: &Graph) -> Vec<Vertex> {
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut gone = vec![false; g.n()];
    let mut stack: Vec<Vertex> = g.vertices().filter(|&v| deg[v] <= 2).collect();
    while let Some(v) = stack.pop() {
        if gone[v] {
            continue;
        }
        gone[v] = true;
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
                if deg[w] == 2 {
                    stack.push(w);
                }
            }
        }
    }
    g.vertices().filter(|&v| !gone[v]).collect()
}

/// Greedy along the reverse degeneracy order; at most three colors when
/// the graph is 2-degenerate, which holds for ISK4-free graphs of girth at
/// least five.
pub fn color_girth5(g: &Graph) -> Result<Coloring> {
    let (c, d) = degeneracy_coloring(g);
    if d > 2 {
        return Err(Error::ClassViolation(Box::new(Violation::new(
            ViolationKind::Degeneracy,
            format!("degeneracy {d} exceeds 2"),
            three_core(g),
        ))));
    }
    Ok(c)
}

/// One color per part.
pub fn color_thick_multipartite(shape: &MultipartiteShape) -> Coloring {
    let n = shape.parts.iter().map(Vec::len).sum();
    let mut colors = vec![0; n];
    for (i, part) in shape.parts.iter().enumerate() {
        for &v in part {
            colors[v] = i;
        }
    }
    Coloring::from_colors(colors)
}

/// Reverse-degeneracy greedy coloring.
pub fn greedy_fallback(g: &Graph) -> Coloring {
    degeneracy_coloring(g).0
}

/// A proper edge coloring, indexed like `Graph::edges()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    pub edges: Vec<(Vertex, Vertex)>,
    pub colors: Vec<usize>,
    pub palette: usize,
    /// False when the graph has a vertex of degree above three.
    pub within_contract: bool,
}

impl EdgeColoring {
    pub fn is_proper(&self, n: usize) -> bool {
        let mut seen = vec![Vec::new(); n];
        for (&(u, v), &c) in self.edges.iter().zip(&self.colors) {
            if c >= self.palette || seen[u].contains(&c) || seen[v].contains(&c) {
                return false;
            }
            seen[u].push(c);
            seen[v].push(c);
        }
        true
    }
}

struct EdgeColors {
    n: usize,
    col: Vec<Option<usize>>,
}

impl EdgeColors {
    fn get(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.col[u * self.n + v]
    }

    fn set(&mut self, u: Vertex, v: Vertex, c: Option<usize>) {
        self.col[u * self.n + v] = c;
        self.col[v * self.n + u] = c;
    }

    fn is_free(&self, g: &Graph, x: Vertex, c: usize) -> bool {
        g.neighbors(x).iter().all(|&y| self.get(x, y) != Some(c))
    }

    fn free(&self, g: &Graph, x: Vertex, k: usize) -> usize {
        (0..k).find(|&c| self.is_free(g, x, c)).expect("a vertex of degree below k has a free color")
    }
}

/// Misra–Gries: colors with at most `Δ + 1` colors using fans and
/// alternating-path inversions.
fn misra_gries(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let k = g.max_degree() + 1;
    let mut ec = EdgeColors {
        n,
        col: vec![None; n * n],
    };
    for (u, v) in g.edges() {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = g.neighbors(u).iter().copied().find(|&w| {
                !fan.contains(&w) && ec.get(u, w).is_some_and(|c| ec.is_free(g, last, c))
            });
            match next {
                Some(w) => fan.push(w),
                None => break,
            }
        }
        let c = ec.free(g, u, k);
        let d = ec.free(g, *fan.last().unwrap(), k);
        // invert the cd-path starting at u
        let mut path = Vec::new();
        let (mut x, mut prev, mut want, mut other) = (u, usize::MAX, d, c);
        while let Some(&y) = g
            .neighbors(x)
            .iter()
            .find(|&&y| y != prev && ec.get(x, y) == Some(want))
        {
            path.push((x, y, want));
            prev = x;
            x = y;
            std::mem::swap(&mut want, &mut other);
        }
        for &(a, b, col) in &path {
            ec.set(a, b, Some(if col == c { d } else { c }));
        }
        let j = (0..fan.len())
            .find(|&j| {
                ec.is_free(g, fan[j], d)
                    && (0..j).all(|i| ec.get(u, fan[i + 1]).is_some_and(|cc| ec.is_free(g, fan[i], cc)))
            })
            .expect("a fan prefix ending at a vertex missing d exists");
        for i in 0..j {
            let next = ec.get(u, fan[i + 1]);
            ec.set(u, fan[i], next);
        }
        ec.set(u, fan[j], Some(d));
    }
    g.edges().iter().map(|&(u, v)| ec.get(u, v).unwrap()).collect()
}

/// Backtracking search for an edge coloring with `k` colors.
fn exact_edge_coloring(g: &Graph, k: usize, budget: &mut usize) -> Option<Vec<usize>> {
    let edges = g.edges();
    let mut colors = vec![usize::MAX; edges.len()];
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        at[u].push(i);
        at[v].push(i);
    }
    fn go(
        i: usize,
        used: usize,
        k: usize,
        edges: &[(Vertex, Vertex)],
        at: &[Vec<usize>],
        colors: &mut [usize],
        budget: &mut usize,
    ) -> bool {
        if i == edges.len() {
            return true;
        }
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let (u, v) = edges[i];
        for c in 0..(used + 1).min(k) {
            let clash = at[u].iter().chain(&at[v]).any(|&e| colors[e] == c);
            if clash {
                continue;
            }
            colors[i] = c;
            if go(i + 1, used.max(c + 1), k, edges, at, colors, budget) {
                return true;
            }
            colors[i] = usize::MAX;
        }
        false
    }
    go(0, 0, k, &edges, &at, &mut colors, budget).then_some(colors)
}

fn palette_of(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |&c| c + 1)
}

/// Edge coloring with at most `Δ + 1` colors (Misra–Gries), improved to
/// `Δ` colors whenever a bounded exact search finds such a coloring.
pub fn edge_color_subcubic(h: &Graph) -> EdgeColoring {
    let edges = h.edges();
    let delta = h.max_degree();
    let mut colors = misra_gries(h);
    if palette_of(&colors) > delta {
        let mut budget = 200_000;
        if let Some(better) = exact_edge_coloring(h, delta, &mut budget) {
            colors = better;
        }
    }
    let palette = palette_of(&colors);
    let ec = EdgeColoring {
        edges,
        colors,
        palette,
        within_contract: delta <= 3,
    };
    assert!(ec.is_proper(h.n()), "edge coloring must be proper");
    ec
}

/// Pulls an edge coloring of the root back to the vertices of `g`.
pub fn color_line_graph(g: &Graph, kp: &KrauszPartition) -> Result<Coloring> {
    if !kp.verify(g) {
        return Err(Error::Precondition("not a valid Krausz partition of this graph".into()));
    }
    let ec = edge_color_subcubic(&kp.root);
    let colors = kp
        .edge_of
        .iter()
        .map(|e| ec.colors[ec.edges.binary_search(e).unwrap()])
        .collect();
    let c = Coloring::new(colors, ec.palette)?;
    assert!(is_proper_coloring(g, &c)?);
    Ok(c)
}

/// The four-color scheme for a rich square: `u1, u3` get 0, `u2, u4` get 1,
/// a single-vertex link gets 2, a longer link gets 2 and 3 on its ends and
/// alternates 0, 1 inside.
pub fn color_rich_square(g: &Graph, rs: &PatternWitness) -> Result<Coloring> {
    let invalid = || Error::Precondition("not a rich-square witness for this graph".into());
    let (PatternKind::RichSquare, Roles::RichSquare { square, links }) = (rs.kind, &rs.roles) else {
        return Err(invalid());
    };
    let n = g.n();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let sq = *square;
    let square_ok = sq.iter().all(|&v| v < n)
        && (0..4).all(|i| g.has_edge(sq[i], sq[(i + 1) % 4]))
        && !g.has_edge(sq[0], sq[2])
        && !g.has_edge(sq[1], sq[3]);
    if !square_ok || links.len() < 2 {
        return Err(invalid());
    }
    let seen = |v: Vertex| -> u8 { (0..4).filter(|&i| g.has_edge(v, sq[i])).fold(0, |m, i| m | 1 << i) };
    for (i, &v) in sq.iter().enumerate() {
        colors[v] = Some(i % 2);
    }
    for link in links {
        if link.iter().any(|&v| v >= n || colors[v].is_some()) {
            return Err(invalid());
        }
        let k = link.len();
        if k == 1 {
            if seen(link[0]) != 0b1111 {
                return Err(invalid());
            }
            colors[link[0]] = Some(2);
            continue;
        }
        let ends = (seen(link[0]), seen(link[k - 1]));
        let interior_clear = link[1..k - 1].iter().all(|&v| seen(v) == 0);
        let chained = link.windows(2).all(|w| g.has_edge(w[0], w[1]));
        if !matches!(ends, (0b0011, 0b1100) | (0b1001, 0b0110)) || !interior_clear || !chained {
            return Err(invalid());
        }
        colors[link[0]] = Some(2);
        colors[link[k - 1]] = Some(3);
        for (j, &v) in link[1..k - 1].iter().enumerate() {
            colors[v] = Some(j % 2);
        }
    }
    let c = Coloring::from_partial(&colors, 4).map_err(|_| invalid())?;
    if !is_proper_coloring(g, &c)? {
        return Err(invalid());
    }
    Ok(c)
}
