//! Upstairs paths, confluences and the odd/even combination of layer
//! colorings.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    bfs_distances, connected_components, induced_subgraph, is_proper_coloring, shortest_path_within,
    Coloring, Graph, Layering, Vertex,
};

/// Largest upper region searched exhaustively by [`find_confluence`].
pub const CONFLUENCE_EXACT_LIMIT: usize = 20;

fn check_layer(l: &Layering, i: usize, v: Vertex) -> Result<()> {
    if l.layer_of(v) != Some(i) {
        return Err(Error::Precondition(format!("vertex {v} is not in layer {i}")));
    }
    Ok(())
}

fn check_host(g: &Graph, l: &Layering) -> Result<()> {
    if l.host_n() != g.n() {
        return Err(Error::Precondition("layering belongs to another graph".into()));
    }
    Ok(())
}

/// Lowest-id neighbor of `v` one layer up.
fn parent(g: &Graph, l: &Layering, v: Vertex) -> Vertex {
    let i = l.layer_of(v).unwrap();
    *g.neighbors(v)
        .iter()
        .find(|&&w| l.layer_of(w) == Some(i - 1))
        .expect("every non-root vertex has a parent")
}

fn chain(g: &Graph, l: &Layering, x: Vertex, y: Vertex, out: &mut Vec<Vertex>) {
    if g.has_edge(x, y) {
        return;
    }
    let (px, py) = (parent(g, l, x), parent(g, l, y));
    out.push(px);
    if px != py {
        out.push(py);
        chain(g, l, px, py, out);
    }
}

/// An induced `x`–`y` path inside layers `0..=i` meeting each layer `1..=i`
/// at most twice.
///
/// Parent chains are built layer by layer towards the root; the result is
/// the shortest path inside the collected vertices, which stays induced.
pub fn upstairs_path(g: &Graph, l: &Layering, i: usize, x: Vertex, y: Vertex) -> Result<Vec<Vertex>> {
    check_host(g, l)?;
    if i == 0 || x == y {
        return Err(Error::Precondition("need i >= 1 and distinct ends".into()));
    }
    check_layer(l, i, x)?;
    check_layer(l, i, y)?;
    let mut collected = vec![x, y];
    chain(g, l, x, y, &mut collected);
    let mut allowed = vec![false; g.n()];
    for &v in &collected {
        allowed[v] = true;
    }
    Ok(shortest_path_within(g, &allowed, x, y).expect("collected vertices connect x and y"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConfluenceKind {
    /// Three paths sharing one end.
    Type1,
    /// Three disjoint paths ending in a triangle.
    Type2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Confluence {
    pub kind: ConfluenceKind,
    pub tips: [Vertex; 3],
    /// `paths[k]` runs from `tips[k]` to the center (or its triangle vertex).
    pub paths: [Vec<Vertex>; 3],
    /// The center vertex, or the three triangle vertices in tip order.
    pub center: Vec<Vertex>,
    /// Sorted vertex set.
    pub vertices: Vec<Vertex>,
}

/// Decides whether `G|candidate` is a confluence of `tips` and recovers its
/// structure.
pub fn classify_confluence(g: &Graph, candidate: &[Vertex], tips: [Vertex; 3]) -> Option<Confluence> {
    let sub = induced_subgraph(g, candidate);
    let h = &sub.graph;
    let local = |v: Vertex| sub.ids.binary_search(&v).ok();
    let t = [local(tips[0])?, local(tips[1])?, local(tips[2])?];
    if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] || !h.is_connected() {
        return None;
    }
    let is_tip = |v: Vertex| t.contains(&v);
    if h.vertices().any(|v| h.degree(v) == 1 && !is_tip(v)) || h.max_degree() > 3 {
        return None;
    }
    let walk = |from: Vertex, avoid: &[Vertex], stop: &dyn Fn(Vertex) -> bool| -> Vec<Vertex> {
        // follow degree-two vertices from a tip until `stop`
        let mut path = vec![from];
        let mut prev = usize::MAX;
        let mut cur = from;
        while !stop(cur) {
            let next = h
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| w != prev && !avoid.contains(&w));
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                    path.push(w);
                }
                None => break,
            }
        }
        path
    };
    let globalize = |p: Vec<Vertex>| p.into_iter().map(|v| sub.ids[v]).collect::<Vec<_>>();
    let mut vertices = sub.ids.clone();
    vertices.sort_unstable();

    if h.m() + 1 == h.n() {
        // a tree: either a subdivided claw or a path through the third tip
        let hubs: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) == 3).collect();
        let center = match hubs.as_slice() {
            [c] => *c,
            [] => *t.iter().find(|&&v| h.degree(v) == 2)?,
            _ => return None,
        };
        let paths: Vec<Vec<Vertex>> = t
            .iter()
            .map(|&tip| {
                if tip == center {
                    return vec![tip];
                }
                walk(tip, &[], &|v| v == center)
            })
            .collect();
        if paths.iter().any(|p| *p.last().unwrap() != center) {
            return None;
        }
        let paths: Vec<Vec<Vertex>> = paths.into_iter().map(globalize).collect();
        return Some(Confluence {
            kind: ConfluenceKind::Type1,
            tips,
            paths: [paths[0].clone(), paths[1].clone(), paths[2].clone()],
            center: vec![sub.ids[center]],
            vertices,
        });
    }

    if h.m() == h.n() {
        // one cycle, which must be a triangle
        let tri: Vec<Vertex> = h
            .vertices()
            .filter(|&v| {
                let nb = h.neighbors(v);
                nb.iter().enumerate().any(|(k, &a)| nb[k + 1..].iter().any(|&b| h.has_edge(a, b)))
            })
            .collect();
        if tri.len() != 3 || h.vertices().any(|v| !tri.contains(&v) && h.degree(v) > 2) {
            return None;
        }
        if t.iter().any(|&v| !tri.contains(&v) && h.degree(v) != 1) {
            return None;
        }
        let paths: Vec<Vec<Vertex>> = t
            .iter()
            .map(|&tip| {
                if tri.contains(&tip) {
                    return vec![tip];
                }
                walk(tip, &[], &|v| tri.contains(&v))
            })
            .collect();
        let ends: Vec<Vertex> = paths.iter().map(|p| *p.last().unwrap()).collect();
        if ends.iter().any(|e| !tri.contains(e)) || ends[0] == ends[1] || ends[0] == ends[2] || ends[1] == ends[2] {
            return None;
        }
        // path interiors may not touch the triangle beyond their own end
        let total: usize = paths.iter().map(Vec::len).sum();
        if total != h.n() {
            return None;
        }
        let paths: Vec<Vec<Vertex>> = paths.into_iter().map(globalize).collect();
        let center: Vec<Vertex> = ends.iter().map(|&v| sub.ids[v]).collect();
        return Some(Confluence {
            kind: ConfluenceKind::Type2,
            tips,
            paths: [paths[0].clone(), paths[1].clone(), paths[2].clone()],
            center,
            vertices,
        });
    }
    None
}

/// A set inside layers `0..i` that joins `x`, `y`, `z` into a confluence.
///
/// The first attempt is a minimum spider: the vertex minimizing the summed
/// distances to the three tips, with shortest paths to each. If that does
/// not induce a confluence, subsets of the upper region are tried by
/// increasing size (only when it has at most [`CONFLUENCE_EXACT_LIMIT`]
/// vertices).
pub fn find_confluence(g: &Graph, l: &Layering, i: usize, x: Vertex, y: Vertex, z: Vertex) -> Result<Confluence> {
    check_host(g, l)?;
    if i == 0 || x == y || x == z || y == z {
        return Err(Error::Precondition("need i >= 1 and three distinct tips".into()));
    }
    for v in [x, y, z] {
        check_layer(l, i, v)?;
    }
    let tips = [x, y, z];
    let upper = l.up_to(i - 1);
    let mut allowed = vec![false; g.n()];
    for &v in upper.iter().chain(&tips) {
        allowed[v] = true;
    }
    let region: Vec<Vertex> = upper.iter().chain(&tips).copied().collect();
    let sub = induced_subgraph(g, &region);
    let local = |v: Vertex| sub.ids.binary_search(&v).unwrap();
    let dists: Vec<Vec<Option<usize>>> = tips.iter().map(|&t| bfs_distances(&sub.graph, local(t))).collect();
    let mut centers: Vec<(usize, Vertex)> = sub
        .graph
        .vertices()
        .filter_map(|c| {
            let s = dists.iter().map(|d| d[c]).sum::<Option<usize>>()?;
            Some((s, sub.ids[c]))
        })
        .collect();
    centers.sort_unstable();
    for &(_, c) in &centers {
        let mut set = vec![c];
        for &t in &tips {
            set.extend(shortest_path_within(g, &allowed, c, t).expect("region is connected"));
        }
        set.sort_unstable();
        set.dedup();
        if let Some(conf) = classify_confluence(g, &set, tips) {
            return Ok(conf);
        }
    }
    if upper.len() > CONFLUENCE_EXACT_LIMIT {
        return Err(Error::Precondition(format!(
            "no confluence found by the spider search and the upper region has {} > {} vertices",
            upper.len(),
            CONFLUENCE_EXACT_LIMIT
        )));
    }
    exact_confluence(g, &upper, tips)
        .ok_or_else(|| Error::Precondition("no confluence exists for these tips".into()))
}

/// Exhaustive search over subsets of `upper`, smallest first.
pub fn exact_confluence(g: &Graph, upper: &[Vertex], tips: [Vertex; 3]) -> Option<Confluence> {
    let m = upper.len();
    for size in 0..=m {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let mut set: Vec<Vertex> = pick.iter().map(|&k| upper[k]).collect();
            set.extend(tips);
            set.sort_unstable();
            if let Some(c) = classify_confluence(g, &set, tips) {
                return Some(c);
            }
            // next combination
            let mut k = size;
            while k > 0 && pick[k - 1] == m - size + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            pick[k - 1] += 1;
            for j in k..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    None
}

/// Colors odd layers from `0..a` and even layers from `a..a+b`, where `a`
/// and `b` are the largest odd and even layer palettes.
///
/// `per_layer[i]` colors `layers[i]` by position in that (sorted) layer.
/// The layering must cover every vertex of `g`.
pub fn combine_layer_colorings(g: &Graph, l: &Layering, per_layer: &[Coloring]) -> Result<Coloring> {
    check_host(g, l)?;
    if per_layer.len() != l.depth() {
        return Err(Error::Precondition("one coloring per layer is required".into()));
    }
    if l.layers.iter().map(Vec::len).sum::<usize>() != g.n() {
        return Err(Error::Precondition("layering does not span the graph".into()));
    }
    let mut a = 0;
    let mut b = 0;
    for (i, (layer, c)) in l.layers.iter().zip(per_layer).enumerate() {
        let sub = induced_subgraph(g, layer);
        if !is_proper_coloring(&sub.graph, c)? {
            return Err(Error::Precondition(format!("layer {i} coloring is not proper")));
        }
        if i % 2 == 1 {
            a = a.max(c.palette_size());
        } else {
            b = b.max(c.palette_size());
        }
    }
    let mut colors = vec![0; g.n()];
    for (i, (layer, c)) in l.layers.iter().zip(per_layer).enumerate() {
        let offset = if i % 2 == 1 { 0 } else { a };
        for (k, &v) in layer.iter().enumerate() {
            colors[v] = offset + c.color(k);
        }
    }
    Coloring::new(colors, a + b)
}

/// Whether `path` is an induced path of `g` (in order).
pub fn is_induced_path(g: &Graph, path: &[Vertex]) -> bool {
    let k = path.len();
    let mut sorted = path.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == k
        && (0..k).all(|a| (a + 1..k).all(|b| g.has_edge(path[a], path[b]) == (b == a + 1)))
}

/// Checks the guarantees of an upstairs path: induced, correct ends,
/// inside layers `0..=i`, at most two vertices on each layer `1..=i`.
pub fn check_upstairs_path(g: &Graph, l: &Layering, i: usize, x: Vertex, y: Vertex, p: &[Vertex]) -> bool {
    if p.first() != Some(&x) || p.last() != Some(&y) || !is_induced_path(g, p) {
        return false;
    }
    let mut count = vec![0usize; i + 1];
    for &v in p {
        match l.layer_of(v) {
            Some(j) if j <= i => count[j] += 1,
            _ => return false,
        }
    }
    count.iter().skip(1).all(|&c| c <= 2)
}

/// Components of the upper region `N_0 ∪ ... ∪ N_{i-1}`; one for a valid layering.
pub fn upper_components(g: &Graph, l: &Layering, i: usize) -> usize {
    connected_components(&induced_subgraph(g, &l.up_to(i.saturating_sub(1))).graph).len()
}
