//! Clique cutsets, proper 2-cutsets, flat-path reduction and the gluing of
//! block colorings.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components_without, induced_subgraph, Coloring, Graph, Subgraph, Vertex};
use crate::patterns::{check, find_k4};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueCutset {
    pub clique: Vec<Vertex>,
    /// The component of `G - clique` holding the smallest vertex.
    pub x: Vec<Vertex>,
    /// Everything else outside the clique.
    pub y: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Proper2Cutset {
    pub a: Vertex,
    pub b: Vertex,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
}

/// A path `v_0 ... v_k` whose interior vertices have degree two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatPath {
    pub vertices: Vec<Vertex>,
}

impl FlatPath {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        FlatPath { vertices }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }
}

/// A smallest clique whose removal disconnects `g`, scanning cliques by size
/// and then lexicographically. Callers must pass a connected, K4-free graph.
pub fn find_clique_cutset(g: &Graph) -> Result<Option<CliqueCutset>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(k4) = find_k4(g) {
        return Err(Error::ContainsK4(k4));
    }
    let split = |clique: Vec<Vertex>| {
        let mut comps = components_without(g, &clique);
        if comps.len() < 2 {
            return None;
        }
        let x = comps.remove(0);
        let mut y: Vec<Vertex> = comps.into_iter().flatten().collect();
        y.sort_unstable();
        Some(CliqueCutset { clique, x, y })
    };
    for v in g.vertices() {
        if let Some(c) = split(vec![v]) {
            return Ok(Some(c));
        }
    }
    for (u, v) in g.edges() {
        if let Some(c) = split(vec![u, v]) {
            return Ok(Some(c));
        }
    }
    for (u, v) in g.edges() {
        for w in g.common_neighbors(u, v).into_iter().filter(|&w| w > v) {
            if let Some(c) = split(vec![u, v, w]) {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// Is `G|(side ∪ {a, b})` a path with ends `a` and `b`?
fn is_ab_path(g: &Graph, a: Vertex, b: Vertex, side: &[Vertex]) -> bool {
    let mut s = side.to_vec();
    s.extend([a, b]);
    let sub = induced_subgraph(g, &s);
    match check::path_order(&sub.graph) {
        Some(order) => {
            let ends = [sub.ids[order[0]], sub.ids[*order.last().unwrap()]];
            ends == [a, b] || ends == [b, a]
        }
        None => false,
    }
}

/// A proper 2-cutset `{a, b}`. Components of `G - {a, b}` are grouped as one
/// against the rest, then two against the rest.
pub fn find_proper_2cutset(g: &Graph) -> Result<Option<Proper2Cutset>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            let comps = components_without(g, &[a, b]);
            let k = comps.len();
            if k < 2 {
                continue;
            }
            let mut groupings: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
            if k >= 3 {
                for i in 0..k {
                    for j in i + 1..k {
                        groupings.push(vec![i, j]);
                    }
                }
            }
            for grp in groupings {
                let mut x: Vec<Vertex> = grp.iter().flat_map(|&i| comps[i].iter().copied()).collect();
                let mut y: Vec<Vertex> = (0..k)
                    .filter(|i| !grp.contains(i))
                    .flat_map(|i| comps[i].iter().copied())
                    .collect();
                x.sort_unstable();
                y.sort_unstable();
                if !is_ab_path(g, a, b, &x) && !is_ab_path(g, a, b, &y) {
                    return Ok(Some(Proper2Cutset { a, b, x, y }));
                }
            }
        }
    }
    Ok(None)
}

/// Checks that `p` is an induced path of length at least two whose interior
/// vertices have degree two in `g`.
pub fn validate_flat_path(g: &Graph, p: &FlatPath) -> Result<()> {
    let v = &p.vertices;
    if v.len() < 3 {
        return Err(Error::Precondition("flat path needs length at least 2".into()));
    }
    if let Some(&bad) = v.iter().find(|&&x| x >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: bad, n: g.n() });
    }
    let sub = induced_subgraph(g, v);
    if sub.graph.n() != v.len() || sub.graph.m() != v.len() - 1 {
        return Err(Error::Precondition("vertices do not induce a path".into()));
    }
    if v.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::Precondition("consecutive vertices are not adjacent".into()));
    }
    if let Some(&x) = v[1..v.len() - 1].iter().find(|&&x| g.degree(x) != 2) {
        return Err(Error::Precondition(format!("interior vertex {x} has degree {}", g.degree(x))));
    }
    Ok(())
}

/// Deletes the interior of `p` and joins its ends. Returns the new graph
/// and, for each new vertex, its id in `g`.
pub fn reduce_flat_path(g: &Graph, p: &FlatPath) -> Result<(Graph, Vec<Vertex>)> {
    validate_flat_path(g, p)?;
    let v = &p.vertices;
    let interior = &v[1..v.len() - 1];
    let keep: Vec<Vertex> = g.vertices().filter(|x| !interior.contains(x)).collect();
    let sub = induced_subgraph(g, &keep);
    let pos = |x: Vertex| sub.ids.binary_search(&x).unwrap();
    let reduced = sub.graph.with_edges(&[(pos(v[0]), pos(*v.last().unwrap()))])?;
    Ok((reduced, sub.ids))
}

/// Flat paths of length at least two that cannot be extended at either end.
/// Each is listed once, oriented with the smaller end first.
pub fn maximal_flat_paths(g: &Graph) -> Vec<FlatPath> {
    let mut found: Vec<Vec<Vertex>> = Vec::new();
    for s in g.vertices() {
        for &t in g.neighbors(s) {
            let mut path = vec![s, t];
            loop {
                let tip = *path.last().unwrap();
                if path.len() >= 3 && path[0] < tip && !extendable(g, &path) {
                    let rev: Vec<Vertex> = path.iter().rev().copied().collect();
                    if !extendable(g, &rev) {
                        found.push(path.clone());
                    }
                }
                if g.degree(tip) != 2 {
                    break;
                }
                let prev = path[path.len() - 2];
                let next = g.neighbors(tip).iter().copied().find(|&w| w != prev).unwrap();
                if path.contains(&next) || path[..path.len() - 1].iter().any(|&x| g.has_edge(x, next)) {
                    break;
                }
                path.push(next);
            }
        }
    }
    found.sort();
    found.dedup();
    found.into_iter().map(FlatPath::new).collect()
}

/// Can the path grow past its last vertex and stay flat and induced?
fn extendable(g: &Graph, path: &[Vertex]) -> bool {
    let tip = *path.last().unwrap();
    if g.degree(tip) != 2 {
        return false;
    }
    let prev = path[path.len() - 2];
    let next = g.neighbors(tip).iter().copied().find(|&w| w != prev).unwrap();
    !path.contains(&next) && !path[..path.len() - 1].iter().any(|&x| g.has_edge(x, next))
}

/// The two blocks of a proper 2-cutset: `G|(X ∪ {a,b})` and `G|(Y ∪ {a,b})`,
/// each with the marker edge `ab` added.
pub fn build_2cutset_blocks(g: &Graph, cut: &Proper2Cutset) -> Result<(Subgraph, Subgraph)> {
    let (a, b) = (cut.a, cut.b);
    let valid = a != b
        && a < g.n()
        && b < g.n()
        && !g.has_edge(a, b)
        && !cut.x.is_empty()
        && !cut.y.is_empty()
        && cut.x.len() + cut.y.len() + 2 == g.n()
        && cut.x.iter().all(|&u| cut.y.iter().all(|&w| !g.has_edge(u, w)));
    if !valid {
        return Err(Error::Precondition("not a 2-cutset of this graph".into()));
    }
    let block = |side: &[Vertex]| -> Result<Subgraph> {
        let mut s = side.to_vec();
        s.extend([a, b]);
        let sub = induced_subgraph(g, &s);
        let pos = |x: Vertex| sub.ids.binary_search(&x).unwrap();
        let graph = sub.graph.with_edges(&[(pos(a), pos(b))])?;
        Ok(Subgraph { graph, ids: sub.ids })
    };
    Ok((block(&cut.x)?, block(&cut.y)?))
}

/// Glues two block colorings on `n` vertices. `ids1`/`ids2` give the
/// original vertex behind each block vertex; shared vertices must receive
/// pairwise distinct colors in both blocks. `c2` is renamed by a product of
/// transpositions so it agrees with `c1` on the shared vertices.
pub fn merge_colorings(
    n: usize,
    c1: &Coloring,
    ids1: &[Vertex],
    c2: &Coloring,
    ids2: &[Vertex],
) -> Result<Coloring> {
    if c1.len() != ids1.len() || c2.len() != ids2.len() {
        return Err(Error::Precondition("coloring and id map lengths differ".into()));
    }
    let mut first: Vec<Option<usize>> = vec![None; n];
    for (i, &v) in ids1.iter().enumerate() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        first[v] = Some(c1.color(i));
    }
    let shared: Vec<(usize, usize)> = ids2
        .iter()
        .enumerate()
        .filter_map(|(i, &v)| first.get(v).copied().flatten().map(|c| (c2.color(i), c)))
        .collect();
    let rainbow = |cs: Vec<usize>| {
        let mut s = cs.clone();
        s.sort_unstable();
        s.dedup();
        s.len() == cs.len()
    };
    if !rainbow(shared.iter().map(|p| p.0).collect()) || !rainbow(shared.iter().map(|p| p.1).collect()) {
        return Err(Error::Precondition("shared vertices are not colored distinctly".into()));
    }
    let palette = c1.palette_size().max(c2.palette_size());
    let mut perm: Vec<usize> = (0..palette).collect();
    for &(from, to) in &shared {
        let x = perm.iter().position(|&c| c == to).unwrap();
        perm.swap(from, x);
    }
    let mut out = first;
    for (i, &v) in ids2.iter().enumerate() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        out[v] = Some(perm[c2.color(i)]);
    }
    Coloring::from_partial(&out, palette)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::is_proper_coloring;

    #[test]
    fn clique_cutset_examples() {
        let c = find_clique_cutset(&path(3)).unwrap().unwrap();
        assert_eq!(c.clique, [1]);
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(find_clique_cutset(&diamond).unwrap().unwrap().clique, [1, 2]);
        assert!(find_clique_cutset(&cycle(5)).unwrap().is_none());
        assert!(matches!(find_clique_cutset(&complete(4)), Err(Error::ContainsK4(_))));
        assert!(matches!(find_clique_cutset(&Graph::empty(2)), Err(Error::Disconnected)));
    }

    #[test]
    fn proper_2cutset_examples() {
        let k24 = complete_multipartite(&[2, 4]);
        let c = find_proper_2cutset(&k24).unwrap().unwrap();
        assert_eq!((c.a, c.b), (0, 1));
        assert_eq!((c.x.clone(), c.y.clone()), (vec![2, 3], vec![4, 5]));
        assert!(find_proper_2cutset(&complete_multipartite(&[2, 3])).unwrap().is_none());
        assert!(find_proper_2cutset(&cycle(5)).unwrap().is_none());

        let (bx, by) = build_2cutset_blocks(&k24, &c).unwrap();
        assert_eq!(bx.ids, [0, 1, 2, 3]);
        assert_eq!((bx.graph.n(), bx.graph.m()), (4, 5));
        assert_eq!(by.ids, [0, 1, 4, 5]);
        assert!(bx.graph.n() < k24.n());
    }

    #[test]
    fn flat_path_examples() {
        let (r, _) = reduce_flat_path(&cycle(5), &FlatPath::new(vec![0, 1, 2])).unwrap();
        assert_eq!((r.n(), r.m()), (4, 4));
        assert!(check::is_hole_graph(&r));

        // K4 with edge 0-3 subdivided by 4
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (4, 3)]).unwrap();
        let (r, ids) = reduce_flat_path(&g, &FlatPath::new(vec![0, 4, 3])).unwrap();
        assert_eq!(ids, [0, 1, 2, 3]);
        assert_eq!(r.m(), 6);

        let k23 = complete_multipartite(&[2, 3]);
        let (r, _) = reduce_flat_path(&k23, &FlatPath::new(vec![0, 2, 1])).unwrap();
        assert_eq!((r.n(), r.m()), (4, 5));

        assert!(reduce_flat_path(&complete(4), &FlatPath::new(vec![0, 1, 2])).is_err());
        assert!(reduce_flat_path(&cycle(5), &FlatPath::new(vec![0, 1])).is_err());
    }

    #[test]
    fn maximal_flat_path_listing() {
        let k23 = complete_multipartite(&[2, 3]);
        let paths = maximal_flat_paths(&k23);
        assert_eq!(paths.len(), 3);
        assert!(paths.iter().all(|p| p.len() == 2));
        assert_eq!(maximal_flat_paths(&cycle(5)).len(), 5);
        assert_eq!(maximal_flat_paths(&path(4)), [FlatPath::new(vec![0, 1, 2, 3])]);
    }

    #[test]
    fn merge_examples() {
        // blocks share vertex 0 only
        let c1 = Coloring::new(vec![2, 0], 3).unwrap();
        let c2 = Coloring::new(vec![0, 2], 3).unwrap();
        let m = merge_colorings(3, &c1, &[0, 1], &c2, &[0, 2]).unwrap();
        assert_eq!(m.colors(), [2, 0, 0]);

        let c1 = Coloring::new(vec![0, 1, 0], 2).unwrap();
        let c2 = Coloring::new(vec![1, 0, 1], 2).unwrap();
        let m = merge_colorings(4, &c1, &[0, 1, 2], &c2, &[0, 1, 3]).unwrap();
        assert_eq!(m.colors(), [0, 1, 0, 0]);

        let c = Coloring::new(vec![0, 1], 2).unwrap();
        let m = merge_colorings(3, &c, &[0, 1], &c, &[0, 2]).unwrap();
        assert_eq!(m.colors(), [0, 1, 1]);

        let bad = Coloring::new(vec![0, 0], 1).unwrap();
        assert!(merge_colorings(3, &bad, &[0, 1], &bad, &[0, 1]).is_err());
    }

    #[test]
    fn merged_k24_is_proper() {
        let g = complete_multipartite(&[2, 4]);
        let cut = find_proper_2cutset(&g).unwrap().unwrap();
        let (bx, by) = build_2cutset_blocks(&g, &cut).unwrap();
        let cx = crate::graph::degeneracy_coloring(&bx.graph).0;
        let cy = crate::graph::degeneracy_coloring(&by.graph).0;
        let m = merge_colorings(6, &cx, &bx.ids, &cy, &by.ids).unwrap();
        assert!(is_proper_coloring(&g, &m).unwrap());
    }
}
