//! Targeted detectors: anchor enumeration plus pruning, each returning a
//! witness in the lexicographically first position the search reaches.

use std::ops::ControlFlow;

use crate::graph::{Graph, Vertex};

use super::{PatternKind, PatternWitness, Roles};

pub fn find_triangle(g: &Graph) -> Option<PatternWitness> {
    for u in g.vertices() {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            if let Some(&w) = g.neighbors(u).iter().find(|&&w| w > v && g.has_edge(v, w)) {
                return Some(PatternWitness::new(PatternKind::Triangle, vec![u, v, w], Roles::None));
            }
        }
    }
    None
}

/// A clique on four vertices, if any.
pub fn find_k4(g: &Graph) -> Option<Vec<Vertex>> {
    for u in g.vertices() {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            let common: Vec<Vertex> = g
                .common_neighbors(u, v)
                .into_iter()
                .filter(|&w| w > v)
                .collect();
            for (i, &w) in common.iter().enumerate() {
                if let Some(&x) = common[i + 1..].iter().find(|&&x| g.has_edge(w, x)) {
                    return Some(vec![u, v, w, x]);
                }
            }
        }
    }
    None
}

/// Calls `visit` once per hole with length in `min_len..=max_len`, passing
/// the cycle in order starting from its smallest vertex.
///
/// Hole enumeration is exponential in the worst case; intended for graphs
/// up to roughly 14 vertices when run to completion.
pub fn for_each_hole<F>(g: &Graph, min_len: usize, max_len: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    let min_len = min_len.max(4);
    let mut path = Vec::new();
    let mut on_path = vec![false; g.n()];
    for s in g.vertices() {
        path.push(s);
        on_path[s] = true;
        let r = extend(g, s, min_len, max_len, &mut path, &mut on_path, &mut visit);
        on_path[s] = false;
        path.pop();
        r?;
    }
    ControlFlow::Continue(())
}

fn extend<F>(
    g: &Graph,
    s: Vertex,
    min_len: usize,
    max_len: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    let last = *path.last().unwrap();
    let len = path.len();
    for &w in g.neighbors(last) {
        if w <= s || on_path[w] {
            continue;
        }
        let interior = if len >= 2 { &path[1..len - 1] } else { &[][..] };
        if interior.iter().any(|&p| g.has_edge(w, p)) {
            continue;
        }
        if len >= 2 && g.has_edge(w, s) {
            // closing vertex; report each cycle in one direction only
            if len + 1 >= min_len && len < max_len && path[1] < w {
                path.push(w);
                let r = visit(path);
                path.pop();
                r?;
            }
            continue;
        }
        if len + 1 >= max_len {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let r = extend(g, s, min_len, max_len, path, on_path, visit);
        on_path[w] = false;
        path.pop();
        r?;
    }
    ControlFlow::Continue(())
}

/// Every hole, each once, as a cyclic vertex sequence.
pub fn enumerate_holes(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let _ = for_each_hole(g, 4, usize::MAX, |c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// A hole with length in `min_len..=max_len` (`None` bound = unbounded).
pub fn find_hole(g: &Graph, min_len: usize, max_len: Option<usize>) -> Option<PatternWitness> {
    let mut found = None;
    let _ = for_each_hole(g, min_len, max_len.unwrap_or(usize::MAX), |c| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    });
    found.map(|c| {
        let kind = if c.len() == 4 { PatternKind::C4 } else { PatternKind::Hole };
        PatternWitness::new(kind, c.clone(), Roles::Cycle { order: c })
    })
}

pub fn find_c4(g: &Graph) -> Option<PatternWitness> {
    find_hole(g, 4, Some(4))
}

pub fn find_k33(g: &Graph) -> Option<PatternWitness> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                let common: Vec<Vertex> = g
                    .common_neighbors(a, b)
                    .into_iter()
                    .filter(|&w| g.has_edge(c, w))
                    .collect();
                if let Some(other) = stable_triple(g, &common) {
                    let left = vec![a, b, c];
                    let mut all = left.clone();
                    all.extend_from_slice(&other);
                    return Some(PatternWitness::new(
                        PatternKind::K33,
                        all,
                        Roles::Sides { left, right: other },
                    ));
                }
            }
        }
    }
    None
}

fn stable_triple(g: &Graph, pool: &[Vertex]) -> Option<Vec<Vertex>> {
    for (i, &x) in pool.iter().enumerate() {
        for (j, &y) in pool.iter().enumerate().skip(i + 1) {
            if g.has_edge(x, y) {
                continue;
            }
            if let Some(&z) = pool[j + 1..]
                .iter()
                .find(|&&z| !g.has_edge(x, z) && !g.has_edge(y, z))
            {
                return Some(vec![x, y, z]);
            }
        }
    }
    None
}

/// Induced squares `[u1, u2, u3, u4]` in cyclic order with `u1 < u3`,
/// `u2 < u4` and `u1` the smallest, in lexicographic order.
pub(crate) fn squares(g: &Graph) -> Vec<[Vertex; 4]> {
    let n = g.n();
    let mut out = Vec::new();
    for u1 in 0..n {
        for u3 in u1 + 1..n {
            if g.has_edge(u1, u3) {
                continue;
            }
            let common: Vec<Vertex> = g
                .common_neighbors(u1, u3)
                .into_iter()
                .filter(|&w| w > u1)
                .collect();
            for (i, &u2) in common.iter().enumerate() {
                for &u4 in &common[i + 1..] {
                    if !g.has_edge(u2, u4) {
                        out.push([u1, u2, u3, u4]);
                    }
                }
            }
        }
    }
    out
}

pub fn find_k222(g: &Graph) -> Option<PatternWitness> {
    for sq in squares(g) {
        let common: Vec<Vertex> = g
            .vertices()
            .filter(|&w| sq.iter().all(|&s| g.has_edge(s, w)))
            .collect();
        for (i, &p) in common.iter().enumerate() {
            if let Some(&q) = common[i + 1..].iter().find(|&&q| !g.has_edge(p, q)) {
                let pairs = vec![(sq[0], sq[2]), (sq[1], sq[3]), (p, q)];
                let mut all = sq.to_vec();
                all.extend([p, q]);
                return Some(PatternWitness::new(PatternKind::K222, all, Roles::Pairs { pairs }));
            }
        }
    }
    None
}

fn triangles(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            for &w in g.neighbors(u).iter().filter(|&&w| w > v) {
                if g.has_edge(v, w) {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Two vertex-disjoint triangles joined by three induced paths with no
/// other edges.
pub fn find_prism(g: &Graph) -> Option<PatternWitness> {
    let tris = triangles(g);
    for (i, a) in tris.iter().enumerate() {
        for b0 in &tris[i + 1..] {
            if b0.iter().any(|v| a.contains(v)) {
                continue;
            }
            for perm in PERMS3 {
                let b = [b0[perm[0]], b0[perm[1]], b0[perm[2]]];
                let crossing = (0..3)
                    .any(|k| (0..3).any(|l| k != l && g.has_edge(a[k], b[l])));
                if crossing {
                    continue;
                }
                let mut placed = vec![false; g.n()];
                for &v in a.iter().chain(&b) {
                    placed[v] = true;
                }
                let mut paths = Vec::new();
                if prism_paths(g, a, &b, 0, &mut placed, &mut paths) {
                    let mut all: Vec<Vertex> = paths.iter().flatten().copied().collect();
                    all.sort_unstable();
                    return Some(PatternWitness::new(
                        PatternKind::Prism,
                        all,
                        Roles::Prism {
                            triangles: [*a, b],
                            paths,
                        },
                    ));
                }
            }
        }
    }
    None
}

fn prism_paths(
    g: &Graph,
    a: &[Vertex; 3],
    b: &[Vertex; 3],
    k: usize,
    placed: &mut [bool],
    paths: &mut Vec<Vec<Vertex>>,
) -> bool {
    if k == 3 {
        return true;
    }
    let (start, end) = (a[k], b[k]);
    if g.has_edge(start, end) {
        paths.push(vec![start, end]);
        if prism_paths(g, a, b, k + 1, placed, paths) {
            return true;
        }
        paths.pop();
        return false;
    }
    let mut path = vec![start];
    grow_path(g, end, &mut path, placed, &mut |placed, path| {
        paths.push(path.to_vec());
        if prism_paths(g, a, b, k + 1, placed, paths) {
            return true;
        }
        paths.pop();
        false
    })
}

/// Extends `path` towards `end` through unplaced vertices whose only placed
/// neighbors are the current tip (and `end`, which closes the path). Calls
/// `done` on every completed path; stops at the first `true`.
pub(crate) fn grow_path(
    g: &Graph,
    end: Vertex,
    path: &mut Vec<Vertex>,
    placed: &mut [bool],
    done: &mut dyn FnMut(&mut [bool], &[Vertex]) -> bool,
) -> bool {
    let tip = *path.last().unwrap();
    for &w in g.neighbors(tip) {
        if placed[w] {
            continue;
        }
        let clean = g
            .neighbors(w)
            .iter()
            .all(|&x| !placed[x] || x == tip || x == end);
        if !clean {
            continue;
        }
        placed[w] = true;
        path.push(w);
        let hit = if g.has_edge(w, end) {
            path.push(end);
            let r = done(placed, path);
            path.pop();
            r
        } else {
            grow_path(g, end, path, placed, done)
        };
        path.pop();
        placed[w] = false;
        if hit {
            return true;
        }
    }
    false
}

fn apex_search(
    g: &Graph,
    max_len: usize,
    accept: impl Fn(&[Vertex], &[bool]) -> bool,
) -> Option<(Vertex, Vec<Vertex>)> {
    let mut found = None;
    let mut on = vec![false; g.n()];
    let _ = for_each_hole(g, 4, max_len, |c| {
        for &v in c {
            on[v] = true;
        }
        let hit = g
            .vertices()
            .filter(|&v| !on[v])
            .find(|&v| {
                let adj: Vec<bool> = c.iter().map(|&x| g.has_edge(v, x)).collect();
                accept(c, &adj)
            });
        for &v in c {
            on[v] = false;
        }
        match hit {
            Some(v) => {
                found = Some((v, c.to_vec()));
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    found
}

fn apex_witness(kind: PatternKind, (apex, hole): (Vertex, Vec<Vertex>)) -> PatternWitness {
    let mut all = hole.clone();
    all.push(apex);
    PatternWitness::new(kind, all, Roles::Apex { apex, hole })
}

/// Exactly four neighbors on the hole, consecutive along it.
fn four_consecutive(adj: &[bool]) -> bool {
    let len = adj.len();
    if adj.iter().filter(|&&b| b).count() != 4 {
        return false;
    }
    if len == 4 {
        return true;
    }
    (0..len).any(|i| (0..4).all(|k| adj[(i + k) % len]))
}

pub fn find_boat(g: &Graph) -> Option<PatternWitness> {
    apex_search(g, usize::MAX, |_, adj| four_consecutive(adj))
        .map(|w| apex_witness(PatternKind::Boat, w))
}

pub fn find_four_wheel(g: &Graph) -> Option<PatternWitness> {
    apex_search(g, 4, |_, adj| adj.iter().all(|&b| b))
        .map(|w| apex_witness(PatternKind::FourWheel, w))
}

pub fn find_wheel(g: &Graph) -> Option<PatternWitness> {
    apex_search(g, usize::MAX, |_, adj| adj.iter().filter(|&&b| b).count() >= 3)
        .map(|w| apex_witness(PatternKind::Wheel, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn triangle_examples() {
        assert!(find_triangle(&complete(4)).is_some());
        assert!(find_triangle(&cycle(5)).is_none());
        let w = find_triangle(&triangular_prism()).unwrap();
        assert!(w.vertices == vec![0, 1, 2] || w.vertices == vec![3, 4, 5]);
    }

    #[test]
    fn hole_examples() {
        let c6 = find_hole(&cycle(6), 4, None).unwrap();
        assert_eq!(c6.vertices, vec![0, 1, 2, 3, 4, 5]);
        assert!(find_hole(&complete(4), 4, None).is_none());
        let k23 = complete_multipartite(&[2, 3]);
        let holes = enumerate_holes(&k23);
        assert_eq!(holes.len(), 3);
        assert!(holes.iter().all(|h| h.len() == 4));
    }

    #[test]
    fn k33_examples() {
        assert!(find_k33(&complete_multipartite(&[3, 3])).is_some());
        assert!(find_k33(&complete_multipartite(&[3, 4])).is_some());
        assert!(find_k33(&cycle(6)).is_none());
    }

    #[test]
    fn k222_examples() {
        assert!(find_k222(&complete_multipartite(&[2, 2, 2])).is_some());
        assert!(find_k222(&complete(4)).is_none());
        let (lk4, _) = line_graph(&complete(4));
        assert!(find_k222(&lk4).is_some());
    }

    #[test]
    fn prism_examples() {
        let w = find_prism(&triangular_prism()).unwrap();
        assert_eq!(w.vertices, (0..6).collect::<Vec<_>>());
        assert!(find_prism(&complete_multipartite(&[3, 3])).is_none());
        assert!(find_prism(&cycle(6)).is_none());
    }

    #[test]
    fn apex_examples() {
        let w4 = complete_multipartite(&[1, 2, 2]);
        assert!(find_four_wheel(&w4).is_some());
        assert!(find_boat(&w4).is_some());
        // C5 plus a vertex seeing four consecutive hole vertices
        let boat = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1), (5, 2), (5, 3)],
        )
        .unwrap();
        let b = find_boat(&boat).unwrap();
        assert!(b.verify(&boat));
        let c6 = cycle(6);
        assert!(find_boat(&c6).is_none());
        assert!(find_four_wheel(&c6).is_none());
        assert!(find_wheel(&c6).is_none());
    }

    #[test]
    fn k4_search() {
        assert_eq!(find_k4(&complete(4)), Some(vec![0, 1, 2, 3]));
        assert_eq!(find_k4(&complete_multipartite(&[2, 2, 2])), None);
    }
}
