//! Reference implementations shared by the integration tests. None of
//! this goes through the library's search code.

#![allow(dead_code)]

use isk4::{Graph, Vertex};
use proptest::prelude::*;

/// Random graph on `lo..=hi` vertices; each pair is an edge with
/// probability `p/10` for a drawn `p` in `1..=9`.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi)
        .prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            (Just(n), 1u8..=9, prop::collection::vec(0u8..10, pairs))
        })
        .prop_map(|(n, p, draws)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if draws[k] < p {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
}

pub fn relabel(g: &Graph, perm: &[Vertex]) -> Graph {
    let edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<Vertex>> {
    (0u64..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

fn induced_edges(g: &Graph, s: &[Vertex]) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if g.has_edge(s[i], s[j]) {
                e.push((i, j));
            }
        }
    }
    e
}

/// Does `G|s` subdivide K4? Walk out of each degree-3 vertex along the
/// degree-2 vertices and collect which branch vertex each walk reaches.
pub fn is_isk4_set(g: &Graph, s: &[Vertex]) -> bool {
    let k = s.len();
    if k < 4 {
        return false;
    }
    let e = induced_edges(g, s);
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in &e {
        adj[a].push(b);
        adj[b].push(a);
    }
    let branch: Vec<usize> = (0..k).filter(|&v| adj[v].len() == 3).collect();
    if branch.len() != 4 || (0..k).any(|v| adj[v].len() != 3 && adj[v].len() != 2) || e.len() != k + 2 {
        return false;
    }
    let mut reached = std::collections::BTreeSet::new();
    for &b in &branch {
        for &first in &adj[b] {
            let (mut prev, mut cur) = (b, first);
            let mut steps = 0;
            while adj[cur].len() == 2 {
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
                steps += 1;
                if steps > k {
                    return false;
                }
            }
            if cur == b {
                return false;
            }
            reached.insert((b.min(cur), b.max(cur)));
        }
    }
    // six distinct branch pairs, each reached from both ends
    reached.len() == 6
}

pub fn naive_has_isk4(g: &Graph) -> bool {
    subsets(g.n()).any(|s| is_isk4_set(g, &s))
}

/// Smallest `k` admitting a proper `k`-coloring, by plain backtracking.
pub fn naive_chi(g: &Graph) -> usize {
    fn extend(g: &Graph, k: usize, col: &mut Vec<usize>) -> bool {
        let v = col.len();
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !g.has_edge(u, v) || col[u] != c) {
                col.push(c);
                if extend(g, k, col) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    (0..=g.n()).find(|&k| extend(g, k, &mut Vec::new())).unwrap()
}

pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

pub fn distinct(colors: &[usize]) -> usize {
    colors.iter().collect::<std::collections::BTreeSet<_>>().len()
}

/// Exact chromatic index by backtracking over the edge list.
pub fn naive_chromatic_index(g: &Graph) -> usize {
    let edges = g.edges();
    fn extend(edges: &[(usize, usize)], k: usize, col: &mut Vec<usize>) -> bool {
        let i = col.len();
        if i == edges.len() {
            return true;
        }
        let (a, b) = edges[i];
        for c in 0..k {
            let clash = (0..i).any(|j| {
                let (x, y) = edges[j];
                col[j] == c && (x == a || x == b || y == a || y == b)
            });
            if !clash {
                col.push(c);
                if extend(edges, k, col) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    (0..=edges.len() + 1).find(|&k| extend(&edges, k, &mut Vec::new())).unwrap()
}

/// Girth by brute force over vertex subsets inducing a cycle-containing
/// subgraph: the smallest set whose induced graph is a cycle.
pub fn naive_girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in subsets(g.n()) {
        let k = s.len();
        if k < 3 || best.is_some_and(|b| b <= k) {
            continue;
        }
        let e = induced_edges(g, &s);
        let mut deg = vec![0; k];
        for &(a, b) in &e {
            deg[a] += 1;
            deg[b] += 1;
        }
        if e.len() == k && deg.iter().all(|&d| d == 2) {
            let sub = isk4::graph::induced_subgraph(g, &s).graph;
            if sub.is_connected() {
                best = Some(k);
            }
        }
    }
    best
}
