//! Immutable simple graphs, basic traversals, and the coloring data model.
//!
//! Vertices are dense ids `0..n`. Adjacency is kept twice: as sorted neighbor
//! lists for iteration and as a packed bit matrix for O(1) edge queries. When
//! `n <= 64` every row fits in one word and [`Graph::mask`] exposes it, which
//! is what the brute-force oracle relies on.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    words: usize,
    bits: Vec<u64>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            m: 0,
            words,
            bits: vec![0; n * words],
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a simple graph. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert(u, v);
        }
        g.finish();
        Ok(g)
    }

    /// Builds a graph from one-word adjacency rows (`n <= 64`).
    ///
    /// # Panics
    /// If more than 64 rows are given or a row has a bit on the diagonal or
    /// past `n`, or the rows are not symmetric.
    pub fn from_masks(rows: &[u64]) -> Self {
        let n = rows.len();
        assert!(n <= 64, "mask construction needs n <= 64");
        let mut g = Graph::empty(n);
        for (u, &row) in rows.iter().enumerate() {
            assert_eq!(row >> u & 1, 0, "loop at {u}");
            assert!(n == 64 || row >> n == 0, "row {u} out of range");
            let mut r = row;
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                assert_eq!(rows[v] >> u & 1, 1, "asymmetric rows at {u},{v}");
                if u < v {
                    g.insert(u, v);
                }
            }
        }
        g.finish();
        g
    }

    fn insert(&mut self, u: Vertex, v: Vertex) {
        if self.has_edge(u, v) {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    /// A copy of this graph with the extra edges added.
    pub fn with_edges(&self, extra: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut edges = self.edges();
        edges.extend_from_slice(extra);
        Graph::from_edges(self.n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `v` as a single word. Only valid for `n <= 64`.
    #[inline]
    pub fn mask(&self, v: Vertex) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[v * self.words]
    }

    /// All adjacency rows as words (`n <= 64`).
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "masks need n <= 64");
        (0..self.n).map(|v| self.mask(v)).collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Sorted common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        self.adj[u]
            .iter()
            .copied()
            .filter(|&w| self.has_edge(v, w))
            .collect()
    }

    pub fn is_clique(&self, s: &[Vertex]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_stable(&self, s: &[Vertex]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("complement edges are valid")
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || connected_components(self).len() == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges())?;
        st.end()
    }
}

/// An induced subgraph together with the original id of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `ids[i]` is the parent vertex behind vertex `i` of `graph`.
    pub ids: Vec<Vertex>,
}

/// `G|S`. The set is sorted and deduplicated; new ids follow that order.
pub fn induced_subgraph(g: &Graph, s: &[Vertex]) -> Subgraph {
    let mut ids = s.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in ids.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &v) in ids.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = pos[w];
            if j != usize::MAX && i < j {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edges(ids.len(), &edges).expect("induced edges are valid");
    Subgraph { graph, ids }
}

/// A total vertex coloring with an explicit palette size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    colors: Vec<usize>,
    palette: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, palette: usize) -> Result<Self> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= palette) {
            return Err(Error::ColorOutOfPalette {
                vertex,
                color,
                palette,
            });
        }
        Ok(Coloring { colors, palette })
    }

    /// Palette is one more than the largest color used.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let palette = colors.iter().max().map_or(0, |&c| c + 1);
        Coloring { colors, palette }
    }

    /// Converts a partial assignment, failing on the first unassigned vertex.
    pub fn from_partial(colors: &[Option<usize>], palette: usize) -> Result<Self> {
        let total = colors
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(Error::Unassigned(v)))
            .collect::<Result<Vec<_>>>()?;
        Coloring::new(total, palette)
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn palette_size(&self) -> usize {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually assigned.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette];
        for &c in &self.colors {
            seen[c] = true;
        }
        seen.into_iter().filter(|&b| b).count()
    }
}

pub fn is_proper_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.len() != g.n() {
        return Err(Error::PartialColoring {
            expected: g.n(),
            got: c.len(),
        });
    }
    Ok(g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v)))
}

/// Greedy coloring: vertices are colored in `order`, each with the least
/// color unused by its already-colored neighbors.
pub fn greedy_coloring(g: &Graph, order: &[Vertex]) -> Coloring {
    let mut colors: Vec<Option<usize>> = vec![None; g.n()];
    let mut used = Vec::new();
    for &v in order {
        used.clear();
        used.resize(g.degree(v) + 1, false);
        for &w in g.neighbors(v) {
            if let Some(c) = colors[w] {
                if c < used.len() {
                    used[c] = true;
                }
            }
        }
        colors[v] = used.iter().position(|&b| !b);
    }
    let colors = colors
        .into_iter()
        .map(|c| c.expect("order covers every vertex"))
        .collect();
    Coloring::from_colors(colors)
}

/// BFS distance classes `N_0 = {root}, N_1, ...` of the root's component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Layering {
    pub root: Vertex,
    /// Each layer sorted by vertex id.
    pub layers: Vec<Vec<Vertex>>,
    #[serde(skip)]
    dist: Vec<Option<usize>>,
}

impl Layering {
    pub fn layer_of(&self, v: Vertex) -> Option<usize> {
        self.dist.get(v).copied().flatten()
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// Vertex count of the host graph the layering was built on.
    pub fn host_n(&self) -> usize {
        self.dist.len()
    }

    /// `N_0 ∪ ... ∪ N_i`.
    pub fn up_to(&self, i: usize) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.layers.iter().take(i + 1).flatten().copied().collect();
        out.sort_unstable();
        out
    }
}

pub fn bfs_layering(g: &Graph, root: Vertex) -> Result<Layering> {
    if root >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: g.n(),
        });
    }
    let dist = bfs_distances(g, root);
    let depth = dist.iter().flatten().max().map_or(0, |&d| d + 1);
    let mut layers = vec![Vec::new(); depth];
    for (v, d) in dist.iter().enumerate() {
        if let Some(d) = d {
            layers[*d].push(v);
        }
    }
    Ok(Layering { root, layers, dist })
}

pub(crate) fn bfs_distances(g: &Graph, root: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Shortest `from`–`to` path using only vertices with `allowed[v]`, ties
/// broken towards lower ids. Both ends must be allowed.
pub(crate) fn shortest_path_within(
    g: &Graph,
    allowed: &[bool],
    from: Vertex,
    to: Vertex,
) -> Option<Vec<Vertex>> {
    if !allowed[from] || !allowed[to] {
        return None;
    }
    let mut parent = vec![usize::MAX; g.n()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &w in g.neighbors(u) {
            if allowed[w] && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if parent[to] == usize::MAX {
        return None;
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    Some(path)
}

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Components of `G - removed`.
pub(crate) fn components_without(g: &Graph, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    for &r in removed {
        seen[r] = true;
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Length of the shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    shortest_cycle(g).map(|c| c.len())
}

/// A shortest cycle as a vertex sequence, `None` for forests.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut best: Option<(usize, Vertex, Vertex, Vertex)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if let Some((len, ..)) = best {
                if 2 * dist[u] + 1 >= len {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.is_none_or(|(b, ..)| len < b) {
                        best = Some((len, root, u, w));
                    }
                }
            }
        }
    }
    let (_, root, u, w) = best?;
    // Recompute the BFS tree of the winning root and trim the shared prefix.
    dist.iter_mut().for_each(|d| *d = usize::MAX);
    dist[root] = 0;
    parent[root] = root;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let chain = |mut v: Vertex| {
        let mut out = vec![v];
        while v != root {
            v = parent[v];
            out.push(v);
        }
        out.reverse();
        out
    };
    let a = chain(u);
    let b = chain(w);
    let common = a.iter().zip(&b).take_while(|(x, y)| x == y).count();
    let mut cycle: Vec<Vertex> = a[common - 1..].to_vec();
    cycle.extend(b[common..].iter().rev());
    Some(cycle)
}

/// Repeated minimum-degree removal (ties to the lowest id). Returns the
/// removal order and the largest degree seen at removal time.
pub fn degeneracy_order(g: &Graph) -> (Vec<Vertex>, usize) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        degeneracy = degeneracy.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    (order, degeneracy)
}

/// Greedy coloring along the reverse degeneracy order; uses at most
/// `degeneracy + 1` colors.
pub fn degeneracy_coloring(g: &Graph) -> (Coloring, usize) {
    let (mut order, d) = degeneracy_order(g);
    order.reverse();
    (greedy_coloring(g, &order), d)
}

/// Small named graphs used throughout tests, examples and the CLI.
pub mod families {
    use super::{Graph, Vertex};

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        complete_multipartite(&vec![1; n])
    }

    /// Parts are consecutive id ranges in the given order.
    pub fn complete_multipartite(sizes: &[usize]) -> Graph {
        let n = sizes.iter().sum();
        let mut part = Vec::with_capacity(n);
        for (p, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(p, s));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part[u] != part[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// Triangles 0,1,2 and 3,4,5 with matching i -- i+3.
    pub fn triangular_prism() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    /// `L(H)`: vertex `i` is the `i`-th edge of `h.edges()`, which is
    /// returned alongside.
    pub fn line_graph(h: &Graph) -> (Graph, Vec<(Vertex, Vertex)>) {
        let edges = h.edges();
        let mut out = Vec::new();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    out.push((i, j));
                }
            }
        }
        (Graph::from_edges(edges.len(), &out).unwrap(), edges)
    }

    /// Vertex-disjoint union; ids of `b` are shifted by `a.n()`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let mut edges = a.edges();
        edges.extend(b.edges().into_iter().map(|(u, v)| (u + a.n(), v + a.n())));
        Graph::from_edges(a.n() + b.n(), &edges).unwrap()
    }
}
