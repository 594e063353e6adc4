use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{families, Graph, Vertex};

/// Edge-disjoint cliques covering every edge, each vertex in at most two,
/// together with the root graph they describe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KrauszPartition {
    /// Cliques of size 2 or 3, each sorted.
    pub cliques: Vec<Vec<Vertex>>,
    /// Indices into `cliques` for each vertex.
    pub membership: Vec<Vec<usize>>,
    /// Root vertices `0..cliques.len()` are the cliques; later ones pad
    /// vertices lying in fewer than two cliques.
    pub root: Graph,
    /// The root edge standing for each vertex.
    pub edge_of: Vec<(Vertex, Vertex)>,
}

impl KrauszPartition {
    /// Checks the partition against `g` and that `edge_of` is an
    /// isomorphism from `g` onto the line graph of `root`.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.edge_of.len() != n || self.membership.len() != n {
            return false;
        }
        let mut covered = 0;
        for c in &self.cliques {
            if !(2..=3).contains(&c.len()) || !g.is_clique(c) {
                return false;
            }
            covered += c.len() * (c.len() - 1) / 2;
        }
        if covered != g.m() || self.membership.iter().any(|m| m.len() > 2) {
            return false;
        }
        if self.root.max_degree() > 3 {
            return false;
        }
        let (lg, edges) = families::line_graph(&self.root);
        if lg.n() != n {
            return false;
        }
        let mut image = Vec::with_capacity(n);
        for e in &self.edge_of {
            match edges.binary_search(e) {
                Ok(i) => image.push(i),
                Err(_) => return false,
            }
        }
        let mut hit = vec![false; n];
        for &i in &image {
            if std::mem::replace(&mut hit[i], true) {
                return false;
            }
        }
        (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == lg.has_edge(image[u], image[v])))
    }
}

struct Search<'a> {
    g: &'a Graph,
    rank: Vec<usize>,
    order: Vec<Vertex>,
    covered: Vec<bool>,
    open: Vec<usize>,
    count: Vec<usize>,
    cliques: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    fn edge(&self, u: Vertex, v: Vertex) -> usize {
        let (a, b) = (u.min(v), u.max(v));
        a * self.g.n() + b
    }

    fn fits(&self, c: &[Vertex]) -> bool {
        c.iter().all(|&v| self.count[v] < 2)
            && c.iter()
                .enumerate()
                .all(|(i, &u)| c[i + 1..].iter().all(|&v| !self.covered[self.edge(u, v)]))
    }

    fn apply(&mut self, c: &[Vertex], on: bool) {
        for (i, &u) in c.iter().enumerate() {
            for &v in &c[i + 1..] {
                let e = self.edge(u, v);
                self.covered[e] = on;
                if on {
                    self.open[u] -= 1;
                    self.open[v] -= 1;
                } else {
                    self.open[u] += 1;
                    self.open[v] += 1;
                }
            }
            if on {
                self.count[u] += 1;
            } else {
                self.count[u] -= 1;
            }
        }
    }

    fn run(&mut self) -> bool {
        let Some(&v) = self.order.iter().find(|&&v| self.open[v] > 0) else {
            return true;
        };
        let w = *self
            .g
            .neighbors(v)
            .iter()
            .filter(|&&w| !self.covered[self.edge(v, w)])
            .min_by_key(|&&w| self.rank[w])
            .unwrap();
        let mut candidates: Vec<Vec<Vertex>> = self
            .g
            .common_neighbors(v, w)
            .into_iter()
            .map(|x| {
                let mut c = vec![v, w, x];
                c.sort_unstable();
                c
            })
            .collect();
        candidates.push(vec![v.min(w), v.max(w)]);
        for c in candidates {
            if !self.fits(&c) {
                continue;
            }
            self.apply(&c, true);
            // a vertex whose two cliques are fixed cannot take more edges
            let dead = c.iter().any(|&u| self.count[u] == 2 && self.open[u] > 0);
            if !dead {
                self.cliques.push(c.clone());
                if self.run() {
                    return true;
                }
                self.cliques.pop();
            }
            self.apply(&c, false);
        }
        false
    }
}

/// Finds a partition of the edges into cliques of size at most three with
/// every vertex in at most two of them, i.e. recognizes `g` as the line
/// graph of a graph with maximum degree three.
pub fn recognize_line_graph_subcubic(g: &Graph) -> Result<Option<KrauszPartition>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if g.max_degree() > 4 {
        return Ok(None);
    }
    let seed = g.vertices().max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
    let mut order = Vec::with_capacity(n);
    let mut rank = vec![usize::MAX; n];
    if let Some(seed) = seed {
        rank[seed] = 0;
        order.push(seed);
        let mut queue = VecDeque::from([seed]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if rank[w] == usize::MAX {
                    rank[w] = order.len();
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
    }
    let mut search = Search {
        g,
        rank,
        order,
        covered: vec![false; n * n],
        open: g.vertices().map(|v| g.degree(v)).collect(),
        count: vec![0; n],
        cliques: Vec::new(),
    };
    if !search.run() {
        return Ok(None);
    }
    let mut cliques = search.cliques;
    cliques.sort();
    let mut membership = vec![Vec::new(); n];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            membership[v].push(i);
        }
    }
    let mut next = cliques.len();
    let mut edge_of = Vec::with_capacity(n);
    for m in &membership {
        let mut ends: Vec<Vertex> = m.clone();
        while ends.len() < 2 {
            ends.push(next);
            next += 1;
        }
        edge_of.push((ends[0].min(ends[1]), ends[0].max(ends[1])));
    }
    let root = Graph::from_edges(next, &edge_of)?;
    Ok(Some(KrauszPartition {
        cliques,
        membership,
        root,
        edge_of,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn examples() {
        let g = complete_multipartite(&[2, 2, 2]);
        let kp = recognize_line_graph_subcubic(&g).unwrap().unwrap();
        assert!(kp.verify(&g));
        assert_eq!(kp.root.n(), 4);
        assert_eq!(kp.root.m(), 6);

        let c5 = cycle(5);
        let kp = recognize_line_graph_subcubic(&c5).unwrap().unwrap();
        assert!(kp.verify(&c5));
        assert_eq!((kp.root.n(), kp.root.m()), (5, 5));

        assert!(recognize_line_graph_subcubic(&complete_multipartite(&[3, 3])).unwrap().is_none());
        assert!(recognize_line_graph_subcubic(&disjoint_union(&path(2), &path(2))).is_err());
    }

    #[test]
    fn single_vertex_and_petersen() {
        let kp = recognize_line_graph_subcubic(&Graph::empty(1)).unwrap().unwrap();
        assert_eq!(kp.root.m(), 1);
        let (lp, _) = line_graph(&petersen());
        let kp = recognize_line_graph_subcubic(&lp).unwrap().unwrap();
        assert!(kp.verify(&lp));
        assert_eq!(kp.root.n(), 10);
    }
}
