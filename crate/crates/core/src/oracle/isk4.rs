use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::patterns::grow_path;

/// Default cap for the subset sweep.
pub const ISK4_SWEEP_LIMIT: usize = 16;

/// An induced subdivision of `K4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Isk4Witness {
    /// Sorted vertex set.
    pub vertices: Vec<Vertex>,
    /// The four vertices of degree three, sorted.
    pub branch: [Vertex; 4],
    /// One path per pair of branch vertices, in the order
    /// 01, 02, 03, 12, 13, 23 of `branch`.
    pub paths: Vec<Vec<Vertex>>,
}

impl Isk4Witness {
    /// Definition-level check of the witness against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let s = self.vertices.iter().fold(0u64, |m, &v| m | 1 << v);
        g.n() <= 64 && subdivision_in(&g.masks(), s).is_some()
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// Decides whether `G|s` is a subdivision of `K4`.
fn subdivision_in(masks: &[u64], s: u64) -> Option<Isk4Witness> {
    let k = s.count_ones() as usize;
    if k < 4 {
        return None;
    }
    let mut branch = Vec::with_capacity(4);
    let mut degree_sum = 0;
    for v in bits(s) {
        let d = (masks[v] & s).count_ones();
        match d {
            2 => {}
            3 => branch.push(v),
            _ => return None,
        }
        degree_sum += d as usize;
    }
    if branch.len() != 4 || degree_sum != 2 * k + 4 {
        return None;
    }
    let index = |v: Vertex| branch.iter().position(|&b| b == v);
    let mut paths: Vec<Option<Vec<Vertex>>> = vec![None; 6];
    let mut interior = 0;
    for (i, &b) in branch.iter().enumerate() {
        for first in bits(masks[b] & s) {
            let mut path = vec![b];
            let (mut prev, mut cur) = (b, first);
            while index(cur).is_none() {
                path.push(cur);
                let next = bits(masks[cur] & s & !(1 << prev)).next()?;
                prev = cur;
                cur = next;
            }
            path.push(cur);
            let j = index(cur)?;
            if j == i {
                return None;
            }
            interior += path.len() - 2;
            let slot = pair_slot(i.min(j), i.max(j));
            if i < j {
                if paths[slot].is_some() {
                    return None;
                }
                paths[slot] = Some(path);
            }
        }
    }
    // every pair met from both sides and nothing left over
    if interior / 2 + 4 != k || paths.iter().any(Option::is_none) {
        return None;
    }
    Some(Isk4Witness {
        vertices: bits(s).collect(),
        branch: [branch[0], branch[1], branch[2], branch[3]],
        paths: paths.into_iter().map(Option::unwrap).collect(),
    })
}

fn pair_slot(i: usize, j: usize) -> usize {
    match (i, j) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        _ => 5,
    }
}

/// Subsets of `pool` with exactly `k` members, in increasing order.
fn subsets_of_size(pool: u64, k: u32, mut visit: impl FnMut(u64) -> bool) -> bool {
    let ids: Vec<Vertex> = bits(pool).collect();
    let m = ids.len();
    if k as usize > m {
        return false;
    }
    if k == 0 {
        return visit(0);
    }
    // Gosper's hack over positions in `ids`
    let mut x: u64 = (1u64 << k) - 1;
    let end = 1u64 << m;
    while x < end {
        let s = bits(x).fold(0u64, |acc, i| acc | 1 << ids[i]);
        if visit(s) {
            return true;
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    false
}

fn sweep(g: &Graph, required: u64) -> Option<Isk4Witness> {
    let n = g.n();
    let masks = g.masks();
    let pool = ((1u128 << n) - 1) as u64 & !required;
    let fixed = required.count_ones();
    let mut found = None;
    for k in 4..=n as u32 {
        if k < fixed {
            continue;
        }
        let hit = subsets_of_size(pool, k - fixed, |rest| {
            let s = rest | required;
            // a subdivision of K4 on k vertices has k + 2 edges
            let edges: u32 = bits(s).map(|v| (masks[v] & s).count_ones()).sum::<u32>() / 2;
            if edges != k + 2 {
                return false;
            }
            found = subdivision_in(&masks, s);
            found.is_some()
        });
        if hit {
            break;
        }
    }
    found
}

/// Smallest induced subdivision of `K4`, by a sweep over vertex subsets in
/// increasing size. Fails above [`ISK4_SWEEP_LIMIT`] vertices.
pub fn contains_isk4(g: &Graph) -> Result<Option<Isk4Witness>> {
    if g.n() > ISK4_SWEEP_LIMIT {
        return Err(Error::SizeLimit {
            n: g.n(),
            limit: ISK4_SWEEP_LIMIT,
        });
    }
    Ok(sweep(g, 0))
}

/// The sweep without the size cap (still limited to 64 vertices).
pub fn contains_isk4_unbounded(g: &Graph) -> Result<Option<Isk4Witness>> {
    if g.n() > 64 {
        return Err(Error::SizeLimit { n: g.n(), limit: 64 });
    }
    Ok(sweep(g, 0))
}

/// An ISK4 using vertex `v`, if any. Used when `g - v` is known to be free.
pub fn isk4_through(g: &Graph, v: Vertex) -> Option<Isk4Witness> {
    sweep(g, 1 << v)
}

/// Second, independent search: fixes four branch vertices and grows the six
/// connecting paths one at a time, each induced against everything placed.
pub fn contains_isk4_anchored(g: &Graph) -> Option<Isk4Witness> {
    let n = g.n();
    let candidates: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let k = candidates.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let branch = [candidates[a], candidates[b], candidates[c], candidates[d]];
                    let mut placed = vec![false; n];
                    for &v in &branch {
                        placed[v] = true;
                    }
                    let mut paths = Vec::new();
                    if connect(g, &branch, 0, &mut placed, &mut paths) {
                        let mut vertices: Vec<Vertex> = paths.iter().flatten().copied().collect();
                        vertices.sort_unstable();
                        vertices.dedup();
                        return Some(Isk4Witness {
                            vertices,
                            branch,
                            paths,
                        });
                    }
                }
            }
        }
    }
    None
}

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn connect(
    g: &Graph,
    branch: &[Vertex; 4],
    k: usize,
    placed: &mut [bool],
    paths: &mut Vec<Vec<Vertex>>,
) -> bool {
    if k == 6 {
        return true;
    }
    let (x, y) = (branch[PAIRS[k].0], branch[PAIRS[k].1]);
    if g.has_edge(x, y) {
        paths.push(vec![x, y]);
        if connect(g, branch, k + 1, placed, paths) {
            return true;
        }
        paths.pop();
        return false;
    }
    let mut path = vec![x];
    grow_path(g, y, &mut path, placed, &mut |placed, p| {
        paths.push(p.to_vec());
        if connect(g, branch, k + 1, placed, paths) {
            return true;
        }
        paths.pop();
        false
    })
}
