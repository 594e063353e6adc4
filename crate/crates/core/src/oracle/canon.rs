//! Canonical labeling for graphs on at most 16 vertices.
//!
//! The code of a labeled graph reads the upper triangle of its adjacency
//! matrix row by row, first pair most significant. The canonical code is the
//! maximum code over the leaves of an individualization-refinement tree.

use crate::graph::Graph;

pub const MAX_CANON_N: usize = 16;

/// Ordered partition of the vertex set, stored as cell membership.
#[derive(Clone)]
struct Partition {
    /// `cell[v]` is the index of the cell containing `v`.
    cell: Vec<u8>,
    cells: usize,
}

fn refine(masks: &[u64], p: &mut Partition) {
    let n = masks.len();
    loop {
        // signature: neighbor counts per cell, four bits each
        let mut sig = vec![(0u8, 0u64); n];
        for v in 0..n {
            let mut s = 0u64;
            let mut m = masks[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                s += 1u64 << (4 * (15 - p.cell[w] as u64));
            }
            sig[v] = (p.cell[v], s);
        }
        let mut keys: Vec<(u8, u64)> = sig.clone();
        keys.sort_unstable();
        keys.dedup();
        if keys.len() == p.cells {
            return;
        }
        for (cell, s) in p.cell.iter_mut().zip(&sig).take(n) {
            *cell = keys.binary_search(s).unwrap() as u8;
        }
        p.cells = keys.len();
    }
}

fn individualize(p: &Partition, v: usize) -> Partition {
    let c = p.cell[v];
    let cell = p
        .cell
        .iter()
        .enumerate()
        .map(|(w, &x)| if x > c || (x == c && w != v) { x + 1 } else { x })
        .collect();
    Partition {
        cell,
        cells: p.cells + 1,
    }
}

fn leaf_code(masks: &[u64], p: &Partition) -> u128 {
    let n = masks.len();
    let mut at = vec![0usize; n];
    for v in 0..n {
        at[p.cell[v] as usize] = v;
    }
    let mut code = 0u128;
    for i in 0..n {
        let row = masks[at[i]];
        for &w in &at[i + 1..] {
            code = code << 1 | (row >> w & 1) as u128;
        }
    }
    code
}

fn search(masks: &[u64], p: Partition, best: &mut Option<u128>) {
    let n = masks.len();
    if p.cells == n {
        let code = leaf_code(masks, &p);
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    }
    let mut size = vec![0usize; p.cells];
    for &c in &p.cell {
        size[c as usize] += 1;
    }
    let target = size.iter().position(|&s| s > 1).unwrap() as u8;
    let members: Vec<usize> = (0..n).filter(|&v| p.cell[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &members {
        // swapping twins is an automorphism fixing the partition
        let twin = tried.iter().any(|&w| {
            let bv = 1u64 << v;
            let bw = 1u64 << w;
            masks[v] & !bw == masks[w] & !bv
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut q = individualize(&p, v);
        refine(masks, &mut q);
        search(masks, q, best);
    }
}

/// Canonical code of `g`; equal codes (for equal `n`) mean isomorphic graphs.
///
/// Panics if `g` has more than [`MAX_CANON_N`] vertices.
pub fn canonical_code(g: &Graph) -> u128 {
    canonical_code_masks(&g.masks())
}

pub(crate) fn canonical_code_masks(masks: &[u64]) -> u128 {
    let n = masks.len();
    assert!(n <= MAX_CANON_N, "canonical form supports at most {MAX_CANON_N} vertices");
    if n <= 1 {
        return 0;
    }
    let mut degrees: Vec<u32> = masks.iter().map(|m| m.count_ones()).collect();
    let by_degree = degrees.clone();
    degrees.sort_unstable();
    degrees.dedup();
    let mut p = Partition {
        cell: by_degree
            .iter()
            .map(|d| degrees.binary_search(d).unwrap() as u8)
            .collect(),
        cells: degrees.len(),
    };
    refine(masks, &mut p);
    let mut best = None;
    search(masks, p, &mut best);
    best.unwrap()
}

/// Rebuilds the canonical representative from its code.
pub fn graph_from_code(n: usize, code: u128) -> Graph {
    let mut masks = vec![0u64; n];
    let total = n * n.saturating_sub(1) / 2;
    let mut bit = total;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                masks[i] |= 1 << j;
                masks[j] |= 1 << i;
            }
        }
    }
    Graph::from_masks(&masks)
}

/// Isomorphism test through canonical codes.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_code(a) == canonical_code(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let e: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(g.n(), &e).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        let g = petersen();
        let c = canonical_code(&g);
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        assert_eq!(canonical_code(&relabel(&g, &perm)), c);
        let back = graph_from_code(10, c);
        assert_eq!(canonical_code(&back), c);
        assert!(isomorphic(&back, &g));
        assert!(!isomorphic(&cycle(6), &disjoint_union(&cycle(3), &cycle(3))));
    }

    #[test]
    fn regular_graphs_are_distinguished() {
        // prism and K33 are both cubic on six vertices
        assert_ne!(
            canonical_code(&triangular_prism()),
            canonical_code(&complete_multipartite(&[3, 3]))
        );
    }
}
