use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Which of the three outcomes holds for a set dominating a hole.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleAttachment {
    /// 1, 2 or 3.
    pub case: u8,
    /// `u_1, u_2, ...` from the dominating set.
    pub u: Vec<Vertex>,
    /// Their neighbors on the hole; for case 3 this is `v_1, v_2, v_3, v_3'`.
    pub v: Vec<Vertex>,
}

/// Classifies how `s` attaches to the hole `c` (given in cyclic order).
///
/// Cases are tried in the order 1, 2, 3. `Ok(None)` means no case applies,
/// which cannot happen for {ISK4, triangle, K33}-free graphs.
pub fn classify_hole_attachment(g: &Graph, c: &[Vertex], s: &[Vertex]) -> Result<Option<HoleAttachment>> {
    let len = c.len();
    let pos = |x: Vertex| c.iter().position(|&y| y == x);
    if len < 4
        || c.iter().any(|&x| x >= g.n())
        || !crate::patterns::check::induces(g, crate::patterns::PatternKind::Hole, c)
        || (0..len).any(|i| !g.has_edge(c[i], c[(i + 1) % len]))
    {
        return Err(Error::Precondition("`c` is not a hole in cyclic order".into()));
    }
    let mut dominated = vec![false; len];
    let mut attach: Vec<(Vertex, Vec<usize>)> = Vec::with_capacity(s.len());
    for &u in s {
        if u >= g.n() || pos(u).is_some() {
            return Err(Error::Precondition(format!("{u} is on the hole or out of range")));
        }
        let on: Vec<usize> = (0..len).filter(|&i| g.has_edge(u, c[i])).collect();
        if on.is_empty() {
            return Err(Error::Precondition(format!("{u} has no neighbor on the hole")));
        }
        for &i in &on {
            dominated[i] = true;
        }
        attach.push((u, on));
    }
    if dominated.iter().any(|&d| !d) {
        return Err(Error::Precondition("`s` does not dominate the hole".into()));
    }

    // first vertex with a single neighbor at each hole position
    let mut single: Vec<Option<Vertex>> = vec![None; len];
    for (u, on) in &attach {
        if on.len() == 1 && single[on[0]].is_none() {
            single[on[0]] = Some(*u);
        }
    }
    let spots: Vec<usize> = (0..len).filter(|&i| single[i].is_some()).collect();
    let make = |case: u8, at: &[usize], extra: Option<(Vertex, usize, usize)>| {
        let mut u: Vec<Vertex> = at.iter().map(|&i| single[i].unwrap()).collect();
        let mut v: Vec<Vertex> = at.iter().map(|&i| c[i]).collect();
        if let Some((w, a, b)) = extra {
            u.push(w);
            v.extend([c[a], c[b]]);
        }
        Some(HoleAttachment { case, u, v })
    };

    if spots.len() >= 4 {
        return Ok(make(1, &spots[..4], None));
    }
    let apart = |i: usize, j: usize| {
        let d = i.abs_diff(j);
        d != 1 && d != len - 1
    };
    for (x, &i) in spots.iter().enumerate() {
        for (y, &j) in spots.iter().enumerate().skip(x + 1) {
            for &k in &spots[y + 1..] {
                if apart(i, j) && apart(i, k) && apart(j, k) {
                    return Ok(make(2, &[i, j, k], None));
                }
            }
        }
    }
    for (w, on) in &attach {
        if on.len() != 2 {
            continue;
        }
        let (a, b) = (on[0], on[1]);
        let inner = spots.iter().find(|&&i| a < i && i < b);
        let outer = spots.iter().find(|&&i| i < a || b < i);
        if let (Some(&i), Some(&j)) = (inner, outer) {
            return Ok(make(3, &[i, j], Some((*w, a, b))));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn examples() {
        // C4 = 0123, u=4 sees {0,2}, v=5 sees {1}, w=6 sees {3}
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2), (5, 1), (6, 3)],
        )
        .unwrap();
        let r = classify_hole_attachment(&g, &[0, 1, 2, 3], &[4, 5, 6]).unwrap().unwrap();
        assert_eq!(r.case, 3);
        assert_eq!(r.u, [5, 6, 4]);
        assert_eq!(r.v, [1, 3, 0, 2]);

        let mut e: Vec<(usize, usize)> = cycle(5).edges();
        e.extend((0..5).map(|i| (i, i + 5)));
        let g = Graph::from_edges(10, &e).unwrap();
        let r = classify_hole_attachment(&g, &[0, 1, 2, 3, 4], &[5, 6, 7, 8, 9]).unwrap().unwrap();
        assert_eq!(r.case, 1);
        assert_eq!(r.u.len(), 4);

        let w = complete_multipartite(&[2, 2, 1]);
        // hole 0-2-1-3, hub 4
        assert!(classify_hole_attachment(&w, &[0, 2, 1, 3], &[4]).unwrap().is_none());
        assert!(classify_hole_attachment(&w, &[0, 2, 1, 3], &[]).is_err());
    }
}
