use crate::graph::{components_without, Graph, Vertex};

use super::{squares, PatternKind, PatternWitness, Roles};

/// Decides whether `g` itself is a rich square.
///
/// Returns the first square (in a fixed vertex order) around which every
/// component of `g - S` is a link, with at least two components. Embedded
/// rich squares inside a larger graph are not searched for.
pub fn find_rich_square(g: &Graph) -> Option<PatternWitness> {
    if g.n() < 6 {
        return None;
    }
    for sq in squares(g) {
        let comps = components_without(g, &sq);
        if comps.len() < 2 {
            continue;
        }
        let links: Option<Vec<Vec<Vertex>>> = comps.iter().map(|c| link_order(g, sq, c)).collect();
        if let Some(links) = links {
            return Some(PatternWitness::new(
                PatternKind::RichSquare,
                g.vertices().collect(),
                Roles::RichSquare { square: sq, links },
            ));
        }
    }
    None
}

/// Bitmask of square positions adjacent to `v`.
fn seen(g: &Graph, sq: [Vertex; 4], v: Vertex) -> u8 {
    (0..4).filter(|&i| g.has_edge(v, sq[i])).fold(0, |m, i| m | 1 << i)
}

/// The component `comp` as a link of `sq`, oriented so that its first
/// vertex sees `u1`. `None` when it is not a link.
pub(crate) fn link_order(g: &Graph, sq: [Vertex; 4], comp: &[Vertex]) -> Option<Vec<Vertex>> {
    if comp.len() == 1 {
        return (seen(g, sq, comp[0]) == 0b1111).then(|| comp.to_vec());
    }
    let inside = |v: Vertex| comp.binary_search(&v).is_ok();
    let deg = |v: Vertex| g.neighbors(v).iter().filter(|&&w| inside(w)).count();
    let edges: usize = comp.iter().map(|&v| deg(v)).sum::<usize>() / 2;
    if edges + 1 != comp.len() || comp.iter().any(|&v| deg(v) > 2) {
        return None;
    }
    let start = *comp.iter().find(|&&v| deg(v) == 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| inside(w) && w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != comp.len() {
        return None;
    }
    if order[1..order.len() - 1].iter().any(|&v| seen(g, sq, v) != 0) {
        return None;
    }
    let (p, q) = (seen(g, sq, order[0]), seen(g, sq, *order.last().unwrap()));
    match (p, q) {
        (0b0011, 0b1100) | (0b1001, 0b0110) => Some(order),
        (0b1100, 0b0011) | (0b0110, 0b1001) => {
            order.reverse();
            Some(order)
        }
        _ => None,
    }
}
