//! Brute-force ground truth: ISK4 search, exact chromatic number,
//! isomorph-free enumeration and the exhaustive verification suites.

mod attach;
pub mod canon;
mod chromatic;
mod enumerate;
mod isk4;
mod suites;

use serde::Serialize;

use crate::graph::{bfs_layering, induced_subgraph, shortest_cycle, Graph, Vertex};

pub use attach::{classify_hole_attachment, HoleAttachment};
pub use canon::{canonical_code, graph_from_code, isomorphic};
pub use chromatic::{chromatic_number_exact, optimal_coloring, optimal_coloring_unbounded, CHROMATIC_LIMIT};
pub use enumerate::{enumerate_codes, enumerate_graphs, parse_filters, EnumOptions, Filter, MAX_ENUM_N};
pub use isk4::{
    contains_isk4, contains_isk4_anchored, contains_isk4_unbounded, isk4_through, Isk4Witness,
    ISK4_SWEEP_LIMIT,
};
pub use suites::{run_suite, Extremal, SuiteOptions, SuiteReport, SuiteViolation, SUITES};

/// A cycle inside one BFS layer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerCycle {
    pub root: Vertex,
    pub layer: usize,
    pub cycle: Vec<Vertex>,
}

/// Checks that every BFS layer from every root induces a forest.
pub fn verify_layer_forests(g: &Graph) -> Result<(), LayerCycle> {
    for root in g.vertices() {
        let l = bfs_layering(g, root).expect("root is in range");
        for (i, layer) in l.layers.iter().enumerate().skip(1) {
            let sub = induced_subgraph(g, layer);
            if let Some(c) = shortest_cycle(&sub.graph) {
                return Err(LayerCycle {
                    root,
                    layer: i,
                    cycle: c.into_iter().map(|v| sub.ids[v]).collect(),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn layer_forest_examples() {
        assert!(verify_layer_forests(&cycle(6)).is_ok());
        assert!(verify_layer_forests(&cycle(5)).is_ok());
        let e = verify_layer_forests(&complete(4)).unwrap_err();
        assert_eq!((e.root, e.layer, e.cycle.len()), (0, 1, 3));
    }

    #[test]
    fn isk4_implementations_agree() {
        for n in 4..=7 {
            for g in enumerate_graphs(n, &EnumOptions::default()).unwrap() {
                let a = contains_isk4(&g).unwrap();
                let b = contains_isk4_anchored(&g);
                assert_eq!(a.is_some(), b.is_some(), "{g:?}");
                if let Some(w) = b {
                    assert!(w.verify(&g));
                }
            }
        }
    }
}
