use crate::error::{Error, Result};
use crate::graph::{bfs_layering, induced_subgraph, shortest_cycle, Coloring, Graph, Vertex};
use crate::layering::combine_layer_colorings;

use super::{color_girth5, lift, per_component, ColoringResult, Ctx, Mode, Rule, Violation, ViolationKind};

/// Colors `g` by layering each component and coloring the layers one level
/// down the chain; level 1 colors layers with the girth-5 greedy.
pub(crate) fn color_level(ctx: &mut Ctx, g: &Graph, ids: &[Vertex], depth: usize, level: u8) -> Result<Coloring> {
    per_component(ctx, g, ids, depth, |ctx, g, ids, depth| layered(ctx, g, ids, depth, level))
}

fn layered(ctx: &mut Ctx, g: &Graph, ids: &[Vertex], depth: usize, level: u8) -> Result<Coloring> {
    if depth > ctx.depth_limit {
        let v = Violation::new(ViolationKind::DepthLimit, "nesting depth exceeded", ids.to_vec());
        return ctx.violate(g, ids, depth, v);
    }
    let rule = match level {
        1 => Rule::C1,
        2 => Rule::C2,
        _ => Rule::C3,
    };
    let step = ctx.open(depth, rule, ids, Vec::new());
    let l = bfs_layering(g, 0)?;
    let mut per_layer = Vec::with_capacity(l.depth());
    for (i, layer) in l.layers.iter().enumerate() {
        let sub = induced_subgraph(g, layer);
        let sub_ids: Vec<Vertex> = sub.ids.iter().map(|&v| ids[v]).collect();
        let c = if i == 0 {
            Coloring::new(vec![0], 1)?
        } else if level == 1 {
            girth5_layer(ctx, &sub.graph, &sub_ids, depth + 1)?
        } else {
            color_level(ctx, &sub.graph, &sub_ids, depth + 1, level - 1)?
        };
        per_layer.push(c);
    }
    ctx.trace[step].layer_palettes = per_layer.iter().map(Coloring::palette_size).collect();
    let c = combine_layer_colorings(g, &l, &per_layer)?;
    ctx.close(step, c.palette_size());
    Ok(c)
}

fn girth5_layer(ctx: &mut Ctx, g: &Graph, ids: &[Vertex], depth: usize) -> Result<Coloring> {
    if let Some(cycle) = shortest_cycle(g).filter(|c| c.len() < 5) {
        let v = Violation::new(
            ViolationKind::LayerGirth,
            format!("layer contains a cycle of length {}", cycle.len()),
            cycle,
        );
        return ctx.violate(g, ids, depth, lift(v, ids));
    }
    match color_girth5(g) {
        Ok(c) => Ok(c),
        Err(Error::ClassViolation(v)) => ctx.violate(g, ids, depth, lift(*v, ids)),
        Err(e) => Err(e),
    }
}

fn run(g: &Graph, mode: Mode, level: u8, bound: usize) -> Result<ColoringResult> {
    let mut ctx = Ctx::new(mode, g.n());
    let ids: Vec<Vertex> = g.vertices().collect();
    let c = color_level(&mut ctx, g, &ids, 0, level)?;
    Ok(ctx.finish(g, c, bound))
}

/// Layers colored with at most three colors each; at most 6 colors for
/// {ISK4, K33, prism, boat}-free graphs.
pub fn color_c1(g: &Graph, mode: Mode) -> Result<ColoringResult> {
    run(g, mode, 1, 6)
}

/// Layers colored by [`color_c1`]; at most 12 colors for
/// {ISK4, K33, prism, 4-wheel}-free graphs.
pub fn color_c2(g: &Graph, mode: Mode) -> Result<ColoringResult> {
    run(g, mode, 2, 12)
}

/// Layers colored by [`color_c2`]; at most 24 colors for
/// {ISK4, K33, prism, K222}-free graphs.
pub fn color_c3(g: &Graph, mode: Mode) -> Result<ColoringResult> {
    run(g, mode, 3, 24)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::is_proper_coloring;

    #[test]
    fn chain_examples() {
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        for f in [color_c1, color_c2, color_c3] {
            let r = f(&tree, Mode::Strict).unwrap();
            assert_eq!(r.coloring.palette_size(), 2);
            assert!(r.violations.is_empty());
        }
        let r = color_c1(&cycle(5), Mode::Strict).unwrap();
        assert!(r.coloring.palette_size() <= 6);
        assert_eq!(color_c1(&cycle(6), Mode::Strict).unwrap().coloring.palette_size(), 2);
        let r = color_c2(&cycle(7), Mode::Strict).unwrap();
        assert!(r.coloring.palette_size() <= 12);
        let k23 = complete_multipartite(&[2, 3]);
        let r = color_c2(&k23, Mode::Strict).unwrap();
        assert!(is_proper_coloring(&k23, &r.coloring).unwrap());
        assert!(r.coloring.palette_size() <= 12);
        assert!(color_c3(&cycle(5), Mode::Strict).unwrap().coloring.palette_size() <= 24);
    }

    #[test]
    fn violations_by_mode() {
        // N_1 of K5 is K4, whose girth is 3
        let k5 = complete(5);
        assert!(matches!(color_c1(&k5, Mode::Strict), Err(Error::ClassViolation(_))));
        let r = color_c1(&k5, Mode::Tolerant).unwrap();
        assert_eq!(r.violations[0].kind, ViolationKind::LayerGirth);
        assert!(is_proper_coloring(&k5, &r.coloring).unwrap());
    }

    #[test]
    fn palettes_double_up_the_chain() {
        let g = petersen();
        let r = color_c2(&g, Mode::Tolerant).unwrap();
        let top = &r.trace[0];
        assert_eq!(top.rule, Rule::C2);
        let inner_max = r
            .trace
            .iter()
            .filter(|s| s.rule == Rule::C1 && s.depth == 1)
            .map(|s| s.palette)
            .max()
            .unwrap();
        assert!(top.palette <= 2 * inner_max);
    }
}
