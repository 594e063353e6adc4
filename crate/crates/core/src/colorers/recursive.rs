use crate::decompose::{build_2cutset_blocks, find_clique_cutset, find_proper_2cutset, merge_colorings};
use crate::error::{Error, Result};
use crate::graph::{bfs_layering, induced_subgraph, Coloring, Graph, Subgraph, Vertex};
use crate::layering::combine_layer_colorings;
use crate::patterns::{
    find_k222, find_k33, find_k4, find_prism, find_rich_square, find_triangle, recognize_line_graph_subcubic,
    recognize_thick_multipartite,
};

use super::chain::color_level;
use super::{
    color_forest, color_line_graph, color_rich_square, color_thick_multipartite, per_component, ColoringResult, Ctx,
    Mode, Rule, Violation, ViolationKind,
};

type Piece = fn(&mut Ctx, &Graph, &[Vertex], usize) -> Result<Coloring>;

fn lift_ids(local: &[Vertex], ids: &[Vertex]) -> Vec<Vertex> {
    local.iter().map(|&v| ids[v]).collect()
}

fn trivial(ctx: &mut Ctx, g: &Graph, ids: &[Vertex], depth: usize) -> Coloring {
    let c = Coloring::from_colors(vec![0; g.n()]);
    let s = ctx.open(depth, Rule::Trivial, ids, Vec::new());
    ctx.close(s, c.palette_size());
    c
}

/// Recurse on two blocks of `g` and glue the colorings.
fn split(
    ctx: &mut Ctx,
    g: &Graph,
    ids: &[Vertex],
    depth: usize,
    blocks: [Subgraph; 2],
    (rule, witness): (Rule, Vec<Vertex>),
    piece: Piece,
) -> Result<Coloring> {
    let step = ctx.open(depth, rule, ids, lift_ids(&witness, ids));
    let mut out = Vec::with_capacity(2);
    for b in &blocks {
        out.push(piece(ctx, &b.graph, &lift_ids(&b.ids, ids), depth + 1)?);
    }
    let c = merge_colorings(g.n(), &out[0], &blocks[0].ids, &out[1], &blocks[1].ids)?;
    ctx.close(step, c.palette_size());
    Ok(c)
}

fn clique_blocks(g: &Graph, clique: &[Vertex], x: &[Vertex], y: &[Vertex]) -> [Subgraph; 2] {
    let side = |s: &[Vertex]| {
        let mut v = s.to_vec();
        v.extend_from_slice(clique);
        induced_subgraph(g, &v)
    };
    [side(x), side(y)]
}

fn depth_guard(ctx: &mut Ctx, g: &Graph, ids: &[Vertex], depth: usize) -> Option<Result<Coloring>> {
    (depth > ctx.depth_limit).then(|| {
        let v = Violation::new(
            ViolationKind::DepthLimit,
            format!("decomposition depth exceeded {}", ctx.depth_limit),
            ids.to_vec(),
        );
        ctx.violate(g, ids, depth, v)
    })
}

fn multipartite(ctx: &mut Ctx, g: &Graph, ids: &[Vertex], depth: usize, k33: Vec<Vertex>) -> Result<Coloring> {
    match recognize_thick_multipartite(g).filter(|s| s.thick) {
        Some(shape) => {
            let s = ctx.open(depth, Rule::ThickMultipartite, ids, lift_ids(&k33, ids));
            let c = color_thick_multipartite(&shape);
            ctx.close(s, c.palette_size());
            Ok(c)
        }
        None => {
            let v = Violation::new(
                ViolationKind::K33NotMultipartite,
                "contains K33 but is neither thick multipartite nor split by a clique cutset",
                lift_ids(&k33, ids),
            );
            ctx.violate(g, ids, depth, v)
        }
    }
}

fn triangle_free_piece(ctx: &mut Ctx, g: &Graph, ids: &[Vertex], depth: usize) -> Result<Coloring> {
    if let Some(r) = depth_guard(ctx, g, ids, depth) {
        return r;
    }
    if g.n() <= 1 {
        return Ok(trivial(ctx, g, ids, depth));
    }
    if let Some(cut) = find_clique_cutset(g)? {
        let blocks = clique_blocks(g, &cut.clique, &cut.x, &cut.y);
        return split(ctx, g, ids, depth, blocks, (Rule::CliqueCutset, cut.clique), triangle_free_piece);
    }
    if let Some(w) = find_k33(g) {
        return multipartite(ctx, g, ids, depth, w.vertices);
    }
    let step = ctx.open(depth, Rule::ForestLayers, ids, Vec::new());
    let l = bfs_layering(g, 0)?;
    let mut per_layer = Vec::with_capacity(l.depth());
    for layer in &l.layers {
        let sub = induced_subgraph(g, layer);
        let c = match color_forest(&sub.graph) {
            Ok(c) => c,
            Err(Error::NotAForest(cycle)) => {
                let sub_ids = lift_ids(&sub.ids, ids);
                let v = Violation::new(
                    ViolationKind::LayerNotForest,
                    format!("layer contains a cycle of length {}", cycle.len()),
                    lift_ids(&cycle, &sub_ids),
                );
                ctx.violate(&sub.graph, &sub_ids, depth + 1, v)?
            }
            Err(e) => return Err(e),
        };
        per_layer.push(c);
    }
    ctx.trace[step].layer_palettes = per_layer.iter().map(Coloring::palette_size).collect();
    let c = combine_layer_colorings(g, &l, &per_layer)?;
    ctx.close(step, c.palette_size());
    Ok(c)
}

/// At most 4 colors for {ISK4, triangle}-free graphs: clique cutsets are
/// split off, a K33 forces a thick complete bipartite graph, and otherwise
/// every BFS layer is a forest.
///
/// A triangle in the input is always an error, whatever the mode.
pub fn color_triangle_free(g: &Graph, mode: Mode) -> Result<ColoringResult> {
    if let Some(t) = find_triangle(g) {
        return Err(Error::ContainsTriangle(t.vertices));
    }
    let mut ctx = Ctx::new(mode, g.n());
    let ids: Vec<Vertex> = g.vertices().collect();
    let c = per_component(&mut ctx, g, &ids, 0, triangle_free_piece)?;
    Ok(ctx.finish(g, c, 4))
}

fn general_piece(ctx: &mut Ctx, g: &Graph, ids: &[Vertex], depth: usize) -> Result<Coloring> {
    if let Some(r) = depth_guard(ctx, g, ids, depth) {
        return r;
    }
    if g.n() <= 1 {
        return Ok(trivial(ctx, g, ids, depth));
    }
    if let Some(k4) = find_k4(g) {
        let v = Violation::new(ViolationKind::ContainsK4, "contains K4", lift_ids(&k4, ids));
        return ctx.violate(g, ids, depth, v);
    }
    if let Some(cut) = find_clique_cutset(g)? {
        let blocks = clique_blocks(g, &cut.clique, &cut.x, &cut.y);
        return split(ctx, g, ids, depth, blocks, (Rule::CliqueCutset, cut.clique), general_piece);
    }
    if let Some(w) = find_k33(g) {
        return multipartite(ctx, g, ids, depth, w.vertices);
    }
    if let Some(cut) = find_proper_2cutset(g)? {
        let (bx, by) = build_2cutset_blocks(g, &cut)?;
        return split(ctx, g, ids, depth, [bx, by], (Rule::Proper2Cutset, vec![cut.a, cut.b]), general_piece);
    }
    if let Some(w) = find_k222(g).or_else(|| find_prism(g)) {
        if let Some(kp) = recognize_line_graph_subcubic(g)? {
            let s = ctx.open(depth, Rule::LineGraph, ids, lift_ids(&w.vertices, ids));
            let c = color_line_graph(g, &kp)?;
            ctx.close(s, c.palette_size());
            return Ok(c);
        }
        if let Some(rs) = find_rich_square(g) {
            let Some(square) = (match &rs.roles {
                crate::patterns::Roles::RichSquare { square, .. } => Some(square.to_vec()),
                _ => None,
            }) else {
                unreachable!("rich-square witnesses carry their square")
            };
            let s = ctx.open(depth, Rule::RichSquare, ids, lift_ids(&square, ids));
            let c = color_rich_square(g, &rs)?;
            ctx.close(s, c.palette_size());
            return Ok(c);
        }
        let v = Violation::new(
            ViolationKind::UnresolvedPrismOrK222,
            format!("contains a {} but is neither a line graph nor a rich square", w.kind),
            lift_ids(&w.vertices, ids),
        );
        return ctx.violate(g, ids, depth, v);
    }
    color_level(ctx, g, ids, depth, 3)
}

/// At most 24 colors for ISK4-free graphs. Branches, in order: clique
/// cutset, K33, proper 2-cutset, prism or K222 (line graph or rich square),
/// and finally the three-level layering chain.
pub fn color_general(g: &Graph, mode: Mode) -> Result<ColoringResult> {
    let mut ctx = Ctx::new(mode, g.n());
    let ids: Vec<Vertex> = g.vertices().collect();
    let c = per_component(&mut ctx, g, &ids, 0, general_piece)?;
    Ok(ctx.finish(g, c, 24))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::is_proper_coloring;

    #[test]
    fn triangle_free_examples() {
        let r = color_triangle_free(&cycle(5), Mode::Strict).unwrap();
        assert_eq!(r.coloring.palette_size(), 3);
        let r = color_triangle_free(&complete_multipartite(&[3, 3]), Mode::Strict).unwrap();
        assert_eq!(r.coloring.palette_size(), 2);
        assert_eq!(r.trace[0].rule, Rule::ThickMultipartite);
        assert!(matches!(
            color_triangle_free(&complete(3), Mode::Tolerant),
            Err(Error::ContainsTriangle(_))
        ));
    }

    #[test]
    fn petersen_is_flagged() {
        let p = petersen();
        assert!(matches!(color_triangle_free(&p, Mode::Strict), Err(Error::ClassViolation(_))));
        let r = color_triangle_free(&p, Mode::Tolerant).unwrap();
        assert!(!r.violations.is_empty());
        assert!(is_proper_coloring(&p, &r.coloring).unwrap());
    }

    #[test]
    fn general_examples() {
        let r = color_general(&complete_multipartite(&[2, 2, 2]), Mode::Strict).unwrap();
        assert_eq!(r.trace[0].rule, Rule::LineGraph);
        assert_eq!(r.coloring.palette_size(), 3);

        let (lp, _) = line_graph(&petersen());
        let r = color_general(&lp, Mode::Strict).unwrap();
        assert_eq!(r.coloring.palette_size(), 4);

        let k24 = complete_multipartite(&[2, 4]);
        let r = color_general(&k24, Mode::Strict).unwrap();
        assert_eq!(r.trace[0].rule, Rule::Proper2Cutset);
        assert!(is_proper_coloring(&k24, &r.coloring).unwrap());
        assert!(r.coloring.palette_size() <= 24);
        // the marker edge puts each block in a triangle, so three colors
        assert_eq!(r.coloring.palette_size(), 3);
    }

    #[test]
    fn k4_is_a_violation() {
        assert!(color_general(&complete(4), Mode::Strict).is_err());
        let r = color_general(&complete(4), Mode::Tolerant).unwrap();
        assert_eq!(r.violations[0].kind, ViolationKind::ContainsK4);
        assert_eq!(r.coloring.palette_size(), 4);
    }

    #[test]
    fn deterministic() {
        let g = petersen();
        let a = color_general(&g, Mode::Tolerant).unwrap();
        let b = color_general(&g, Mode::Tolerant).unwrap();
        assert_eq!(a, b);
    }
}
