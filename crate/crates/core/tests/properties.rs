mod common;

use common::*;
use isk4::colorers::{
    color_c1, color_c2, color_c3, color_general, color_girth5, color_greedy, color_triangle_free, edge_color_subcubic,
    Mode,
};
use isk4::decompose::{find_clique_cutset, maximal_flat_paths, merge_colorings, reduce_flat_path};
use isk4::graph::families::line_graph;
use isk4::graph::{
    bfs_layering, connected_components, degeneracy_coloring, degeneracy_order, girth, induced_subgraph, Coloring,
};
use isk4::io::{parse_graph, write_graph, Format};
use isk4::layering::{combine_layer_colorings, find_confluence, upstairs_path};
use isk4::oracle::{
    canonical_code, chromatic_number_exact, contains_isk4, contains_isk4_anchored, isomorphic, optimal_coloring,
};
use isk4::patterns::{find, find_k4, find_triangle, recognize_line_graph_subcubic, PatternKind};
use isk4::{Graph, Vertex};
use proptest::prelude::*;

fn permuted(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<Vertex>)> {
    graphs(lo, hi).prop_flat_map(|g| {
        let perm: Vec<Vertex> = (0..g.n()).collect();
        (Just(g), Just(perm).prop_shuffle())
    })
}

fn connected(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    // a random spanning tree plus random extra edges
    (lo..=hi)
        .prop_flat_map(|n| {
            let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
            (Just(n), parents, prop::collection::vec((0..n.max(1), 0..n.max(1)), 0..=n))
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (i + 1, p)).collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            Graph::from_edges(n, &edges).unwrap()
        })
}

/// Drops edges until every degree is at most three.
fn subcubic(g: &Graph) -> Graph {
    let mut deg = vec![0; g.n()];
    let mut keep = Vec::new();
    for (u, v) in g.edges() {
        if deg[u] < 3 && deg[v] < 3 {
            deg[u] += 1;
            deg[v] += 1;
            keep.push((u, v));
        }
    }
    Graph::from_edges(g.n(), &keep).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_code_ignores_labels((g, perm) in permuted(0, 12)) {
        let h = relabel(&g, &perm);
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        prop_assert!(isomorphic(&g, &h));
    }

    #[test]
    fn canonical_code_separates_edge_counts(g in graphs(2, 9)) {
        let (u, v) = (0, 1);
        let toggled = if g.has_edge(u, v) {
            let e: Vec<_> = g.edges().into_iter().filter(|&e| e != (u, v)).collect();
            Graph::from_edges(g.n(), &e).unwrap()
        } else {
            g.with_edges(&[(u, v)]).unwrap()
        };
        prop_assert_ne!(canonical_code(&g), canonical_code(&toggled));
    }

    #[test]
    fn chromatic_number_matches_backtracking(g in graphs(0, 8)) {
        let chi = chromatic_number_exact(&g).unwrap();
        prop_assert_eq!(chi, naive_chi(&g));
        let c = optimal_coloring(&g).unwrap();
        prop_assert!(is_proper(&g, c.colors()));
        prop_assert_eq!(c.palette_size(), chi);
    }

    #[test]
    fn isk4_search_matches_reference(g in graphs(0, 8)) {
        let w = contains_isk4(&g).unwrap();
        prop_assert_eq!(w.is_some(), naive_has_isk4(&g));
        prop_assert_eq!(contains_isk4_anchored(&g).is_some(), w.is_some());
        if let Some(w) = w {
            prop_assert!(is_isk4_set(&g, &w.vertices));
            prop_assert!(w.verify(&g));
        }
    }

    #[test]
    fn witnesses_verify(g in graphs(0, 11)) {
        for kind in PatternKind::ALL {
            if let Some(w) = find(&g, kind) {
                prop_assert!(w.verify(&g), "{} {:?}", kind, w);
            }
        }
        let tri = (0..g.n()).any(|a| (a + 1..g.n()).any(|b| (b + 1..g.n()).any(|c| {
            g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)
        })));
        prop_assert_eq!(find_triangle(&g).is_some(), tri);
    }

    #[test]
    fn girth_matches_subset_search(g in graphs(0, 10)) {
        prop_assert_eq!(girth(&g), naive_girth(&g));
    }

    #[test]
    fn colorers_are_proper(g in graphs(0, 14), seed in any::<u64>()) {
        let chi = if g.n() <= 10 { Some(naive_chi(&g)) } else { None };
        let mut results = vec![
            (24, color_general(&g, Mode::Tolerant).unwrap()),
            (6, color_c1(&g, Mode::Tolerant).unwrap()),
            (12, color_c2(&g, Mode::Tolerant).unwrap()),
            (24, color_c3(&g, Mode::Tolerant).unwrap()),
        ];
        if find_triangle(&g).is_none() {
            results.push((4, color_triangle_free(&g, Mode::Tolerant).unwrap()));
        }
        for (bound, r) in results {
            prop_assert!(is_proper(&g, r.coloring.colors()));
            prop_assert_eq!(r.bound_claimed, bound);
            let used = distinct(r.coloring.colors());
            if r.violations.is_empty() {
                prop_assert!(used <= bound, "{} colors over bound {}", used, bound);
            }
            if let Some(chi) = chi {
                prop_assert!(chi <= used);
            }
        }
        let gr = color_greedy(&g, seed);
        prop_assert!(is_proper(&g, gr.coloring.colors()));
        prop_assert!(distinct(gr.coloring.colors()) <= g.max_degree() + 1);
    }

    #[test]
    fn strict_and_tolerant_agree_without_violations(g in graphs(0, 12)) {
        let t = color_general(&g, Mode::Tolerant).unwrap();
        match color_general(&g, Mode::Strict) {
            Ok(s) => prop_assert_eq!(s, t),
            Err(_) => prop_assert!(!t.violations.is_empty()),
        }
    }

    #[test]
    fn k4_free_isk4_free_graphs_color_without_violations(g in graphs(0, 9)) {
        prop_assume!(find_k4(&g).is_none() && !naive_has_isk4(&g));
        let r = color_general(&g, Mode::Strict).unwrap();
        prop_assert!(is_proper(&g, r.coloring.colors()));
        prop_assert!(distinct(r.coloring.colors()) <= 24);
        if find_triangle(&g).is_none() {
            let r = color_triangle_free(&g, Mode::Strict).unwrap();
            prop_assert!(distinct(r.coloring.colors()) <= 4);
        }
    }

    #[test]
    fn degeneracy_order_is_greedy_minimum(g in graphs(0, 14)) {
        let (order, d) = degeneracy_order(&g);
        let mut alive = vec![true; g.n()];
        let mut seen = 0;
        for &v in &order {
            let deg = |x: Vertex| g.neighbors(x).iter().filter(|&&w| alive[w]).count();
            let min = (0..g.n()).filter(|&x| alive[x]).map(deg).min().unwrap();
            prop_assert_eq!(deg(v), min);
            seen = seen.max(min);
            alive[v] = false;
        }
        prop_assert_eq!(seen, d);
        let (c, d2) = degeneracy_coloring(&g);
        prop_assert_eq!(d, d2);
        prop_assert!(is_proper(&g, c.colors()));
        prop_assert!(c.palette_size() <= d + 1);
    }

    #[test]
    fn girth_five_isk4_free_has_low_degree(g in graphs(0, 11)) {
        if g.n() > 0 && girth(&g).is_none_or(|l| l >= 5) && !naive_has_isk4(&g) {
            prop_assert!(g.min_degree() <= 2);
            let c = color_girth5(&g).unwrap();
            prop_assert!(is_proper(&g, c.colors()));
            prop_assert!(c.palette_size() <= 3);
        }
    }

    #[test]
    fn flat_path_reduction_keeps_isk4_freeness(g in connected(3, 9)) {
        prop_assume!(!naive_has_isk4(&g));
        for p in maximal_flat_paths(&g) {
            prop_assert!(p.len() >= 2);
            for w in &p.vertices[1..p.vertices.len() - 1] {
                prop_assert_eq!(g.degree(*w), 2);
            }
            let (h, ids) = reduce_flat_path(&g, &p).unwrap();
            prop_assert_eq!(h.n(), g.n() - (p.vertices.len() - 2));
            prop_assert_eq!(ids.len(), h.n());
            prop_assert!(!naive_has_isk4(&h));
        }
    }

    #[test]
    fn round_trips_through_every_format(g in graphs(0, 20)) {
        for f in Format::ALL {
            let back = parse_graph(&write_graph(&g, f), f).unwrap();
            prop_assert_eq!(&back, &g);
        }
    }

    #[test]
    fn line_graphs_of_subcubic_graphs_are_recognized(g in connected(2, 9)) {
        let h = subcubic(&g);
        let (lg, _) = line_graph(&h);
        prop_assume!(lg.n() > 0 && lg.is_connected());
        let kp = recognize_line_graph_subcubic(&lg).unwrap();
        prop_assert!(kp.is_some());
        let kp = kp.unwrap();
        prop_assert!(kp.verify(&lg));
        prop_assert!(isomorphic(&line_graph(&kp.root).0, &lg) || kp.root.m() != lg.n());
    }

    #[test]
    fn subcubic_edge_colorings(g in graphs(0, 8)) {
        let h = subcubic(&g);
        let ec = edge_color_subcubic(&h);
        prop_assert!(ec.is_proper(h.n()));
        prop_assert!(ec.palette <= 4);
        prop_assert_eq!(ec.palette, naive_chromatic_index(&h));
    }

    #[test]
    fn upstairs_paths_hold_their_shape(g in connected(1, 30), root_pick in any::<prop::sample::Index>()) {
        let root = root_pick.index(g.n());
        let l = bfs_layering(&g, root).unwrap();
        for (i, layer) in l.layers.iter().enumerate().skip(1) {
            for (a, &x) in layer.iter().enumerate().take(4) {
                for &y in layer.iter().skip(a + 1).take(4) {
                    let p = upstairs_path(&g, &l, i, x, y).unwrap();
                    prop_assert_eq!(p.first(), Some(&x));
                    prop_assert_eq!(p.last(), Some(&y));
                    for (s, &u) in p.iter().enumerate() {
                        for (t, &v) in p.iter().enumerate().skip(s + 1) {
                            prop_assert_eq!(g.has_edge(u, v), t == s + 1, "path {:?} not induced", p);
                        }
                    }
                    let mut per = vec![0; l.layers.len()];
                    for &v in &p {
                        let j = l.layer_of(v).unwrap();
                        prop_assert!(j <= i);
                        per[j] += 1;
                    }
                    prop_assert!(per[1..=i].iter().all(|&c| c <= 2));
                    prop_assert_eq!(per[i], 2);
                }
            }
        }
    }

    #[test]
    fn confluences_have_the_right_shape(g in connected(3, 14), root_pick in any::<prop::sample::Index>()) {
        let root = root_pick.index(g.n());
        let l = bfs_layering(&g, root).unwrap();
        for (i, layer) in l.layers.iter().enumerate().skip(1) {
            if layer.len() < 3 {
                continue;
            }
            let tips = [layer[0], layer[1], layer[2]];
            let c = find_confluence(&g, &l, i, tips[0], tips[1], tips[2]).unwrap();
            prop_assert!(c.vertices.iter().all(|v| tips.contains(v) || l.layer_of(*v).unwrap() < i));
            prop_assert!(is_confluence(&g, &c.vertices, tips), "{:?}", c);
        }
    }

    #[test]
    fn layer_combination_adds_parities(g in connected(1, 16)) {
        let l = bfs_layering(&g, 0).unwrap();
        let per: Vec<Coloring> = l
            .layers
            .iter()
            .map(|layer| optimal_coloring(&induced_subgraph(&g, layer).graph).unwrap())
            .collect();
        let c = combine_layer_colorings(&g, &l, &per).unwrap();
        prop_assert!(is_proper(&g, c.colors()));
        let best = |odd: bool| per.iter().enumerate().filter(|(i, _)| (i % 2 == 1) == odd)
            .map(|(_, c)| c.palette_size()).max().unwrap_or(0);
        prop_assert_eq!(c.palette_size(), best(true) + best(false));
    }

    #[test]
    fn clique_cutset_merges_stay_proper(g in connected(2, 10)) {
        prop_assume!(find_k4(&g).is_none());
        if let Some(cut) = find_clique_cutset(&g).unwrap() {
            let mut union: Vec<Vertex> = cut.clique.iter().chain(&cut.x).chain(&cut.y).copied().collect();
            union.sort_unstable();
            prop_assert_eq!(union, (0..g.n()).collect::<Vec<_>>());
            let side = |s: &[Vertex]| {
                let mut v = s.to_vec();
                v.extend_from_slice(&cut.clique);
                induced_subgraph(&g, &v)
            };
            let (bx, by) = (side(&cut.x), side(&cut.y));
            let cx = optimal_coloring(&bx.graph).unwrap();
            let cy = optimal_coloring(&by.graph).unwrap();
            let m = merge_colorings(g.n(), &cx, &bx.ids, &cy, &by.ids).unwrap();
            prop_assert!(is_proper(&g, m.colors()));
            prop_assert_eq!(m.palette_size(), cx.palette_size().max(cy.palette_size()));
            prop_assert!(connected_components(&induced_subgraph(&g, &cut.x).graph).len() == 1);
        }
    }
}

/// Confluence check from the definition: a subdivided claw (or path) whose
/// ends are the tips, or a triangle with three disjoint pendant paths
/// ending at the tips.
fn is_confluence(g: &Graph, s: &[Vertex], tips: [Vertex; 3]) -> bool {
    let h = induced_subgraph(g, s);
    let hg = &h.graph;
    let local: Vec<usize> = tips.iter().map(|t| h.ids.iter().position(|v| v == t).unwrap()).collect();
    if !hg.is_connected() || hg.max_degree() > 3 {
        return false;
    }
    let leaves_are_tips = hg.vertices().all(|v| hg.degree(v) != 1 || local.contains(&v));
    if hg.m() + 1 == hg.n() {
        let hubs = hg.vertices().filter(|&v| hg.degree(v) == 3).count();
        return leaves_are_tips && hubs <= 1;
    }
    if hg.m() != hg.n() || !leaves_are_tips {
        return false;
    }
    let tri: Vec<Vertex> = hg
        .vertices()
        .filter(|&v| hg.neighbors(v).iter().any(|&a| hg.neighbors(v).iter().any(|&b| a < b && hg.has_edge(a, b))))
        .collect();
    if tri.len() != 3 || hg.vertices().any(|v| !tri.contains(&v) && hg.degree(v) > 2) {
        return false;
    }
    // cutting the triangle leaves three paths, one tip and one corner each
    let rest: Vec<(usize, usize)> = hg
        .edges()
        .into_iter()
        .filter(|&(a, b)| !(tri.contains(&a) && tri.contains(&b)))
        .collect();
    let f = Graph::from_edges(hg.n(), &rest).unwrap();
    let comps = connected_components(&f);
    comps.len() == 3
        && comps.iter().all(|c| {
            c.iter().filter(|v| tri.contains(v)).count() == 1 && c.iter().filter(|v| local.contains(v)).count() == 1
        })
}
