mod common;

use cuhl::bounds::check_lower_bounds;
use cuhl::customize::{
    customize_edges, customize_hierarchical, customize_queue_observed, triangle_pass, HierarchicalEngine,
};
use cuhl::generators::{gen_random_metric, gen_random_order, gen_unique_path_metric};
use cuhl::hierarchy::build_cch;
use cuhl::io;
use cuhl::labeling::{brute_force_canonical_labels, build_canonical_hcuhl, build_inverse_labels, verify_customizable_cover};
use cuhl::oracles::{
    all_pairs_distances, build_weighted_ch, canonical_hhl, ch_search_spaces, hop_diameter, verify_metric_cover,
};
use cuhl::ordering::{
    build_separator_decomposition, exact_b_alpha, nested_dissection, nested_dissection_order, Alpha, SeparatorMode,
};
use cuhl::query::{hl_query, hl_query_counted};
use proptest::prelude::*;

use common::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn graph_and_metric_files_round_trip(seed in any::<u64>()) {
        let g = random_graph(seed, 1, 40);
        let text = io::write_graph(&g);
        let back = io::parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(io::write_graph(&back), text);
        let m = gen_random_metric(&g, 1, 1000, seed);
        prop_assert_eq!(io::parse_metric(&g, &io::write_metric(&g, &m)).unwrap(), m);
    }

    #[test]
    fn label_files_round_trip(seed in any::<u64>()) {
        let inst = random_weighted_nd(seed, 1, 30);
        let ord = &inst.order;
        prop_assert_eq!(&io::parse_order(&io::write_order(ord), ord.len()).unwrap(), ord);
        let bare = io::parse_labels(&io::write_labels(&inst.labels)).unwrap();
        prop_assert_eq!(bare.to_lists(), inst.labels.to_lists());
        prop_assert_eq!(io::write_labels(&bare), io::write_labels(&inst.labels));
        let ed = customize_edges(&inst.cch, &inst.metric).unwrap();
        let c = customize_hierarchical(&inst.cch, &inst.labels, &ed, HierarchicalEngine::TopDown).unwrap();
        let back = io::parse_customized(&io::write_customized(&c)).unwrap();
        prop_assert_eq!(back.all_distances(), c.all_distances());
    }

    #[test]
    fn b_alpha_shrinks_as_alpha_grows(seed in any::<u64>()) {
        let g = random_graph(seed, 1, 12);
        let alphas = ["1/2", "3/5", "2/3", "3/4", "9/10"].map(|a| a.parse::<Alpha>().unwrap());
        let bs: Vec<usize> = alphas.iter().map(|&a| exact_b_alpha(&g, a).unwrap()).collect();
        prop_assert!(bs.windows(2).all(|w| w[0] >= w[1]), "{:?}", bs);
    }

    #[test]
    fn separator_trees_are_valid_and_shallow(seed in any::<u64>(), mode in 0..2usize) {
        let g = random_graph(seed, 1, 60);
        let mode = [SeparatorMode::Heuristic, SeparatorMode::GridAware][mode];
        let alpha = Alpha::TWO_THIRDS;
        let t = build_separator_decomposition(&g, alpha, mode).unwrap();
        t.validate(&g).unwrap();
        let n = g.num_vertices() as f64;
        let bound = (n.ln() / 1.5f64.ln() + 1e-9).floor() as usize + 1;
        prop_assert!(t.height() <= bound, "height {} > {}", t.height(), bound);
        let again = nested_dissection_order(&build_separator_decomposition(&g, alpha, mode).unwrap(), &g);
        prop_assert_eq!(nested_dissection_order(&t, &g), again);
    }

    #[test]
    fn exact_separators_yield_valid_trees(seed in any::<u64>()) {
        let g = random_graph(seed, 1, 14);
        let t = build_separator_decomposition(&g, Alpha::TWO_THIRDS, SeparatorMode::Exact).unwrap();
        t.validate(&g).unwrap();
        let root = t.node(t.roots()[0]);
        if g.num_vertices() > 1 {
            prop_assert_eq!(root.vertices.len(), exact_b_alpha(&g, Alpha::TWO_THIRDS).unwrap());
        }
    }

    #[test]
    fn canonical_labels_are_reflexive_covers(seed in any::<u64>()) {
        let g = random_graph(seed, 1, 32);
        let ord = gen_random_order(g.num_vertices(), seed);
        let l = build_canonical_hcuhl(&build_cch(&g, &ord));
        prop_assert!(l.is_reflexive());
        prop_assert!(l.respects(&ord));
        prop_assert!(verify_customizable_cover(&g, &l).passed());
    }

    #[test]
    fn query_merge_is_linear(seed in any::<u64>()) {
        let inst = random_weighted_nd(seed, 1, 40);
        let ed = customize_edges(&inst.cch, &inst.metric).unwrap();
        let c = customize_hierarchical(&inst.cch, &inst.labels, &ed, HierarchicalEngine::UpwardDijkstra).unwrap();
        let n = inst.graph.num_vertices();
        for s in 0..n {
            for t in 0..n {
                let (_, k) = hl_query_counted(&c, s, t).unwrap();
                prop_assert!(k <= inst.labels.len_of(s) + inst.labels.len_of(t));
            }
        }
    }

    #[test]
    fn triangle_pass_reaches_a_fixpoint(seed in any::<u64>()) {
        let inst = random_weighted_nd(seed, 2, 48);
        let mut ed = customize_edges(&inst.cch, &inst.metric).unwrap();
        prop_assert_eq!(triangle_pass(&inst.cch, &mut ed), 0);
        let dist = all_pairs_distances(&inst.graph, &inst.metric);
        for v in 0..inst.graph.num_vertices() {
            for (&u, &w) in inst.cch.up(v).iter().zip(ed.up_weights(v)) {
                prop_assert!(w >= dist[v][u]);
            }
        }
    }

    #[test]
    fn hybrid_cutoffs_agree(seed in any::<u64>()) {
        let inst = random_weighted_nd(seed, 1, 32);
        let n = inst.graph.num_vertices();
        let ed = customize_edges(&inst.cch, &inst.metric).unwrap();
        let reference = customize_hierarchical(&inst.cch, &inst.labels, &ed, HierarchicalEngine::UpwardDijkstra).unwrap();
        for cutoff in 0..=n + 1 {
            let c = customize_hierarchical(&inst.cch, &inst.labels, &ed, HierarchicalEngine::Hybrid { cutoff }).unwrap();
            prop_assert_eq!(c.all_distances(), reference.all_distances());
        }
    }

    #[test]
    fn queue_values_only_decrease(seed in any::<u64>()) {
        let inst = random_weighted_nd(seed, 2, 40);
        let l = &inst.labels;
        let mut last = vec![u64::MAX; l.total_size()];
        let mut monotone = true;
        let out = customize_queue_observed(&inst.graph, l, &build_inverse_labels(l), &inst.metric, |ev| {
            let e = l.entry(ev.x, ev.y).unwrap();
            monotone &= ev.value <= last[e];
            last[e] = ev.value;
        }).unwrap();
        prop_assert!(monotone);
        let d_hop = hop_diameter(&inst.graph, &inst.metric);
        prop_assert!(out.stats.dequeues <= (d_hop + 1) * l.total_size());
        prop_assert!(out.stats.max_per_pair as usize <= d_hop + 1);
    }

    #[test]
    fn queue_engine_handles_non_hierarchical_covers(seed in any::<u64>()) {
        // the union of two canonical labelings keeps the cover property but
        // respects no single order
        let g = random_graph(seed, 2, 24);
        let n = g.num_vertices();
        let a = brute_force_canonical_labels(&g, &gen_random_order(n, seed));
        let b = brute_force_canonical_labels(&g, &gen_random_order(n, seed ^ 1));
        let lists = a.to_lists().into_iter().zip(b.to_lists()).map(|(mut x, y)| {
            x.extend(y);
            x.sort_unstable();
            x.dedup();
            x
        }).collect();
        let l = cuhl::LabelSet::from_lists(lists).unwrap();
        prop_assert!(verify_customizable_cover(&g, &l).passed());
        let m = gen_random_metric(&g, 1, 50, seed);
        let out = cuhl::customize::customize_queue(&g, &l, &build_inverse_labels(&l), &m).unwrap();
        let dist = all_pairs_distances(&g, &m);
        for s in 0..n {
            for t in 0..n {
                prop_assert_eq!(hl_query(&out.labels, s, t).unwrap().map(|x| x.distance), Some(dist[s][t]));
            }
        }
    }

    #[test]
    fn metric_labels_within_customizable_labels(seed in any::<u64>()) {
        let g = random_graph(seed, 1, 32);
        let ord = gen_random_order(g.num_vertices(), seed);
        let m = gen_random_metric(&g, 1, 20, seed);
        let hhl = canonical_hhl(&g, &m, &ord).unwrap();
        let cuhl = brute_force_canonical_labels(&g, &ord);
        for v in 0..g.num_vertices() {
            prop_assert!(hhl.label(v).iter().all(|&u| cuhl.contains(v, u)));
        }
        prop_assert!(verify_metric_cover(&g, &m, &hhl).unwrap().passed());
    }

    #[test]
    fn ch_search_space_contains_metric_labels(seed in any::<u64>()) {
        // unique shortest paths; with ties the containment can fail
        let g = random_graph(seed, 2, 30);
        prop_assume!(g.num_edges() <= 62);
        let m = gen_unique_path_metric(&g, seed).unwrap();
        let ord = gen_random_order(g.num_vertices(), seed);
        let ss = ch_search_spaces(&build_weighted_ch(&g, &m, &ord).unwrap());
        let hhl = canonical_hhl(&g, &m, &ord).unwrap();
        for v in 0..g.num_vertices() {
            prop_assert!(hhl.label(v).iter().all(|u| ss.spaces[v].binary_search(u).is_ok()));
        }
    }

    #[test]
    fn canonical_labels_meet_lower_bounds(seed in any::<u64>()) {
        let g = random_graph(seed, 1, 18);
        let (_, ord) = nested_dissection(&g, Alpha::TWO_THIRDS, SeparatorMode::Heuristic).unwrap();
        for order in [ord, gen_random_order(g.num_vertices(), seed)] {
            let l = build_canonical_hcuhl(&build_cch(&g, &order));
            let r = check_lower_bounds(&g, &l, true).unwrap();
            prop_assert!(r.passed(), "{:?}", r);
        }
    }
}
