//! Instance builders shared by the integration tests.
#![allow(dead_code)]

use cuhl::generators::{gen_grid, gen_random, gen_random_metric};
use cuhl::hierarchy::build_cch;
use cuhl::labeling::build_canonical_hcuhl;
use cuhl::ordering::{nested_dissection, Alpha, SeparatorMode};
use cuhl::{ChordalSupergraph, Graph, LabelSet, Metric, Order};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Connected random graph with `n` drawn from `lo..=hi` and between `n - 1`
/// and roughly `2n` edges.
pub fn random_graph(seed: u64, lo: usize, hi: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let n = rng.gen_range(lo..=hi);
    let max = n * (n - 1) / 2;
    let m = rng.gen_range(n - 1..=(2 * n).min(max).max(n - 1));
    gen_random(n, m, seed).unwrap()
}

pub fn four_cycle() -> (Graph, Metric) {
    let g = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
    let m = Metric::from_triples(&g, [(0, 1, 1), (2, 0, 10), (1, 3, 1), (3, 2, 1)]).unwrap();
    (g, m)
}

pub fn p3() -> Graph {
    Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
}

pub fn k3() -> Graph {
    Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

pub struct Instance {
    pub graph: Graph,
    pub metric: Metric,
    pub order: Order,
    pub cch: ChordalSupergraph,
    pub labels: LabelSet,
}

pub fn instance(graph: Graph, metric: Metric, order: Order) -> Instance {
    let cch = build_cch(&graph, &order);
    let labels = build_canonical_hcuhl(&cch);
    Instance { graph, metric, order, cch, labels }
}

/// Nested-dissection instance; grids use the grid-aware separators.
pub fn nd_instance(graph: Graph, metric: Metric) -> Instance {
    let mode = if cuhl::ordering::detect_grid(&graph).is_some() {
        SeparatorMode::GridAware
    } else {
        SeparatorMode::Heuristic
    };
    let (_, order) = nested_dissection(&graph, Alpha::TWO_THIRDS, mode).unwrap();
    instance(graph, metric, order)
}

pub fn random_weighted_nd(seed: u64, lo: usize, hi: usize) -> Instance {
    let g = random_graph(seed, lo, hi);
    let m = gen_random_metric(&g, 1, 100, seed.wrapping_mul(31));
    nd_instance(g, m)
}

pub fn weighted_grid(p: usize, q: usize, seed: u64) -> Instance {
    let g = gen_grid(p, q).unwrap();
    let m = gen_random_metric(&g, 1, 100, seed);
    nd_instance(g, m)
}
