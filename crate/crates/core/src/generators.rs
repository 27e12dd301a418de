//! Deterministic graph and metric generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Metric, Order, VertexId, Weight};
use crate::labeling::LabelSet;
use crate::{Error, Result};

/// `p × q` grid with 4-neighborhood; vertex `(row, col)` has id `row * q + col`.
pub fn gen_grid(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return Err(Error::invalid("grid dimensions must be at least 1"));
    }
    let id = |r: usize, c: usize| r * q + c;
    let mut edges = Vec::with_capacity(2 * p * q);
    for r in 0..p {
        for c in 0..q {
            if c + 1 < q {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < p {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(p * q, edges)
}

/// The star-clique family together with its short hierarchical hub labeling.
#[derive(Debug, Clone)]
pub struct StarClique {
    pub k: usize,
    pub graph: Graph,
    pub metric: Metric,
    /// `L(s) = {s}`, `L(c_i) = {s} ∪ {c_j | j ≥ i}`, `L(leaf of c_i) = {s, c_i}`.
    pub labels: LabelSet,
}

impl StarClique {
    /// Leaves of star `i` are `i*k .. i*k + k`.
    pub fn leaf(&self, star: usize, j: usize) -> VertexId {
        star * self.k + j
    }

    pub fn center(&self, i: usize) -> VertexId {
        self.k * self.k + i
    }

    pub fn apex(&self) -> VertexId {
        self.k * self.k + self.k
    }

    /// Leaves first, then centers `c_0 .. c_{k-1}`, then the apex: the
    /// identity order, which the labeling respects.
    pub fn construction_order(&self) -> Order {
        Order::identity(self.graph.num_vertices())
    }
}

pub const STAR_EDGE: Weight = 1;
pub const CLIQUE_EDGE: Weight = 5;
pub const APEX_LEAF_EDGE: Weight = 2;
pub const APEX_CENTER_EDGE: Weight = 3;

/// `k` stars with `k` leaves each, centers joined in a clique, plus an apex
/// adjacent to every leaf and every center.
pub fn gen_star_clique(k: usize) -> Result<StarClique> {
    if k == 0 {
        return Err(Error::invalid("star-clique needs k ≥ 1"));
    }
    let n = 1 + k + k * k;
    let center = |i: usize| k * k + i;
    let apex = k * k + k;
    let mut triples = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let leaf = i * k + j;
            triples.push((leaf, center(i), STAR_EDGE));
            triples.push((leaf, apex, APEX_LEAF_EDGE));
        }
        for j in i + 1..k {
            triples.push((center(i), center(j), CLIQUE_EDGE));
        }
        triples.push((center(i), apex, APEX_CENTER_EDGE));
    }
    let graph = Graph::from_edges(n, triples.iter().map(|&(u, v, _)| (u, v)))?;
    let metric = Metric::from_triples(&graph, triples)?;

    let mut lists = vec![Vec::new(); n];
    lists[apex] = vec![apex];
    for i in 0..k {
        let mut hubs = vec![apex];
        hubs.extend((i..k).map(center));
        lists[center(i)] = hubs;
        for j in 0..k {
            lists[i * k + j] = vec![apex, center(i)];
        }
    }
    let labels = LabelSet::from_lists(lists)?;
    Ok(StarClique { k, graph, metric, labels })
}

/// Complete graph on `n` vertices with all edges of length 2, plus one extra
/// vertex (id `n`) joined to every other vertex by an edge of length 1.
pub fn gen_complete_with_apex(n: usize) -> Result<(Graph, Metric)> {
    let apex = n;
    let mut triples = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            triples.push((u, v, 2));
        }
        triples.push((u, apex, 1));
    }
    let graph = Graph::from_edges(n + 1, triples.iter().map(|&(u, v, _)| (u, v)))?;
    let metric = Metric::from_triples(&graph, triples)?;
    Ok((graph, metric))
}

pub const MAX_EXPONENTIAL_N: usize = 39;

/// `ℓ({u,v}) = 3^max(rank(u), rank(v))` with 1-based ranks. Any simple path
/// then costs less than `3^(r+1)` where `r` is its top rank, so a path through
/// a higher vertex is always longer.
pub fn gen_weights_exponential(g: &Graph, ord: &Order) -> Result<Metric> {
    if g.num_vertices() > MAX_EXPONENTIAL_N {
        return Err(Error::ExponentialOverflow);
    }
    if ord.len() != g.num_vertices() {
        return Err(Error::invalid("order size does not match the graph"));
    }
    Ok(Metric::from_fn(g, |u, v| {
        let top = ord.rank(u).max(ord.rank(v)) + 1;
        3u64.pow(top as u32)
    }))
}

/// Seeded connected random graph with `n` vertices and `m` edges: a random
/// recursive tree plus uniformly drawn extra edges, relabeled by a random
/// permutation.
pub fn gen_random(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("random graph needs n ≥ 1"));
    }
    let max_edges = n * (n - 1) / 2;
    if m + 1 < n || m > max_edges {
        return Err(Error::invalid(format!(
            "connected simple graph on {n} vertices needs {} ≤ m ≤ {max_edges}",
            n - 1
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut relabel: Vec<VertexId> = (0..n).collect();
    relabel.shuffle(&mut rng);
    let mut present = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut add = |u: VertexId, v: VertexId, edges: &mut Vec<(VertexId, VertexId)>| {
        let key = (u.min(v), u.max(v));
        if present.insert(key) {
            edges.push((relabel[u], relabel[v]));
            true
        } else {
            false
        }
    };
    for v in 1..n {
        let u = rng.gen_range(0..v);
        add(u, v, &mut edges);
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            add(u, v, &mut edges);
        }
    }
    Graph::from_edges(n, edges)
}

/// Uniform integer weights in `lo..=hi`.
pub fn gen_random_metric(g: &Graph, lo: Weight, hi: Weight, seed: u64) -> Metric {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Metric::from_fn(g, |_, _| rng.gen_range(lo..=hi))
}

/// Distinct powers of two per edge, so that no two distinct edge sets have the
/// same total length and every shortest path is unique. Needs `m ≤ 62`.
pub fn gen_unique_path_metric(g: &Graph, seed: u64) -> Result<Metric> {
    let m = g.num_edges();
    if m > 62 {
        return Err(Error::invalid("unique-path metric supports at most 62 edges"));
    }
    let mut exponents: Vec<u32> = (0..m as u32).collect();
    exponents.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut next = exponents.into_iter();
    Ok(Metric::from_fn(g, |_, _| 1u64 << next.next().unwrap()))
}

/// Seeded random permutation order.
pub fn gen_random_order(n: usize, seed: u64) -> Order {
    let mut vertices: Vec<VertexId> = (0..n).collect();
    vertices.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Order::from_vertices(vertices).expect("shuffle is a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_counts() {
        let g = gen_grid(1, 1).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (1, 0));
        let g = gen_grid(3, 3).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (9, 12));
        let g = gen_grid(2, 2).unwrap();
        assert_eq!(g.num_edges(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(gen_grid(0, 3).is_err());
    }

    #[test]
    fn grid_closed_forms() {
        for p in 1..=32 {
            let g = gen_grid(p, p).unwrap();
            assert_eq!(g.num_vertices(), p * p);
            assert_eq!(g.num_edges(), 2 * p * p - 2 * p);
        }
    }

    #[test]
    fn star_clique_k2() {
        let sc = gen_star_clique(2).unwrap();
        assert_eq!(sc.graph.num_vertices(), 7);
        assert_eq!(sc.graph.num_edges(), 11);
        assert_eq!(sc.labels.label(sc.apex()).len(), 1);
        assert_eq!(sc.labels.label(sc.center(0)).len(), 3);
        assert_eq!(sc.labels.label(sc.center(1)).len(), 2);
        for star in 0..2 {
            for j in 0..2 {
                assert_eq!(sc.labels.label(sc.leaf(star, j)), &[sc.center(star), sc.apex()]);
            }
        }
        assert!(sc.labels.respects(&sc.construction_order()));
        assert!(gen_star_clique(0).is_err());
    }

    #[test]
    fn star_clique_edge_count() {
        for k in 1..=8 {
            let sc = gen_star_clique(k).unwrap();
            assert_eq!(sc.graph.num_edges(), k * k + k * (k - 1) / 2 + k * k + k);
        }
    }

    #[test]
    fn exponential_weights() {
        // a=0, b=1, c=2; path a-b-c with ranks a=1, c=2, b=3
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let ord = Order::from_ranks(vec![0, 2, 1]).unwrap();
        let m = gen_weights_exponential(&p3, &ord).unwrap();
        assert_eq!(m.weight(&p3, 0, 1), Some(27));
        assert_eq!(m.weight(&p3, 1, 2), Some(27));

        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let m = gen_weights_exponential(&k3, &Order::identity(3)).unwrap();
        assert_eq!(m.weight(&k3, 0, 1), Some(9));
        assert_eq!(m.weight(&k3, 0, 2), Some(27));
        assert_eq!(m.weight(&k3, 1, 2), Some(27));

        let big = gen_random(40, 39, 1).unwrap();
        assert_eq!(
            gen_weights_exponential(&big, &Order::identity(40)),
            Err(Error::ExponentialOverflow)
        );
        let edge = gen_random(39, 38, 1).unwrap();
        assert!(gen_weights_exponential(&edge, &Order::identity(39)).is_ok());
    }

    #[test]
    fn random_graphs_are_connected_and_deterministic() {
        for seed in 0..20 {
            let g = gen_random(30, 45, seed).unwrap();
            assert_eq!(g.num_edges(), 45);
            assert!(g.is_connected());
            assert_eq!(g, gen_random(30, 45, seed).unwrap());
        }
        assert!(gen_random(5, 3, 0).is_err());
        assert!(gen_random(5, 11, 0).is_err());
    }

    #[test]
    fn complete_with_apex_shape() {
        let (g, m) = gen_complete_with_apex(4).unwrap();
        assert_eq!(g.num_edges(), 6 + 4);
        assert_eq!(m.weight(&g, 0, 4), Some(1));
        assert_eq!(m.weight(&g, 0, 3), Some(2));
    }
}
