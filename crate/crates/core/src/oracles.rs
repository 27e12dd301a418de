//! Metric-dependent baselines: Dijkstra ground truth, hop-aware distances,
//! weighted contraction hierarchies and canonical metric hub labels.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use num_rational::Ratio;

use crate::generators::{gen_star_clique, StarClique};
use crate::graph::{add_weights, Graph, Metric, Order, VertexId, Weight, INFINITY};
use crate::labeling::{CoverReport, LabelSet};
use crate::parallel::map_range;
use crate::{Error, Result};

fn check_metric(g: &Graph, m: &Metric) -> Result<()> {
    if m.matches(g) {
        Ok(())
    } else {
        Err(Error::invalid("metric does not belong to the graph"))
    }
}

fn check_positive(m: &Metric) -> Result<()> {
    match m.min_weight() {
        Some(0) => Err(Error::invalid("weights must be positive")),
        _ => Ok(()),
    }
}

/// Distances from `s`, [`INFINITY`] for unreachable vertices.
pub fn dijkstra(g: &Graph, m: &Metric, s: VertexId) -> Vec<Weight> {
    restricted_dijkstra(g, m, s, |_| true)
}

/// Dijkstra that never enters vertices rejected by `allowed` (the source is
/// always settled).
fn restricted_dijkstra<F>(g: &Graph, m: &Metric, s: VertexId, allowed: F) -> Vec<Weight>
where
    F: Fn(VertexId) -> bool,
{
    let mut dist = vec![INFINITY; g.num_vertices()];
    let mut heap = BinaryHeap::new();
    dist[s] = 0;
    heap.push(Reverse((0, s)));
    while let Some(Reverse((d, x))) = heap.pop() {
        if d > dist[x] {
            continue;
        }
        for (&y, &w) in g.neighbors(x).iter().zip(m.around(x)) {
            let nd = add_weights(d, w);
            if nd < dist[y] && allowed(y) {
                dist[y] = nd;
                heap.push(Reverse((nd, y)));
            }
        }
    }
    dist
}

/// Row `s` holds the distances from `s`.
pub fn all_pairs_distances(g: &Graph, m: &Metric) -> Vec<Vec<Weight>> {
    map_range(g.num_vertices(), |s| dijkstra(g, m, s))
}

/// Distances from `s` together with the fewest edges on any shortest path.
/// Unreachable vertices get `usize::MAX` hops.
pub fn dijkstra_with_hops(g: &Graph, m: &Metric, s: VertexId) -> (Vec<Weight>, Vec<usize>) {
    let n = g.num_vertices();
    let mut best = vec![(INFINITY, usize::MAX); n];
    let mut heap = BinaryHeap::new();
    best[s] = (0, 0);
    heap.push(Reverse((0, 0, s)));
    while let Some(Reverse((d, h, x))) = heap.pop() {
        if (d, h) > best[x] {
            continue;
        }
        for (&y, &w) in g.neighbors(x).iter().zip(m.around(x)) {
            let cand = (add_weights(d, w), h + 1);
            if cand.0 != INFINITY && cand < best[y] {
                best[y] = cand;
                heap.push(Reverse((cand.0, cand.1, y)));
            }
        }
    }
    best.into_iter().unzip()
}

/// Largest, over connected pairs, of the minimum edge count among shortest
/// paths.
pub fn hop_diameter(g: &Graph, m: &Metric) -> usize {
    map_range(g.num_vertices(), |s| {
        dijkstra_with_hops(g, m, s).1.into_iter().filter(|&h| h != usize::MAX).max().unwrap_or(0)
    })
    .into_iter()
    .max()
    .unwrap_or(0)
}

/// Bellman–Ford rounds: entry `k` holds the lengths of shortest walks from
/// `s` that use at most `k` edges, for `k = 0..=max_hops`.
pub fn hop_bounded_distances(g: &Graph, m: &Metric, s: VertexId, max_hops: usize) -> Vec<Vec<Weight>> {
    let n = g.num_vertices();
    let mut rounds = Vec::with_capacity(max_hops + 1);
    let mut cur = vec![INFINITY; n];
    cur[s] = 0;
    rounds.push(cur.clone());
    for _ in 0..max_hops {
        let mut next = cur.clone();
        for (x, &dx) in cur.iter().enumerate() {
            if dx == INFINITY {
                continue;
            }
            for (&y, &w) in g.neighbors(x).iter().zip(m.around(x)) {
                next[y] = next[y].min(add_weights(dx, w));
            }
        }
        rounds.push(next.clone());
        cur = next;
    }
    rounds
}

/// Metric-dependent hierarchy: the base graph plus the shortcuts that exact
/// witness searches could not avoid, both with weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CHGraph {
    order: Order,
    /// `(neighbor, weight)` pairs above `v`, sorted by neighbor.
    up: Vec<Vec<(VertexId, Weight)>>,
    down: Vec<Vec<VertexId>>,
    shortcuts: Vec<(VertexId, VertexId, Weight)>,
}

impl CHGraph {
    pub fn num_vertices(&self) -> usize {
        self.up.len()
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn up(&self, v: VertexId) -> &[(VertexId, Weight)] {
        &self.up[v]
    }

    pub fn down(&self, v: VertexId) -> &[VertexId] {
        &self.down[v]
    }

    /// Shortcuts as `(lower, higher, weight)`, sorted.
    pub fn shortcuts(&self) -> &[(VertexId, VertexId, Weight)] {
        &self.shortcuts
    }
}

/// Contracts vertices in rank order. At each vertex `x`, every pair of
/// remaining neighbors `v, w` gets a shortcut of weight `ℓ(v,x) + ℓ(x,w)`
/// unless a Dijkstra among the remaining vertices other than `x` finds a
/// path of at most that length.
pub fn build_weighted_ch(g: &Graph, m: &Metric, ord: &Order) -> Result<CHGraph> {
    check_metric(g, m)?;
    check_positive(m)?;
    let n = g.num_vertices();
    if ord.len() != n {
        return Err(Error::invalid("order size must match the graph"));
    }
    let mut adj: Vec<BTreeMap<VertexId, Weight>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().zip(m.around(v).iter().copied()).collect())
        .collect();
    let mut contracted = vec![false; n];
    let mut up = vec![Vec::new(); n];
    let mut shortcuts = Vec::new();

    for r in 0..n {
        let x = ord.vertex(r);
        contracted[x] = true;
        let neighbors: Vec<(VertexId, Weight)> = adj[x].iter().map(|(&v, &w)| (v, w)).collect();
        up[x] = neighbors.clone();
        let mut added = Vec::new();
        for (i, &(v, wv)) in neighbors.iter().enumerate() {
            let targets = &neighbors[i + 1..];
            let Some(limit) = targets.iter().map(|&(_, ww)| add_weights(wv, ww)).max() else {
                continue;
            };
            let witness = bounded_search(&adj, &contracted, v, limit);
            for &(w, ww) in targets {
                let via = add_weights(wv, ww);
                if witness.get(&w).is_none_or(|&d| d > via) {
                    added.push((v, w, via));
                }
            }
        }
        for (v, w, via) in added {
            let old = adj[v].get(&w).copied();
            if old.is_none_or(|o| via < o) {
                adj[v].insert(w, via);
                adj[w].insert(v, via);
                if !g.has_edge(v, w) {
                    shortcuts.push(if ord.rank(v) < ord.rank(w) { (v, w, via) } else { (w, v, via) });
                }
            }
        }
        for &(v, _) in &neighbors {
            adj[v].remove(&x);
        }
    }

    shortcuts.sort_unstable();
    shortcuts.dedup_by_key(|s| (s.0, s.1));
    let mut down = vec![Vec::new(); n];
    for v in 0..n {
        for &(u, _) in &up[v] {
            down[u].push(v);
        }
    }
    Ok(CHGraph { order: ord.clone(), up, down, shortcuts })
}

/// Dijkstra from `s` over uncontracted vertices, stopping beyond `limit`.
fn bounded_search(
    adj: &[BTreeMap<VertexId, Weight>],
    contracted: &[bool],
    s: VertexId,
    limit: Weight,
) -> BTreeMap<VertexId, Weight> {
    let mut dist = BTreeMap::from([(s, 0)]);
    let mut heap = BinaryHeap::from([Reverse((0, s))]);
    while let Some(Reverse((d, x))) = heap.pop() {
        if d > dist[&x] {
            continue;
        }
        for (&y, &w) in &adj[x] {
            let nd = add_weights(d, w);
            if contracted[y] || nd > limit {
                continue;
            }
            if dist.get(&y).is_none_or(|&old| nd < old) {
                dist.insert(y, nd);
                heap.push(Reverse((nd, y)));
            }
        }
    }
    dist
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpaces {
    /// Sorted vertices upward-reachable from each vertex, itself included.
    pub spaces: Vec<Vec<VertexId>>,
    pub avg: Ratio<u64>,
    pub max: usize,
}

impl SearchSpaces {
    pub fn avg_f64(&self) -> f64 {
        *self.avg.numer() as f64 / *self.avg.denom() as f64
    }
}

pub fn ch_search_spaces(ch: &CHGraph) -> SearchSpaces {
    let n = ch.num_vertices();
    let spaces = map_range(n, |v| {
        let mut seen = BTreeSet::from([v]);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &(y, _) in ch.up(x) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.into_iter().collect::<Vec<_>>()
    });
    let total: usize = spaces.iter().map(Vec::len).sum();
    let max = spaces.iter().map(Vec::len).max().unwrap_or(0);
    let avg = if n == 0 { Ratio::from_integer(0) } else { Ratio::new(total as u64, n as u64) };
    SearchSpaces { spaces, avg, max }
}

/// `u ∈ L(v)` iff some shortest `v`-`u` path has `u` as its highest-ranked
/// vertex: the distance from `u` inside the subgraph of vertices ranked at
/// most `π(u)` equals the unrestricted one.
pub fn canonical_hhl(g: &Graph, m: &Metric, ord: &Order) -> Result<LabelSet> {
    check_metric(g, m)?;
    check_positive(m)?;
    let n = g.num_vertices();
    if ord.len() != n {
        return Err(Error::invalid("order size must match the graph"));
    }
    let owners = map_range(n, |u| {
        let full = dijkstra(g, m, u);
        let ru = ord.rank(u);
        let restricted = restricted_dijkstra(g, m, u, |w| ord.rank(w) <= ru);
        (0..n)
            .filter(|&v| restricted[v] != INFINITY && restricted[v] == full[v])
            .collect::<Vec<_>>()
    });
    let mut lists = vec![Vec::new(); n];
    for (u, vs) in owners.into_iter().enumerate() {
        for v in vs {
            lists[v].push(u);
        }
    }
    LabelSet::from_lists(lists)?.with_order(ord.clone())
}

/// Checks that every pair `s ≠ t` is answered exactly by a common hub:
/// `min_h dist(s,h) + dist(h,t) = dist(s,t)`. Pairs without a path pass when
/// no common hub gives a finite value.
pub fn verify_metric_cover(g: &Graph, m: &Metric, l: &LabelSet) -> Result<CoverReport> {
    check_metric(g, m)?;
    let n = g.num_vertices();
    if l.num_vertices() != n {
        return Err(Error::invalid("labeling and graph have different vertex counts"));
    }
    let dist = all_pairs_distances(g, m);
    let failures = map_range(n, |s| {
        (s + 1..n).find(|&t| {
            let best = l
                .common_hubs(s, t)
                .into_iter()
                .map(|h| add_weights(dist[s][h], dist[h][t]))
                .min()
                .unwrap_or(INFINITY);
            best != dist[s][t]
        })
    });
    Ok(failures
        .into_iter()
        .enumerate()
        .find_map(|(s, t)| t.map(|t| CoverReport::Fail { s, t }))
        .unwrap_or(CoverReport::Pass))
}

/// Greedy elimination by smallest current degree in the elimination graph
/// (neighbors of an eliminated vertex become a clique), ties to the smaller id.
pub fn min_degree_order(g: &Graph) -> Order {
    let n = g.num_vertices();
    let mut adj: Vec<BTreeSet<VertexId>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut queue: BTreeSet<(usize, VertexId)> = (0..n).map(|v| (adj[v].len(), v)).collect();
    let mut out = Vec::with_capacity(n);
    while let Some((_, x)) = queue.pop_first() {
        out.push(x);
        let nbrs: Vec<VertexId> = std::mem::take(&mut adj[x]).into_iter().collect();
        for &v in &nbrs {
            queue.remove(&(adj[v].len(), v));
            adj[v].remove(&x);
        }
        for (i, &v) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                adj[v].insert(w);
                adj[w].insert(v);
            }
        }
        for &v in &nbrs {
            queue.insert((adj[v].len(), v));
        }
    }
    Order::from_vertices(out).expect("every vertex is eliminated once")
}

pub const MAX_GAP_K: usize = 24;

#[derive(Debug, Clone, PartialEq)]
pub struct GapRow {
    pub k: usize,
    pub n: usize,
    pub l_avg: Ratio<u64>,
    pub s_avg: Ratio<u64>,
    pub cover_ok: bool,
}

impl GapRow {
    pub fn l_avg_f64(&self) -> f64 {
        ratio_f64(self.l_avg)
    }

    pub fn s_avg_f64(&self) -> f64 {
        ratio_f64(self.s_avg)
    }

    /// `S_avg / √n`.
    pub fn ratio(&self) -> f64 {
        self.s_avg_f64() / (self.n as f64).sqrt()
    }
}

fn ratio_f64(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// For each `k`: the explicit hub labels of the star-clique family with their
/// metric cover check, and the CH search spaces under [`min_degree_order`].
pub fn gap_experiment(k_values: &[usize]) -> Result<Vec<GapRow>> {
    k_values
        .iter()
        .map(|&k| {
            if k > MAX_GAP_K {
                return Err(Error::SizeLimit { what: "star-clique k", limit: MAX_GAP_K, n: k });
            }
            gap_row(&gen_star_clique(k)?)
        })
        .collect()
}

fn gap_row(family: &StarClique) -> Result<GapRow> {
    let n = family.graph.num_vertices();
    let l_avg = Ratio::new(family.labels.total_size() as u64, n as u64);
    let cover_ok = verify_metric_cover(&family.graph, &family.metric, &family.labels)?.passed();
    let ch = build_weighted_ch(&family.graph, &family.metric, &min_degree_order(&family.graph))?;
    let s_avg = ch_search_spaces(&ch).avg;
    Ok(GapRow { k: family.k, n, l_avg, s_avg, cover_ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_weights_exponential;
    use crate::labeling::brute_force_canonical_labels;

    fn four_cycle() -> (Graph, Metric) {
        let g = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        let m = Metric::from_triples(&g, [(0, 1, 1), (2, 0, 10), (1, 3, 1), (3, 2, 1)]).unwrap();
        (g, m)
    }

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn dijkstra_examples() {
        let (g, m) = four_cycle();
        assert_eq!(dijkstra(&g, &m, 0), vec![0, 1, 3, 2]);
        assert_eq!(dijkstra(&Graph::empty(1), &Metric::uniform(&Graph::empty(1), 1), 0), vec![0]);
        let g = p3();
        assert_eq!(dijkstra(&g, &Metric::uniform(&g, 1), 0), vec![0, 1, 2]);
        let two = Graph::empty(2);
        assert_eq!(dijkstra(&two, &Metric::uniform(&two, 1), 0), vec![0, INFINITY]);
    }

    #[test]
    fn hop_diameters() {
        let g = p3();
        assert_eq!(hop_diameter(&g, &Metric::uniform(&g, 1)), 2);
        let (g, m) = four_cycle();
        assert_eq!(hop_diameter(&g, &m), 3);
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(hop_diameter(&k3, &Metric::uniform(&k3, 1)), 1);
    }

    #[test]
    fn hop_bounded_rounds() {
        let (g, m) = four_cycle();
        let rounds = hop_bounded_distances(&g, &m, 0, 3);
        assert_eq!(rounds[1][2], 10);
        assert_eq!(rounds[2][2], 10);
        assert_eq!(rounds[3][2], 3);
    }

    #[test]
    fn ch_on_four_cycle_needs_no_shortcut() {
        let (g, m) = four_cycle();
        let ch = build_weighted_ch(&g, &m, &Order::identity(4)).unwrap();
        assert!(ch.shortcuts().is_empty());
    }

    #[test]
    fn ch_rejects_zero_weights() {
        let g = p3();
        assert!(build_weighted_ch(&g, &Metric::uniform(&g, 0), &Order::identity(3)).is_err());
    }

    #[test]
    fn star_clique_leaves_get_shortcuts() {
        let sc = gen_star_clique(2).unwrap();
        let ch = build_weighted_ch(&sc.graph, &sc.metric, &sc.construction_order()).unwrap();
        assert!(ch.shortcuts().is_empty(), "leaves are contracted before their center");
        let order = Order::from_vertices(vec![4, 5, 0, 1, 2, 3, 6]).unwrap();
        let ch = build_weighted_ch(&sc.graph, &sc.metric, &order).unwrap();
        let s = ch.shortcuts();
        assert!(s.contains(&(0, 1, 2)) && s.contains(&(2, 3, 2)));
    }

    #[test]
    fn p3_search_spaces() {
        let g = p3();
        let ord = Order::from_ranks(vec![0, 2, 1]).unwrap();
        let ch = build_weighted_ch(&g, &Metric::uniform(&g, 4), &ord).unwrap();
        let ss = ch_search_spaces(&ch);
        assert!(ch.shortcuts().is_empty());
        assert_eq!(ss.spaces.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 1, 2]);
        assert_eq!(ss.avg, Ratio::new(5, 3));
        assert_eq!(ss.max, 2);
    }

    #[test]
    fn canonical_hhl_examples() {
        let (g, m) = four_cycle();
        let l = canonical_hhl(&g, &m, &Order::identity(4)).unwrap();
        assert_eq!(l.label(0), &[0, 1, 3]);
        assert_eq!(l.label(3), &[3]);
        assert!(verify_metric_cover(&g, &m, &l).unwrap().passed());

        let g = p3();
        let ord = Order::from_ranks(vec![0, 2, 1]).unwrap();
        let m = gen_weights_exponential(&g, &ord).unwrap();
        assert_eq!(canonical_hhl(&g, &m, &ord).unwrap().to_lists(), brute_force_canonical_labels(&g, &ord).to_lists());
    }

    #[test]
    fn metric_cover_detects_missing_hub() {
        let (g, m) = four_cycle();
        let l = canonical_hhl(&g, &m, &Order::identity(4)).unwrap();
        assert!(!verify_metric_cover(&g, &m, &l.without_hub(0, 3)).unwrap().passed());
    }

    #[test]
    fn min_degree_on_star_clique() {
        let sc = gen_star_clique(3).unwrap();
        let ord = min_degree_order(&sc.graph);
        assert_eq!(ord.vertex(sc.graph.num_vertices() - 1), sc.apex());
        assert!((0..9).all(|leaf| ord.rank(leaf) < 9));
    }

    #[test]
    fn gap_rows() {
        let rows = gap_experiment(&[2, 4]).unwrap();
        assert!(rows.iter().all(|r| r.cover_ok && r.l_avg <= Ratio::from_integer(3)));
        assert!(rows[0].s_avg < rows[1].s_avg);
        assert_eq!(rows[1].n, 21);
        assert!(gap_experiment(&[25]).is_err());
    }
}
