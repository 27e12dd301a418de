//! Customization of canonical hierarchical labels on top of the chordal
//! supergraph: a triangle pass over the supergraph edges, then per-label
//! distances from either upward Dijkstra runs or a top-down sweep.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{add_weights, Metric, VertexId, Weight, INFINITY};
use crate::hierarchy::{intersect_sorted, ChordalSupergraph};
use crate::labeling::{build_inverse_labels, LabelSet};
use crate::parallel::map_range;
use crate::query::{hl_query, CustomizedLabels};
use crate::{Error, Result};

/// One length per supergraph edge, stored at the lower endpoint and aligned
/// with `h.up(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDistances {
    up: Vec<Vec<Weight>>,
}

impl EdgeDistances {
    /// Lengths of `v`'s upward edges, aligned with `h.up(v)`.
    pub fn up_weights(&self, v: VertexId) -> &[Weight] {
        &self.up[v]
    }

    /// Length stored for the supergraph edge `{v, u}` (either orientation).
    pub fn get(&self, h: &ChordalSupergraph, v: VertexId, u: VertexId) -> Option<Weight> {
        let (lo, hi) = if h.order().rank(v) < h.order().rank(u) { (v, u) } else { (u, v) };
        h.up_slot(lo, hi).map(|j| self.up[lo][j])
    }
}

/// Original edges start at their metric length, shortcuts at infinity; then
/// the triangle pass runs once.
pub fn customize_edges(h: &ChordalSupergraph, m: &Metric) -> Result<EdgeDistances> {
    let g = h.base();
    if !m.matches(g) {
        return Err(Error::invalid("metric does not belong to the supergraph's base graph"));
    }
    let up = (0..h.num_vertices())
        .map(|v| {
            h.up(v)
                .iter()
                .zip(h.up_is_original(v))
                .map(|(&u, &orig)| if orig { m.weight(g, v, u).expect("original edge") } else { INFINITY })
                .collect()
        })
        .collect();
    let mut ed = EdgeDistances { up };
    triangle_pass(h, &mut ed);
    Ok(ed)
}

/// Sweeps vertices by ascending rank and relaxes every upward edge `{v, u}`
/// over its lower triangles `(v, w, u)`: `d(v,u) ← min(d(v,u), d(w,v) + d(w,u))`.
/// Returns the number of strict decreases.
pub fn triangle_pass(h: &ChordalSupergraph, ed: &mut EdgeDistances) -> usize {
    let mut decreases = 0;
    for &v in h.order().vertices() {
        for (j, &u) in h.up(v).iter().enumerate() {
            for w in intersect_sorted(h.down(v), h.down(u)) {
                let to_v = ed.up[w][h.up_slot(w, v).expect("lower triangle edge")];
                let to_u = ed.up[w][h.up_slot(w, u).expect("lower triangle edge")];
                let candidate = add_weights(to_v, to_u);
                if candidate < ed.up[v][j] {
                    ed.up[v][j] = candidate;
                    decreases += 1;
                }
            }
        }
    }
    decreases
}

/// How label distances are filled from the customized supergraph edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HierarchicalEngine {
    /// One Dijkstra per vertex restricted to upward edges.
    UpwardDijkstra,
    /// Top-down sweep `d_v[u] ← min(d_v[u], d_v[w] + d_w[u])` over `w ∈ N↑(v)`.
    TopDown,
    /// Vertices whose 1-based rank exceeds `cutoff` use upward Dijkstra, the
    /// rest the top-down sweep. `cutoff = n` is pure top-down.
    Hybrid { cutoff: usize },
}

fn check_inputs(h: &ChordalSupergraph, l: &LabelSet) -> Result<()> {
    if l.num_vertices() != h.num_vertices() {
        return Err(Error::invalid("labeling and supergraph have different vertex counts"));
    }
    Ok(())
}

pub fn customize_upward_dijkstra(h: &ChordalSupergraph, l: &LabelSet, ed: &EdgeDistances) -> Result<CustomizedLabels> {
    customize_hierarchical(h, l, ed, HierarchicalEngine::UpwardDijkstra)
}

pub fn customize_top_down(h: &ChordalSupergraph, l: &LabelSet, ed: &EdgeDistances) -> Result<CustomizedLabels> {
    customize_hierarchical(h, l, ed, HierarchicalEngine::TopDown)
}

pub fn customize_hierarchical(
    h: &ChordalSupergraph,
    l: &LabelSet,
    ed: &EdgeDistances,
    engine: HierarchicalEngine,
) -> Result<CustomizedLabels> {
    check_inputs(h, l)?;
    let n = h.num_vertices();
    let cutoff = match engine {
        HierarchicalEngine::UpwardDijkstra => 0,
        HierarchicalEngine::TopDown => n,
        HierarchicalEngine::Hybrid { cutoff } => cutoff.min(n),
    };
    let uses_dijkstra = |v: VertexId| h.order().rank(v) + 1 > cutoff;

    let rows: Vec<Option<Vec<Weight>>> =
        map_range(n, |v| uses_dijkstra(v).then(|| upward_dijkstra_row(h, l, ed, v)));

    let mut distances = vec![INFINITY; l.total_size()];
    for (v, row) in rows.into_iter().enumerate() {
        let range = l.entry_range(v);
        match row {
            Some(row) => distances[range].copy_from_slice(&row),
            None => {
                let start = range.start;
                for (i, &u) in l.label(v).iter().enumerate() {
                    if u == v {
                        distances[start + i] = 0;
                    } else if let Some(j) = h.up_slot(v, u) {
                        distances[start + i] = ed.up[v][j];
                    }
                }
            }
        }
    }

    if cutoff > 0 {
        top_down_sweep(h, l, ed, &mut distances, &uses_dijkstra);
    }
    CustomizedLabels::new(l.clone(), distances)
}

fn upward_dijkstra_row(h: &ChordalSupergraph, l: &LabelSet, ed: &EdgeDistances, v: VertexId) -> Vec<Weight> {
    let label = l.label(v);
    let mut dist = vec![INFINITY; label.len()];
    let Ok(start) = label.binary_search(&v) else {
        return dist;
    };
    dist[start] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0, v)));
    while let Some(Reverse((d, x))) = heap.pop() {
        if d > dist[label.binary_search(&x).expect("settled vertex is a hub")] {
            continue;
        }
        for (&y, &w) in h.up(x).iter().zip(&ed.up[x]) {
            // canonical labels contain the whole upward search space
            let Ok(p) = label.binary_search(&y) else { continue };
            let nd = add_weights(d, w);
            if nd < dist[p] {
                dist[p] = nd;
                heap.push(Reverse((nd, y)));
            }
        }
    }
    dist
}

fn top_down_sweep<F>(h: &ChordalSupergraph, l: &LabelSet, ed: &EdgeDistances, distances: &mut [Weight], skip: &F)
where
    F: Fn(VertexId) -> bool,
{
    let order = h.order();
    let inv = build_inverse_labels(l);
    let mut owners = Vec::new();
    for &u in order.vertices().iter().rev() {
        owners.clear();
        owners.extend(inv.of(u).iter().copied().filter(|&v| v != u && !skip(v)));
        // d_w[u] for the higher-ranked w must be final before d_v[u]
        owners.sort_unstable_by_key(|&v| Reverse(order.rank(v)));
        for &v in &owners {
            let target = l.entry(v, u).expect("v ∈ L_inv(u)");
            let mut best = distances[target];
            for (&w, &to_w) in h.up(v).iter().zip(&ed.up[v]) {
                if let Some(e) = l.entry(w, u) {
                    best = best.min(add_weights(to_w, distances[e]));
                }
            }
            distances[target] = best;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineAgreement {
    pub pairs_checked: usize,
    /// `(s, t, upward answer, top-down answer)` of the first disagreement.
    pub first_mismatch: Option<(VertexId, VertexId, Option<Weight>, Option<Weight>)>,
}

impl EngineAgreement {
    pub fn agreed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Runs the upward-Dijkstra and top-down engines and compares their query
/// answers on all ordered pairs.
pub fn compare_customizations(h: &ChordalSupergraph, l: &LabelSet, m: &Metric) -> Result<EngineAgreement> {
    let ed = customize_edges(h, m)?;
    let upward = customize_upward_dijkstra(h, l, &ed)?;
    let top_down = customize_top_down(h, l, &ed)?;
    let n = h.num_vertices();
    let mut pairs_checked = 0;
    for s in 0..n {
        for t in 0..n {
            pairs_checked += 1;
            let a = hl_query(&upward, s, t)?.map(|x| x.distance);
            let b = hl_query(&top_down, s, t)?.map(|x| x.distance);
            if a != b {
                return Ok(EngineAgreement { pairs_checked, first_mismatch: Some((s, t, a, b)) });
            }
        }
    }
    Ok(EngineAgreement { pairs_checked, first_mismatch: None })
}
