//! Queue-driven customization for arbitrary labelings with the customizable
//! cover property.
//!
//! Every label entry `(x, y)` (meaning `y ∈ L(x)`) whose value drops is put on
//! a FIFO queue. Dequeuing it pushes the new value `d_x[y]` into the entries
//! whose shortest paths can be split at the edge next to one endpoint and a
//! hub shared with `x` or `y`:
//!
//! * (a) `x` is the first hop, `y` the target: `d_v[y]` for `v ∈ N(x)`.
//! * (b) `y` is the first hop, `x` the target: `d_v[x]` for `v ∈ N(y)`.
//! * (c1) `y` is an intermediate hub, `x` the first hop: `d_v[u]` for
//!   `v ∈ N(x)`, `u ∈ L_inv(y)`.
//! * (c2) `y` is an intermediate hub, `x` the target: `d_v[x]` for
//!   `w ∈ L_inv(y)`, `v ∈ N(w)`.
//!
//! Only entries that exist in the labeling are written. At the fixpoint every
//! entry holds the exact distance.

use std::collections::VecDeque;

use crate::graph::{add_weights, Graph, Metric, VertexId, Weight, INFINITY};
use crate::labeling::{InverseLabels, LabelSet};
use crate::query::CustomizedLabels;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DequeueEvent {
    pub x: VertexId,
    pub y: VertexId,
    /// How many times `(x, y)` has now been dequeued, starting at 1.
    pub round: u32,
    pub value: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueueStats {
    pub dequeues: usize,
    pub max_per_pair: u32,
    /// Dequeue count per label entry, aligned with the labeling's entry buffer.
    pub per_entry: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct QueueOutcome {
    pub labels: CustomizedLabels,
    pub stats: QueueStats,
}

pub fn customize_queue(g: &Graph, l: &LabelSet, inv: &InverseLabels, m: &Metric) -> Result<QueueOutcome> {
    customize_queue_observed(g, l, inv, m, |_| {})
}

/// [`customize_queue`] calling `observer` on every dequeue, before the
/// dequeued value is propagated.
pub fn customize_queue_observed<F>(
    g: &Graph,
    l: &LabelSet,
    inv: &InverseLabels,
    m: &Metric,
    mut observer: F,
) -> Result<QueueOutcome>
where
    F: FnMut(&DequeueEvent),
{
    let n = g.num_vertices();
    if l.num_vertices() != n {
        return Err(Error::invalid("labeling and graph have different vertex counts"));
    }
    if !m.matches(g) {
        return Err(Error::invalid("metric does not belong to the graph"));
    }
    if inv.total_size() != l.total_size() {
        return Err(Error::invalid("inverse labels do not match the labeling"));
    }

    let owners = l.entry_owners();
    let mut state = QueueState {
        dist: vec![INFINITY; l.total_size()],
        in_queue: vec![false; l.total_size()],
        queue: VecDeque::new(),
    };
    for v in 0..n {
        if let Some(e) = l.entry(v, v) {
            state.dist[e] = 0;
        }
    }
    for x in 0..n {
        for (&y, &w) in g.neighbors(x).iter().zip(m.around(x)) {
            if let Some(e) = l.entry(x, y) {
                state.dist[e] = w;
                state.push(e);
            }
        }
    }

    let mut per_entry = vec![0u32; l.total_size()];
    let mut dequeues = 0;
    while let Some(e) = state.queue.pop_front() {
        state.in_queue[e] = false;
        per_entry[e] += 1;
        dequeues += 1;
        let (x, y) = (owners[e], l.hub_at(e));
        let value = state.dist[e];
        observer(&DequeueEvent { x, y, round: per_entry[e], value });

        // (a)
        for (&v, &w_vx) in g.neighbors(x).iter().zip(m.around(x)) {
            if let Some(q) = l.entry(v, y) {
                state.relax(q, add_weights(w_vx, value));
            }
        }
        // (b)
        for (&v, &w_vy) in g.neighbors(y).iter().zip(m.around(y)) {
            if let Some(q) = l.entry(v, x) {
                state.relax(q, add_weights(w_vy, value));
            }
        }
        // (c1)
        for (&v, &w_vx) in g.neighbors(x).iter().zip(m.around(x)) {
            let head = add_weights(w_vx, value);
            for &u in inv.of(y) {
                if let Some(q) = l.entry(v, u) {
                    let tail = state.dist[l.entry(u, y).expect("u ∈ L_inv(y)")];
                    state.relax(q, add_weights(head, tail));
                }
            }
        }
        // (c2)
        for &w in inv.of(y) {
            let middle = add_weights(value, state.dist[l.entry(w, y).expect("w ∈ L_inv(y)")]);
            for (&v, &w_vw) in g.neighbors(w).iter().zip(m.around(w)) {
                if let Some(q) = l.entry(v, x) {
                    state.relax(q, add_weights(middle, w_vw));
                }
            }
        }
    }

    let max_per_pair = per_entry.iter().copied().max().unwrap_or(0);
    Ok(QueueOutcome {
        labels: CustomizedLabels::new(l.clone(), state.dist)?,
        stats: QueueStats { dequeues, max_per_pair, per_entry },
    })
}

struct QueueState {
    dist: Vec<Weight>,
    in_queue: Vec<bool>,
    queue: VecDeque<usize>,
}

impl QueueState {
    fn push(&mut self, e: usize) {
        if !self.in_queue[e] {
            self.in_queue[e] = true;
            self.queue.push_back(e);
        }
    }

    #[inline]
    fn relax(&mut self, e: usize, candidate: Weight) {
        if candidate < self.dist[e] {
            self.dist[e] = candidate;
            self.push(e);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Order;
    use crate::labeling::{brute_force_canonical_labels, build_inverse_labels};
    use crate::query::hl_query;

    #[test]
    fn cycle_reaches_exact_distances() {
        // a=0, b=1, c=2, d=3; a–b=1, c–a=10, b–d=1, d–c=1
        let g = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        let m = Metric::from_triples(&g, [(0, 1, 1), (2, 0, 10), (1, 3, 1), (3, 2, 1)]).unwrap();
        let l = brute_force_canonical_labels(&g, &Order::identity(4));
        let inv = build_inverse_labels(&l);
        let mut saw_c1_update = false;
        let out = customize_queue_observed(&g, &l, &inv, &m, |ev| {
            if (ev.x, ev.y) == (1, 3) && ev.value == 1 {
                saw_c1_update = true;
            }
        })
        .unwrap();
        assert!(saw_c1_update);
        assert_eq!(out.labels.distance(0, 2), Some(3));
        assert_eq!(out.labels.distance(1, 2), Some(2));
        assert_eq!(hl_query(&out.labels, 0, 2).unwrap().unwrap().distance, 3);
    }

    #[test]
    fn single_edge_finishes_after_seeding() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let m = Metric::uniform(&g, 7);
        let l = LabelSet::from_lists(vec![vec![0, 1], vec![1]]).unwrap();
        let out = customize_queue(&g, &l, &build_inverse_labels(&l), &m).unwrap();
        assert_eq!(out.labels.distance(0, 1), Some(7));
        assert_eq!(out.stats.dequeues, 1);
        assert_eq!(out.stats.max_per_pair, 1);
    }

    #[test]
    fn exponential_p3() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let ord = Order::from_ranks(vec![0, 2, 1]).unwrap();
        let m = crate::generators::gen_weights_exponential(&g, &ord).unwrap();
        let l = brute_force_canonical_labels(&g, &ord);
        let out = customize_queue(&g, &l, &build_inverse_labels(&l), &m).unwrap();
        assert_eq!(out.labels.distance(0, 1), Some(27));
        assert_eq!(out.labels.distance(2, 1), Some(27));
        assert_eq!(hl_query(&out.labels, 0, 2).unwrap().unwrap().distance, 54);
    }

    #[test]
    fn rejects_mismatched_inputs() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let m = Metric::uniform(&g, 1);
        let l = LabelSet::from_lists(vec![vec![0]]).unwrap();
        assert!(customize_queue(&g, &l, &build_inverse_labels(&l), &m).is_err());
    }
}
