//! Distance queries over customized labels.

use crate::graph::{add_weights, VertexId, Weight, INFINITY};
use crate::labeling::LabelSet;
use crate::{Error, Result};

/// A labeling plus one distance entry `d_v[u]` per hub `u ∈ L(v)`, stored
/// parallel to the label's flat entry buffer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CustomizedLabels {
    labels: LabelSet,
    distances: Vec<Weight>,
}

impl CustomizedLabels {
    pub fn new(labels: LabelSet, distances: Vec<Weight>) -> Result<Self> {
        if distances.len() != labels.total_size() {
            return Err(Error::invalid(format!(
                "expected {} distance entries, got {}",
                labels.total_size(),
                distances.len()
            )));
        }
        Ok(CustomizedLabels { labels, distances })
    }

    pub fn labels(&self) -> &LabelSet {
        &self.labels
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.num_vertices()
    }

    /// `d_v[·]`, aligned with `labels().label(v)`.
    pub fn distances_of(&self, v: VertexId) -> &[Weight] {
        &self.distances[self.labels.entry_range(v)]
    }

    pub fn distance(&self, v: VertexId, u: VertexId) -> Option<Weight> {
        self.labels.entry(v, u).map(|e| self.distances[e])
    }

    pub fn all_distances(&self) -> &[Weight] {
        &self.distances
    }

    pub fn into_parts(self) -> (LabelSet, Vec<Weight>) {
        (self.labels, self.distances)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Meeting {
    pub distance: Weight,
    pub hub: VertexId,
}

/// Shortest `s`-`t` distance through a common hub, `None` when unreachable.
/// Ties between hubs go to the smallest vertex id.
pub fn hl_query(c: &CustomizedLabels, s: VertexId, t: VertexId) -> Result<Option<Meeting>> {
    hl_query_counted(c, s, t).map(|(m, _)| m)
}

/// [`hl_query`] plus the number of hub comparisons made by the merge, which
/// never exceeds `|L(s)| + |L(t)|`.
pub fn hl_query_counted(c: &CustomizedLabels, s: VertexId, t: VertexId) -> Result<(Option<Meeting>, usize)> {
    let n = c.num_vertices();
    for x in [s, t] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    let (hs, ds) = (c.labels.label(s), c.distances_of(s));
    let (ht, dt) = (c.labels.label(t), c.distances_of(t));
    let (mut i, mut j) = (0, 0);
    let mut comparisons = 0;
    let mut best: Option<Meeting> = None;
    while i < hs.len() && j < ht.len() {
        comparisons += 1;
        match hs[i].cmp(&ht[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let d = add_weights(ds[i], dt[j]);
                if d != INFINITY && best.is_none_or(|b| d < b.distance) {
                    best = Some(Meeting { distance: d, hub: hs[i] });
                }
                i += 1;
                j += 1;
            }
        }
    }
    Ok((best, comparisons))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CustomizedLabels {
        // 0 - 1 - 2 path with unit weights, labels toward vertex 1
        let labels = LabelSet::from_lists(vec![vec![0, 1], vec![1], vec![1, 2], vec![3]]).unwrap();
        CustomizedLabels::new(labels, vec![0, 1, 0, 1, 0, 0]).unwrap()
    }

    #[test]
    fn query_through_common_hub() {
        let c = sample();
        assert_eq!(hl_query(&c, 0, 2).unwrap(), Some(Meeting { distance: 2, hub: 1 }));
        assert_eq!(hl_query(&c, 2, 0).unwrap(), Some(Meeting { distance: 2, hub: 1 }));
        assert_eq!(hl_query(&c, 0, 0).unwrap(), Some(Meeting { distance: 0, hub: 0 }));
        assert_eq!(hl_query(&c, 0, 3).unwrap(), None);
        assert!(hl_query(&c, 0, 4).is_err());
    }

    #[test]
    fn ties_pick_smallest_hub() {
        let labels = LabelSet::from_lists(vec![vec![0, 1, 2], vec![1], vec![2]]).unwrap();
        let c = CustomizedLabels::new(labels, vec![0, 3, 3, 0, 0]).unwrap();
        let two = LabelSet::from_lists(vec![vec![1, 2], vec![1], vec![2]]).unwrap();
        let d = CustomizedLabels::new(two, vec![3, 3, 0, 0]).unwrap();
        assert_eq!(hl_query(&d, 0, 0).unwrap(), Some(Meeting { distance: 6, hub: 1 }));
        assert_eq!(hl_query(&c, 1, 2).unwrap(), None);
    }

    #[test]
    fn infinite_entries_are_unreachable() {
        let labels = LabelSet::from_lists(vec![vec![0, 1], vec![1]]).unwrap();
        let c = CustomizedLabels::new(labels, vec![0, INFINITY, 0]).unwrap();
        assert_eq!(hl_query(&c, 0, 1).unwrap(), None);
    }

    #[test]
    fn comparison_count_is_bounded() {
        let c = sample();
        for s in 0..4 {
            for t in 0..4 {
                let (_, k) = hl_query_counted(&c, s, t).unwrap();
                assert!(k <= c.labels().len_of(s) + c.labels().len_of(t));
            }
        }
    }
}
