//! Metric-independent chordal supergraph (customizable contraction hierarchy).

use crate::graph::{Graph, Order, VertexId};
use crate::{Error, Result};

/// `G* = (V, E ∪ E⁺)` for a fixed order. Upward and downward neighbor lists
/// are both kept and sorted by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalSupergraph {
    base: Graph,
    order: Order,
    up: Vec<Vec<VertexId>>,
    up_is_original: Vec<Vec<bool>>,
    down: Vec<Vec<VertexId>>,
    num_base_edges: usize,
    num_shortcuts: usize,
}

impl ChordalSupergraph {
    pub fn num_vertices(&self) -> usize {
        self.up.len()
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// `N↑(v)`: supergraph neighbors ranked above `v`.
    pub fn up(&self, v: VertexId) -> &[VertexId] {
        &self.up[v]
    }

    /// `N↓(v)`: supergraph neighbors ranked below `v`.
    pub fn down(&self, v: VertexId) -> &[VertexId] {
        &self.down[v]
    }

    /// Whether the `i`-th upward edge of `v` is an edge of the base graph.
    pub fn up_is_original(&self, v: VertexId) -> &[bool] {
        &self.up_is_original[v]
    }

    /// Index of `u` within `N↑(v)`.
    #[inline]
    pub fn up_slot(&self, v: VertexId, u: VertexId) -> Option<usize> {
        self.up[v].binary_search(&u).ok()
    }

    pub fn num_base_edges(&self) -> usize {
        self.num_base_edges
    }

    /// `|E⁺|`.
    pub fn num_shortcuts(&self) -> usize {
        self.num_shortcuts
    }

    pub fn num_up_edges(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// Shortcut edges as `(lower, higher)` pairs, lower vertex ascending.
    pub fn shortcuts(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for v in 0..self.num_vertices() {
            for (&u, &orig) in self.up[v].iter().zip(&self.up_is_original[v]) {
                if !orig {
                    out.push((v, u));
                }
            }
        }
        out
    }

    /// The supergraph as a plain graph on `E ∪ E⁺`.
    pub fn to_graph(&self) -> Graph {
        let edges = (0..self.num_vertices()).flat_map(|v| self.up[v].iter().map(move |&u| (v, u)));
        Graph::from_edges(self.num_vertices(), edges).expect("supergraph edges are valid")
    }

    /// Orders `(v, u)` so that the first vertex has the lower rank and checks
    /// that the pair is a supergraph edge.
    fn oriented_edge(&self, v: VertexId, u: VertexId) -> Result<(VertexId, VertexId)> {
        let n = self.num_vertices();
        for x in [v, u] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        let (lo, hi) = if self.order.rank(v) < self.order.rank(u) { (v, u) } else { (u, v) };
        if self.up_slot(lo, hi).is_none() {
            return Err(Error::invalid(format!("{{{v},{u}}} is not an edge of the supergraph")));
        }
        Ok((lo, hi))
    }
}

/// Elimination game in ascending rank: eliminating `v` turns its higher-ranked
/// neighbors into a clique. Instead of inserting the whole clique, the
/// remaining upward neighbors are handed to the lowest of them, which
/// produces the same filled graph once that vertex is eliminated in turn.
pub fn build_cch(g: &Graph, ord: &Order) -> ChordalSupergraph {
    let n = g.num_vertices();
    assert_eq!(ord.len(), n, "order size must match the graph");
    let mut up: Vec<Vec<VertexId>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().filter(|&u| ord.rank(u) > ord.rank(v)).collect())
        .collect();
    for r in 0..n {
        let v = ord.vertex(r);
        let mut list = std::mem::take(&mut up[v]);
        list.sort_unstable();
        list.dedup();
        if let Some(&parent) = list.iter().min_by_key(|&&u| ord.rank(u)) {
            up[parent].extend(list.iter().copied().filter(|&u| u != parent));
        }
        up[v] = list;
    }

    let mut down: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut up_is_original = Vec::with_capacity(n);
    let mut num_shortcuts = 0;
    for v in 0..n {
        let flags: Vec<bool> = up[v].iter().map(|&u| g.has_edge(v, u)).collect();
        num_shortcuts += flags.iter().filter(|&&f| !f).count();
        up_is_original.push(flags);
        for &u in &up[v] {
            down[u].push(v);
        }
    }
    // down lists are filled in ascending v, hence already sorted
    ChordalSupergraph {
        base: g.clone(),
        order: ord.clone(),
        up,
        up_is_original,
        down,
        num_base_edges: g.num_edges(),
        num_shortcuts,
    }
}

/// `N↓(v) ∩ N↓(u)` for the supergraph edge `{v, u}`, by sorted-list
/// intersection. The endpoints may be passed in either order.
pub fn lower_triangles(h: &ChordalSupergraph, v: VertexId, u: VertexId) -> Result<Vec<VertexId>> {
    let (lo, hi) = h.oriented_edge(v, u)?;
    Ok(intersect_sorted(h.down(lo), h.down(hi)))
}

pub(crate) fn intersect_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // a=0, b=1, c=2, d=3; edges a-b, b-d, d-c, c-a
    fn four_cycle() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn p3_has_no_shortcuts() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let h = build_cch(&g, &Order::from_ranks(vec![0, 2, 1]).unwrap());
        assert_eq!(h.num_shortcuts(), 0);
        assert_eq!(lower_triangles(&h, 0, 1).unwrap(), Vec::<VertexId>::new());
    }

    #[test]
    fn four_cycle_gets_one_shortcut() {
        let h = build_cch(&four_cycle(), &Order::identity(4));
        assert_eq!(h.shortcuts(), vec![(1, 2)]);
        assert_eq!(h.up(0), &[1, 2]);
        assert_eq!(h.up(1), &[2, 3]);
        assert_eq!(h.down(2), &[0, 1]);
        assert_eq!(h.down(3), &[1, 2]);
        assert_eq!(lower_triangles(&h, 1, 2).unwrap(), vec![0]);
        assert_eq!(lower_triangles(&h, 2, 3).unwrap(), vec![1]);
        assert_eq!(lower_triangles(&h, 3, 2).unwrap(), vec![1]);
        assert!(lower_triangles(&h, 0, 3).is_err());
        assert!(lower_triangles(&h, 0, 9).is_err());
    }

    #[test]
    fn complete_graph_has_no_shortcuts() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        for ord in [vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]] {
            let h = build_cch(&k3, &Order::from_vertices(ord).unwrap());
            assert_eq!(h.num_shortcuts(), 0);
            assert_eq!(h.num_up_edges(), 3);
        }
    }
}
