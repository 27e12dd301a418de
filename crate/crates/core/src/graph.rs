//! Undirected simple graphs, edge metrics and vertex orders.

use std::collections::VecDeque;

use crate::{Error, Result};

pub type VertexId = usize;

/// Edge lengths and distances. [`INFINITY`] marks "no path" and is never
/// produced by arithmetic on valid inputs; all additions saturate at it.
pub type Weight = u64;

pub const INFINITY: Weight = Weight::MAX;

#[inline]
pub fn add_weights(a: Weight, b: Weight) -> Weight {
    a.saturating_add(b)
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    num_edges: usize,
}

impl Graph {
    /// Builds a graph from 0-based edge pairs. Duplicates (in either
    /// direction) collapse into one edge; self-loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut num_edges = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            num_edges += list.len();
        }
        Ok(Graph { adjacency, num_edges: num_edges / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); n], num_edges: 0 }
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of `v` in the neighbor list of `u`.
    pub fn edge_slot(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.adjacency[u].binary_search(&v).ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.num_vertices() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.num_vertices() })
        }
    }

    /// Connected components of the subgraph induced by the vertices with
    /// `allowed[v] == true`. Each component is sorted; components are ordered
    /// by their smallest vertex.
    pub fn components_within(&self, allowed: &[bool]) -> Vec<Vec<VertexId>> {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if !allowed[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut component = Vec::new();
            while let Some(x) = queue.pop_front() {
                component.push(x);
                for &y in self.neighbors(x) {
                    if allowed[y] && !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_within(&vec![true; self.num_vertices()])
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices() <= 1 || self.components().len() == 1
    }

    /// Size of the largest component after deleting `removed`.
    pub fn largest_component_without(&self, removed: &[bool]) -> usize {
        let allowed: Vec<bool> = removed.iter().map(|&r| !r).collect();
        self.components_within(&allowed).iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Induced subgraph on `vertices` (which must be distinct). Local vertex
    /// `i` corresponds to `vertices[i]`.
    pub fn induced(&self, vertices: &[VertexId]) -> Graph {
        let mut local = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut adjacency = vec![Vec::new(); vertices.len()];
        let mut num_edges = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.neighbors(v) {
                if local[w] != usize::MAX {
                    adjacency[i].push(local[w]);
                }
            }
            adjacency[i].sort_unstable();
            num_edges += adjacency[i].len();
        }
        Graph { adjacency, num_edges: num_edges / 2 }
    }
}

/// Non-negative integer length per undirected edge, stored parallel to the
/// adjacency lists of the graph it was built for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metric {
    weights: Vec<Vec<Weight>>,
}

impl Metric {
    pub fn from_fn<F>(g: &Graph, mut weight: F) -> Self
    where
        F: FnMut(VertexId, VertexId) -> Weight,
    {
        let mut weights: Vec<Vec<Weight>> =
            (0..g.num_vertices()).map(|v| vec![0; g.degree(v)]).collect();
        for (u, v) in g.edges() {
            let w = weight(u, v);
            weights[u][g.edge_slot(u, v).unwrap()] = w;
            weights[v][g.edge_slot(v, u).unwrap()] = w;
        }
        Metric { weights }
    }

    pub fn uniform(g: &Graph, w: Weight) -> Self {
        Self::from_fn(g, |_, _| w)
    }

    /// Builds a metric from `(u, v, w)` triples. Every edge of `g` must be
    /// assigned exactly once, and no triple may name a non-edge.
    pub fn from_triples<I>(g: &Graph, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Weight)>,
    {
        let mut weights: Vec<Vec<Option<Weight>>> =
            (0..g.num_vertices()).map(|v| vec![None; g.degree(v)]).collect();
        for (u, v, w) in triples {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if w == INFINITY {
                return Err(Error::invalid(format!("weight of edge {{{u},{v}}} is the infinity sentinel")));
            }
            let (Some(a), Some(b)) = (g.edge_slot(u, v), g.edge_slot(v, u)) else {
                return Err(Error::invalid(format!("{{{u},{v}}} is not an edge of the graph")));
            };
            if weights[u][a].is_some() {
                return Err(Error::invalid(format!("edge {{{u},{v}}} has more than one weight")));
            }
            weights[u][a] = Some(w);
            weights[v][b] = Some(w);
        }
        let weights = weights
            .into_iter()
            .enumerate()
            .map(|(u, list)| {
                list.into_iter()
                    .enumerate()
                    .map(|(i, w)| {
                        w.ok_or_else(|| {
                            Error::invalid(format!("edge {{{},{}}} has no weight", u, g.neighbors(u)[i]))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Metric { weights })
    }

    pub fn matches(&self, g: &Graph) -> bool {
        self.weights.len() == g.num_vertices()
            && self.weights.iter().enumerate().all(|(v, w)| w.len() == g.degree(v))
    }

    /// Weights of the edges around `v`, aligned with `g.neighbors(v)`.
    pub fn around(&self, v: VertexId) -> &[Weight] {
        &self.weights[v]
    }

    pub fn weight(&self, g: &Graph, u: VertexId, v: VertexId) -> Option<Weight> {
        g.edge_slot(u, v).map(|i| self.weights[u][i])
    }

    pub fn min_weight(&self) -> Option<Weight> {
        self.weights.iter().flatten().copied().min()
    }
}

/// Bijection between vertices and ranks. Ranks are 0-based internally; the
/// top-ranked vertex has rank `n - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order {
    rank: Vec<usize>,
    vertex: Vec<VertexId>,
}

impl Order {
    pub fn identity(n: usize) -> Self {
        Order { rank: (0..n).collect(), vertex: (0..n).collect() }
    }

    /// `vertices[r]` is the vertex of rank `r`.
    pub fn from_vertices(vertices: Vec<VertexId>) -> Result<Self> {
        let n = vertices.len();
        let mut rank = vec![usize::MAX; n];
        for (r, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if rank[v] != usize::MAX {
                return Err(Error::invalid(format!("vertex {v} appears twice in the order")));
            }
            rank[v] = r;
        }
        Ok(Order { rank, vertex: vertices })
    }

    /// `ranks[v]` is the rank of vertex `v`.
    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self> {
        let n = ranks.len();
        let mut vertex = vec![usize::MAX; n];
        for (v, &r) in ranks.iter().enumerate() {
            if r >= n || vertex[r] != usize::MAX {
                return Err(Error::invalid(format!("ranks do not form a permutation (vertex {v}, rank {r})")));
            }
            vertex[r] = v;
        }
        Ok(Order { rank: ranks, vertex })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    #[inline]
    pub fn rank(&self, v: VertexId) -> usize {
        self.rank[v]
    }

    #[inline]
    pub fn vertex(&self, r: usize) -> VertexId {
        self.vertex[r]
    }

    /// Vertices by ascending rank.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertex
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_dedups_and_sorts() {
        let g = Graph::from_edges(4, [(2, 0), (0, 2), (1, 0), (3, 0)]).unwrap();
        assert_eq!(g.num_edges(), 3);
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbors(2), &[0]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn from_edges_rejects_self_loops_and_bad_ids() {
        assert!(Graph::from_edges(2, [(1, 1)]).is_err());
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn metric_requires_every_edge_once() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(Metric::from_triples(&g, [(0, 1, 4)]).is_err());
        assert!(Metric::from_triples(&g, [(0, 1, 4), (1, 0, 4), (1, 2, 1)]).is_err());
        assert!(Metric::from_triples(&g, [(0, 2, 4), (1, 2, 1)]).is_err());
        let m = Metric::from_triples(&g, [(2, 1, 7), (0, 1, 4)]).unwrap();
        assert_eq!(m.weight(&g, 1, 2), Some(7));
        assert_eq!(m.weight(&g, 1, 0), Some(4));
        assert_eq!(m.weight(&g, 0, 2), None);
    }

    #[test]
    fn order_round_trips() {
        let ord = Order::from_vertices(vec![2, 0, 1]).unwrap();
        assert_eq!(ord.rank(2), 0);
        assert_eq!(ord.rank(1), 2);
        for v in 0..3 {
            assert_eq!(ord.vertex(ord.rank(v)), v);
        }
        assert_eq!(Order::from_ranks(ord.ranks().to_vec()).unwrap(), ord);
        assert!(Order::from_vertices(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_connected());
        let h = g.induced(&[3, 4, 0]);
        assert_eq!(h.num_edges(), 1);
        assert!(h.has_edge(0, 1));
    }
}
