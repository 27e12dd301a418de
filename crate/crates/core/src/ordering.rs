//! Balanced vertex separators, recursive separator decompositions and nested
//! dissection orders.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_rational::Ratio;

use crate::graph::{Graph, Order, VertexId};
use crate::{Error, Result};

/// Balance ratio `α ∈ [1/2, 1)`: every component left after removing a
/// separator has at most `α·n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alpha(Ratio<u64>);

impl Alpha {
    pub const TWO_THIRDS: Alpha = Alpha(Ratio::new_raw(2, 3));

    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::invalid("alpha denominator is zero"));
        }
        let r = Ratio::new(numer, denom);
        if r < Ratio::new(1, 2) || r >= Ratio::from_integer(1) {
            return Err(Error::invalid(format!("alpha must lie in [1/2, 1), got {numer}/{denom}")));
        }
        Ok(Alpha(r))
    }

    pub fn ratio(&self) -> Ratio<u64> {
        self.0
    }

    pub fn as_f64(&self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }

    /// `size ≤ α·total`, in exact integer arithmetic.
    #[inline]
    pub fn allows(&self, size: usize, total: usize) -> bool {
        (size as u128) * (*self.0.denom() as u128) <= (*self.0.numer() as u128) * (total as u128)
    }
}

impl Default for Alpha {
    fn default() -> Self {
        Alpha::TWO_THIRDS
    }
}

/// Accepts `p/q` or a decimal such as `0.667` (taken exactly as 667/1000).
impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("cannot parse alpha '{s}'"));
        if let Some((p, q)) = s.split_once('/') {
            let p = p.trim().parse().map_err(|_| bad())?;
            let q = q.trim().parse().map_err(|_| bad())?;
            return Alpha::new(p, q);
        }
        let (int, frac) = s.trim().split_once('.').unwrap_or((s.trim(), ""));
        if frac.len() > 12 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let denom = 10u64.pow(frac.len() as u32);
        let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        Alpha::new(int * denom + frac, denom)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SeparatorMode {
    /// BFS level sets from both ends of a pseudo-diameter, then trimming.
    #[default]
    Heuristic,
    /// Median row or column on rectangular grid pieces; heuristic elsewhere.
    GridAware,
    /// Minimum cardinality by exhaustive search, `n ≤ 20`.
    Exact,
}

impl FromStr for SeparatorMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "heuristic" => Ok(SeparatorMode::Heuristic),
            "grid-aware" => Ok(SeparatorMode::GridAware),
            "exact" => Ok(SeparatorMode::Exact),
            _ => Err(Error::invalid(format!("unknown separator mode '{s}'"))),
        }
    }
}

pub const MAX_EXACT_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorReport {
    /// Sorted separator vertices.
    pub separator: Vec<VertexId>,
    pub alpha: Alpha,
    pub largest_component: usize,
}

pub fn find_balanced_separator(g: &Graph, alpha: Alpha, mode: SeparatorMode) -> Result<SeparatorReport> {
    let n = g.num_vertices();
    if n < 2 {
        return Err(Error::invalid("separator search needs at least two vertices"));
    }
    if !g.is_connected() {
        return Err(Error::invalid("separator search needs a connected graph"));
    }
    let coords = match mode {
        SeparatorMode::GridAware => detect_grid(g).map(|shape| shape.coordinates()),
        _ => None,
    };
    let separator = separate(g, coords.as_deref(), alpha, mode)?;
    let largest_component = g.largest_component_without(&mask(n, &separator));
    Ok(SeparatorReport { separator, alpha, largest_component })
}

/// Minimum size of an α-balanced separator by exhaustive search in increasing
/// subset size. Graphs with at most one vertex need no separation and get 0.
pub fn exact_b_alpha(g: &Graph, alpha: Alpha) -> Result<usize> {
    let n = g.num_vertices();
    if n > MAX_EXACT_N {
        return Err(Error::ExactLimit { limit: MAX_EXACT_N });
    }
    if n <= 1 {
        return Ok(0);
    }
    let masks = BitGraph::new(g);
    Ok((0..=n)
        .find(|&k| (0..n).combinations(k).any(|s| alpha.allows(masks.largest_without(bits(&s)), n)))
        .expect("removing every vertex is balanced"))
}

fn separate(g: &Graph, coords: Option<&[(usize, usize)]>, alpha: Alpha, mode: SeparatorMode) -> Result<Vec<VertexId>> {
    match mode {
        SeparatorMode::Exact => exact_separator(g, alpha),
        SeparatorMode::GridAware => Ok(coords
            .and_then(|c| grid_separator(g, c, alpha))
            .unwrap_or_else(|| heuristic_separator(g, alpha))),
        SeparatorMode::Heuristic => Ok(heuristic_separator(g, alpha)),
    }
}

fn mask(n: usize, vertices: &[VertexId]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vertices {
        m[v] = true;
    }
    m
}

fn bits(vertices: &[VertexId]) -> u32 {
    vertices.iter().fold(0, |acc, &v| acc | (1 << v))
}

/// Adjacency bitmasks for exhaustive search on small graphs.
struct BitGraph {
    adj: Vec<u32>,
}

impl BitGraph {
    fn new(g: &Graph) -> Self {
        BitGraph { adj: (0..g.num_vertices()).map(|v| bits(g.neighbors(v))).collect() }
    }

    fn largest_without(&self, removed: u32) -> usize {
        let all = if self.adj.len() == 32 { u32::MAX } else { (1u32 << self.adj.len()) - 1 };
        let mut left = all & !removed;
        let mut largest = 0;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & left & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= !comp;
            largest = largest.max(comp.count_ones() as usize);
        }
        largest
    }
}

/// Smallest balanced separator; among those, the one leaving the smallest
/// largest component, then the lexicographically first.
fn exact_separator(g: &Graph, alpha: Alpha) -> Result<Vec<VertexId>> {
    let n = g.num_vertices();
    if n > MAX_EXACT_N {
        return Err(Error::ExactLimit { limit: MAX_EXACT_N });
    }
    let masks = BitGraph::new(g);
    for k in 0..=n {
        let best = (0..n)
            .combinations(k)
            .map(|s| (masks.largest_without(bits(&s)), s))
            .filter(|(largest, _)| alpha.allows(*largest, n))
            .min_by_key(|(largest, _)| *largest);
        if let Some((_, s)) = best {
            return Ok(s);
        }
    }
    unreachable!("removing every vertex is balanced")
}

fn bfs_levels(g: &Graph, root: VertexId) -> Vec<Vec<VertexId>> {
    let mut depth = vec![usize::MAX; g.num_vertices()];
    let mut levels: Vec<Vec<VertexId>> = Vec::new();
    let mut queue = VecDeque::from([root]);
    depth[root] = 0;
    while let Some(x) = queue.pop_front() {
        if levels.len() <= depth[x] {
            levels.push(Vec::new());
        }
        levels[depth[x]].push(x);
        for &y in g.neighbors(x) {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                queue.push_back(y);
            }
        }
    }
    levels
}

/// Repeated BFS from the farthest (smallest id on ties) vertex until the
/// eccentricity stops growing. Returns both ends of the final sweep.
fn pseudo_peripheral_pair(g: &Graph) -> (VertexId, VertexId) {
    let mut start = 0;
    let mut ecc = 0;
    for _ in 0..8 {
        let levels = bfs_levels(g, start);
        let far = *levels.last().unwrap().iter().min().unwrap();
        if levels.len() - 1 <= ecc && ecc > 0 {
            return (start, far);
        }
        ecc = levels.len() - 1;
        if far == start {
            return (start, far);
        }
        start = far;
    }
    let levels = bfs_levels(g, start);
    (start, *levels.last().unwrap().iter().min().unwrap())
}

fn heuristic_separator(g: &Graph, alpha: Alpha) -> Vec<VertexId> {
    let n = g.num_vertices();
    let (a, b) = pseudo_peripheral_pair(g);
    let mut best: Option<(usize, usize, Vec<VertexId>)> = None;
    for root in [a, b].into_iter().dedup() {
        for mut level in bfs_levels(g, root) {
            level.sort_unstable();
            let largest = g.largest_component_without(&mask(n, &level));
            if !alpha.allows(largest, n) {
                continue;
            }
            if best.as_ref().is_none_or(|(s, l, _)| (level.len(), largest) < (*s, *l)) {
                best = Some((level.len(), largest, level));
            }
        }
    }
    // some level of a BFS always splits the vertices at the median, so
    // this fallback is never taken for α ≥ 1/2
    let mut separator = best.map(|(_, _, s)| s).unwrap_or_else(|| (1..n).collect());

    // drop vertices whose return keeps the split balanced
    loop {
        let before = separator.len();
        let mut i = 0;
        while i < separator.len() {
            let mut trial = separator.clone();
            trial.remove(i);
            if alpha.allows(g.largest_component_without(&mask(n, &trial)), n) {
                separator = trial;
            } else {
                i += 1;
            }
        }
        if separator.len() == before {
            return separator;
        }
    }
}

/// Row-major `rows × cols` grid layout recognized on a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridShape {
    pub rows: usize,
    pub cols: usize,
}

impl GridShape {
    pub fn coordinates(&self) -> Vec<(usize, usize)> {
        (0..self.rows * self.cols).map(|v| (v / self.cols, v % self.cols)).collect()
    }
}

/// Recognizes graphs whose edges are exactly those of a row-major grid.
pub fn detect_grid(g: &Graph) -> Option<GridShape> {
    let n = g.num_vertices();
    (1..=n).filter(|cols| n.is_multiple_of(*cols)).find_map(|cols| {
        let rows = n / cols;
        if g.num_edges() != 2 * rows * cols - rows - cols {
            return None;
        }
        let fits = g.edges().all(|(u, v)| v == u + cols || (v == u + 1 && v % cols != 0));
        fits.then_some(GridShape { rows, cols })
    })
}

/// Median column (or row, if the piece is taller than wide) of a rectangular
/// grid piece. `None` when the piece is not a full rectangle.
fn grid_separator(g: &Graph, coords: &[(usize, usize)], alpha: Alpha) -> Option<Vec<VertexId>> {
    let n = g.num_vertices();
    let (r0, r1) = coords.iter().map(|c| c.0).minmax().into_option()?;
    let (c0, c1) = coords.iter().map(|c| c.1).minmax().into_option()?;
    let (height, width) = (r1 - r0 + 1, c1 - c0 + 1);
    if height * width != n {
        return None;
    }
    let separator: Vec<VertexId> = if width >= height {
        let col = c0 + (width - 1) / 2;
        (0..n).filter(|&v| coords[v].1 == col).collect()
    } else {
        let row = r0 + (height - 1) / 2;
        (0..n).filter(|&v| coords[v].0 == row).collect()
    };
    alpha
        .allows(g.largest_component_without(&mask(n, &separator)), n)
        .then_some(separator)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorNode {
    /// Sorted vertex ids of this node's separator (a single vertex at leaves).
    pub vertices: Vec<VertexId>,
    /// Vertices of the subgraph induced by this node and its descendants.
    pub subgraph_size: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// Recursive separator decomposition, one tree per connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorTree {
    nodes: Vec<SeparatorNode>,
    roots: Vec<usize>,
    alpha: Alpha,
}

impl SeparatorTree {
    pub fn nodes(&self) -> &[SeparatorNode] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &SeparatorNode {
        &self.nodes[i]
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    /// Number of nodes on the longest root-to-leaf path.
    pub fn height(&self) -> usize {
        fn depth(t: &SeparatorTree, i: usize) -> usize {
            1 + t.nodes[i].children.iter().map(|&c| depth(t, c)).max().unwrap_or(0)
        }
        self.roots.iter().map(|&r| depth(self, r)).max().unwrap_or(0)
    }

    /// All vertices of node `i` and its descendants.
    pub fn subtree_vertices(&self, i: usize) -> Vec<VertexId> {
        let mut out = self.nodes[i].vertices.clone();
        for &c in &self.nodes[i].children {
            out.extend(self.subtree_vertices(c));
        }
        out.sort_unstable();
        out
    }

    /// Checks the structural invariants against `g`: node sets partition the
    /// vertices, leaves are singletons, and every inner node is α-balanced
    /// for its subgraph with the children being exactly the components left.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.num_vertices();
        let mut owner = vec![false; n];
        for node in &self.nodes {
            for &v in &node.vertices {
                if v >= n || owner[v] {
                    return Err(Error::invalid(format!("vertex {v} appears in two nodes or is out of range")));
                }
                owner[v] = true;
            }
        }
        if owner.iter().any(|&o| !o) {
            return Err(Error::invalid("separator tree does not cover every vertex"));
        }
        for (i, node) in self.nodes.iter().enumerate() {
            let sub = self.subtree_vertices(i);
            if sub.len() != node.subgraph_size {
                return Err(Error::invalid(format!("node {i} records a wrong subgraph size")));
            }
            if node.children.is_empty() {
                if node.vertices.len() != 1 {
                    return Err(Error::invalid(format!("leaf {i} holds {} vertices", node.vertices.len())));
                }
                continue;
            }
            let mut allowed = mask(n, &sub);
            for &v in &node.vertices {
                allowed[v] = false;
            }
            let comps = g.components_within(&allowed);
            if comps.iter().any(|c| !self.alpha.allows(c.len(), sub.len())) {
                return Err(Error::invalid(format!("node {i} is not an α-balanced separator")));
            }
            let mut children: Vec<Vec<VertexId>> =
                node.children.iter().map(|&c| self.subtree_vertices(c)).collect();
            children.sort();
            let mut comps = comps;
            comps.sort();
            if children != comps {
                return Err(Error::invalid(format!("children of node {i} are not the remaining components")));
            }
        }
        Ok(())
    }
}

pub fn build_separator_decomposition(g: &Graph, alpha: Alpha, mode: SeparatorMode) -> Result<SeparatorTree> {
    let coords = match mode {
        SeparatorMode::GridAware => detect_grid(g).map(|shape| shape.coordinates()),
        _ => None,
    };
    let mut tree = SeparatorTree { nodes: Vec::new(), roots: Vec::new(), alpha };
    for component in g.components() {
        let root = decompose(g, &component, None, coords.as_deref(), alpha, mode, &mut tree)?;
        tree.roots.push(root);
    }
    Ok(tree)
}

fn decompose(
    g: &Graph,
    vertices: &[VertexId],
    parent: Option<usize>,
    coords: Option<&[(usize, usize)]>,
    alpha: Alpha,
    mode: SeparatorMode,
    tree: &mut SeparatorTree,
) -> Result<usize> {
    let index = tree.nodes.len();
    tree.nodes.push(SeparatorNode {
        vertices: Vec::new(),
        subgraph_size: vertices.len(),
        parent,
        children: Vec::new(),
    });
    if vertices.len() == 1 {
        tree.nodes[index].vertices = vertices.to_vec();
        return Ok(index);
    }

    let sub = g.induced(vertices);
    let sub_coords: Option<Vec<(usize, usize)>> = coords.map(|c| vertices.iter().map(|&v| c[v]).collect());
    let local = separate(&sub, sub_coords.as_deref(), alpha, mode)?;
    let removed = mask(sub.num_vertices(), &local);
    let allowed: Vec<bool> = removed.iter().map(|&r| !r).collect();
    let components = sub.components_within(&allowed);
    assert!(
        components.iter().all(|c| alpha.allows(c.len(), vertices.len())),
        "separator is not α-balanced"
    );

    let mut separator: Vec<VertexId> = local.iter().map(|&i| vertices[i]).collect();
    separator.sort_unstable();
    tree.nodes[index].vertices = separator;
    for component in components {
        let global: Vec<VertexId> = component.iter().map(|&i| vertices[i]).collect();
        let child = decompose(g, &global, Some(index), coords, alpha, mode, tree)?;
        tree.nodes[index].children.push(child);
    }
    Ok(index)
}

/// Post-order traversal of the decomposition: children (by smallest vertex)
/// first, then the node itself. Inside a node, vertices are ranked by
/// descending degree in `g`, then ascending id.
pub fn nested_dissection_order(t: &SeparatorTree, g: &Graph) -> Order {
    fn visit(t: &SeparatorTree, g: &Graph, i: usize, out: &mut Vec<VertexId>) {
        let mut children = t.nodes[i].children.clone();
        children.sort_by_key(|&c| t.subtree_vertices(c)[0]);
        for c in children {
            visit(t, g, c, out);
        }
        let mut own = t.nodes[i].vertices.clone();
        own.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        out.extend(own);
    }
    let mut roots = t.roots.clone();
    roots.sort_by_key(|&r| t.subtree_vertices(r)[0]);
    let mut out = Vec::with_capacity(g.num_vertices());
    for r in roots {
        visit(t, g, r, &mut out);
    }
    Order::from_vertices(out).expect("separator tree partitions the vertices")
}

/// Separator decomposition followed by [`nested_dissection_order`].
pub fn nested_dissection(g: &Graph, alpha: Alpha, mode: SeparatorMode) -> Result<(SeparatorTree, Order)> {
    let tree = build_separator_decomposition(g, alpha, mode)?;
    let order = nested_dissection_order(&tree, g);
    Ok((tree, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_grid;

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    #[test]
    fn alpha_parsing() {
        assert_eq!("2/3".parse::<Alpha>().unwrap(), Alpha::TWO_THIRDS);
        assert_eq!("0.667".parse::<Alpha>().unwrap().ratio(), Ratio::new(667, 1000));
        assert_eq!(".5".parse::<Alpha>().unwrap().ratio(), Ratio::new(1, 2));
        assert!("0.4".parse::<Alpha>().is_err());
        assert!("1".parse::<Alpha>().is_err());
        assert!("x".parse::<Alpha>().is_err());
        assert!(Alpha::TWO_THIRDS.allows(2, 3));
        assert!(!Alpha::TWO_THIRDS.allows(3, 4));
    }

    #[test]
    fn exact_separators() {
        let a = Alpha::TWO_THIRDS;
        let r = find_balanced_separator(&p3(), a, SeparatorMode::Exact).unwrap();
        assert_eq!(r.separator, vec![1]);
        let r = find_balanced_separator(&gen_grid(3, 3).unwrap(), a, SeparatorMode::Exact).unwrap();
        assert_eq!(r.separator.len(), 2);
        assert_eq!(r.largest_component, 6);
        let r = find_balanced_separator(&k3(), a, SeparatorMode::Exact).unwrap();
        assert_eq!(r.separator.len(), 1);
        assert!(matches!(
            find_balanced_separator(&path(21), a, SeparatorMode::Exact),
            Err(Error::ExactLimit { limit: 20 })
        ));
    }

    #[test]
    fn separator_preconditions() {
        let a = Alpha::TWO_THIRDS;
        assert!(find_balanced_separator(&Graph::empty(1), a, SeparatorMode::Heuristic).is_err());
        assert!(find_balanced_separator(&Graph::empty(3), a, SeparatorMode::Heuristic).is_err());
    }

    #[test]
    fn b_alpha_values() {
        let a = Alpha::TWO_THIRDS;
        assert_eq!(exact_b_alpha(&gen_grid(3, 3).unwrap(), a).unwrap(), 2);
        for n in 3..=20 {
            assert_eq!(exact_b_alpha(&path(n), a).unwrap(), 1, "P{n}");
        }
        assert_eq!(exact_b_alpha(&Graph::empty(1), a).unwrap(), 0);
        assert!(exact_b_alpha(&path(21), a).is_err());
    }

    #[test]
    fn heuristic_is_balanced_on_grids_and_paths() {
        let a = Alpha::TWO_THIRDS;
        for g in [gen_grid(5, 7).unwrap(), gen_grid(10, 10).unwrap(), path(30)] {
            let r = find_balanced_separator(&g, a, SeparatorMode::Heuristic).unwrap();
            assert!(a.allows(r.largest_component, g.num_vertices()));
        }
        let r = find_balanced_separator(&gen_grid(10, 10).unwrap(), a, SeparatorMode::Heuristic).unwrap();
        assert!(r.separator.len() <= 10);
    }

    #[test]
    fn grid_aware_picks_a_median_line() {
        let g = gen_grid(3, 3).unwrap();
        let r = find_balanced_separator(&g, Alpha::TWO_THIRDS, SeparatorMode::GridAware).unwrap();
        assert_eq!(r.separator, vec![1, 4, 7]);
        let g = gen_grid(5, 3).unwrap();
        let r = find_balanced_separator(&g, Alpha::TWO_THIRDS, SeparatorMode::GridAware).unwrap();
        assert_eq!(r.separator, vec![6, 7, 8]);
    }

    #[test]
    fn grid_detection() {
        assert_eq!(detect_grid(&gen_grid(4, 6).unwrap()), Some(GridShape { rows: 4, cols: 6 }));
        assert_eq!(detect_grid(&k3()), None);
        // a 4-cycle labeled a-b, b-d, d-c, c-a is the 2×2 grid
        let c4 = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        assert_eq!(detect_grid(&c4), Some(GridShape { rows: 2, cols: 2 }));
    }

    #[test]
    fn decomposition_of_p3() {
        let t = build_separator_decomposition(&p3(), Alpha::TWO_THIRDS, SeparatorMode::Exact).unwrap();
        t.validate(&p3()).unwrap();
        let root = t.node(t.roots()[0]);
        assert_eq!(root.vertices, vec![1]);
        assert_eq!(root.children.len(), 2);
        assert_eq!(t.height(), 2);
        let ord = nested_dissection_order(&t, &p3());
        assert_eq!(ord.ranks(), &[0, 2, 1]);
    }

    #[test]
    fn decomposition_of_single_vertex() {
        let g = Graph::empty(1);
        let t = build_separator_decomposition(&g, Alpha::TWO_THIRDS, SeparatorMode::Heuristic).unwrap();
        assert_eq!(t.nodes().len(), 1);
        assert_eq!(t.height(), 1);
        assert_eq!(nested_dissection_order(&t, &g), Order::identity(1));
    }

    #[test]
    fn decomposition_of_four_cycle() {
        let g = gen_grid(2, 2).unwrap();
        let t = build_separator_decomposition(&g, Alpha::TWO_THIRDS, SeparatorMode::Exact).unwrap();
        t.validate(&g).unwrap();
        let root = t.node(t.roots()[0]);
        assert_eq!(root.vertices.len(), 2);
        assert!(!g.has_edge(root.vertices[0], root.vertices[1]));
        assert_eq!(root.children.len(), 2);
        assert!(root.children.iter().all(|&c| t.node(c).vertices.len() == 1));
    }

    #[test]
    fn grid_order_puts_middle_column_on_top() {
        let g = gen_grid(3, 3).unwrap();
        let (t, ord) = nested_dissection(&g, Alpha::TWO_THIRDS, SeparatorMode::GridAware).unwrap();
        t.validate(&g).unwrap();
        let mut top: Vec<usize> = [1, 4, 7].iter().map(|&v| ord.rank(v)).collect();
        top.sort_unstable();
        assert_eq!(top, vec![6, 7, 8]);
    }

    #[test]
    fn disconnected_graphs_get_a_forest() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let (t, ord) = nested_dissection(&g, Alpha::TWO_THIRDS, SeparatorMode::Heuristic).unwrap();
        t.validate(&g).unwrap();
        assert_eq!(t.roots().len(), 2);
        assert_eq!(ord.len(), 5);
    }
}
