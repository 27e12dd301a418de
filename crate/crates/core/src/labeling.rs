//! Hub labels: storage, canonical hierarchical construction, inversion and
//! the customizable cover check.

use std::collections::VecDeque;
use std::ops::Range;

use itertools::Itertools;
use num_rational::Ratio;

use crate::graph::{Graph, Order, VertexId};
use crate::hierarchy::ChordalSupergraph;
use crate::parallel::map_range;
use crate::{Error, Result};

/// Per-vertex hub arrays in one flat buffer, each array sorted by vertex id.
///
/// Entries may carry an "upward" flag marking `u ∈ N↑(v)` in the supergraph
/// the labels were derived from; the hierarchical customization engines use
/// it to avoid a second adjacency structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSet {
    offsets: Vec<usize>,
    hubs: Vec<VertexId>,
    upward: Vec<bool>,
    order: Option<Order>,
}

impl LabelSet {
    /// Hub lists are sorted and deduplicated; ids must be `< lists.len()`.
    pub fn from_lists(lists: Vec<Vec<VertexId>>) -> Result<Self> {
        let n = lists.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut hubs = Vec::new();
        offsets.push(0);
        for mut list in lists {
            list.sort_unstable();
            list.dedup();
            if let Some(&bad) = list.iter().find(|&&u| u >= n) {
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            hubs.extend(list);
            offsets.push(hubs.len());
        }
        let upward = vec![false; hubs.len()];
        Ok(LabelSet { offsets, hubs, upward, order: None })
    }

    /// Like [`LabelSet::from_lists`] but with an upward flag per hub.
    pub fn from_flagged_lists(lists: Vec<Vec<(VertexId, bool)>>) -> Result<Self> {
        let n = lists.len();
        let mut offsets = vec![0];
        let mut hubs = Vec::new();
        let mut upward = Vec::new();
        for mut list in lists {
            list.sort_unstable_by_key(|&(u, _)| u);
            for (i, &(u, flag)) in list.iter().enumerate() {
                if u >= n {
                    return Err(Error::VertexOutOfRange { vertex: u, n });
                }
                if i > 0 && list[i - 1].0 == u {
                    return Err(Error::invalid(format!("hub {u} listed twice in one label")));
                }
                hubs.push(u);
                upward.push(flag);
            }
            offsets.push(hubs.len());
        }
        Ok(LabelSet { offsets, hubs, upward, order: None })
    }

    /// Attaches the order the labels respect. Fails if some hub ranks below
    /// its owner.
    pub fn with_order(mut self, order: Order) -> Result<Self> {
        if order.len() != self.num_vertices() {
            return Err(Error::invalid("order size does not match the labeling"));
        }
        if !self.respects(&order) {
            return Err(Error::invalid("labeling does not respect the given order"));
        }
        self.order = Some(order);
        Ok(self)
    }

    pub fn order(&self) -> Option<&Order> {
        self.order.as_ref()
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn label(&self, v: VertexId) -> &[VertexId] {
        &self.hubs[self.entry_range(v)]
    }

    pub fn upward_flags(&self, v: VertexId) -> &[bool] {
        &self.upward[self.entry_range(v)]
    }

    pub fn len_of(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn total_size(&self) -> usize {
        self.hubs.len()
    }

    /// Range of global entry indices belonging to `v`.
    pub fn entry_range(&self, v: VertexId) -> Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    /// Global entry index of hub `u` in `L(v)`.
    #[inline]
    pub fn entry(&self, v: VertexId, u: VertexId) -> Option<usize> {
        let range = self.entry_range(v);
        let start = range.start;
        self.hubs[range].binary_search(&u).ok().map(|i| start + i)
    }

    pub fn contains(&self, v: VertexId, u: VertexId) -> bool {
        self.entry(v, u).is_some()
    }

    /// Hub stored at a global entry index.
    pub fn hub_at(&self, entry: usize) -> VertexId {
        self.hubs[entry]
    }

    /// Owner vertex of every global entry index.
    pub fn entry_owners(&self) -> Vec<VertexId> {
        let mut owners = Vec::with_capacity(self.hubs.len());
        for v in 0..self.num_vertices() {
            owners.extend(std::iter::repeat_n(v, self.len_of(v)));
        }
        owners
    }

    /// `v ∈ L(v)` for every vertex.
    pub fn is_reflexive(&self) -> bool {
        (0..self.num_vertices()).all(|v| self.contains(v, v))
    }

    pub fn respects(&self, order: &Order) -> bool {
        (0..self.num_vertices()).all(|v| self.label(v).iter().all(|&u| order.rank(u) >= order.rank(v)))
    }

    /// Copy of the labeling with hub `u` removed from `L(v)`.
    pub fn without_hub(&self, v: VertexId, u: VertexId) -> LabelSet {
        let mut copy = self.clone();
        if let Some(e) = self.entry(v, u) {
            copy.hubs.remove(e);
            copy.upward.remove(e);
            for offset in &mut copy.offsets[v + 1..] {
                *offset -= 1;
            }
        }
        copy
    }

    pub fn to_lists(&self) -> Vec<Vec<VertexId>> {
        (0..self.num_vertices()).map(|v| self.label(v).to_vec()).collect()
    }

    /// `L(s) ∩ L(t)` by a merge pass.
    pub fn common_hubs(&self, s: VertexId, t: VertexId) -> Vec<VertexId> {
        let (a, b) = (self.label(s), self.label(t));
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
}

/// `L_inv(v) = { z | v ∈ L(z) }`, sorted by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseLabels {
    offsets: Vec<usize>,
    owners: Vec<VertexId>,
}

impl InverseLabels {
    pub fn of(&self, v: VertexId) -> &[VertexId] {
        &self.owners[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn total_size(&self) -> usize {
        self.owners.len()
    }

    pub fn max_len(&self) -> usize {
        self.offsets.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0)
    }
}

pub fn build_inverse_labels(l: &LabelSet) -> InverseLabels {
    let n = l.num_vertices();
    let mut counts = vec![0usize; n + 1];
    for &u in &l.hubs {
        counts[u + 1] += 1;
    }
    for i in 0..n {
        counts[i + 1] += counts[i];
    }
    let offsets = counts.clone();
    let mut fill = counts;
    let mut owners = vec![0; l.total_size()];
    // owners are visited in ascending order, so each inverse list comes out sorted
    for z in 0..n {
        for &u in l.label(z) {
            owners[fill[u]] = z;
            fill[u] += 1;
        }
    }
    InverseLabels { offsets, owners }
}

/// `SS(v)` in the supergraph for every `v`, computed top-down as
/// `SS(v) = {v} ∪ ⋃_{w ∈ N↑(v)} SS(w)`. Entries in `N↑(v)` carry the upward flag.
pub fn build_canonical_hcuhl(h: &ChordalSupergraph) -> LabelSet {
    let n = h.num_vertices();
    let order = h.order();
    let mut lists: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for r in (0..n).rev() {
        let v = order.vertex(r);
        let mut acc = vec![v];
        for &w in h.up(v) {
            acc = merge_sorted(&acc, &lists[w]);
        }
        lists[v] = acc;
    }
    let flagged = lists
        .into_iter()
        .enumerate()
        .map(|(v, list)| {
            let up = h.up(v);
            list.into_iter().map(|u| (u, up.binary_search(&u).is_ok())).collect()
        })
        .collect();
    LabelSet::from_flagged_lists(flagged)
        .and_then(|l| l.with_order(order.clone()))
        .expect("search spaces are sorted, in range and respect the order")
}

fn merge_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Canonical labels straight from the definition: `u ∈ L(v)` iff `v` and `u`
/// are connected in the subgraph induced by the vertices of rank at most
/// `rank(u)`. One BFS per hub candidate, plus one per vertex for the
/// upward-neighbor flags.
pub fn brute_force_canonical_labels(g: &Graph, ord: &Order) -> LabelSet {
    let n = g.num_vertices();
    let mut lists: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for u in 0..n {
        let top = ord.rank(u);
        seen.iter_mut().for_each(|s| *s = false);
        seen[u] = true;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            lists[x].push(u);
            for &y in g.neighbors(x) {
                if !seen[y] && ord.rank(y) <= top {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    // u ∈ N↑(v) iff some v-u path has all interior vertices ranked below v
    let mut flagged: Vec<Vec<(VertexId, bool)>> = Vec::with_capacity(n);
    for (v, hubs) in lists.into_iter().enumerate() {
        let low = ord.rank(v);
        let mut upper = Vec::new();
        seen.iter_mut().for_each(|s| *s = false);
        seen[v] = true;
        queue.push_back(v);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                if ord.rank(y) > low {
                    upper.push(y);
                } else {
                    queue.push_back(y);
                }
            }
        }
        flagged.push(hubs.into_iter().map(|u| (u, upper.contains(&u))).collect());
    }
    LabelSet::from_flagged_lists(flagged)
        .and_then(|l| l.with_order(ord.clone()))
        .expect("reachability labels respect the order")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelStats {
    pub avg: Ratio<u64>,
    pub max: usize,
    pub total: usize,
}

impl LabelStats {
    pub fn avg_f64(&self) -> f64 {
        *self.avg.numer() as f64 / *self.avg.denom() as f64
    }
}

pub fn label_stats(l: &LabelSet) -> LabelStats {
    let n = l.num_vertices();
    let total = l.total_size();
    let max = (0..n).map(|v| l.len_of(v)).max().unwrap_or(0);
    let avg = if n == 0 { Ratio::from_integer(0) } else { Ratio::new(total as u64, n as u64) };
    LabelStats { avg, max, total }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverReport {
    Pass,
    /// First failing pair in lexicographic order (`s ≤ t`).
    Fail { s: VertexId, t: VertexId },
}

impl CoverReport {
    pub fn passed(&self) -> bool {
        matches!(self, CoverReport::Pass)
    }
}

/// Checks that every `s`-`t` path meets `L(s) ∩ L(t)`, for all pairs `s ≤ t`.
///
/// A pair passes when one endpoint is a common hub, or when deleting the
/// common hubs disconnects `s` from `t`. For `s = t` this reduces to `s ∈ L(s)`.
pub fn verify_customizable_cover(g: &Graph, l: &LabelSet) -> CoverReport {
    let n = g.num_vertices();
    let first_bad: Vec<Option<VertexId>> = map_range(n, |s| {
        let mut blocked = vec![false; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        (s..n).find(|&t| !pair_covered(g, l, s, t, &mut blocked, &mut seen, &mut queue))
    });
    first_bad
        .into_iter()
        .enumerate()
        .find_map(|(s, t)| t.map(|t| CoverReport::Fail { s, t }))
        .unwrap_or(CoverReport::Pass)
}

fn pair_covered(
    g: &Graph,
    l: &LabelSet,
    s: VertexId,
    t: VertexId,
    blocked: &mut [bool],
    seen: &mut [bool],
    queue: &mut VecDeque<VertexId>,
) -> bool {
    let common = l.common_hubs(s, t);
    if common.binary_search(&s).is_ok() || common.binary_search(&t).is_ok() {
        return true;
    }
    if s == t {
        return false;
    }
    for &h in &common {
        blocked[h] = true;
    }
    seen.iter_mut().for_each(|x| *x = false);
    seen[s] = true;
    queue.clear();
    queue.push_back(s);
    let mut reached = false;
    while let Some(x) = queue.pop_front() {
        if x == t {
            reached = true;
            break;
        }
        for &y in g.neighbors(x) {
            if !seen[y] && !blocked[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    for &h in &common {
        blocked[h] = false;
    }
    !reached
}

pub const MAX_BRUTEFORCE_ORDER_N: usize = 8;

/// Minimum total canonical label size over all `n!` orders. Returns the first
/// minimizing order in lexicographic order of rank sequences and its average.
pub fn optimal_hcuhl_bruteforce(g: &Graph) -> Result<(Order, Ratio<u64>)> {
    let n = g.num_vertices();
    if n > MAX_BRUTEFORCE_ORDER_N {
        return Err(Error::SizeLimit { what: "order enumeration", limit: MAX_BRUTEFORCE_ORDER_N, n });
    }
    if n == 0 {
        return Ok((Order::identity(0), Ratio::from_integer(0)));
    }
    let mut best: Option<(usize, Order)> = None;
    for vertices in (0..n).permutations(n) {
        let ord = Order::from_vertices(vertices).expect("permutation");
        let total = brute_force_canonical_labels(g, &ord).total_size();
        if best.as_ref().is_none_or(|(b, _)| total < *b) {
            best = Some((total, ord));
        }
    }
    let (total, ord) = best.expect("at least one order");
    Ok((ord, Ratio::new(total as u64, n as u64)))
}
