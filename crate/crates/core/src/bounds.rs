//! Separator-based label-size checks.
//!
//! Every labeling with the customizable cover property has average label
//! size at least `b/4`, where `b` is the minimum size of a 2/3-balanced
//! separator. Hierarchical labelings satisfy the stronger `L_avg ≥ 2b/3`, and
//! at least `⌈2n/3⌉` of their labels have size `b` or more.

use num_rational::Ratio;

use crate::graph::Graph;
use crate::hierarchy::build_cch;
use crate::labeling::{build_canonical_hcuhl, label_stats, optimal_hcuhl_bruteforce, verify_customizable_cover, LabelSet};
use crate::ordering::{exact_b_alpha, nested_dissection, Alpha, SeparatorMode};
use crate::generators::gen_grid;
use crate::{Error, Result};

pub const MAX_LOWER_BOUND_N: usize = 18;
pub const MAX_ND_CHECK_N: usize = 8;
pub const MAX_GRID_P: usize = 64;
/// Upper limit on `L_avg / (√(2n/3) / 4)` for grid-aware nested dissection.
pub const GRID_RATIO_LIMIT: f64 = 14.7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundReport {
    pub n: usize,
    /// Exact minimum 2/3-balanced separator size.
    pub b: usize,
    pub l_avg: Ratio<u64>,
    /// `L_avg ≥ b/4`.
    pub general_ok: bool,
    /// `L_avg ≥ 2b/3`, checked for hierarchical labelings only.
    pub hierarchical_avg_ok: Option<bool>,
    /// Vertices with `|L(v)| ≥ b`.
    pub large_labels: usize,
    /// `⌈2n/3⌉`.
    pub large_labels_required: usize,
    pub hierarchical_count_ok: Option<bool>,
}

impl LowerBoundReport {
    pub fn passed(&self) -> bool {
        self.general_ok && self.hierarchical_avg_ok != Some(false) && self.hierarchical_count_ok != Some(false)
    }
}

pub fn check_lower_bounds(g: &Graph, l: &LabelSet, hierarchical: bool) -> Result<LowerBoundReport> {
    let n = g.num_vertices();
    if n > MAX_LOWER_BOUND_N {
        return Err(Error::SizeLimit { what: "lower-bound check", limit: MAX_LOWER_BOUND_N, n });
    }
    if l.num_vertices() != n {
        return Err(Error::invalid("labeling and graph have different vertex counts"));
    }
    if !verify_customizable_cover(g, l).passed() {
        return Err(Error::invalid("labeling violates the customizable cover property"));
    }
    let b = exact_b_alpha(g, Alpha::TWO_THIRDS)?;
    let stats = label_stats(l);
    let (total, n64, b64) = (stats.total as u64, n as u64, b as u64);
    let large_labels = (0..n).filter(|&v| l.len_of(v) >= b).count();
    let large_labels_required = (2 * n).div_ceil(3);
    Ok(LowerBoundReport {
        n,
        b,
        l_avg: stats.avg,
        general_ok: 4 * total >= b64 * n64,
        hierarchical_avg_ok: hierarchical.then_some(3 * total >= 2 * b64 * n64),
        large_labels,
        large_labels_required,
        hierarchical_count_ok: hierarchical.then_some(large_labels >= large_labels_required),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct NdReport {
    pub n: usize,
    pub l_avg_nd: Ratio<u64>,
    pub l_avg_opt: Ratio<u64>,
    /// `1 + 1.5·log_{1.5} n`.
    pub factor_bound: f64,
}

impl NdReport {
    pub fn factor(&self) -> f64 {
        if *self.l_avg_opt.numer() == 0 {
            return 1.0;
        }
        ratio_f64(self.l_avg_nd / self.l_avg_opt)
    }

    pub fn passed(&self) -> bool {
        self.l_avg_nd <= self.l_avg_opt || self.factor() <= self.factor_bound
    }
}

fn ratio_f64(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn nd_factor_bound(n: usize) -> f64 {
    if n <= 1 {
        return 1.0;
    }
    1.0 + 1.5 * (n as f64).ln() / 1.5f64.ln()
}

/// Nested dissection with exact 2/3-balanced separators against the best
/// order found by enumeration.
pub fn check_nd_approximation(g: &Graph) -> Result<NdReport> {
    let n = g.num_vertices();
    if n > MAX_ND_CHECK_N {
        return Err(Error::SizeLimit { what: "nested dissection check", limit: MAX_ND_CHECK_N, n });
    }
    let (_, ord) = nested_dissection(g, Alpha::TWO_THIRDS, SeparatorMode::Exact)?;
    let l_avg_nd = label_stats(&build_canonical_hcuhl(&build_cch(g, &ord))).avg;
    let (_, l_avg_opt) = optimal_hcuhl_bruteforce(g)?;
    Ok(NdReport { n, l_avg_nd, l_avg_opt, factor_bound: nd_factor_bound(n) })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridReport {
    pub p: usize,
    pub n: usize,
    pub l_max: usize,
    pub l_avg: Ratio<u64>,
    pub separator_tree_height: usize,
}

impl GridReport {
    pub fn l_max_bound(&self) -> usize {
        3 * self.p
    }

    /// `L_avg / (√(2n/3) / 4)`.
    pub fn ratio(&self) -> f64 {
        ratio_f64(self.l_avg) / (0.25 * (2.0 * self.n as f64 / 3.0).sqrt())
    }

    pub fn passed(&self) -> bool {
        self.l_max <= self.l_max_bound() && self.ratio() <= GRID_RATIO_LIMIT
    }
}

pub fn grid_report(p: usize, grid_aware: bool) -> Result<GridReport> {
    if p > MAX_GRID_P {
        return Err(Error::SizeLimit { what: "grid side", limit: MAX_GRID_P, n: p });
    }
    let g = gen_grid(p, p)?;
    let mode = if grid_aware { SeparatorMode::GridAware } else { SeparatorMode::Heuristic };
    let (tree, ord) = nested_dissection(&g, Alpha::TWO_THIRDS, mode)?;
    let stats = label_stats(&build_canonical_hcuhl(&build_cch(&g, &ord)));
    Ok(GridReport {
        p,
        n: p * p,
        l_max: stats.max,
        l_avg: stats.avg,
        separator_tree_height: tree.height(),
    })
}
