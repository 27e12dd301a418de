//! Browser bindings: nested-dissection labels on a grid, exact distance
//! queries through those labels, and the star-clique gap table.

use cuhl::customize::{customize_edges, customize_hierarchical, HierarchicalEngine};
use cuhl::generators::{gen_grid, gen_random_metric};
use cuhl::hierarchy::build_cch;
use cuhl::labeling::{build_canonical_hcuhl, label_stats};
use cuhl::oracles::{dijkstra, gap_experiment};
use cuhl::ordering::{nested_dissection, Alpha, SeparatorMode};
use cuhl::query::{hl_query, CustomizedLabels};
use cuhl::{Graph, Metric, Order, INFINITY};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

pub const MAX_SIDE: usize = 40;

/// A weighted `rows × cols` grid with nested-dissection labels customized
/// for random weights.
#[wasm_bindgen]
pub struct GridDemo {
    rows: usize,
    cols: usize,
    graph: Graph,
    metric: Metric,
    order: Order,
    separators: Vec<Vec<usize>>,
    customized: CustomizedLabels,
}

#[wasm_bindgen]
impl GridDemo {
    #[wasm_bindgen(constructor)]
    pub fn new(rows: usize, cols: usize, seed: u64, grid_aware: bool) -> Result<GridDemo, JsError> {
        if rows == 0 || cols == 0 || rows > MAX_SIDE || cols > MAX_SIDE {
            return Err(JsError::new(&format!("grid sides must lie in 1..={MAX_SIDE}")));
        }
        let graph = gen_grid(rows, cols).map_err(|e| JsError::new(&e.to_string()))?;
        let metric = gen_random_metric(&graph, 1, 9, seed);
        let mode = if grid_aware { SeparatorMode::GridAware } else { SeparatorMode::Heuristic };
        let (tree, order) =
            nested_dissection(&graph, Alpha::TWO_THIRDS, mode).map_err(|e| JsError::new(&e.to_string()))?;
        let cch = build_cch(&graph, &order);
        let labels = build_canonical_hcuhl(&cch);
        let ed = customize_edges(&cch, &metric).map_err(|e| JsError::new(&e.to_string()))?;
        let customized = customize_hierarchical(&cch, &labels, &ed, HierarchicalEngine::TopDown)
            .map_err(|e| JsError::new(&e.to_string()))?;
        let separators = tree.nodes().iter().filter(|n| !n.children.is_empty()).map(|n| n.vertices.clone()).collect();
        Ok(GridDemo { rows, cols, graph, metric, order, separators, customized })
    }

    /// Grid shape, ranks, label sizes, separator sets and summary statistics.
    pub fn summary(&self) -> String {
        self.summary_value().to_string()
    }

    /// Hubs of vertex `v` with their customized distances.
    pub fn label(&self, v: usize) -> String {
        self.label_value(v).to_string()
    }

    /// Label-merge answer for `s → t` next to the Dijkstra distance.
    pub fn query(&self, s: usize, t: usize) -> String {
        self.query_value(s, t).to_string()
    }
}

impl GridDemo {
    pub fn summary_value(&self) -> Value {
        let labels = self.customized.labels();
        let stats = label_stats(labels);
        let n = self.graph.num_vertices();
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "n": n,
            "m": self.graph.num_edges(),
            "ranks": self.order.ranks(),
            "label_sizes": (0..n).map(|v| labels.len_of(v)).collect::<Vec<_>>(),
            "separators": self.separators,
            "l_avg": stats.avg_f64(),
            "l_max": stats.max,
            "l_max_bound": 3 * self.rows.max(self.cols),
        })
    }

    pub fn label_value(&self, v: usize) -> Value {
        if v >= self.graph.num_vertices() {
            return json!({ "error": format!("vertex {v} out of range") });
        }
        let hubs = self.customized.labels().label(v);
        let dists = self.customized.distances_of(v);
        json!({
            "vertex": v,
            "hubs": hubs,
            "distances": dists.iter().map(|&d| weight_json(d)).collect::<Vec<_>>(),
        })
    }

    pub fn query_value(&self, s: usize, t: usize) -> Value {
        match hl_query(&self.customized, s, t) {
            Err(e) => json!({ "error": e.to_string() }),
            Ok(meeting) => {
                let truth = dijkstra(&self.graph, &self.metric, s)[t];
                json!({
                    "s": s,
                    "t": t,
                    "distance": meeting.map(|m| m.distance),
                    "hub": meeting.map(|m| m.hub),
                    "dijkstra": weight_json(truth),
                    "common_hubs": self.customized.labels().common_hubs(s, t),
                })
            }
        }
    }
}

fn weight_json(d: u64) -> Value {
    if d == INFINITY { Value::Null } else { json!(d) }
}

/// Rows of the star-clique experiment for comma-separated `k` values.
#[wasm_bindgen]
pub fn gap_table(ks: &str) -> Result<String, JsError> {
    gap_table_value(ks).map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

pub fn gap_table_value(ks: &str) -> Result<Value, String> {
    let ks = ks
        .split(',')
        .map(|k| k.trim().parse::<usize>().map_err(|_| format!("invalid k '{k}'")))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(&k) = ks.iter().find(|&&k| k == 0 || k > 16) {
        return Err(format!("k = {k} outside 1..=16"));
    }
    let rows = gap_experiment(&ks).map_err(|e| e.to_string())?;
    Ok(Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "k": r.k,
                    "n": r.n,
                    "l_avg": r.l_avg_f64(),
                    "s_avg": r.s_avg_f64(),
                    "ratio": r.ratio(),
                    "cover_ok": r.cover_ok,
                })
            })
            .collect(),
    ))
}
