use std::fs;
use std::path::{Path, PathBuf};

use cuhl::bounds::{check_lower_bounds, check_nd_approximation, grid_report, GRID_RATIO_LIMIT};
use cuhl::customize::{customize_edges, customize_hierarchical, customize_queue, Engine};
use cuhl::generators::{
    gen_complete_with_apex, gen_grid, gen_random, gen_random_metric, gen_random_order, gen_star_clique,
    gen_weights_exponential,
};
use cuhl::hierarchy::build_cch;
use cuhl::io;
use cuhl::labeling::{build_canonical_hcuhl, build_inverse_labels, label_stats, verify_customizable_cover, CoverReport};
use cuhl::oracles::{all_pairs_distances, canonical_hhl, gap_experiment, hop_diameter, min_degree_order, verify_metric_cover};
use cuhl::ordering::{nested_dissection, Alpha, SeparatorMode};
use cuhl::query::hl_query;
use cuhl::{Graph, LabelSet, Order, INFINITY};

use crate::{BoundsCheck, Cli, Command, Family, OrderMode};

/// Exit status 1 for failed checks, 2 for bad input or usage.
#[derive(Debug)]
pub enum Failure {
    Verification(String),
    Input(String),
}

type Outcome = Result<(), Failure>;

fn input(msg: impl std::fmt::Display) -> Failure {
    Failure::Input(msg.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

/// Reads and parses a file, prefixing errors with its path.
fn load<T>(path: &Path, parse: impl FnOnce(&str) -> cuhl::Result<T>) -> Result<T, Failure> {
    parse(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    load(path, io::parse_graph)
}

fn load_order(path: &Path, g: &Graph) -> Result<Order, Failure> {
    load(path, |t| io::parse_order(t, g.num_vertices()))
}

fn load_labels(path: &Path, g: &Graph) -> Result<LabelSet, Failure> {
    let l = load(path, io::parse_labels)?;
    if l.num_vertices() != g.num_vertices() {
        return Err(input(format!(
            "{}: {} labels for {} vertices",
            path.display(),
            l.num_vertices(),
            g.num_vertices()
        )));
    }
    Ok(l)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| input(format!("missing required flag {flag}")))
}

pub fn run(cli: Cli) -> Outcome {
    let seed = cli.seed;
    match cli.command {
        Command::Gen(a) => {
            let (g, family_metric, labels) = match a.family {
                Family::Grid => {
                    let p = require(a.p, "--p")?;
                    (gen_grid(p, a.q.unwrap_or(p)).map_err(input)?, None, None)
                }
                Family::Random => {
                    let n = require(a.n, "--n")?;
                    let m = a.m.unwrap_or((2 * n).min(n * n.saturating_sub(1) / 2).max(n.saturating_sub(1)));
                    (gen_random(n, m, seed).map_err(input)?, None, None)
                }
                Family::StarClique => {
                    let sc = gen_star_clique(require(a.k, "--k")?).map_err(input)?;
                    (sc.graph, Some(sc.metric), Some(sc.labels))
                }
                Family::CompleteApex => {
                    let (g, m) = gen_complete_with_apex(require(a.n, "--n")?).map_err(input)?;
                    (g, Some(m), None)
                }
            };
            log::info!("generated n={} m={}", g.num_vertices(), g.num_edges());
            if let Some(path) = &a.metric_out {
                let metric = match (&a.exponential_order, family_metric) {
                    (Some(ord), _) => gen_weights_exponential(&g, &load_order(ord, &g)?).map_err(input)?,
                    (None, Some(m)) => m,
                    (None, None) => {
                        if a.min_weight > a.max_weight {
                            return Err(input("--min-weight exceeds --max-weight"));
                        }
                        gen_random_metric(&g, a.min_weight, a.max_weight, seed)
                    }
                };
                emit(Some(path), &io::write_metric(&g, &metric))?;
            }
            if let Some(path) = &a.labels_out {
                let l = labels.ok_or_else(|| input("--labels-out is only available for star-clique"))?;
                emit(Some(path), &io::write_labels(&l))?;
            }
            emit(a.out.as_ref(), &io::write_graph(&g))
        }

        Command::Order(a) => {
            let g = load_graph(&a.graph)?;
            let alpha: Alpha = a.alpha.parse().map_err(input)?;
            let separator_mode = match a.mode {
                OrderMode::Heuristic => Some(SeparatorMode::Heuristic),
                OrderMode::GridAware => Some(SeparatorMode::GridAware),
                OrderMode::Exact => Some(SeparatorMode::Exact),
                OrderMode::MinDegree | OrderMode::Random => None,
            };
            let order = match separator_mode {
                Some(mode) => {
                    let (tree, order) = nested_dissection(&g, alpha, mode).map_err(input)?;
                    log::info!("separator tree height {}", tree.height());
                    if let Some(path) = &a.tree_out {
                        emit(Some(path), &io::write_separator_tree(&tree))?;
                    }
                    order
                }
                None if a.tree_out.is_some() => return Err(input("--tree-out needs a separator mode")),
                None if matches!(a.mode, OrderMode::MinDegree) => min_degree_order(&g),
                None => gen_random_order(g.num_vertices(), seed),
            };
            emit(a.out.as_ref(), &io::write_order(&order))
        }

        Command::Cch(a) => {
            let g = load_graph(&a.graph)?;
            let ord = load_order(&a.order, &g)?;
            let h = build_cch(&g, &ord);
            log::info!("|E+| = {}", h.num_shortcuts());
            emit(a.out.as_ref(), &io::write_cch(&h))
        }

        Command::Label(a) => {
            let g = load_graph(&a.graph)?;
            let ord = load_order(&a.order, &g)?;
            let l = match &a.metric {
                Some(path) => {
                    let m = load(path, |t| io::parse_metric(&g, t))?;
                    canonical_hhl(&g, &m, &ord).map_err(input)?
                }
                None => build_canonical_hcuhl(&build_cch(&g, &ord)),
            };
            let s = label_stats(&l);
            log::info!("L_avg = {:.4}, L_max = {}", s.avg_f64(), s.max);
            emit(a.out.as_ref(), &io::write_labels(&l))
        }

        Command::Customize(a) => {
            let g = load_graph(&a.graph)?;
            let l = load_labels(&a.labels, &g)?;
            let m = load(&a.metric, |t| io::parse_metric(&g, t))?;
            let engine: Engine = a.engine.parse().map_err(input)?;
            let customized = match engine {
                Engine::Hierarchical(e) => {
                    let ord = load_order(require(a.order.as_ref(), "--order")?, &g)?;
                    let h = build_cch(&g, &ord);
                    let canonical = build_canonical_hcuhl(&h);
                    if canonical.to_lists() != l.to_lists() {
                        return Err(input("hierarchical engines need the canonical labels of --order"));
                    }
                    let ed = customize_edges(&h, &m).map_err(input)?;
                    customize_hierarchical(&h, &canonical, &ed, e).map_err(input)?
                }
                Engine::Queue => {
                    let out = customize_queue(&g, &l, &build_inverse_labels(&l), &m).map_err(input)?;
                    let d_hop = hop_diameter(&g, &m);
                    println!("dequeues={} max_per_pair={} d_hop={d_hop}", out.stats.dequeues, out.stats.max_per_pair);
                    out.labels
                }
            };
            emit(a.out.as_ref(), &io::write_customized(&customized))
        }

        Command::Query(a) => {
            let c = load(&a.customized, io::parse_customized)?;
            let pairs = load(&a.pairs, |t| io::parse_queries(t, c.num_vertices()))?;
            let results = pairs
                .into_iter()
                .map(|(s, t)| hl_query(&c, s, t).map(|m| (s, t, m)))
                .collect::<cuhl::Result<Vec<_>>>()
                .map_err(input)?;
            emit(a.out.as_ref(), &io::write_query_results(&results))
        }

        Command::Verify(a) => verify(a),

        Command::Stats(a) => {
            let g = load_graph(&a.graph)?;
            let mut out = format!("n\t{}\nm\t{}\nmax_degree\t{}\n", g.num_vertices(), g.num_edges(), g.max_degree());
            if let Some(path) = &a.order {
                let h = build_cch(&g, &load_order(path, &g)?);
                out += &format!("m_plus\t{}\n", h.num_shortcuts());
            }
            if let Some(path) = &a.labels {
                let s = label_stats(&load_labels(path, &g)?);
                out += &format!("l_avg\t{:.4}\nl_max\t{}\nl_total\t{}\n", s.avg_f64(), s.max, s.total);
            }
            emit(None, &out)
        }

        Command::Bounds(a) => bounds(a.check),

        Command::GapExp(a) => {
            let rows = gap_experiment(&a.k).map_err(input)?;
            emit(a.out.as_ref(), &io::write_gap_table(&rows))?;
            match rows.iter().find(|r| !r.cover_ok) {
                Some(r) => Err(Failure::Verification(format!("explicit labels for k={} fail the cover check", r.k))),
                None => Ok(()),
            }
        }
    }
}

fn verify(a: crate::VerifyArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let metric = a.metric.as_ref().map(|p| load(p, |t| io::parse_metric(&g, t))).transpose()?;
    let mut checks = 0;

    if let Some(path) = &a.labels {
        let l = load_labels(path, &g)?;
        let report = if a.metric_cover {
            let m = require(metric.as_ref(), "--metric")?;
            verify_metric_cover(&g, m, &l).map_err(input)?
        } else {
            verify_customizable_cover(&g, &l)
        };
        if let CoverReport::Fail { s, t } = report {
            return Err(Failure::Verification(format!("cover property fails for pair {} {}", s + 1, t + 1)));
        }
        println!("cover: ok");
        checks += 1;
    }

    if a.oracle {
        let m = require(metric.as_ref(), "--metric")?;
        if a.customized.is_none() && a.results.is_none() {
            return Err(input("--oracle needs --customized or --results"));
        }
        let dist = all_pairs_distances(&g, m);
        if let Some(path) = &a.customized {
            let c = load(path, io::parse_customized)?;
            if c.num_vertices() != g.num_vertices() {
                return Err(input(format!("{}: vertex count differs from the graph", path.display())));
            }
            for s in 0..g.num_vertices() {
                for t in 0..g.num_vertices() {
                    let got = hl_query(&c, s, t).map_err(input)?.map_or(INFINITY, |m| m.distance);
                    if got != dist[s][t] {
                        return Err(Failure::Verification(format!(
                            "query {} {} returns {}, Dijkstra {}",
                            s + 1,
                            t + 1,
                            show(got),
                            show(dist[s][t])
                        )));
                    }
                }
            }
            println!("oracle: all {} pairs match", g.num_vertices() * g.num_vertices());
        }
        if let Some(path) = &a.results {
            let lines = check_results(&read(path)?, &dist).map_err(|e| match e {
                Failure::Input(m) => input(format!("{}: {m}", path.display())),
                other => other,
            })?;
            println!("oracle: {lines} query results match");
        }
        checks += 1;
    }

    if checks == 0 {
        return Err(input("nothing to verify: pass --labels and/or --oracle"));
    }
    Ok(())
}

fn show(d: u64) -> String {
    if d == INFINITY { "inf".into() } else { d.to_string() }
}

/// Compares `s t dist hub` lines with Dijkstra distances.
fn check_results(text: &str, dist: &[Vec<u64>]) -> Result<usize, Failure> {
    let n = dist.len();
    let mut count = 0;
    for (i, line) in text.lines().enumerate() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let bad = || input(format!("line {}: expected 's t dist hub'", i + 1));
        let [s, t, d, _] = tokens[..] else { return Err(bad()) };
        let s: usize = s.parse().map_err(|_| bad())?;
        let t: usize = t.parse().map_err(|_| bad())?;
        if s == 0 || t == 0 || s > n || t > n {
            return Err(input(format!("line {}: vertex out of range", i + 1)));
        }
        let d = if d == "inf" { INFINITY } else { d.parse().map_err(|_| bad())? };
        if d != dist[s - 1][t - 1] {
            return Err(Failure::Verification(format!(
                "line {}: {s} {t} reports {}, Dijkstra {}",
                i + 1,
                show(d),
                show(dist[s - 1][t - 1])
            )));
        }
        count += 1;
    }
    Ok(count)
}

fn bounds(check: BoundsCheck) -> Outcome {
    let (table, passed) = match check {
        BoundsCheck::Lower { graph, labels, general } => {
            let g = load_graph(&graph)?;
            let l = load_labels(&labels, &g)?;
            let r = check_lower_bounds(&g, &l, !general).map_err(input)?;
            let flag = |b: Option<bool>| b.map_or("-", |x| if x { "ok" } else { "FAIL" });
            let table = format!(
                "n\tb\tl_avg\tgeneral\thier_avg\tlarge_labels\trequired\thier_count\n{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                r.n,
                r.b,
                r.l_avg,
                flag(Some(r.general_ok)),
                flag(r.hierarchical_avg_ok),
                r.large_labels,
                r.large_labels_required,
                flag(r.hierarchical_count_ok)
            );
            (table, r.passed())
        }
        BoundsCheck::Nd { graph } => {
            let r = check_nd_approximation(&load_graph(&graph)?).map_err(input)?;
            let table = format!(
                "n\tl_avg_nd\tl_avg_opt\tfactor\tbound\n{}\t{}\t{}\t{:.4}\t{:.4}\n",
                r.n,
                r.l_avg_nd,
                r.l_avg_opt,
                r.factor(),
                r.factor_bound
            );
            (table, r.passed())
        }
        BoundsCheck::Grid { p, heuristic } => {
            let r = grid_report(p, !heuristic).map_err(input)?;
            let table = format!(
                "p\tn\tl_max\tl_max_bound\tl_avg\tratio\tratio_bound\n{}\t{}\t{}\t{}\t{:.4}\t{:.4}\t{GRID_RATIO_LIMIT}\n",
                r.p,
                r.n,
                r.l_max,
                r.l_max_bound(),
                *r.l_avg.numer() as f64 / *r.l_avg.denom() as f64,
                r.ratio()
            );
            (table, r.passed())
        }
    };
    print!("{table}");
    if passed {
        println!("bounds: PASS");
        Ok(())
    } else {
        println!("bounds: FAIL");
        Err(Failure::Verification("a label-size bound is violated".into()))
    }
}
