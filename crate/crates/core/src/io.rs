//! Plain-text formats. Vertex ids are 1-based in files and 0-based in memory.
//! Blank lines and lines starting with `c` are ignored by every parser.

use std::fmt::Write as _;

use crate::graph::{Graph, Metric, Order, VertexId, Weight, INFINITY};
use crate::hierarchy::ChordalSupergraph;
use crate::labeling::LabelSet;
use crate::oracles::GapRow;
use crate::ordering::SeparatorTree;
use crate::query::{CustomizedLabels, Meeting};
use crate::{Error, Result};

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token.parse().map_err(|_| Error::parse(line, format!("invalid {what} '{token}'")))
}

fn vertex(line: usize, token: &str, n: usize) -> Result<VertexId> {
    let v: usize = number(line, token, "vertex id")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

fn fields<const K: usize>(line: usize, text: &str) -> Result<[&str; K]> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    tokens
        .try_into()
        .map_err(|t: Vec<&str>| Error::parse(line, format!("expected {K} fields, found {}", t.len())))
}

fn edge(line: usize, u: VertexId, v: VertexId) -> Result<(VertexId, VertexId)> {
    if u == v {
        return Err(Error::parse(line, format!("self-loop at vertex {}", u + 1)));
    }
    Ok((u, v))
}

/// Edge-list graph (`n m` header, then `m` lines `u v`) or DIMACS `.gr`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if is_dimacs(text) {
        return parse_dimacs(text).map(|(g, _)| g);
    }
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing 'n m' header"))?;
    let [n, m] = fields::<2>(hl, header)?;
    let n: usize = number(hl, n, "vertex count")?;
    let m: usize = number(hl, m, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, text) in lines {
        let [u, v] = fields::<2>(ln, text)?;
        edges.push(edge(ln, vertex(ln, u, n)?, vertex(ln, v, n)?)?);
        last = ln;
    }
    if edges.len() != m {
        return Err(Error::parse(last, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

fn is_dimacs(text: &str) -> bool {
    content_lines(text).next().is_some_and(|(_, l)| l.starts_with("p "))
}

/// DIMACS shortest-path format: `p sp n m` and arcs `a u v w`. Opposite arcs
/// collapse into one undirected edge and must agree on the weight.
pub fn parse_dimacs(text: &str) -> Result<(Graph, Metric)> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing 'p sp n m' header"))?;
    let [_, kind, n, m] = fields::<4>(hl, header)?;
    if kind != "sp" {
        return Err(Error::parse(hl, format!("unsupported problem type '{kind}'")));
    }
    let n: usize = number(hl, n, "vertex count")?;
    let m: usize = number(hl, m, "arc count")?;
    let mut arcs = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, text) in lines {
        let [tag, u, v, w] = fields::<4>(ln, text)?;
        if tag != "a" {
            return Err(Error::parse(ln, format!("expected an arc line, found '{tag}'")));
        }
        let (u, v) = edge(ln, vertex(ln, u, n)?, vertex(ln, v, n)?)?;
        arcs.push((ln, u.min(v), u.max(v), number::<Weight>(ln, w, "weight")?));
        last = ln;
    }
    if arcs.len() != m {
        return Err(Error::parse(last, format!("header announces {m} arcs, found {}", arcs.len())));
    }
    arcs.sort_by_key(|&(ln, u, v, _)| (u, v, ln));
    let mut triples: Vec<(VertexId, VertexId, Weight)> = Vec::new();
    for &(ln, u, v, w) in &arcs {
        match triples.last() {
            Some(&(pu, pv, pw)) if (pu, pv) == (u, v) => {
                if pw != w {
                    return Err(Error::parse(ln, format!("arc {} {} disagrees with its reverse", u + 1, v + 1)));
                }
            }
            _ => triples.push((u, v, w)),
        }
    }
    let g = Graph::from_edges(n, triples.iter().map(|&(u, v, _)| (u, v)))?;
    let metric = Metric::from_triples(&g, triples)?;
    Ok((g, metric))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.num_vertices(), g.num_edges());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// One `u v w` line per edge, in any order. A DIMACS text is accepted too,
/// provided it describes the same graph.
pub fn parse_metric(g: &Graph, text: &str) -> Result<Metric> {
    if is_dimacs(text) {
        let (h, m) = parse_dimacs(text)?;
        if h != *g {
            return Err(Error::invalid("DIMACS metric describes a different graph"));
        }
        return Ok(m);
    }
    let n = g.num_vertices();
    let mut weights: Vec<Vec<Option<Weight>>> = (0..n).map(|v| vec![None; g.degree(v)]).collect();
    let mut seen = 0;
    for (ln, text) in content_lines(text) {
        let [u, v, w] = fields::<3>(ln, text)?;
        let (u, v) = edge(ln, vertex(ln, u, n)?, vertex(ln, v, n)?)?;
        let w: Weight = number(ln, w, "weight")?;
        if w == INFINITY {
            return Err(Error::parse(ln, "weight is reserved for infinity"));
        }
        let (Some(iu), Some(iv)) = (g.edge_slot(u, v), g.edge_slot(v, u)) else {
            return Err(Error::parse(ln, format!("{} {} is not an edge", u + 1, v + 1)));
        };
        if weights[u][iu].is_some() {
            return Err(Error::parse(ln, format!("edge {} {} weighted twice", u + 1, v + 1)));
        }
        weights[u][iu] = Some(w);
        weights[v][iv] = Some(w);
        seen += 1;
    }
    if seen != g.num_edges() {
        return Err(Error::invalid(format!("metric weights {seen} of {} edges", g.num_edges())));
    }
    Ok(Metric::from_fn(g, |u, v| weights[u][g.edge_slot(u, v).expect("edge")].expect("weighted")))
}

pub fn write_metric(g: &Graph, m: &Metric) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {} {}", u + 1, v + 1, m.weight(g, u, v).expect("edge"));
    }
    out
}

/// Line `r` holds the vertex of rank `r`.
pub fn parse_order(text: &str, n: usize) -> Result<Order> {
    let mut vertices = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for (ln, text) in content_lines(text) {
        let [v] = fields::<1>(ln, text)?;
        let v = vertex(ln, v, n)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::parse(ln, format!("vertex {} ranked twice", v + 1)));
        }
        vertices.push(v);
    }
    if vertices.len() != n {
        return Err(Error::invalid(format!("order lists {} of {n} vertices", vertices.len())));
    }
    Order::from_vertices(vertices)
}

pub fn write_order(ord: &Order) -> String {
    ord.vertices().iter().map(|v| format!("{}\n", v + 1)).collect()
}

fn id_list(vs: impl IntoIterator<Item = VertexId>) -> String {
    vs.into_iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(", ")
}

/// One node per line, indented two spaces per level.
pub fn write_separator_tree(t: &SeparatorTree) -> String {
    fn node(t: &SeparatorTree, i: usize, depth: usize, out: &mut String) {
        let nd = t.node(i);
        let _ = writeln!(out, "{}S = {{{}}} (n'={})", "  ".repeat(depth), id_list(nd.vertices.iter().copied()), nd.subgraph_size);
        for &c in &nd.children {
            node(t, c, depth + 1, out);
        }
    }
    let mut out = String::new();
    for &r in t.roots() {
        node(t, r, 0, &mut out);
    }
    out
}

pub fn write_cch(h: &ChordalSupergraph) -> String {
    let mut out = String::new();
    for v in 0..h.num_vertices() {
        let up = id_list(h.up(v).iter().copied());
        let down = id_list(h.down(v).iter().copied());
        let _ = writeln!(out, "{} : up = [{up}] down = [{down}]", v + 1);
    }
    let _ = writeln!(out, "m_plus = {}", h.num_shortcuts());
    out
}

/// `v k h1 … hk`, upward-neighbor hubs marked with a trailing `^`.
pub fn write_labels(l: &LabelSet) -> String {
    let mut out = String::new();
    for v in 0..l.num_vertices() {
        let _ = write!(out, "{} {}", v + 1, l.len_of(v));
        for (&h, &up) in l.label(v).iter().zip(l.upward_flags(v)) {
            let _ = write!(out, " {}{}", h + 1, if up { "^" } else { "" });
        }
        out.push('\n');
    }
    out
}

/// Lines of `v k` followed by `k` tokens. The number of vertices is the number
/// of lines, which must list vertices `1..=n` in order.
fn parse_label_lines<'a, T>(
    text: &'a str,
    mut entry: impl FnMut(usize, &'a str, usize) -> Result<T>,
) -> Result<Vec<Vec<T>>> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let n = lines.len();
    let mut out = Vec::with_capacity(n);
    for (expected, &(ln, text)) in lines.iter().enumerate() {
        let mut tokens = text.split_whitespace();
        let v = vertex(ln, tokens.next().unwrap_or(""), n)?;
        if v != expected {
            return Err(Error::parse(ln, format!("expected vertex {}, found {}", expected + 1, v + 1)));
        }
        let k: usize = number(ln, tokens.next().unwrap_or(""), "label size")?;
        let items = tokens.map(|t| entry(ln, t, n)).collect::<Result<Vec<T>>>()?;
        if items.len() != k {
            return Err(Error::parse(ln, format!("label announces {k} hubs, found {}", items.len())));
        }
        out.push(items);
    }
    Ok(out)
}

fn ascending<T>(lists: &[Vec<T>], key: impl Fn(&T) -> VertexId, text: &str) -> Result<()> {
    for ((ln, _), list) in content_lines(text).zip(lists) {
        if list.windows(2).any(|w| key(&w[0]) >= key(&w[1])) {
            return Err(Error::parse(ln, "hubs must be strictly ascending"));
        }
    }
    Ok(())
}

pub fn parse_labels(text: &str) -> Result<LabelSet> {
    let lists = parse_label_lines(text, |ln, token, n| {
        let (id, up) = match token.strip_suffix('^') {
            Some(id) => (id, true),
            None => (token, false),
        };
        Ok((vertex(ln, id, n)?, up))
    })?;
    ascending(&lists, |e| e.0, text)?;
    LabelSet::from_flagged_lists(lists)
}

/// `v k h1:d1 … hk:dk` with `inf` for unreachable entries.
pub fn write_customized(c: &CustomizedLabels) -> String {
    let l = c.labels();
    let mut out = String::new();
    for v in 0..l.num_vertices() {
        let _ = write!(out, "{} {}", v + 1, l.len_of(v));
        for (&h, &d) in l.label(v).iter().zip(c.distances_of(v)) {
            let _ = write!(out, " {}:{}", h + 1, format_weight(d));
        }
        out.push('\n');
    }
    out
}

fn format_weight(d: Weight) -> String {
    if d == INFINITY { "inf".to_string() } else { d.to_string() }
}

pub fn parse_customized(text: &str) -> Result<CustomizedLabels> {
    let lists = parse_label_lines(text, |ln, token, n| {
        let (h, d) = token
            .split_once(':')
            .ok_or_else(|| Error::parse(ln, format!("expected hub:distance, found '{token}'")))?;
        let d = if d == "inf" { INFINITY } else { number(ln, d, "distance")? };
        Ok((vertex(ln, h, n)?, d))
    })?;
    ascending(&lists, |e| e.0, text)?;
    let distances = lists.iter().flatten().map(|e| e.1).collect();
    let labels = LabelSet::from_lists(lists.into_iter().map(|l| l.into_iter().map(|e| e.0).collect()).collect())?;
    CustomizedLabels::new(labels, distances)
}

/// Lines `s t`.
pub fn parse_queries(text: &str, n: usize) -> Result<Vec<(VertexId, VertexId)>> {
    content_lines(text)
        .map(|(ln, text)| {
            let [s, t] = fields::<2>(ln, text)?;
            Ok((vertex(ln, s, n)?, vertex(ln, t, n)?))
        })
        .collect()
}

/// `s t dist hub`, or `s t inf -` when unreachable.
pub fn write_query_results(results: &[(VertexId, VertexId, Option<Meeting>)]) -> String {
    let mut out = String::new();
    for &(s, t, m) in results {
        let _ = match m {
            Some(m) => writeln!(out, "{} {} {} {}", s + 1, t + 1, m.distance, m.hub + 1),
            None => writeln!(out, "{} {} inf -", s + 1, t + 1),
        };
    }
    out
}

pub fn write_gap_table(rows: &[GapRow]) -> String {
    let mut out = String::from("k\tn\tl_avg\ts_avg\tratio\n");
    for r in rows {
        let _ = writeln!(out, "{}\t{}\t{:.4}\t{:.4}\t{:.4}", r.k, r.n, r.l_avg_f64(), r.s_avg_f64(), r.ratio());
    }
    out
}
