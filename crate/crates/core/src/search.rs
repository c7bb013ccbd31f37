//! Exhaustive search for small simple graphs by branch-width, maximum
//! degree and Kuratowski-immersion freeness, with a versioned text report
//! that can be re-verified from scratch.

use std::collections::BTreeMap;
use std::fmt;

use crate::branchwidth::{branchwidth_exact_bounded, branchwidth_upper};
use crate::embedding::is_planar;
use crate::error::{Error, Guard, Result};
use crate::generate::{connected_graphs, next_level};
use crate::multigraph::families::complete;
use crate::multigraph::{canonical_form, MultiGraph, VertexId};
use crate::relations::{contains_minor, kuratowski_immersion, ImmersionModel, Kuratowski, Mode};

pub const REPORT_HEADER: &str = "immersion-kit-search v1";

/// Default bound on `max_n`.
pub const SEARCH_ORDER_GUARD: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchQuery {
    pub max_n: usize,
    pub bw_at_least: usize,
    pub non_subcubic: bool,
    pub immersion_free_only: bool,
}

/// One graph found by the search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// The graph in canonical labelling.
    pub graph: MultiGraph,
    pub branchwidth: usize,
    pub max_degree: usize,
    pub immersion_free: bool,
    /// A Kuratowski immersion when the graph is not immersion-free.
    pub witness: Option<(Kuratowski, ImmersionModel)>,
}

impl SearchResult {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Recomputes every attribute from the graph alone.
    pub fn reverify(&self) -> Result<()> {
        let g = &self.graph;
        if !g.is_simple() || !g.is_connected() {
            return Err(Error::invalid("graph is not simple and connected"));
        }
        if g.max_degree() != self.max_degree {
            return Err(Error::invalid(format!(
                "maximum degree is {}, recorded {}",
                g.max_degree(),
                self.max_degree
            )));
        }
        let bw = exact_branchwidth(g)?;
        if bw != self.branchwidth {
            return Err(Error::invalid(format!("branch-width is {bw}, recorded {}", self.branchwidth)));
        }
        let found = kuratowski_immersion(g, Guard::Off)?;
        if found.is_none() != self.immersion_free {
            return Err(Error::invalid("immersion-freeness does not match"));
        }
        if let Some((k, model)) = &self.witness {
            model.validate(g, &k.graph(), Mode::Weak)?;
        }
        Ok(())
    }
}

/// Exact branch-width, using a K4 minor as a proven lower bound of 3 so
/// the search can stop at the first width-3 decomposition.
pub fn exact_branchwidth(g: &MultiGraph) -> Result<usize> {
    let (upper, _) = branchwidth_upper(g);
    if upper <= 2 {
        return Ok(upper);
    }
    let lower = if contains_minor(g, &complete(4))?.is_some() { 3 } else { 0 };
    Ok(branchwidth_exact_bounded(g, lower, Guard::Off)?.0)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchReport {
    pub query: Option<SearchQuery>,
    /// Graphs examined per order.
    pub examined: BTreeMap<usize, usize>,
    pub results: Vec<SearchResult>,
}

/// Runs the search. `max_n` above [`SEARCH_ORDER_GUARD`] needs a guard
/// override.
pub fn search(query: SearchQuery, guard: Guard) -> Result<SearchReport> {
    guard.check("search order", query.max_n, SEARCH_ORDER_GUARD)?;
    let mut report = SearchReport {
        query: Some(query),
        ..Default::default()
    };
    let mut level = Vec::new();
    for n in 1..=query.max_n {
        level = if n == 1 { connected_graphs(1) } else { next_level(&level) };
        report.examined.insert(n, level.len());
        for g in &level {
            if let Some(r) = examine(g, query)? {
                report.results.push(r);
            }
        }
    }
    Ok(report)
}

fn examine(g: &MultiGraph, q: SearchQuery) -> Result<Option<SearchResult>> {
    if q.non_subcubic && g.max_degree() < 4 {
        return Ok(None);
    }
    // Immersion-free graphs have no Kuratowski subdivision, so are planar.
    if q.immersion_free_only && !is_planar(g) {
        return Ok(None);
    }
    if q.bw_at_least > 0 && branchwidth_upper(g).0 < q.bw_at_least {
        return Ok(None);
    }
    let witness = kuratowski_immersion(g, Guard::Off)?;
    if q.immersion_free_only && witness.is_some() {
        return Ok(None);
    }
    let bw = exact_branchwidth(g)?;
    if bw < q.bw_at_least {
        return Ok(None);
    }
    Ok(Some(SearchResult {
        graph: g.clone(),
        branchwidth: bw,
        max_degree: g.max_degree(),
        immersion_free: witness.is_none(),
        witness,
    }))
}

impl SearchReport {
    /// Line-oriented text. Each result is one `graph` line; witnesses
    /// follow as indented `witness` blocks.
    pub fn to_text(&self) -> String {
        let mut out = format!("{REPORT_HEADER}\n");
        if let Some(q) = self.query {
            out.push_str(&format!(
                "query max_n={} bw_at_least={} non_subcubic={} immersion_free_only={}\n",
                q.max_n, q.bw_at_least, q.non_subcubic, q.immersion_free_only
            ));
        }
        for (n, count) in &self.examined {
            out.push_str(&format!("examined n={n} graphs={count}\n"));
        }
        out.push_str(&format!("results {}\n", self.results.len()));
        for r in &self.results {
            let edges: Vec<String> = r.graph.edges().map(|(_, u, v)| format!("{u}-{v}")).collect();
            out.push_str(&format!(
                "graph n={} m={} bw={} maxdeg={} free={} edges={}\n",
                r.vertex_count(),
                r.graph.edge_count(),
                r.branchwidth,
                r.max_degree,
                if r.immersion_free { "yes" } else { "no" },
                edges.join(",")
            ));
            if let Some((k, model)) = &r.witness {
                out.push_str(&format!("witness {k}\n"));
                for line in model.to_text().lines() {
                    out.push_str(&format!("  {line}\n"));
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<SearchReport> {
        let mut lines = text.lines().enumerate().peekable();
        match lines.next() {
            Some((_, l)) if l.trim() == REPORT_HEADER => {}
            _ => return Err(Error::parse(1, format!("expected `{REPORT_HEADER}`"))),
        }
        let mut report = SearchReport::default();
        while let Some((i, raw)) = lines.next() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(' ').unwrap_or((line, ""));
            let fields = key_values(rest);
            let get = |k: &str| {
                fields
                    .get(k)
                    .copied()
                    .ok_or_else(|| Error::parse(line_no, format!("missing `{k}`")))
            };
            let num = |k: &str| -> Result<usize> {
                get(k)?
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("`{k}` is not a number")))
            };
            let flag = |k: &str| -> Result<bool> {
                match get(k)? {
                    "true" | "yes" => Ok(true),
                    "false" | "no" => Ok(false),
                    other => Err(Error::parse(line_no, format!("`{k}` has bad value {other:?}"))),
                }
            };
            match head {
                "query" => {
                    report.query = Some(SearchQuery {
                        max_n: num("max_n")?,
                        bw_at_least: num("bw_at_least")?,
                        non_subcubic: flag("non_subcubic")?,
                        immersion_free_only: flag("immersion_free_only")?,
                    })
                }
                "examined" => {
                    report.examined.insert(num("n")?, num("graphs")?);
                }
                "results" => {}
                "graph" => {
                    let n = num("n")?;
                    let mut g = MultiGraph::with_vertices(n);
                    let edges = get("edges")?;
                    for pair in edges.split(',').filter(|s| !s.is_empty()) {
                        let (u, v) = pair
                            .split_once('-')
                            .ok_or_else(|| Error::parse(line_no, format!("bad edge {pair:?}")))?;
                        let id = |s: &str| {
                            s.parse::<u32>()
                                .map(VertexId)
                                .map_err(|_| Error::parse(line_no, format!("bad vertex {s:?}")))
                        };
                        g.add_edge(id(u)?, id(v)?).map_err(|e| Error::parse(line_no, e.to_string()))?;
                    }
                    if g.edge_count() != num("m")? {
                        return Err(Error::parse(line_no, "edge count does not match `m`"));
                    }
                    report.results.push(SearchResult {
                        graph: g,
                        branchwidth: num("bw")?,
                        max_degree: num("maxdeg")?,
                        immersion_free: flag("free")?,
                        witness: None,
                    });
                }
                "witness" => {
                    let k = match rest.trim() {
                        "K5" => Kuratowski::K5,
                        "K3,3" => Kuratowski::K33,
                        other => return Err(Error::parse(line_no, format!("unknown pattern {other:?}"))),
                    };
                    let mut body = String::new();
                    while let Some((_, l)) = lines.next_if(|(_, l)| l.starts_with("  ")) {
                        body.push_str(l.trim());
                        body.push('\n');
                    }
                    let r = report
                        .results
                        .last_mut()
                        .ok_or_else(|| Error::parse(line_no, "witness before any graph"))?;
                    let model = ImmersionModel::parse(&body, &r.graph, &k.graph())
                        .map_err(|e| Error::parse(line_no, e.to_string()))?;
                    r.witness = Some((k, model));
                }
                _ => return Err(Error::parse(line_no, format!("unexpected report line {line:?}"))),
            }
        }
        Ok(report)
    }

    /// Re-verifies every result; returns the index and error of the first
    /// failure.
    pub fn reverify(&self) -> std::result::Result<(), (usize, Error)> {
        for (i, r) in self.results.iter().enumerate() {
            r.reverify().map_err(|e| (i, e))?;
        }
        Ok(())
    }

    /// Canonical forms of the results, for comparing reports.
    pub fn forms(&self) -> Vec<crate::multigraph::CanonicalForm> {
        self.results.iter().map(|r| canonical_form(&r.graph)).collect()
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `key=value` tokens; other tokens (such as a bare count) are skipped.
fn key_values(rest: &str) -> BTreeMap<&str, &str> {
    rest.split_whitespace().filter_map(|kv| kv.split_once('=')).collect()
}
