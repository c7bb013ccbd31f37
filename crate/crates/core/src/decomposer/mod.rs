//! Recursive splitting along minimal internal edge cuts of size at most 3,
//! leaf certification, exact recomposition and an independent checker.

mod cert;

use std::collections::BTreeMap;
use std::fmt;

use crate::branchwidth::{branchwidth_exact_guarded, branchwidth_upper, width_of, BranchDecomposition, EXACT_EDGE_GUARD};
use crate::connectivity::{components, edge_sum, find_internal_cut, split_with_ids, EdgeCut, SplitHeader};
use crate::embedding::is_planar;
use crate::error::{Guard, Result};
use crate::multigraph::{MultiGraph, VertexId};

pub use cert::{parse_certificate, write_certificate, CERT_HEADER};

/// Largest branch-width a leaf certificate may claim.
pub const LEAF_WIDTH_BOUND: usize = 10;

/// Largest cut the engine splits along.
pub const MAX_CUT: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Certainty {
    /// The bound is the branch-width.
    Exact,
    /// The bound is the width of a heuristic decomposition.
    Heuristic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    PlanarSubcubic,
    BranchwidthAtMost {
        bound: usize,
        decomposition: BranchDecomposition,
        certainty: Certainty,
    },
    Uncertified,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        !matches!(self, Certificate::Uncertified)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf {
        graph: MultiGraph,
        certificate: Certificate,
    },
    /// `left` decomposes the piece holding side A, `right` the piece
    /// holding side B.
    Split {
        split: SplitHeader,
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    pub fn leaves(&self) -> Vec<(&MultiGraph, &Certificate)> {
        let mut out = Vec::new();
        self.visit_leaves(&mut |g, c| out.push((g, c)));
        out
    }

    fn visit_leaves<'a>(&'a self, f: &mut dyn FnMut(&'a MultiGraph, &'a Certificate)) {
        match self {
            DecompositionTree::Leaf { graph, certificate } => f(graph, certificate),
            DecompositionTree::Split { left, right, .. } => {
                left.visit_leaves(f);
                right.visit_leaves(f);
            }
        }
    }

    pub fn split_count(&self) -> usize {
        match self {
            DecompositionTree::Leaf { .. } => 0,
            DecompositionTree::Split { left, right, .. } => 1 + left.split_count() + right.split_count(),
        }
    }

    pub fn is_fully_certified(&self) -> bool {
        self.leaves().iter().all(|(_, c)| c.is_certified())
    }
}

/// Options for [`decompose_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DecomposeOptions {
    /// Guard on leaf size for exact branch-width; larger leaves fall back to
    /// the heuristic bound.
    pub exact_guard: Guard,
}

/// One tree per connected component, in order of smallest vertex id.
pub fn decompose(g: &MultiGraph) -> Result<Vec<DecompositionTree>> {
    decompose_with(g, DecomposeOptions::default())
}

pub fn decompose_with(g: &MultiGraph, options: DecomposeOptions) -> Result<Vec<DecompositionTree>> {
    let mut next = g.next_vertex_id().0;
    components(g)
        .iter()
        .map(|c| decompose_component(c, &mut next, options))
        .collect()
}

fn decompose_component(g: &MultiGraph, next: &mut u32, options: DecomposeOptions) -> Result<DecompositionTree> {
    match find_internal_cut(g, MAX_CUT)? {
        None => Ok(DecompositionTree::Leaf {
            graph: g.clone(),
            certificate: certify_leaf(g, options)?,
        }),
        Some(cut) => {
            let (a, b) = (VertexId(*next), VertexId(*next + 1));
            *next += 2;
            let record = split_with_ids(g, &cut, a, b)?;
            let left = decompose_component(&record.component_a, next, options)?;
            let right = decompose_component(&record.component_b, next, options)?;
            Ok(DecompositionTree::Split {
                split: SplitHeader {
                    cut_edges: record.cut.edges.clone(),
                    side_a: record.cut.side_a.clone(),
                    side_b: record.cut.side_b.clone(),
                    new_vertex_a: a,
                    new_vertex_b: b,
                    pairing: record.pairing,
                },
                left: Box::new(left),
                right: Box::new(right),
            })
        }
    }
}

/// Planar sub-cubic first; then exact branch-width when the leaf is within
/// the exact guard, else the heuristic bound; else uncertified.
pub fn certify_leaf(g: &MultiGraph, options: DecomposeOptions) -> Result<Certificate> {
    if g.is_subcubic() && is_planar(g) {
        return Ok(Certificate::PlanarSubcubic);
    }
    let exact_allowed = options
        .exact_guard
        .check("exact leaf branch-width edges", g.edge_count(), EXACT_EDGE_GUARD)
        .is_ok()
        && g.edge_count() <= 64;
    if exact_allowed {
        let (w, bd) = branchwidth_exact_guarded(g, Guard::Off)?;
        return Ok(if w <= LEAF_WIDTH_BOUND {
            Certificate::BranchwidthAtMost {
                bound: w,
                decomposition: bd,
                certainty: Certainty::Exact,
            }
        } else {
            Certificate::Uncertified
        });
    }
    let (w, bd) = branchwidth_upper(g);
    Ok(if w <= LEAF_WIDTH_BOUND {
        Certificate::BranchwidthAtMost {
            bound: w,
            decomposition: bd,
            certainty: Certainty::Heuristic,
        }
    } else {
        Certificate::Uncertified
    })
}

/// Folds the edge sums back up the tree.
pub fn recompose(t: &DecompositionTree) -> Result<MultiGraph> {
    match t {
        DecompositionTree::Leaf { graph, .. } => Ok(graph.clone()),
        DecompositionTree::Split { split, left, right } => {
            let a = recompose(left)?;
            let b = recompose(right)?;
            edge_sum(&a, split.new_vertex_a, &b, split.new_vertex_b, &split.pairing)
        }
    }
}

/// Recomposes every tree and glues the components back together.
pub fn recompose_all(trees: &[DecompositionTree]) -> Result<MultiGraph> {
    let mut out = MultiGraph::new();
    for t in trees {
        let c = recompose(t)?;
        for v in c.vertices() {
            out.add_vertex_with_id(v)?;
        }
        for (e, u, v) in c.edges() {
            out.add_edge_with_id(e, u, v)?;
        }
    }
    Ok(out)
}

/// Leaf counts by certificate class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LeafClass {
    PlanarSubcubic,
    Width(usize, Certainty),
    Uncertified,
}

impl fmt::Display for LeafClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeafClass::PlanarSubcubic => write!(f, "planar-subcubic"),
            LeafClass::Width(w, Certainty::Exact) => write!(f, "bw = {w}"),
            LeafClass::Width(w, Certainty::Heuristic) => write!(f, "bw <= {w}"),
            LeafClass::Uncertified => write!(f, "uncertified"),
        }
    }
}

pub fn leaf_histogram(trees: &[DecompositionTree]) -> BTreeMap<LeafClass, usize> {
    let mut out = BTreeMap::new();
    for t in trees {
        for (_, c) in t.leaves() {
            let class = match c {
                Certificate::PlanarSubcubic => LeafClass::PlanarSubcubic,
                Certificate::BranchwidthAtMost { bound, certainty, .. } => LeafClass::Width(*bound, *certainty),
                Certificate::Uncertified => LeafClass::Uncertified,
            };
            *out.entry(class).or_insert(0) += 1;
        }
    }
    out
}

/// Result of one check at one node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeVerdict {
    /// `c<i>` for the root of component i, then `.L` / `.R` per step down.
    pub node: String,
    pub check: &'static str,
    pub outcome: std::result::Result<(), String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub verdicts: Vec<NodeVerdict>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.outcome.is_ok())
    }

    pub fn failures(&self) -> impl Iterator<Item = &NodeVerdict> {
        self.verdicts.iter().filter(|v| v.outcome.is_err())
    }

    fn record(&mut self, node: &str, check: &'static str, outcome: std::result::Result<(), String>) {
        self.verdicts.push(NodeVerdict {
            node: node.to_string(),
            check,
            outcome,
        });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            match &v.outcome {
                Ok(()) => writeln!(f, "{} {}: ok", v.node, v.check)?,
                Err(msg) => writeln!(f, "{} {}: FAIL {msg}", v.node, v.check)?,
            }
        }
        Ok(())
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Re-checks everything from scratch, top down. Each node is compared
/// against the graph it should stand for, which is derived from `g` by
/// re-splitting along the recorded cuts, so a corrupted node is reported
/// where the corruption is.
pub fn verify_certificate(g: &MultiGraph, trees: &[DecompositionTree]) -> VerificationReport {
    let mut report = VerificationReport::default();
    let comps = components(g);
    report.record(
        "root",
        "component count",
        check(comps.len() == trees.len(), || {
            format!("graph has {} components, certificate has {} trees", comps.len(), trees.len())
        }),
    );
    for (i, (c, t)) in comps.iter().zip(trees).enumerate() {
        verify_node(c, t, &format!("c{i}"), &mut report);
    }
    let glued = recompose_all(trees);
    report.record(
        "root",
        "recompose equals input",
        match glued {
            Ok(h) => check(h == *g, || "recomposed graph differs from the input".into()),
            Err(e) => Err(e.to_string()),
        },
    );
    report
}

fn verify_node(expected: &MultiGraph, t: &DecompositionTree, name: &str, report: &mut VerificationReport) {
    match t {
        DecompositionTree::Leaf { graph, certificate } => {
            report.record(
                name,
                "leaf graph",
                check(graph == expected, || "leaf differs from the graph at this node".into()),
            );
            report.record(
                name,
                "no internal cut",
                match find_internal_cut(graph, MAX_CUT) {
                    Ok(None) => Ok(()),
                    Ok(Some(cut)) => Err(format!("leaf has an internal {}-edge cut", cut.len())),
                    Err(e) => Err(e.to_string()),
                },
            );
            report.record(name, "certificate", verify_leaf_certificate(graph, certificate));
        }
        DecompositionTree::Split { split, left, right } => {
            let cut = EdgeCut::analyze(expected, &split.cut_edges);
            let cut_ok = match &cut {
                Ok(c) => check(c.minimal && c.internal && c.len() <= MAX_CUT, || {
                    format!(
                        "cut of size {} is minimal={} internal={}",
                        c.len(),
                        c.minimal,
                        c.internal
                    )
                })
                .and_then(|()| {
                    check(c.side_a == split.side_a && c.side_b == split.side_b, || {
                        "recorded sides do not match the cut".into()
                    })
                }),
                Err(e) => Err(e.to_string()),
            };
            let ok = cut_ok.is_ok();
            report.record(name, "cut", cut_ok);
            if !ok {
                return;
            }
            let record = match split_with_ids(expected, cut.as_ref().unwrap(), split.new_vertex_a, split.new_vertex_b) {
                Ok(r) => r,
                Err(e) => {
                    report.record(name, "split", Err(e.to_string()));
                    return;
                }
            };
            let summed = edge_sum(
                &record.component_a,
                split.new_vertex_a,
                &record.component_b,
                split.new_vertex_b,
                &split.pairing,
            );
            report.record(
                name,
                "edge sum restores node",
                match summed {
                    Ok(h) => check(h == *expected, || "the recorded pairing does not restore the graph".into()),
                    Err(e) => Err(e.to_string()),
                },
            );
            verify_node(&record.component_a, left, &format!("{name}.L"), report);
            verify_node(&record.component_b, right, &format!("{name}.R"), report);
        }
    }
}

fn verify_leaf_certificate(g: &MultiGraph, c: &Certificate) -> std::result::Result<(), String> {
    match c {
        Certificate::PlanarSubcubic => {
            check(g.is_subcubic(), || format!("maximum degree {} exceeds 3", g.max_degree()))?;
            check(is_planar(g), || "leaf is not planar".into())
        }
        Certificate::BranchwidthAtMost {
            bound, decomposition, ..
        } => {
            check(*bound <= LEAF_WIDTH_BOUND, || format!("bound {bound} exceeds {LEAF_WIDTH_BOUND}"))?;
            let w = width_of(g, decomposition).map_err(|e| e.to_string())?;
            check(w <= *bound, || format!("decomposition has width {w}, claimed {bound}"))
        }
        Certificate::Uncertified => Err("leaf is uncertified".into()),
    }
}
