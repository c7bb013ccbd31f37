//! Surgery on fans of edge-disjoint paths: rewiring pairs that are not
//! well-arranged, counting overlapping vertices in an embedding, and
//! untangling a fan into a confluent one on a subset of its edges.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::connectivity::menger_fan;
use crate::embedding::{local_sides, RotationSystem};
use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, MultiGraph, Path, VertexId};

/// Edge-disjoint paths from a common root, the j-th ending at `terminals[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFan {
    root: VertexId,
    terminals: Vec<VertexId>,
    paths: Vec<Path>,
    host: MultiGraph,
    rs: Option<RotationSystem>,
}

impl PathFan {
    /// Validates every path against `host`, the endpoints, pairwise
    /// edge-disjointness and distinct terminals.
    pub fn new(
        host: MultiGraph,
        rs: Option<RotationSystem>,
        root: VertexId,
        terminals: Vec<VertexId>,
        paths: Vec<Path>,
    ) -> Result<Self> {
        if !host.contains_vertex(root) {
            return Err(Error::UnknownVertex(root));
        }
        if terminals.len() != paths.len() {
            return Err(Error::invalid(format!(
                "{} terminals but {} paths",
                terminals.len(),
                paths.len()
            )));
        }
        let mut distinct = BTreeSet::new();
        for &t in &terminals {
            if t == root || !distinct.insert(t) {
                return Err(Error::invalid(format!("terminal {t} repeats or equals the root")));
            }
        }
        let mut used = BTreeSet::new();
        for (j, p) in paths.iter().enumerate() {
            p.validate(&host)?;
            if p.start() != root || p.end() != terminals[j] {
                return Err(Error::invalid(format!(
                    "path {j} runs {}..{}, expected {root}..{}",
                    p.start(),
                    p.end(),
                    terminals[j]
                )));
            }
            for &e in p.edges() {
                if !used.insert(e) {
                    return Err(Error::invalid(format!("edge {e} is shared by two paths")));
                }
            }
        }
        if let Some(rs) = &rs {
            if rs.edge_count() != host.edge_count() || rs.vertex_count() != host.vertex_count() {
                return Err(Error::invalid("rotation system does not match the host"));
            }
        }
        Ok(PathFan {
            root,
            terminals,
            paths,
            host,
            rs,
        })
    }

    /// Fan of `menger_fan` paths in `host`, or `None` when none exists.
    pub fn from_menger(
        host: MultiGraph,
        rs: Option<RotationSystem>,
        root: VertexId,
        terminals: Vec<VertexId>,
    ) -> Result<Option<Self>> {
        match menger_fan(&host, root, &terminals)? {
            Some(paths) => PathFan::new(host, rs, root, terminals, paths).map(Some),
            None => Ok(None),
        }
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn terminals(&self) -> &[VertexId] {
        &self.terminals
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn host(&self) -> &MultiGraph {
        &self.host
    }

    pub fn rotation_system(&self) -> Option<&RotationSystem> {
        self.rs.as_ref()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.paths.iter().flat_map(|p| p.edges().iter().copied()).collect()
    }

    fn with_paths(&self, paths: Vec<Path>) -> Result<PathFan> {
        PathFan::new(self.host.clone(), self.rs.clone(), self.root, self.terminals.clone(), paths)
    }

    /// `root v`, `terminals t1 t2 ...`, then one `path e1 e2 ...` line per
    /// path (`path -` for an empty one).
    pub fn to_text(&self) -> String {
        let mut out = format!("root {}\nterminals", self.root);
        for t in &self.terminals {
            out.push_str(&format!(" {t}"));
        }
        out.push('\n');
        for p in &self.paths {
            out.push_str(&format!("path {}\n", p.edge_list_text()));
        }
        out
    }

    pub fn parse(text: &str, host: MultiGraph, rs: Option<RotationSystem>) -> Result<Self> {
        let mut root = None;
        let mut terminals = None;
        let mut edge_lists = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let head = words.next().unwrap();
            let nums = |words: std::str::SplitWhitespace| {
                words
                    .filter(|w| *w != "-")
                    .map(|w| w.parse::<u32>().map_err(|_| Error::parse(line_no, format!("bad number {w:?}"))))
                    .collect::<Result<Vec<u32>>>()
            };
            match head {
                "root" => {
                    let list = nums(words)?;
                    if list.len() != 1 {
                        return Err(Error::parse(line_no, "`root` takes one vertex"));
                    }
                    root = Some(VertexId(list[0]));
                }
                "terminals" => terminals = Some(nums(words)?.into_iter().map(VertexId).collect::<Vec<_>>()),
                "path" => edge_lists.push((line_no, nums(words)?.into_iter().map(EdgeId).collect::<Vec<_>>())),
                _ => return Err(Error::parse(line_no, format!("unexpected fan line {line:?}"))),
            }
        }
        let root = root.ok_or_else(|| Error::parse(1, "missing `root`"))?;
        let terminals = terminals.ok_or_else(|| Error::parse(1, "missing `terminals`"))?;
        let paths = edge_lists
            .iter()
            .map(|(line_no, edges)| {
                Path::from_edges(&host, root, edges).map_err(|e| Error::parse(*line_no, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        PathFan::new(host, rs, root, terminals, paths)
    }
}

impl fmt::Display for PathFan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Overlap counts of a fan: `f[x]` is the number of path pairs for which
/// `x` is an overlapping vertex, and `g` their total.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OverlapReport {
    pub f: BTreeMap<VertexId, usize>,
    pub g: usize,
    /// `(x, i, j)` with `i < j`: x overlaps paths i and j.
    pub witnesses: Vec<(VertexId, usize, usize)>,
}

impl OverlapReport {
    pub fn is_confluent(&self) -> bool {
        self.g == 0
    }
}

/// True iff the vertices shared by `p1` and `p2` occur in the same order
/// along both. The paths must start at the same vertex.
pub fn is_well_arranged(p1: &Path, p2: &Path) -> Result<bool> {
    let (z1, z2) = common_orders(p1, p2)?;
    Ok(z1 == z2)
}

/// Shared vertices in the order of `p1` and in the order of `p2`.
fn common_orders(p1: &Path, p2: &Path) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
    if p1.start() != p2.start() {
        return Err(Error::invalid(format!(
            "paths start at {} and {}",
            p1.start(),
            p2.start()
        )));
    }
    let on1: BTreeSet<VertexId> = p1.vertices().iter().copied().collect();
    let on2: BTreeSet<VertexId> = p2.vertices().iter().copied().collect();
    let z1 = p1.vertices().iter().copied().filter(|v| on2.contains(v)).collect();
    let z2 = p2.vertices().iter().copied().filter(|v| on1.contains(v)).collect();
    Ok((z1, z2))
}

/// Exchanges segments of two edge-disjoint paths from a common root that
/// are not well-arranged. With shared vertices `v, u1, ..., uk` in the
/// order of `p1` and `v, u_{i1}, ..., u_{ik}` in the order of `p2`, and
/// `λ` the first index where they differ, returns
///
/// ```text
/// P1' = P1[v, u_{λ-1}] + P2[u_{λ-1}, u_{iλ}] + P1[u_{iλ}, v1]
/// P2' = P2[v, u_{λ-1}] + P1[u_{λ-1}, u_λ]    + P2[u_λ, v2]
/// ```
///
/// which keep the endpoints and use strictly fewer edges between them.
pub fn rewire_well_arranged(p1: &Path, p2: &Path) -> Result<(Path, Path)> {
    let (z1, z2) = common_orders(p1, p2)?;
    if p1.edge_set().intersection(&p2.edge_set()).next().is_some() {
        return Err(Error::invalid("paths share an edge"));
    }
    let lambda = z1
        .iter()
        .zip(&z2)
        .position(|(a, b)| a != b)
        .ok_or_else(|| Error::invalid("paths are already well-arranged"))?;
    let prev = z1[lambda - 1];
    let (u, w) = (z1[lambda], z2[lambda]);
    let seg = |p: &Path, a: VertexId, b: VertexId| {
        p.sub_path(a, b)
            .ok_or_else(|| Error::Internal(format!("{a} or {b} missing from a path")))
    };
    let q1 = seg(p1, p1.start(), prev)?
        .concat(&seg(p2, prev, w)?)?
        .concat(&seg(p1, w, p1.end())?)?;
    let q2 = seg(p2, p2.start(), prev)?
        .concat(&seg(p1, prev, u)?)?
        .concat(&seg(p2, u, p2.end())?)?;
    Ok((q1, q2))
}

/// Counts overlapping vertices of every path pair using the fan's
/// rotation system. A vertex counts for a pair only when it is interior
/// to both paths; it then overlaps when the second path's two edges there
/// fall on different sides of the first path's two edges.
pub fn overlap_report(fan: &PathFan) -> Result<OverlapReport> {
    let rs = fan
        .rs
        .as_ref()
        .ok_or_else(|| Error::invalid("overlap detection needs a rotation system"))?;
    let mut report = OverlapReport::default();
    let at: Vec<BTreeMap<VertexId, (EdgeId, EdgeId)>> = fan
        .paths
        .iter()
        .map(|p| {
            (1..p.vertices().len().saturating_sub(1))
                .map(|i| {
                    let (a, b) = p.edges_at(i);
                    (p.vertices()[i], (a.unwrap(), b.unwrap()))
                })
                .collect()
        })
        .collect();
    for i in 0..at.len() {
        for j in i + 1..at.len() {
            for (&x, &(a, b)) in &at[i] {
                let Some(&(c, d)) = at[j].get(&x) else { continue };
                // Two paths through x need four distinct edges; below that
                // one side is always empty.
                if fan.host.degree(x) < 4 {
                    continue;
                }
                if local_sides(rs, x, a, b, c)? != local_sides(rs, x, a, b, d)? {
                    *report.f.entry(x).or_insert(0) += 1;
                    report.g += 1;
                    report.witnesses.push((x, i, j));
                }
            }
        }
    }
    Ok(report)
}

/// True iff every pair of paths in the fan is well-arranged.
pub fn is_pairwise_well_arranged(fan: &PathFan) -> Result<bool> {
    for i in 0..fan.paths.len() {
        for j in i + 1..fan.paths.len() {
            if !is_well_arranged(&fan.paths[i], &fan.paths[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// What [`untangle_traced`] did.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UntangleTrace {
    /// g before the first exchange and after each one.
    pub g_values: Vec<usize>,
    /// Edges of the input fan dropped to reach an inclusion-minimal carrier.
    pub removed_edges: Vec<EdgeId>,
    /// Rewirings applied to pairs that were not well-arranged.
    pub rewires: usize,
}

/// A confluent, pairwise well-arranged fan with the same root and
/// terminals using a subset of the input's edges.
pub fn untangle(fan: &PathFan) -> Result<PathFan> {
    untangle_traced(fan).map(|(out, _)| out)
}

pub fn untangle_traced(fan: &PathFan) -> Result<(PathFan, UntangleTrace)> {
    let mut trace = UntangleTrace::default();
    let start = overlap_report(fan)?;
    if start.is_confluent() && is_pairwise_well_arranged(fan)? {
        trace.g_values.push(0);
        return Ok((fan.clone(), trace));
    }

    // Shrink the union of the paths to an inclusion-minimal edge set that
    // still carries a fan, scanning edges in ascending id order.
    let mut keep = fan.edge_set();
    for e in fan.edge_set() {
        keep.remove(&e);
        let sub = fan.host.edge_subgraph(&keep);
        let feasible = sub.degree(fan.root) >= fan.terminals.len()
            && menger_fan(&sub, fan.root, &fan.terminals)?.is_some();
        if feasible {
            trace.removed_edges.push(e);
        } else {
            keep.insert(e);
        }
    }
    let carrier = fan.host.edge_subgraph(&keep);
    let paths = menger_fan(&carrier, fan.root, &fan.terminals)?
        .ok_or_else(|| Error::Internal("minimal carrier lost its fan".into()))?;
    let mut current = fan.with_paths(paths)?;
    current = make_well_arranged(current, &mut trace)?;

    let mut g = overlap_report(&current)?.g;
    trace.g_values.push(g);
    while g > 0 {
        let report = overlap_report(&current)?;
        let (i, u, j) = pick_exchange(&current, &report);
        let (p1, p2) = (&current.paths[i], &current.paths[j]);
        let seg = |p: &Path, a: VertexId, b: VertexId| {
            p.sub_path(a, b)
                .ok_or_else(|| Error::Internal(format!("{a} or {b} missing from a path")))
        };
        let q1 = seg(p2, current.root, u)?.concat(&seg(p1, u, p1.end())?)?;
        let q2 = seg(p1, current.root, u)?.concat(&seg(p2, u, p2.end())?)?;
        let mut paths = current.paths.clone();
        paths[i] = q1;
        paths[j] = q2;
        let next = current
            .with_paths(paths)
            .map_err(|e| Error::Internal(format!("tail exchange at {u} broke the fan: {e}")))?;
        let next = make_well_arranged(next, &mut trace)?;
        let next_g = overlap_report(&next)?.g;
        if next_g >= g {
            return Err(Error::Internal(format!(
                "exchange at {u} did not decrease g ({g} -> {next_g})"
            )));
        }
        trace.g_values.push(next_g);
        g = next_g;
        current = next;
    }
    if !current.edge_set().is_subset(&fan.edge_set()) {
        return Err(Error::Internal("untangled fan left the input's edges".into()));
    }
    Ok((current, trace))
}

/// Lowest-index path with an overlapping vertex, its overlapping vertex
/// nearest the terminal, and the lowest-index partner overlapping it there.
fn pick_exchange(fan: &PathFan, report: &OverlapReport) -> (usize, VertexId, usize) {
    let i = report.witnesses.iter().map(|&(_, a, _)| a).min().unwrap();
    let partners = |x: VertexId| {
        report
            .witnesses
            .iter()
            .filter(move |&&(y, a, b)| y == x && (a == i || b == i))
            .map(move |&(_, a, b)| if a == i { b } else { a })
    };
    let p = &fan.paths[i];
    let u = *p
        .vertices()
        .iter()
        .rev()
        .find(|&&x| partners(x).next().is_some())
        .unwrap();
    let j = partners(u).min().unwrap();
    (i, u, j)
}

/// Rewires pairs until every pair is well-arranged. On an inclusion-minimal
/// carrier no rewiring is ever needed, since each one drops an edge.
fn make_well_arranged(mut fan: PathFan, trace: &mut UntangleTrace) -> Result<PathFan> {
    'outer: loop {
        for i in 0..fan.paths.len() {
            for j in i + 1..fan.paths.len() {
                if !is_well_arranged(&fan.paths[i], &fan.paths[j])? {
                    let (a, b) = rewire_well_arranged(&fan.paths[i], &fan.paths[j])?;
                    let mut paths = fan.paths.clone();
                    paths[i] = a;
                    paths[j] = b;
                    fan = fan.with_paths(paths)?;
                    trace.rewires += 1;
                    continue 'outer;
                }
            }
        }
        return Ok(fan);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn e(i: u32) -> EdgeId {
        EdgeId(i)
    }

    /// v=0, a=1, b=2, v1=3, v2=4; edges v-a, a-b, b-v1, v-b, b-a, a-v2.
    fn doubled_ab() -> (MultiGraph, Path, Path) {
        let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 2), (2, 1), (1, 4)]).unwrap();
        let p1 = Path::from_edges(&g, v(0), &[e(0), e(1), e(2)]).unwrap();
        let p2 = Path::from_edges(&g, v(0), &[e(3), e(4), e(5)]).unwrap();
        (g, p1, p2)
    }

    /// x=0 with neighbours a=1, b=2, c=3, d=4 and root 5 joined to a and b.
    /// Rotation at x is a, b, c, d so the paths 5-a-x-c and 5-b-x-d cross.
    fn crossing() -> (MultiGraph, RotationSystem) {
        let g = MultiGraph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2)]).unwrap();
        let rot = BTreeMap::from([
            (v(0), vec![e(0), e(1), e(2), e(3)]),
            (v(1), vec![e(0), e(4)]),
            (v(2), vec![e(1), e(5)]),
            (v(3), vec![e(2)]),
            (v(4), vec![e(3)]),
            (v(5), vec![e(4), e(5)]),
        ]);
        let rs = RotationSystem::new(&g, rot).unwrap();
        assert!(rs.is_spherical());
        (g, rs)
    }

    fn crossing_fan() -> PathFan {
        let (g, rs) = crossing();
        let p1 = Path::from_edges(&g, v(5), &[e(4), e(0), e(2)]).unwrap();
        let p2 = Path::from_edges(&g, v(5), &[e(5), e(1), e(3)]).unwrap();
        PathFan::new(g, Some(rs), v(5), vec![v(3), v(4)], vec![p1, p2]).unwrap()
    }

    #[test]
    fn well_arranged_basics() {
        let (g, p1, p2) = doubled_ab();
        assert!(!is_well_arranged(&p1, &p2).unwrap());
        let star = MultiGraph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let a = Path::from_edges(&star, v(0), &[e(0)]).unwrap();
        let b = Path::from_edges(&star, v(0), &[e(1)]).unwrap();
        assert!(is_well_arranged(&a, &b).unwrap());
        let prefix = p1.sub_path(v(0), v(2)).unwrap();
        assert!(is_well_arranged(&p1, &prefix).unwrap());
        assert!(is_well_arranged(&p1, &p2.reversed()).is_err());
        let _ = g;
    }

    #[test]
    fn rewire_on_doubled_edge() {
        let (g, p1, p2) = doubled_ab();
        let (q1, q2) = rewire_well_arranged(&p1, &p2).unwrap();
        assert_eq!(q1.vertices(), &[v(0), v(2), v(3)]);
        assert_eq!(q2.vertices(), &[v(0), v(1), v(4)]);
        q1.validate(&g).unwrap();
        q2.validate(&g).unwrap();
        let before: BTreeSet<_> = p1.edge_set().union(&p2.edge_set()).copied().collect();
        let after: BTreeSet<_> = q1.edge_set().union(&q2.edge_set()).copied().collect();
        assert_eq!((before.len(), after.len()), (6, 4));
        assert!(after.is_subset(&before));
        assert!(q1.edge_set().is_disjoint(&q2.edge_set()));
        assert!(is_well_arranged(&q1, &q2).unwrap());
        assert!(rewire_well_arranged(&q1, &q2).is_err());
    }

    #[test]
    fn transversal_crossing_counts_once() {
        let fan = crossing_fan();
        let r = overlap_report(&fan).unwrap();
        assert_eq!(r.g, 1);
        assert_eq!(r.witnesses, vec![(v(0), 0, 1)]);
        assert_eq!(r.f[&v(0)], 1);
    }

    #[test]
    fn tangential_touch_is_not_overlapping() {
        let (g, rs) = crossing();
        // 5-a-x-d and 5-b-x-c: the pairs (a, d) and (b, c) do not interleave.
        let p1 = Path::from_edges(&g, v(5), &[e(4), e(0), e(3)]).unwrap();
        let p2 = Path::from_edges(&g, v(5), &[e(5), e(1), e(2)]).unwrap();
        let fan = PathFan::new(g, Some(rs), v(5), vec![v(4), v(3)], vec![p1, p2]).unwrap();
        assert_eq!(overlap_report(&fan).unwrap().g, 0);
        assert_eq!(untangle(&fan).unwrap(), fan);
    }

    #[test]
    fn star_fan_is_confluent() {
        let g = crate::multigraph::families::star(4);
        let rs = crate::embedding::embed_planar(&g).unwrap().unwrap();
        let fan = PathFan::from_menger(g, Some(rs), v(0), vec![v(1), v(2), v(3), v(4)])
            .unwrap()
            .unwrap();
        assert_eq!(overlap_report(&fan).unwrap(), OverlapReport::default());
    }

    #[test]
    fn missing_rotation_system_is_an_error() {
        let fan = crossing_fan();
        let bare = PathFan::new(fan.host.clone(), None, fan.root, fan.terminals.clone(), fan.paths.clone()).unwrap();
        assert!(overlap_report(&bare).is_err());
    }

    /// All vertex-simple paths from `s` to `t` as edge lists.
    fn all_paths(g: &MultiGraph, s: VertexId, t: VertexId) -> Vec<Vec<EdgeId>> {
        fn go(g: &MultiGraph, at: VertexId, t: VertexId, seen: &mut Vec<VertexId>, es: &mut Vec<EdgeId>, out: &mut Vec<Vec<EdgeId>>) {
            if at == t {
                out.push(es.clone());
                return;
            }
            for e in g.incident(at).collect::<Vec<_>>() {
                let w = g.opposite(e, at).unwrap();
                if !seen.contains(&w) {
                    seen.push(w);
                    es.push(e);
                    go(g, w, t, seen, es, out);
                    es.pop();
                    seen.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(g, s, t, &mut vec![s], &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn untangle_crossing_matches_exhaustive_search() {
        let fan = crossing_fan();
        let (out, trace) = untangle_traced(&fan).unwrap();
        assert_eq!(trace.g_values, vec![1, 0]);
        assert_eq!(out.terminals(), fan.terminals());
        assert!(out.edge_set().is_subset(&fan.edge_set()));
        assert_eq!(overlap_report(&out).unwrap().g, 0);

        // Oracle: every confluent fan on the input's edges.
        let sub = fan.host.edge_subgraph(&fan.edge_set());
        let mut confluent = Vec::new();
        for a in all_paths(&sub, v(5), v(3)) {
            for b in all_paths(&sub, v(5), v(4)) {
                let (pa, pb) = (Path::from_edges(&sub, v(5), &a).unwrap(), Path::from_edges(&sub, v(5), &b).unwrap());
                let Ok(cand) = fan.with_paths(vec![pa, pb]) else { continue };
                if overlap_report(&cand).unwrap().g == 0 && is_pairwise_well_arranged(&cand).unwrap() {
                    confluent.push(cand);
                }
            }
        }
        assert_eq!(confluent.len(), 1);
        assert_eq!(out, confluent[0]);
        assert_eq!(out.paths()[0].vertices(), &[v(5), v(2), v(0), v(3)]);
    }

    #[test]
    fn fan_text_round_trip() {
        let fan = crossing_fan();
        let back = PathFan::parse(&fan.to_text(), fan.host.clone(), fan.rs.clone()).unwrap();
        assert_eq!(back, fan);
        assert!(matches!(
            PathFan::parse("root 5\nterminals 3 4\npath 4 0 2\npath 4 1\n", fan.host.clone(), None),
            Err(Error::Parse { line: 4, .. })
        ));
    }
}
