//! Containment tests: weak and strong immersion, topological minor, minor,
//! and an independent lift-closure oracle.

mod lifts;
mod minor;
mod route;
mod subgraph;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Guard, Result};
use crate::multigraph::families::{complete, complete_bipartite};
use crate::multigraph::{EdgeId, MultiGraph, Path, VertexId};

pub use lifts::{oracle_immersion_by_lifts, oracle_immersion_by_lifts_guarded, LIFT_ORACLE_EDGE_GUARD};
pub use minor::{contains_minor, contains_minor_guarded, MinorModel, MINOR_EDGE_GUARD};
pub use subgraph::find_subgraph;

/// Default size guards for model search: host edges and pattern vertices.
pub const SEARCH_EDGE_GUARD: usize = 60;
pub const SEARCH_PATTERN_GUARD: usize = 6;

/// Which containment relation a model witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Edge-disjoint paths.
    Weak,
    /// Edge-disjoint paths whose interiors avoid the image of V(H).
    Strong,
    /// Internally vertex-disjoint paths (a subdivision of H).
    Topological,
}

/// An injective vertex map V(H) → V(G) with one G-path per H-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImmersionModel {
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    /// Path for each H-edge `{u, w}` (u ≤ w), oriented from `f(u)` to `f(w)`.
    pub branch_paths: BTreeMap<EdgeId, Path>,
}

impl ImmersionModel {
    /// Re-checks every model condition for `mode` from scratch.
    pub fn validate(&self, g: &MultiGraph, h: &MultiGraph, mode: Mode) -> Result<()> {
        let keys: BTreeSet<VertexId> = self.vertex_map.keys().copied().collect();
        if keys != h.vertices().collect() {
            return Err(Error::invalid("vertex map domain differs from V(H)"));
        }
        let image: BTreeSet<VertexId> = self.vertex_map.values().copied().collect();
        if image.len() != self.vertex_map.len() {
            return Err(Error::invalid("vertex map is not injective"));
        }
        if let Some(v) = image.iter().find(|v| !g.contains_vertex(**v)) {
            return Err(Error::UnknownVertex(*v));
        }
        let edge_keys: BTreeSet<EdgeId> = self.branch_paths.keys().copied().collect();
        if edge_keys != h.edge_ids().collect() {
            return Err(Error::invalid("branch paths do not cover E(H) exactly"));
        }
        let mut used_edges = BTreeSet::new();
        let mut used_interior = BTreeSet::new();
        for (&he, path) in &self.branch_paths {
            path.validate(g)?;
            let (u, w) = h.endpoints(he).unwrap();
            let (fu, fw) = (self.vertex_map[&u], self.vertex_map[&w]);
            if (path.start(), path.end()) != (fu, fw) {
                return Err(Error::invalid(format!(
                    "path for H-edge {he} runs {}..{} instead of {fu}..{fw}",
                    path.start(),
                    path.end()
                )));
            }
            for &e in path.edges() {
                if !used_edges.insert(e) {
                    return Err(Error::invalid(format!("edge {e} is used by two branch paths")));
                }
            }
            for &x in path.interior() {
                if mode != Mode::Weak && image.contains(&x) {
                    return Err(Error::invalid(format!("path for H-edge {he} passes through branch vertex {x}")));
                }
                if mode == Mode::Topological && !used_interior.insert(x) {
                    return Err(Error::invalid(format!("vertex {x} is interior to two branch paths")));
                }
            }
        }
        Ok(())
    }

    /// `h -> g` lines, then `h_edge: g_edge ...` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (h, g) in &self.vertex_map {
            out.push_str(&format!("{h} -> {g}\n"));
        }
        for (e, p) in &self.branch_paths {
            out.push_str(&format!("{e}: {}\n", p.edge_list_text()));
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output; paths are rebuilt in `g`
    /// from the image of the lower endpoint of each H-edge.
    pub fn parse(text: &str, g: &MultiGraph, h: &MultiGraph) -> Result<Self> {
        let mut vertex_map = BTreeMap::new();
        let mut raw_paths: Vec<(usize, EdgeId, Vec<EdgeId>)> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let num = |s: &str| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::parse(line_no, format!("bad id {:?}", s.trim())))
            };
            if let Some((a, b)) = line.split_once("->") {
                if vertex_map.insert(VertexId(num(a)?), VertexId(num(b)?)).is_some() {
                    return Err(Error::parse(line_no, "pattern vertex mapped twice"));
                }
            } else if let Some((a, b)) = line.split_once(':') {
                let edges = if b.trim() == "-" {
                    Vec::new()
                } else {
                    b.split_whitespace().map(|s| num(s).map(EdgeId)).collect::<Result<Vec<_>>>()?
                };
                raw_paths.push((line_no, EdgeId(num(a)?), edges));
            } else {
                return Err(Error::parse(line_no, "expected `h -> g` or `edge: path`"));
            }
        }
        let mut branch_paths = BTreeMap::new();
        for (line_no, he, edges) in raw_paths {
            let (u, _) = h
                .endpoints(he)
                .ok_or_else(|| Error::parse(line_no, format!("unknown pattern edge {he}")))?;
            let start = *vertex_map
                .get(&u)
                .ok_or_else(|| Error::parse(line_no, format!("pattern vertex {u} is unmapped")))?;
            let path = Path::from_edges(g, start, &edges).map_err(|e| Error::parse(line_no, e.to_string()))?;
            branch_paths.insert(he, path);
        }
        Ok(ImmersionModel { vertex_map, branch_paths })
    }
}

impl fmt::Display for ImmersionModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A weak (or, with `strong`, strong) immersion model of `h` in `g`.
pub fn contains_immersion(g: &MultiGraph, h: &MultiGraph, strong: bool) -> Result<Option<ImmersionModel>> {
    let mode = if strong { Mode::Strong } else { Mode::Weak };
    find_model(g, h, mode, Guard::Default)
}

/// A subdivision of `h` inside `g`, as a model with internally disjoint paths.
pub fn contains_topological_minor(g: &MultiGraph, h: &MultiGraph) -> Result<Option<ImmersionModel>> {
    find_model(g, h, Mode::Topological, Guard::Default)
}

/// Model search for any [`Mode`]. The guard bounds |E(G)| (default
/// [`SEARCH_EDGE_GUARD`]); |V(H)| is bounded by [`SEARCH_PATTERN_GUARD`]
/// unless the guard is [`Guard::Off`].
pub fn find_model(g: &MultiGraph, h: &MultiGraph, mode: Mode, guard: Guard) -> Result<Option<ImmersionModel>> {
    guard.check("host edges", g.edge_count(), SEARCH_EDGE_GUARD)?;
    if guard != Guard::Off {
        crate::error::guard("pattern vertices", h.vertex_count(), Some(SEARCH_PATTERN_GUARD))?;
    }
    let model = route::search(g, h, mode)?;
    if let Some(m) = &model {
        m.validate(g, h, mode)
            .map_err(|e| Error::Internal(format!("search produced an invalid model: {e}")))?;
    }
    Ok(model)
}

/// K5 or K3,3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kuratowski {
    K5,
    K33,
}

impl Kuratowski {
    pub fn graph(self) -> MultiGraph {
        match self {
            Kuratowski::K5 => complete(5),
            Kuratowski::K33 => complete_bipartite(3, 3),
        }
    }
}

impl fmt::Display for Kuratowski {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kuratowski::K5 => "K5",
            Kuratowski::K33 => "K3,3",
        })
    }
}

/// `Ok(None)` when `g` immerses neither K5 nor K3,3 (weakly); otherwise the
/// first pattern found and its model.
pub fn kuratowski_immersion(g: &MultiGraph, guard: Guard) -> Result<Option<(Kuratowski, ImmersionModel)>> {
    for k in [Kuratowski::K5, Kuratowski::K33] {
        if let Some(m) = find_model(g, &k.graph(), Mode::Weak, guard)? {
            return Ok(Some((k, m)));
        }
    }
    Ok(None)
}

/// True iff neither K5 nor K3,3 is weakly immersed in `g`; on false, the
/// witness is returned alongside.
pub fn is_kuratowski_immersion_free(g: &MultiGraph) -> Result<(bool, Option<(Kuratowski, ImmersionModel)>)> {
    let w = kuratowski_immersion(g, Guard::Default)?;
    Ok((w.is_none(), w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::families::*;

    #[test]
    fn k5_in_k5_and_not_in_k4() {
        let m = contains_immersion(&complete(5), &complete(5), false).unwrap().unwrap();
        assert!(m.branch_paths.values().all(|p| p.len() == 1));
        assert!(contains_immersion(&complete(4), &complete(5), false).unwrap().is_none());
    }

    #[test]
    fn petersen_immerses_k33() {
        let g = petersen();
        let h = complete_bipartite(3, 3);
        let m = contains_immersion(&g, &h, false).unwrap().unwrap();
        m.validate(&g, &h, Mode::Weak).unwrap();
        // Petersen is cubic, so immersion and topological containment coincide.
        assert!(contains_topological_minor(&g, &h).unwrap().is_some());
    }

    #[test]
    fn topological_minor_examples() {
        let k4 = complete(4);
        let m = contains_topological_minor(&k4.subdivide_all(), &k4).unwrap().unwrap();
        let originals: BTreeSet<VertexId> = (0..4).map(VertexId).collect();
        assert_eq!(m.vertex_map.values().copied().collect::<BTreeSet<_>>(), originals);
    }

    #[test]
    fn k33_contains_a_subdivided_k4() {
        // Hand-built witness: branch vertices a0, a1, b0, b1 (ids 0, 1, 3, 4);
        // a0-a1 routed through b2 and b0-b1 through a2.
        let g = complete_bipartite(3, 3);
        let k4 = complete(4);
        let text = "0 -> 0\n1 -> 1\n2 -> 3\n3 -> 4\n";
        let eid = |a: u32, b: u32| g.edges_between(VertexId(a), VertexId(b)).next().unwrap().0;
        let mut paths = String::new();
        for (he, a, b) in k4.edges() {
            let (x, y) = ([0, 1, 3, 4][a.0 as usize], [0, 1, 3, 4][b.0 as usize]);
            let ids = match (x, y) {
                (0, 1) => format!("{} {}", eid(0, 5), eid(1, 5)),
                (3, 4) => format!("{} {}", eid(2, 3), eid(2, 4)),
                _ => eid(x, y).to_string(),
            };
            paths.push_str(&format!("{he}: {ids}\n"));
        }
        let hand = ImmersionModel::parse(&(text.to_string() + &paths), &g, &k4).unwrap();
        hand.validate(&g, &k4, Mode::Topological).unwrap();
        let found = contains_topological_minor(&g, &k4).unwrap().unwrap();
        found.validate(&g, &k4, Mode::Topological).unwrap();
        assert!(contains_topological_minor(&g, &complete(5)).unwrap().is_none());
    }

    #[test]
    fn kuratowski_freeness() {
        let (free, w) = is_kuratowski_immersion_free(&complete(5)).unwrap();
        assert!(!free);
        let (k, m) = w.unwrap();
        assert_eq!(k, Kuratowski::K5);
        assert!(m.vertex_map.iter().all(|(a, b)| a == b));
        assert!(is_kuratowski_immersion_free(&cube()).unwrap().0);
        assert!(is_kuratowski_immersion_free(&twin_k4_bridged()).unwrap().0);
    }

    #[test]
    fn strong_fails_where_only_weak_exists() {
        // C4 into K_{1,3} with doubled rays: every map uses the centre, and
        // the pattern vertex opposite it can only be reached through it.
        let g = MultiGraph::from_edges(4, &[(0, 1), (0, 1), (0, 2), (0, 2), (0, 3), (0, 3)]).unwrap();
        let c4 = cycle(4);
        assert!(contains_immersion(&g, &c4, false).unwrap().is_some());
        assert!(contains_immersion(&g, &c4, true).unwrap().is_none());
    }

    #[test]
    fn witness_text_round_trip() {
        let g = petersen();
        let h = complete_bipartite(3, 3);
        let m = contains_immersion(&g, &h, false).unwrap().unwrap();
        let back = ImmersionModel::parse(&m.to_text(), &g, &h).unwrap();
        assert_eq!(back, m);
        assert!(ImmersionModel::parse("0 -> x\n", &g, &h).is_err());
    }

    #[test]
    fn guards() {
        let big = cycle(61);
        assert!(matches!(contains_immersion(&big, &complete(3), false), Err(Error::Capacity { .. })));
        assert!(find_model(&big, &complete(3), Mode::Weak, Guard::Off).unwrap().is_some());
    }
}
