//! Planarity testing and rotation-system embeddings on the sphere.
//!
//! Planarity is decided block by block on the simplification with the
//! Demoucron–Malgrange–Pertuiset face-insertion algorithm. Block embeddings
//! are glued at cut vertices by concatenating rotations, and parallel copies
//! are put back next to their representative so each pair bounds a digon.

mod dmp;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::connectivity::vertex_components;
use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, MultiGraph, VertexId};

/// A cyclic order of the incident edges at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotation: BTreeMap<VertexId, Vec<EdgeId>>,
    ends: BTreeMap<EdgeId, (VertexId, VertexId)>,
}

/// One of the two arcs into which a path through `x` cuts the rotation at `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

/// A directed edge: `edge` traversed away from `tail`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub tail: VertexId,
}

impl RotationSystem {
    /// Checks that every vertex of `g` lists each incident edge exactly once.
    pub fn new(g: &MultiGraph, rotation: BTreeMap<VertexId, Vec<EdgeId>>) -> Result<Self> {
        for v in g.vertices() {
            let listed = rotation.get(&v).ok_or(Error::UnknownVertex(v))?;
            let set: BTreeSet<EdgeId> = listed.iter().copied().collect();
            if set.len() != listed.len() || set != g.incident(v).collect() {
                return Err(Error::invalid(format!(
                    "rotation at {v} must list each incident edge exactly once"
                )));
            }
        }
        if let Some(v) = rotation.keys().find(|v| !g.contains_vertex(**v)) {
            return Err(Error::UnknownVertex(*v));
        }
        let ends = g.edges().map(|(e, u, v)| (e, (u, v))).collect();
        Ok(RotationSystem { rotation, ends })
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation.keys().copied()
    }

    pub fn rotation(&self, v: VertexId) -> Option<&[EdgeId]> {
        self.rotation.get(&v).map(Vec::as_slice)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.ends[&e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// The edge after `e` in the rotation at `v`.
    pub fn successor(&self, v: VertexId, e: EdgeId) -> Option<EdgeId> {
        let rot = self.rotation.get(&v)?;
        let i = rot.iter().position(|&x| x == e)?;
        Some(rot[(i + 1) % rot.len()])
    }

    /// Face boundaries as dart cycles: the dart after `e: u -> v` is
    /// `successor(v, e)` leaving `v`. Isolated vertices bound no darts and
    /// are not listed here, but count as faces in [`face_count`](Self::face_count).
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (&e, &(u, v)) in &self.ends {
            for tail in [u, v] {
                let start = Dart { edge: e, tail };
                if seen.contains(&start) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = start;
                while seen.insert(d) {
                    face.push(d);
                    let head = self.other_end(d.edge, d.tail);
                    let next = self.successor(head, d.edge).unwrap();
                    d = Dart { edge: next, tail: head };
                }
                out.push(face);
            }
        }
        out
    }

    pub fn face_count(&self) -> usize {
        let isolated = self.rotation.values().filter(|r| r.is_empty()).count();
        self.faces().len() + isolated
    }

    fn component_count(&self) -> usize {
        let mut g = MultiGraph::new();
        for &v in self.rotation.keys() {
            g.add_vertex_with_id(v).unwrap();
        }
        for (&e, &(u, v)) in &self.ends {
            g.add_edge_with_id(e, u, v).unwrap();
        }
        vertex_components(&g).len()
    }

    /// Euler's formula for the sphere, one sphere per component:
    /// |V| − |E| + |F| = 2·c.
    pub fn is_spherical(&self) -> bool {
        let lhs = self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64;
        lhs == 2 * self.component_count() as i64
    }

    /// One line per vertex: `v: e1 e2 ... ek`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, rot) in &self.rotation {
            out.push_str(&format!("{v}:"));
            for e in rot {
                out.push_str(&format!(" {e}"));
            }
            out.push('\n');
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output against its host graph.
    pub fn parse(g: &MultiGraph, text: &str) -> Result<Self> {
        let mut rotation = BTreeMap::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(k + 1, "expected `v: e1 e2 ...`"))?;
            let num = |s: &str| s.trim().parse::<u32>().map_err(|_| Error::parse(k + 1, format!("bad id {s:?}")));
            let v = VertexId(num(head)?);
            let edges = rest.split_whitespace().map(|s| num(s).map(EdgeId)).collect::<Result<Vec<_>>>()?;
            if rotation.insert(v, edges).is_some() {
                return Err(Error::parse(k + 1, format!("vertex {v} listed twice")));
            }
        }
        RotationSystem::new(g, rotation)
    }
}

impl fmt::Display for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Whether `g` embeds in the sphere. Parallel edges never matter.
pub fn is_planar(g: &MultiGraph) -> bool {
    embed_any(g).is_some()
}

/// A spherical rotation system for a connected planar `g`, or `None` if `g`
/// is not planar.
pub fn embed_planar(g: &MultiGraph) -> Result<Option<RotationSystem>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(embed_any(g))
}

/// Like [`embed_planar`] but accepts any number of components.
pub fn embed_any(g: &MultiGraph) -> Option<RotationSystem> {
    // Representative edge (lowest id) for each adjacent pair.
    let mut rep: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
    for (e, u, v) in g.edges() {
        rep.entry((u, v)).or_default().push(e);
    }
    let simple: Vec<(VertexId, VertexId)> = rep.keys().copied().collect();
    let simple_rot = dmp::embed_simple(&g.vertices().collect::<Vec<_>>(), &simple)?;
    let mut rotation = BTreeMap::new();
    for (v, nbrs) in simple_rot {
        let mut rot = Vec::with_capacity(g.degree(v));
        for w in nbrs {
            let key = if v < w { (v, w) } else { (w, v) };
            let copies = &rep[&key];
            if v < w {
                rot.extend(copies.iter().copied());
            } else {
                rot.extend(copies.iter().rev().copied());
            }
        }
        rotation.insert(v, rot);
    }
    let rs = RotationSystem::new(g, rotation).expect("embedding lists every incidence");
    debug_assert!(rs.is_spherical());
    Some(rs)
}

/// Which arc of the rotation at `x` contains `probe`, where the arcs are cut
/// out by `p1_in` and `p1_out`. Arc A runs from just after `p1_in` to just
/// before `p1_out`; arc B is the rest.
pub fn local_sides(rs: &RotationSystem, x: VertexId, p1_in: EdgeId, p1_out: EdgeId, probe: EdgeId) -> Result<Side> {
    let rot = rs.rotation(x).ok_or(Error::UnknownVertex(x))?;
    if p1_in == p1_out {
        return Err(Error::invalid("path edges at a vertex must differ"));
    }
    if probe == p1_in || probe == p1_out {
        return Err(Error::invalid(format!("probe edge {probe} belongs to the path")));
    }
    let pos = |e: EdgeId| {
        rot.iter()
            .position(|&f| f == e)
            .ok_or_else(|| Error::invalid(format!("edge {e} is not incident to {x}")))
    };
    let (i, j, p) = (pos(p1_in)?, pos(p1_out)?, pos(probe)?);
    let n = rot.len();
    let dist = |from: usize, to: usize| (to + n - from) % n;
    Ok(if dist(i, p) < dist(i, j) { Side::A } else { Side::B })
}
