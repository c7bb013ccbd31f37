//! Loopless undirected multigraphs with stable vertex and edge identifiers.
//!
//! Every edit (deletion, contraction, subdivision, lift) takes `&self` and
//! returns a new value; the input is never modified. Identifiers are opaque
//! integers handed out by monotone counters, so an id is never reused by a
//! later edit of the same lineage.

mod canon;
pub mod families;
mod io;
mod iso;
mod path;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, CanonicalLabeling};
pub use io::{parse_graph, write_graph};
pub use iso::{is_isomorphic, is_isomorphic_guarded, ISOMORPHISM_GUARD};
pub use path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An item addressed by [`MultiGraph::delete`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Item {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// A finite, undirected, loopless multigraph.
///
/// Parallel edges are distinct objects with distinct [`EdgeId`]s. Equality
/// compares the vertex set and the edge records (id and endpoints); the id
/// counters do not take part.
#[derive(Debug, Clone, Default)]
pub struct MultiGraph {
    adjacency: BTreeMap<VertexId, BTreeSet<EdgeId>>,
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    next_vertex: u32,
    next_edge: u32,
}

impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges && self.adjacency.keys().eq(other.adjacency.keys())
    }
}

impl Eq for MultiGraph {}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with vertices `0..n` and no edges.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for _ in 0..n {
            g.add_vertex();
        }
        g
    }

    /// Graph on vertices `0..n`; edge `i` of the slice receives id `i`.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let v = VertexId(self.next_vertex);
        self.next_vertex += 1;
        self.adjacency.insert(v, BTreeSet::new());
        v
    }

    pub fn add_vertex_with_id(&mut self, v: VertexId) -> Result<()> {
        if self.adjacency.contains_key(&v) {
            return Err(Error::DuplicateVertex(v));
        }
        self.adjacency.insert(v, BTreeSet::new());
        self.next_vertex = self.next_vertex.max(v.0 + 1);
        Ok(())
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let e = EdgeId(self.next_edge);
        self.add_edge_with_id(e, u, v)?;
        Ok(e)
    }

    pub fn add_edge_with_id(&mut self, e: EdgeId, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.edges.contains_key(&e) {
            return Err(Error::DuplicateEdge(e));
        }
        for x in [u, v] {
            if !self.adjacency.contains_key(&x) {
                return Err(Error::UnknownVertex(x));
            }
        }
        self.edges.insert(e, ordered(u, v));
        self.adjacency.get_mut(&u).unwrap().insert(e);
        self.adjacency.get_mut(&v).unwrap().insert(e);
        self.next_edge = self.next_edge.max(e.0 + 1);
        Ok(())
    }

    fn remove_edge_in_place(&mut self, e: EdgeId) {
        if let Some((u, v)) = self.edges.remove(&e) {
            self.adjacency.get_mut(&u).unwrap().remove(&e);
            self.adjacency.get_mut(&v).unwrap().remove(&e);
        }
    }

    fn remove_vertex_in_place(&mut self, v: VertexId) {
        if let Some(inc) = self.adjacency.get(&v).cloned() {
            for e in inc {
                self.remove_edge_in_place(e);
            }
            self.adjacency.remove(&v);
        }
    }

    /// The id the next call to [`add_vertex`](Self::add_vertex) (or the next
    /// contraction) will hand out.
    pub fn next_vertex_id(&self) -> VertexId {
        VertexId(self.next_vertex)
    }

    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.next_edge)
    }

    /// Raises the id counters so that fresh ids avoid everything below them.
    pub fn reserve_ids(&mut self, vertex: u32, edge: u32) {
        self.next_vertex = self.next_vertex.max(vertex);
        self.next_edge = self.next_edge.max(edge);
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.keys().copied()
    }

    /// Edges as `(id, u, v)` with `u < v`, ascending by id.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().map(|(&e, &(u, v))| (e, u, v))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adjacency.contains_key(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(&e).copied()
    }

    pub fn endpoints_checked(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        self.endpoints(e).ok_or(Error::UnknownEdge(e))
    }

    /// The endpoint of `e` different from `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> Option<VertexId> {
        let (a, b) = self.endpoints(e)?;
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    }

    /// E_G(v): ids of the edges incident to `v`, ascending.
    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.adjacency.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency.get(&v).map_or(0, BTreeSet::len)
    }

    /// N_G(v) as a set of vertices.
    pub fn neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.incident(v)
            .filter_map(|e| self.opposite(e, v))
            .collect()
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.edges_between(u, v).count()
    }

    pub fn edges_between(&self, u: VertexId, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        let key = ordered(u, v);
        self.incident(u)
            .filter(move |e| self.edges[e] == key && u != v)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.values().all(|pair| seen.insert(*pair))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.reachable_from(self.vertices().next().unwrap()).len() == self.vertex_count()
    }

    pub(crate) fn reachable_from(&self, s: VertexId) -> BTreeSet<VertexId> {
        let mut seen = BTreeSet::from([s]);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for e in self.incident(x) {
                let y = self.opposite(e, x).unwrap();
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// G∖S / G∖F. Deleting a vertex removes its incident edges.
    pub fn delete(&self, items: &[Item]) -> Result<MultiGraph> {
        for item in items {
            match *item {
                Item::Vertex(v) if !self.contains_vertex(v) => return Err(Error::UnknownVertex(v)),
                Item::Edge(e) if !self.contains_edge(e) => return Err(Error::UnknownEdge(e)),
                _ => {}
            }
        }
        let mut g = self.clone();
        for item in items {
            match *item {
                Item::Vertex(v) => g.remove_vertex_in_place(v),
                Item::Edge(e) => g.remove_edge_in_place(e),
            }
        }
        Ok(g)
    }

    pub fn delete_edges(&self, edges: &[EdgeId]) -> Result<MultiGraph> {
        let items: Vec<Item> = edges.iter().map(|&e| Item::Edge(e)).collect();
        self.delete(&items)
    }

    pub fn delete_vertices(&self, vertices: &[VertexId]) -> Result<MultiGraph> {
        let items: Vec<Item> = vertices.iter().map(|&v| Item::Vertex(v)).collect();
        self.delete(&items)
    }

    /// Contracts `e = {x, y}` into a fresh vertex, returned alongside the graph.
    ///
    /// Every other edge at `x` or `y` is re-attached to the fresh vertex and
    /// keeps its id, so multiplicities add up. Edges parallel to `e` would
    /// become loops and are dropped together with `e`.
    pub fn contract(&self, e: EdgeId) -> Result<(MultiGraph, VertexId)> {
        let (x, y) = self.endpoints_checked(e)?;
        let mut g = self.clone();
        let merged = g.add_vertex();
        let touched: BTreeSet<EdgeId> = self.incident(x).chain(self.incident(y)).collect();
        for f in touched {
            let (a, b) = self.edges[&f];
            g.remove_edge_in_place(f);
            let a = if a == x || a == y { merged } else { a };
            let b = if b == x || b == y { merged } else { b };
            if a != b {
                g.add_edge_with_id(f, a, b)?;
            }
        }
        g.remove_vertex_in_place(x);
        g.remove_vertex_in_place(y);
        Ok((g, merged))
    }

    /// Replaces every edge `{x, y}` by a path `x, w, y` through a fresh vertex.
    pub fn subdivide_all(&self) -> MultiGraph {
        let mut g = MultiGraph {
            adjacency: self.adjacency.keys().map(|&v| (v, BTreeSet::new())).collect(),
            edges: BTreeMap::new(),
            next_vertex: self.next_vertex,
            next_edge: self.next_edge,
        };
        for (_, x, y) in self.edges() {
            let w = g.add_vertex();
            g.add_edge(x, w).expect("fresh vertex");
            g.add_edge(w, y).expect("fresh vertex");
        }
        g
    }

    /// Lifts `e1 = {x, y}` and `e2 = {x, z}` to a fresh edge `{y, z}`.
    ///
    /// The edges must share exactly one endpoint; a lift of two parallel
    /// edges would create a loop and is rejected.
    pub fn lift(&self, e1: EdgeId, e2: EdgeId) -> Result<(MultiGraph, EdgeId)> {
        if e1 == e2 {
            return Err(Error::invalid("cannot lift an edge with itself"));
        }
        let (a1, b1) = self.endpoints_checked(e1)?;
        let (a2, b2) = self.endpoints_checked(e2)?;
        let shared: Vec<VertexId> = [a1, b1].into_iter().filter(|v| *v == a2 || *v == b2).collect();
        let x = match shared.as_slice() {
            [x] => *x,
            [] => return Err(Error::invalid(format!("edges {e1} and {e2} are not adjacent"))),
            _ => {
                return Err(Error::invalid(format!(
                    "edges {e1} and {e2} are parallel; lifting them would create a loop"
                )))
            }
        };
        let y = self.opposite(e1, x).unwrap();
        let z = self.opposite(e2, x).unwrap();
        let mut g = self.clone();
        g.remove_edge_in_place(e1);
        g.remove_edge_in_place(e2);
        let e = g.add_edge(y, z)?;
        Ok((g, e))
    }

    /// Drops parallel copies, keeping the lowest id of each class.
    pub fn simplify(&self) -> MultiGraph {
        let mut g = self.clone();
        let mut seen = BTreeSet::new();
        for (e, u, v) in self.edges() {
            if !seen.insert((u, v)) {
                g.remove_edge_in_place(e);
            }
        }
        g
    }

    /// Subgraph induced by `keep`; ids preserved.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> MultiGraph {
        let mut g = self.clone();
        for v in self.vertices().filter(|v| !keep.contains(v)) {
            g.remove_vertex_in_place(v);
        }
        g
    }

    /// Spanning subgraph keeping only the listed edges.
    pub fn edge_subgraph(&self, keep: &BTreeSet<EdgeId>) -> MultiGraph {
        let mut g = self.clone();
        for e in self.edge_ids().filter(|e| !keep.contains(e)) {
            g.remove_edge_in_place(e);
        }
        g
    }

    /// Copy with vertices renumbered `0..n` in ascending id order and edges
    /// renumbered in ascending id order.
    pub fn compacted(&self) -> (MultiGraph, BTreeMap<VertexId, VertexId>) {
        let map: BTreeMap<VertexId, VertexId> = self
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, VertexId(i as u32)))
            .collect();
        let mut g = MultiGraph::with_vertices(map.len());
        for (_, u, v) in self.edges() {
            g.add_edge(map[&u], map[&v]).expect("renumbered endpoints exist");
        }
        (g, map)
    }

    /// Multiplicity matrix in ascending vertex order.
    pub fn adjacency_matrix(&self) -> (Vec<VertexId>, Vec<Vec<u32>>) {
        let order: Vec<VertexId> = self.vertices().collect();
        let index: BTreeMap<VertexId, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut m = vec![vec![0u32; order.len()]; order.len()];
        for (_, u, v) in self.edges() {
            m[index[&u]][index[&v]] += 1;
            m[index[&v]][index[&u]] += 1;
        }
        (order, m)
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph(self))
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn e(i: u32) -> EdgeId {
        EdgeId(i)
    }

    #[test]
    fn rejects_loops() {
        let mut g = MultiGraph::with_vertices(2);
        assert_eq!(g.add_edge(v(1), v(1)), Err(Error::Loop(v(1))));
    }

    #[test]
    fn delete_edge_of_triangle_gives_path() {
        let g = complete(3);
        let p = g.delete(&[Item::Edge(e(0))]).unwrap();
        assert!(is_isomorphic(&p, &path_graph(3)).unwrap());
        assert_eq!(g.edge_count(), 3, "input untouched");
    }

    #[test]
    fn delete_vertex_of_k4_gives_k3() {
        let g = complete(4);
        let h = g.delete(&[Item::Vertex(v(2))]).unwrap();
        assert!(is_isomorphic(&h, &complete(3)).unwrap());
    }

    #[test]
    fn delete_one_parallel_copy_keeps_the_other_id() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let h = g.delete(&[Item::Edge(e(0))]).unwrap();
        assert_eq!(h.edge_ids().collect::<Vec<_>>(), vec![e(1)]);
    }

    #[test]
    fn delete_unknown_id_is_named() {
        let g = complete(3);
        assert_eq!(g.delete(&[Item::Edge(e(9))]), Err(Error::UnknownEdge(e(9))));
        assert_eq!(g.delete(&[Item::Vertex(v(7))]), Err(Error::UnknownVertex(v(7))));
    }

    #[test]
    fn contract_triangle_edge_gives_double_edge() {
        let (g, merged) = complete(3).contract(e(0)).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.multiplicity(merged, v(2)), 2);
    }

    #[test]
    fn contract_one_copy_of_double_edge_removes_loop() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let (h, _) = g.contract(e(1)).unwrap();
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn contract_k4_edge_matches_hand_expansion() {
        // K4 on {0,1,2,3}, contract 01: vertices w,2,3 with w-2 twice, w-3 twice, 2-3 once.
        let g = complete(4);
        let e01 = g.edges_between(v(0), v(1)).next().unwrap();
        let (h, w) = g.contract(e01).unwrap();
        assert_eq!(h.degree_sequence(), vec![4, 3, 3]);
        assert_eq!(h.multiplicity(w, v(2)), 2);
        assert_eq!(h.multiplicity(w, v(3)), 2);
        assert_eq!(h.multiplicity(v(2), v(3)), 1);
    }

    #[test]
    fn subdivide_examples() {
        let single = MultiGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(is_isomorphic(&single.subdivide_all(), &path_graph(3)).unwrap());
        let double = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(is_isomorphic(&double.subdivide_all(), &cycle(4)).unwrap());
        let s = complete(4).subdivide_all();
        assert_eq!((s.vertex_count(), s.edge_count()), (10, 12));
        assert!(s.is_simple());
    }

    #[test]
    fn lift_path_gives_edge_and_isolated_middle() {
        let g = path_graph(3);
        let (h, new) = g.lift(e(0), e(1)).unwrap();
        assert_eq!(h.endpoints(new), Some((v(0), v(2))));
        assert_eq!(h.degree(v(1)), 0);
        assert!(h.contains_vertex(v(1)));
    }

    #[test]
    fn lift_triangle_gives_double_edge() {
        let g = complete(3);
        let ab = g.edges_between(v(0), v(1)).next().unwrap();
        let bc = g.edges_between(v(1), v(2)).next().unwrap();
        let (h, _) = g.lift(ab, bc).unwrap();
        assert_eq!(h.multiplicity(v(0), v(2)), 2);
        assert_eq!(h.degree(v(1)), 0);
    }

    #[test]
    fn lift_rejects_parallel_and_non_adjacent() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (0, 1), (2, 3)]).unwrap();
        assert!(g.lift(e(0), e(1)).is_err());
        assert!(g.lift(e(0), e(2)).is_err());
        assert!(g.lift(e(0), e(0)).is_err());
    }

    #[test]
    fn lifting_through_subdivision_vertices_recovers_k4() {
        let k4 = complete(4);
        let mut s = k4.subdivide_all();
        let fresh: Vec<VertexId> = s.vertices().filter(|w| w.0 >= 4).collect();
        for w in fresh {
            let inc: Vec<EdgeId> = s.incident(w).collect();
            let (lifted, _) = s.lift(inc[0], inc[1]).unwrap();
            s = lifted.delete_vertices(&[w]).unwrap();
        }
        assert!(is_isomorphic(&s, &k4).unwrap());
    }

    #[test]
    fn equality_ignores_counters() {
        let mut a = complete(3);
        let b = complete(3);
        a.reserve_ids(100, 100);
        assert_eq!(a, b);
    }
}
