use std::collections::BTreeSet;

use super::{EdgeId, MultiGraph, VertexId};
use crate::error::{Error, Result};

/// An alternating sequence `v0, e1, v1, ..., ek, vk` in some host graph.
///
/// The type only stores the sequence; [`Path::validate`] checks it against a
/// host (vertex-simple, no repeated edge, consecutive incidences) and
/// [`Path::validate_trail`] relaxes vertex-simplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Result<Self> {
        if vertices.is_empty() || vertices.len() != edges.len() + 1 {
            return Err(Error::invalid(format!(
                "path needs one more vertex than edges, got {} vertices and {} edges",
                vertices.len(),
                edges.len()
            )));
        }
        Ok(Path { vertices, edges })
    }

    pub fn trivial(v: VertexId) -> Self {
        Path {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Walks `edges` in `host` starting from `start`.
    pub fn from_edges(host: &MultiGraph, start: VertexId, edges: &[EdgeId]) -> Result<Self> {
        let mut vertices = vec![start];
        let mut at = start;
        for &e in edges {
            at = host
                .opposite(e, at)
                .ok_or_else(|| Error::invalid(format!("edge {e} is not incident to vertex {at}")))?;
            vertices.push(at);
        }
        Ok(Path {
            vertices,
            edges: edges.to_vec(),
        })
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edges.iter().copied().collect()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn interior(&self) -> &[VertexId] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// First position of `v` along the path.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// The edges entering and leaving the vertex at position `i`.
    pub fn edges_at(&self, i: usize) -> (Option<EdgeId>, Option<EdgeId>) {
        let before = if i > 0 { Some(self.edges[i - 1]) } else { None };
        let after = self.edges.get(i).copied();
        (before, after)
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.reverse();
        edges.reverse();
        Path { vertices, edges }
    }

    /// P[a, b]: the sub-path between the first occurrences of `a` and `b`,
    /// oriented from `a` to `b`.
    pub fn sub_path(&self, a: VertexId, b: VertexId) -> Option<Path> {
        let i = self.position(a)?;
        let j = self.position(b)?;
        if i <= j {
            Some(Path {
                vertices: self.vertices[i..=j].to_vec(),
                edges: self.edges[i..j].to_vec(),
            })
        } else {
            Some(self.reversed().sub_path(a, b).unwrap())
        }
    }

    /// Concatenation; `other` must start where `self` ends.
    pub fn concat(&self, other: &Path) -> Result<Path> {
        if self.end() != other.start() {
            return Err(Error::invalid(format!(
                "cannot join a path ending at {} with one starting at {}",
                self.end(),
                other.start()
            )));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Ok(Path { vertices, edges })
    }

    /// Checks the path is a trail of `host`: every edge joins its neighbours
    /// in the sequence and no edge repeats.
    pub fn validate_trail(&self, host: &MultiGraph) -> Result<()> {
        for v in &self.vertices {
            if !host.contains_vertex(*v) {
                return Err(Error::UnknownVertex(*v));
            }
        }
        let mut seen = BTreeSet::new();
        for (i, &e) in self.edges.iter().enumerate() {
            let (a, b) = host.endpoints_checked(e)?;
            let (x, y) = (self.vertices[i], self.vertices[i + 1]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return Err(Error::invalid(format!("edge {e} does not join {x} and {y}")));
            }
            if !seen.insert(e) {
                return Err(Error::invalid(format!("edge {e} repeats along the path")));
            }
        }
        Ok(())
    }

    /// Checks the path is a vertex-simple path of `host`.
    pub fn validate(&self, host: &MultiGraph) -> Result<()> {
        self.validate_trail(host)?;
        let mut seen = BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(*v) {
                return Err(Error::invalid(format!("vertex {v} repeats along the path")));
            }
        }
        Ok(())
    }

    /// Edge ids separated by spaces (`-` for a trivial path).
    pub fn edge_list_text(&self) -> String {
        if self.edges.is_empty() {
            return "-".to_string();
        }
        self.edges.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::families::path_graph;

    #[test]
    fn sub_path_in_both_directions() {
        let g = path_graph(5);
        let p = Path::from_edges(&g, VertexId(0), &[EdgeId(0), EdgeId(1), EdgeId(2), EdgeId(3)]).unwrap();
        let fwd = p.sub_path(VertexId(1), VertexId(3)).unwrap();
        assert_eq!(fwd.vertices(), &[VertexId(1), VertexId(2), VertexId(3)]);
        let back = p.sub_path(VertexId(3), VertexId(1)).unwrap();
        assert_eq!(back.vertices(), &[VertexId(3), VertexId(2), VertexId(1)]);
        back.validate(&g).unwrap();
    }

    #[test]
    fn repeated_vertex_is_a_trail_but_not_a_path() {
        // triangle plus a pendant triangle at 0: 1-0-2 ... walk 1,0,2,...
        let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let walk = Path::from_edges(&g, VertexId(1), &[EdgeId(0), EdgeId(3), EdgeId(4), EdgeId(5), EdgeId(2)]).unwrap();
        walk.validate_trail(&g).unwrap();
        assert!(walk.validate(&g).is_err());
    }

    #[test]
    fn repeated_edge_is_rejected() {
        let g = path_graph(2);
        let p = Path::new(vec![VertexId(0), VertexId(1), VertexId(0)], vec![EdgeId(0), EdgeId(0)]).unwrap();
        assert!(p.validate_trail(&g).is_err());
    }
}
