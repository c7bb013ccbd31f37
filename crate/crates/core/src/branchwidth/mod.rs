//! Branch decompositions, exact and heuristic branch-width, and cylinders.
//!
//! The width of a tree edge is the size of its middle set: the vertices
//! incident to graph edges on both sides. Two parallel edges on one tree
//! edge each therefore give width 2.

mod exact;
mod upper;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, MultiGraph, VertexId};

pub use exact::{branchwidth_exact, branchwidth_exact_bounded, branchwidth_exact_guarded, EXACT_EDGE_GUARD};
pub use upper::branchwidth_upper;

/// A ternary tree with graph edges on its leaves, stored as a parent list
/// rooted at node 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchDecomposition {
    parent: Vec<Option<usize>>,
    leaves: BTreeMap<usize, EdgeId>,
}

impl BranchDecomposition {
    /// Builds from an undirected tree on nodes `0..node_count`.
    pub fn from_tree(node_count: usize, tree_edges: &[(usize, usize)], leaves: BTreeMap<usize, EdgeId>) -> Result<Self> {
        let mut adj = vec![Vec::new(); node_count];
        for &(a, b) in tree_edges {
            if a >= node_count || b >= node_count || a == b {
                return Err(Error::invalid(format!("bad tree edge ({a}, {b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![None; node_count];
        if node_count > 0 {
            let mut seen = vec![false; node_count];
            seen[0] = true;
            let mut stack = vec![0];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some(x);
                        stack.push(y);
                    }
                }
            }
            if seen.iter().any(|s| !s) || tree_edges.len() + 1 != node_count {
                return Err(Error::invalid("tree edges do not form a tree"));
            }
        }
        Ok(BranchDecomposition { parent, leaves })
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent.get(node).copied().flatten()
    }

    /// Leaf node → graph edge.
    pub fn leaves(&self) -> &BTreeMap<usize, EdgeId> {
        &self.leaves
    }

    /// Tree edges as `(child, parent)`.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (c, p)))
            .collect()
    }

    /// Checks that the parent list is a tree, inner nodes have degree 3,
    /// and leaves carry each edge of `g` exactly once.
    pub fn validate(&self, g: &MultiGraph) -> Result<()> {
        let n = self.parent.len();
        let m = g.edge_count();
        if (n == 0) != (m == 0) {
            return Err(Error::invalid("the decomposition of an edgeless graph is empty and only then"));
        }
        let roots = self.parent.iter().filter(|p| p.is_none()).count();
        if n > 0 && roots != 1 {
            return Err(Error::invalid(format!("tree has {roots} roots")));
        }
        for start in 0..n {
            let mut at = start;
            for _ in 0..=n {
                match self.parent[at] {
                    Some(p) if p >= n => return Err(Error::invalid(format!("parent {p} out of range"))),
                    Some(p) => at = p,
                    None => break,
                }
            }
            if self.parent[at].is_some() {
                return Err(Error::invalid("parent list contains a cycle"));
            }
        }
        let mut degree = vec![0usize; n];
        for (c, p) in self.tree_edges() {
            degree[c] += 1;
            degree[p] += 1;
        }
        for (x, &d) in degree.iter().enumerate() {
            let is_leaf = self.leaves.contains_key(&x);
            if is_leaf && d > 1 {
                return Err(Error::invalid(format!("leaf {x} has degree {d}")));
            }
            if !is_leaf && d != 3 {
                return Err(Error::invalid(format!("inner node {x} has degree {d}, expected 3")));
            }
        }
        if let Some(&x) = self.leaves.keys().find(|&&x| x >= n) {
            return Err(Error::invalid(format!("leaf {x} is not a tree node")));
        }
        let placed: BTreeSet<EdgeId> = self.leaves.values().copied().collect();
        if placed.len() != self.leaves.len() || placed != g.edge_ids().collect() {
            return Err(Error::invalid("leaves are not in bijection with the graph's edges"));
        }
        Ok(())
    }

    /// `nodes N`, `parent p0 p1 ...` (`-` for the root), then `leaf -> edge` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!("nodes {}\nparent", self.parent.len());
        for p in &self.parent {
            match p {
                Some(p) => out.push_str(&format!(" {p}")),
                None => out.push_str(" -"),
            }
        }
        out.push('\n');
        for (leaf, e) in &self.leaves {
            out.push_str(&format!("{leaf} -> {e}\n"));
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. `first_line` numbers
    /// `lines[0]` in error messages.
    pub fn parse_lines(lines: &[&str], first_line: usize) -> Result<Self> {
        let mut nodes = None;
        let mut parent = None;
        let mut leaves = BTreeMap::new();
        for (k, raw) in lines.iter().enumerate() {
            let line_no = first_line + k;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let num = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_no, format!("bad number {:?}", s.trim())))
            };
            if let Some(rest) = line.strip_prefix("nodes") {
                nodes = Some(num(rest)?);
            } else if let Some(rest) = line.strip_prefix("parent") {
                let list = rest
                    .split_whitespace()
                    .map(|s| if s == "-" { Ok(None) } else { num(s).map(Some) })
                    .collect::<Result<Vec<_>>>()?;
                parent = Some(list);
            } else if let Some((a, b)) = line.split_once("->") {
                leaves.insert(num(a)?, EdgeId(num(b)? as u32));
            } else {
                return Err(Error::parse(line_no, format!("unexpected decomposition line {line:?}")));
            }
        }
        let nodes = nodes.ok_or_else(|| Error::parse(first_line, "missing `nodes`"))?;
        let parent = parent.ok_or_else(|| Error::parse(first_line, "missing `parent`"))?;
        if parent.len() != nodes {
            return Err(Error::parse(first_line, format!("expected {nodes} parents, got {}", parent.len())));
        }
        Ok(BranchDecomposition { parent, leaves })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().collect();
        Self::parse_lines(&lines, 1)
    }
}

impl fmt::Display for BranchDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Number of vertices incident to edges in both `side` and its complement.
pub fn middle_set(g: &MultiGraph, side: &BTreeSet<EdgeId>) -> BTreeSet<VertexId> {
    g.vertices()
        .filter(|&v| {
            let mut inside = false;
            let mut outside = false;
            for e in g.incident(v) {
                if side.contains(&e) {
                    inside = true;
                } else {
                    outside = true;
                }
            }
            inside && outside
        })
        .collect()
}

/// Width of `bd`: the largest middle set over its tree edges (0 when the
/// graph has at most one edge).
pub fn width_of(g: &MultiGraph, bd: &BranchDecomposition) -> Result<usize> {
    bd.validate(g)?;
    if g.edge_count() <= 1 {
        return Ok(0);
    }
    let n = bd.node_count();
    let mut below: Vec<BTreeSet<EdgeId>> = vec![BTreeSet::new(); n];
    // Children before parents: order nodes by depth, deepest first.
    let depth = |mut x: usize| {
        let mut d = 0;
        while let Some(p) = bd.parent(x) {
            x = p;
            d += 1;
        }
        d
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(depth(x)));
    let mut width = 0;
    for x in order {
        if let Some(&e) = bd.leaves.get(&x) {
            below[x].insert(e);
        }
        if let Some(p) = bd.parent(x) {
            width = width.max(middle_set(g, &below[x]).len());
            let moved = std::mem::take(&mut below[x]);
            below[p].extend(moved);
        }
    }
    Ok(width)
}

/// The (r, q)-cylinder: an r-cycle times a q-vertex path. Vertex `j*r + i`
/// is position `i` on ring `j`; ring edges come first, then rail edges.
pub fn cylinder(r: usize, q: usize) -> Result<MultiGraph> {
    if r < 3 || q < 1 {
        return Err(Error::invalid(format!("cylinder needs r >= 3 and q >= 1, got ({r}, {q})")));
    }
    let mut g = MultiGraph::with_vertices(r * q);
    let v = |j: usize, i: usize| VertexId((j * r + i) as u32);
    for j in 0..q {
        for i in 0..r {
            g.add_edge(v(j, i), v(j, (i + 1) % r))?;
        }
    }
    for j in 0..q - 1 {
        for i in 0..r {
            g.add_edge(v(j, i), v(j + 1, i))?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::families::*;
    use crate::multigraph::is_isomorphic;

    #[test]
    fn single_edge_has_width_zero() {
        let g = path_graph(2);
        let bd = BranchDecomposition::from_tree(1, &[], BTreeMap::from([(0, EdgeId(0))])).unwrap();
        assert_eq!(width_of(&g, &bd).unwrap(), 0);
    }

    #[test]
    fn triangle_star_tree_has_width_two() {
        let g = complete(3);
        let leaves = BTreeMap::from([(1, EdgeId(0)), (2, EdgeId(1)), (3, EdgeId(2))]);
        let bd = BranchDecomposition::from_tree(4, &[(0, 1), (0, 2), (0, 3)], leaves).unwrap();
        assert_eq!(width_of(&g, &bd).unwrap(), 2);
    }

    #[test]
    fn doubled_edge_has_width_two() {
        let g = cycle(2);
        let bd = BranchDecomposition::from_tree(2, &[(0, 1)], BTreeMap::from([(0, EdgeId(0)), (1, EdgeId(1))])).unwrap();
        assert_eq!(width_of(&g, &bd).unwrap(), 2);
    }

    #[test]
    fn malformed_decompositions_are_rejected() {
        let g = complete(3);
        // A path of three leaves: the middle node is a leaf of degree 2.
        let leaves = BTreeMap::from([(0, EdgeId(0)), (1, EdgeId(1)), (2, EdgeId(2))]);
        let bd = BranchDecomposition::from_tree(3, &[(0, 1), (1, 2)], leaves).unwrap();
        assert!(width_of(&g, &bd).is_err());
        let leaves = BTreeMap::from([(1, EdgeId(0)), (2, EdgeId(1)), (3, EdgeId(0))]);
        let bd = BranchDecomposition::from_tree(4, &[(0, 1), (0, 2), (0, 3)], leaves).unwrap();
        assert!(width_of(&g, &bd).is_err());
    }

    #[test]
    fn cylinders() {
        assert!(is_isomorphic(&cylinder(3, 1).unwrap(), &complete(3)).unwrap());
        assert!(is_isomorphic(&cylinder(4, 2).unwrap(), &cube()).unwrap());
        let c = cylinder(4, 4).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (16, 28));
        assert!(cylinder(2, 3).is_err());
        assert!(cylinder(3, 0).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = complete(4);
        let (_, bd) = branchwidth_upper(&g);
        assert_eq!(BranchDecomposition::parse(&bd.to_text()).unwrap(), bd);
    }
}
