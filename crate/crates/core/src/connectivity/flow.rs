//! Unit-capacity augmenting-path flow over a multigraph snapshot.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::multigraph::{EdgeId, MultiGraph, VertexId};

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
    /// The graph edge this arc belongs to; `None` for sink arcs.
    edge: Option<EdgeId>,
}

/// Residual network. Each undirected edge is a pair of mutually reverse arcs
/// of capacity one, so it can carry one unit in either direction.
#[derive(Debug, Clone)]
pub(crate) struct Network {
    ids: Vec<VertexId>,
    index: BTreeMap<VertexId, usize>,
    arcs: Vec<Vec<Arc>>,
}

impl Network {
    /// Network over `g` plus `extra` auxiliary nodes numbered after the
    /// graph's vertices.
    pub(crate) fn new(g: &MultiGraph, extra: usize) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut net = Network {
            arcs: vec![Vec::new(); ids.len() + extra],
            ids,
            index,
        };
        for (e, u, v) in g.edges() {
            let (a, b) = (net.index[&u], net.index[&v]);
            net.add_pair(a, b, 1, 1, Some(e));
        }
        net
    }

    pub(crate) fn node(&self, v: VertexId) -> usize {
        self.index[&v]
    }

    pub(crate) fn vertex(&self, i: usize) -> Option<VertexId> {
        self.ids.get(i).copied()
    }

    fn add_pair(&mut self, a: usize, b: usize, cap_ab: u32, cap_ba: u32, edge: Option<EdgeId>) {
        let ra = self.arcs[b].len();
        let rb = self.arcs[a].len();
        self.arcs[a].push(Arc { to: b, cap: cap_ab, rev: ra, edge });
        self.arcs[b].push(Arc { to: a, cap: cap_ba, rev: rb, edge });
    }

    /// Directed unit arc `from -> to` (used for super-sink arcs).
    pub(crate) fn add_directed(&mut self, from: usize, to: usize) {
        self.add_pair(from, to, 1, 0, None);
    }

    /// Augments until no path remains or `limit` units were sent.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut total = 0;
        while total < limit {
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
            let mut seen = vec![false; self.arcs.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for (i, arc) in self.arcs[x].iter().enumerate() {
                    if arc.cap > 0 && !seen[arc.to] {
                        seen[arc.to] = true;
                        prev[arc.to] = Some((x, i));
                        queue.push_back(arc.to);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut at = t;
            while let Some((x, i)) = prev[at] {
                let rev = self.arcs[x][i].rev;
                self.arcs[x][i].cap -= 1;
                self.arcs[at][rev].cap += 1;
                at = x;
            }
            total += 1;
        }
        total
    }

    /// Nodes reachable from `s` in the residual network.
    pub(crate) fn residual_reach(&self, s: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([s]);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for arc in &self.arcs[x] {
                if arc.cap > 0 && seen.insert(arc.to) {
                    stack.push(arc.to);
                }
            }
        }
        seen
    }

    /// Graph edges carrying one unit out of node `x`, as `(edge, head)`.
    pub(crate) fn flow_out(&self, x: usize) -> Vec<(EdgeId, usize)> {
        self.arcs[x]
            .iter()
            .filter_map(|arc| {
                let e = arc.edge?;
                // An undirected pair starts at (1, 1); a unit from x leaves (0, 2).
                (arc.cap == 0 && self.arcs[arc.to][arc.rev].cap == 2).then_some((e, arc.to))
            })
            .collect()
    }

    /// Whether the directed sink arc `x -> t` is saturated.
    pub(crate) fn sink_used(&self, x: usize, t: usize) -> bool {
        self.arcs[x].iter().any(|a| a.edge.is_none() && a.to == t && a.cap == 0)
    }
}

/// Edge connectivity between two vertices, counting parallel edges.
pub fn local_edge_connectivity(g: &MultiGraph, s: VertexId, t: VertexId) -> usize {
    if s == t {
        return usize::MAX;
    }
    let mut net = Network::new(g, 0);
    let (a, b) = (net.node(s), net.node(t));
    net.max_flow(a, b, usize::MAX)
}

/// λ(G): the minimum over all vertex pairs of the local edge connectivity.
/// Zero for disconnected graphs, `usize::MAX` for graphs with < 2 vertices.
pub fn edge_connectivity(g: &MultiGraph) -> usize {
    let mut vs = g.vertices();
    let Some(s) = vs.next() else {
        return usize::MAX;
    };
    vs.map(|t| local_edge_connectivity(g, s, t)).min().unwrap_or(usize::MAX)
}
