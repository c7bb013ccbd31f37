//! Model search: backtracking over vertex maps, then greedy and exact
//! edge-disjoint routing of the pattern edges.

use std::collections::{BTreeMap, VecDeque};

use super::{ImmersionModel, Mode};
use crate::connectivity::local_edge_connectivity;
use crate::error::Result;
use crate::multigraph::{EdgeId, MultiGraph, Path, VertexId};

struct Host {
    ids: Vec<VertexId>,
    edge_ids: Vec<EdgeId>,
    /// `(edge index, other end)`, sorted by other end then edge id.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Host {
    fn new(g: &MultiGraph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edge_ids = Vec::new();
        let mut adj = vec![Vec::new(); ids.len()];
        for (k, (e, u, v)) in g.edges().enumerate() {
            edge_ids.push(e);
            adj[index[&u]].push((k, index[&v]));
            adj[index[&v]].push((k, index[&u]));
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|&(k, y)| (y, k));
        }
        Host { ids, edge_ids, adj }
    }
}

pub(super) fn search(g: &MultiGraph, h: &MultiGraph, mode: Mode) -> Result<Option<ImmersionModel>> {
    if h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let (gd, hd) = (g.degree_sequence(), h.degree_sequence());
    if hd.iter().zip(&gd).any(|(a, b)| a > b) {
        return Ok(None);
    }
    let host = Host::new(g);
    let hv: Vec<VertexId> = h.vertices().collect();
    let hidx: BTreeMap<VertexId, usize> = hv.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let hn = hv.len();
    let mut hmult = vec![vec![0usize; hn]; hn];
    for (_, u, w) in h.edges() {
        hmult[hidx[&u]][hidx[&w]] += 1;
        hmult[hidx[&w]][hidx[&u]] += 1;
    }
    let hdeg: Vec<usize> = hv.iter().map(|&v| h.degree(v)).collect();
    let mut hlambda = vec![vec![0usize; hn]; hn];
    for a in 0..hn {
        for b in a + 1..hn {
            let l = local_edge_connectivity(h, hv[a], hv[b]);
            hlambda[a][b] = l;
            hlambda[b][a] = l;
        }
    }
    let mut order: Vec<usize> = (0..hn).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(hdeg[i]), i));
    // Twins (equal multiplicity to every third vertex) are interchangeable,
    // so their images are forced into increasing order.
    let twin = |a: usize, b: usize| (0..hn).all(|x| x == a || x == b || hmult[a][x] == hmult[b][x]);
    let twin_prev: Vec<Option<usize>> = (0..hn)
        .map(|k| (0..k).rev().find(|&j| twin(order[j], order[k])))
        .collect();
    let demands: Vec<(EdgeId, usize, usize)> = h.edges().map(|(e, u, w)| (e, hidx[&u], hidx[&w])).collect();

    let mut s = MapSearch {
        g,
        host: &host,
        mode,
        order,
        twin_prev,
        hdeg,
        hlambda,
        demands,
        glambda: BTreeMap::new(),
        image: vec![usize::MAX; hn],
        used: vec![false; host.ids.len()],
    };
    let Some(paths) = s.extend(0) else {
        return Ok(None);
    };
    let vertex_map = (0..hn).map(|i| (hv[i], host.ids[s.image[i]])).collect();
    let mut branch_paths = BTreeMap::new();
    for (k, &(e, u, _)) in s.demands.iter().enumerate() {
        let edges: Vec<EdgeId> = paths[k].iter().map(|&x| host.edge_ids[x]).collect();
        branch_paths.insert(e, Path::from_edges(g, host.ids[s.image[u]], &edges)?);
    }
    Ok(Some(ImmersionModel { vertex_map, branch_paths }))
}

struct MapSearch<'a> {
    g: &'a MultiGraph,
    host: &'a Host,
    mode: Mode,
    order: Vec<usize>,
    twin_prev: Vec<Option<usize>>,
    hdeg: Vec<usize>,
    hlambda: Vec<Vec<usize>>,
    demands: Vec<(EdgeId, usize, usize)>,
    glambda: BTreeMap<(usize, usize), usize>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl MapSearch<'_> {
    fn lambda(&mut self, a: usize, b: usize) -> usize {
        let key = (a.min(b), a.max(b));
        if let Some(&l) = self.glambda.get(&key) {
            return l;
        }
        let l = local_edge_connectivity(self.g, self.host.ids[a], self.host.ids[b]);
        self.glambda.insert(key, l);
        l
    }

    fn extend(&mut self, k: usize) -> Option<Vec<Vec<usize>>> {
        if k == self.order.len() {
            let demands: Vec<(usize, usize)> =
                self.demands.iter().map(|&(_, u, w)| (self.image[u], self.image[w])).collect();
            let mut is_image = vec![false; self.host.ids.len()];
            for &x in &self.image {
                is_image[x] = true;
            }
            let mut router = Router::new(self.host, self.mode, demands, is_image);
            return router.greedy().or_else(|| router.exact());
        }
        let u = self.order[k];
        let floor = self.twin_prev[k].map(|j| self.image[self.order[j]]);
        for x in 0..self.host.ids.len() {
            if self.used[x] || self.host.adj[x].len() < self.hdeg[u] || floor.is_some_and(|f| x < f) {
                continue;
            }
            let mut ok = true;
            for j in 0..k {
                let w = self.order[j];
                let need = self.hlambda[u][w];
                if need > 0 && self.lambda(x, self.image[w]) < need {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            self.image[u] = x;
            self.used[x] = true;
            if let Some(found) = self.extend(k + 1) {
                return Some(found);
            }
            self.used[x] = false;
            self.image[u] = usize::MAX;
        }
        None
    }
}

struct Router<'a> {
    host: &'a Host,
    mode: Mode,
    demands: Vec<(usize, usize)>,
    is_image: Vec<bool>,
    used_edge: Vec<bool>,
    /// Interior vertices already taken (topological mode only).
    taken: Vec<bool>,
    paths: Vec<Vec<usize>>,
}

impl<'a> Router<'a> {
    fn new(host: &'a Host, mode: Mode, demands: Vec<(usize, usize)>, is_image: Vec<bool>) -> Self {
        let n = host.ids.len();
        let k = demands.len();
        Router {
            host,
            mode,
            demands,
            is_image,
            used_edge: vec![false; host.edge_ids.len()],
            taken: vec![false; n],
            paths: vec![Vec::new(); k],
        }
    }

    fn reset(&mut self) {
        self.used_edge.iter_mut().for_each(|b| *b = false);
        self.taken.iter_mut().for_each(|b| *b = false);
    }

    fn may_pass(&self, y: usize) -> bool {
        match self.mode {
            Mode::Weak => true,
            Mode::Strong => !self.is_image[y],
            Mode::Topological => !self.is_image[y] && !self.taken[y],
        }
    }

    fn commit(&mut self, k: usize, verts: &[usize], edges: &[usize], on: bool) {
        for &e in edges {
            self.used_edge[e] = on;
        }
        if self.mode == Mode::Topological {
            for &x in &verts[1..verts.len() - 1] {
                self.taken[x] = on;
            }
        }
        if on {
            self.paths[k] = edges.to_vec();
        }
    }

    /// Shortest residual path from s to t, as (vertices, edges).
    fn shortest(&self, s: usize, t: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.host.ids.len();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &(e, y) in &self.host.adj[x] {
                if self.used_edge[e] || seen[y] {
                    continue;
                }
                if y != t && !self.may_pass(y) {
                    continue;
                }
                seen[y] = true;
                prev[y] = Some((x, e));
                if y == t {
                    let mut verts = vec![t];
                    let mut edges = Vec::new();
                    let mut at = t;
                    while let Some((p, e)) = prev[at] {
                        verts.push(p);
                        edges.push(e);
                        at = p;
                    }
                    verts.reverse();
                    edges.reverse();
                    return Some((verts, edges));
                }
                queue.push_back(y);
            }
        }
        None
    }

    fn greedy(&mut self) -> Option<Vec<Vec<usize>>> {
        for k in 0..self.demands.len() {
            let (s, t) = self.demands[k];
            match self.shortest(s, t) {
                Some((verts, edges)) => self.commit(k, &verts, &edges, true),
                None => {
                    self.reset();
                    return None;
                }
            }
        }
        Some(self.paths.clone())
    }

    fn exact(&mut self) -> Option<Vec<Vec<usize>>> {
        self.reset();
        self.route(0).then(|| self.paths.clone())
    }

    /// Necessary conditions for routing demands `k..`: enough free edges at
    /// every endpoint and each pair still connected.
    fn feasible(&self, k: usize) -> bool {
        let mut need = vec![0usize; self.host.ids.len()];
        for &(s, t) in &self.demands[k..] {
            need[s] += 1;
            need[t] += 1;
        }
        for (x, &n) in need.iter().enumerate() {
            if n > 0 && self.host.adj[x].iter().filter(|(e, _)| !self.used_edge[*e]).count() < n {
                return false;
            }
        }
        self.demands[k..].iter().all(|&(s, t)| self.shortest(s, t).is_some())
    }

    fn route(&mut self, k: usize) -> bool {
        if k == self.demands.len() {
            return true;
        }
        if !self.feasible(k) {
            return false;
        }
        let (s, t) = self.demands[k];
        let mut on_path = vec![false; self.host.ids.len()];
        on_path[s] = true;
        let mut verts = vec![s];
        let mut edges = Vec::new();
        self.walk(k, t, &mut on_path, &mut verts, &mut edges)
    }

    fn walk(&mut self, k: usize, t: usize, on_path: &mut [bool], verts: &mut Vec<usize>, edges: &mut Vec<usize>) -> bool {
        let x = *verts.last().unwrap();
        let host = self.host;
        let mut last_y = usize::MAX;
        for &(e, y) in &host.adj[x] {
            if self.used_edge[e] || y == last_y {
                continue;
            }
            // Unused parallel edges are interchangeable: try only the first.
            last_y = y;
            if on_path[y] {
                continue;
            }
            if y == t {
                verts.push(y);
                edges.push(e);
                self.commit(k, verts, edges, true);
                if self.route(k + 1) {
                    return true;
                }
                self.commit(k, verts, edges, false);
                verts.pop();
                edges.pop();
                continue;
            }
            if !self.may_pass(y) {
                continue;
            }
            self.used_edge[e] = true;
            on_path[y] = true;
            verts.push(y);
            edges.push(e);
            let found = self.walk(k, t, on_path, verts, edges);
            if found {
                return true;
            }
            verts.pop();
            edges.pop();
            on_path[y] = false;
            self.used_edge[e] = false;
        }
        false
    }
}
