//! Demoucron–Malgrange–Pertuiset planarity on simple graphs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::multigraph::VertexId;

/// Neighbour rotations of a planar embedding of the simple graph
/// (`vertices`, `edges`), or `None` when it is not planar.
pub(super) fn embed_simple(
    vertices: &[VertexId],
    edges: &[(VertexId, VertexId)],
) -> Option<BTreeMap<VertexId, Vec<VertexId>>> {
    let index: BTreeMap<VertexId, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = vertices.len();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        let (a, b) = (index[&u], index[&v]);
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(&adj) {
        let nb = block_vertex_count(&block);
        if nb >= 3 && block.len() > 3 * nb - 6 {
            return None;
        }
        for (v, rot) in embed_block(&block)? {
            rotation[v].extend(rot);
        }
    }
    Some(
        rotation
            .into_iter()
            .enumerate()
            .map(|(i, rot)| (vertices[i], rot.into_iter().map(|j| vertices[j]).collect()))
            .collect(),
    )
}

fn block_vertex_count(block: &[(usize, usize)]) -> usize {
    block.iter().flat_map(|&(a, b)| [a, b]).collect::<BTreeSet<_>>().len()
}

/// Biconnected blocks as edge lists (Hopcroft–Tarjan with an edge stack).
fn blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, u: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for k in 0..s.adj[u].len() {
            let w = s.adj[u][k];
            if s.disc[w] == 0 {
                s.stack.push((u, w));
                dfs(s, w, Some(u));
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if Some(w) != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let n = adj.len();
    let mut s = State {
        adj,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.out
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Embeds one block; returns the neighbour rotation of each block vertex.
fn embed_block(block: &[(usize, usize)]) -> Option<BTreeMap<usize, Vec<usize>>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in block {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    for list in adj.values_mut() {
        list.sort_unstable();
    }
    if block.len() == 1 {
        let (a, b) = block[0];
        return Some(BTreeMap::from([(a, vec![b]), (b, vec![a])]));
    }

    let cycle = initial_cycle(&adj);
    let mut on: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..cycle.len() {
        done.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    let mut faces = vec![cycle, reversed];

    loop {
        let fragments = fragments(&adj, &on, &done);
        if fragments.is_empty() {
            break;
        }
        let mut best: Option<(usize, usize)> = None; // (admissible count, fragment)
        let mut admissible_of = Vec::with_capacity(fragments.len());
        for (k, (attach, _)) in fragments.iter().enumerate() {
            let adm: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| attach.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            if adm.is_empty() {
                return None;
            }
            if best.map_or(true, |(c, _)| adm.len() < c) {
                best = Some((adm.len(), k));
            }
            admissible_of.push(adm);
        }
        let (_, k) = best.unwrap();
        let path = &fragments[k].1;
        let fi = admissible_of[k][0];
        let face = faces.swap_remove(fi);
        let (f1, f2) = split_face(&face, path);
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            done.insert(key(w[0], w[1]));
        }
        on.extend(path.iter().copied());
    }

    // succ_v(u) = w whenever u, v, w are consecutive on a face.
    let mut succ: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            succ.insert((v, u), w);
        }
    }
    let mut out = BTreeMap::new();
    for (&v, nbrs) in &adj {
        let mut rot = vec![nbrs[0]];
        while rot.len() < nbrs.len() {
            rot.push(succ[&(v, *rot.last().unwrap())]);
        }
        debug_assert_eq!(succ[&(v, *rot.last().unwrap())], rot[0]);
        out.insert(v, rot);
    }
    Some(out)
}

/// A cycle through the lowest edge of a biconnected block.
fn initial_cycle(adj: &BTreeMap<usize, Vec<usize>>) -> Vec<usize> {
    let (&s, nbrs) = adj.iter().next().unwrap();
    let t = nbrs[0];
    // Shortest s-t path avoiding the edge st.
    let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::from([s]);
    prev.insert(s, s);
    while let Some(x) = queue.pop_front() {
        if x == t {
            break;
        }
        for &y in &adj[&x] {
            if (x == s && y == t) || prev.contains_key(&y) {
                continue;
            }
            prev.insert(y, x);
            queue.push_back(y);
        }
    }
    let mut cycle = vec![t];
    let mut at = t;
    while at != s {
        at = prev[&at];
        cycle.push(at);
    }
    cycle.reverse();
    cycle
}

/// Fragments of the block relative to the embedded part, each as its
/// attachment set and a path between two attachments through it.
fn fragments(
    adj: &BTreeMap<usize, Vec<usize>>,
    on: &BTreeSet<usize>,
    done: &BTreeSet<(usize, usize)>,
) -> Vec<(BTreeSet<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for (&u, nbrs) in adj {
        for &v in nbrs {
            if u < v && on.contains(&u) && on.contains(&v) && !done.contains(&(u, v)) {
                out.push((BTreeSet::from([u, v]), vec![u, v]));
            }
        }
    }
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for &start in adj.keys() {
        if on.contains(&start) || seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        seen.insert(start);
        let mut i = 0;
        while i < comp.len() {
            for &y in &adj[&comp[i]] {
                if !on.contains(&y) && seen.insert(y) {
                    comp.push(y);
                }
            }
            i += 1;
        }
        let inside: BTreeSet<usize> = comp.iter().copied().collect();
        let attach: BTreeSet<usize> = comp
            .iter()
            .flat_map(|x| adj[x].iter().copied())
            .filter(|y| on.contains(y))
            .collect();
        let a = *attach.iter().next().unwrap();
        let c = *adj[&a].iter().find(|y| inside.contains(y)).unwrap();
        let mut prev: BTreeMap<usize, usize> = BTreeMap::from([(c, c)]);
        let mut queue = VecDeque::from([c]);
        let mut path = None;
        while let Some(x) = queue.pop_front() {
            if let Some(&b) = adj[&x].iter().find(|&&y| y != a && on.contains(&y)) {
                let mut p = vec![b, x];
                let mut at = x;
                while at != c {
                    at = prev[&at];
                    p.push(at);
                }
                p.push(a);
                p.reverse();
                path = Some(p);
                break;
            }
            for &y in &adj[&x] {
                if inside.contains(&y) && !prev.contains_key(&y) {
                    prev.insert(y, x);
                    queue.push_back(y);
                }
            }
        }
        out.push((attach, path.expect("a block fragment has two attachments")));
    }
    out
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (a, b) = (path[0], *path.last().unwrap());
    let k = face.len();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut t = i;
    loop {
        f1.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % k;
    }
    f1.extend(inner.iter().rev().copied());
    let mut f2 = Vec::new();
    let mut t = j;
    loop {
        f2.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % k;
    }
    f2.extend(inner.iter().copied());
    (f1, f2)
}
