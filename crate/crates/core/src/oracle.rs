//! Brute-force ground truth over the solution graph and the k-colour graph.
//!
//! Everything here materialises state spaces explicitly and is only meant for
//! instances small enough to enumerate. Sizes are bounded by a caller-supplied
//! cap and overflow is reported as [`SprError::Capacity`].

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Result, SprError};
use crate::graph::{Graph, Vertex};
use crate::layering::{check_path, Layering, RerouteSequence, StPath};

pub const DEFAULT_CAP: usize = 1_000_000;

/// All shortest st-paths in lexicographic order.
pub fn enumerate_shortest_paths(g: &Graph, lay: &Layering, cap: usize) -> Result<Vec<StPath>> {
    let mut out = Vec::new();
    let mut prefix = vec![lay.s()];
    extend_paths(g, lay, &mut prefix, cap, &mut out)?;
    Ok(out)
}

fn extend_paths(
    g: &Graph,
    lay: &Layering,
    prefix: &mut Vec<Vertex>,
    cap: usize,
    out: &mut Vec<StPath>,
) -> Result<()> {
    if prefix.len() == lay.d() + 1 {
        if out.len() == cap {
            return Err(SprError::Capacity { cap });
        }
        out.push(StPath(prefix.clone()));
        return Ok(());
    }
    let last = *prefix.last().unwrap();
    for w in lay.out_neighbors(g, last) {
        prefix.push(w);
        extend_paths(g, lay, prefix, cap, out)?;
        prefix.pop();
    }
    Ok(())
}

/// Number of shortest st-paths by the per-vertex recurrence over the layers.
pub fn count_shortest_paths(g: &Graph, lay: &Layering) -> BigUint {
    let mut count = vec![BigUint::zero(); g.vertex_count()];
    count[lay.s()] = BigUint::one();
    for i in 1..=lay.d() {
        for &v in lay.layer(i) {
            let total = lay
                .in_neighbors(g, v)
                .iter()
                .fold(BigUint::zero(), |acc, &u| acc + &count[u]);
            count[v] = total;
        }
    }
    count[lay.t()].clone()
}

/// Shortest st-paths adjacent to `p` in the solution graph, sorted.
pub fn path_neighbors(g: &Graph, lay: &Layering, p: &StPath) -> Vec<StPath> {
    let mut out = Vec::new();
    for i in 1..lay.d() {
        for w in g.common_neighbors(p.at(i - 1), p.at(i + 1)) {
            if w != p.at(i) && lay.layer_of(w) == Some(i) {
                out.push(p.with(i, w));
            }
        }
    }
    out.sort();
    out
}

/// `SP(G, s, t)` materialised.
#[derive(Debug, Clone)]
pub struct SolutionGraph {
    paths: Vec<StPath>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<StPath, usize>,
}

impl SolutionGraph {
    pub fn paths(&self) -> &[StPath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn index_of(&self, p: &StPath) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// BFS distances from path index `from`.
    pub fn distances(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(dist[u].unwrap() + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Builds the one-vertex-difference relation by bucketing paths on
/// "path with layer i blanked", one layer at a time.
pub fn build_solution_graph(paths: Vec<StPath>) -> Result<SolutionGraph> {
    let mut index = HashMap::with_capacity(paths.len());
    for (i, p) in paths.iter().enumerate() {
        if index.insert(p.clone(), i).is_some() {
            return Err(SprError::DuplicatePath { index: i });
        }
    }
    let len = paths.first().map_or(0, StPath::len);
    if paths.iter().any(|p| p.len() != len) {
        return Err(SprError::MixedLengths);
    }
    let mut adjacency = vec![Vec::new(); paths.len()];
    for layer in 0..len {
        let mut buckets: HashMap<Vec<Vertex>, Vec<usize>> = HashMap::new();
        for (i, p) in paths.iter().enumerate() {
            let mut key = p.0.clone();
            key[layer] = usize::MAX;
            buckets.entry(key).or_default().push(i);
        }
        for bucket in buckets.values().filter(|b| b.len() > 1) {
            for &a in bucket {
                adjacency[a].extend(bucket.iter().copied().filter(|&b| b != a));
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(SolutionGraph {
        paths,
        adjacency,
        index,
    })
}

fn lookup(sg: &SolutionGraph, p: &StPath, name: &str) -> Result<usize> {
    sg.index_of(p)
        .ok_or_else(|| SprError::NotASolution(format!("{name} = [{p}]")))
}

/// Distance from `p` to `q` in the solution graph, `None` if unreachable.
pub fn oracle_reachable(sg: &SolutionGraph, p: &StPath, q: &StPath) -> Result<Option<usize>> {
    let (a, b) = (lookup(sg, p, "P")?, lookup(sg, q, "Q")?);
    Ok(sg.distances(a)[b])
}

/// A shortest rerouting sequence from `p` to `q`, `None` if unreachable.
pub fn oracle_sequence(
    sg: &SolutionGraph,
    p: &StPath,
    q: &StPath,
) -> Result<Option<RerouteSequence>> {
    let (a, b) = (lookup(sg, p, "P")?, lookup(sg, q, "Q")?);
    let mut parent = vec![usize::MAX; sg.len()];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            break;
        }
        for &v in sg.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    if parent[b] == usize::MAX {
        return Ok(None);
    }
    let mut chain = vec![b];
    while *chain.last().unwrap() != a {
        chain.push(parent[*chain.last().unwrap()]);
    }
    chain.reverse();
    Ok(Some(RerouteSequence(
        chain.into_iter().map(|i| sg.paths[i].clone()).collect(),
    )))
}

pub fn oracle_connected(sg: &SolutionGraph) -> Result<bool> {
    if sg.is_empty() {
        return Err(SprError::NoPath);
    }
    Ok(sg.distances(0).iter().all(Option::is_some))
}

pub fn oracle_isolated_count(sg: &SolutionGraph) -> Result<usize> {
    if sg.is_empty() {
        return Err(SprError::NoPath);
    }
    Ok(sg.adjacency.iter().filter(|a| a.is_empty()).count())
}

/// Solution-graph component of `p`, explored lazily, sorted.
pub fn oracle_component(g: &Graph, lay: &Layering, p: &StPath, cap: usize) -> Result<Vec<StPath>> {
    check_path(g, lay, p, "P")?;
    let (mut seen, _) = lazy_bfs(g, lay, p, None, cap)?;
    seen.sort();
    Ok(seen)
}

/// Shortest rerouting sequence found by lazy BFS from `p`; never
/// materialises paths outside `p`'s component.
pub fn oracle_search(
    g: &Graph,
    lay: &Layering,
    p: &StPath,
    q: &StPath,
    cap: usize,
) -> Result<Option<RerouteSequence>> {
    check_path(g, lay, p, "P")?;
    check_path(g, lay, q, "Q")?;
    let (seen, parent) = lazy_bfs(g, lay, p, Some(q), cap)?;
    let Some(mut at) = seen.iter().position(|x| x == q) else {
        return Ok(None);
    };
    let mut chain = vec![seen[at].clone()];
    while at != 0 {
        at = parent[at];
        chain.push(seen[at].clone());
    }
    chain.reverse();
    Ok(Some(RerouteSequence(chain)))
}

fn lazy_bfs(
    g: &Graph,
    lay: &Layering,
    start: &StPath,
    target: Option<&StPath>,
    cap: usize,
) -> Result<(Vec<StPath>, Vec<usize>)> {
    if cap == 0 {
        return Err(SprError::Capacity { cap });
    }
    let mut seen = vec![start.clone()];
    let mut parent = vec![0];
    let mut index = HashMap::from([(start.clone(), 0usize)]);
    let mut head = 0;
    while head < seen.len() {
        if target == Some(&seen[head]) {
            break;
        }
        for next in path_neighbors(g, lay, &seen[head]) {
            if index.contains_key(&next) {
                continue;
            }
            if seen.len() == cap {
                return Err(SprError::Capacity { cap });
            }
            index.insert(next.clone(), seen.len());
            seen.push(next);
            parent.push(head);
        }
        head += 1;
    }
    Ok((seen, parent))
}

/// Colour assignment, one colour in `1..=k` per vertex.
pub type Coloring = Vec<usize>;

pub fn is_proper_coloring(g: &Graph, k: usize, c: &[usize]) -> bool {
    c.len() == g.vertex_count()
        && c.iter().all(|&x| (1..=k).contains(&x))
        && g.edges().all(|(u, v)| c[u] != c[v])
}

/// `C_k(G)`: proper k-colourings, adjacent when they differ at one vertex.
#[derive(Debug, Clone)]
pub struct ColorGraph {
    pub colorings: Vec<Coloring>,
    pub adjacency: Vec<Vec<usize>>,
}

/// Enumerates every proper k-colouring in lexicographic order.
pub fn build_color_graph(g: &Graph, k: usize, cap: usize) -> Result<ColorGraph> {
    let n = g.vertex_count();
    let mut colorings = Vec::new();
    let mut cur = vec![0; n];
    fn fill(
        g: &Graph,
        k: usize,
        v: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Coloring>,
        cap: usize,
    ) -> Result<()> {
        if v == cur.len() {
            if out.len() == cap {
                return Err(SprError::Capacity { cap });
            }
            out.push(cur.clone());
            return Ok(());
        }
        for c in 1..=k {
            if g.neighbors(v).iter().all(|&u| u > v || cur[u] != c) {
                cur[v] = c;
                fill(g, k, v + 1, cur, out, cap)?;
            }
        }
        Ok(())
    }
    fill(g, k, 0, &mut cur, &mut colorings, cap)?;
    let index: HashMap<&Coloring, usize> =
        colorings.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let adjacency = colorings
        .iter()
        .map(|c| {
            let mut adj: Vec<usize> = recolor_moves(g, k, c).iter().map(|m| index[m]).collect();
            adj.sort_unstable();
            adj
        })
        .collect();
    Ok(ColorGraph {
        colorings,
        adjacency,
    })
}

fn recolor_moves(g: &Graph, k: usize, c: &[usize]) -> Vec<Coloring> {
    let mut out = Vec::new();
    for v in 0..c.len() {
        for col in 1..=k {
            if col != c[v] && g.neighbors(v).iter().all(|&u| c[u] != col) {
                let mut next = c.to_vec();
                next[v] = col;
                out.push(next);
            }
        }
    }
    out
}

/// Shortest recolouring sequence from `alpha` to `beta` by BFS over `C_k(G)`.
pub fn color_oracle(
    g: &Graph,
    k: usize,
    alpha: &[usize],
    beta: &[usize],
    cap: usize,
) -> Result<Option<Vec<Coloring>>> {
    for (name, c) in [("alpha", alpha), ("beta", beta)] {
        if !is_proper_coloring(g, k, c) {
            return Err(SprError::Validation(format!(
                "{name} is not a proper {k}-coloring"
            )));
        }
    }
    if cap == 0 {
        return Err(SprError::Capacity { cap });
    }
    let mut seen: Vec<Coloring> = vec![alpha.to_vec()];
    let mut parent = vec![0usize];
    let mut index = HashMap::from([(alpha.to_vec(), 0usize)]);
    let mut head = 0;
    while head < seen.len() && seen[head] != beta {
        for next in recolor_moves(g, k, &seen[head]) {
            if index.contains_key(&next) {
                continue;
            }
            if seen.len() == cap {
                return Err(SprError::Capacity { cap });
            }
            index.insert(next.clone(), seen.len());
            seen.push(next);
            parent.push(head);
        }
        head += 1;
    }
    let Some(&(mut at)) = index.get(beta) else {
        return Ok(None);
    };
    let mut chain = vec![seen[at].clone()];
    while at != 0 {
        at = parent[at];
        chain.push(seen[at].clone());
    }
    chain.reverse();
    Ok(Some(chain))
}
