#![allow(dead_code)]

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spr::generate::{k_tree, line_graph, max_distance_pair, random_graph};
use spr::{Graph, Layering, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seeded k-tree (k alternating 2 / 3) on 6..=16 vertices with s, t at
/// maximum distance.
pub fn ktree_instance(seed: u64) -> (Graph, Vertex, Vertex) {
    let mut r = rng(seed);
    let k = 2 + (seed % 2) as usize;
    let n = r.gen_range(k + 3..=16);
    let g = k_tree(n, k, r.gen()).unwrap();
    let (s, t) = max_distance_pair(&g).unwrap();
    (g, s, t)
}

/// Unordered pairs at distance at least `min`.
pub fn pairs_at_distance(g: &Graph, min: usize) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        for (t, d) in g.bfs_distances(s).into_iter().enumerate().skip(s + 1) {
            if d.is_some_and(|d| d >= min) {
                out.push((s, t));
            }
        }
    }
    out
}

/// Line graph of a seeded G(n, p) with at most 16 vertices, s and t a
/// random pair at distance >= 2. Retries until one fits.
pub fn line_graph_instance(seed: u64) -> (Graph, Vertex, Vertex) {
    let mut r = rng(seed);
    loop {
        // aim for 10..=16 base edges so the line graph fills the budget
        let n = r.gen_range(5..=12);
        let target = r.gen_range(10..=16) as f64;
        let p = (target / (n * (n - 1) / 2) as f64).min(1.0);
        let l = line_graph(&random_graph(n, p, r.gen()).unwrap());
        if l.vertex_count() > 16 {
            continue;
        }
        let pairs = pairs_at_distance(&l, 2);
        if let Some(&(s, t)) = pairs.choose(&mut r) {
            return (l, s, t);
        }
    }
}

pub fn in_nb(g: &Graph, lay: &Layering, v: Vertex) -> Vec<Vertex> {
    let Some(i) = lay.layer_of(v) else {
        return vec![];
    };
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|&w| i > 0 && lay.layer_of(w) == Some(i - 1))
        .collect()
}

pub fn out_nb(g: &Graph, lay: &Layering, v: Vertex) -> Vec<Vertex> {
    let Some(i) = lay.layer_of(v) else {
        return vec![];
    };
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|&w| lay.layer_of(w) == Some(i + 1))
        .collect()
}

pub fn subset(a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// Two `L_i` vertices are linked when they share an out-neighbour.
pub fn linked(g: &Graph, lay: &Layering, u: Vertex, v: Vertex) -> bool {
    let ou = out_nb(g, lay, u);
    out_nb(g, lay, v).iter().any(|z| ou.contains(z))
}

/// BFS distances inside `L_i` over the "shares an out-neighbour" relation.
pub fn layer_distances(g: &Graph, lay: &Layering, i: usize, from: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[from] = Some(0);
    let mut q = VecDeque::from([from]);
    while let Some(u) = q.pop_front() {
        for &v in lay.layer(i) {
            if dist[v].is_none() && v != u && linked(g, lay, u, v) {
                dist[v] = Some(dist[u].unwrap() + 1);
                q.push_back(v);
            }
        }
    }
    dist
}

/// Every shortest walk from `a` to `b` in the layer relation.
pub fn all_layer_shortest_paths(
    g: &Graph,
    lay: &Layering,
    i: usize,
    a: Vertex,
    b: Vertex,
) -> Vec<Vec<Vertex>> {
    let to_b = layer_distances(g, lay, i, b);
    let Some(len) = to_b[a] else { return vec![] };
    let mut out = Vec::new();
    let mut stack = vec![vec![a]];
    while let Some(walk) = stack.pop() {
        let last = *walk.last().unwrap();
        if last == b {
            out.push(walk);
            continue;
        }
        let remaining = len - (walk.len() - 1);
        for &v in lay.layer(i) {
            if to_b[v] == Some(remaining - 1) && linked(g, lay, last, v) {
                let mut w = walk.clone();
                w.push(v);
                stack.push(w);
            }
        }
    }
    out
}

pub fn maximal_in(g: &Graph, lay: &Layering, v: Vertex) -> bool {
    let own = in_nb(g, lay, v);
    let i = lay.layer_of(v).unwrap();
    lay.layer(i).iter().all(|&u| {
        let other = in_nb(g, lay, u);
        !(other.len() > own.len() && subset(&own, &other))
    })
}

pub fn maximal_out(g: &Graph, lay: &Layering, v: Vertex) -> bool {
    let own = out_nb(g, lay, v);
    let i = lay.layer_of(v).unwrap();
    lay.layer(i).iter().all(|&u| {
        let other = out_nb(g, lay, u);
        !(other.len() > own.len() && subset(&own, &other))
    })
}

/// Random claw-free graph with a prescribed layer structure: `L_0 = {s}`,
/// `L_d = {t}`, each vertex of `L_{i+1}` adjacent to an interval of `L_i`,
/// layers cliques or random, optional extra vertices off the layering.
/// Claws are removed by joining two leaves at most one layer apart.
pub fn layered_clawfree(seed: u64, max_n: usize) -> (Graph, Vertex, Vertex) {
    let mut r = rng(seed);
    let d = r.gen_range(2..=6);
    let mut layers: Vec<Vec<Vertex>> = vec![vec![0]];
    let mut next = 1;
    let mut budget = max_n.saturating_sub(2);
    for i in 1..d {
        let want = r
            .gen_range(1..=4)
            .min(budget.saturating_sub(d - 1 - i).max(1));
        budget -= want.min(budget);
        layers.push((next..next + want).collect());
        next += want;
    }
    layers.push(vec![next]);
    next += 1;
    let extra = r.gen_range(0..=2).min(max_n.saturating_sub(next));
    let mut g = Graph::new(next + extra);
    for i in 1..=d {
        let (prev, cur) = (&layers[i - 1], &layers[i]);
        // monotone intervals covering prev
        let m = cur.len();
        for (k, &v) in cur.iter().enumerate() {
            let lo = if k == 0 {
                0
            } else {
                r.gen_range(0..prev.len()) * k / m
            };
            let hi = if k + 1 == m {
                prev.len() - 1
            } else {
                (lo + r.gen_range(0..=1)).min(prev.len() - 1)
            };
            for &u in &prev[lo..=hi] {
                let _ = g.add_edge(u, v);
            }
        }
        for &u in prev {
            if g.neighbors(u).iter().all(|w| !cur.contains(w)) {
                let _ = g.add_edge(u, cur[r.gen_range(0..m)]);
            }
        }
        let clique = r.gen_bool(0.6);
        for a in 0..m {
            for b in a + 1..m {
                if clique || r.gen_bool(0.4) {
                    g.add_edge(cur[a], cur[b]).unwrap();
                }
            }
        }
    }
    for x in next..next + extra {
        let i = r.gen_range(1..d);
        let u = layers[i][r.gen_range(0..layers[i].len())];
        g.add_edge(x, u).unwrap();
        if r.gen_bool(0.5) {
            let w = layers[i + 1][r.gen_range(0..layers[i + 1].len())];
            let _ = g.add_edge(x, w);
        }
    }
    let layer_of = |v: Vertex| {
        layers
            .iter()
            .position(|l| l.contains(&v))
            .unwrap_or(usize::MAX / 2)
    };
    while let Some(c) = spr::find_claw(&g) {
        let [a, b, e] = c.leaves;
        let pair = [(a, b), (a, e), (b, e)]
            .into_iter()
            .min_by_key(|&(x, y)| layer_of(x).abs_diff(layer_of(y)))
            .unwrap();
        g.add_edge(pair.0, pair.1).unwrap();
    }
    (g, 0, next - 1)
}

/// k-tree where each new vertex joins a random k-clique containing the
/// previous vertex, which gives long, thick graphs with many shortest paths.
pub fn stretched_k_tree(n: usize, k: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut g = spr::fixtures::complete(k + 1);
    let mut last: Vec<Vertex> = (0..=k).collect();
    for v in k + 1..n {
        g.add_vertex();
        let drop = r.gen_range(0..k);
        let clique: Vec<Vertex> = last[..k]
            .iter()
            .copied()
            .enumerate()
            .filter(|&(i, _)| i != drop)
            .map(|(_, u)| u)
            .chain([last[k]])
            .collect();
        for &u in &clique {
            g.add_edge(u, v).unwrap();
        }
        last = clique;
        last.push(v);
    }
    g
}
