//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, SprError};
use crate::graph::{Graph, Vertex};

/// Random `k`-tree on `n` vertices: a `(k+1)`-clique, then each new vertex
/// is joined to a uniformly chosen existing `k`-clique.
pub fn k_tree(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k == 0 || n < k + 1 {
        return Err(SprError::Parameter(format!(
            "k-tree needs k >= 1 and n >= k + 1 (n = {n}, k = {k})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = crate::fixtures::complete(k + 1);
    let base: Vec<Vertex> = (0..=k).collect();
    let mut cliques: Vec<Vec<Vertex>> = (0..=k)
        .map(|skip| base.iter().copied().filter(|&v| v != skip).collect())
        .collect();
    for v in k + 1..n {
        g.add_vertex();
        let clique = cliques.choose(&mut rng).unwrap().clone();
        for &u in &clique {
            g.add_edge(u, v)?;
        }
        for skip in 0..k {
            let mut c = clique.clone();
            c[skip] = v;
            c.sort_unstable();
            cliques.push(c);
        }
    }
    Ok(g)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(SprError::Parameter(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Line graph: one vertex per edge of `g` (in [`Graph::edges`] order), two
/// adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut l = Graph::new(edges.len());
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            let (x, y) = edges[a];
            let (u, v) = edges[b];
            if x == u || x == v || y == u || y == v {
                l.add_edge(a, b).expect("fresh edge");
            }
        }
    }
    l
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(SprError::Parameter(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(crate::fixtures::cycle(n))
}

/// Lexicographically smallest pair `(s, t)`, `s < t`, at maximum finite
/// distance. `None` if the graph has no edge.
pub fn max_distance_pair(g: &Graph) -> Option<(Vertex, Vertex)> {
    let mut best: Option<(usize, Vertex, Vertex)> = None;
    for s in 0..g.vertex_count() {
        for (t, d) in g.bfs_distances(s).into_iter().enumerate().skip(s + 1) {
            if let Some(d) = d {
                if best.is_none_or(|(bd, _, _)| d > bd) {
                    best = Some((d, s, t));
                }
            }
        }
    }
    best.map(|(_, s, t)| (s, t))
}
