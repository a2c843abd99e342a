//! Undirected simple graphs over dense 0-based vertex ids.

use std::collections::VecDeque;

use crate::error::{Result, SprError};

pub type Vertex = usize;

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); vertex_count],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(SprError::Validation(format!(
                "edge {u}-{v} out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(SprError::Validation(format!("self-loop on {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(SprError::Validation(format!("duplicate edge {u}-{v}"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.adj.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `keep`, on the same vertex id space: dropped
    /// vertices stay as isolated ids so paths and layer indices keep their
    /// meaning.
    pub fn induced(&self, keep: &[bool]) -> Graph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, ns)| {
                if keep[u] {
                    ns.iter().copied().filter(|&v| keep[v]).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        Graph { adj }
    }

    /// Sorted common neighbourhood of `u` and `v`.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Single-source BFS distances; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = Graph::new(3);
        g.add_edge(0, 1).unwrap();
        assert!(g.add_edge(1, 0).is_err());
        assert!(g.add_edge(2, 2).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn induced_keeps_ids() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = g.induced(&[true, true, false, true]);
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3)]);
        assert_eq!(h.degree(2), 0);
    }

    #[test]
    fn common_neighbors_sorted() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (0, 4)]).unwrap();
        assert_eq!(g.common_neighbors(0, 1), vec![2, 3]);
    }
}
