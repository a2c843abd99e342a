//! Small named instances shared by tests, examples and docs. Each returns
//! `(graph, s, t)`.

use crate::graph::{Graph, Vertex};

pub const DIAMOND_A: Vertex = 1;
pub const DIAMOND_B: Vertex = 2;

/// Single edge s–t.
pub fn k2() -> (Graph, Vertex, Vertex) {
    (Graph::from_edges(2, &[(0, 1)]).unwrap(), 0, 1)
}

/// s=0, a=1, b=2, t=3 with edges sa, sb, at, bt, ab. Chordal, claw-free, d=2.
pub fn diamond() -> (Graph, Vertex, Vertex) {
    let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)]).unwrap();
    (g, 0, 3)
}

/// Cycle 0-1-2-3-4-5-0 with s=0, t=3 antipodal. Claw-free, not chordal, d=3.
pub fn c6() -> (Graph, Vertex, Vertex) {
    (cycle(6), 0, 3)
}

/// Cycle 0-1-2-3-0 with s=0, t=2.
pub fn c4() -> (Graph, Vertex, Vertex) {
    (cycle(4), 0, 2)
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// `K_{1,3}` with centre 0.
pub fn claw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}
