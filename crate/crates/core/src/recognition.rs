//! Graph class recognition: induced claws and chordality.

use std::fmt;

use crate::graph::{Graph, Vertex};

/// Induced `K_{1,3}`: `center` adjacent to all three pairwise non-adjacent leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claw {
    pub center: Vertex,
    pub leaves: [Vertex; 3],
}

impl Claw {
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let [a, b, c] = self.leaves;
        self.leaves.iter().all(|&l| g.has_edge(self.center, l))
            && !g.has_edge(a, b)
            && !g.has_edge(a, c)
            && !g.has_edge(b, c)
    }
}

impl fmt::Display for Claw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.leaves;
        write!(
            f,
            "claw centred at {} with leaves {a}, {b}, {c}",
            self.center
        )
    }
}

/// First induced claw in (center, leaves) lexicographic order, if any.
pub fn find_claw(g: &Graph) -> Option<Claw> {
    for c in 0..g.vertex_count() {
        let ns = g.neighbors(c);
        for (i, &a) in ns.iter().enumerate() {
            for (j, &b) in ns.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &x in &ns[j + 1..] {
                    if !g.has_edge(a, x) && !g.has_edge(b, x) {
                        return Some(Claw {
                            center: c,
                            leaves: [a, b, x],
                        });
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// Perfect elimination ordering: each vertex's later neighbours form a clique.
    Chordal(Vec<Vertex>),
    NotChordal,
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Maximum-cardinality search, then verification of the reversed visit order.
pub fn chordality_check(g: &Graph) -> Chordality {
    let order = mcs_elimination_order(g);
    if is_perfect_elimination_ordering(g, &order) {
        Chordality::Chordal(order)
    } else {
        Chordality::NotChordal
    }
}

fn mcs_elimination_order(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        numbered[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

pub fn is_perfect_elimination_ordering(g: &Graph, order: &[Vertex]) -> bool {
    let n = g.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<_> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        later
            .iter()
            .enumerate()
            .all(|(i, &a)| later[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}
