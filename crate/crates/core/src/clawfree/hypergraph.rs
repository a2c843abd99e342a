use std::collections::VecDeque;

use crate::error::{Result, SprError};
use crate::graph::{Graph, Vertex};
use crate::layering::Layering;

/// A maximal in-neighbourhood `N⁻(witness)` inside `L_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperedge {
    pub members: Vec<Vertex>,
    pub witness: Vertex,
}

/// `H_i`: vertex set `L_i`, one hyperedge per distinct maximal in-neighbourhood
/// of an `L_{i+1}` vertex.
#[derive(Debug, Clone)]
pub struct LayerHypergraph {
    pub layer_index: usize,
    pub vertices: Vec<Vertex>,
    pub hyperedges: Vec<Hyperedge>,
    component: Vec<usize>,
}

/// `a ⊂ b` on sorted slices.
pub(crate) fn is_strict_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

pub(crate) fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// No vertex of the same layer has a strictly larger in-neighbourhood.
pub fn has_maximal_in(g: &Graph, lay: &Layering, v: Vertex) -> bool {
    has_maximal(g, lay, v, Layering::in_neighbors)
}

/// No vertex of the same layer has a strictly larger out-neighbourhood.
pub fn has_maximal_out(g: &Graph, lay: &Layering, v: Vertex) -> bool {
    has_maximal(g, lay, v, Layering::out_neighbors)
}

fn has_maximal(
    g: &Graph,
    lay: &Layering,
    v: Vertex,
    side: fn(&Layering, &Graph, Vertex) -> Vec<Vertex>,
) -> bool {
    let Some(i) = lay.layer_of(v) else {
        return false;
    };
    let own = side(lay, g, v);
    lay.layer(i)
        .iter()
        .all(|&u| !is_strict_subset(&own, &side(lay, g, u)))
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller root so component ids follow vertex order
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

pub fn build_layer_hypergraph(g: &Graph, lay: &Layering, i: usize) -> Result<LayerHypergraph> {
    let max = lay.d().saturating_sub(1);
    if i == 0 || i > max {
        return Err(SprError::LayerOutOfRange { index: i, max });
    }
    let vertices = lay.layer(i).to_vec();
    // ascending witnesses: duplicates keep the smallest-id witness
    let mut candidates: Vec<Hyperedge> = Vec::new();
    for &a in lay.layer(i + 1) {
        let members = lay.in_neighbors(g, a);
        if !candidates.iter().any(|h| h.members == members) {
            candidates.push(Hyperedge {
                members,
                witness: a,
            });
        }
    }
    let hyperedges: Vec<Hyperedge> = candidates
        .iter()
        .filter(|h| {
            !candidates
                .iter()
                .any(|o| is_strict_subset(&h.members, &o.members))
        })
        .cloned()
        .collect();

    let pos = |v: Vertex| vertices.binary_search(&v).expect("member of L_i");
    let mut dsu = Dsu::new(vertices.len());
    for h in &hyperedges {
        let first = pos(h.members[0]);
        for &m in &h.members[1..] {
            dsu.union(first, pos(m));
        }
    }
    let roots: Vec<usize> = (0..vertices.len()).map(|k| dsu.find(k)).collect();
    let mut ids = vec![usize::MAX; vertices.len()];
    let mut next = 0;
    let component = roots
        .iter()
        .map(|&r| {
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
            ids[r]
        })
        .collect();
    Ok(LayerHypergraph {
        layer_index: i,
        vertices,
        hyperedges,
        component,
    })
}

impl LayerHypergraph {
    fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Component id of `v`; ids are numbered by smallest member.
    pub fn component_of(&self, v: Vertex) -> Option<usize> {
        self.position(v).map(|k| self.component[k])
    }

    pub fn component_count(&self) -> usize {
        self.component.iter().max().map_or(0, |m| m + 1)
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.component_count()];
        for (k, &c) in self.component.iter().enumerate() {
            out[c].push(self.vertices[k]);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Whether some hyperedge contains both `u` and `v`.
    pub fn linked(&self, u: Vertex, v: Vertex) -> bool {
        self.hyperedges
            .iter()
            .any(|h| h.members.binary_search(&u).is_ok() && h.members.binary_search(&v).is_ok())
    }

    /// Neighbours of `v` in the 2-section of the hypergraph, sorted.
    pub fn linked_vertices(&self, v: Vertex) -> Vec<Vertex> {
        self.vertices
            .iter()
            .copied()
            .filter(|&u| u != v && self.linked(u, v))
            .collect()
    }

    /// Shortest hypergraph walk from `from` to `to` by BFS over the
    /// 2-section; ties go to the smallest vertex id.
    pub fn shortest_path(&self, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
        let (a, b) = (self.position(from)?, self.position(to)?);
        let mut parent = vec![usize::MAX; self.vertices.len()];
        parent[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if u == b {
                break;
            }
            for w in self.linked_vertices(self.vertices[u]) {
                let k = self.position(w).unwrap();
                if parent[k] == usize::MAX {
                    parent[k] = u;
                    queue.push_back(k);
                }
            }
        }
        if parent[b] == usize::MAX {
            return None;
        }
        let mut chain = vec![b];
        while *chain.last().unwrap() != a {
            chain.push(parent[*chain.last().unwrap()]);
        }
        Some(chain.into_iter().rev().map(|k| self.vertices[k]).collect())
    }
}
