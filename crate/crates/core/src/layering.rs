//! Distance layers of the shortest st-paths and the path / sequence types
//! that live in them.

use std::fmt;

use crate::error::{Result, SprError};
use crate::graph::{Graph, Vertex};

/// Layers `L_0..L_d`: `L_i` holds the vertices at distance `i` from `s` that
/// lie on some shortest st-path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    s: Vertex,
    t: Vertex,
    d: usize,
    dist_s: Vec<Option<usize>>,
    dist_t: Vec<Option<usize>>,
    layers: Vec<Vec<Vertex>>,
    layer_of: Vec<Option<usize>>,
}

impl Layering {
    pub fn compute(g: &Graph, s: Vertex, t: Vertex) -> Result<Self> {
        if s == t || !g.contains(s) || !g.contains(t) {
            return Err(SprError::InvalidEndpoints);
        }
        let dist_s = g.bfs_distances(s);
        let d = dist_s[t].ok_or(SprError::NoPath)?;
        let dist_t = g.bfs_distances(t);
        let mut layers = vec![Vec::new(); d + 1];
        let mut layer_of = vec![None; g.vertex_count()];
        for v in 0..g.vertex_count() {
            if let (Some(a), Some(b)) = (dist_s[v], dist_t[v]) {
                if a + b == d {
                    layers[a].push(v);
                    layer_of[v] = Some(a);
                }
            }
        }
        Ok(Layering {
            s,
            t,
            d,
            dist_s,
            dist_t,
            layers,
            layer_of,
        })
    }

    pub fn s(&self) -> Vertex {
        self.s
    }

    pub fn t(&self) -> Vertex {
        self.t
    }

    /// Length (edge count) of every shortest st-path.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn layer(&self, i: usize) -> &[Vertex] {
        &self.layers[i]
    }

    pub fn layers(&self) -> &[Vec<Vertex>] {
        &self.layers
    }

    pub fn layer_of(&self, v: Vertex) -> Option<usize> {
        self.layer_of.get(v).copied().flatten()
    }

    pub fn dist_s(&self, v: Vertex) -> Option<usize> {
        self.dist_s[v]
    }

    pub fn dist_t(&self, v: Vertex) -> Option<usize> {
        self.dist_t[v]
    }

    /// Mask of vertices lying on some shortest st-path.
    pub fn on_shortest_path_mask(&self) -> Vec<bool> {
        self.layer_of.iter().map(Option::is_some).collect()
    }

    pub fn layered_vertex_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// `N⁻(v)`: neighbours of `v` in the previous layer, sorted.
    pub fn in_neighbors(&self, g: &Graph, v: Vertex) -> Vec<Vertex> {
        self.adjacent_in_layer(g, v, -1)
    }

    /// `N⁺(v)`: neighbours of `v` in the next layer, sorted.
    pub fn out_neighbors(&self, g: &Graph, v: Vertex) -> Vec<Vertex> {
        self.adjacent_in_layer(g, v, 1)
    }

    fn adjacent_in_layer(&self, g: &Graph, v: Vertex, offset: isize) -> Vec<Vertex> {
        let Some(i) = self.layer_of(v) else {
            return Vec::new();
        };
        let Some(target) = i.checked_add_signed(offset) else {
            return Vec::new();
        };
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.layer_of(w) == Some(target))
            .collect()
    }

    /// Lexicographically smallest shortest st-path.
    pub fn first_path(&self, g: &Graph) -> StPath {
        let mut vertices = vec![self.s];
        let mut cur = self.s;
        for i in 1..=self.d {
            cur = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| self.layer_of(w) == Some(i))
                .expect("every layered vertex has an out-neighbour");
            vertices.push(cur);
        }
        StPath(vertices)
    }
}

/// A shortest st-path, one vertex per layer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StPath(pub Vec<Vertex>);

impl StPath {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Vertex in layer `i`.
    pub fn at(&self, i: usize) -> Vertex {
        self.0[i]
    }

    /// Copy with the layer-`i` vertex replaced.
    pub fn with(&self, i: usize, v: Vertex) -> StPath {
        let mut p = self.clone();
        p.0[i] = v;
        p
    }

    /// Number of layers where the two paths disagree.
    pub fn diff_count(&self, other: &StPath) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }

    /// `|V(P) \ V(Q)|`.
    pub fn missing_from(&self, other: &StPath) -> usize {
        self.0.iter().filter(|v| !other.0.contains(v)).count()
    }
}

impl fmt::Display for StPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl From<Vec<Vertex>> for StPath {
    fn from(v: Vec<Vertex>) -> Self {
        StPath(v)
    }
}

/// Walk in the solution graph: consecutive paths differ in exactly one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RerouteSequence(pub Vec<StPath>);

impl RerouteSequence {
    pub fn single(p: StPath) -> Self {
        RerouteSequence(vec![p])
    }

    pub fn paths(&self) -> &[StPath] {
        &self.0
    }

    /// Number of rerouting steps.
    pub fn steps(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn first(&self) -> Option<&StPath> {
        self.0.first()
    }

    pub fn last(&self) -> Option<&StPath> {
        self.0.last()
    }

    /// Appends `other`, skipping its first path when it repeats our last one.
    pub fn extend_from(&mut self, other: &RerouteSequence) {
        let skip = match (self.0.last(), other.0.first()) {
            (Some(a), Some(b)) if a == b => 1,
            _ => 0,
        };
        self.0.extend(other.0.iter().skip(skip).cloned());
    }

    pub fn reversed(&self) -> RerouteSequence {
        RerouteSequence(self.0.iter().rev().cloned().collect())
    }
}

pub fn is_shortest_st_path(g: &Graph, lay: &Layering, p: &[Vertex]) -> bool {
    if p.len() != lay.d() + 1 || p[0] != lay.s() || p[lay.d()] != lay.t() {
        return false;
    }
    if p.iter()
        .enumerate()
        .any(|(i, &v)| lay.layer_of(v) != Some(i))
    {
        return false;
    }
    p.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

pub(crate) fn check_path(g: &Graph, lay: &Layering, p: &StPath, name: &str) -> Result<()> {
    if is_shortest_st_path(g, lay, p.vertices()) {
        Ok(())
    } else {
        Err(SprError::Validation(format!(
            "{name} = [{p}] is not a shortest st-path"
        )))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationReason {
    EmptySequence,
    NotShortestPath,
    DiffersIn(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub reason: ViolationReason,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.reason {
            ViolationReason::EmptySequence => write!(f, "empty sequence"),
            ViolationReason::NotShortestPath => {
                write!(f, "path {} is not a shortest st-path", self.index)
            }
            ViolationReason::DiffersIn(k) => write!(
                f,
                "path {} differs in {k} vertices from its predecessor",
                self.index
            ),
        }
    }
}

/// Checks every path and every consecutive pair; reports the first offence.
pub fn validate_reroute_sequence(
    g: &Graph,
    lay: &Layering,
    seq: &[StPath],
) -> std::result::Result<(), Violation> {
    if seq.is_empty() {
        return Err(Violation {
            index: 0,
            reason: ViolationReason::EmptySequence,
        });
    }
    for (index, p) in seq.iter().enumerate() {
        if !is_shortest_st_path(g, lay, p.vertices()) {
            return Err(Violation {
                index,
                reason: ViolationReason::NotShortestPath,
            });
        }
        if index > 0 {
            let k = seq[index - 1].diff_count(p);
            if k != 1 {
                return Err(Violation {
                    index,
                    reason: ViolationReason::DiffersIn(k),
                });
            }
        }
    }
    Ok(())
}
