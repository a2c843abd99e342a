//! Reduction from 4-colour reconfiguration to shortest-path rerouting.
//!
//! For a graph `G` on `v_1..v_n` the target graph `G'` has a *main strand*
//! that chains one gadget per vertex of `G`: a black start vertex `s_i`,
//! four internally disjoint coloured paths of three vertices each, and a
//! black end vertex `t_i`. Layers are fixed by position: `s_i` sits in
//! layer `5i-4`, the coloured near-s / middle / near-t vertices in
//! `5i-3 .. 5i-1`, `t_i` in `5i`, and `d = 5n + 1`. A shortest path through
//! the main strand picks one colour per gadget, which is a colour assignment
//! of `G`.
//!
//! For every vertex `v_i` and colour pair `{c1, c2}` a *recoloring strand*
//! copies the gadgets. Gadgets of neighbours of `v_i` keep only the two
//! other colours, and gadget `i` itself is reduced to `s_i*`, `l`, `r`,
//! `t_i*`, with `l` and `r` attached to the `c1` and `c2` middle vertices
//! of the main strand. Strand gadgets before `i` hook into the next layer
//! of the main strand and gadgets after `i` into the previous layer, so a
//! path can slide into the strand from both ends and then flip the middle
//! vertex of gadget `i` between `c1` and `c2`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Result, SprError};
use crate::graph::{Graph, Vertex};
use crate::layering::{Layering, RerouteSequence, StPath};
use crate::oracle::{is_proper_coloring, Coloring};

pub const COLORS: usize = 4;

/// The six colour pairs, in the order strands are built.
pub const COLOR_PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// A 4-colour reconfiguration instance: can `alpha` be recoloured to `beta`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorPathInstance {
    pub graph: Graph,
    pub k: usize,
    pub alpha: Coloring,
    pub beta: Coloring,
}

impl ColorPathInstance {
    pub fn new(graph: Graph, alpha: Coloring, beta: Coloring) -> Self {
        ColorPathInstance {
            graph,
            k: COLORS,
            alpha,
            beta,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k != COLORS {
            return Err(SprError::Validation(format!(
                "reduction needs k = {COLORS}, got {}",
                self.k
            )));
        }
        if self.graph.vertex_count() == 0 {
            return Err(SprError::Validation("instance graph is empty".into()));
        }
        for (name, c) in [("alpha", &self.alpha), ("beta", &self.beta)] {
            if !is_proper_coloring(&self.graph, self.k, c) {
                return Err(SprError::Validation(format!(
                    "{name} is not a proper {}-coloring",
                    self.k
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shade {
    Black,
    Color(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Position {
    Start,
    NearS,
    Middle,
    NearT,
    End,
    /// Neighbour of `s_i*` in the strand's own gadget.
    L,
    /// Neighbour of `t_i*` in the strand's own gadget.
    R,
}

impl Position {
    /// Layer offset from `5 * gadget`.
    fn layer(self, gadget: usize) -> usize {
        let base = 5 * gadget;
        match self {
            Position::Start => base - 4,
            Position::NearS | Position::L => base - 3,
            Position::Middle => base - 2,
            Position::NearT | Position::R => base - 1,
            Position::End => base,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Position::Start => "start",
            Position::NearS => "near-s",
            Position::Middle => "middle",
            Position::NearT => "near-t",
            Position::End => "end",
            Position::L => "l",
            Position::R => "r",
        }
    }
}

/// What a vertex of `G'` stands for. Gadget and vertex indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Source,
    Sink,
    Main {
        gadget: usize,
        shade: Shade,
        position: Position,
    },
    Strand {
        vertex: usize,
        pair: (usize, usize),
        gadget: usize,
        shade: Shade,
        position: Position,
    },
}

impl Role {
    /// Layer this role occupies in a construction over `n` vertices.
    pub fn layer(&self, n: usize) -> usize {
        match *self {
            Role::Source => 0,
            Role::Sink => 5 * n + 1,
            Role::Main {
                gadget, position, ..
            }
            | Role::Strand {
                gadget, position, ..
            } => position.layer(gadget),
        }
    }

    pub fn shade(&self) -> Shade {
        match *self {
            Role::Source | Role::Sink => Shade::Black,
            Role::Main { shade, .. } | Role::Strand { shade, .. } => shade,
        }
    }

    pub fn is_main(&self) -> bool {
        matches!(self, Role::Source | Role::Sink | Role::Main { .. })
    }
}

impl fmt::Display for Shade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shade::Black => write!(f, "black"),
            Shade::Color(c) => write!(f, "c{c}"),
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Source => write!(f, "s"),
            Role::Sink => write!(f, "t"),
            Role::Main {
                gadget,
                shade,
                position,
            } => write!(f, "main {gadget} {shade} {}", position.name()),
            Role::Strand {
                vertex,
                pair: (c1, c2),
                gadget,
                shade,
                position,
            } => write!(
                f,
                "strand {vertex} {c1},{c2} {gadget} {shade} {}",
                position.name()
            ),
        }
    }
}

/// Vertex ↔ role lookup for `G'`.
#[derive(Debug, Clone, Default)]
pub struct Atlas {
    roles: Vec<Role>,
    index: HashMap<Role, Vertex>,
}

impl Atlas {
    pub fn role(&self, v: Vertex) -> Role {
        self.roles[v]
    }

    pub fn vertex(&self, role: &Role) -> Option<Vertex> {
        self.index.get(role).copied()
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    fn main(&self, gadget: usize, shade: Shade, position: Position) -> Vertex {
        self.index[&Role::Main {
            gadget,
            shade,
            position,
        }]
    }

    /// One line per vertex, `<id> <role>`, ids 1-based.
    pub fn serialize(&self) -> String {
        self.roles
            .iter()
            .enumerate()
            .map(|(v, r)| format!("{} {r}\n", v + 1))
            .collect()
    }
}

struct Builder {
    graph: Graph,
    atlas: Atlas,
}

impl Builder {
    fn new() -> Self {
        Builder {
            graph: Graph::new(0),
            atlas: Atlas::default(),
        }
    }

    fn add(&mut self, role: Role) -> Vertex {
        let v = self.graph.add_vertex();
        self.atlas.roles.push(role);
        self.atlas.index.insert(role, v);
        v
    }

    fn link(&mut self, u: Vertex, v: Vertex) {
        self.graph
            .add_edge(u, v)
            .expect("construction adds each edge once");
    }

    /// `s`, the main strand over `n` gadgets, and `t`.
    fn main_strand(&mut self, n: usize) -> (Vertex, Vertex) {
        let s = self.add(Role::Source);
        let mut prev_end = s;
        for gadget in 1..=n {
            let main = |shade, position| Role::Main {
                gadget,
                shade,
                position,
            };
            let start = self.add(main(Shade::Black, Position::Start));
            self.link(prev_end, start);
            let mut near_t = Vec::new();
            for c in 1..=COLORS {
                let a = self.add(main(Shade::Color(c), Position::NearS));
                let b = self.add(main(Shade::Color(c), Position::Middle));
                let e = self.add(main(Shade::Color(c), Position::NearT));
                self.link(start, a);
                self.link(a, b);
                self.link(b, e);
                near_t.push(e);
            }
            let end = self.add(main(Shade::Black, Position::End));
            for e in near_t {
                self.link(e, end);
            }
            prev_end = end;
        }
        let t = self.add(Role::Sink);
        self.link(prev_end, t);
        (s, t)
    }

    /// The `(vertex, {c1, c2})` recoloring strand.
    fn strand(&mut self, g: &Graph, s: Vertex, t: Vertex, vertex: usize, pair: (usize, usize)) {
        let n = g.vertex_count();
        let (c1, c2) = pair;
        let others: Vec<usize> = (1..=COLORS).filter(|&c| c != c1 && c != c2).collect();
        let mut prev_end = s;
        for gadget in 1..=n {
            let role = |shade, position| Role::Strand {
                vertex,
                pair,
                gadget,
                shade,
                position,
            };
            let start = self.add(role(Shade::Black, Position::Start));
            self.link(prev_end, start);
            let end;
            if gadget == vertex {
                let l = self.add(role(Shade::Black, Position::L));
                let r = self.add(role(Shade::Black, Position::R));
                end = self.add(role(Shade::Black, Position::End));
                self.link(start, l);
                self.link(r, end);
                for c in [c1, c2] {
                    let near_s = self.atlas.main(gadget, Shade::Color(c), Position::NearS);
                    let middle = self.atlas.main(gadget, Shade::Color(c), Position::Middle);
                    let near_t = self.atlas.main(gadget, Shade::Color(c), Position::NearT);
                    self.link(start, near_s);
                    self.link(end, near_t);
                    self.link(l, middle);
                    self.link(r, middle);
                }
            } else {
                let colors: Vec<usize> = if g.has_edge(vertex - 1, gadget - 1) {
                    others.clone()
                } else {
                    (1..=COLORS).collect()
                };
                let mut rows = Vec::new();
                for &c in &colors {
                    let a = self.add(role(Shade::Color(c), Position::NearS));
                    let b = self.add(role(Shade::Color(c), Position::Middle));
                    let e = self.add(role(Shade::Color(c), Position::NearT));
                    self.link(start, a);
                    self.link(a, b);
                    self.link(b, e);
                    rows.push((c, [a, b, e]));
                }
                end = self.add(role(Shade::Black, Position::End));
                for (_, [_, _, e]) in &rows {
                    self.link(*e, end);
                }
                let main_start = self.atlas.main(gadget, Shade::Black, Position::Start);
                let main_end = self.atlas.main(gadget, Shade::Black, Position::End);
                let main_row = |atlas: &Atlas, c| {
                    [Position::NearS, Position::Middle, Position::NearT]
                        .map(|p| atlas.main(gadget, Shade::Color(c), p))
                };
                if gadget < vertex {
                    // hook into the next layer of the main strand
                    for &(c, [a, b, e]) in &rows {
                        let [ms, mm, mt] = main_row(&self.atlas, c);
                        self.link(start, ms);
                        self.link(a, mm);
                        self.link(b, mt);
                        self.link(e, main_end);
                    }
                    let next_start = self.atlas.main(gadget + 1, Shade::Black, Position::Start);
                    self.link(end, next_start);
                } else {
                    // hook into the previous layer of the main strand
                    for &(c, [a, b, e]) in &rows {
                        let [ms, mm, mt] = main_row(&self.atlas, c);
                        self.link(end, mt);
                        self.link(e, mm);
                        self.link(b, ms);
                        self.link(a, main_start);
                    }
                    let prev_main_end = self.atlas.main(gadget - 1, Shade::Black, Position::End);
                    self.link(start, prev_main_end);
                }
            }
            prev_end = end;
        }
        self.link(prev_end, t);
    }
}

/// `G'` together with its layering and vertex roles.
#[derive(Debug, Clone)]
pub struct ReductionArtifact {
    pub g_prime: Graph,
    pub s: Vertex,
    pub t: Vertex,
    pub layering: Layering,
    pub atlas: Atlas,
    pub source: ColorPathInstance,
}

pub fn build_reduction(inst: &ColorPathInstance) -> Result<ReductionArtifact> {
    inst.validate()?;
    let g = &inst.graph;
    let n = g.vertex_count();
    let mut b = Builder::new();
    let (s, t) = b.main_strand(n);
    for vertex in 1..=n {
        for pair in COLOR_PAIRS {
            b.strand(g, s, t, vertex, pair);
        }
    }
    let layering = Layering::compute(&b.graph, s, t)?;
    if layering.d() != 5 * n + 1 {
        return Err(SprError::Internal(format!(
            "construction has d = {}, expected {}",
            layering.d(),
            5 * n + 1
        )));
    }
    if let Some((v, role)) = b
        .atlas
        .roles
        .iter()
        .enumerate()
        .find(|(v, r)| layering.layer_of(*v) != Some(r.layer(n)))
    {
        return Err(SprError::Internal(format!(
            "vertex {v} ({role}) is not in layer {}",
            role.layer(n)
        )));
    }
    Ok(ReductionArtifact {
        g_prime: b.graph,
        s,
        t,
        layering,
        atlas: b.atlas,
        source: inst.clone(),
    })
}

/// The main strand alone over `n` gadgets: `14n + 2` vertices with `4^n`
/// pairwise non-adjacent shortest paths.
pub fn gen_main_strand(n: usize) -> Result<(Graph, Vertex, Vertex)> {
    if n < 1 {
        return Err(SprError::Parameter("main strand needs n >= 1".into()));
    }
    let mut b = Builder::new();
    let (s, t) = b.main_strand(n);
    Ok((b.graph, s, t))
}

impl ReductionArtifact {
    pub fn n(&self) -> usize {
        self.source.graph.vertex_count()
    }

    /// Layer holding the middle vertices of gadget `i` (1-based).
    pub fn middle_layer(i: usize) -> usize {
        5 * i - 2
    }

    /// Path through the main strand taking colour `gamma(v_i)` in gadget `i`.
    pub fn coloring_to_path(&self, gamma: &[usize]) -> Result<StPath> {
        if !is_proper_coloring(&self.source.graph, COLORS, gamma) {
            return Err(SprError::Validation(format!(
                "{gamma:?} is not a proper {COLORS}-coloring"
            )));
        }
        let mut p = vec![self.s];
        for (idx, &c) in gamma.iter().enumerate() {
            let gadget = idx + 1;
            p.push(self.atlas.main(gadget, Shade::Black, Position::Start));
            for pos in [Position::NearS, Position::Middle, Position::NearT] {
                p.push(self.atlas.main(gadget, Shade::Color(c), pos));
            }
            p.push(self.atlas.main(gadget, Shade::Black, Position::End));
        }
        p.push(self.t);
        Ok(StPath(p))
    }

    /// Colour assignment read off the middle layers of `p`; may be improper.
    pub fn path_to_assignment(&self, p: &StPath) -> Result<Vec<usize>> {
        if !crate::layering::is_shortest_st_path(&self.g_prime, &self.layering, p.vertices()) {
            return Err(SprError::Validation(format!(
                "[{p}] is not a shortest st-path of G'"
            )));
        }
        (1..=self.n())
            .map(
                |i| match self.atlas.role(p.at(Self::middle_layer(i))).shade() {
                    Shade::Color(c) => Ok(c),
                    Shade::Black => Err(SprError::Internal(format!(
                        "black vertex in middle layer of gadget {i}"
                    ))),
                },
            )
            .collect()
    }

    /// Strand vertex standing in for main-strand vertex `v` in the
    /// `(vertex, pair)` strand.
    fn strand_counterpart(&self, v: Vertex, vertex: usize, pair: (usize, usize)) -> Result<Vertex> {
        let Role::Main {
            gadget,
            shade,
            position,
        } = self.atlas.role(v)
        else {
            return Err(SprError::Internal(format!(
                "{v} is not a main-strand vertex"
            )));
        };
        let (shade, position) = if gadget == vertex {
            match position {
                Position::NearS => (Shade::Black, Position::L),
                Position::NearT => (Shade::Black, Position::R),
                other => (shade, other),
            }
        } else {
            (shade, position)
        };
        self.atlas
            .vertex(&Role::Strand {
                vertex,
                pair,
                gadget,
                shade,
                position,
            })
            .ok_or_else(|| {
                SprError::Internal(format!(
                    "strand {vertex} {pair:?} has no counterpart for {}",
                    self.atlas.role(v)
                ))
            })
    }

    /// Expands a recolouring sequence `alpha -> beta` into a rerouting
    /// sequence `P_alpha -> P_beta`. Each recolouring of `v_i` from `c1` to
    /// `c2` becomes `10n - 1` rerouting steps through the `(v_i, {c1, c2})`
    /// strand.
    pub fn recoloring_to_rerouting(&self, seq: &[Coloring]) -> Result<RerouteSequence> {
        let src = &self.source;
        if seq.is_empty() && src.alpha == src.beta {
            return Ok(RerouteSequence::single(self.coloring_to_path(&src.alpha)?));
        }
        if seq.first() != Some(&src.alpha) || seq.last() != Some(&src.beta) {
            return Err(SprError::Validation(
                "recoloring sequence must run from alpha to beta".into(),
            ));
        }
        for (k, c) in seq.iter().enumerate() {
            if !is_proper_coloring(&src.graph, COLORS, c) {
                return Err(SprError::Validation(format!(
                    "recoloring step {k}: {c:?} is not a proper coloring"
                )));
            }
        }
        let n = self.n();
        let mut out = RerouteSequence::single(self.coloring_to_path(&src.alpha)?);
        for (k, pair) in seq.windows(2).enumerate() {
            let (gamma, delta) = (&pair[0], &pair[1]);
            let changed: Vec<usize> = (0..n).filter(|&v| gamma[v] != delta[v]).collect();
            let [v] = changed[..] else {
                return Err(SprError::Validation(format!(
                    "recoloring step {}: {} vertices change",
                    k + 1,
                    changed.len()
                )));
            };
            let i = v + 1;
            let (c1, c2) = (gamma[v], delta[v]);
            let strand_pair = (c1.min(c2), c1.max(c2));
            let target = self.coloring_to_path(delta)?;
            let mut moves: Vec<(usize, Vertex)> = Vec::new();
            let here = out.last().unwrap().clone();
            let entry_asc = 1..=5 * i - 3;
            let entry_desc = (5 * i - 1..=5 * n).rev();
            for layer in entry_asc.clone().chain(entry_desc.clone()) {
                moves.push((
                    layer,
                    self.strand_counterpart(here.at(layer), i, strand_pair)?,
                ));
            }
            let mid = Self::middle_layer(i);
            moves.push((mid, target.at(mid)));
            for layer in entry_desc.rev().chain(entry_asc.rev()) {
                moves.push((layer, target.at(layer)));
            }
            for (layer, w) in moves {
                let next = out.last().unwrap().with(layer, w);
                if !crate::layering::is_shortest_st_path(
                    &self.g_prime,
                    &self.layering,
                    next.vertices(),
                ) {
                    return Err(SprError::Internal(format!(
                        "recoloring step {}: move to {w} in layer {layer} breaks the path",
                        k + 1
                    )));
                }
                out.0.push(next);
            }
        }
        Ok(out)
    }
}
