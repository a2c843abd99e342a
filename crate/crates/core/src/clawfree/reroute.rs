use crate::error::{Result, SprError};
use crate::graph::{Graph, Vertex};
use crate::layering::{check_path, is_shortest_st_path, Layering, RerouteSequence, StPath};
use crate::recognition::{find_claw, Claw};

use super::hypergraph::{
    build_layer_hypergraph, has_maximal_in, has_maximal_out, is_strict_subset, is_subset,
};
use super::reduce::{reduce_unchecked, ReducedInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Out,
    In,
}

impl Side {
    fn neighbors(self, g: &Graph, lay: &Layering, v: Vertex) -> Vec<Vertex> {
        match self {
            Side::Out => lay.out_neighbors(g, v),
            Side::In => lay.in_neighbors(g, v),
        }
    }

    fn is_maximal(self, g: &Graph, lay: &Layering, v: Vertex) -> bool {
        match self {
            Side::Out => has_maximal_out(g, lay, v),
            Side::In => has_maximal_in(g, lay, v),
        }
    }
}

/// Appends paths to a sequence, one swap at a time.
struct Builder<'a> {
    g: &'a Graph,
    lay: &'a Layering,
    seq: RerouteSequence,
}

impl<'a> Builder<'a> {
    fn new(g: &'a Graph, lay: &'a Layering, start: StPath) -> Self {
        Builder {
            g,
            lay,
            seq: RerouteSequence::single(start),
        }
    }

    fn current(&self) -> &StPath {
        self.seq.last().unwrap()
    }

    /// Swaps the layer-`i` vertex to `v`; no-op when it already is `v`.
    fn step(&mut self, i: usize, v: Vertex) -> Result<()> {
        if self.current().at(i) == v {
            return Ok(());
        }
        let next = self.current().with(i, v);
        if !is_shortest_st_path(self.g, self.lay, next.vertices()) {
            return Err(SprError::Internal(format!(
                "swap to {v} in layer {i} breaks the path [{next}]; \
                 instance is not st-reduced and claw-free"
            )));
        }
        self.seq.0.push(next);
        Ok(())
    }
}

/// Replaces each vertex whose `side`-neighbourhood is not maximal, sweeping
/// ascending for out-neighbourhoods and descending for in-neighbourhoods.
fn normalize(inst: &ReducedInstance, p: &StPath, side: Side) -> Result<(StPath, RerouteSequence)> {
    let (g, lay) = (&inst.graph, &inst.layering);
    check_path(g, lay, p, "P")?;
    let d = lay.d();
    let order: Vec<usize> = match side {
        Side::Out => (1..d).collect(),
        Side::In => (1..d).rev().collect(),
    };
    let mut b = Builder::new(g, lay, p.clone());
    for i in order {
        let u = b.current().at(i);
        if side.is_maximal(g, lay, u) {
            continue;
        }
        // the already-normalised neighbour on the sweep's trailing side
        let anchor = match side {
            Side::Out => b.current().at(i - 1),
            Side::In => b.current().at(i + 1),
        };
        let own = side.neighbors(g, lay, u);
        let candidates: Vec<Vertex> = lay
            .layer(i)
            .iter()
            .copied()
            .filter(|&v| {
                is_strict_subset(&own, &side.neighbors(g, lay, v)) && side.is_maximal(g, lay, v)
            })
            .collect();
        let v = candidates
            .iter()
            .copied()
            .find(|&v| g.has_edge(anchor, v))
            .or_else(|| candidates.first().copied())
            .ok_or_else(|| {
                SprError::Internal(format!("no maximal neighbourhood above {u} in layer {i}"))
            })?;
        if !g.has_edge(anchor, v) {
            return Err(normalization_claw(g, lay, side, anchor, v));
        }
        b.step(i, v)?;
    }
    let end = b.current().clone();
    Ok((end, b.seq))
}

/// A `v`-claw with leaves x ∈ N_back(v), y ∈ N_fwd(anchor) \ N_fwd(x),
/// z ∈ N_fwd(v) \ N_fwd(y), where "fwd" is `side`.
fn normalization_claw(
    g: &Graph,
    lay: &Layering,
    side: Side,
    anchor: Vertex,
    v: Vertex,
) -> SprError {
    let back = match side {
        Side::Out => Side::In,
        Side::In => Side::Out,
    };
    let claw = back.neighbors(g, lay, v).into_iter().find_map(|x| {
        let fx = side.neighbors(g, lay, x);
        side.neighbors(g, lay, anchor)
            .into_iter()
            .filter(|y| !fx.contains(y))
            .find_map(|y| {
                let fy = side.neighbors(g, lay, y);
                side.neighbors(g, lay, v)
                    .into_iter()
                    .find(|z| !fy.contains(z))
                    .map(|z| Claw {
                        center: v,
                        leaves: [x, y, z],
                    })
                    .filter(|c| c.is_induced_in(g))
            })
    });
    match claw {
        Some(c) => SprError::NotClawFree(c),
        None => SprError::Internal(format!("normalised vertex {v} is not adjacent to {anchor}")),
    }
}

/// Reroutes `p` to a path whose vertices all have maximal out-neighbourhoods,
/// using at most `d - 1` steps.
pub fn normalize_max_out(inst: &ReducedInstance, p: &StPath) -> Result<(StPath, RerouteSequence)> {
    normalize(inst, p, Side::Out)
}

/// Reroutes `p` to a path whose vertices all have maximal in-neighbourhoods,
/// using at most `d - 1` steps.
pub fn normalize_max_in(inst: &ReducedInstance, p: &StPath) -> Result<(StPath, RerouteSequence)> {
    normalize(inst, p, Side::In)
}

/// Moves the layer-`i` vertex of `p` to `w` in at most `2|L_i|` steps,
/// touching only layers `i - 1` (temporarily), `i` and `i + 1`.
///
/// Requires `u_{i-1}` to have a maximal out-neighbourhood, `u_{i+1}` a
/// maximal in-neighbourhood and `w ∈ N⁺(u_{i-1})`. The vertex left in
/// layer `i + 1` again has a maximal in-neighbourhood.
pub fn reroute_layer(
    inst: &ReducedInstance,
    p: &StPath,
    i: usize,
    w: Vertex,
) -> Result<RerouteSequence> {
    let (g, lay) = (&inst.graph, &inst.layering);
    let d = lay.d();
    if i == 0 || i >= d {
        return Err(SprError::LayerOutOfRange {
            index: i,
            max: d.saturating_sub(1),
        });
    }
    check_path(g, lay, p, "P")?;
    let (prev, cur, next) = (p.at(i - 1), p.at(i), p.at(i + 1));
    if lay.layer_of(w) != Some(i) || !g.has_edge(prev, w) {
        return Err(SprError::Precondition(format!(
            "{w} is not an out-neighbour of {prev}"
        )));
    }
    if !has_maximal_out(g, lay, prev) {
        return Err(SprError::Precondition(format!(
            "{prev} has no maximal out-neighbourhood"
        )));
    }
    if !has_maximal_in(g, lay, next) {
        return Err(SprError::Precondition(format!(
            "{next} has no maximal in-neighbourhood"
        )));
    }
    let mut b = Builder::new(g, lay, p.clone());
    if w == cur {
        return Ok(b.seq);
    }
    if i == d - 1 {
        b.step(i, w)?;
        return Ok(b.seq);
    }

    let hg = build_layer_hypergraph(g, lay, i)?;
    let xs = hg.shortest_path(cur, w).ok_or_else(|| {
        SprError::Internal(format!(
            "{cur} and {w} lie in different components of H_{i}"
        ))
    })?;
    let k = xs.len() - 1;

    let maximal_above: Vec<(Vertex, Vec<Vertex>)> = lay
        .layer(i + 1)
        .iter()
        .filter(|&&a| has_maximal_in(g, lay, a))
        .map(|&a| (a, lay.in_neighbors(g, a)))
        .collect();
    let mut above = vec![next];
    for j in 1..=k {
        let pair = [xs[j - 1].min(xs[j]), xs[j - 1].max(xs[j])];
        let covers = |ins: &[Vertex]| is_subset(&pair, ins);
        let a = if j == 1 && covers(&lay.in_neighbors(g, next)) {
            next
        } else {
            maximal_above
                .iter()
                .find(|(_, ins)| covers(ins))
                .map(|(a, _)| *a)
                .ok_or_else(|| {
                    SprError::Internal(format!(
                        "no maximal in-neighbourhood covers {} and {}",
                        xs[j - 1],
                        xs[j]
                    ))
                })?
        };
        above.push(a);
    }

    let detour = xs.iter().find(|&&x| !g.has_edge(prev, x)).map(|&x| {
        lay.in_neighbors(g, x)
            .into_iter()
            .find(|&y| has_maximal_out(g, lay, y))
    });
    let y = match detour {
        None => prev,
        Some(Some(y)) => y,
        Some(None) => {
            return Err(SprError::Internal(
                "no in-neighbour with maximal out-neighbourhood".into(),
            ))
        }
    };

    b.step(i - 1, y)?;
    b.step(i + 1, above[1])?;
    b.step(i, xs[1])?;
    for j in 2..=k {
        b.step(i + 1, above[j])?;
        b.step(i, xs[j])?;
    }
    b.step(i - 1, prev)?;
    Ok(b.seq)
}

/// Rerouting sequence between any two paths of an st-reduced claw-free
/// instance, of length at most `2n + 2d - 6`.
pub fn clawfree_reroute_reduced(
    inst: &ReducedInstance,
    p: &StPath,
    q: &StPath,
) -> Result<RerouteSequence> {
    let (g, lay) = (&inst.graph, &inst.layering);
    check_path(g, lay, p, "P")?;
    check_path(g, lay, q, "Q")?;
    let (_, mut seq) = normalize_max_in(inst, p)?;
    let (q_norm, q_seq) = normalize_max_out(inst, q)?;
    for i in 1..lay.d() {
        let stage = reroute_layer(inst, seq.last().unwrap(), i, q_norm.at(i))?;
        seq.extend_from(&stage);
    }
    if seq.last() != Some(&q_norm) {
        return Err(SprError::Internal(format!(
            "layer stages ended at [{}] instead of [{q_norm}]",
            seq.last().unwrap()
        )));
    }
    seq.extend_from(&q_seq.reversed());
    Ok(seq)
}

/// Decides whether `q` is reachable from `p`; returns a rerouting sequence
/// when it is.
pub fn clawfree_reachable(
    g: &Graph,
    lay: &Layering,
    p: &StPath,
    q: &StPath,
) -> Result<Option<RerouteSequence>> {
    if let Some(claw) = find_claw(g) {
        return Err(SprError::NotClawFree(claw));
    }
    check_path(g, lay, p, "P")?;
    check_path(g, lay, q, "Q")?;
    if p == q {
        return Ok(Some(RerouteSequence::single(p.clone())));
    }
    let inst = reduce_unchecked(g, lay.s(), lay.t(), p)?;
    if !inst.contains_path(q) {
        return Ok(None);
    }
    clawfree_reroute_reduced(&inst, p, q).map(Some)
}

/// Whether the solution graph is connected.
pub fn clawfree_connected(g: &Graph, s: Vertex, t: Vertex) -> Result<bool> {
    if let Some(claw) = find_claw(g) {
        return Err(SprError::NotClawFree(claw));
    }
    let lay = Layering::compute(g, s, t)?;
    let pruned = g.induced(&lay.on_shortest_path_mask());
    let lay = Layering::compute(&pruned, s, t)?;
    let p = lay.first_path(&pruned);
    let inst = reduce_unchecked(&pruned, s, t, &p)?;
    Ok(inst.kept_count() == lay.layered_vertex_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clawfree::st_reduce;
    use crate::fixtures::{self, DIAMOND_A, DIAMOND_B};
    use crate::layering::validate_reroute_sequence;

    fn reduced(f: (Graph, Vertex, Vertex), p: &StPath) -> ReducedInstance {
        let lay = Layering::compute(&f.0, f.1, f.2).unwrap();
        st_reduce(&f.0, &lay, p).unwrap()
    }

    #[test]
    fn already_maximal_is_untouched() {
        let p = StPath(vec![0, DIAMOND_A, 3]);
        let inst = reduced(fixtures::diamond(), &p);
        let (q, seq) = normalize_max_out(&inst, &p).unwrap();
        assert_eq!((q, seq.steps()), (p.clone(), 0));
        let (q, seq) = normalize_max_in(&inst, &p).unwrap();
        assert_eq!((q, seq.steps()), (p, 0));
    }

    #[test]
    fn reduced_c6_has_singleton_layers() {
        let p = StPath(vec![0, 1, 2, 3]);
        let inst = reduced(fixtures::c6(), &p);
        assert_eq!(normalize_max_out(&inst, &p).unwrap().1.steps(), 0);
        assert_eq!(normalize_max_in(&inst, &p).unwrap().1.steps(), 0);
    }

    #[test]
    fn normalization_moves_to_maximal() {
        // s=0; L_1 = {1,2}; L_2 = {3,4}; t=5; N⁺(1) = {3} ⊂ N⁺(2) = {3,4}.
        let g = Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 4),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
        )
        .unwrap();
        let p = StPath(vec![0, 1, 3, 5]);
        let inst = reduced((g, 0, 5), &p);
        let (q, seq) = normalize_max_out(&inst, &p).unwrap();
        assert_eq!(q, StPath(vec![0, 2, 3, 5]));
        assert_eq!(seq.steps(), 1);
        let (q, seq) = normalize_max_in(&inst, &StPath(vec![0, 2, 4, 5])).unwrap();
        assert_eq!(q, StPath(vec![0, 2, 3, 5]));
        assert_eq!(seq.steps(), 1);
    }

    #[test]
    fn diamond_layer_step() {
        let p = StPath(vec![0, DIAMOND_A, 3]);
        let inst = reduced(fixtures::diamond(), &p);
        let seq = reroute_layer(&inst, &p, 1, DIAMOND_B).unwrap();
        assert_eq!(seq.steps(), 1);
        assert_eq!(seq.last().unwrap(), &StPath(vec![0, DIAMOND_B, 3]));
        assert_eq!(reroute_layer(&inst, &p, 1, DIAMOND_A).unwrap().steps(), 0);
        assert!(matches!(
            reroute_layer(&inst, &p, 1, 3),
            Err(SprError::Precondition(_))
        ));
        assert!(matches!(
            reroute_layer(&inst, &p, 2, 3),
            Err(SprError::LayerOutOfRange { .. })
        ));
    }

    #[test]
    fn reroute_layer_walks_the_hypergraph() {
        // s=0; L_1 = {1,2,3}; L_2 = {4,5}; L_3 = {7}; t=8; vertex 6 unused.
        // N⁻(4) = {1,2}, N⁻(5) = {2,3}: H_1 is the path 1 - 2 - 3.
        let g = Graph::from_edges(
            9,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (2, 3),
                (1, 3),
                (1, 4),
                (2, 4),
                (2, 5),
                (3, 5),
                (4, 5),
                (4, 7),
                (5, 7),
                (7, 8),
            ],
        )
        .unwrap();
        let p = StPath(vec![0, 1, 4, 7, 8]);
        let inst = reduced((g, 0, 8), &p);
        let seq = reroute_layer(&inst, &p, 1, 3).unwrap();
        assert!(validate_reroute_sequence(&inst.graph, &inst.layering, seq.paths()).is_ok());
        assert_eq!(seq.last().unwrap(), &StPath(vec![0, 3, 5, 7, 8]));
        assert!(seq.steps() <= 2 * inst.layering.layer(1).len());
    }

    #[test]
    fn reachability_on_fixtures() {
        let (g, s, t) = fixtures::c6();
        let lay = Layering::compute(&g, s, t).unwrap();
        let p = StPath(vec![0, 1, 2, 3]);
        let q = StPath(vec![0, 5, 4, 3]);
        assert_eq!(clawfree_reachable(&g, &lay, &p, &q).unwrap(), None);
        assert_eq!(
            clawfree_reachable(&g, &lay, &p, &p).unwrap(),
            Some(RerouteSequence::single(p))
        );

        let (g, s, t) = fixtures::diamond();
        let lay = Layering::compute(&g, s, t).unwrap();
        let p = StPath(vec![s, DIAMOND_A, t]);
        let q = StPath(vec![s, DIAMOND_B, t]);
        let seq = clawfree_reachable(&g, &lay, &p, &q).unwrap().unwrap();
        assert_eq!(seq.paths(), &[p, q]);
    }

    #[test]
    fn reduced_reroute_with_equal_endpoints() {
        let p = StPath(vec![0, DIAMOND_A, 3]);
        let inst = reduced(fixtures::diamond(), &p);
        let seq = clawfree_reroute_reduced(&inst, &p, &p).unwrap();
        assert_eq!(seq.first(), Some(&p));
        assert_eq!(seq.last(), Some(&p));
        assert!(seq.steps() <= 2 * (inst.layering.d() - 1));
    }

    #[test]
    fn connectivity_on_fixtures() {
        let (g, s, t) = fixtures::diamond();
        assert!(clawfree_connected(&g, s, t).unwrap());
        let (g, s, t) = fixtures::c6();
        assert!(!clawfree_connected(&g, s, t).unwrap());
        let (g, s, t) = fixtures::k2();
        assert!(clawfree_connected(&g, s, t).unwrap());
        assert!(matches!(
            clawfree_connected(&fixtures::claw(), 1, 2),
            Err(SprError::NotClawFree(_))
        ));
    }
}
