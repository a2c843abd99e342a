use crate::error::{Result, SprError};
use crate::graph::{Graph, Vertex};
use crate::layering::{check_path, Layering, StPath};
use crate::recognition::find_claw;

use super::hypergraph::build_layer_hypergraph;

/// Induced subgraph left after pruning everything provably unreachable from
/// `base_path`. Dropped vertices keep their ids but lose all edges.
#[derive(Debug, Clone)]
pub struct ReducedInstance {
    pub graph: Graph,
    pub layering: Layering,
    pub kept: Vec<bool>,
    pub base_path: StPath,
}

impl ReducedInstance {
    pub fn kept_count(&self) -> usize {
        self.kept.iter().filter(|&&k| k).count()
    }

    pub fn contains_path(&self, p: &StPath) -> bool {
        p.vertices()
            .iter()
            .all(|&v| self.kept.get(v) == Some(&true))
    }
}

/// Prunes `g` with respect to `p` until no rule applies:
///
/// 1. drop vertices on no shortest st-path;
/// 2. in each `L_i`, drop vertices outside the `H_i`-component of `p`'s vertex;
/// 3. in each `L_i` with `2 ≤ i ≤ d-2`, drop vertices not adjacent to `p`'s vertex.
pub fn st_reduce(g: &Graph, lay: &Layering, p: &StPath) -> Result<ReducedInstance> {
    if let Some(claw) = find_claw(g) {
        return Err(SprError::NotClawFree(claw));
    }
    check_path(g, lay, p, "P")?;
    reduce_unchecked(g, lay.s(), lay.t(), p)
}

pub(crate) fn reduce_unchecked(
    g: &Graph,
    s: Vertex,
    t: Vertex,
    p: &StPath,
) -> Result<ReducedInstance> {
    let mut keep = vec![true; g.vertex_count()];
    loop {
        let h = g.induced(&keep);
        let lay = Layering::compute(&h, s, t)?;
        let d = lay.d();
        let mut next = lay.on_shortest_path_mask();
        for i in 1..d {
            let hg = build_layer_hypergraph(&h, &lay, i)?;
            let own = hg.component_of(p.at(i));
            for &v in lay.layer(i) {
                if hg.component_of(v) != own {
                    next[v] = false;
                }
            }
        }
        for i in 2..d.saturating_sub(1) {
            for &v in lay.layer(i) {
                if v != p.at(i) && !h.has_edge(v, p.at(i)) {
                    next[v] = false;
                }
            }
        }
        if next == keep {
            return Ok(ReducedInstance {
                graph: h,
                layering: lay,
                kept: keep,
                base_path: p.clone(),
            });
        }
        keep = next;
    }
}

/// Checks the three st-reduced conditions. Vertices without edges (other than
/// `s` and `t`) count as absent.
pub fn is_st_reduced(g: &Graph, lay: &Layering) -> bool {
    let present = |v: Vertex| g.degree(v) > 0 || v == lay.s() || v == lay.t();
    let all_layered = (0..g.vertex_count())
        .filter(|&v| present(v))
        .all(|v| lay.layer_of(v).is_some());
    let d = lay.d();
    let connected = (1..d).all(|i| {
        build_layer_hypergraph(g, lay, i)
            .map(|h| h.is_connected())
            .unwrap_or(false)
    });
    let cliques = (2..d.saturating_sub(1)).all(|i| {
        let layer = lay.layer(i);
        layer
            .iter()
            .enumerate()
            .all(|(k, &a)| layer[k + 1..].iter().all(|&b| g.has_edge(a, b)))
    });
    all_layered && connected && cliques
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn c6_drops_other_half() {
        let (g, s, t) = fixtures::c6();
        let lay = Layering::compute(&g, s, t).unwrap();
        let p = StPath(vec![0, 1, 2, 3]);
        let inst = st_reduce(&g, &lay, &p).unwrap();
        assert_eq!(inst.kept, vec![true, true, true, true, false, false]);
        assert_eq!(inst.layering.d(), 3);
        assert!(inst.contains_path(&p));
        assert!(!inst.contains_path(&StPath(vec![0, 5, 4, 3])));
        assert!(is_st_reduced(&inst.graph, &inst.layering));
        assert!(!is_st_reduced(&g, &lay));
    }

    #[test]
    fn diamond_unchanged() {
        let (g, s, t) = fixtures::diamond();
        let lay = Layering::compute(&g, s, t).unwrap();
        let p = StPath(vec![s, fixtures::DIAMOND_A, t]);
        let inst = st_reduce(&g, &lay, &p).unwrap();
        assert_eq!(inst.graph, g);
        assert!(inst.kept.iter().all(|&k| k));
    }

    #[test]
    fn reduced_input_is_fixpoint() {
        let (g, s, t) = fixtures::c6();
        let lay = Layering::compute(&g, s, t).unwrap();
        let p = StPath(vec![0, 1, 2, 3]);
        let once = st_reduce(&g, &lay, &p).unwrap();
        let twice = st_reduce(&once.graph, &once.layering, &p).unwrap();
        assert_eq!(twice.graph, once.graph);
    }

    #[test]
    fn rejects_claws() {
        let g = fixtures::claw();
        let lay = Layering::compute(&g, 1, 2).unwrap();
        let p = StPath(vec![1, 0, 2]);
        assert!(matches!(
            st_reduce(&g, &lay, &p),
            Err(SprError::NotClawFree(_))
        ));
    }
}
