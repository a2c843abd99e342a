//! Shortest rerouting sequences in chordal graphs.
//!
//! Two paths are walked towards each other. At the first layer `i` where
//! they disagree, let `j > i` be the next layer where they agree again. If
//! `j = i + 1` the P-side vertex can be swapped directly. Otherwise the cycle
//! `u_{i-1} .. u_j v_{j-1} .. v_{i-1}` has length at least 6 and in a chordal
//! graph one of `u_{i+1} v_i` or `u_i v_{i+1}` is present, which licenses a
//! swap on the P side or the Q side respectively. Every swap gains one shared
//! vertex, so the result has exactly `|V(P) \ V(Q)|` steps.

use crate::error::{Result, SprError};
use crate::graph::Graph;
use crate::layering::{check_path, Layering, RerouteSequence, StPath};

pub fn chordal_reroute(
    g: &Graph,
    lay: &Layering,
    p: &StPath,
    q: &StPath,
) -> Result<RerouteSequence> {
    check_path(g, lay, p, "P")?;
    check_path(g, lay, q, "Q")?;
    let mut from_p = vec![p.clone()];
    let mut from_q = vec![q.clone()];
    loop {
        let u = from_p.last().unwrap();
        let v = from_q.last().unwrap();
        let Some(i) = (0..u.len()).find(|&k| u.at(k) != v.at(k)) else {
            break;
        };
        let j = (i + 1..u.len())
            .find(|&k| u.at(k) == v.at(k))
            .expect("paths share t");
        if j == i + 1 || g.has_edge(u.at(i + 1), v.at(i)) {
            let next = u.with(i, v.at(i));
            from_p.push(next);
        } else if g.has_edge(u.at(i), v.at(i + 1)) {
            let next = v.with(i, u.at(i));
            from_q.push(next);
        } else {
            let mut cycle: Vec<_> = (i - 1..=j).map(|k| u.at(k)).collect();
            cycle.extend((i - 1..j).rev().map(|k| v.at(k)));
            return Err(SprError::NonChordalWitness { cycle });
        }
    }
    from_q.pop();
    from_p.extend(from_q.into_iter().rev());
    Ok(RerouteSequence(from_p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, DIAMOND_A, DIAMOND_B};
    use crate::layering::validate_reroute_sequence;

    #[test]
    fn identical_paths() {
        let (g, s, t) = fixtures::diamond();
        let lay = Layering::compute(&g, s, t).unwrap();
        let p = StPath(vec![s, DIAMOND_A, t]);
        let seq = chordal_reroute(&g, &lay, &p, &p).unwrap();
        assert_eq!(seq.steps(), 0);
        assert_eq!(seq.paths(), &[p]);
    }

    #[test]
    fn diamond_single_step() {
        let (g, s, t) = fixtures::diamond();
        let lay = Layering::compute(&g, s, t).unwrap();
        let p = StPath(vec![s, DIAMOND_A, t]);
        let q = StPath(vec![s, DIAMOND_B, t]);
        let seq = chordal_reroute(&g, &lay, &p, &q).unwrap();
        assert_eq!(seq.paths(), &[p, q]);
    }

    #[test]
    fn c4_paths_are_adjacent() {
        let (g, s, t) = fixtures::c4();
        let lay = Layering::compute(&g, s, t).unwrap();
        let p = StPath(vec![0, 1, 2]);
        let q = StPath(vec![0, 3, 2]);
        // With d = 2 the two paths share both neighbours of the middle layer.
        let seq = chordal_reroute(&g, &lay, &p, &q).unwrap();
        assert_eq!(seq.steps(), 1);
    }

    #[test]
    fn c6_yields_witness() {
        let (g, s, t) = fixtures::c6();
        let lay = Layering::compute(&g, s, t).unwrap();
        let p = StPath(vec![0, 1, 2, 3]);
        let q = StPath(vec![0, 5, 4, 3]);
        match chordal_reroute(&g, &lay, &p, &q) {
            Err(SprError::NonChordalWitness { cycle }) => {
                assert_eq!(cycle, vec![0, 1, 2, 3, 4, 5, 0]);
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn uses_q_side_when_needed() {
        // s=0; layer 1: u1=1, v1=2; layer 2: u2=3, v2=4; t=5.
        // Chord u1 v2 (1-4) only, so the Q side moves first.
        let g = Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 4),
                (3, 5),
                (4, 5),
                (1, 4),
                (1, 2),
                (3, 4),
            ],
        )
        .unwrap();
        let lay = Layering::compute(&g, 0, 5).unwrap();
        let p = StPath(vec![0, 1, 3, 5]);
        let q = StPath(vec![0, 2, 4, 5]);
        let seq = chordal_reroute(&g, &lay, &p, &q).unwrap();
        assert_eq!(seq.steps(), 2);
        assert!(validate_reroute_sequence(&g, &lay, seq.paths()).is_ok());
        assert_eq!(seq.paths()[1], StPath(vec![0, 1, 4, 5]));
    }

    #[test]
    fn rejects_invalid_paths() {
        let (g, s, t) = fixtures::diamond();
        let lay = Layering::compute(&g, s, t).unwrap();
        let p = StPath(vec![s, DIAMOND_A, t]);
        let bad = StPath(vec![s, t]);
        assert!(matches!(
            chordal_reroute(&g, &lay, &p, &bad),
            Err(SprError::Validation(_))
        ));
    }
}
