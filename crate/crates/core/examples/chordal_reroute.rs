//! Shortest rerouting in a chordal graph, and the witness cycle returned
//! when the graph has a long induced cycle in the way.
//!
//!     cargo run --example chordal_reroute [n] [seed]

use spr::generate::{k_tree, max_distance_pair};
use spr::oracle::enumerate_shortest_paths;
use spr::{chordal_reroute, fixtures, Layering, SprError, StPath};

fn main() -> spr::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|a| a.parse().ok()).unwrap_or(14);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);

    let g = k_tree(n, 2, seed)?;
    let (s, t) = max_distance_pair(&g).expect("k-trees are connected");
    let lay = Layering::compute(&g, s, t)?;
    let paths = enumerate_shortest_paths(&g, &lay, 10_000)?;
    let (p, q) = (&paths[0], &paths[paths.len() - 1]);
    let seq = chordal_reroute(&g, &lay, p, q)?;
    println!(
        "2-tree on {n} vertices, s = {s}, t = {t}, {} shortest paths",
        paths.len()
    );
    println!(
        "|V(P) \\ V(Q)| = {}, steps = {}",
        p.missing_from(q),
        seq.steps()
    );
    for path in seq.paths() {
        println!("  {path}");
    }

    let (c6, s, t) = fixtures::c6();
    let lay = Layering::compute(&c6, s, t)?;
    match chordal_reroute(
        &c6,
        &lay,
        &StPath(vec![0, 1, 2, 3]),
        &StPath(vec![0, 5, 4, 3]),
    ) {
        Err(SprError::NonChordalWitness { cycle }) => println!("C6: induced cycle {cycle:?}"),
        other => println!("C6: unexpected {other:?}"),
    }
    Ok(())
}
