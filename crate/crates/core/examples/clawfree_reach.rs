//! Reachability and connectivity in a claw-free graph: the pruned instance,
//! the layer hypergraphs, and rerouting sequences.
//!
//!     cargo run --example clawfree_reach

use spr::clawfree::{build_layer_hypergraph, st_reduce};
use spr::oracle::enumerate_shortest_paths;
use spr::{clawfree_connected, clawfree_reachable, find_claw, Graph, Layering};

fn main() -> spr::Result<()> {
    // s = 0, t = 7. L_1 = {1, 2, 3} is a triangle whose out-neighbourhoods
    // N(4) = {1, 2}, N(5) = {2, 3} overlap in 2. The branch 8 - 9 - 10 is a
    // second way through with no vertex in common.
    let g = Graph::from_edges(
        11,
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
            (4, 6),
            (5, 6),
            (6, 7),
            (0, 8),
            (8, 9),
            (9, 10),
            (10, 7),
        ],
    )?;
    assert!(find_claw(&g).is_none());
    let lay = Layering::compute(&g, 0, 7)?;
    let paths = enumerate_shortest_paths(&g, &lay, 1_000)?;
    println!("{} shortest paths, d = {}", paths.len(), lay.d());
    println!(
        "connected solution graph: {}",
        clawfree_connected(&g, 0, 7)?
    );

    let p = &paths[0];
    let reduced = st_reduce(&g, &lay, p)?;
    println!("pruning from {p} keeps {} vertices", reduced.kept_count());
    for i in 1..reduced.layering.d() {
        let h = build_layer_hypergraph(&reduced.graph, &reduced.layering, i)?;
        let edges: Vec<_> = h.hyperedges.iter().map(|e| &e.members).collect();
        println!("  H_{i}: {:?} {edges:?}", h.vertices);
    }
    for q in &paths[1..] {
        match clawfree_reachable(&g, &lay, p, q)? {
            Some(seq) => {
                println!("{p} -> {q}: {} steps", seq.steps());
                for path in &seq.paths()[1..] {
                    println!("    {path}");
                }
            }
            None => println!("{p} -> {q}: unreachable"),
        }
    }
    Ok(())
}
