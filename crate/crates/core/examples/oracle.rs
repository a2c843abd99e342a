//! The brute-force solution graph: every shortest st-path, joined when
//! two differ in one vertex.
//!
//!     cargo run --example oracle

use spr::oracle::{
    build_solution_graph, enumerate_shortest_paths, oracle_connected, oracle_isolated_count,
    oracle_sequence,
};
use spr::{Graph, Layering};

fn main() -> spr::Result<()> {
    // two 4-cycles sharing the cut vertex 3
    let g = Graph::from_edges(
        7,
        &[
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 3),
            (3, 4),
            (3, 5),
            (4, 6),
            (5, 6),
        ],
    )?;
    let lay = Layering::compute(&g, 0, 6)?;
    let sg = build_solution_graph(enumerate_shortest_paths(&g, &lay, 1_000)?)?;
    println!("{} paths, {} adjacencies", sg.len(), sg.edge_count());
    for (i, p) in sg.paths().iter().enumerate() {
        println!("  {i}: {p}  neighbours {:?}", sg.neighbors(i));
    }
    println!("connected: {}", oracle_connected(&sg)?);
    println!("isolated: {}", oracle_isolated_count(&sg)?);
    let (p, q) = (&sg.paths()[0], &sg.paths()[sg.len() - 1]);
    if let Some(seq) = oracle_sequence(&sg, p, q)? {
        println!("{p} -> {q} in {} steps", seq.steps());
    }
    Ok(())
}
