//! Layers of a grid-like graph and its shortest st-paths.
//!
//!     cargo run --example layering

use spr::oracle::{count_shortest_paths, enumerate_shortest_paths};
use spr::{Graph, Layering};

fn main() -> spr::Result<()> {
    // 3x3 grid, s in one corner, t in the opposite one
    let mut g = Graph::new(9);
    for v in 0..9 {
        if v % 3 < 2 {
            g.add_edge(v, v + 1)?;
        }
        if v < 6 {
            g.add_edge(v, v + 3)?;
        }
    }
    let lay = Layering::compute(&g, 0, 8)?;
    println!("d = {}", lay.d());
    for (i, layer) in lay.layers().iter().enumerate() {
        println!("L_{i}: {layer:?}");
    }
    println!("{} shortest paths", count_shortest_paths(&g, &lay));
    for p in enumerate_shortest_paths(&g, &lay, 100)? {
        println!("  {p}");
    }
    Ok(())
}
