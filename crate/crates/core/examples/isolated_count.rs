//! Counting isolated shortest paths without enumerating them.
//!
//!     cargo run --example isolated_count [n]

use spr::isolated::iso_table;
use spr::oracle::count_shortest_paths;
use spr::reduction::gen_main_strand;
use spr::{count_isolated, fixtures, Layering};

fn main() -> spr::Result<()> {
    for (name, (g, s, t)) in [
        ("K2", fixtures::k2()),
        ("C6", fixtures::c6()),
        ("diamond", fixtures::diamond()),
    ] {
        let lay = Layering::compute(&g, s, t)?;
        println!("{name}: {} isolated", count_isolated(&g, &lay)?);
    }

    let (g, s, t) = fixtures::c6();
    let lay = Layering::compute(&g, s, t)?;
    for ((z, y), c) in iso_table(&g, &lay)?.iter() {
        println!("  iso({z}, {y}) = {c}");
    }

    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(40);
    let (g, s, t) = gen_main_strand(n)?;
    let lay = Layering::compute(&g, s, t)?;
    println!(
        "main strand, {n} gadgets: {} paths, {} isolated",
        count_shortest_paths(&g, &lay),
        count_isolated(&g, &lay)?
    );
    Ok(())
}
