//! From a 4-colour recolouring to a rerouting sequence, and back.
//!
//!     cargo run --example reduction

use spr::oracle::color_oracle;
use spr::{build_reduction, validate_reroute_sequence, ColorPathInstance, Graph};

fn main() -> spr::Result<()> {
    // path on three vertices
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)])?;
    let (alpha, beta) = (vec![1, 2, 1], vec![2, 1, 2]);
    let inst = ColorPathInstance::new(g.clone(), alpha.clone(), beta.clone());
    let art = build_reduction(&inst)?;
    println!(
        "G' has {} vertices, {} edges, d = {}",
        art.g_prime.vertex_count(),
        art.g_prime.edge_count(),
        art.layering.d()
    );

    let recolor = color_oracle(&g, 4, &alpha, &beta, 100_000)?.expect("P3 recolours freely");
    for c in &recolor {
        println!("  {c:?}");
    }
    let seq = art.recoloring_to_rerouting(&recolor)?;
    println!(
        "{} recolourings -> {} rerouting steps",
        recolor.len() - 1,
        seq.steps()
    );
    validate_reroute_sequence(&art.g_prime, &art.layering, seq.paths()).expect("valid");
    for p in seq.paths().iter().step_by(10) {
        println!("  {:?}", art.path_to_assignment(p)?);
    }

    let v = art.coloring_to_path(&alpha)?.at(2);
    println!("vertex {v} of P_alpha is {}", art.atlas.role(v));
    Ok(())
}
