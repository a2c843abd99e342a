//! Reading and writing the text formats used by the `spr` binary.
//!
//!     cargo run --example files

use spr::io::{parse_graph, parse_sequence, serialize_graph, serialize_path};
use spr::{chordal_reroute, Layering};

const DIAMOND: &str = "\
# s = 1, t = 4
p 4 5
e 1 2
e 1 3
e 2 4
e 3 4
e 2 3
st 1 4
";

fn main() {
    let file = parse_graph(DIAMOND).unwrap();
    let lay = Layering::compute(&file.graph, file.s, file.t).unwrap();
    let ends = parse_sequence("path 1 2 4\npath 1 3 4\n", file.graph.vertex_count()).unwrap();
    let seq = chordal_reroute(&file.graph, &lay, &ends[0], &ends[1]).unwrap();
    for p in seq.paths() {
        println!("{}", serialize_path(p));
    }
    print!("{}", serialize_graph(&file.graph, file.s, file.t));

    match parse_graph("p 2 1\ne 1 1\nst 1 2\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
