//! Shortest-path reconfiguration: given two shortest st-paths of a graph,
//! move one to the other by changing a single vertex at a time while staying
//! a shortest st-path.
//!
//! ```
//! use spr::{fixtures, chordal_reroute, Layering, StPath};
//!
//! let (g, s, t) = fixtures::diamond();
//! let lay = Layering::compute(&g, s, t).unwrap();
//! let seq = chordal_reroute(&g, &lay, &StPath(vec![0, 1, 3]), &StPath(vec![0, 2, 3])).unwrap();
//! assert_eq!(seq.steps(), 1);
//! ```

pub mod chordal;
pub mod clawfree;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod io;
pub mod isolated;
pub mod layering;
pub mod oracle;
pub mod recognition;
pub mod reduction;

pub use chordal::chordal_reroute;
pub use clawfree::{clawfree_connected, clawfree_reachable, st_reduce};
pub use error::{ParseError, Result, SprError};
pub use graph::{Graph, Vertex};
pub use isolated::count_isolated;
pub use layering::{validate_reroute_sequence, Layering, RerouteSequence, StPath};
pub use recognition::{chordality_check, find_claw};
pub use reduction::{build_reduction, ColorPathInstance, ReductionArtifact};
