//! Rerouting in claw-free graphs.
//!
//! The pipeline: prune the instance with respect to the start path until it
//! is st-reduced ([`st_reduce`]); the target is reachable exactly when it
//! survives the pruning. Inside a reduced instance, both endpoints are
//! normalised to paths of maximal in-/out-neighbourhoods and then moved one
//! layer at a time along shortest walks in the layer hypergraphs.

mod hypergraph;
mod reduce;
mod reroute;

pub use hypergraph::{
    build_layer_hypergraph, has_maximal_in, has_maximal_out, Hyperedge, LayerHypergraph,
};
pub use reduce::{is_st_reduced, st_reduce, ReducedInstance};
pub use reroute::{
    clawfree_connected, clawfree_reachable, clawfree_reroute_reduced, normalize_max_in,
    normalize_max_out, reroute_layer,
};
