//! Counting isolated shortest st-paths.
//!
//! `iso(z, y)` is the number of shortest s-z paths whose last edge is `y z`
//! and which have no neighbour in the solution graph of `(G, s, z)`. For `z`
//! in `L_1` it is 1 with `y = s`. Otherwise
//!
//! ```text
//! iso(z, y) = sum of iso(y, x) over x in L_{i-2} ∩ N(y) with N(x) ∩ N(z) = {y}
//! ```
//!
//! Only layered vertices are considered. A shortest s-z path for `z ∈ L_i`
//! extends along any shortest z-t path to a shortest st-path, so all its
//! vertices are layered. A swap candidate for its vertex `y` is a common
//! neighbour of `x` and `z`; such a vertex is at distance `i-1` from s and
//! also extends to a shortest st-path, so it is layered too. The
//! intersection `N(x) ∩ N(z)` is still taken over the whole graph.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Result, SprError};
use crate::graph::{Graph, Vertex};
use crate::layering::Layering;

/// `iso(z, y)` for every edge `y z` with `z ∈ L_i`, `y ∈ L_{i-1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IsoTable {
    entries: BTreeMap<(Vertex, Vertex), BigUint>,
}

impl IsoTable {
    /// Entry keyed by `(z, y)`.
    pub fn get(&self, z: Vertex, y: Vertex) -> Option<&BigUint> {
        self.entries.get(&(z, y))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Vertex, Vertex), &BigUint)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn iso_table(g: &Graph, lay: &Layering) -> Result<IsoTable> {
    if lay.d() == 0 {
        return Err(SprError::InvalidEndpoints);
    }
    let mut table = IsoTable::default();
    for &z in lay.layer(1) {
        table.entries.insert((z, lay.s()), BigUint::one());
    }
    for i in 2..=lay.d() {
        for &z in lay.layer(i) {
            for y in lay.in_neighbors(g, z) {
                let mut total = BigUint::zero();
                for x in lay.in_neighbors(g, y) {
                    if g.common_neighbors(x, z) == [y] {
                        if let Some(c) = table.entries.get(&(y, x)) {
                            total += c;
                        }
                    }
                }
                table.entries.insert((z, y), total);
            }
        }
    }
    Ok(table)
}

/// Number of shortest st-paths with no neighbour in the solution graph.
pub fn count_isolated(g: &Graph, lay: &Layering) -> Result<BigUint> {
    let table = iso_table(g, lay)?;
    let t = lay.t();
    Ok(lay
        .in_neighbors(g, t)
        .iter()
        .filter_map(|&y| table.get(t, y))
        .sum())
}
