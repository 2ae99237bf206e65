//! Dismantling of independence complexes of chordal graphs: decides
//! contractibility and sphere types by good-pair removal, produces replayable
//! certificates and cores, and cross-checks every decision against a
//! brute-force homology oracle and a rooted tree-model search.

pub mod chordal;
pub mod complex;
pub mod dismantle;
pub mod error;
pub mod explorer;
pub mod graph;
pub mod homology;
pub mod io;
mod smallgraph;
pub mod treemodel;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::graph::Graph;

    pub fn path(n: usize) -> Graph {
        crate::explorer::path_graph(n)
    }

    pub fn complete(n: usize) -> Graph {
        crate::explorer::complete_graph(n)
    }
}
