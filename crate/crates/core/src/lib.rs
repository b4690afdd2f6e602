//! Approximation algorithms for the minimum k-path vertex cover problem on
//! regular graphs, together with the exact oracles, lower bounds and
//! instance generators used to check their guarantees.
//!
//! A k-path vertex cover of `G = (V, E)` is a set `F` such that `G[V - F]`
//! contains no simple path on `k` vertices; `ψ_k(G)` is the smallest size of
//! such a set. The crate is `no_std` and only needs `alloc`.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod approx;
pub mod bounds;
pub mod canon;
pub mod coloring;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod mis;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, GraphBuilder, InducedSubgraphView, Side, Vertex};
pub use verify::{Algorithm, CoverSolution, Verdict};
