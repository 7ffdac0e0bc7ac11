//! Generalized Kneser hypergraphs: construction, exact coloring, bound
//! formulas, coloring reductions, and Tverberg-partition checks.

pub mod bounds;
pub mod error;
pub mod hypergraph;
pub mod lp;
pub mod reductions;
pub mod sets;
pub mod solver;
pub mod spec;
pub mod sweeps;
pub mod tverberg;

pub use error::{Error, Result};
pub use hypergraph::{build_minimal_supports, Hypergraph};
pub use sets::{KSubset, Partition, SVector};
pub use solver::{chromatic_number, chromatic_number_with, is_proper, ChiResult, Coloring, SolverConfig};
pub use spec::{Family, HypergraphSpec};
