//! Exact solvers for Toeplitz graphs and the non-distance-regular family
//! `T_2n(W)`: construction, distances, twins, distance-regularity,
//! dihedral Cayley isomorphism, exact spectra, metric dimension, partition
//! dimension and k-domination.
//!
//! Vertices are 0-based in every API; labels `x_1..x_m` are used in all
//! text and JSON output.

pub mod budget;
pub mod dihedral;
pub mod distance;
pub mod domination;
pub mod error;
pub mod graph;
pub mod iso;
pub mod partition;
pub mod resolving;
pub mod spectral;
pub mod structure;
pub mod toeplitz;
mod vertex_set;

/// Largest supported vertex count (adjacency rows are 64-bit words).
pub const MAX_VERTICES: usize = 64;

pub use budget::Budget;
pub use dihedral::{dihedral_cayley, Dihedral, DihedralGroup};
pub use distance::DistanceMatrix;
pub use domination::{family_kdom_witness, is_k_dominating, k_domination_number, KDomination};
pub use error::{Error, Result};
pub use graph::{Graph, GraphJson};
pub use iso::{find_isomorphism, is_isomorphism};
pub use partition::{
    is_resolving_partition, partition_dimension, representation, Partition, PartitionDimension,
    PdOptions,
};
pub use resolving::{is_resolving_set, metric_dimension, twin_lower_bound, MetricDimension, ResolveReport};
pub use spectral::{char_poly, integer_spectrum, verify_family_spectrum, CharPoly, Spectrum};
pub use structure::{is_distance_regular, true_twins, IntersectionProfile, TwinPairs};
pub use toeplitz::{build_family, build_toeplitz, ToeplitzSpec};
pub use vertex_set::VertexSet;
