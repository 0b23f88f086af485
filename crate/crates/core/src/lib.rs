//! Orientation characters of multigraph automorphisms.
//!
//! An automorphism of a multigraph (loops and parallel edges allowed) acts
//! on vertices, on edges, and on the cycle space. This crate computes two
//! signs from that action and checks them against each other:
//!
//! * [`theta_s`]: sign of the vertex permutation times the product of the
//!   per-edge orientation signs;
//! * [`theta_k`]: sign of the unsigned edge permutation times the sign of
//!   the determinant of the induced map on `H1(G)`.
//!
//! Multigraphs use a half-edge encoding ([`Multigraph`]); automorphisms are
//! half-edge permutations ([`Automorphism`]); all linear algebra is exact
//! over `BigInt` ([`IntMatrix`]).

pub mod automorphism;
pub mod error;
pub mod harness;
pub mod homology;
pub mod matrix;
pub mod multigraph;
pub mod orientation;
pub mod perm;

pub use automorphism::{
    compose, count_automorphisms, enumerate_automorphisms, induced_signed_edge_perm, invert, Automorphism,
    SignedEdgePermutation,
};
pub use error::{Error, Result};
pub use harness::{
    census_orientable, enumerate_multigraphs, golden_checks, sweep_verify, SweepParams, VerificationReport,
};
pub use homology::{boundary_matrix, fundamental_cycles, induced_h1_matrix, CycleBasis};
pub use matrix::IntMatrix;
pub use multigraph::{
    components, parse_graph, reference_orientation, spanning_forest, spanning_forest_rooted, ComponentPartition,
    Multigraph, Orientation, SpanningForest,
};
pub use orientation::{
    determinant_relation_check, has_odd_automorphism, theta_k, theta_k_extended, theta_s, verify_theorem,
    DeterminantFactors, ThetaValue,
};
pub use perm::{permutation_sign, Sign};
