//! Counting the invariant subspaces of linear operators on ℝⁿ.
//!
//! Two halves:
//!
//! * [`spectrum`] enumerates the set of every count that some operator on ℝⁿ
//!   can realize. An operator with finitely many invariant subspaces is, up to
//!   similarity, a direct sum of Jordan blocks with pairwise distinct roots; a
//!   block of size `k` (or a real block of size `2k` for a conjugate pair)
//!   carries a chain of `k + 1` nested invariant subspaces, and the count is the
//!   product of those chain lengths.
//! * [`analyzer`] takes a concrete rational matrix and decides, in exact
//!   arithmetic, whether its count is finite, and if so computes it.
//!
//! [`combinatorics`] supplies the partition machinery, [`exactalg`] the exact
//! polynomial and matrix algebra, and [`cli`] the command-line front end.

pub mod analyzer;
pub mod cli;
pub mod combinatorics;
mod error;
pub mod exactalg;
pub mod spectrum;

pub use analyzer::{
    count_invariant_subspaces, is_count_finite, jordan_signature, realize_config, JordanSignature,
    SubspaceCount,
};
pub use combinatorics::{
    derived_composition, for_each_partition, partition_count, partitions_of, Composition,
    DerivedComposition, Multipartition, Partition,
};
pub use error::{Error, Result};
pub use exactalg::{
    char_poly, count_real_roots, min_poly, squarefree_decompose, Rational, RationalMatrix,
    RationalPolynomial, SquarefreeDecomposition,
};
pub use spectrum::{
    count_for_config, dimension_profile, enumerate_configs, enumerate_mn, oracle_mn, BlockConfig,
    DimensionProfile, SpectrumSet,
};
