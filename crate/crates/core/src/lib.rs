//! Exact b-symbol weight distributions of MDS codes.
//!
//! The closed-form distribution lives in [`distribution`]; [`oracle`]
//! recomputes the same quantities by enumerating every codeword of small
//! Reed–Solomon codes so that each closed form can be checked exactly.
//!
//! Counts are generic over [`Count`]; [`BigCount`] is the default.

pub mod bsymbol;
pub mod cli;
pub mod counting;
pub mod distribution;
pub mod gf;
pub mod linear_code;
pub mod oracle;

pub use bsymbol::{b_distance, b_weight, read_vector, shape_decompose, weight_from_shape, ShapeDecomposition};
pub use counting::{binom, compositions, n_b, n_infty, Composition, Count};
pub use distribution::{
    b_distribution, corollary_check, f_count, f_weight, hamming_count, DistributionQuery, FProfile, Mode,
    WeightDistribution,
};
pub use gf::{FieldElement, FieldSpec};
pub use linear_code::{rs_code, CodeParams, Codeword, CoordinateSet, LinearCode};

/// Arbitrary-precision count.
pub type BigCount = num_bigint::BigInt;

/// Weight distribution with arbitrary-precision counts.
pub type BigDistribution = WeightDistribution<BigCount>;

/// Weight distribution with 128-bit counts, for parameters known to fit.
pub type SmallDistribution = WeightDistribution<i128>;
