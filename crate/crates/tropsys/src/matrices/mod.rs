//! Matrices over a system: determinants, adjoints, dependence and rank.

pub mod checks;
pub mod dependence;
pub mod det;
pub mod matrix;

pub use checks::{check_dependence_vs_det, check_det_identities, enumerate_matrices, DependenceReport, IdentityReport};
pub use dependence::{
    circ_dependent, column_rank, resolve_pool, row_rank, submatrix_rank, Dependence, Pool, Rank, ResolvedPool,
    DEFAULT_POOL_CAP,
};
pub use det::{adjoint, det, det_parts, permutations, singularity_class, DetParts, Singularity};
pub use matrix::{involution, Involution, Matrix};
