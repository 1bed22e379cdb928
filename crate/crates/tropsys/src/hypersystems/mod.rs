//! Hyperfields viewed as systems of subsets.

pub mod hypergroup;
pub mod phase;
pub mod product;
pub mod triangle;

pub use hypergroup::{
    krasner, powerset_system, powerset_system_with, sign_hyperfield, tropical_chain, FiniteHypergroup, ProductMode,
};
pub use phase::{make_phase, make_phase_with, phase_add};
pub use product::{check_distributivity, generated_product, DistMode, DistReport};
pub use triangle::{make_triangle, make_triangle_with, triangle_add};
