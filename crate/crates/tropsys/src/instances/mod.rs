//! Concrete systems: finite tables and parametric families.

pub mod builders;
pub mod finite;
pub mod parametric;

pub use builders::*;
pub use finite::{finite_table, load_finite_system, FiniteSurpass, FiniteSystem, FiniteTable};
pub use parametric::{
    make_classical, make_elt, make_layered, make_layered_strict, make_maxplus, make_supertropical, make_symmetrized,
    LayerSemiring,
};

use crate::core::SystemHandle;

/// Least k ≥ 1 with (k+1)a = a for every element, 0 if there is none.
pub fn characteristic(s: &SystemHandle) -> u64 {
    s.characteristic()
}
