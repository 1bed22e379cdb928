//! Systems with a negation map and a surpassing relation, following the algebraic framework
//! that unifies tropical, supertropical, layered, symmetrized and hyperfield-derived
//! structures. Exact rational arithmetic throughout.

pub mod analysis;
pub mod core;
pub mod error;
pub mod hypersystems;
pub mod instances;
pub mod io;
pub mod matrices;
pub mod polynomials;
pub mod rational;
pub mod registry;
pub mod transfer;
pub mod tropicalization;

pub use crate::core::{Element, Family, Height, SurpassKind, SystemHandle, SystemImpl, TripleLevel, Val};
pub use crate::error::{AxiomViolation, Error, Result};
