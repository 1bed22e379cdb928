//! Puiseux series and their tropicalizations.

pub mod maps;
pub mod series;

pub use maps::{check_morphism, tropicalize, tropicalize_val, MorphismReport, TropTarget, Violation};
pub use series::{series_add, series_mul, series_negate, PuiseuxSeries};
