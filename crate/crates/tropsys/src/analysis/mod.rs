//! Classification, theorem checks and conversions between presentations.

pub mod classify;
pub mod convert;
pub mod ctx;
pub mod theorems;

pub use classify::{classify, classify_bounded, Basis, ClassificationReport, DichotomyCase, Kind};
pub use convert::{
    find_isomorphism, from_fuzzy, isomorphic, property_p, system_to_hypergroup, to_fuzzy, verify_fuzzy, FuzzyData,
};
pub use ctx::{Flag, Witness};
pub use theorems::{run_theorems, run_theorems_bounded, TheoremResult, Verdict, THEOREM_IDS};
