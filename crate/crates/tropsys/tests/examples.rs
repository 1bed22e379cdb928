//! Every example runs to completion.

mod classify_systems {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classify_systems.rs"));
}

#[test]
fn classify_systems_runs() {
    classify_systems::run_example().unwrap();
}

mod distributivity {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/distributivity.rs"));
}

#[test]
fn distributivity_runs() {
    distributivity::run_example().unwrap();
}

mod file_formats {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/file_formats.rs"));
}

#[test]
fn file_formats_runs() {
    file_formats::run_example().unwrap();
}

mod fuzzy_rings {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fuzzy_rings.rs"));
}

#[test]
fn fuzzy_rings_runs() {
    fuzzy_rings::run_example().unwrap();
}

mod hyperfield_systems {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hyperfield_systems.rs"));
}

#[test]
fn hyperfield_systems_runs() {
    hyperfield_systems::run_example().unwrap();
}

mod instance_axioms {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/instance_axioms.rs"));
}

#[test]
fn instance_axioms_runs() {
    instance_axioms::run_example().unwrap();
}

mod matrix_determinants {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/matrix_determinants.rs"));
}

#[test]
fn matrix_determinants_runs() {
    matrix_determinants::run_example().unwrap();
}

mod polynomial_roots {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/polynomial_roots.rs"));
}

#[test]
fn polynomial_roots_runs() {
    polynomial_roots::run_example().unwrap();
}

mod theorem_suite {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/theorem_suite.rs"));
}

#[test]
fn theorem_suite_runs() {
    theorem_suite::run_example().unwrap();
}

mod transfer_certificates {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/transfer_certificates.rs"));
}

#[test]
fn transfer_certificates_runs() {
    transfer_certificates::run_example().unwrap();
}

mod tropicalization {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tropicalization.rs"));
}

#[test]
fn tropicalization_runs() {
    tropicalization::run_example().unwrap();
}
