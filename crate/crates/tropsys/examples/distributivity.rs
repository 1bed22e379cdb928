// The triangle hypersystem with the pointwise product is not distributive;
// expanding the left factor into tangibles repairs it.

use std::error::Error;

use tropsys::hypersystems::{check_distributivity, generated_product, make_triangle, DistMode};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let t = make_triangle();
    let full = check_distributivity(&t, DistMode::Full)?;
    let w = full.witness.as_ref().map(|w| w.iter().map(|e| t.format(e)).collect::<Vec<_>>().join(", "));
    println!("pointwise, full:   holds={} witness=({})", full.holds, w.unwrap_or_default());
    println!("pointwise, weak-T: holds={}", check_distributivity(&t, DistMode::WeakT)?.holds);
    let g = generated_product(&t);
    let fixed = check_distributivity(&g, DistMode::Full)?;
    println!("generated, full:   holds={} over {} triples", fixed.holds, fixed.checked);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
