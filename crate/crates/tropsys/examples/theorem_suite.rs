// Run the theorem checks, including the two layered counterexamples.

use std::error::Error;

use tropsys::analysis::{classify, run_theorems};
use tropsys::registry::builtin;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sign = builtin("sign")?;
    for r in run_theorems(&sign, &[])? {
        println!("sign  {}", r.render(&sign));
    }
    let t5 = builtin("truncated-5x2")?;
    for r in run_theorems(&t5, &["reversibility", "negated-implies-reversible"])? {
        println!("t5x2  {}", r.render(&t5));
    }
    let t9 = builtin("truncated-9")?;
    let flag = classify(&t9)?.t_strongly_negated;
    println!("t9    strongly negated: {} ({})", flag.render(), flag.witness.map(|w| w.render(&t9)).unwrap_or_default());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
