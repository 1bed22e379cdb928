// Classify a handful of bundled systems and print the headline invariants.

use std::error::Error;

use tropsys::analysis::classify;
use tropsys::registry::builtin;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for id in ["sign", "krasner", "zn-3", "truncated-9", "gf4-layered", "phase", "triangle"] {
        let s = builtin(id)?;
        let r = classify(&s)?;
        println!(
            "{id:<12} kind={:<6} char={} height={} meta-tangible={} bipotent={} case={}",
            r.kind.label(),
            r.characteristic,
            r.height,
            r.meta_tangible.render(),
            r.neg_bipotent.render(),
            r.dichotomy_case.label()
        );
        if id == "sign" {
            assert_eq!((r.characteristic, r.height.to_string().as_str()), (1, "2"));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
