// Every bundled system passes the triple and surpassing-relation axioms; a broken table does not.

use std::error::Error;

use tropsys::core::axioms::verify_system;
use tropsys::instances::{load_finite_system, sign_table};
use tropsys::registry::bundled;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (id, s) in bundled()? {
        let (elems, how) = match s.elements() {
            Some(e) => (e, "all elements"),
            None => (s.probe(), "probe"),
        };
        verify_system(&s, &elems)?;
        println!("{id:<24} ok over {} ({how})", elems.len());
    }
    // Make 1 + 1 = -1 in the sign table: associativity breaks.
    let mut t = sign_table();
    let (one, minus) = (t.index("1").unwrap(), t.index("-1").unwrap());
    t.add[one][one] = minus;
    match load_finite_system(t) {
        Err(e) => println!("tampered sign table rejected: {e}"),
        Ok(_) => return Err("tampered table was accepted".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
