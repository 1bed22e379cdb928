// Write a system and a hypergroup to text, read them back, and load a matrix file.

use std::error::Error;

use tropsys::hypersystems::tropical_chain;
use tropsys::instances::zn_layered_table;
use tropsys::io::{load_system, parse_hypergroup, parse_matrix, write_hypergroup, write_system};
use tropsys::matrices::det;
use tropsys::registry::builtin;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let text = write_system(&zn_layered_table(2, 1))?;
    print!("{text}");
    let s = load_system(&text)?;
    println!("reloaded `{}` with {} elements", s.name(), s.elements().unwrap().len());

    let hyp = write_hypergroup(&tropical_chain(2))?;
    print!("{hyp}");
    println!("parsed back {} elements", parse_hypergroup(&hyp)?.size());

    let m = parse_matrix("2 2 symmetrized\n(0 | -inf) (1 | -inf)\n(1 | -inf) (2 | -inf)\n", builtin)?;
    println!("symmetrized det = {}", m.sys.format(&det(&m)?));

    match load_system("carrier 0 1\ntangibles 1\nadd\n   0 1\n  0 0 1\n  1 1 2\n") {
        Err(e) => println!("typo reported: {e}"),
        Ok(_) => return Err("bad table accepted".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
