// Determinants, adjoints and ranks over the sign system and the supertropical semiring.

use std::error::Error;

use tropsys::instances::{make_sign_system, make_supertropical};
use tropsys::matrices::{adjoint, det, row_rank, singularity_class, Matrix, Pool};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let s = make_sign_system()?;
    let a = Matrix::parse(&s, &[&["1", "1"], &["1", "-1"]])?;
    let b = Matrix::parse(&s, &[&["1", "-1"], &["-1", "1"]])?;
    println!("A =\n{}|A| = {}", a.render(), s.format(&det(&a)?));
    println!("adj(A) =\n{}", adjoint(&a)?.render());
    let ab = a.mul(&b)?;
    let lhs = s.mul(&det(&a)?, &det(&b)?)?;
    println!("|A||B| = {} ⪯ |AB| = {}: {}", s.format(&lhs), s.format(&det(&ab)?), s.surpasses(&det(&ab)?, &lhs)?);
    println!("B is {} with row rank {}", singularity_class(&b)?.label(), row_rank(&b, &Pool::Tangibles)?.rank);

    let t = make_supertropical();
    let m = Matrix::parse(&t, &[&["0", "1", "2"], &["1", "2", "3"], &["2", "3", "4"]])?;
    println!("supertropical |M| = {} ({})", t.format(&det(&m)?), singularity_class(&m)?.label());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
