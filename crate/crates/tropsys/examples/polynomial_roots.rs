// Polynomial arithmetic and systemic roots over the supertropical semiring and the sign system.

use std::error::Error;

use tropsys::instances::{make_sign_system, make_supertropical};
use tropsys::polynomials::{eval, poly_mul, systemic_roots, Polynomial};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let t = make_supertropical();
    // (λ + 1)(λ + 3) over max-plus magnitudes
    let f = Polynomial::univariate(&t, &[(1, "0"), (0, "1")])?;
    let g = Polynomial::univariate(&t, &[(1, "0"), (0, "3")])?;
    let fg = poly_mul(&f, &g)?;
    println!("f·g = {}", fg.render());
    let roots: Vec<String> = systemic_roots(&fg)?.iter().map(|r| t.format(r)).collect();
    println!("roots of f·g: {}", roots.join(", "));
    println!("f·g(2) = {}", t.format(&eval(&fg, &[t.parse("2")?])?));

    let s = make_sign_system()?;
    let h = Polynomial::univariate(&s, &[(2, "1"), (0, "-1")])?;
    let roots: Vec<String> = systemic_roots(&h)?.iter().map(|r| s.format(r)).collect();
    println!("sign roots of {}: {}", h.render(), roots.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
