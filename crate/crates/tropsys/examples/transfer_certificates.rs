// Certificates that classical determinant identities hold up to quasi-zeros.

use std::error::Error;

use tropsys::transfer::{parse_sym_polys, render_certificate, symbolic_det_identity, transfer_check, DetIdentity};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let certs = symbolic_det_identity(2, DetIdentity::DetMult)?;
    let c = &certs[0];
    println!("|A||B| ⪯ |AB| for 2x2:");
    print!("{}", render_certificate(&c.p, c.outcome.as_ref().map_err(|r| format!("refused: {r:?}"))?));

    for id in [DetIdentity::AdjMult, DetIdentity::LaplaceAdj] {
        let all = symbolic_det_identity(2, id)?;
        println!("{id:?}: {} of {} entries certified", all.iter().filter(|e| e.outcome.is_ok()).count(), all.len());
    }

    let polys = parse_sym_polys(&["x*y + (1,1)x^2", "x*y"])?;
    println!("x*y ⪯ x*y + x^2° : {}", transfer_check(&polys[0], &polys[1])?.is_ok());
    println!("x*y + x^2° ⪯ x*y : {}", transfer_check(&polys[1], &polys[0])?.is_ok());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
