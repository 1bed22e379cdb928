// Power-set systems of finite hyperfields, and the way back from a meta-tangible system.

use std::error::Error;

use tropsys::analysis::{isomorphic, system_to_hypergroup};
use tropsys::hypersystems::{krasner, powerset_system, sign_hyperfield, tropical_chain};
use tropsys::instances::{make_boolean_supertropical, make_sign_system};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k = powerset_system(&krasner())?;
    let b = make_boolean_supertropical()?;
    println!("P(krasner) ≅ boolean supertropical: {}", isomorphic(&k, &b)?);

    let signs = powerset_system(&sign_hyperfield())?;
    let elems: Vec<String> = signs.elements().unwrap().iter().map(|e| signs.format(e)).collect();
    println!("P(signs) = {{{}}}", elems.join(", "));

    let h = system_to_hypergroup(&make_sign_system()?)?;
    let one = h.carrier.iter().position(|c| c == "1").unwrap();
    println!("recovered hyperaddition 1 ⊞ -1 = {}", h.fmt_set(h.add[one][h.neg[one]]));
    println!("round trip is an isomorphism: {}", isomorphic(&powerset_system(&h)?, &make_sign_system()?)?);

    let chain = tropical_chain(3);
    println!("tropical chain g2 ⊞ g2 = {}", chain.fmt_set(chain.add[2][2]));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
