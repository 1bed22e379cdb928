// Leading-term maps from Puiseux series into the tropical targets.

use std::error::Error;

use tropsys::tropicalization::{check_morphism, series_add, tropicalize, PuiseuxSeries, TropTarget};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f = PuiseuxSeries::parse("3*t^(-2) + 1*t^(1)")?;
    let g = PuiseuxSeries::parse("-3*t^(-2) + t^(1/2)")?;
    for target in TropTarget::ALL {
        let s = target.system();
        let (vf, vg, vsum) =
            (tropicalize(&s, &f, target), tropicalize(&s, &g, target), tropicalize(&s, &series_add(&f, &g), target));
        println!(
            "{:<16} v(f)={:<12} v(g)={:<12} v(f+g)={:<14} v(f)+v(g)={}",
            target.id(),
            s.format(&vf),
            s.format(&vg),
            s.format(&vsum),
            s.format(&s.add(&vf, &vg)?)
        );
    }
    let report = check_morphism(TropTarget::SignSymmetrized, 200, 7)?;
    print!("{}", report.render());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
