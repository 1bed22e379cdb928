// Fuzzy-ring data of cancelative systems and the conversion back.

use std::error::Error;

use tropsys::analysis::{from_fuzzy, to_fuzzy, verify_fuzzy, FuzzyData};
use tropsys::registry::builtin;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for id in ["sign", "zn-3", "signs"] {
        let s = builtin(id)?;
        let d = to_fuzzy(&s)?;
        let ideal: Vec<String> = d.ideal.iter().map(|x| s.format(x)).collect();
        let back = from_fuzzy(&d, &s)?;
        let same = s
            .tangibles()
            .unwrap()
            .iter()
            .all(|t| back.negate(&back.elem(t.val.clone())).map(|x| x.val) == s.negate(t).map(|x| x.val));
        println!("{id:<6} ε={} A₀={{{}}} negation recovered: {same}", s.format(&d.epsilon), ideal.join(", "));
    }
    let s = builtin("sign")?;
    let bad = FuzzyData { epsilon: s.parse("1")?, ideal: vec![s.parse("0")?] };
    println!("ε = 1 with A₀ = {{0}} rejected: {}", verify_fuzzy(&s, &bad).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
