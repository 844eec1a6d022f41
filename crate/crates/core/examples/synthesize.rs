//! Realize a target vector by a pair of classical distributions, then check
//! the pair independently and print it as JSON.

use std::error::Error;

use relent_cone::{json, realize, REVector};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // Order: A B AB.
    let target = REVector::from_finite(2, &[0.7, 0.0, 1.2])?;
    let r = realize::synthesize(&target)?;
    println!("target   {}", r.target);
    println!("achieved {}", r.achieved);
    println!("error    {:e}", r.max_abs_error);
    println!("layout   {:?}", r.pair.rho.layout());
    println!(
        "support  rho {} atoms, sigma {} atoms",
        r.pair.rho.support_size(),
        r.pair.sigma.support_size()
    );

    let check = realize::verify(&target, &r.pair, realize::DEFAULT_TOLERANCE)?;
    println!("verify passed: {}", check.passed);

    // The same document `relcone synthesize` writes.
    println!("{}", serde_json::to_string(&json::StatePairDoc::from_pair(&r.pair))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
