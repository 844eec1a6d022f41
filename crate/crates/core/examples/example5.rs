//! Weighted threshold secret sharing: a (4,2) Shamir scheme over GF(5) with
//! A holding two shares. Prints its state pair and relative-entropy vector.

use std::error::Error;

use relent_cone::{demo, report, schemes};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    print!("{}", report::example5()?);

    let audit = schemes::verify_scheme(&demo::example5_scheme()?, &demo::example5_structure()?)?;
    println!("\nauthorized sets recover the secret, others learn nothing: {}", audit.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
