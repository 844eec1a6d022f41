//! Access structure generated by {AB, CD}: once with two (2,2) Shamir
//! schemes over GF(3), once with the generic one-clause-per-minimal-set
//! XOR scheme. Both give the same vector.

use std::error::Error;

use relent_cone::{demo, report, schemes, states};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    print!("{}", report::example6()?);

    let structure = demo::example6_structure()?;
    let xor = schemes::dnf_scheme(&structure)?;
    let pair = xor.state_pair()?;
    println!("\nXOR variant over GF(2), alphabet layout {:?}", xor.layout());
    let v = states::re_vector(&pair)?;
    print!("{}", report::vector_table(4, &[("xor".into(), v.clone())])?);

    let shamir = states::re_vector(&demo::example6_pair()?)?;
    println!("max difference from the GF(3) vector: {:e}", v.max_abs_diff(&shamir)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
