//! Extremal rays of the cone for n = 1..4, and the n = 3 table up to party
//! relabeling.

use std::error::Error;

use relent_cone::{lattice, report};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 1..=4 {
        let all = lattice::enumerate_upsets(n)?;
        let classes = lattice::permutation_classes(&all, n)?;
        println!("n = {n}: {} up-sets in {} classes", all.len(), classes.len());
    }
    println!();
    print!("{}", report::ray_table(3, true)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
