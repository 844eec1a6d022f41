//! Layer-cake decomposition of a cone member into weighted nested up-sets.

use std::error::Error;

use relent_cone::cone;
use relent_cone::REVector;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // Order: A B C AB AC BC ABC.
    let v = REVector::from_finite(3, &[0.5, 0.0, 0.25, 1.0, 1.0, 0.25, 2.0])?;
    let d = cone::layer_cake_decompose(&v)?;
    println!("v = {v}");
    for t in &d.terms {
        println!("  {:>5} x {}", t.weight, t.upset);
    }
    let back = cone::recompose(&d)?;
    println!("recomposed = {back}, error {:e}", back.max_abs_diff(&v)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
