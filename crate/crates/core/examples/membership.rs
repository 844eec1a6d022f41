//! Cone membership: a monotone vector passes, a broken one is reported with
//! the offending subset pairs.

use std::error::Error;

use relent_cone::cone::{self, Extended};
use relent_cone::REVector;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let inf = Extended::Infinite;
    let f = Extended::Finite;
    // Order: A B C AB AC BC ABC.
    let good = REVector::new(3, &[f(1.0), f(0.0), f(0.0), f(1.0), f(1.5), f(0.5), inf])?;
    let bad = REVector::new(3, &[f(2.0), f(0.0), f(0.0), f(1.0), f(2.0), f(0.0), f(2.0)])?;

    for (name, v) in [("good", &good), ("bad", &bad)] {
        let r = cone::check_membership(v);
        println!("{name}: {v} -> member = {}", r.member);
        for x in &r.violations {
            println!(
                "  D_{} = {} < D_{} = {}",
                x.superset, x.superset_value, x.subset, x.subset_value
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
