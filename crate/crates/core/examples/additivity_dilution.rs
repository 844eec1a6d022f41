//! The two operations that make the realizable set a convex cone: tensor
//! products add vectors, and diluting rho towards sigma scales them by lambda
//! up to a binary-entropy correction.

use std::error::Error;

use relent_cone::lattice::UpSet;
use relent_cone::states::{self, ratio, StatePair};
use relent_cone::{realize, report};

fn h2(x: f64) -> f64 {
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = realize::realize_ray(&UpSet::from_labels(&["A"], 2)?, 1.0)?;
    let b = realize::realize_ray(&UpSet::from_labels(&["AB"], 2)?, 0.5)?;
    let joint = states::tensor(&a, &b)?;
    let rows = vec![
        ("a".to_string(), states::re_vector(&a)?),
        ("b".to_string(), states::re_vector(&b)?),
        ("a x b".to_string(), states::re_vector(&joint)?),
    ];
    print!("{}", report::vector_table(2, &rows)?);

    println!();
    let v = states::re_vector(&a)?;
    for (num, den) in [(1, 10), (1, 2), (9, 10)] {
        let lambda = num as f64 / den as f64;
        let rho = states::mix(&a.rho, &a.sigma, &ratio(num, den))?;
        let w = states::re_vector(&StatePair::new(rho, a.sigma.clone())?)?;
        let gap = v
            .entries()
            .iter()
            .map(|(s, x)| lambda * x.to_f64() - w.get(*s).to_f64())
            .fold(0.0, f64::max);
        println!("lambda = {lambda}: diluted {w}, max gap {gap:.4} <= h2 = {:.4}", h2(lambda));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
