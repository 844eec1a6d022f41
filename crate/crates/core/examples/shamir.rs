//! Finite-field Shamir sharing: split a secret, reconstruct it from any k
//! shares, and audit weighted threshold schemes subset by subset.

use std::error::Error;

use relent_cone::schemes::{self, AccessStructure, FieldElement};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = 7;
    let fe = |x| FieldElement::new(x, p);
    // Secret 3, degree-2 polynomial 3 + 5x + x^2.
    let coeffs = [fe(3)?, fe(5)?, fe(1)?];
    let shares: Vec<_> = (1..=5)
        .map(|x| Ok((fe(x)?, schemes::evaluate(&coeffs, fe(x)?))))
        .collect::<Result<_, Box<dyn Error>>>()?;
    for s in &shares {
        println!("share at x = {}: {}", s.0.value(), s.1.value());
    }
    let secret = schemes::interpolate_at_zero(&shares[2..5])?;
    println!("recovered from shares 3-5: {}", secret.value());

    println!();
    for (alloc, k) in [(vec![2, 1, 1], 2), (vec![1, 1, 1, 1], 3), (vec![3, 2, 1], 4)] {
        let total: usize = alloc.iter().sum();
        let q = schemes::smallest_prime_above(total as u64);
        let a = AccessStructure::weighted_threshold(&alloc, k)?;
        let s = schemes::weighted_threshold_scheme(alloc.len(), &alloc, k, q)?;
        let audit = schemes::verify_scheme(&s, &a)?;
        println!(
            "allocation {alloc:?}, threshold {k}, GF({q}): authorized {} -> audit passed {}",
            a.upset(),
            audit.passed()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
