#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use relent_cone::lattice::{self, UpSet};
use relent_cone::states::{JointDistribution, Layout, StatePair};
use relent_cone::REVector;

/// One register per party, alphabet sizes drawn from `1..=max_alphabet`.
pub fn random_layout(rng: &mut ChaCha8Rng, n: usize, max_alphabet: u32) -> Layout {
    (0..n).map(|_| vec![rng.gen_range(1..=max_alphabet)]).collect()
}

fn all_tuples(layout: &Layout) -> Vec<Vec<u32>> {
    let sizes: Vec<u32> = layout.iter().flatten().copied().collect();
    let mut out = vec![Vec::new()];
    for &a in &sizes {
        out = out
            .into_iter()
            .flat_map(|t: Vec<u32>| {
                (0..a).map(move |s| {
                    let mut t = t.clone();
                    t.push(s);
                    t
                })
            })
            .collect();
    }
    out
}

/// Integer weights in `0..=9` (or `1..=9` with `full_support`), normalized
/// exactly.
pub fn random_distribution(rng: &mut ChaCha8Rng, layout: &Layout, full_support: bool) -> JointDistribution {
    let tuples = all_tuples(layout);
    loop {
        let low = if full_support { 1 } else { 0 };
        let weights: Vec<i64> = tuples.iter().map(|_| rng.gen_range(low..=9)).collect();
        let total: i64 = weights.iter().sum();
        if total == 0 {
            continue;
        }
        let atoms = tuples
            .iter()
            .cloned()
            .zip(weights)
            .map(|(t, w)| (t, BigRational::new(BigInt::from(w), BigInt::from(total))));
        return JointDistribution::new(layout.clone(), atoms).expect("valid random distribution");
    }
}

/// Random pair on a random layout. With `finite`, sigma has full support so
/// every relative entropy is finite.
pub fn random_pair(rng: &mut ChaCha8Rng, n: usize, max_alphabet: u32, finite: bool) -> StatePair {
    let layout = random_layout(rng, n, max_alphabet);
    let rho = random_distribution(rng, &layout, false);
    let sigma = random_distribution(rng, &layout, finite);
    StatePair::new(rho, sigma).expect("same layout")
}

/// Sum of up to `max_rays` random up-set indicators with weights in
/// `[lo, hi]`.
pub fn random_cone_member(
    rng: &mut ChaCha8Rng,
    upsets: &[UpSet],
    max_rays: usize,
    lo: f64,
    hi: f64,
) -> REVector {
    let n = upsets[0].n();
    let mut v = REVector::zeros(n).unwrap();
    for _ in 0..rng.gen_range(1..=max_rays) {
        let u = &upsets[rng.gen_range(0..upsets.len())];
        let w = rng.gen_range(lo..=hi);
        v = v.try_add(&REVector::indicator(u, w).unwrap()).unwrap();
    }
    v
}

pub fn upsets(n: usize) -> Vec<UpSet> {
    lattice::enumerate_upsets(n).unwrap()
}

/// Binary entropy in bits.
pub fn h2(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        0.0
    } else {
        -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
    }
}
