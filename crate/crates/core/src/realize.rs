//! From a target vector to an explicit pair of states realizing it.
//!
//! A ray `λ · 1_U` comes from the XOR scheme for `U`: take `rho = ρ(0)` and
//! `sigma = p ρ(0) + (1 - p) ρ(1)` with `p = 2^-λ`. On an authorized set the
//! two marginals of `ρ(0)` and `ρ(1)` have disjoint supports, so the relative
//! entropy is exactly `-log2 p = λ`; on an unauthorized set they coincide and
//! it is zero. A general cone member is layer-caked into nested rays whose
//! pairs are tensored together, since relative-entropy vectors add under
//! tensor products.

use num_rational::BigRational;

use crate::cone::{self, Extended, MembershipReport, RayDecomposition, REVector};
use crate::error::{Error, Result};
use crate::lattice::{SubsetMask, UpSet};
use crate::schemes::{self, AccessStructure};
use crate::states::{self, JointDistribution, StatePair};

/// Tolerance for constructions whose mixing weights are exactly `1/2`.
pub const EXACT_TOLERANCE: f64 = 1e-9;
/// Tolerance for arbitrary ray weights, where `2^-λ` is rounded.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

/// Mixing weight `2^-λ`, converted exactly from its nearest `f64`.
pub fn ray_mixing_weight(lambda: f64) -> Result<BigRational> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::RayWeight(lambda));
    }
    let p = (-lambda).exp2();
    if p <= 0.0 || p >= 1.0 {
        return Err(Error::RayWeight(lambda));
    }
    BigRational::from_float(p).ok_or(Error::RayWeight(lambda))
}

/// A pair whose vector is `lambda` on the members of `u` and zero elsewhere.
pub fn realize_ray(u: &UpSet, lambda: f64) -> Result<StatePair> {
    let p = ray_mixing_weight(lambda)?;
    let scheme = schemes::dnf_scheme(&AccessStructure::new(u.clone()))?;
    scheme.weighted_pair(&p)
}

/// The one-atom pair on `n` parties; its vector is zero.
pub fn trivial_pair(n: usize) -> Result<StatePair> {
    let d = JointDistribution::point(vec![vec![1]; n], vec![0; n])?;
    Ok(StatePair::trivial(d))
}

#[derive(Clone, Debug)]
pub struct RealizationResult {
    pub target: REVector,
    pub decomposition: RayDecomposition,
    pub pair: StatePair,
    pub achieved: REVector,
    /// Largest `|achieved - target|` over all subsets, in bits.
    pub max_abs_error: f64,
}

/// [`synthesize_with_tolerance`] at [`DEFAULT_TOLERANCE`].
pub fn synthesize(v: &REVector) -> Result<RealizationResult> {
    synthesize_with_tolerance(v, DEFAULT_TOLERANCE)
}

/// Decomposes `v`, realizes each ray, tensors the pairs and recomputes the
/// vector. Fails with [`Error::Tolerance`] if any entry misses by more than
/// `tol` bits.
pub fn synthesize_with_tolerance(v: &REVector, tol: f64) -> Result<RealizationResult> {
    let decomposition = cone::layer_cake_decompose(v)?;
    let mut pair: Option<StatePair> = None;
    for term in &decomposition.terms {
        let ray = realize_ray(&term.upset, term.weight)?;
        pair = Some(match pair {
            Some(acc) => acc.tensor(&ray)?,
            None => ray,
        });
    }
    let pair = match pair {
        Some(p) => p,
        None => trivial_pair(v.n())?,
    };
    let achieved = states::re_vector(&pair)?;
    let max_abs_error = achieved.max_abs_diff(v)?;
    if !(max_abs_error <= tol) {
        return Err(Error::Tolerance {
            error: max_abs_error,
            tol,
        });
    }
    Ok(RealizationResult {
        target: v.clone(),
        decomposition,
        pair,
        achieved,
        max_abs_error,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Deviation {
    pub subset: SubsetMask,
    pub target: Extended,
    pub achieved: Extended,
    pub error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub tol: f64,
    pub deviations: Vec<Deviation>,
    pub max_abs_error: f64,
    /// Monotonicity of the achieved vector, allowing `tol` of rounding.
    pub achieved_membership: MembershipReport,
    pub passed: bool,
}

impl VerificationReport {
    /// Subsets whose deviation exceeds the tolerance.
    pub fn failing(&self) -> Vec<SubsetMask> {
        self.deviations
            .iter()
            .filter(|d| !(d.error <= self.tol))
            .map(|d| d.subset)
            .collect()
    }
}

/// Recomputes the vector of `pair` and compares it with `v` entry by entry.
pub fn verify(v: &REVector, pair: &StatePair, tol: f64) -> Result<VerificationReport> {
    if v.n() != pair.n() {
        return Err(Error::PartyMismatch {
            left: v.n(),
            right: pair.n(),
        });
    }
    let achieved = states::re_vector(pair)?;
    let deviations: Vec<Deviation> = v
        .entries()
        .into_iter()
        .map(|(subset, target)| {
            let got = achieved.get(subset);
            Deviation {
                subset,
                target,
                achieved: got,
                error: target.abs_diff(got),
            }
        })
        .collect();
    let max_abs_error = deviations.iter().map(|d| d.error).fold(0.0, f64::max);
    let achieved_membership = cone::check_membership_with_tolerance(&achieved, tol);
    let passed = max_abs_error <= tol && achieved_membership.member;
    Ok(VerificationReport {
        tol,
        deviations,
        max_abs_error,
        achieved_membership,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ray6() -> UpSet {
        UpSet::from_labels(&["A", "BC"], 3).unwrap()
    }

    #[test]
    fn ray_weights() {
        assert_eq!(ray_mixing_weight(2.0).unwrap(), states::ratio(1, 4));
        assert!(ray_mixing_weight(0.0).is_err());
        assert!(ray_mixing_weight(f64::INFINITY).is_err());
        assert!(ray_mixing_weight(-1.0).is_err());
        assert!(ray_mixing_weight(1e-300).is_err());
    }

    #[test]
    fn realize_ray_examples() {
        let pair = realize_ray(&ray6(), 1.0).unwrap();
        let v = states::re_vector(&pair).unwrap();
        let expected = REVector::from_finite(3, &[1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0]).unwrap();
        assert!(v.max_abs_diff(&expected).unwrap() <= 1e-9);

        let pair = realize_ray(&ray6(), 2.0).unwrap();
        let v = states::re_vector(&pair).unwrap();
        let expected = REVector::from_finite(3, &[2.0, 0.0, 0.0, 2.0, 2.0, 2.0, 2.0]).unwrap();
        assert!(v.max_abs_diff(&expected).unwrap() <= 1e-9);
        for (s, x) in v.entries() {
            if !ray6().contains(s) {
                assert_eq!(x, Extended::ZERO, "{s}");
            }
        }
    }

    #[test]
    fn synthesize_examples() {
        let v = REVector::from_finite(3, &[1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0]).unwrap();
        let r = synthesize(&v).unwrap();
        assert!(r.max_abs_error <= 1e-9);

        let v = REVector::from_finite(2, &[0.5, 0.0, 2.0]).unwrap();
        let r = synthesize(&v).unwrap();
        assert_eq!(r.decomposition.terms.len(), 2);
        assert!(r.max_abs_error <= 1e-9);
        assert_eq!(r.pair.rho.layout(), &vec![vec![2, 2], vec![2, 1]]);

        let r = synthesize(&REVector::zeros(3).unwrap()).unwrap();
        assert_eq!(r.max_abs_error, 0.0);
        assert_eq!(r.pair.rho, r.pair.sigma);
    }

    #[test]
    fn synthesize_rejects_non_members() {
        let v = REVector::from_finite(2, &[1.0, 0.0, 0.5]).unwrap();
        assert!(matches!(synthesize(&v), Err(Error::NotMember(_))));
    }

    #[test]
    fn verify_flags_corrupted_sigma() {
        let pair = realize_ray(&ray6(), 1.0).unwrap();
        let target = REVector::indicator(&ray6(), 1.0).unwrap();
        assert!(verify(&target, &pair, 1e-9).unwrap().passed);

        let bad = StatePair::new(pair.rho.clone(), pair.rho.clone()).unwrap();
        let r = verify(&target, &bad, 1e-9).unwrap();
        assert!(!r.passed);
        assert!(r.failing().iter().any(|s| s.label() == "A"));
    }
}
