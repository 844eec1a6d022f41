//! The monotonicity cone: vectors indexed by nonempty subsets that are
//! nonnegative and never decrease when a subset grows.
//!
//! Members decompose canonically into a nested chain of up-set indicators by
//! slicing the vector at each of its distinct positive values.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::lattice::{self, SubsetMask, UpSet};

/// Relative level gap below which two float entries share a level.
pub const LEVEL_MERGE_TOLERANCE: f64 = 1e-12;

/// A nonnegative extended real measured in bits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Extended {
    Finite(f64),
    Infinite,
}

impl Extended {
    pub const ZERO: Extended = Extended::Finite(0.0);

    pub fn is_finite(self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(self) -> Option<f64> {
        match self {
            Extended::Finite(x) => Some(x),
            Extended::Infinite => None,
        }
    }

    /// `f64::INFINITY` for the infinite value.
    pub fn to_f64(self) -> f64 {
        self.finite().unwrap_or(f64::INFINITY)
    }

    /// Absolute difference; two infinities are at distance zero.
    pub fn abs_diff(self, other: Extended) -> f64 {
        match (self, other) {
            (Extended::Finite(a), Extended::Finite(b)) => (a - b).abs(),
            (Extended::Infinite, Extended::Infinite) => 0.0,
            _ => f64::INFINITY,
        }
    }
}

impl From<f64> for Extended {
    fn from(x: f64) -> Self {
        if x == f64::INFINITY {
            Extended::Infinite
        } else {
            Extended::Finite(x)
        }
    }
}

impl PartialOrd for Extended {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Extended::Finite(a), Extended::Finite(b)) => a.partial_cmp(b),
            (Extended::Finite(_), Extended::Infinite) => Some(Ordering::Less),
            (Extended::Infinite, Extended::Finite(_)) => Some(Ordering::Greater),
            (Extended::Infinite, Extended::Infinite) => Some(Ordering::Equal),
        }
    }
}

impl Add for Extended {
    type Output = Extended;

    fn add(self, rhs: Extended) -> Extended {
        match (self, rhs) {
            (Extended::Finite(a), Extended::Finite(b)) => Extended::Finite(a + b),
            _ => Extended::Infinite,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(x) => write!(f, "{x}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

/// One value per nonempty subset of `[n]`.
#[derive(Clone, Debug, PartialEq)]
pub struct REVector {
    n: usize,
    /// Indexed by `mask.bits() - 1`.
    values: Vec<Extended>,
}

impl REVector {
    /// The all-zero vector.
    pub fn zeros(n: usize) -> Result<Self> {
        lattice::check_n(n)?;
        Ok(REVector {
            n,
            values: vec![Extended::ZERO; (1 << n) - 1],
        })
    }

    /// Builds a vector from entries listed in [`lattice::subsets`] order.
    pub fn new(n: usize, entries: &[Extended]) -> Result<Self> {
        let order = lattice::subsets(n)?;
        if entries.len() != order.len() {
            return Err(Error::VectorLength {
                got: entries.len(),
                expected: order.len(),
            });
        }
        let mut v = Self::zeros(n)?;
        for (s, &x) in order.into_iter().zip(entries) {
            v.set(s, x)?;
        }
        Ok(v)
    }

    /// Finite entries in [`lattice::subsets`] order.
    pub fn from_finite(n: usize, entries: &[f64]) -> Result<Self> {
        let entries: Vec<Extended> = entries.iter().map(|&x| Extended::from(x)).collect();
        Self::new(n, &entries)
    }

    /// `weight` on every member of `u`, zero elsewhere.
    pub fn indicator(u: &UpSet, weight: f64) -> Result<Self> {
        let mut v = Self::zeros(u.n())?;
        for s in u.members() {
            v.set(s, Extended::Finite(weight))?;
        }
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: SubsetMask) -> Extended {
        self.values[s.bits() as usize - 1]
    }

    /// Sets one entry, rejecting NaN and negative values.
    pub fn set(&mut self, s: SubsetMask, value: Extended) -> Result<()> {
        let s = SubsetMask::new(s.bits(), self.n)?;
        if let Extended::Finite(x) = value {
            if x.is_nan() || x < 0.0 {
                return Err(Error::InvalidEntry {
                    subset: s.label(),
                    value: x,
                });
            }
        }
        self.values[s.bits() as usize - 1] = value;
        Ok(())
    }

    /// `(subset, value)` pairs in [`lattice::subsets`] order.
    pub fn entries(&self) -> Vec<(SubsetMask, Extended)> {
        lattice::subsets(self.n)
            .expect("n validated on construction")
            .into_iter()
            .map(|s| (s, self.get(s)))
            .collect()
    }

    /// Values in [`lattice::subsets`] order.
    pub fn values(&self) -> Vec<Extended> {
        self.entries().into_iter().map(|(_, v)| v).collect()
    }

    /// Finite values in [`lattice::subsets`] order, `None` if any entry is
    /// infinite.
    pub fn finite_values(&self) -> Option<Vec<f64>> {
        self.values().into_iter().map(Extended::finite).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// Largest entrywise deviation.
    pub fn max_abs_diff(&self, other: &REVector) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::PartyMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.abs_diff(*b))
            .fold(0.0, f64::max))
    }

    /// Entrywise sum.
    pub fn try_add(&self, other: &REVector) -> Result<REVector> {
        if self.n != other.n {
            return Err(Error::PartyMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| *a + *b)
            .collect();
        Ok(REVector { n: self.n, values })
    }
}

impl fmt::Display for REVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// A monotonicity failure: `subset ⊂ superset` but `v[superset] < v[subset]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub superset: SubsetMask,
    pub subset: SubsetMask,
    pub superset_value: f64,
    pub subset_value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipReport {
    pub n: usize,
    pub member: bool,
    pub violations: Vec<Violation>,
    /// Whether the subsets carrying `+inf` form an up-set (vacuous if none).
    pub infinite_part_ok: bool,
}

/// Exhaustive membership test with no slack.
pub fn check_membership(v: &REVector) -> MembershipReport {
    check_membership_with_tolerance(v, 0.0)
}

/// Membership test that only reports finite pairs whose decrease exceeds
/// `tol` bits.
pub fn check_membership_with_tolerance(v: &REVector, tol: f64) -> MembershipReport {
    let order = lattice::subsets(v.n).expect("n validated on construction");
    let mut violations = Vec::new();
    for &sup in &order {
        let Extended::Finite(big) = v.get(sup) else {
            continue;
        };
        for &sub in &order {
            if sub == sup || !sub.is_subset_of(sup) {
                continue;
            }
            if let Extended::Finite(small) = v.get(sub) {
                if small - big > tol {
                    violations.push(Violation {
                        superset: sup,
                        subset: sub,
                        superset_value: big,
                        subset_value: small,
                    });
                }
            }
        }
    }
    let infinite: Vec<SubsetMask> = order
        .iter()
        .copied()
        .filter(|s| !v.get(*s).is_finite())
        .collect();
    let infinite_part_ok =
        infinite.is_empty() || lattice::is_upset(&infinite, v.n).expect("valid masks");
    MembershipReport {
        n: v.n,
        member: violations.is_empty() && infinite_part_ok,
        violations,
        infinite_part_ok,
    }
}

/// `weight * indicator(upset)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RayTerm {
    pub weight: f64,
    pub upset: UpSet,
}

/// A positive combination of strictly nested up-set indicators, listed from
/// the innermost (smallest) up-set outward.
#[derive(Clone, Debug, PartialEq)]
pub struct RayDecomposition {
    pub n: usize,
    pub terms: Vec<RayTerm>,
}

impl RayDecomposition {
    pub fn empty(n: usize) -> Self {
        RayDecomposition { n, terms: Vec::new() }
    }

    /// Checks positivity and strict nesting.
    pub fn validate(&self) -> Result<()> {
        for t in &self.terms {
            if !(t.weight > 0.0 && t.weight.is_finite()) {
                return Err(Error::RayWeight(t.weight));
            }
            if t.upset.n() != self.n {
                return Err(Error::PartyMismatch {
                    left: t.upset.n(),
                    right: self.n,
                });
            }
        }
        for w in self.terms.windows(2) {
            if !(w[0].upset.is_subfamily_of(&w[1].upset) && w[0].upset.len() < w[1].upset.len())
            {
                return Err(Error::NotAnUpSet);
            }
        }
        Ok(())
    }
}

/// Slices a finite cone member at its distinct positive values.
///
/// With levels `t_1 > ... > t_k > 0`, term `i` is the up-set
/// `{S : v_S >= t_i}` weighted by `t_i - t_{i+1}` (`t_{k+1} = 0`). Values
/// within [`LEVEL_MERGE_TOLERANCE`] (relative) of a level's largest value are
/// folded into that level.
pub fn layer_cake_decompose(v: &REVector) -> Result<RayDecomposition> {
    if let Some((s, _)) = v.entries().into_iter().find(|(_, x)| !x.is_finite()) {
        return Err(Error::InfiniteEntry(s.label()));
    }
    let report = check_membership(v);
    if !report.member {
        return Err(Error::NotMember(Box::new(report)));
    }

    let mut positive: Vec<f64> = v
        .values
        .iter()
        .filter_map(|x| x.finite())
        .filter(|&x| x > 0.0)
        .collect();
    positive.sort_by(|a, b| b.total_cmp(a));

    // (representative value, threshold) per level, descending.
    let mut levels: Vec<(f64, f64)> = Vec::new();
    for x in positive {
        match levels.last_mut() {
            Some((top, low)) if *top - x <= LEVEL_MERGE_TOLERANCE * *top => *low = x,
            _ => levels.push((x, x)),
        }
    }

    let order = lattice::subsets(v.n)?;
    let mut terms = Vec::with_capacity(levels.len());
    for (i, &(value, threshold)) in levels.iter().enumerate() {
        let next = levels.get(i + 1).map_or(0.0, |l| l.0);
        let members: Vec<SubsetMask> = order
            .iter()
            .copied()
            .filter(|s| v.get(*s).to_f64() >= threshold)
            .collect();
        terms.push(RayTerm {
            weight: value - next,
            upset: UpSet::new(&members, v.n)?,
        });
    }
    Ok(RayDecomposition { n: v.n, terms })
}

/// `Σ weight_i · indicator(U_i)`.
pub fn recompose(d: &RayDecomposition) -> Result<REVector> {
    let mut out = REVector::zeros(d.n)?;
    for t in &d.terms {
        if t.upset.n() != d.n {
            return Err(Error::PartyMismatch {
                left: t.upset.n(),
                right: d.n,
            });
        }
        for s in t.upset.members() {
            let cur = out.get(s);
            out.set(s, cur + Extended::Finite(t.weight))?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_upsets;

    fn ray6() -> REVector {
        REVector::from_finite(3, &[1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0]).unwrap()
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(REVector::from_finite(2, &[f64::NAN, 0.0, 0.0]).is_err());
        assert!(REVector::from_finite(2, &[-1.0, 0.0, 0.0]).is_err());
        assert!(matches!(
            REVector::from_finite(2, &[0.0, 0.0]),
            Err(Error::VectorLength { .. })
        ));
    }

    #[test]
    fn membership_examples() {
        assert!(check_membership(&ray6()).member);

        let v = REVector::from_finite(2, &[1.0, 0.0, 0.5]).unwrap();
        let r = check_membership(&v);
        assert!(!r.member);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].superset.label(), "AB");
        assert_eq!(r.violations[0].subset.label(), "A");

        let v = REVector::from_finite(2, &[f64::INFINITY, 0.0, f64::INFINITY]).unwrap();
        let r = check_membership(&v);
        assert!(r.member && r.infinite_part_ok);

        let v = REVector::from_finite(2, &[f64::INFINITY, 0.0, 3.0]).unwrap();
        let r = check_membership(&v);
        assert!(!r.member && !r.infinite_part_ok && r.violations.is_empty());
    }

    #[test]
    fn violations_are_exhaustive() {
        // A exceeds AB, AC, ABC and B exceeds AB, BC, ABC.
        let v = REVector::from_finite(3, &[3.0, 2.0, 0.0, 1.0, 1.0, 1.0, 1.0]).unwrap();
        let r = check_membership(&v);
        let pairs: Vec<(String, String)> = r
            .violations
            .iter()
            .map(|x| (x.superset.label(), x.subset.label()))
            .collect();
        assert_eq!(pairs.len(), 6);
        for p in [("AB", "A"), ("AB", "B"), ("AC", "A"), ("BC", "B"), ("ABC", "A"), ("ABC", "B")]
        {
            assert!(pairs.contains(&(p.0.to_string(), p.1.to_string())), "{p:?}");
        }
    }

    #[test]
    fn decompose_examples() {
        let d = layer_cake_decompose(&ray6()).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.terms[0].weight, 1.0);
        assert_eq!(d.terms[0].upset, UpSet::from_labels(&["A", "BC"], 3).unwrap());

        let v = REVector::from_finite(2, &[0.5, 0.0, 2.0]).unwrap();
        let d = layer_cake_decompose(&v).unwrap();
        assert_eq!(d.terms.len(), 2);
        assert_eq!(d.terms[0].weight, 1.5);
        assert_eq!(d.terms[0].upset.to_string(), "{AB}");
        assert_eq!(d.terms[1].weight, 0.5);
        assert_eq!(d.terms[1].upset.to_string(), "{A, AB}");
        d.validate().unwrap();

        let d = layer_cake_decompose(&REVector::zeros(3).unwrap()).unwrap();
        assert!(d.terms.is_empty());
    }

    #[test]
    fn decompose_errors() {
        let v = REVector::from_finite(2, &[1.0, 0.0, 0.5]).unwrap();
        assert!(matches!(layer_cake_decompose(&v), Err(Error::NotMember(_))));
        let v = REVector::from_finite(2, &[f64::INFINITY, 0.0, f64::INFINITY]).unwrap();
        assert!(matches!(layer_cake_decompose(&v), Err(Error::InfiniteEntry(_))));
    }

    #[test]
    fn recompose_examples() {
        let u = UpSet::from_labels(&["A", "BC"], 3).unwrap();
        let d = RayDecomposition {
            n: 3,
            terms: vec![RayTerm { weight: 1.0, upset: u }],
        };
        assert_eq!(recompose(&d).unwrap(), ray6());
        assert_eq!(
            recompose(&RayDecomposition::empty(3)).unwrap(),
            REVector::zeros(3).unwrap()
        );
        let d = RayDecomposition {
            n: 2,
            terms: vec![
                RayTerm { weight: 1.5, upset: UpSet::from_labels(&["AB"], 2).unwrap() },
                RayTerm { weight: 0.5, upset: UpSet::from_labels(&["A"], 2).unwrap() },
            ],
        };
        assert_eq!(recompose(&d).unwrap().finite_values().unwrap(), vec![0.5, 0.0, 2.0]);
    }

    #[test]
    fn near_equal_levels_merge() {
        let v = REVector::from_finite(2, &[1.0, 0.0, 1.0 + 1e-14]).unwrap();
        let d = layer_cake_decompose(&v).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert!(recompose(&d).unwrap().max_abs_diff(&v).unwrap() <= 1e-12);
    }

    #[test]
    fn indicators_are_members_and_perturbations_are_not() {
        for n in 1..=4 {
            for u in enumerate_upsets(n).unwrap() {
                let v = REVector::indicator(&u, 1.0).unwrap();
                assert!(check_membership(&v).member);
                for min in u.minimal_sets() {
                    let has_larger = u.members().iter().any(|s| *s != min && min.is_subset_of(*s));
                    if !has_larger {
                        continue;
                    }
                    let mut w = v.clone();
                    // Raise the minimal set above its supersets.
                    w.set(min, Extended::Finite(2.0)).unwrap();
                    assert!(!check_membership(&w).member);
                    // Drop one proper superset to zero while the minimal set stays at 1.
                    let mut w = v.clone();
                    let sup = u
                        .members()
                        .into_iter()
                        .find(|s| *s != min && min.is_subset_of(*s))
                        .unwrap();
                    w.set(sup, Extended::ZERO).unwrap();
                    assert!(!check_membership(&w).member);
                }
            }
        }
    }
}
