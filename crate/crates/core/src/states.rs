//! Exact classical joint distributions over `n` parties.
//!
//! Each party owns an ordered list of registers (share slots), each with its
//! own alphabet size. An atom is one symbol per register, stored flattened
//! party by party. Probabilities are exact [`BigRational`]s and zero-weight
//! atoms are never stored; entropies are evaluated in `f64` at the end.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cone::{Extended, REVector};
use crate::error::{Error, Result};
use crate::lattice::{self, SubsetMask};

/// Register alphabet sizes, one list per party.
pub type Layout = Vec<Vec<u32>>;

/// Exact rational from a numerator and a denominator.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// An exact probability distribution over the product of all registers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointDistribution {
    layout: Layout,
    atoms: BTreeMap<Vec<u32>, BigRational>,
}

impl JointDistribution {
    /// Validates and builds a distribution. Zero-probability atoms are dropped;
    /// duplicates, negative weights, out-of-alphabet symbols and totals other
    /// than one are rejected.
    pub fn new<I>(layout: Layout, atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigRational)>,
    {
        lattice::check_n(layout.len())?;
        if layout.iter().flatten().any(|&a| a == 0) {
            return Err(Error::Distribution("register alphabet of size 0".into()));
        }
        let width: usize = layout.iter().map(Vec::len).sum();
        let sizes: Vec<u32> = layout.iter().flatten().copied().collect();
        let mut map = BTreeMap::new();
        let mut total = BigRational::zero();
        for (symbols, p) in atoms {
            if symbols.len() != width {
                return Err(Error::Distribution(format!(
                    "atom has {} symbols, layout has {width} registers",
                    symbols.len()
                )));
            }
            if symbols.iter().zip(&sizes).any(|(s, a)| s >= a) {
                return Err(Error::Distribution(format!("symbol out of range in {symbols:?}")));
            }
            if p.is_negative() {
                return Err(Error::Distribution(format!("negative probability {p}")));
            }
            if p.is_zero() {
                continue;
            }
            total += &p;
            if map.insert(symbols.clone(), p).is_some() {
                return Err(Error::Distribution(format!("duplicate atom {symbols:?}")));
            }
        }
        if !total.is_one() {
            return Err(Error::Distribution(format!("probabilities sum to {total}")));
        }
        Ok(JointDistribution { layout, atoms: map })
    }

    /// Uniform distribution over distinct `support` tuples.
    pub fn uniform(layout: Layout, support: Vec<Vec<u32>>) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::Distribution("empty support".into()));
        }
        let w = ratio(1, support.len() as i64);
        Self::new(layout, support.into_iter().map(|s| (s, w.clone())))
    }

    /// A single certain atom.
    pub fn point(layout: Layout, symbols: Vec<u32>) -> Result<Self> {
        Self::new(layout, [(symbols, BigRational::one())])
    }

    pub fn n(&self) -> usize {
        self.layout.len()
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    /// Number of atoms with positive probability.
    pub fn support_size(&self) -> usize {
        self.atoms.len()
    }

    /// Atoms in lexicographic order of their flattened symbols.
    pub fn atoms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.atoms.iter()
    }

    pub fn contains_atom(&self, symbols: &[u32]) -> bool {
        self.atoms.contains_key(symbols)
    }

    pub fn probability(&self, symbols: &[u32]) -> BigRational {
        self.atoms.get(symbols).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Register positions (in the flattened tuple) owned by each party.
    fn offsets(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.layout
            .iter()
            .map(|regs| {
                let r = start..start + regs.len();
                start += regs.len();
                r
            })
            .collect()
    }

    /// Splits a flattened tuple into per-party symbol lists.
    pub fn split_symbols<'a>(&self, symbols: &'a [u32]) -> Vec<&'a [u32]> {
        self.offsets().into_iter().map(|r| &symbols[r]).collect()
    }

    /// Renders an atom with one group per party, e.g. `00 1 2`.
    pub fn format_atom(&self, symbols: &[u32]) -> String {
        let wide = self.layout.iter().flatten().any(|&a| a > 10);
        let groups: Vec<String> = self
            .split_symbols(symbols)
            .iter()
            .map(|g| {
                if g.is_empty() {
                    "-".to_string()
                } else if wide {
                    g.iter().map(u32::to_string).collect::<Vec<_>>().join(".")
                } else {
                    g.iter().map(u32::to_string).collect()
                }
            })
            .collect();
        groups.join(" ")
    }

    /// Distribution of the registers of the parties in `s`, summed exactly.
    /// The result has `|s|` parties, in increasing party order.
    pub fn marginal(&self, s: SubsetMask) -> Result<Self> {
        let s = SubsetMask::new(s.bits(), self.n())?;
        if s.len() == self.n() {
            return Ok(self.clone());
        }
        let offsets = self.offsets();
        let keep: Vec<usize> = s
            .parties()
            .into_iter()
            .flat_map(|p| offsets[p - 1].clone())
            .collect();
        let layout: Layout = s.parties().into_iter().map(|p| self.layout[p - 1].clone()).collect();
        let mut atoms: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (symbols, p) in &self.atoms {
            let key: Vec<u32> = keep.iter().map(|&i| symbols[i]).collect();
            *atoms.entry(key).or_insert_with(BigRational::zero) += p;
        }
        Ok(JointDistribution { layout, atoms })
    }

    /// Product distribution; each party's registers are `self`'s followed by
    /// `other`'s.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::PartyMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let layout: Layout = self
            .layout
            .iter()
            .zip(&other.layout)
            .map(|(a, b)| a.iter().chain(b).copied().collect())
            .collect();
        let (oa, ob) = (self.offsets(), other.offsets());
        let mut atoms = BTreeMap::new();
        for (x, p) in &self.atoms {
            for (y, q) in &other.atoms {
                let mut key = Vec::with_capacity(x.len() + y.len());
                for (ra, rb) in oa.iter().zip(&ob) {
                    key.extend_from_slice(&x[ra.clone()]);
                    key.extend_from_slice(&y[rb.clone()]);
                }
                atoms.insert(key, p * q);
            }
        }
        Ok(JointDistribution { layout, atoms })
    }
}

impl fmt::Display for JointDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (symbols, p) in &self.atoms {
            writeln!(f, "|{}>  {}", self.format_atom(symbols), p)?;
        }
        Ok(())
    }
}

/// `p * d0 + (1 - p) * d1`, atom by atom.
pub fn mix(d0: &JointDistribution, d1: &JointDistribution, p: &BigRational) -> Result<JointDistribution> {
    if d0.layout != d1.layout {
        return Err(Error::AlphabetMismatch);
    }
    if !(p.is_positive() && *p < BigRational::one()) {
        return Err(Error::MixWeight);
    }
    let q = BigRational::one() - p;
    let mut atoms: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    for (x, w) in &d0.atoms {
        atoms.insert(x.clone(), p * w);
    }
    for (x, w) in &d1.atoms {
        *atoms.entry(x.clone()).or_insert_with(BigRational::zero) += &q * w;
    }
    Ok(JointDistribution {
        layout: d0.layout.clone(),
        atoms,
    })
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("rational converts to f64")
}

/// `Σ P(x) log2(P(x)/Q(x))`, or `+inf` when the support of `p` is not
/// contained in the support of `q`.
pub fn relative_entropy(p: &JointDistribution, q: &JointDistribution) -> Result<Extended> {
    if p.layout != q.layout {
        return Err(Error::AlphabetMismatch);
    }
    if p == q {
        return Ok(Extended::ZERO);
    }
    let mut sum = 0.0;
    for (x, px) in &p.atoms {
        let Some(qx) = q.atoms.get(x) else {
            return Ok(Extended::Infinite);
        };
        if px != qx {
            sum += to_f64(px) * to_f64(&(px / qx)).log2();
        }
    }
    // Rounding can push a true zero slightly negative.
    Ok(Extended::Finite(sum.max(0.0)))
}

/// `-Σ p log2 p`.
pub fn shannon_entropy(d: &JointDistribution) -> f64 {
    d.atoms
        .values()
        .map(|p| {
            let x = to_f64(p);
            -x * x.log2()
        })
        .sum::<f64>()
        .max(0.0)
}

/// `I(S : complement)` as the relative entropy between `d` and the product of
/// its two marginals.
pub fn mutual_information(d: &JointDistribution, split: SubsetMask) -> Result<f64> {
    let n = d.n();
    let split = SubsetMask::new(split.bits(), n)?;
    let full = SubsetMask::full(n)?;
    if split == full {
        return Ok(0.0);
    }
    let rest = SubsetMask::new(full.bits() & !split.bits(), n)?;
    let a = d.marginal(split)?;
    let b = d.marginal(rest)?;

    // Reassemble the product in the original party order.
    let mut atoms = Vec::with_capacity(a.support_size() * b.support_size());
    let width: usize = d.layout.iter().map(Vec::len).sum();
    let (oa, ob) = (a.offsets(), b.offsets());
    for (x, p) in &a.atoms {
        for (y, q) in &b.atoms {
            let mut key = Vec::with_capacity(width);
            let (mut ia, mut ib) = (0, 0);
            for party in 1..=n {
                if split.contains(party) {
                    key.extend_from_slice(&x[oa[ia].clone()]);
                    ia += 1;
                } else {
                    key.extend_from_slice(&y[ob[ib].clone()]);
                    ib += 1;
                }
            }
            atoms.push((key, p * q));
        }
    }
    let product = JointDistribution::new(d.layout.clone(), atoms)?;
    Ok(relative_entropy(d, &product)?.to_f64())
}

/// Two distributions over the same register layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatePair {
    pub rho: JointDistribution,
    pub sigma: JointDistribution,
}

impl StatePair {
    pub fn new(rho: JointDistribution, sigma: JointDistribution) -> Result<Self> {
        if rho.layout != sigma.layout {
            return Err(Error::AlphabetMismatch);
        }
        Ok(StatePair { rho, sigma })
    }

    /// The pair `(d, d)`, whose vector is zero.
    pub fn trivial(d: JointDistribution) -> Self {
        StatePair {
            rho: d.clone(),
            sigma: d,
        }
    }

    pub fn n(&self) -> usize {
        self.rho.n()
    }

    pub fn tensor(&self, other: &StatePair) -> Result<StatePair> {
        tensor(self, other)
    }
}

/// Party-wise tensor product of two pairs.
pub fn tensor(a: &StatePair, b: &StatePair) -> Result<StatePair> {
    Ok(StatePair {
        rho: a.rho.tensor(&b.rho)?,
        sigma: a.sigma.tensor(&b.sigma)?,
    })
}

/// Relative entropies of all `2^n - 1` marginal pairs.
pub fn re_vector(pair: &StatePair) -> Result<REVector> {
    let n = pair.n();
    let mut v = REVector::zeros(n)?;
    for s in lattice::subsets(n)? {
        let d = relative_entropy(&pair.rho.marginal(s)?, &pair.sigma.marginal(s)?)?;
        v.set(s, d)?;
    }
    Ok(v)
}
