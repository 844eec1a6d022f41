//! JSON file formats.
//!
//! Vectors:
//!
//! ```json
//! {"n": 2, "entries": [{"parties": [1], "value": 1.0},
//!                      {"parties": [2], "value": 0.0},
//!                      {"parties": [1, 2], "value": "inf"}]}
//! ```
//!
//! State pairs (probabilities as exact decimal-string fractions; each party's
//! alphabet and symbol may be a single integer or a list, one per register):
//!
//! ```json
//! {"n": 2, "alphabet_sizes": [[2], [2]],
//!  "rho":   [{"symbols": [[0], [0]], "p": {"num": "1", "den": "1"}}],
//!  "sigma": [{"symbols": [[0], [0]], "p": {"num": "1", "den": "2"}},
//!            {"symbols": [[1], [1]], "p": {"num": "1", "den": "2"}}]}
//! ```

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cone::{Extended, MembershipReport, RayDecomposition, REVector};
use crate::error::{Error, Result};
use crate::lattice::SubsetMask;
use crate::realize::{RealizationResult, VerificationReport};
use crate::states::{JointDistribution, Layout, StatePair};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
pub enum ValueDoc {
    Number(f64),
    Text(String),
}

impl ValueDoc {
    fn from_extended(x: Extended) -> Self {
        match x {
            Extended::Finite(v) => ValueDoc::Number(v),
            Extended::Infinite => ValueDoc::Text("inf".into()),
        }
    }

    fn to_extended(&self) -> Result<Extended> {
        match self {
            ValueDoc::Number(v) => Ok(Extended::Finite(*v)),
            ValueDoc::Text(t) => match t.to_ascii_lowercase().as_str() {
                "inf" | "+inf" | "infinity" | "+infinity" => Ok(Extended::Infinite),
                _ => Err(Error::Distribution(format!("unrecognized value {t:?}"))),
            },
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct EntryDoc {
    pub parties: Vec<usize>,
    pub value: ValueDoc,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct VectorDoc {
    pub n: usize,
    pub entries: Vec<EntryDoc>,
}

impl VectorDoc {
    pub fn from_vector(v: &REVector) -> Self {
        VectorDoc {
            n: v.n(),
            entries: v
                .entries()
                .into_iter()
                .map(|(s, x)| EntryDoc {
                    parties: s.parties(),
                    value: ValueDoc::from_extended(x),
                })
                .collect(),
        }
    }

    /// Requires exactly one entry per nonempty subset.
    pub fn to_vector(&self) -> Result<REVector> {
        let mut v = REVector::zeros(self.n)?;
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            let s = SubsetMask::from_parties(&e.parties, self.n)?;
            if !seen.insert(s) {
                return Err(Error::Distribution(format!("duplicate entry for {s}")));
            }
            v.set(s, e.value.to_extended()?)?;
        }
        let expected = (1usize << self.n) - 1;
        if seen.len() != expected {
            return Err(Error::VectorLength {
                got: seen.len(),
                expected,
            });
        }
        Ok(v)
    }
}

pub fn parse_vector(text: &str) -> Result<REVector> {
    serde_json::from_str::<VectorDoc>(text)?.to_vector()
}

pub fn vector_to_json(v: &REVector) -> Result<String> {
    Ok(serde_json::to_string_pretty(&VectorDoc::from_vector(v))?)
}

/// One integer or a list of integers.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
pub enum Registers {
    One(u32),
    Many(Vec<u32>),
}

impl Registers {
    fn into_vec(self) -> Vec<u32> {
        match self {
            Registers::One(x) => vec![x],
            Registers::Many(v) => v,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct RationalDoc {
    pub num: String,
    pub den: String,
}

impl RationalDoc {
    fn from_rational(r: &BigRational) -> Self {
        RationalDoc {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }

    fn to_rational(&self) -> Result<BigRational> {
        let parse = |s: &str| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Distribution(format!("not an integer: {s:?}")))
        };
        let (num, den) = (parse(&self.num)?, parse(&self.den)?);
        if den.is_zero() {
            return Err(Error::Distribution("zero denominator".into()));
        }
        Ok(BigRational::new(num, den))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct AtomDoc {
    pub symbols: Vec<Registers>,
    pub p: RationalDoc,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct StatePairDoc {
    pub n: usize,
    pub alphabet_sizes: Vec<Registers>,
    pub rho: Vec<AtomDoc>,
    pub sigma: Vec<AtomDoc>,
}

fn atoms_doc(d: &JointDistribution) -> Vec<AtomDoc> {
    d.atoms()
        .map(|(x, p)| AtomDoc {
            symbols: d
                .split_symbols(x)
                .into_iter()
                .map(|g| Registers::Many(g.to_vec()))
                .collect(),
            p: RationalDoc::from_rational(p),
        })
        .collect()
}

fn distribution_from_doc(layout: &Layout, atoms: &[AtomDoc]) -> Result<JointDistribution> {
    let mut out = Vec::with_capacity(atoms.len());
    for a in atoms {
        if a.symbols.len() != layout.len() {
            return Err(Error::Distribution(format!(
                "atom names {} parties, expected {}",
                a.symbols.len(),
                layout.len()
            )));
        }
        let mut flat = Vec::new();
        for (regs, sym) in layout.iter().zip(&a.symbols) {
            let sym = sym.clone().into_vec();
            if sym.len() != regs.len() {
                return Err(Error::AlphabetMismatch);
            }
            flat.extend(sym);
        }
        out.push((flat, a.p.to_rational()?));
    }
    JointDistribution::new(layout.clone(), out)
}

impl StatePairDoc {
    pub fn from_pair(pair: &StatePair) -> Self {
        StatePairDoc {
            n: pair.n(),
            alphabet_sizes: pair
                .rho
                .layout()
                .iter()
                .map(|r| Registers::Many(r.clone()))
                .collect(),
            rho: atoms_doc(&pair.rho),
            sigma: atoms_doc(&pair.sigma),
        }
    }

    pub fn to_pair(&self) -> Result<StatePair> {
        if self.alphabet_sizes.len() != self.n {
            return Err(Error::PartyMismatch {
                left: self.alphabet_sizes.len(),
                right: self.n,
            });
        }
        let layout: Layout = self.alphabet_sizes.iter().map(|r| r.clone().into_vec()).collect();
        StatePair::new(
            distribution_from_doc(&layout, &self.rho)?,
            distribution_from_doc(&layout, &self.sigma)?,
        )
    }
}

pub fn parse_pair(text: &str) -> Result<StatePair> {
    serde_json::from_str::<StatePairDoc>(text)?.to_pair()
}

pub fn pair_to_json(pair: &StatePair) -> Result<String> {
    Ok(serde_json::to_string_pretty(&StatePairDoc::from_pair(pair))?)
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct ViolationDoc {
    pub superset: Vec<usize>,
    pub subset: Vec<usize>,
    pub superset_value: f64,
    pub subset_value: f64,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct MembershipDoc {
    pub n: usize,
    pub member: bool,
    pub infinite_part_ok: bool,
    pub violations: Vec<ViolationDoc>,
}

impl From<&MembershipReport> for MembershipDoc {
    fn from(r: &MembershipReport) -> Self {
        MembershipDoc {
            n: r.n,
            member: r.member,
            infinite_part_ok: r.infinite_part_ok,
            violations: r
                .violations
                .iter()
                .map(|v| ViolationDoc {
                    superset: v.superset.parties(),
                    subset: v.subset.parties(),
                    superset_value: v.superset_value,
                    subset_value: v.subset_value,
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct TermDoc {
    pub weight: f64,
    pub minimal_sets: Vec<Vec<usize>>,
    pub members: Vec<Vec<usize>>,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct DecompositionDoc {
    pub n: usize,
    pub terms: Vec<TermDoc>,
}

impl From<&RayDecomposition> for DecompositionDoc {
    fn from(d: &RayDecomposition) -> Self {
        DecompositionDoc {
            n: d.n,
            terms: d
                .terms
                .iter()
                .map(|t| {
                    let mut members = t.upset.members();
                    members.sort_by(|a, b| crate::lattice::standard_cmp(*a, *b));
                    TermDoc {
                        weight: t.weight,
                        minimal_sets: t.upset.minimal_sets().iter().map(|s| s.parties()).collect(),
                        members: members.iter().map(|s| s.parties()).collect(),
                    }
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct RealizationDoc {
    pub target: VectorDoc,
    pub achieved: VectorDoc,
    pub max_abs_error: f64,
    pub decomposition: DecompositionDoc,
    /// Registers per party in the constructed pair.
    pub alphabet_sizes: Vec<Vec<u32>>,
    pub support_sizes: SupportSizes,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct SupportSizes {
    pub rho: usize,
    pub sigma: usize,
}

impl From<&RealizationResult> for RealizationDoc {
    fn from(r: &RealizationResult) -> Self {
        RealizationDoc {
            target: VectorDoc::from_vector(&r.target),
            achieved: VectorDoc::from_vector(&r.achieved),
            max_abs_error: r.max_abs_error,
            decomposition: (&r.decomposition).into(),
            alphabet_sizes: r.pair.rho.layout().clone(),
            support_sizes: SupportSizes {
                rho: r.pair.rho.support_size(),
                sigma: r.pair.sigma.support_size(),
            },
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct DeviationDoc {
    pub parties: Vec<usize>,
    pub target: ValueDoc,
    pub achieved: ValueDoc,
    pub error: f64,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct VerificationDoc {
    pub passed: bool,
    pub tol: f64,
    pub max_abs_error: f64,
    pub failing: Vec<Vec<usize>>,
    pub achieved_monotone: bool,
    pub deviations: Vec<DeviationDoc>,
}

impl From<&VerificationReport> for VerificationDoc {
    fn from(r: &VerificationReport) -> Self {
        VerificationDoc {
            passed: r.passed,
            tol: r.tol,
            max_abs_error: r.max_abs_error,
            failing: r.failing().iter().map(|s| s.parties()).collect(),
            achieved_monotone: r.achieved_membership.member,
            deviations: r
                .deviations
                .iter()
                .map(|d| DeviationDoc {
                    parties: d.subset.parties(),
                    target: ValueDoc::from_extended(d.target),
                    achieved: ValueDoc::from_extended(d.achieved),
                    error: d.error,
                })
                .collect(),
        }
    }
}
