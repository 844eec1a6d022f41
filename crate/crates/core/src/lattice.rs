//! Subset lattice of `n` parties as bitmasks, plus up-sets over it.
//!
//! Party `i` (1-based) corresponds to bit `i - 1`. Only nonempty subsets are
//! indexed, so a family of subsets of `[n]` is a bitset over the masks
//! `1..2^n`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest party count accepted by the general lattice operations.
pub const MAX_PARTIES: usize = 8;
/// Largest party count accepted by [`enumerate_upsets`].
pub const MAX_ENUM_PARTIES: usize = 5;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_PARTIES {
        return Err(Error::PartyCount { n, max: MAX_PARTIES });
    }
    Ok(())
}

/// A nonempty subset of the parties `1..=n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SubsetMask(u16);

impl SubsetMask {
    pub fn new(bits: u32, n: usize) -> Result<Self> {
        check_n(n)?;
        if bits == 0 || bits >= 1 << n {
            return Err(Error::InvalidMask { bits, n });
        }
        Ok(SubsetMask(bits as u16))
    }

    /// The subset holding every party.
    pub fn full(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SubsetMask(((1u32 << n) - 1) as u16))
    }

    /// Builds a mask from 1-based party indices.
    pub fn from_parties(parties: &[usize], n: usize) -> Result<Self> {
        check_n(n)?;
        let mut bits = 0u32;
        for &p in parties {
            if p == 0 || p > n {
                return Err(Error::InvalidParty { party: p, n });
            }
            bits |= 1 << (p - 1);
        }
        Self::new(bits, n)
    }

    /// Parses letter labels such as `"AB"` (A = party 1).
    pub fn from_label(label: &str, n: usize) -> Result<Self> {
        let mut parties = Vec::with_capacity(label.len());
        for c in label.chars() {
            let c = c.to_ascii_uppercase();
            if !c.is_ascii_uppercase() {
                return Err(Error::InvalidParty { party: 0, n });
            }
            parties.push((c as u8 - b'A') as usize + 1);
        }
        Self::from_parties(&parties, n)
    }

    pub fn bits(self) -> u32 {
        self.0 as u32
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Whether 1-based `party` is in the subset.
    pub fn contains(self, party: usize) -> bool {
        party >= 1 && party <= 16 && self.0 & (1 << (party - 1)) != 0
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    /// 1-based party indices in increasing order.
    pub fn parties(self) -> Vec<usize> {
        (0..16).filter(|i| self.0 & (1 << i) != 0).map(|i| i + 1).collect()
    }

    /// Letter label, `A` for party 1.
    pub fn label(self) -> String {
        self.parties()
            .into_iter()
            .map(|p| (b'A' + (p - 1) as u8) as char)
            .collect()
    }

    fn permute(self, perm: &[usize]) -> SubsetMask {
        let mut out = 0u16;
        for (i, &target) in perm.iter().enumerate() {
            if self.0 & (1 << i) != 0 {
                out |= 1 << target;
            }
        }
        SubsetMask(out)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// All nonempty subsets of `[n]` ordered by cardinality, then
/// lexicographically by party list: `A, B, C, AB, AC, BC, ABC` for `n = 3`.
pub fn subsets(n: usize) -> Result<Vec<SubsetMask>> {
    check_n(n)?;
    let mut all: Vec<SubsetMask> = (1..1u32 << n).map(|b| SubsetMask(b as u16)).collect();
    all.sort_by(|a, b| standard_cmp(*a, *b));
    Ok(all)
}

pub(crate) fn standard_cmp(a: SubsetMask, b: SubsetMask) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.parties().cmp(&b.parties()))
}

/// Bitset over the subset masks `0..256`; bit `m` is set when mask `m` is a
/// member. Ordered as a 256-bit unsigned integer.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
struct Family([u64; 4]);

impl Family {
    fn insert(&mut self, m: SubsetMask) {
        let b = m.0 as usize;
        self.0[b / 64] |= 1 << (b % 64);
    }

    fn contains(&self, m: SubsetMask) -> bool {
        let b = m.0 as usize;
        self.0[b / 64] & (1 << (b % 64)) != 0
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        (1..256u16).map(SubsetMask).filter(|m| self.contains(*m))
    }
}

impl Ord for Family {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Family {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An upward-closed, nonempty family of nonempty subsets of `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UpSet {
    n: usize,
    members: Family,
}

impl UpSet {
    /// Validates that `family` is an up-set and wraps it.
    pub fn new(family: &[SubsetMask], n: usize) -> Result<Self> {
        if !is_upset(family, n)? {
            return Err(Error::NotAnUpSet);
        }
        let mut members = Family::default();
        family.iter().for_each(|m| members.insert(*m));
        Ok(UpSet { n, members })
    }

    /// Upward closure of a set of generators.
    pub fn from_minimal(seed: &[SubsetMask], n: usize) -> Result<Self> {
        upward_closure(seed, n)
    }

    /// Parses letter labels of generators, e.g. `["A", "BC"]`.
    pub fn from_labels(labels: &[&str], n: usize) -> Result<Self> {
        let seed = labels
            .iter()
            .map(|l| SubsetMask::from_label(l, n))
            .collect::<Result<Vec<_>>>()?;
        upward_closure(&seed, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, s: SubsetMask) -> bool {
        self.members.contains(s)
    }

    /// Members in increasing mask order.
    pub fn members(&self) -> Vec<SubsetMask> {
        self.members.iter().collect()
    }

    /// Whether every member of `self` is a member of `other`.
    pub fn is_subfamily_of(&self, other: &UpSet) -> bool {
        self.n == other.n && self.members.iter().all(|m| other.contains(m))
    }

    /// Membership flags in [`subsets`] order.
    pub fn indicator(&self) -> Vec<bool> {
        subsets(self.n)
            .expect("n validated on construction")
            .into_iter()
            .map(|s| self.contains(s))
            .collect()
    }

    /// Inclusion-minimal members, in [`subsets`] order.
    pub fn minimal_sets(&self) -> Vec<SubsetMask> {
        minimal_sets(self)
    }

    fn permuted(&self, perm: &[usize]) -> Family {
        let mut out = Family::default();
        self.members.iter().for_each(|m| out.insert(m.permute(perm)));
        out
    }

    /// Position in the deterministic enumeration order: member count, then
    /// the membership bitset read as an integer.
    fn sort_key(&self) -> (usize, Family) {
        (self.len(), self.members)
    }
}

impl fmt::Display for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut members = self.members();
        members.sort_by(|a, b| standard_cmp(*a, *b));
        let labels: Vec<String> = members.iter().map(|m| m.label()).collect();
        write!(f, "{{{}}}", labels.join(", "))
    }
}

fn validate_masks(family: &[SubsetMask], n: usize) -> Result<()> {
    check_n(n)?;
    for m in family {
        SubsetMask::new(m.bits(), n)?;
    }
    Ok(())
}

/// True iff `family` is nonempty and closed under taking (nonempty) supersets
/// within `[n]`.
pub fn is_upset(family: &[SubsetMask], n: usize) -> Result<bool> {
    validate_masks(family, n)?;
    if family.is_empty() {
        return Ok(false);
    }
    let mut members = Family::default();
    family.iter().for_each(|m| members.insert(*m));
    // Closure under single-party extension implies closure under supersets.
    for m in members.iter() {
        for i in 0..n {
            let up = SubsetMask(m.0 | (1 << i));
            if !members.contains(up) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest up-set containing every mask of `seed`.
pub fn upward_closure(seed: &[SubsetMask], n: usize) -> Result<UpSet> {
    validate_masks(seed, n)?;
    if seed.is_empty() {
        return Err(Error::EmptySeed);
    }
    let mut members = Family::default();
    for bits in 1..1u16 << n {
        let s = SubsetMask(bits);
        if seed.iter().any(|g| g.is_subset_of(s)) {
            members.insert(s);
        }
    }
    Ok(UpSet { n, members })
}

/// The antichain of inclusion-minimal members of `u`, in [`subsets`] order.
pub fn minimal_sets(u: &UpSet) -> Vec<SubsetMask> {
    let mut out: Vec<SubsetMask> = u
        .members
        .iter()
        .filter(|m| {
            (0..u.n).all(|i| {
                let bit = 1u16 << i;
                m.0 & bit == 0 || m.0 == bit || !u.members.contains(SubsetMask(m.0 & !bit))
            })
        })
        .collect();
    out.sort_by(|a, b| standard_cmp(*a, *b));
    out
}

/// Every up-set of nonempty subsets of `[n]`, each once, sorted by member
/// count and then by membership bitset.
///
/// Subsets are decided in order of decreasing cardinality; a subset may join
/// only when all of its one-party extensions already have, which keeps every
/// partial family upward closed.
pub fn enumerate_upsets(n: usize) -> Result<Vec<UpSet>> {
    check_n(n)?;
    if n > MAX_ENUM_PARTIES {
        return Err(Error::EnumerationLimit { n, max: MAX_ENUM_PARTIES });
    }
    let mut order: Vec<SubsetMask> = (1..1u16 << n).map(SubsetMask).collect();
    order.sort_by(|a, b| b.len().cmp(&a.len()).then(a.0.cmp(&b.0)));

    fn extend(
        n: usize,
        order: &[SubsetMask],
        idx: usize,
        current: &mut Family,
        out: &mut Vec<UpSet>,
    ) {
        if idx == order.len() {
            if current.count() > 0 {
                out.push(UpSet { n, members: *current });
            }
            return;
        }
        let s = order[idx];
        let closed = (0..n).all(|i| {
            let up = SubsetMask(s.0 | (1 << i));
            up == s || current.contains(up)
        });
        if closed {
            let saved = *current;
            current.insert(s);
            extend(n, order, idx + 1, current, out);
            *current = saved;
        }
        extend(n, order, idx + 1, current, out);
    }

    let mut out = Vec::new();
    extend(n, &order, 0, &mut Family::default(), &mut out);
    out.sort_by_key(|u| u.sort_key());
    Ok(out)
}

/// One orbit of up-sets under relabeling of the parties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationClass {
    /// The member of the orbit whose membership bitset is smallest.
    pub representative: UpSet,
    /// How many of the input up-sets fall in this orbit.
    pub size: usize,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Canonical orbit representative of `u` under all `n!` party relabelings.
pub fn canonical_form(u: &UpSet) -> UpSet {
    let members = permutations(u.n)
        .iter()
        .map(|p| u.permuted(p))
        .min()
        .expect("at least the identity permutation");
    UpSet { n: u.n, members }
}

/// Groups `upsets` into orbits under party relabeling.
///
/// Classes come out ordered by member count and then by their indicator
/// vector in [`subsets`] order, which for `n = 3` lists the eight classes in
/// the order `{ABC}`, `{AB,..}`, `{AB,AC,..}`, `{AB,AC,BC,..}`, `{A,..}`, ...
pub fn permutation_classes(upsets: &[UpSet], n: usize) -> Result<Vec<PermutationClass>> {
    check_n(n)?;
    let perms = permutations(n);
    let mut classes: BTreeMap<Family, usize> = BTreeMap::new();
    for u in upsets {
        if u.n != n {
            return Err(Error::PartyMismatch { left: u.n, right: n });
        }
        let key = perms.iter().map(|p| u.permuted(p)).min().expect("nonempty");
        *classes.entry(key).or_default() += 1;
    }
    let mut out: Vec<PermutationClass> = classes
        .into_iter()
        .map(|(members, size)| PermutationClass {
            representative: UpSet { n, members },
            size,
        })
        .collect();
    out.sort_by(|a, b| {
        let (ra, rb) = (&a.representative, &b.representative);
        ra.len().cmp(&rb.len()).then_with(|| ra.indicator().cmp(&rb.indicator()))
    });
    Ok(out)
}
