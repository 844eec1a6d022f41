//! Classical secret sharing of one bit, materialized as exact share tables.
//!
//! A [`Scheme`] holds the joint distribution of all shares for secret `0` and
//! for secret `1`. Constructions:
//!
//! * [`shamir_table`]: every degree `k - 1` polynomial over GF(p) with constant
//!   term `b`, evaluated at `1..=m`.
//! * [`weighted_threshold_scheme`]: one Shamir scheme with several shares per
//!   party.
//! * [`threshold_hierarchy`]: independent Shamir schemes, one per clause.
//! * [`dnf_scheme`]: independent XOR sharings over GF(2), one per minimal
//!   authorized set; realizes any access structure.
//!
//! [`verify_scheme`] audits a scheme against an access structure by brute
//! force over every subset of parties.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lattice::{self, SubsetMask, UpSet};
use crate::states::{self, JointDistribution, Layout, StatePair};

/// An element of the prime field GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    value: u64,
    p: u64,
}

impl FieldElement {
    /// Reduces `value` modulo `p`. `p` must be prime.
    pub fn new(value: u64, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Parameter(format!("{p} is not prime")));
        }
        Ok(FieldElement { value: value % p, p })
    }

    fn raw(value: u64, p: u64) -> Self {
        FieldElement { value: value % p, p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = FieldElement::raw(1, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        FieldElement::raw(self.value + rhs.value, self.p)
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        FieldElement::raw(self.p - self.value, self.p)
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        FieldElement::raw(
            ((self.value as u128 * rhs.value as u128) % self.p as u128) as u64,
            self.p,
        )
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime strictly greater than `m` (and at least 2).
pub fn smallest_prime_above(m: u64) -> u64 {
    (m + 1..).find(|&q| is_prime(q)).expect("primes are unbounded")
}

/// Evaluates the polynomial with coefficients `coeffs` (constant first) at `x`.
pub fn evaluate(coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
    coeffs
        .iter()
        .rev()
        .fold(FieldElement::raw(0, x.p), |acc, &c| acc * x + c)
}

/// Lagrange interpolation of `y(0)` from points with distinct `x`.
pub fn interpolate_at_zero(points: &[(FieldElement, FieldElement)]) -> Result<FieldElement> {
    let Some(&(x0, _)) = points.first() else {
        return Err(Error::Parameter("no points to interpolate".into()));
    };
    let p = x0.p;
    let mut acc = FieldElement::raw(0, p);
    for (i, &(xi, yi)) in points.iter().enumerate() {
        let mut num = FieldElement::raw(1, p);
        let mut den = FieldElement::raw(1, p);
        for (j, &(xj, _)) in points.iter().enumerate() {
            if i != j {
                num = num * (-xj);
                den = den * (xi - xj);
            }
        }
        let inv = den
            .inv()
            .ok_or_else(|| Error::Parameter("repeated interpolation point".into()))?;
        acc = acc + yi * num * inv;
    }
    Ok(acc)
}

fn check_shamir(p: u64, k: usize, m: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Parameter(format!("{p} is not prime")));
    }
    if p <= m as u64 {
        return Err(Error::Parameter(format!("field size {p} must exceed share count {m}")));
    }
    if k < 1 || k > m {
        return Err(Error::Parameter(format!("threshold {k} outside 1..={m}")));
    }
    Ok(())
}

/// All share tuples `(y(1), ..., y(m))` for `y(x) = b + a_1 x + ... +
/// a_{k-1} x^{k-1}` over GF(p), one per coefficient choice, in lexicographic
/// order of `(a_1, ..., a_{k-1})`. Each tuple is equally likely.
pub fn shamir_table(p: u64, k: usize, m: usize, b: u8) -> Result<Vec<Vec<u32>>> {
    check_shamir(p, k, m)?;
    if b > 1 {
        return Err(Error::Parameter(format!("secret bit {b} is not 0 or 1")));
    }
    let count = (p as usize).pow(k as u32 - 1);
    let mut out = Vec::with_capacity(count);
    for idx in 0..count {
        let mut coeffs = vec![FieldElement::raw(b as u64, p)];
        let mut rest = idx;
        let mut higher = vec![0u64; k - 1];
        for slot in higher.iter_mut().rev() {
            *slot = (rest % p as usize) as u64;
            rest /= p as usize;
        }
        coeffs.extend(higher.into_iter().map(|a| FieldElement::raw(a, p)));
        out.push(
            (1..=m as u64)
                .map(|x| evaluate(&coeffs, FieldElement::raw(x, p)).value() as u32)
                .collect(),
        );
    }
    Ok(out)
}

/// The family of authorized party groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AccessStructure {
    upset: UpSet,
}

impl AccessStructure {
    pub fn new(upset: UpSet) -> Self {
        AccessStructure { upset }
    }

    /// Groups holding at least `k` of the allocated shares.
    pub fn weighted_threshold(allocation: &[usize], k: usize) -> Result<Self> {
        let n = allocation.len();
        lattice::check_n(n)?;
        let members: Vec<SubsetMask> = lattice::subsets(n)?
            .into_iter()
            .filter(|s| s.parties().iter().map(|&p| allocation[p - 1]).sum::<usize>() >= k)
            .collect();
        if members.is_empty() {
            return Err(Error::Parameter(format!("no group reaches threshold {k}")));
        }
        Ok(AccessStructure::new(UpSet::new(&members, n)?))
    }

    pub fn upset(&self) -> &UpSet {
        &self.upset
    }

    pub fn n(&self) -> usize {
        self.upset.n()
    }

    pub fn is_authorized(&self, s: SubsetMask) -> bool {
        self.upset.contains(s)
    }
}

/// Share distributions for secret `0` and secret `1` over one register layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scheme {
    tables: [JointDistribution; 2],
}

impl Scheme {
    pub fn new(table0: JointDistribution, table1: JointDistribution) -> Result<Self> {
        if table0.layout() != table1.layout() {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Scheme {
            tables: [table0, table1],
        })
    }

    pub fn n(&self) -> usize {
        self.tables[0].n()
    }

    pub fn layout(&self) -> &Layout {
        self.tables[0].layout()
    }

    /// Joint share distribution when the secret is `b`.
    pub fn table(&self, b: u8) -> &JointDistribution {
        &self.tables[usize::from(b != 0)]
    }

    /// `rho = table(0)`, `sigma = p * table(0) + (1 - p) * table(1)`.
    pub fn weighted_pair(&self, p: &BigRational) -> Result<StatePair> {
        let sigma = states::mix(&self.tables[0], &self.tables[1], p)?;
        StatePair::new(self.tables[0].clone(), sigma)
    }

    /// The balanced pair, `sigma` the even mixture of both tables.
    pub fn state_pair(&self) -> Result<StatePair> {
        self.weighted_pair(&states::ratio(1, 2))
    }
}

/// One independent sub-scheme: its share alphabet, which party holds which
/// share positions, and its uniform share tuples for each secret.
struct Clause {
    alphabet: u32,
    /// Per party, the positions (into a share tuple) it holds.
    holdings: Vec<Vec<usize>>,
    tuples: [Vec<Vec<u32>>; 2],
}

/// Independent product of clauses; each party's registers are its shares
/// clause by clause. A party holding nothing gets one constant register.
fn combine(n: usize, clauses: &[Clause]) -> Result<Scheme> {
    let mut layout: Layout = vec![Vec::new(); n];
    for c in clauses {
        for (party, held) in c.holdings.iter().enumerate() {
            layout[party].extend(std::iter::repeat(c.alphabet).take(held.len()));
        }
    }
    let idle: Vec<bool> = layout.iter().map(Vec::is_empty).collect();
    for (regs, &idle) in layout.iter_mut().zip(&idle) {
        if idle {
            regs.push(1);
        }
    }

    let mut tables = Vec::with_capacity(2);
    for b in 0..2 {
        // Per-party symbol lists for every combination of clause tuples.
        let mut rows: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new(); n]];
        for c in clauses {
            let mut next = Vec::with_capacity(rows.len() * c.tuples[b].len());
            for row in &rows {
                for t in &c.tuples[b] {
                    let mut r = row.clone();
                    for (party, held) in c.holdings.iter().enumerate() {
                        r[party].extend(held.iter().map(|&i| t[i]));
                    }
                    next.push(r);
                }
            }
            rows = next;
        }
        let support: BTreeSet<Vec<u32>> = rows
            .into_iter()
            .map(|mut r| {
                for (party, &idle) in idle.iter().enumerate() {
                    if idle {
                        r[party].push(0);
                    }
                }
                r.concat()
            })
            .collect();
        tables.push(JointDistribution::uniform(layout.clone(), support.into_iter().collect())?);
    }
    let table1 = tables.pop().expect("two tables");
    let table0 = tables.pop().expect("two tables");
    Scheme::new(table0, table1)
}

/// One Shamir clause inside a [`threshold_hierarchy`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdClause {
    /// Shares handed to each party, in party order.
    pub allocation: Vec<usize>,
    pub threshold: usize,
    pub prime: u64,
}

impl ThresholdClause {
    fn build(&self, n: usize) -> Result<Clause> {
        if self.allocation.len() != n {
            return Err(Error::PartyMismatch {
                left: self.allocation.len(),
                right: n,
            });
        }
        let m: usize = self.allocation.iter().sum();
        check_shamir(self.prime, self.threshold, m)?;
        let mut holdings = Vec::with_capacity(n);
        let mut next = 0;
        for &count in &self.allocation {
            holdings.push((next..next + count).collect());
            next += count;
        }
        Ok(Clause {
            alphabet: self.prime as u32,
            holdings,
            tuples: [
                shamir_table(self.prime, self.threshold, m, 0)?,
                shamir_table(self.prime, self.threshold, m, 1)?,
            ],
        })
    }
}

/// Independent Shamir schemes sharing the same bit; a group is authorized
/// when it reaches the threshold of at least one clause.
pub fn threshold_hierarchy(n: usize, clauses: &[ThresholdClause]) -> Result<Scheme> {
    lattice::check_n(n)?;
    if clauses.is_empty() {
        return Err(Error::Parameter("no clauses".into()));
    }
    let built = clauses.iter().map(|c| c.build(n)).collect::<Result<Vec<_>>>()?;
    combine(n, &built)
}

/// A single `(m, k)` Shamir scheme over GF(p) with `allocation[i]`
/// consecutive shares given to party `i + 1`. Authorized groups are those
/// holding at least `k` shares in total; whether that matches a desired
/// structure is for [`verify_scheme`] to say.
pub fn weighted_threshold_scheme(n: usize, allocation: &[usize], k: usize, p: u64) -> Result<Scheme> {
    threshold_hierarchy(
        n,
        &[ThresholdClause {
            allocation: allocation.to_vec(),
            threshold: k,
            prime: p,
        }],
    )
}

/// XOR sharing per minimal authorized set: members `1..m-1` get uniform bits
/// `r_i`, the last member gets `b ^ r_1 ^ ... ^ r_{m-1}`.
pub fn dnf_scheme(a: &AccessStructure) -> Result<Scheme> {
    let n = a.n();
    let clauses: Vec<Clause> = a
        .upset()
        .minimal_sets()
        .into_iter()
        .map(|set| {
            let members = set.parties();
            let m = members.len();
            let mut holdings = vec![Vec::new(); n];
            for (pos, &party) in members.iter().enumerate() {
                holdings[party - 1].push(pos);
            }
            let tuples = [0u32, 1].map(|b| {
                (0..1u32 << (m - 1))
                    .map(|r| {
                        let mut t: Vec<u32> = (0..m - 1).map(|i| (r >> i) & 1).collect();
                        t.push(b ^ (r.count_ones() & 1));
                        t
                    })
                    .collect()
            });
            Clause {
                alphabet: 2,
                holdings,
                tuples,
            }
        })
        .collect();
    combine(n, &clauses)
}

/// Outcome of auditing a scheme on one subset of parties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetCheck {
    pub subset: SubsetMask,
    pub authorized: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeReport {
    pub checks: Vec<SubsetCheck>,
}

impl SchemeReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SubsetCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// Authorized groups must see disjoint share supports for the two secrets;
/// unauthorized groups must see identical share distributions.
pub fn verify_scheme(s: &Scheme, a: &AccessStructure) -> Result<SchemeReport> {
    if s.n() != a.n() {
        return Err(Error::PartyMismatch {
            left: s.n(),
            right: a.n(),
        });
    }
    let mut checks = Vec::new();
    for subset in lattice::subsets(s.n())? {
        let m0 = s.table(0).marginal(subset)?;
        let m1 = s.table(1).marginal(subset)?;
        let authorized = a.is_authorized(subset);
        let ok = if authorized {
            m0.atoms().all(|(x, _)| !m1.contains_atom(x))
        } else {
            m0 == m1
        };
        checks.push(SubsetCheck {
            subset,
            authorized,
            ok,
        });
    }
    Ok(SchemeReport { checks })
}
