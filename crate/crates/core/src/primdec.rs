//! Irreducible decompositions and associated primes of monomial ideals.
//!
//! Decomposition splits on a mixed generator `u = x_i^{u_i} · w`:
//! `I = (I + x_i^{u_i}) ∩ (I + w)`, recursing until every generator is a pure
//! power. Redundant components are dropped afterwards. Associated primes are
//! the radicals of the surviving components.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::closure::integral_closure;
use crate::error::{Error, Result};
use crate::monomial::{ExpVec, MonomialIdeal};

/// Default bound on memoized sub-ideals during a decomposition.
pub const DEFAULT_MEMO_CAP: usize = 2_000_000;

/// An ideal `(x_i^{a_i} : i ∈ support)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    n: usize,
    exponents: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn new(n: usize, exponents: BTreeMap<usize, u32>) -> Result<Self> {
        if exponents.values().any(|&e| e == 0) {
            return Err(Error::Domain("component exponents must be positive".into()));
        }
        if let Some(&i) = exponents.keys().find(|&&i| i >= n) {
            return Err(Error::Domain(format!("variable index {i} outside 0..{n}")));
        }
        Ok(IrreducibleComponent { n, exponents })
    }

    pub fn exponents(&self) -> &BTreeMap<usize, u32> {
        &self.exponents
    }

    pub fn prime(&self) -> MonomialPrime {
        MonomialPrime {
            variables: self.exponents.keys().copied().collect(),
        }
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        if self.exponents.is_empty() {
            return MonomialIdeal::unit(self.n);
        }
        let gens = self
            .exponents
            .iter()
            .map(|(&i, &e)| ExpVec::pure_power(self.n, i, e));
        MonomialIdeal::new(self.n, gens).expect("component indices are in range")
    }

    /// `self ⊆ other` as ideals.
    pub fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.exponents
            .iter()
            .all(|(i, &a)| other.exponents.get(i).is_some_and(|&b| b <= a))
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, (i, e)) in self.exponents.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            match e {
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{e}", i + 1)?,
            }
        }
        write!(f, ")")
    }
}

/// A prime generated by a subset of the variables (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    variables: BTreeSet<usize>,
}

impl MonomialPrime {
    pub fn new<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        MonomialPrime {
            variables: vars.into_iter().collect(),
        }
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Self {
        Self::new(0..n)
    }

    pub fn variables(&self) -> &BTreeSet<usize> {
        &self.variables
    }

    pub fn height(&self) -> usize {
        self.variables.len()
    }

    pub fn is_strict_subset_of(&self, other: &MonomialPrime) -> bool {
        self.variables.len() < other.variables.len() && self.variables.is_subset(&other.variables)
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.variables.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        write!(f, ")")
    }
}

fn check_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::Domain(
            "the zero ideal has no irreducible decomposition".into(),
        ))
    } else if ideal.is_unit() {
        Err(Error::Domain(
            "the unit ideal has no irreducible decomposition".into(),
        ))
    } else {
        Ok(())
    }
}

/// Memoizing decomposition engine; reuse one across related ideals.
#[derive(Debug)]
pub struct Decomposer {
    memo: HashMap<MonomialIdeal, Vec<IrreducibleComponent>>,
    memo_cap: usize,
}

impl Default for Decomposer {
    fn default() -> Self {
        Self::with_memo_cap(DEFAULT_MEMO_CAP)
    }
}

impl Decomposer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_memo_cap(memo_cap: usize) -> Self {
        Decomposer {
            memo: HashMap::new(),
            memo_cap,
        }
    }

    /// Irredundant irreducible components of a proper nonzero ideal, sorted.
    pub fn decompose(&mut self, ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
        check_proper_nonzero(ideal)?;
        self.split(ideal)
    }

    fn split(&mut self, ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
        if let Some(hit) = self.memo.get(ideal) {
            return Ok(hit.clone());
        }
        let n = ideal.ambient_n();
        let pivot = ideal.gens().iter().find(|g| g.support_size() >= 2);
        let comps = match pivot {
            None => {
                let exps = ideal
                    .gens()
                    .iter()
                    .map(|g| {
                        let i = g
                            .support()
                            .next()
                            .expect("proper ideal has no unit generator");
                        (i, g[i])
                    })
                    .collect();
                vec![IrreducibleComponent::new(n, exps)?]
            }
            Some(u) => {
                let var = u.support().next().expect("mixed generator has support");
                let head = ExpVec::pure_power(n, var, u[var]);
                let mut tail = u.clone().into_entries();
                tail[var] = 0;
                let left = ideal.with_generator(head)?;
                let right = ideal.with_generator(ExpVec::new(tail))?;
                let mut all = self.split(&left)?;
                all.extend(self.split(&right)?);
                irredundant(all)
            }
        };
        if self.memo.len() >= self.memo_cap {
            return Err(Error::ResourceCap {
                what: "decomposition memo",
                needed: self.memo.len() as u128 + 1,
                cap: self.memo_cap as u128,
            });
        }
        self.memo.insert(ideal.clone(), comps.clone());
        Ok(comps)
    }

    pub fn associated_primes(&mut self, ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
        Ok(self
            .decompose(ideal)?
            .iter()
            .map(IrreducibleComponent::prime)
            .collect())
    }
}

/// Drops duplicates and every component that contains another one.
fn irredundant(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(a, c)| {
            !comps
                .iter()
                .enumerate()
                .any(|(b, d)| a != b && d.is_subset_of(c))
        })
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    Decomposer::new().decompose(ideal)
}

/// Whether `comps` intersect to exactly `ideal`.
pub fn intersection_equals(ideal: &MonomialIdeal, comps: &[IrreducibleComponent]) -> Result<bool> {
    let mut acc = MonomialIdeal::unit(ideal.ambient_n());
    for c in comps {
        acc = acc.intersection(&c.to_ideal())?;
    }
    Ok(acc == *ideal)
}

pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    Decomposer::new().associated_primes(ideal)
}

/// All associated primes have the same height.
pub fn is_unmixed(ideal: &MonomialIdeal) -> Result<bool> {
    let ass = associated_primes(ideal)?;
    let mut heights = ass.iter().map(MonomialPrime::height);
    let first = heights.next();
    Ok(heights.all(|h| Some(h) == first))
}

/// Some associated prime strictly contains another.
pub fn has_embedded_primes(ideal: &MonomialIdeal) -> Result<bool> {
    let ass = associated_primes(ideal)?;
    Ok(ass
        .iter()
        .any(|p| ass.iter().any(|q| q.is_strict_subset_of(p))))
}

/// `Ass(I^k)` for `k = 1..=k_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssProfile {
    pub per_power: Vec<BTreeSet<MonomialPrime>>,
    /// Smallest `k0` such that `Ass(I^k)` is constant on `k0..=k_max`, reported
    /// only when that run covers at least two powers. Nothing is claimed about
    /// powers beyond the window.
    pub stabilization_index: Option<usize>,
}

impl AssProfile {
    pub fn k_max(&self) -> usize {
        self.per_power.len()
    }
}

pub fn ass_profile(ideal: &MonomialIdeal, k_max: u32) -> Result<AssProfile> {
    if k_max < 1 {
        return Err(Error::Domain("Ass profile needs k_max >= 1".into()));
    }
    check_proper_nonzero(ideal)?;
    let mut dec = Decomposer::new();
    let mut per_power = Vec::with_capacity(k_max as usize);
    let mut pow = MonomialIdeal::unit(ideal.ambient_n());
    for _ in 0..k_max {
        pow = pow.product(ideal)?;
        per_power.push(dec.associated_primes(&pow)?);
    }
    let last = per_power.last().expect("k_max >= 1");
    let run_start = per_power
        .iter()
        .rposition(|s| s != last)
        .map_or(0, |p| p + 1);
    let stabilization_index = (run_start + 1 < per_power.len()).then_some(run_start + 1);
    Ok(AssProfile {
        per_power,
        stabilization_index,
    })
}

/// For a `p`-primary ideal, whether its integral closure is still `p`-primary.
pub fn primary_closure_ass_check(ideal: &MonomialIdeal) -> Result<bool> {
    let ass = associated_primes(ideal)?;
    if ass.len() != 1 {
        return Err(Error::Domain(format!(
            "expected a primary ideal, found {} associated primes",
            ass.len()
        )));
    }
    Ok(associated_primes(&integral_closure(ideal)?)? == ass)
}
