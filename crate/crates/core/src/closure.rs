//! Integral closure of monomial ideals.
//!
//! A monomial `x^a` is integral over `I` iff `a` lies in the Newton
//! polyhedron `conv(gens) + R^n_{>=0}`; equivalently `x^{ka} ∈ I^k` for some
//! `k >= 1`. Membership is decided exactly with [`LpProblem`], and
//! [`power_witness`] searches for `k` directly as an LP-free cross-check.
//!
//! Minimal generators of the closure have `a_j <= max_i v_{ij}`: a larger
//! entry could be lowered by one and stay inside the polyhedron. The
//! closure is therefore found by scanning that box.

use crate::error::{Error, Result};
use crate::lp::{LpCertificate, LpProblem};
use crate::monomial::{ExpVec, MonomialIdeal};

/// Largest candidate box scanned by default.
pub const DEFAULT_BOX_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureOptions {
    pub box_cap: u128,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions {
            box_cap: DEFAULT_BOX_CAP,
        }
    }
}

/// Certificate that `a` lies in the Newton polyhedron of `ideal`, or `None`.
pub fn np_membership(ideal: &MonomialIdeal, a: &ExpVec) -> Result<Option<LpCertificate>> {
    Ok(LpProblem::newton_membership(ideal, a)?.solve())
}

/// Smallest `k <= k_max` with `k·a ∈ I^k`.
pub fn power_witness(ideal: &MonomialIdeal, a: &ExpVec, k_max: u32) -> Result<Option<u32>> {
    if ideal.is_zero() {
        return Err(Error::Domain("power witness of the zero ideal".into()));
    }
    let mut pow = MonomialIdeal::unit(ideal.ambient_n());
    for k in 1..=k_max {
        pow = pow.product(ideal)?;
        if pow.contains(&a.checked_scale(k)?)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    integral_closure_with(ideal, &ClosureOptions::default())
}

pub fn integral_closure_with(
    ideal: &MonomialIdeal,
    opts: &ClosureOptions,
) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let bounds = ideal.max_exponents();
    let box_size = bounds
        .iter()
        .try_fold(1u128, |acc, &b| acc.checked_mul(u128::from(b) + 1))
        .unwrap_or(u128::MAX);
    if box_size > opts.box_cap {
        return Err(Error::ResourceCap {
            what: "closure candidate box",
            needed: box_size,
            cap: opts.box_cap,
        });
    }

    let mut candidates = box_points(&bounds);
    candidates.sort_by_key(ExpVec::degree);

    let mut members: Vec<ExpVec> = Vec::new();
    for a in candidates {
        if members.iter().any(|m| m.divides(&a)) {
            continue;
        }
        if ideal.contains(&a)? || np_membership(ideal, &a)?.is_some() {
            members.push(a);
        }
    }
    MonomialIdeal::new(ideal.ambient_n(), members)
}

/// All integer points of `Π [0, bounds_j]`.
fn box_points(bounds: &[u32]) -> Vec<ExpVec> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; bounds.len()];
    loop {
        out.push(ExpVec::new(cur.clone()));
        let mut pos = 0;
        loop {
            if pos == bounds.len() {
                return out;
            }
            if cur[pos] < bounds[pos] {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 0;
            pos += 1;
        }
    }
}

pub fn is_integrally_closed(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(integral_closure(ideal)? == *ideal)
}

/// Whether `I^k` is integrally closed for every `1 <= k <= k_max`.
///
/// This is a bounded check; it does not certify normality.
pub fn is_normal_up_to(ideal: &MonomialIdeal, k_max: u32) -> Result<bool> {
    if k_max < 1 {
        return Err(Error::Domain("normality window needs k_max >= 1".into()));
    }
    let mut pow = MonomialIdeal::unit(ideal.ambient_n());
    for _ in 1..=k_max {
        pow = pow.product(ideal)?;
        if !is_integrally_closed(&pow)? {
            return Ok(false);
        }
    }
    Ok(true)
}
