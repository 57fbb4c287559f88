//! Hilbert function, series numerator and multiplicity of the toric algebra
//! generated by `M_{n,t}`, together with the series identities they rest on.
//!
//! The closed forms here are deliberately evaluated term by term, exactly as
//! written; [`toric_hilbert_oracle`] counts lattice points directly so the two
//! can be compared.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{ExpVec, MonomialIdeal};
use crate::poly::DensePolynomial;

/// Largest set of distinct sums the oracle will hold.
pub const ORACLE_SET_CAP: usize = 2_000_000;

/// Default truncation degree for series identity checks.
pub const DEFAULT_TRUNCATION: usize = 25;

/// `C(a, b)`, taken to be zero when `b < 0`, `a < 0` or `a < b`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc = acc * BigInt::from(a - k) / BigInt::from(k + 1);
    }
    acc
}

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Coefficients `A_i^{n,d}` of `(1 + t + ... + t^{d-1})^n`.
///
/// A block with `d = 0` is treated as the constant `1`.
pub fn a_coeffs(n: u32, d: usize) -> DensePolynomial {
    if d == 0 {
        return DensePolynomial::one();
    }
    DensePolynomial::geometric_block(d).pow(n)
}

/// `Σ_k A_{kd}^{m,d} t^k`: every `d`-th coefficient of [`a_coeffs`].
fn every_dth(m: u32, d: usize) -> DensePolynomial {
    if d == 0 {
        return DensePolynomial::one();
    }
    let a = a_coeffs(m, d);
    DensePolynomial::new(a.coeffs().iter().step_by(d).cloned().collect())
}

/// Closed-form count of `(α_1..α_n)` with `Σ α = i(n-1)` and `0 <= α_j <= i`:
/// `Σ_{j=0}^{n-2} (-1)^j C(n,j) C(i(n-1) - ji - j + n - 1, n - 1)`.
pub fn toric_hilbert_formula(n: usize, i: usize) -> BigInt {
    let (n, i) = (n as i64, i as i64);
    (0..=n - 2)
        .map(|j| {
            sign(j as usize) * binomial(n, j) * binomial(i * (n - 1) - j * i - j + n - 1, n - 1)
        })
        .sum()
}

/// Number of distinct `i`-fold sums of generator vectors of `ideal`.
pub fn toric_hilbert_oracle(ideal: &MonomialIdeal, i: usize) -> Result<BigInt> {
    if ideal.is_zero() {
        return Err(Error::Domain("toric algebra of the zero ideal".into()));
    }
    let mut level: HashSet<ExpVec> = HashSet::from([ExpVec::zeros(ideal.ambient_n())]);
    for _ in 0..i {
        let mut next = HashSet::with_capacity(level.len() * 2);
        for s in &level {
            for g in ideal.gens() {
                next.insert(s.checked_add(g)?);
                if next.len() > ORACLE_SET_CAP {
                    return Err(Error::ResourceCap {
                        what: "toric oracle sum set",
                        needed: next.len() as u128,
                        cap: ORACLE_SET_CAP as u128,
                    });
                }
            }
        }
        level = next;
    }
    Ok(BigInt::from(level.len()))
}

/// Which upper index the inner `A`-coefficient block uses in the numerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerBlockCount {
    /// `A^{n-r, n-j-1}`; the form that agrees with the lattice-point count.
    NMinusR,
    /// `A^{n-1, n-j-1}`; kept to demonstrate that it disagrees.
    NMinusOne,
}

/// Numerator `Q(t)` of the Hilbert series `Q(t)/(1-t)^n`.
pub fn h_numerator(n: usize) -> DensePolynomial {
    h_numerator_variant(n, InnerBlockCount::NMinusR)
}

/// `Σ_j (-1)^j C(n,j) Σ_{r<=j} (-1)^r C(j,r) (1-t)^r Σ_k A_{k(n-j-1)}^{m, n-j-1} t^k`
/// with `m` chosen by `variant`.
pub fn h_numerator_variant(n: usize, variant: InnerBlockCount) -> DensePolynomial {
    assert!(n >= 2, "numerator needs n >= 2");
    let mut total = DensePolynomial::zero();
    for j in 0..=n - 2 {
        let d = n - j - 1;
        let mut inner = DensePolynomial::zero();
        for r in 0..=j {
            let m = match variant {
                InnerBlockCount::NMinusR => n - r,
                InnerBlockCount::NMinusOne => n - 1,
            };
            let term = &DensePolynomial::one_minus_t().pow(r as u32) * &every_dth(m as u32, d);
            inner = &inner + &term.scale(&(sign(r) * binomial(j as i64, r as i64)));
        }
        total = &total + &inner.scale(&(sign(j) * binomial(n as i64, j as i64)));
    }
    total
}

/// `(1-t)^n · Σ_{i<=max_i} H(i) t^i`, truncated at degree `max_i` (all kept
/// coefficients are exact).
pub fn series_reconstruction(n: usize, max_i: usize) -> DensePolynomial {
    let h = DensePolynomial::new((0..=max_i).map(|i| toric_hilbert_formula(n, i)).collect());
    DensePolynomial::one_minus_t()
        .pow(n as u32)
        .mul_truncated(&h, max_i)
}

/// Outcome of a coefficient-wise comparison of two series up to `window`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesCheck {
    pub window: usize,
    pub first_mismatch: Option<usize>,
}

impl SeriesCheck {
    pub fn compare(left: &DensePolynomial, right: &DensePolynomial, window: usize) -> Self {
        SeriesCheck {
            window,
            first_mismatch: (0..=window).find(|&i| left.coeff(i) != right.coeff(i)),
        }
    }

    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `h_numerator_variant(n, variant)` with the reconstruction from
/// `H(0..=max_i)` through degree `max_i - 1`.
pub fn numerator_check(n: usize, max_i: usize, variant: InnerBlockCount) -> SeriesCheck {
    SeriesCheck::compare(
        &series_reconstruction(n, max_i),
        &h_numerator_variant(n, variant),
        max_i.saturating_sub(1),
    )
}

/// `Q(t) / (1-t)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: DensePolynomial,
    pub denominator_exponent: usize,
}

impl HilbertSeries {
    /// Power-series coefficients through degree `deg`.
    pub fn expand(&self, deg: usize) -> Vec<BigInt> {
        let m = self.denominator_exponent as i64;
        let denom_inv = DensePolynomial::new(
            (0..=deg as i64)
                .map(|i| binomial(i + m - 1, m - 1))
                .collect(),
        );
        let prod = self.numerator.mul_truncated(&denom_inv, deg);
        (0..=deg).map(|i| prod.coeff(i)).collect()
    }
}

pub fn hilbert_series(n: usize) -> HilbertSeries {
    HilbertSeries {
        numerator: h_numerator(n),
        denominator_exponent: n,
    }
}

/// `Σ_{j=0}^{n-2} (-1)^j C(n,j) (n-j-1)^{n-1}`.
pub fn multiplicity_formula(n: usize) -> BigInt {
    assert!(n >= 2, "multiplicity needs n >= 2");
    (0..=n - 2)
        .map(|j| sign(j) * binomial(n as i64, j as i64) * BigInt::from(n - j - 1).pow(n as u32 - 1))
        .sum()
}

/// `(n-1)`-st forward difference of `i ↦ toric_hilbert_formula(n, i)`.
///
/// Evaluated at `i = n, n+1, n+2`; the three values must agree.
pub fn multiplicity_oracle(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::Domain("multiplicity needs n >= 2".into()));
    }
    let order = n - 1;
    let diff_at = |i0: usize| -> BigInt {
        (0..=order)
            .map(|k| {
                sign(order - k)
                    * binomial(order as i64, k as i64)
                    * toric_hilbert_formula(n, i0 + k)
            })
            .sum()
    };
    let values: Vec<BigInt> = (n..n + 3).map(diff_at).collect();
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Consistency(format!(
            "finite differences did not stabilise for n = {n}: {values:?}"
        )));
    }
    Ok(values.into_iter().next().expect("three samples"))
}

/// `Σ_k A_{kd}^{n,d}`, expected to equal `d^{n-1}`.
pub fn roots_of_unity_sum(n: u32, d: usize) -> BigInt {
    every_dth(n, d).coeffs().iter().sum()
}

/// `(1-t)^{n-r} Σ_i C(i d + n-r-1, n-r-1) t^i` against `Σ_l A_{ld}^{n-r,d} t^l`
/// with `d = n - j - 1`, through degree `trunc`.
pub fn lemma_series_identity_check(
    n: usize,
    j: usize,
    r: usize,
    trunc: usize,
) -> Result<SeriesCheck> {
    if n < 2 || j > n - 2 || r > j {
        return Err(Error::Domain(format!(
            "series identity needs 0 <= r <= j <= n-2, got n={n} j={j} r={r}"
        )));
    }
    let d = (n - j - 1) as i64;
    let m = (n - r) as i64;
    let series = DensePolynomial::new(
        (0..=trunc as i64)
            .map(|i| binomial(i * d + m - 1, m - 1))
            .collect(),
    );
    let left = DensePolynomial::one_minus_t()
        .pow(m as u32)
        .mul_truncated(&series, trunc);
    let right = every_dth(m as u32, d as usize).truncate(trunc);
    Ok(SeriesCheck::compare(&left, &right, trunc))
}

/// `C(i d - j + n - 1, n - 1)` against `Σ_r (-1)^r C(j,r) C(i d + n-r-1, n-r-1)`
/// with `d = n - j - 1`, for every `i <= trunc`.
pub fn lemma_inclusion_exclusion_check(n: usize, j: usize, trunc: usize) -> Result<SeriesCheck> {
    if n < 2 || j > n - 2 {
        return Err(Error::Domain(format!(
            "inclusion-exclusion identity needs 0 <= j <= n-2, got n={n} j={j}"
        )));
    }
    let (ni, ji) = (n as i64, j as i64);
    let d = ni - ji - 1;
    let left = DensePolynomial::new(
        (0..=trunc as i64)
            .map(|i| binomial(i * d - ji + ni - 1, ni - 1))
            .collect(),
    );
    let right = DensePolynomial::new(
        (0..=trunc as i64)
            .map(|i| {
                (0..=ji)
                    .map(|r| {
                        sign(r as usize)
                            * binomial(ji, r)
                            * binomial(i * d + ni - r - 1, ni - r - 1)
                    })
                    .sum()
            })
            .collect(),
    );
    Ok(SeriesCheck::compare(&left, &right, trunc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{family_mnt, FamilyParams};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn mnt(n: usize, t: u32) -> MonomialIdeal {
        family_mnt(FamilyParams::new(n, t).unwrap())
    }

    /// Brute-force count of `α ∈ [0, i]^n` with `Σ α = i(n-1)`.
    fn bounded_compositions(n: usize, i: usize) -> u64 {
        let target = i * (n - 1);
        let mut count = 0;
        let total = (i + 1).pow(n as u32);
        for mut code in 0..total {
            let mut s = 0;
            for _ in 0..n {
                s += code % (i + 1);
                code /= i + 1;
            }
            if s == target {
                count += 1;
            }
        }
        count
    }

    /// `(1 + ... + t^{d-1})^n` expanded by counting digit strings.
    fn a_coeffs_by_counting(n: u32, d: usize) -> Vec<u64> {
        let mut out = vec![0u64; n as usize * (d - 1) + 1];
        for mut code in 0..d.pow(n) {
            let mut s = 0;
            for _ in 0..n {
                s += code % d;
                code /= d;
            }
            out[s] += 1;
        }
        out
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(2, 5), big(0));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(-3, 2), big(0));
        assert_eq!(binomial(4, -1), big(0));
        assert_eq!(binomial(0, 0), big(1));
    }

    #[test]
    fn a_coefficients() {
        assert_eq!(a_coeffs(2, 3), DensePolynomial::from_i64s(&[1, 2, 3, 2, 1]));
        assert_eq!(a_coeffs(5, 1), DensePolynomial::one());
        assert_eq!(a_coeffs(1, 4), DensePolynomial::from_i64s(&[1, 1, 1, 1]));
        assert_eq!(a_coeffs(3, 0), DensePolynomial::one());
        for n in 1..=5u32 {
            for d in 1..=4usize {
                let a = a_coeffs(n, d);
                let expected: Vec<BigInt> = a_coeffs_by_counting(n, d)
                    .into_iter()
                    .map(BigInt::from)
                    .collect();
                assert_eq!(a.coeffs(), expected.as_slice());
                assert!(a.is_palindromic());
                assert_eq!(a.degree(), Some(n as usize * (d - 1)));
                assert_eq!(a.eval(&big(1)), BigInt::from(d).pow(n));
            }
        }
    }

    #[test]
    fn hilbert_formula_matches_enumeration() {
        assert_eq!(toric_hilbert_formula(3, 2), big(6));
        for n in 2..=6 {
            assert_eq!(toric_hilbert_formula(n, 0), big(1));
            assert_eq!(toric_hilbert_formula(n, 1), BigInt::from(n));
            for i in 0..=4 {
                assert_eq!(
                    toric_hilbert_formula(n, i),
                    BigInt::from(bounded_compositions(n, i)),
                    "n={n} i={i}"
                );
            }
        }
    }

    #[test]
    fn hilbert_oracle_examples() {
        assert_eq!(toric_hilbert_oracle(&mnt(3, 2), 2).unwrap(), big(6));
        assert_eq!(toric_hilbert_oracle(&mnt(4, 3), 0).unwrap(), big(1));
        for i in 0..6 {
            assert_eq!(
                toric_hilbert_oracle(&mnt(2, 1), i).unwrap(),
                BigInt::from(i + 1)
            );
        }
        assert!(toric_hilbert_oracle(&MonomialIdeal::zero(2), 1).is_err());
    }

    #[test]
    fn numerators() {
        assert_eq!(h_numerator(2), DensePolynomial::one());
        assert_eq!(h_numerator(3), DensePolynomial::one());
        assert_eq!(h_numerator(4).eval(&big(1)), big(1));
        assert_eq!(
            h_numerator_variant(3, InnerBlockCount::NMinusOne),
            DensePolynomial::from_i64s(&[1, -2])
        );
        for n in 2..=5 {
            assert!(numerator_check(n, 2 * n + 6, InnerBlockCount::NMinusR).holds());
        }
        let bad = numerator_check(3, 12, InnerBlockCount::NMinusOne);
        assert_eq!(bad.first_mismatch, Some(1));
    }

    #[test]
    fn series_expansion() {
        let s = hilbert_series(3);
        assert_eq!(s.denominator_exponent, 3);
        assert_eq!(s.numerator, DensePolynomial::one());
        let expected: Vec<BigInt> = [1, 3, 6, 10, 15].into_iter().map(big).collect();
        assert_eq!(s.expand(4), expected);
        assert_eq!(hilbert_series(2).numerator, DensePolynomial::one());
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity_formula(2), big(1));
        assert_eq!(multiplicity_formula(3), big(1));
        assert_eq!(multiplicity_formula(5), big(256 - 405 + 160 - 10));
        for n in 2..=7 {
            assert_eq!(multiplicity_oracle(n).unwrap(), multiplicity_formula(n));
        }
        assert!(multiplicity_oracle(1).is_err());
    }

    #[test]
    fn every_dth_sums() {
        assert_eq!(roots_of_unity_sum(2, 2), big(2));
        assert_eq!(roots_of_unity_sum(3, 2), big(4));
        assert_eq!(roots_of_unity_sum(7, 1), big(1));
        for n in 1..=6u32 {
            for d in 1..=5usize {
                let brute = a_coeffs_by_counting(n, d);
                let s: u64 = brute.iter().step_by(d).sum();
                assert_eq!(roots_of_unity_sum(n, d), BigInt::from(s));
            }
        }
    }

    #[test]
    fn lemma_checks() {
        assert!(lemma_series_identity_check(3, 0, 0, 25).unwrap().holds());
        assert!(lemma_series_identity_check(4, 1, 1, 25).unwrap().holds());
        assert!(lemma_series_identity_check(2, 0, 0, 10).unwrap().holds());
        assert!(lemma_series_identity_check(3, 2, 0, 10).is_err());
        assert!(lemma_inclusion_exclusion_check(3, 1, 25).unwrap().holds());
        assert!(lemma_inclusion_exclusion_check(5, 3, 20).unwrap().holds());
        assert!(lemma_inclusion_exclusion_check(6, 0, 12).unwrap().holds());
        assert!(lemma_inclusion_exclusion_check(4, 3, 12).is_err());
    }

    #[test]
    fn mismatch_reports_first_index() {
        let a = DensePolynomial::from_i64s(&[1, 2, 3]);
        let b = DensePolynomial::from_i64s(&[1, 2, 4]);
        assert_eq!(SeriesCheck::compare(&a, &b, 5).first_mismatch, Some(2));
        assert!(SeriesCheck::compare(&a, &b, 1).holds());
    }
}
