//! Analytic spread and the Freiman test for equigenerated monomial ideals.
//!
//! For an equigenerated monomial ideal the fiber cone is the toric algebra of
//! its generators, whose dimension is the rank of the generator exponent
//! matrix.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{family_mnt, FamilyParams, MonomialIdeal};

fn require_equigenerated(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::Domain("the zero ideal has no fiber cone".into()));
    }
    if ideal.equigenerated_degree().is_none() {
        return Err(Error::Domain(
            "analytic spread is only implemented for equigenerated ideals".into(),
        ));
    }
    Ok(())
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for c in col + 1..ncols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].abs();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Analytic spread `ℓ(I)` of a nonzero equigenerated ideal.
pub fn analytic_spread_equigen(ideal: &MonomialIdeal) -> Result<usize> {
    require_equigenerated(ideal)?;
    let rows: Vec<Vec<BigInt>> = ideal
        .gens()
        .iter()
        .map(|g| g.entries().iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    Ok(integer_rank(&rows))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreimanReport {
    pub mu_i: usize,
    pub mu_i2: usize,
    pub spread: usize,
    /// `ℓ·μ(I) - C(ℓ, 2)`.
    pub bound: i128,
    pub is_freiman: bool,
}

impl FreimanReport {
    /// `μ(I²) >= ℓ·μ(I) - C(ℓ,2)`; expected for equigenerated ideals.
    pub fn meets_lower_bound(&self) -> bool {
        self.mu_i2 as i128 >= self.bound
    }
}

pub fn freiman_test(ideal: &MonomialIdeal) -> Result<FreimanReport> {
    require_equigenerated(ideal)?;
    let spread = analytic_spread_equigen(ideal)?;
    let mu_i = ideal.mu();
    let mu_i2 = ideal.power(2)?.mu();
    let l = spread as i128;
    let bound = l * mu_i as i128 - l * (l - 1) / 2;
    Ok(FreimanReport {
        mu_i,
        mu_i2,
        spread,
        bound,
        is_freiman: mu_i2 as i128 == bound,
    })
}

/// `M_{n,t}` is Freiman with `μ(I²) = C(n+1, 2)` and `ℓ = n`.
pub fn freiman_family_check(p: FamilyParams) -> bool {
    let n = p.n();
    match freiman_test(&family_mnt(p)) {
        Ok(r) => r.is_freiman && r.mu_i2 == n * (n + 1) / 2 && r.spread == n,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{squarefree_veronese, ExpVec};
    use proptest::prelude::*;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(n, rows).unwrap()
    }

    fn params(n: usize, t: u32) -> FamilyParams {
        FamilyParams::new(n, t).unwrap()
    }

    /// Rank over GF(p) for a large prime, an independent route for small matrices.
    fn rank_mod_p(rows: &[Vec<i64>]) -> usize {
        const P: i64 = 1_000_000_007;
        let mut m: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.iter().map(|v| v.rem_euclid(P)).collect())
            .collect();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, p);
            let inv = pow_mod(m[rank][col], P - 2, P);
            let pivot = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let f = row[col] * inv % P;
                    for (x, &y) in row.iter_mut().zip(&pivot) {
                        *x = (*x - f * y).rem_euclid(P);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    }

    #[test]
    fn spreads() {
        assert_eq!(
            analytic_spread_equigen(&family_mnt(params(4, 2))).unwrap(),
            4
        );
        assert_eq!(
            analytic_spread_equigen(&ideal(3, &[&[1, 2, 0]])).unwrap(),
            1
        );
        for n in 1..=5 {
            assert_eq!(
                analytic_spread_equigen(&squarefree_veronese(n, 1).unwrap()).unwrap(),
                n
            );
        }
        assert!(analytic_spread_equigen(&ideal(2, &[&[2, 0], &[0, 3]])).is_err());
        assert!(analytic_spread_equigen(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn freiman_examples() {
        let r = freiman_test(&family_mnt(params(5, 3))).unwrap();
        assert!(r.is_freiman);
        assert_eq!(r.mu_i2, 15);

        let max = squarefree_veronese(4, 1).unwrap();
        let r = freiman_test(&max).unwrap();
        assert_eq!(
            (r.mu_i, r.mu_i2, r.spread, r.bound, r.is_freiman),
            (4, 10, 4, 10, true)
        );

        let w = ideal(2, &[&[4, 0], &[3, 1], &[0, 4]]);
        let r = freiman_test(&w).unwrap();
        assert_eq!((r.mu_i2, r.spread, r.bound, r.is_freiman), (6, 2, 5, false));
        assert!(r.meets_lower_bound());
    }

    #[test]
    fn family_checks() {
        assert!(freiman_family_check(params(3, 2)));
        assert_eq!(freiman_test(&family_mnt(params(3, 2))).unwrap().mu_i2, 6);
        assert!(freiman_family_check(params(7, 1)));
        assert_eq!(freiman_test(&family_mnt(params(7, 1))).unwrap().mu_i2, 28);
        let r = freiman_test(&family_mnt(params(2, 5))).unwrap();
        assert_eq!((r.mu_i, r.mu_i2, r.spread, r.bound), (2, 3, 2, 3));
        assert!(freiman_family_check(params(2, 5)));
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows: Vec<Vec<BigInt>> = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        assert_eq!(integer_rank(&rows), 2);
        assert_eq!(integer_rank(&[]), 0);
    }

    proptest! {
        #[test]
        fn bareiss_matches_modular_rank(rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 4), 1..=5)) {
            let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            prop_assert_eq!(integer_rank(&big), rank_mod_p(&rows));
        }

        #[test]
        fn equigenerated_inputs_meet_bound(rows in proptest::collection::vec(proptest::collection::vec(0u32..=3, 3), 1..=5)) {
            // pad each row into degree 9 by a fourth coordinate
            let gens = rows.into_iter().map(|mut r| { let s: u32 = r.iter().sum(); r.push(9 - s); ExpVec::new(r) });
            let i = MonomialIdeal::new(4, gens).unwrap();
            let r = freiman_test(&i).unwrap();
            prop_assert!(r.meets_lower_bound());
        }
    }
}
