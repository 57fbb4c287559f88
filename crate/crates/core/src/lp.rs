//! Exact rational linear programming.
//!
//! A dense two-phase simplex over `BigRational` with Bland's rule, sized for
//! the small feasibility problems behind Newton-polyhedron membership:
//! given generator exponents `v_1..v_m` and a target `a`, find
//! `λ >= 0` with `Σ λ_i = 1` and `Σ λ_i v_i <= a` componentwise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{ExpVec, MonomialIdeal};

type Q = BigRational;

fn q(v: u32) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Result of [`solve_standard_form`].
#[derive(Debug, Clone, PartialEq)]
pub(crate) enum LpOutcome {
    Optimal { x: Vec<Q>, value: Q },
    Infeasible,
    Unbounded,
}

struct Tableau {
    // each row holds the coefficients followed by the right-hand side
    rows: Vec<Vec<Q>>,
    // reduced costs followed by minus the objective value
    obj: Vec<Q>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Q {
        &self.rows[r][self.cols]
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.rows[r][j].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        if !self.obj[j].is_zero() {
            let f = self.obj[j].clone();
            for (v, p) in self.obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = j;
    }

    /// Runs simplex iterations on columns `< allowed`. Returns `false` when unbounded.
    fn run(&mut self, allowed: usize) -> bool {
        loop {
            // Bland: lowest-index improving column
            let Some(j) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Q)> = None;
            for r in 0..self.rows.len() {
                let coef = &self.rows[r][j];
                if !coef.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / coef;
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, j),
                None => return false,
            }
        }
    }

    fn set_objective(&mut self, cost: &[Q]) {
        let mut obj = vec![Q::zero(); self.cols + 1];
        obj[..cost.len()].clone_from_slice(cost);
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = cost.get(b).cloned().unwrap_or_else(Q::zero);
            if cb.is_zero() {
                continue;
            }
            for (o, v) in obj.iter_mut().zip(&self.rows[r]) {
                *o -= &cb * v;
            }
        }
        self.obj = obj;
    }
}

/// Minimizes `c·x` subject to `A x = b`, `x >= 0`.
pub(crate) fn solve_standard_form(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> LpOutcome {
    let m = a.len();
    let nvars = c.len();
    let cols = nvars + m;
    let mut rows = Vec::with_capacity(m);
    for (r, (row, rhs)) in a.iter().zip(b).enumerate() {
        debug_assert_eq!(row.len(), nvars);
        let flip = rhs.is_negative();
        let mut full = vec![Q::zero(); cols + 1];
        for (dst, src) in full.iter_mut().zip(row) {
            *dst = if flip { -src.clone() } else { src.clone() };
        }
        full[nvars + r] = Q::one();
        full[cols] = if flip { -rhs.clone() } else { rhs.clone() };
        rows.push(full);
    }
    let mut tab = Tableau {
        rows,
        obj: Vec::new(),
        basis: (nvars..cols).collect(),
        cols,
    };

    // phase 1: minimize the sum of artificials
    let mut phase1 = vec![Q::zero(); cols];
    for v in phase1.iter_mut().skip(nvars) {
        *v = Q::one();
    }
    tab.set_objective(&phase1);
    tab.run(cols);
    if !tab.obj[cols].is_zero() {
        return LpOutcome::Infeasible;
    }

    // drive zero-level artificials out of the basis, dropping redundant rows
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] >= nvars {
            match (0..nvars).find(|&j| !tab.rows[r][j].is_zero()) {
                Some(j) => tab.pivot(r, j),
                None => {
                    tab.rows.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    // phase 2
    tab.set_objective(c);
    if !tab.run(nvars) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Q::zero(); nvars];
    for (r, &bv) in tab.basis.iter().enumerate() {
        x[bv] = tab.rhs(r).clone();
    }
    let value = -tab.obj[cols].clone();
    LpOutcome::Optimal { x, value }
}

/// Newton-polyhedron membership instance: is `target` in
/// `conv(vertices) + R^n_{>=0}`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    vertices: Vec<Vec<Q>>,
    target: Vec<Q>,
}

impl LpProblem {
    pub fn newton_membership(ideal: &MonomialIdeal, target: &ExpVec) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::Domain(
                "the zero ideal has no Newton polyhedron".into(),
            ));
        }
        if target.len() != ideal.ambient_n() {
            return Err(Error::Dimension {
                expected: ideal.ambient_n(),
                found: target.len(),
            });
        }
        Ok(LpProblem {
            vertices: ideal
                .gens()
                .iter()
                .map(|g| g.entries().iter().map(|&e| q(e)).collect())
                .collect(),
            target: target.entries().iter().map(|&e| q(e)).collect(),
        })
    }

    /// Number of weights (generator count).
    pub fn m(&self) -> usize {
        self.vertices.len()
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    /// Solves the feasibility problem; `None` when infeasible.
    pub fn solve(&self) -> Option<LpCertificate> {
        let (m, n) = (self.m(), self.dim());
        // variables: weights λ_0..λ_{m-1}, then slacks s_0..s_{n-1}
        let mut a = Vec::with_capacity(n + 1);
        let mut b = Vec::with_capacity(n + 1);
        for j in 0..n {
            let mut row = vec![Q::zero(); m + n];
            for (i, v) in self.vertices.iter().enumerate() {
                row[i] = v[j].clone();
            }
            row[m + j] = Q::one();
            a.push(row);
            b.push(self.target[j].clone());
        }
        let mut sum_row = vec![Q::zero(); m + n];
        for v in sum_row.iter_mut().take(m) {
            *v = Q::one();
        }
        a.push(sum_row);
        b.push(Q::one());

        match solve_standard_form(&a, &b, &vec![Q::zero(); m + n]) {
            LpOutcome::Optimal { x, .. } => {
                let weights = x.into_iter().take(m).collect();
                Some(
                    LpCertificate::new(self, weights)
                        .expect("simplex produced a basic feasible solution"),
                )
            }
            LpOutcome::Infeasible => None,
            LpOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
        }
    }
}

/// Convex weights placing a point of `conv(vertices)` below the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpCertificate {
    weights: Vec<Q>,
}

impl LpCertificate {
    /// Checks the weights against `problem` with exact arithmetic.
    pub fn new(problem: &LpProblem, weights: Vec<Q>) -> Result<Self> {
        if weights.len() != problem.m() {
            return Err(Error::Dimension {
                expected: problem.m(),
                found: weights.len(),
            });
        }
        if weights.iter().any(|w| w.is_negative()) {
            return Err(Error::Consistency("negative certificate weight".into()));
        }
        if weights.iter().sum::<Q>() != Q::one() {
            return Err(Error::Consistency(
                "certificate weights do not sum to 1".into(),
            ));
        }
        for j in 0..problem.dim() {
            let lhs: Q = weights
                .iter()
                .zip(&problem.vertices)
                .map(|(w, v)| w * &v[j])
                .sum();
            if lhs > problem.target[j] {
                return Err(Error::Consistency(format!(
                    "certificate exceeds the target in coordinate {j}"
                )));
            }
        }
        Ok(LpCertificate { weights })
    }

    pub fn weights(&self) -> &[Q] {
        &self.weights
    }

    /// Least common multiple of the weight denominators.
    ///
    /// With `D` this value, `D·λ` is an integer composition of `D` and
    /// `D·a` lies in `I^D`.
    pub fn denominator_lcm(&self) -> BigInt {
        self.weights
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Q {
        Q::new(BigInt::from(n), BigInt::from(d))
    }

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(n, rows).unwrap()
    }

    #[test]
    fn midpoint_certificate() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let cert = LpProblem::newton_membership(&i, &ExpVec::from([1, 1]))
            .unwrap()
            .solve()
            .unwrap();
        assert_eq!(cert.weights(), &[r(1, 2), r(1, 2)]);
        assert_eq!(cert.denominator_lcm(), BigInt::from(2));
    }

    #[test]
    fn infeasible_below_polyhedron() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let p = LpProblem::newton_membership(&i, &ExpVec::from([1, 0])).unwrap();
        assert!(p.solve().is_none());
    }

    #[test]
    fn generator_is_member() {
        let i = ideal(3, &[&[2, 0, 1], &[0, 3, 0], &[1, 1, 1]]);
        for g in i.gens() {
            let cert = LpProblem::newton_membership(&i, g)
                .unwrap()
                .solve()
                .unwrap();
            assert_eq!(cert.denominator_lcm(), BigInt::one());
        }
    }

    #[test]
    fn zero_ideal_is_a_domain_error() {
        let err = LpProblem::newton_membership(&MonomialIdeal::zero(2), &ExpVec::from([1, 1]));
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn certificate_rejects_bad_weights() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let p = LpProblem::newton_membership(&i, &ExpVec::from([1, 1])).unwrap();
        assert!(LpCertificate::new(&p, vec![r(1, 1), r(0, 1)]).is_err());
        assert!(LpCertificate::new(&p, vec![r(1, 3), r(1, 3)]).is_err());
        assert!(LpCertificate::new(&p, vec![r(3, 2), r(-1, 2)]).is_err());
    }

    #[test]
    fn phase_two_optimizes() {
        // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
        let a = vec![
            vec![r(1, 1), r(2, 1), r(1, 1), r(0, 1)],
            vec![r(3, 1), r(1, 1), r(0, 1), r(1, 1)],
        ];
        let b = vec![r(4, 1), r(6, 1)];
        let c = vec![r(-1, 1), r(-1, 1), r(0, 1), r(0, 1)];
        match solve_standard_form(&a, &b, &c) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(x[0], r(8, 5));
                assert_eq!(x[1], r(6, 5));
                assert_eq!(value, r(-14, 5));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn detects_unbounded_and_redundant_rows() {
        // min -x s.t. x - y = 1 (unbounded)
        let out = solve_standard_form(&[vec![r(1, 1), r(-1, 1)]], &[r(1, 1)], &[r(-1, 1), r(0, 1)]);
        assert_eq!(out, LpOutcome::Unbounded);
        // duplicated equality row with a negative right-hand side
        let a = vec![vec![r(-1, 1), r(-1, 1)], vec![r(-1, 1), r(-1, 1)]];
        let b = vec![r(-2, 1), r(-2, 1)];
        match solve_standard_form(&a, &b, &[r(1, 1), r(2, 1)]) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(x, vec![r(2, 1), r(0, 1)]);
                assert_eq!(value, r(2, 1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example, which cycles under the textbook largest-coefficient rule
        let a = vec![
            vec![
                r(1, 4),
                r(-8, 1),
                r(-1, 1),
                r(9, 1),
                r(1, 1),
                r(0, 1),
                r(0, 1),
            ],
            vec![
                r(1, 2),
                r(-12, 1),
                r(-1, 2),
                r(3, 1),
                r(0, 1),
                r(1, 1),
                r(0, 1),
            ],
            vec![
                r(0, 1),
                r(0, 1),
                r(1, 1),
                r(0, 1),
                r(0, 1),
                r(0, 1),
                r(1, 1),
            ],
        ];
        let b = vec![r(0, 1), r(0, 1), r(1, 1)];
        let c = vec![
            r(-3, 4),
            r(20, 1),
            r(-1, 2),
            r(6, 1),
            r(0, 1),
            r(0, 1),
            r(0, 1),
        ];
        match solve_standard_form(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, r(-5, 4)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
