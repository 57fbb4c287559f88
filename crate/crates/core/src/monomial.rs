//! Exponent vectors and monomial ideals in canonical form.
//!
//! A [`MonomialIdeal`] stores the antichain of its minimal generators,
//! sorted lexicographically on the exponent entries, so two ideals are equal
//! exactly when their canonical forms are structurally equal.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// Exponent vector of a monomial `x_1^{a_1} ... x_n^{a_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec(Vec<u32>);

impl ExpVec {
    pub fn new(entries: Vec<u32>) -> Self {
        ExpVec(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    /// The pure power `x_var^exp` in `n` variables.
    pub fn pure_power(n: usize, var: usize, exp: u32) -> Self {
        let mut v = vec![0; n];
        v[var] = exp;
        ExpVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self <= other`, i.e. the monomial `self` divides `other`.
    pub fn divides(&self, other: &ExpVec) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Indices of the variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.support().count()
    }

    pub fn checked_add(&self, other: &ExpVec) -> Result<ExpVec> {
        check_len(self.len(), other.len())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExpVec)
    }

    pub fn checked_scale(&self, k: u32) -> Result<ExpVec> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExpVec)
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        debug_assert_eq!(self.len(), other.len());
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

impl Index<usize> for ExpVec {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExpVec {
    fn from(v: Vec<u32>) -> Self {
        ExpVec(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExpVec {
    fn from(v: [u32; N]) -> Self {
        ExpVec(v.to_vec())
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}

/// Parameters `(n, t)` of the family `M_{n,t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    n: usize,
    t: u32,
}

impl FamilyParams {
    pub fn new(n: usize, t: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("family needs n >= 2, got {n}")));
        }
        if t < 1 {
            return Err(Error::Domain("family needs t >= 1".into()));
        }
        Ok(FamilyParams { n, t })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> u32 {
        self.t
    }
}

/// A monomial ideal given by its minimal generators.
///
/// The empty generator set is the zero ideal and `{0}` is the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExpVec>,
}

impl MonomialIdeal {
    /// Builds the canonical form of the ideal generated by `raw`.
    pub fn new<I>(n: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExpVec>,
    {
        if n == 0 {
            return Err(Error::Domain(
                "ambient variable count must be positive".into(),
            ));
        }
        let raw: Vec<ExpVec> = raw.into_iter().collect();
        for v in &raw {
            check_len(n, v.len())?;
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(raw),
        })
    }

    /// Convenience constructor from plain integer rows.
    pub fn from_rows(n: usize, rows: &[&[u32]]) -> Result<Self> {
        Self::new(n, rows.iter().map(|r| ExpVec::new(r.to_vec())))
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![ExpVec::zeros(n)],
        }
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[ExpVec] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn contains(&self, m: &ExpVec) -> Result<bool> {
        check_len(self.n, m.len())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        check_len(self.n, other.n)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.checked_add(h)?);
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(raw),
        })
    }

    /// `I^k`; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(self.gens.iter().chain(&other.gens).cloned().collect()),
        })
    }

    /// `I + (m)`.
    pub fn with_generator(&self, m: ExpVec) -> Result<MonomialIdeal> {
        check_len(self.n, m.len())?;
        let mut raw = self.gens.clone();
        raw.push(m);
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(raw),
        })
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.lcm(h));
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(raw),
        })
    }

    /// `self ⊆ other`, decided on generators.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self
            .gens
            .iter()
            .all(|g| other.gens.iter().any(|h| h.divides(g))))
    }

    /// The ideal generated by `t·v` for every minimal generator `v`.
    pub fn scaled(&self, t: u32) -> Result<MonomialIdeal> {
        let raw = self
            .gens
            .iter()
            .map(|g| g.checked_scale(t))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.n, raw)
    }

    /// Common total degree of the generators, if there is one.
    pub fn equigenerated_degree(&self) -> Option<u64> {
        let first = self.gens.first()?.degree();
        self.gens
            .iter()
            .all(|g| g.degree() == first)
            .then_some(first)
    }

    /// Per-variable maximum exponent over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.entries()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Indices of variables that appear in some generator.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| self.gens.iter().any(|g| g[i] > 0))
            .collect()
    }
}

/// Divisor-minimal elements of `raw`, deduplicated and lexicographically sorted.
fn minimalize(mut raw: Vec<ExpVec>) -> Vec<ExpVec> {
    raw.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    raw.dedup();
    let mut kept: Vec<ExpVec> = Vec::with_capacity(raw.len());
    for v in raw {
        if !kept.iter().any(|k| k.divides(&v)) {
            kept.push(v);
        }
    }
    kept.sort_unstable();
    kept
}

/// Veronese-type ideal `I_{(d; caps)}`: all monomials of degree `d` whose
/// exponent of `x_i` is at most `caps[i]`.
pub fn veronese_type(n: usize, d: u32, caps: &[u32]) -> Result<MonomialIdeal> {
    check_len(n, caps.len())?;
    if d == 0 {
        return Err(Error::Domain("Veronese degree must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fill_bounded(&mut cur, 0, d, caps, &mut out);
    MonomialIdeal::new(n, out)
}

fn fill_bounded(cur: &mut Vec<u32>, pos: usize, left: u32, caps: &[u32], out: &mut Vec<ExpVec>) {
    if pos == cur.len() {
        if left == 0 {
            out.push(ExpVec::new(cur.clone()));
        }
        return;
    }
    let rest_cap: u64 = caps[pos + 1..].iter().map(|&c| u64::from(c)).sum();
    for e in 0..=caps[pos].min(left) {
        if u64::from(left - e) > rest_cap {
            continue;
        }
        cur[pos] = e;
        fill_bounded(cur, pos + 1, left - e, caps, out);
    }
    cur[pos] = 0;
}

/// Squarefree Veronese ideal `I_{d;n}`.
pub fn squarefree_veronese(n: usize, d: u32) -> Result<MonomialIdeal> {
    if d < 1 || d as usize > n {
        return Err(Error::Domain(format!(
            "squarefree Veronese degree must lie in 1..={n}, got {d}"
        )));
    }
    veronese_type(n, d, &vec![1; n])
}

/// `M_{n,t}`: generator `i` has exponent `t` everywhere except `0` at position `i`.
pub fn family_mnt(p: FamilyParams) -> MonomialIdeal {
    let gens = (0..p.n).map(|i| {
        let mut v = vec![p.t; p.n];
        v[i] = 0;
        ExpVec::new(v)
    });
    MonomialIdeal::new(p.n, gens).expect("family generators have the ambient length")
}
