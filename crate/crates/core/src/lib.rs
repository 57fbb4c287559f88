//! Exact computations on monomial ideals.
//!
//! The crate covers the integral closure of monomial ideals (through
//! Newton-polyhedron membership decided by an exact rational simplex),
//! Hilbert functions and series of the toric algebra of the ideals
//! `M_{n,t} = (x^{e_1}, ..., x^{e_n})`, irreducible decompositions and
//! associated primes, and the analytic spread / Freiman test for
//! equigenerated ideals.
//!
//! Every routine works on exponent vectors only; the ground field never
//! enters the computations.

pub mod closure;
pub mod error;
pub mod fiber;
pub mod hilbert;
pub mod lp;
pub mod monomial;
pub mod poly;
pub mod primdec;

pub use closure::{
    integral_closure, integral_closure_with, is_integrally_closed, is_normal_up_to, np_membership,
    power_witness, ClosureOptions, DEFAULT_BOX_CAP,
};
pub use error::{Error, Result};
pub use fiber::{analytic_spread_equigen, freiman_family_check, freiman_test, FreimanReport};
pub use hilbert::{
    a_coeffs, binomial, h_numerator, h_numerator_variant, hilbert_series,
    lemma_inclusion_exclusion_check, lemma_series_identity_check, multiplicity_formula,
    multiplicity_oracle, roots_of_unity_sum, series_reconstruction, toric_hilbert_formula,
    toric_hilbert_oracle, HilbertSeries, InnerBlockCount, SeriesCheck,
};
pub use lp::{LpCertificate, LpProblem};
pub use monomial::{
    family_mnt, squarefree_veronese, veronese_type, ExpVec, FamilyParams, MonomialIdeal,
};
pub use poly::DensePolynomial;
pub use primdec::{
    ass_profile, associated_primes, has_embedded_primes, irreducible_decomposition, is_unmixed,
    primary_closure_ass_check, AssProfile, Decomposer, IrreducibleComponent, MonomialPrime,
};
