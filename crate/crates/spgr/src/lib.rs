//! Exact-arithmetic toolkit for the symplectic conditions that cut type-C
//! Grassmannian, flag, and Schubert varieties out of their type-A ambients.
//!
//! Everything is computed over arbitrary-precision rationals: Plücker
//! coordinates as exact minors, the linear sections `E` indexed by
//! `(d-2)`-subsets, their restrictions to Schubert varieties, the counts of
//! surviving local equations, complete-intersection criteria, and the
//! tangent-space smoothness analysis at the identity coset. Every closed-form
//! value ships next to an independent brute-force or sampling oracle, and the
//! `verify` module packages those cross-checks as runnable suites.
//!
//! The crate is organized along the pipeline:
//!
//! - [`combinat`] — index sets, flag words, Bruhat order, Weyl-group lifts
//!   and length/dimension formulas;
//! - [`linalg`] — exact rational matrices (Bareiss determinants, rank,
//!   kernels, seeded random solutions);
//! - [`mpoly`] — sparse multivariate polynomials for symbolic identity
//!   checks;
//! - [`pluecker`] — subspace and flag presentations, Plücker evaluation, the
//!   symplectic pairing, and sparse linear sections;
//! - [`equations`] — construction of the `E` sections, their restriction
//!   calculus, and the identity checkers with pinned signs;
//! - [`schubert`] — equation counts, local-complete-intersection and
//!   smoothness classification;
//! - [`sampler`] — deterministic exact-rational point samplers for
//!   isotropic subspaces, Schubert cells, and flags;
//! - [`verify`] — the PASS/FAIL verification suites used by the CLI;
//! - [`cli`] — the `spgr` command-line surface.
//!
//! See the crate examples for one runnable walkthrough per capability.

pub mod cli;
pub mod combinat;
pub mod equations;
pub mod linalg;
pub mod mpoly;
pub mod pluecker;
pub mod sampler;
pub mod schubert;
pub mod verify;

pub use combinat::{FlagWord, IndexSet, Permutation};
pub use equations::{build_e, restriction_zero, SignedIdentityReport};
pub use linalg::{Rat, RatMatrix};
pub use pluecker::{FlagMatrix, LinearSection, SubspaceMatrix};
pub use sampler::SampleConfig;
pub use schubert::ClassificationRecord;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error("invalid flag word: {0}")]
    InvalidFlagWord(String),
    #[error("cardinality mismatch: {left} vs {right}")]
    CardinalityMismatch { left: usize, right: usize },
    #[error("ambient size mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("index set is not symplectic: {0}")]
    NotSymplectic(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular: {0}")]
    Singular(String),
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("resample budget exhausted: {0}")]
    ResampleBudget(String),
    #[error("sampled kernel dimension unstable: {0} then {1}")]
    UnstableKernel(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Binomial coefficient as an exact `usize` (n and k stay desk-scale here).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc as usize
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomial_small_table() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(8, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(12, 6), 924);
    }
}
