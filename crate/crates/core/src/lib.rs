//! Exact symbolic engine for PBW deformations of skew group algebras
//! `S(V)#S_n`, where the symmetric group acts on a doubled representation
//! (the doubled permutation representation `W* ⊕ W ≅ C^{2n}` or the doubled
//! standard representation `h* ⊕ h ≅ C^{2n-2}`).
//!
//! The crate constructs the parametrized cochain families that record
//! commutator relations for degree-one rational Cherednik algebras, checks
//! the five Drinfeld-orbifold-algebra (PBW) conditions symbolically, extracts
//! the obstruction equation systems in the deformation parameters, and
//! cross-checks the symbolic verdicts against an independent rewriting oracle
//! (degree-3 overlap resolution on `T(V)#S_n`).
//!
//! Module map:
//! - [`group`], [`space`]: permutations, the doubled action, fixed spaces,
//!   the bar (standard-representation) basis, character computations.
//! - [`rat`], [`param`], [`sympoly`], [`group_algebra`]: exact arithmetic —
//!   rationals, the fixed parameter ring, degree-≤2 symmetric-algebra
//!   values, group-algebra-valued elements.
//! - [`cochain`]: group-graded alternating 2- and 3-cochains and the ψ/φ
//!   operators.
//! - [`families`]: constructors for every named cochain family, parameter
//!   specialization, restriction/extension between the two doubled spaces.
//! - [`verifier`], [`ledger`]: the five PBW properties, obstruction-system
//!   extraction, and the built-in condition ledger they are compared against.
//! - [`groebner`]: Buchberger engine over the parameter ring for ideal
//!   membership/equality and Hilbert-series dimension/degree.
//! - [`oracle`]: the noncommutative rewriting oracle.
//! - [`json`]: wire formats for the CLI and golden files.

pub mod cochain;
pub mod error;
pub mod families;
pub mod group;
pub mod group_algebra;
pub mod groebner;
pub mod json;
pub mod ledger;
pub mod oracle;
pub mod param;
pub mod rat;
pub mod space;
pub mod sympoly;
pub mod verifier;

pub use error::{Error, Result};

/// Version stamp embedded in every machine-readable report.
pub const SCHEMA_VERSION: &str = "1.0";

/// Smallest group degree the engine accepts; every supported statement
/// assumes `n >= 4`.
pub const MIN_N: usize = 4;

/// Rejects group degrees outside the supported range.
pub fn check_n(n: usize) -> Result<()> {
    if n < MIN_N {
        Err(Error::DomainTooSmall { n })
    } else {
        Ok(())
    }
}
