//! Exact character computations for the cohomology of generalized ordered
//! configuration spaces, organised around Koszul duality between truncated
//! twisted commutative algebras and their coLie duals.
//!
//! * [`charring`]: symmetric functions with (cohomological, weight) bigrading,
//!   super-plethysm and the plethystic exponential/logarithm.
//! * [`fbchain`]: bar complexes of `(Λ[x]/xⁿ)₊` with explicit S_k-actions and
//!   their equivariant homology.
//! * [`koszul`]: characters of the dual coLie coalgebras `a_n`.
//! * [`conf`]: cohomology characters of `P_n^k(X)` for spaces with trivial
//!   compactly supported multiplication.
//! * [`stability`]: support cones, splittings and vanishing reports.
//! * [`oracle`]: independent combinatorial ground truth.
//! * [`format`]: JSON space descriptions and result files.

pub mod charring;
pub mod conf;
pub mod error;
pub mod fbchain;
pub mod format;
pub mod koszul;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod stability;
pub mod verify;

pub use charring::{Basis, FBCharacter, Partition, SymFunc, TriDegree};
pub use error::{Error, Result};

/// Default guardrail on the graded-degree truncation.
pub const DEFAULT_DEGREE_CAP: usize = 9;

/// Current degree guardrail, overridable through `TCFA_MAX_DEGREE_CAP`.
pub fn degree_cap() -> usize {
    std::env::var("TCFA_MAX_DEGREE_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_DEGREE_CAP)
}

pub(crate) fn check_degree_cap(requested: usize) -> Result<()> {
    let cap = degree_cap();
    if requested > cap {
        return Err(Error::DegreeCap { requested, cap });
    }
    Ok(())
}
