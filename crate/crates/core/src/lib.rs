//! Exact-arithmetic toolkit for cyclic difference sets, circulant Hadamard
//! matrices, and Barker sequences.
//!
//! The crate has five working layers:
//!
//! - [`polyalg`]: sparse multivariate polynomials over the rationals with
//!   pluggable monomial orders, plus the degree-4 cyclotomic extension used
//!   by the root-of-unity derivations.
//! - [`groebner`]: Buchberger completion, normal forms, and ideal
//!   membership over the rationals.
//! - [`diffsets`]: cyclic difference sets — certification, complements,
//!   residue counts, generating functions, and the two congruence checks.
//! - [`menon`]: the quartic parameter family `(4u^2, 2u^2 ± u, u^2 ± u,
//!   u^2)` — its nine-polynomial Diophantine system, the symbolic
//!   root-of-unity derivation, solution enumeration, and the basis-claim
//!   audit.
//! - [`seqmat`]: `±1` sequences and circulant matrices — autocorrelations,
//!   the Barker property, exhaustive searches, the `HHᵀ = nI` test, and the
//!   exact determinant bound.
//!
//! [`cli`] wires everything to a command-line interface that emits
//! machine-readable [`report::Report`]s; audited claims that fail to compute
//! as stated are recorded as findings under `discrepancies`, never silently
//! corrected.
//!
//! All values are immutable after construction and safe to share across
//! threads. Searches are deterministic: identical inputs produce identical
//! output regardless of worker count.

pub mod cli;
pub mod diffsets;
pub mod error;
pub mod groebner;
pub mod menon;
pub mod polyalg;
pub mod report;
pub mod seqmat;

pub use error::{Error, Result};
