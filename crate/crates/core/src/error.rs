//! Error type shared across the toolkit.
//!
//! Every fallible operation returns [`Result`]. Variants split into two
//! families: usage errors (bad inputs, mismatched variable lists, malformed
//! literals) and resource errors (an exhaustive kernel was asked to do more
//! work than its configured budget allows). The CLI maps the first family to
//! exit code 2 and the second to exit code 3.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two polynomials were combined without sharing a variable list.
    #[error("mismatched variable lists: [{left}] vs [{right}]")]
    MismatchedVariables { left: String, right: String },

    /// A variable name was used that the polynomial does not declare.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// A polynomial literal failed to parse.
    #[error("invalid polynomial literal: {0}")]
    PolyParse(String),

    /// An operation that requires nonzero input received the zero polynomial.
    #[error("{0} requires a nonzero polynomial")]
    ZeroPolynomial(&'static str),

    /// A monomial order was built from a sequence that is not a permutation.
    #[error("variable precedence is not a permutation of 0..{expected}")]
    BadPrecedence { expected: usize },

    /// An ideal basis needs at least one generator.
    #[error("ideal basis must contain at least one nonzero generator")]
    EmptyBasis,

    /// Completion exceeded the pair-reduction cap; this guards against
    /// implementation bugs, not against legitimately hard inputs.
    #[error("basis completion exceeded {cap} pair reductions; aborting as a bug guard")]
    IterationCap { cap: u64 },

    /// A malformed set, sequence, or row literal.
    #[error("invalid {what}: {detail}")]
    BadInput { what: &'static str, detail: String },

    /// An operation that needs a certified difference set got one that fails
    /// the constant-difference-count test.
    #[error("set is not a difference set in Z_{v}; differences are not constant on nonzero residues")]
    NotCertified { v: u64 },

    /// `w` must divide the group modulus.
    #[error("w = {w} does not divide v = {v}")]
    NotADivisor { w: u64, v: u64 },

    /// An exhaustive kernel would exceed its configured work budget.
    #[error("work budget exceeded for {what}: needs {needed} units, budget is {budget} (raise --max-work to allow this)")]
    Budget {
        what: &'static str,
        needed: u128,
        budget: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that signal an exceeded resource budget rather than a
    /// malformed request.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Budget { .. } | Error::IterationCap { .. })
    }
}

/// Fail with [`Error::Budget`] unless `needed <= budget`.
pub fn check_budget(what: &'static str, needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        Err(Error::Budget {
            what,
            needed,
            budget,
        })
    } else {
        Ok(())
    }
}
