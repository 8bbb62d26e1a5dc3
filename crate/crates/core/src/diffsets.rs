//! Cyclic difference sets over `Z_v`: certification from first principles,
//! complements, residue counts, generating functions, and the two congruence
//! checks on the reduced generating function.
//!
//! A subset `D` of `Z_v` with `k` elements is a difference set when every
//! nonzero residue has the same number `lambda` of ordered representations
//! `d1 - d2 (mod v)` with `d1, d2` in `D`. The derived order is
//! `n = k - lambda`, and certified parameters always satisfy
//! `k(k-1) = lambda(v-1)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyalg::{int, MultiPoly};

/// Parameter tuple `(v, k, lambda, n)` of a (candidate) difference set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DSParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub n: u64,
}

impl DSParams {
    /// The arithmetic identities every certified parameter set satisfies.
    pub fn holds_identities(&self) -> bool {
        self.k <= self.v
            && self.lambda <= self.k
            && self.n == self.k - self.lambda
            && self.k as u128 * (self.k as u128).saturating_sub(1)
                == self.lambda as u128 * (self.v as u128).saturating_sub(1)
    }
}

/// A well-formed (but not necessarily certified) subset of `Z_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceSet {
    v: u64,
    elements: Vec<u64>,
}

impl DifferenceSet {
    /// Validate residues: distinct and in `[0, v)`. Elements are stored
    /// sorted.
    pub fn new(v: u64, mut elements: Vec<u64>) -> Result<Self> {
        if v == 0 {
            return Err(Error::BadInput {
                what: "difference set",
                detail: "modulus v must be at least 1".into(),
            });
        }
        elements.sort_unstable();
        for pair in elements.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::BadInput {
                    what: "difference set",
                    detail: format!("duplicate element {}", pair[0]),
                });
            }
        }
        if let Some(&bad) = elements.iter().find(|&&d| d >= v) {
            return Err(Error::BadInput {
                what: "difference set",
                detail: format!("element {bad} is not reduced modulo {v}"),
            });
        }
        Ok(DifferenceSet { v, elements })
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn k(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Attempt certification; `None` when the difference counts are not
    /// constant on nonzero residues.
    pub fn certify(&self) -> Option<CertifiedDifferenceSet> {
        let v = self.v as usize;
        let mut counts = vec![0u64; v];
        for &a in &self.elements {
            for &b in &self.elements {
                if a != b {
                    counts[((a + self.v - b) % self.v) as usize] += 1;
                }
            }
        }
        let lambda = if v >= 2 { counts[1] } else { 0 };
        if counts[1..].iter().any(|&c| c != lambda) {
            return None;
        }
        let k = self.k();
        let params = DSParams {
            v: self.v,
            k,
            lambda,
            n: k - lambda,
        };
        debug_assert!(params.holds_identities());
        Some(CertifiedDifferenceSet {
            set: self.clone(),
            params,
        })
    }
}

/// A difference set together with its certified parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedDifferenceSet {
    set: DifferenceSet,
    params: DSParams,
}

impl CertifiedDifferenceSet {
    pub fn set(&self) -> &DifferenceSet {
        &self.set
    }

    pub fn params(&self) -> DSParams {
        self.params
    }

    pub fn v(&self) -> u64 {
        self.set.v
    }

    pub fn elements(&self) -> &[u64] {
        self.set.elements()
    }
}

/// Certify a residue subset of `Z_v`, returning its parameters, or `None`
/// when the difference multiset is not constant on nonzero residues.
pub fn verify_difference_set(v: u64, elements: &[u64]) -> Result<Option<DSParams>> {
    let set = DifferenceSet::new(v, elements.to_vec())?;
    Ok(set.certify().map(|c| c.params))
}

/// The complementary difference set, with parameters
/// `(v, v-k, v-2k+lambda, n)`; the order `n` is preserved.
pub fn complement(d: &CertifiedDifferenceSet) -> CertifiedDifferenceSet {
    let v = d.v();
    let inside: std::collections::BTreeSet<u64> = d.elements().iter().copied().collect();
    let elements: Vec<u64> = (0..v).filter(|x| !inside.contains(x)).collect();
    let set = DifferenceSet::new(v, elements).expect("complement of a valid set is valid");
    let cert = set
        .certify()
        .expect("complement of a difference set is a difference set");
    let p = d.params();
    debug_assert_eq!(cert.params.v, p.v);
    debug_assert_eq!(cert.params.k, p.v - p.k);
    debug_assert_eq!(cert.params.lambda, (p.v + p.lambda) - 2 * p.k);
    debug_assert_eq!(cert.params.n, p.n);
    cert
}

/// Residue-class counts of a divisor `w` of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueCounts {
    pub w: u64,
    pub counts: Vec<u64>,
}

/// Count the elements of `D` in each residue class modulo `w`, where `w`
/// divides `v`. The counts sum to `k` and each is at most `v / w`.
pub fn residue_counts(d: &DifferenceSet, w: u64) -> Result<ResidueCounts> {
    if w == 0 || d.v() % w != 0 {
        return Err(Error::NotADivisor { w, v: d.v() });
    }
    let mut counts = vec![0u64; w as usize];
    for &e in d.elements() {
        counts[(e % w) as usize] += 1;
    }
    debug_assert_eq!(counts.iter().sum::<u64>(), d.k());
    debug_assert!(counts.iter().all(|&c| c <= d.v() / w));
    Ok(ResidueCounts { w, counts })
}

/// Generating function `theta(X)`: coefficient 1 exactly at the exponents in
/// `D`, as a univariate polynomial in `X`.
pub fn theta(d: &DifferenceSet) -> MultiPoly {
    let vars = vec!["X".to_string()];
    MultiPoly::from_terms(
        &vars,
        d.elements().iter().map(|&e| (vec![e as u32], int(1))),
    )
    .expect("one term per element")
}

/// Reduce every exponent of a univariate polynomial modulo `w` (the quotient
/// by `X^w - 1`).
fn reduce_exponents_mod(p: &MultiPoly, w: u32) -> MultiPoly {
    let vars = p.vars().to_vec();
    MultiPoly::from_terms(
        &vars,
        p.terms().map(|(e, c)| (vec![e[0] % w], c.clone())),
    )
    .expect("reduction preserves well-formedness")
}

/// Check the product congruence for the reduced generating function: with
/// `x_i` the residue counts modulo `w`,
/// `theta_[w](X) * theta_[w](X^-1) = n + (lambda*v/w)(1 + X + ... + X^(w-1))`
/// in `Z[X]/(X^w - 1)`, where `X^-1` is realized by negating exponents
/// modulo `w`.
pub fn check_lemma5(d: &CertifiedDifferenceSet, w: u64) -> Result<bool> {
    let rc = residue_counts(d.set(), w)?;
    let p = d.params();
    let w32 = w as u32;
    let vars = vec!["X".to_string()];
    let theta_w = MultiPoly::from_terms(
        &vars,
        rc.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (vec![i as u32], int(c as i64))),
    )?;
    let theta_w_inv = MultiPoly::from_terms(
        &vars,
        rc.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (vec![(w32 - i as u32) % w32], int(c as i64))),
    )?;
    let product = reduce_exponents_mod(&theta_w.checked_mul(&theta_w_inv)?, w32);

    let fill = (p.lambda * (p.v / w)) as i64;
    let mut rhs_terms: Vec<(Vec<u32>, _)> = (0..w32).map(|j| (vec![j], int(fill))).collect();
    rhs_terms.push((vec![0], int(p.n as i64)));
    let rhs = MultiPoly::from_terms(&vars, rhs_terms)?;

    Ok(product == rhs)
}

/// Check the residue-count system modulo `w`: the counts sum to `k`, their
/// squares sum to `n + lambda*v/w`, and every cyclic cross-correlation
/// `sum_i x_i * x_(i-j)` for `j = 1 .. w-1` equals `lambda*v/w`.
pub fn check_lemma6(params: &DSParams, w: u64, counts: &[u64]) -> Result<bool> {
    if w == 0 || params.v % w != 0 {
        return Err(Error::NotADivisor { w, v: params.v });
    }
    if counts.len() as u64 != w {
        return Err(Error::BadInput {
            what: "residue counts",
            detail: format!("expected {w} counts, got {}", counts.len()),
        });
    }
    let w = w as usize;
    let fill = (params.lambda * (params.v / w as u64)) as u128;

    let total: u128 = counts.iter().map(|&x| x as u128).sum();
    if total != params.k as u128 {
        return Ok(false);
    }
    let squares: u128 = counts.iter().map(|&x| (x as u128) * (x as u128)).sum();
    if squares != params.n as u128 + fill {
        return Ok(false);
    }
    for j in 1..w {
        let cross: u128 = (0..w)
            .map(|i| counts[i] as u128 * counts[(i + w - j) % w] as u128)
            .sum();
        if cross != fill {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The known cyclic difference sets whose characteristic sequences are
/// Barker sequences, one per admissible length above 2.
pub const KNOWN_BARKER_DIFFERENCE_SETS: &[(u64, &[u64])] = &[
    (3, &[0, 1]),
    (4, &[0, 1, 2]),
    (5, &[0, 1, 2, 4]),
    (7, &[0, 1, 2, 5]),
    (11, &[0, 1, 2, 6, 9]),
    (13, &[0, 1, 2, 3, 4, 7, 8, 10, 12]),
];

/// All divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}
