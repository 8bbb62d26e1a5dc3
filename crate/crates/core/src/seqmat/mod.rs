//! Binary `±1` sequences and circulant matrices: aperiodic and periodic
//! autocorrelation, the Barker property, the map from difference sets to
//! sequences, the `H·Hᵀ = nI` test for circulant rows, and the exact
//! determinant bound.

mod search;

pub use search::{search_barker, search_circulant_hadamard};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diffsets::CertifiedDifferenceSet;
use crate::error::{check_budget, Error, Result};

/// Finite `±1` sequence of length at least 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinarySequence {
    entries: Vec<i8>,
}

impl BinarySequence {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::BadInput {
                what: "binary sequence",
                detail: "length must be at least 1".into(),
            });
        }
        if let Some(&bad) = entries.iter().find(|&&e| e != 1 && e != -1) {
            return Err(Error::BadInput {
                what: "binary sequence",
                detail: format!("entry {bad} is not ±1"),
            });
        }
        Ok(BinarySequence { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }
}

/// First row of a circulant `±1` matrix `A = (a_{i-j})` with indices mod `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CirculantRow {
    entries: Vec<i8>,
}

impl CirculantRow {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        let seq = BinarySequence::new(entries)?;
        Ok(CirculantRow {
            entries: seq.entries,
        })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn to_sequence(&self) -> BinarySequence {
        BinarySequence {
            entries: self.entries.clone(),
        }
    }
}

fn aperiodic_acf(entries: &[i8], tau: usize) -> i64 {
    let v = entries.len();
    (0..v - tau)
        .map(|i| entries[i] as i64 * entries[i + tau] as i64)
        .sum()
}

fn periodic_acf(entries: &[i8], tau: usize) -> i64 {
    let v = entries.len();
    (0..v)
        .map(|i| entries[i] as i64 * entries[(i + tau) % v] as i64)
        .sum()
}

/// Aperiodic autocorrelation `C(tau) = sum_{i=0}^{v-1-tau} s_i * s_{i+tau}`;
/// `C(0) = v`.
pub fn aperiodic_autocorrelation(s: &BinarySequence, tau: usize) -> Result<i64> {
    if tau >= s.len() {
        return Err(Error::BadInput {
            what: "shift",
            detail: format!("tau = {tau} out of range for length {}", s.len()),
        });
    }
    Ok(aperiodic_acf(s.entries(), tau))
}

/// Periodic autocorrelation `R(tau) = sum_{i=0}^{v-1} s_i * s_{(i+tau) mod v}`;
/// `R(0) = v`.
pub fn periodic_autocorrelation(s: &BinarySequence, tau: usize) -> Result<i64> {
    if tau >= s.len() {
        return Err(Error::BadInput {
            what: "shift",
            detail: format!("tau = {tau} out of range for length {}", s.len()),
        });
    }
    Ok(periodic_acf(s.entries(), tau))
}

/// Barker property: `|C(tau)| <= 1` for every `tau` in `[1, v-1]`. A length-1
/// sequence is vacuously Barker.
pub fn is_barker(s: &BinarySequence) -> bool {
    (1..s.len()).all(|tau| aperiodic_acf(s.entries(), tau).abs() <= 1)
}

/// `s -> -s`.
pub fn negate(s: &BinarySequence) -> BinarySequence {
    BinarySequence {
        entries: s.entries.iter().map(|&e| -e).collect(),
    }
}

/// `s_i -> s_{v-1-i}`.
pub fn reverse(s: &BinarySequence) -> BinarySequence {
    let mut entries = s.entries.clone();
    entries.reverse();
    BinarySequence { entries }
}

/// `s_i -> (-1)^i * s_i`; flips the sign of `C(tau)` for odd `tau` and so
/// preserves the Barker property.
pub fn alternate(s: &BinarySequence) -> BinarySequence {
    BinarySequence {
        entries: s
            .entries
            .iter()
            .enumerate()
            .map(|(i, &e)| if i % 2 == 1 { -e } else { e })
            .collect(),
    }
}

/// Orbit of a sequence under the group generated by negation, reversal, and
/// alternation (at most 8 distinct images).
pub fn barker_symmetry_orbit(s: &BinarySequence) -> Vec<BinarySequence> {
    let mut orbit = std::collections::BTreeSet::new();
    for reversed in [false, true] {
        for alternated in [false, true] {
            for negated in [false, true] {
                let mut t = s.clone();
                if reversed {
                    t = reverse(&t);
                }
                if alternated {
                    t = alternate(&t);
                }
                if negated {
                    t = negate(&t);
                }
                orbit.insert(t);
            }
        }
    }
    orbit.into_iter().collect()
}

/// Canonical orbit representative: the lexicographically greatest image
/// (entries compared numerically, so representatives lead with `+1`s).
pub fn canonical_barker_representative(s: &BinarySequence) -> BinarySequence {
    barker_symmetry_orbit(s).into_iter().max().unwrap()
}

/// Characteristic `±1` sequence of a certified difference set:
/// `s_i = +1` when `i` is in `D`, `-1` otherwise, for `i = 0 .. v-1`.
pub fn ds_to_sequence(d: &CertifiedDifferenceSet) -> BinarySequence {
    let inside: std::collections::BTreeSet<u64> = d.elements().iter().copied().collect();
    BinarySequence {
        entries: (0..d.v())
            .map(|i| if inside.contains(&i) { 1 } else { -1 })
            .collect(),
    }
}

/// Direct route: materialize the circulant matrix and test `A·Aᵀ = nI`
/// with exact integer arithmetic.
pub fn circulant_gram_is_identity(row: &CirculantRow) -> bool {
    let n = row.n();
    let a = |i: usize, j: usize| row.entries[(i + n - j % n) % n] as i64;
    for i in 0..n {
        for j in 0..n {
            let dot: i64 = (0..n).map(|k| a(i, k) * a(j, k)).sum();
            let want = if i == j { n as i64 } else { 0 };
            if dot != want {
                return false;
            }
        }
    }
    true
}

/// `HHᵀ = nI` test via the equivalent condition `R(tau) = 0` for every
/// `tau != 0` on the first row. For small orders the direct matrix product
/// is evaluated as well and the two routes are required to agree.
pub fn is_circulant_hadamard(row: &CirculantRow) -> bool {
    let by_acf = (1..row.n()).all(|tau| periodic_acf(row.entries(), tau) == 0);
    if row.n() <= 16 {
        let by_gram = circulant_gram_is_identity(row);
        assert_eq!(by_acf, by_gram, "autocorrelation and Gram routes disagree");
    }
    by_acf
}

/// Rotate the first row by `r` places.
pub fn rotate_row(row: &CirculantRow, r: usize) -> CirculantRow {
    let n = row.n();
    CirculantRow {
        entries: (0..n).map(|i| row.entries[(i + r) % n]).collect(),
    }
}

pub fn negate_row(row: &CirculantRow) -> CirculantRow {
    CirculantRow {
        entries: row.entries.iter().map(|&e| -e).collect(),
    }
}

/// Canonical representative of the orbit of a row under rotation and
/// negation: the lexicographically greatest image.
pub fn hadamard_orbit_representative(row: &CirculantRow) -> CirculantRow {
    let mut best = row.clone();
    for r in 0..row.n() {
        let rotated = rotate_row(row, r);
        let negated = negate_row(&rotated);
        if rotated > best {
            best = rotated;
        }
        if negated > best {
            best = negated;
        }
    }
    best
}

/// Outcome of the exact determinant-bound check on a circulant row.
#[derive(Debug, Clone)]
pub struct DetBoundReport {
    pub n: usize,
    /// `|det A|`, exact.
    pub det_abs: BigInt,
    /// Whether `|det A|` attains the `±1`-matrix bound `n^(n/2)`, decided
    /// exactly by comparing `det^2` with `n^n`.
    pub attains_bound: bool,
    /// The bound as a float, for display only.
    pub bound_approx: f64,
    pub is_hadamard: bool,
}

/// Exact `|det|` and bound comparison for a circulant `±1` row. Orders above
/// 16 exceed the exact-determinant budget.
pub fn determinant_bound_check(row: &CirculantRow) -> Result<DetBoundReport> {
    let n = row.n();
    check_budget("exact determinant", n as u128, 16)?;
    let det_abs = circulant_det(row).abs();
    let det_sq = &det_abs * &det_abs;
    let n_pow_n = num_traits::pow(BigInt::from(n), n);
    Ok(DetBoundReport {
        n,
        attains_bound: det_sq == n_pow_n,
        bound_approx: (n as f64).powf(n as f64 / 2.0),
        is_hadamard: is_circulant_hadamard(row),
        det_abs,
    })
}

/// Exact determinant of the circulant matrix by fraction-free (Bareiss)
/// elimination over the integers.
fn circulant_det(row: &CirculantRow) -> BigInt {
    let n = row.n();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(row.entries[(i + n - j) % n]))
                .collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by the Bareiss identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    &m[n - 1][n - 1] * sign
}

/// Tabulated Barker sequences the census audits, one row per admissible
/// length. The rows are checked, not presumed; the audit reports any row
/// that fails the Barker test together with its nearest true Barker
/// sequence.
pub const PUBLISHED_BARKER_TABLE: &[(usize, &[i8])] = &[
    (2, &[1, 1]),
    (3, &[1, 1, -1]),
    (4, &[1, 1, 1, -1]),
    (5, &[1, 1, 1, -1, 1]),
    (7, &[1, 1, 1, -1, -1, 1, -1]),
    (11, &[1, 1, 1, -1, -1, -1, 1, -1, -1, 1, -1]),
    (13, &[1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, 1]),
];

/// Hamming distance minimized over the symmetry orbit of `a`.
pub fn orbit_hamming_distance(a: &BinarySequence, b: &BinarySequence) -> usize {
    barker_symmetry_orbit(a)
        .iter()
        .map(|img| {
            img.entries()
                .iter()
                .zip(b.entries())
                .filter(|(x, y)| x != y)
                .count()
        })
        .min()
        .unwrap()
}
