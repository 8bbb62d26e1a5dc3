//! Exhaustive search kernels. Sequences are assigned from both ends inward
//! so that the short high-shift correlations complete early; a partial
//! assignment is cut as soon as some shift can no longer reach `|C| <= 1`
//! (or `R = 0` for the circulant kernel, which works on bit masks). Prefix
//! blocks are distributed across worker threads and merged in block order,
//! so results do not depend on the worker count.

use rayon::prelude::*;

use super::{
    canonical_barker_representative, hadamard_orbit_representative, is_barker, BinarySequence,
    CirculantRow,
};
use crate::error::{check_budget, Error, Result};

/// Position assignment order: 0, v-1, 1, v-2, ...
fn fill_order(v: usize) -> Vec<usize> {
    (0..v)
        .map(|d| if d % 2 == 0 { d / 2 } else { v - 1 - d / 2 })
        .collect()
}

/// A partial assignment survives when every shift can still reach
/// `|C(tau)| <= 1`: the settled part of each correlation can be off by at
/// most one per undetermined term.
fn barker_feasible(entries: &[i8]) -> bool {
    let v = entries.len();
    for tau in 1..v {
        let mut sum: i64 = 0;
        let mut unknown: i64 = 0;
        for i in 0..v - tau {
            let (a, b) = (entries[i], entries[i + tau]);
            if a == 0 || b == 0 {
                unknown += 1;
            } else {
                sum += a as i64 * b as i64;
            }
        }
        if sum.abs() > 1 + unknown {
            return false;
        }
    }
    true
}

fn barker_dfs(entries: &mut Vec<i8>, order: &[usize], depth: usize, out: &mut Vec<BinarySequence>) {
    let v = entries.len();
    if depth == v {
        let s = BinarySequence::new(entries.clone()).expect("fully assigned ±1 sequence");
        debug_assert!(is_barker(&s));
        out.push(s);
        return;
    }
    let pos = order[depth];
    for value in [1i8, -1] {
        entries[pos] = value;
        if barker_feasible(entries) {
            barker_dfs(entries, order, depth + 1, out);
        }
    }
    entries[pos] = 0;
}

/// Exhaustive search for all Barker sequences of length `v`. With
/// `canonicalize`, one representative per orbit of negation, reversal, and
/// alternation is returned. Output is sorted descending, so representatives
/// lead with `+1`s.
pub fn search_barker(v: usize, canonicalize: bool, max_work: u64) -> Result<Vec<BinarySequence>> {
    if v == 0 {
        return Err(Error::BadInput {
            what: "sequence length",
            detail: "length must be at least 1".into(),
        });
    }
    if v >= 64 {
        return Err(Error::Budget {
            what: "Barker search",
            needed: u128::MAX,
            budget: max_work,
        });
    }
    check_budget("Barker search", 1u128 << v, max_work)?;

    let order = fill_order(v);
    let mut found: Vec<BinarySequence> = if v <= 12 {
        let mut out = Vec::new();
        let mut entries = vec![0i8; v];
        barker_dfs(&mut entries, &order, 0, &mut out);
        out
    } else {
        // parallelize over the first 10 assignments (in fill order)
        let prefix = 10usize;
        let blocks: Vec<Vec<BinarySequence>> = (0u32..1 << prefix)
            .into_par_iter()
            .map(|mask| {
                let mut entries = vec![0i8; v];
                for (d, &pos) in order.iter().enumerate().take(prefix) {
                    entries[pos] = if mask >> d & 1 == 1 { 1 } else { -1 };
                }
                let mut out = Vec::new();
                if barker_feasible(&entries) {
                    barker_dfs(&mut entries, &order, prefix, &mut out);
                }
                out
            })
            .collect();
        blocks.into_iter().flatten().collect()
    };

    if canonicalize {
        let reps: std::collections::BTreeSet<BinarySequence> = found
            .iter()
            .map(canonical_barker_representative)
            .collect();
        found = reps.into_iter().collect();
    }
    found.sort_by(|a, b| b.cmp(a));
    Ok(found)
}

fn rotl(mask: u64, r: usize, n: usize) -> u64 {
    let all = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    ((mask << r) | (mask >> (n - r))) & all
}

/// `R(tau) = 0` for all nonzero shifts, on the bit-mask encoding:
/// `R(tau) = n - 2 * popcount(mask ^ rot(mask, tau))`.
fn mask_is_hadamard(mask: u64, n: usize) -> bool {
    if n % 2 == 1 {
        return n == 1;
    }
    (1..n).all(|tau| (mask ^ rotl(mask, tau, n)).count_ones() as usize == n / 2)
}

fn mask_to_row(mask: u64, n: usize) -> CirculantRow {
    CirculantRow::new(
        (0..n)
            .map(|i| if mask >> i & 1 == 1 { 1 } else { -1 })
            .collect(),
    )
    .expect("±1 entries")
}

/// Exhaustive search for circulant Hadamard rows of every order up to
/// `n_max`. With `reduce`, one representative per orbit of rotation and
/// negation is kept. Rows per order are sorted descending.
pub fn search_circulant_hadamard(
    n_max: usize,
    reduce: bool,
    max_work: u64,
) -> Result<std::collections::BTreeMap<usize, Vec<CirculantRow>>> {
    if n_max == 0 {
        return Err(Error::BadInput {
            what: "matrix order",
            detail: "order must be at least 1".into(),
        });
    }
    if n_max >= 48 {
        return Err(Error::Budget {
            what: "circulant Hadamard search",
            needed: u128::MAX,
            budget: max_work,
        });
    }
    check_budget("circulant Hadamard search", 1u128 << n_max, max_work)?;

    let mut by_order = std::collections::BTreeMap::new();
    for n in 1..=n_max {
        let total: u64 = 1 << n;
        let hits: Vec<u64> = if n <= 16 {
            (0..total).filter(|&m| mask_is_hadamard(m, n)).collect()
        } else {
            let chunk = total / 256;
            let blocks: Vec<Vec<u64>> = (0..256u64)
                .into_par_iter()
                .map(|b| {
                    let lo = b * chunk;
                    let hi = if b == 255 { total } else { lo + chunk };
                    (lo..hi).filter(|&m| mask_is_hadamard(m, n)).collect()
                })
                .collect();
            blocks.into_iter().flatten().collect()
        };
        let mut rows: Vec<CirculantRow> = hits.into_iter().map(|m| mask_to_row(m, n)).collect();
        if reduce {
            let reps: std::collections::BTreeSet<CirculantRow> = rows
                .iter()
                .map(hadamard_orbit_representative)
                .collect();
            rows = reps.into_iter().collect();
        }
        rows.sort_by(|a, b| b.cmp(a));
        by_order.insert(n, rows);
    }
    Ok(by_order)
}

#[cfg(test)]
mod tests {
    use super::super::is_circulant_hadamard;
    use super::*;

    #[test]
    fn fill_order_interleaves_ends() {
        assert_eq!(fill_order(5), vec![0, 4, 1, 3, 2]);
        assert_eq!(fill_order(4), vec![0, 3, 1, 2]);
    }

    #[test]
    fn barker_search_small_lengths() {
        // all four length-2 sequences are Barker, one orbit
        let all = search_barker(2, false, 1 << 20).unwrap();
        assert_eq!(all.len(), 4);
        let reps = search_barker(2, true, 1 << 20).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].entries(), &[1, 1]);
    }

    #[test]
    fn barker_search_length_six_is_empty() {
        assert!(search_barker(6, false, 1 << 20).unwrap().is_empty());
    }

    #[test]
    fn barker_search_matches_plain_enumeration() {
        for v in 1..=10usize {
            let mut expected = Vec::new();
            for mask in 0u32..1 << v {
                let entries: Vec<i8> = (0..v)
                    .map(|i| if mask >> i & 1 == 1 { 1 } else { -1 })
                    .collect();
                let s = BinarySequence::new(entries).unwrap();
                if is_barker(&s) {
                    expected.push(s);
                }
            }
            expected.sort_by(|a, b| b.cmp(a));
            let got = search_barker(v, false, 1 << 20).unwrap();
            assert_eq!(got, expected, "length {v}");
        }
    }

    #[test]
    fn barker_search_thirteen_contains_the_standard_sequence() {
        let found = search_barker(13, true, 1 << 20).unwrap();
        assert!(!found.is_empty());
        let standard =
            BinarySequence::new(vec![1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1]).unwrap();
        assert!(found.contains(&canonical_barker_representative(&standard)));
    }

    #[test]
    fn barker_budget_enforced() {
        assert!(search_barker(24, false, 1 << 20).unwrap_err().is_resource());
    }

    #[test]
    fn hadamard_search_small_orders() {
        let by_order = search_circulant_hadamard(8, false, 1 << 20).unwrap();
        for (n, rows) in &by_order {
            let expect_hits = matches!(n, 1 | 4);
            assert_eq!(!rows.is_empty(), expect_hits, "order {n}");
            for r in rows {
                assert!(is_circulant_hadamard(r));
            }
        }
        assert_eq!(by_order[&4].len(), 8);
        assert!(by_order[&2].is_empty());
    }

    #[test]
    fn hadamard_order_four_is_one_orbit() {
        let by_order = search_circulant_hadamard(4, true, 1 << 20).unwrap();
        assert_eq!(by_order[&4].len(), 1);
        assert_eq!(by_order[&4][0].entries(), &[1, 1, 1, -1]);
    }

    #[test]
    fn hadamard_budget_enforced() {
        assert!(search_circulant_hadamard(24, true, 1 << 20)
            .unwrap_err()
            .is_resource());
    }
}
