//! Brute-force ground truth for small orders.
//!
//! Everything here works from explicitly built bit columns and sliding-window
//! scans. None of it calls the closed-form range formulas, so agreement with
//! the recognizer is independent evidence rather than a restatement.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::matching::{augmenting_path, interval_assignment};
use crate::ranges::SumRange;
use crate::recognizer::DegreeSequence;

/// Largest order accepted by [`chd_bruteforce`].
pub const BRUTEFORCE_CAP: u32 = 12;
/// Up to this order [`chd_bruteforce`] searches permutations exhaustively.
pub const EXHAUSTIVE_PERMUTATION_CAP: u32 = 8;
/// Largest order accepted by [`hn_member`] and [`HnTable`].
pub const HN_CAP: u32 = 5;
/// Largest order accepted by [`enumerate_chd`].
pub const ENUMERATE_CAP: u32 = 4;

fn ensure(order: u32, cap: u32, what: &str) -> Result<()> {
    if order > cap {
        return Err(Error::capacity(
            format!("{what} at order {order}"),
            format!("order {cap}"),
        ));
    }
    Ok(())
}

/// Column `i` written out from the definition: entry `k` (0-based) is bit
/// `i - 1` of `k`.
fn column_by_definition(index: u32, order: u32) -> Vec<u8> {
    (0u64..1 << order)
        .map(|k| ((k >> (index - 1)) & 1) as u8)
        .collect()
}

/// Sorted distinct sums over all cyclic windows of length `len`.
fn scan_sums(column: &[u8], len: usize) -> Vec<u64> {
    let m = column.len();
    let mut sum: u64 = (0..len).map(|k| u64::from(column[k % m])).sum();
    let mut seen = BTreeSet::new();
    for start in 0..m {
        seen.insert(sum);
        sum = sum + u64::from(column[(start + len) % m]) - u64::from(column[start]);
    }
    seen.into_iter().collect()
}

fn small_entries(w: &DegreeSequence) -> Option<Vec<u64>> {
    w.entries().iter().map(ToPrimitive::to_u64).collect()
}

/// Whether some bijection puts `values[assign[c]]` in `sets[c]` for every column `c`.
fn exhaustive_sdr(values: &[u64], sets: &[Vec<u64>]) -> bool {
    fn go(c: usize, values: &[u64], sets: &[Vec<u64>], used: &mut [bool]) -> bool {
        if c == sets.len() {
            return true;
        }
        for j in 0..values.len() {
            if !used[j] && sets[c].binary_search(&values[j]).is_ok() {
                used[j] = true;
                if go(c + 1, values, sets, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    go(0, values, sets, &mut vec![false; values.len()])
}

/// Matching by two independent routines; they must agree.
fn cross_checked_sdr(values: &[u64], sets: &[Vec<u64>]) -> Result<bool> {
    let adjacency: Vec<Vec<usize>> = sets
        .iter()
        .map(|set| {
            (0..values.len())
                .filter(|&j| set.binary_search(&values[j]).is_ok())
                .collect()
        })
        .collect();
    let general = augmenting_path(&adjacency, values.len()).is_some();

    let contiguous = sets
        .iter()
        .all(|s| s.windows(2).all(|p| p[1] == p[0] + 1));
    if contiguous {
        let big_values: Vec<BigUint> = values.iter().map(|&v| v.into()).collect();
        let intervals: Vec<SumRange> = sets
            .iter()
            .map(|s| SumRange {
                lo: s[0].into(),
                hi: s[s.len() - 1].into(),
            })
            .collect();
        let sweep = interval_assignment(&big_values, &intervals).is_some();
        if sweep != general {
            return Err(Error::Inconsistent(format!(
                "matchers disagree on values {values:?}"
            )));
        }
    }
    Ok(general)
}

/// Attained window sums for every column and window length of one order.
#[derive(Debug, Clone)]
pub struct ChdOracle {
    order: u32,
    /// `sets[len - 1][i - 1]`, sorted.
    sets: Vec<Vec<Vec<u64>>>,
}

impl ChdOracle {
    /// Precomputes all attained sets for orders up to [`EXHAUSTIVE_PERMUTATION_CAP`].
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::domain("order must be at least 1"));
        }
        ensure(order, EXHAUSTIVE_PERMUTATION_CAP, "tabulating attained sets")?;
        let columns: Vec<Vec<u8>> = (1..=order)
            .map(|i| column_by_definition(i, order))
            .collect();
        let sets = (1..=1usize << order)
            .map(|len| columns.iter().map(|c| scan_sums(c, len)).collect())
            .collect();
        Ok(ChdOracle { order, sets })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Attained sums for 1-based column `index` and window length `len`.
    pub fn attained(&self, index: u32, len: u64) -> &[u64] {
        &self.sets[len as usize - 1][index as usize - 1]
    }

    /// Exhaustive decision for a sequence of this order.
    pub fn accepts(&self, values: &[u64]) -> bool {
        assert_eq!(values.len(), self.order as usize);
        self.sets.iter().any(|sets| exhaustive_sdr(values, sets))
    }

    /// Every cyclic hyper degree of this order, in lexicographic order.
    pub fn enumerate(&self) -> BTreeSet<Vec<u64>> {
        let n = self.order as usize;
        let perms = permutations(n);
        let mut out = BTreeSet::new();
        for sets in &self.sets {
            for perm in &perms {
                let mut tuple = vec![0u64; n];
                product_into(sets, perm, 0, &mut tuple, &mut out);
            }
        }
        out
    }
}

fn product_into(
    sets: &[Vec<u64>],
    perm: &[usize],
    column: usize,
    tuple: &mut Vec<u64>,
    out: &mut BTreeSet<Vec<u64>>,
) {
    if column == sets.len() {
        out.insert(tuple.clone());
        return;
    }
    for &v in &sets[column] {
        tuple[perm[column]] = v;
        product_into(sets, perm, column + 1, tuple, out);
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                current.push(j);
                go(n, current, used, out);
                current.pop();
                used[j] = false;
            }
        }
    }
    go(n, &mut current, &mut used, &mut out);
    out
}

/// Exhaustive cyclic-hyper-degree decision for orders up to [`BRUTEFORCE_CAP`].
pub fn chd_bruteforce(w: &DegreeSequence) -> Result<bool> {
    let n = w.order();
    ensure(n, BRUTEFORCE_CAP, "brute-force recognition")?;
    let Some(values) = small_entries(w) else {
        return Ok(false);
    };
    if n <= EXHAUSTIVE_PERMUTATION_CAP {
        return Ok(ChdOracle::new(n)?.accepts(&values));
    }

    let columns: Vec<Vec<u8>> = (1..=n).map(|i| column_by_definition(i, n)).collect();
    'lengths: for len in 1..=1usize << n {
        let mut sets = Vec::with_capacity(n as usize);
        for column in &columns {
            let set = scan_sums(column, len);
            if !values.iter().any(|v| set.binary_search(v).is_ok()) {
                continue 'lengths;
            }
            sets.push(set);
        }
        if cross_checked_sdr(&values, &sets)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every sum of a set of distinct binary `n`-vectors, as a reachability table.
#[derive(Debug, Clone)]
pub struct HnTable {
    order: u32,
    radix: usize,
    reachable: Vec<bool>,
}

impl HnTable {
    /// 0/1 knapsack over the `2^n` binary vectors in ascending order.
    /// No coordinate can exceed `2^(n-1)`, so states are mixed-radix
    /// integers with radix `2^(n-1) + 1`.
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::domain("order must be at least 1"));
        }
        ensure(order, HN_CAP, "sum-set table")?;
        let radix = (1usize << (order - 1)) + 1;
        let states = radix.pow(order);
        let mut reachable = vec![false; states];
        reachable[0] = true;
        for item in 0u32..1 << order {
            let delta: usize = (0..order)
                .filter(|b| item >> b & 1 == 1)
                .map(|b| radix.pow(b))
                .sum();
            if delta == 0 {
                continue;
            }
            for s in (0..states - delta).rev() {
                if reachable[s] {
                    reachable[s + delta] = true;
                }
            }
        }
        Ok(HnTable {
            order,
            radix,
            reachable,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    fn encode(&self, values: &[u64]) -> Option<usize> {
        if values.len() != self.order as usize {
            return None;
        }
        values.iter().rev().try_fold(0usize, |acc, &v| {
            let v = usize::try_from(v).ok().filter(|&v| v < self.radix)?;
            Some(acc * self.radix + v)
        })
    }

    pub fn contains(&self, values: &[u64]) -> bool {
        self.encode(values).is_some_and(|s| self.reachable[s])
    }

    /// Number of distinct sums, `|H_n|`.
    pub fn len(&self) -> usize {
        self.reachable.iter().filter(|&&r| r).count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All reachable sums, coordinate 1 first.
    pub fn members(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let n = self.order as usize;
        self.reachable
            .iter()
            .enumerate()
            .filter(|(_, &r)| r)
            .map(move |(mut s, _)| {
                (0..n)
                    .map(|_| {
                        let v = (s % self.radix) as u64;
                        s /= self.radix;
                        v
                    })
                    .collect()
            })
    }
}

/// Exact membership of `w` in the set of simple-hypergraph degree sequences,
/// for orders up to [`HN_CAP`].
pub fn hn_member(w: &DegreeSequence) -> Result<bool> {
    ensure(w.order(), HN_CAP, "degree-sum membership")?;
    let Some(values) = small_entries(w) else {
        return Ok(false);
    };
    Ok(HnTable::new(w.order())?.contains(&values))
}

/// Every cyclic hyper degree of order `n <= 4`, lexicographically sorted.
pub fn enumerate_chd(order: u32) -> Result<Vec<DegreeSequence>> {
    ensure(order, ENUMERATE_CAP, "enumeration")?;
    ChdOracle::new(order)?
        .enumerate()
        .into_iter()
        .map(|t| DegreeSequence::from_u64(&t))
        .collect()
}
