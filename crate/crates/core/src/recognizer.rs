//! Polynomial-time recognition of cyclic hyper degrees.
//!
//! A sequence `w` of length `n` is accepted when some window length `N` and
//! some bijection between columns and coordinates place every `w_j` inside the
//! sum range of its column. Column 1 alternates `0, 1`, so its window sum is
//! `floor(N/2)` or `ceil(N/2)`; whichever coordinate it takes forces
//! `N ∈ {2w_j - 1, 2w_j, 2w_j + 1}`, leaving at most `3n` lengths to try.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bittable::pow2;
use crate::error::{Error, Result};
use crate::matching::interval_assignment;
use crate::ranges::{range_unchecked, SumRange};

/// A degree sequence `w_1, ..., w_n` with `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    entries: Vec<BigUint>,
}

impl DegreeSequence {
    pub fn new(entries: Vec<BigUint>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::validation("degree sequence is empty"));
        }
        if u32::try_from(entries.len()).is_err() {
            return Err(Error::validation("degree sequence is too long"));
        }
        Ok(DegreeSequence { entries })
    }

    pub fn from_u64(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigUint::from(e)).collect())
    }

    pub fn order(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// Largest entry any simple hypergraph on `n` vertices can produce, `2^(n-1)`.
    pub fn max_entry(&self) -> BigUint {
        pow2(self.order() - 1)
    }

    /// First coordinate (0-based) exceeding `2^(n-1)`, if any.
    pub fn first_oversized(&self) -> Option<usize> {
        let bound = self.max_entry();
        self.entries.iter().position(|e| *e > bound)
    }

    pub fn validate(&self) -> Result<()> {
        match self.first_oversized() {
            Some(j) => Err(Error::validation(format!(
                "entry {} = {} exceeds 2^{} = {}",
                j + 1,
                self.entries[j],
                self.order() - 1,
                self.max_entry()
            ))),
            None => Ok(()),
        }
    }

    /// The sequence with coordinates reordered: entry `j` of the result is
    /// entry `order[j]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        if !is_permutation(order, self.entries.len()) {
            return Err(Error::domain("not a permutation of the coordinates"));
        }
        Ok(DegreeSequence {
            entries: order.iter().map(|&j| self.entries[j].clone()).collect(),
        })
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Comma-separated decimal entries of arbitrary size, e.g. `4,1,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(str::trim)
            .map(|token| {
                if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::validation(format!(
                        "malformed degree {token:?}: expected a non-negative decimal integer"
                    )));
                }
                Ok(token.parse::<BigUint>().expect("digits parse"))
            })
            .collect::<Result<Vec<_>>>()?;
        DegreeSequence::new(entries)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    perm.iter()
        .all(|&j| j < n && !std::mem::replace(&mut seen[j], true))
}

/// A window length together with the column-to-coordinate bijection that
/// places every coordinate in its column's range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    window: BigUint,
    perm: Vec<usize>,
}

impl Assignment {
    /// `perm[i - 1]` is the 0-based coordinate assigned to column `i`.
    pub fn new(window: BigUint, perm: Vec<usize>) -> Result<Self> {
        if !is_permutation(&perm, perm.len()) {
            return Err(Error::domain("assignment is not a bijection"));
        }
        Ok(Assignment { window, perm })
    }

    /// Window length `N`.
    pub fn window(&self) -> &BigUint {
        &self.window
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// 0-based coordinate assigned to 1-based column `i`.
    pub fn coordinate_of(&self, column: u32) -> usize {
        self.perm[column as usize - 1]
    }

    /// Whether every assigned coordinate lies in its column's range.
    pub fn is_valid_for(&self, w: &DegreeSequence) -> bool {
        let n = w.order();
        if self.perm.len() != n as usize
            || self.window.is_zero()
            || self.window > pow2(n)
        {
            return false;
        }
        column_ranges(n, &self.window)
            .iter()
            .zip(&self.perm)
            .all(|(range, &j)| range.contains(&w.entries[j]))
    }
}

/// `range_of(i, window, n)` for every column `i` in order.
pub fn column_ranges(order: u32, window: &BigUint) -> Vec<SumRange> {
    (1..=order).map(|i| range_unchecked(i, window)).collect()
}

/// `{2w_j + d : d ∈ {-1, 0, 1}} ∩ [1, 2^n]`, ascending and deduplicated.
pub fn candidate_lengths(w: &DegreeSequence) -> Result<Vec<BigUint>> {
    w.validate()?;
    let limit = pow2(w.order());
    let mut lengths = BTreeSet::new();
    for e in w.entries() {
        let double: BigUint = e << 1u32;
        if !double.is_zero() {
            lengths.insert(&double - 1u32);
        }
        lengths.insert(&double + 1u32);
        lengths.insert(double);
    }
    Ok(lengths
        .into_iter()
        .filter(|len| !len.is_zero() && *len <= limit)
        .collect())
}

/// A perfect matching between coordinates and columns for window length `window`,
/// if one exists.
pub fn feasible(w: &DegreeSequence, window: &BigUint) -> Result<Option<Assignment>> {
    let n = w.order();
    if window.is_zero() || *window > pow2(n) {
        return Err(Error::domain(format!(
            "window length {window} outside [1, 2^{n}]"
        )));
    }
    let ranges = column_ranges(n, window);
    Ok(interval_assignment(w.entries(), &ranges).map(|perm| Assignment {
        window: window.clone(),
        perm,
    }))
}

/// Decides whether `w` is a cyclic hyper degree. Returns the assignment for
/// the smallest succeeding window length, or `None`. Sequences with an entry
/// above `2^(n-1)` are rejected without search.
pub fn recognize(w: &DegreeSequence) -> Option<Assignment> {
    if w.first_oversized().is_some() {
        return None;
    }
    candidate_lengths(w)
        .expect("validated above")
        .iter()
        .find_map(|len| feasible(w, len).expect("candidate lengths are in range"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u64]) -> DegreeSequence {
        DegreeSequence::from_u64(v).unwrap()
    }

    fn lens(v: &[u64]) -> Vec<u64> {
        candidate_lengths(&seq(v))
            .unwrap()
            .into_iter()
            .map(|x| x.try_into().unwrap())
            .collect()
    }

    #[test]
    fn candidate_examples() {
        assert_eq!(lens(&[2, 2, 1]), vec![1, 2, 3, 4, 5]);
        assert_eq!(lens(&[0, 0, 0]), vec![1]);
        assert_eq!(lens(&[4, 1, 1, 1]), vec![1, 2, 3, 7, 8, 9]);
    }

    #[test]
    fn candidates_reject_oversized() {
        assert!(matches!(
            candidate_lengths(&seq(&[5, 0, 0])),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn feasible_examples() {
        let a = feasible(&seq(&[2, 2, 2]), &4u32.into()).unwrap().unwrap();
        assert!(a.is_valid_for(&seq(&[2, 2, 2])));
        assert!(feasible(&seq(&[4, 1, 1, 1]), &7u32.into()).unwrap().is_none());
        for n in 1..=10 {
            let zeros = DegreeSequence::from_u64(&vec![0; n]).unwrap();
            assert!(feasible(&zeros, &1u32.into()).unwrap().is_some());
        }
        assert!(feasible(&seq(&[0, 0]), &0u32.into()).is_err());
        assert!(feasible(&seq(&[0, 0]), &5u32.into()).is_err());
    }

    #[test]
    fn recognize_examples() {
        let a = recognize(&seq(&[1, 1, 1])).unwrap();
        assert_eq!(a.window(), &BigUint::from(1u32));
        assert!(recognize(&seq(&[4, 1, 1, 1])).is_none());
        assert!(recognize(&seq(&[5, 0, 0])).is_none());
        assert!(recognize(&seq(&[0, 0, 0])).is_some());
    }

    #[test]
    fn parse_degrees() {
        let w: DegreeSequence = " 4, 1,1 ,1".parse().unwrap();
        assert_eq!(w, seq(&[4, 1, 1, 1]));
        assert_eq!(w.to_string(), "4,1,1,1");
        let huge: DegreeSequence = "340282366920938463463374607431768211456,0".parse().unwrap();
        assert_eq!(huge.entries()[0], pow2(128));
        for bad in ["", "1,,2", "1,-2", "1,x", "+3"] {
            let err = bad.parse::<DegreeSequence>().unwrap_err();
            assert!(matches!(err, Error::Validation(_)), "{bad}");
        }
        let msg = "1,abc".parse::<DegreeSequence>().unwrap_err().to_string();
        assert!(msg.contains("abc"), "{msg}");
    }

    #[test]
    fn assignment_rejects_non_bijection() {
        assert!(Assignment::new(1u32.into(), vec![0, 0]).is_err());
        assert!(Assignment::new(1u32.into(), vec![1, 0]).is_ok());
    }

    #[test]
    fn permuted_reorders() {
        let w = seq(&[3, 1, 2]);
        assert_eq!(w.permuted(&[2, 0, 1]).unwrap(), seq(&[2, 3, 1]));
        assert!(w.permuted(&[0, 0, 1]).is_err());
    }
}
