//! Attainable contiguous sums of a bit column.
//!
//! For `p = 2^i`, a window of `N` entries of column `i` always covers
//! `floor(N / p)` full periods (each worth `p / 2` ones) plus a residual window
//! of `R = N mod p` entries. The residual sum ranges over
//! `[max(R - p/2, 0), min(R, p/2)]` and every value in between is attained,
//! since moving the window by one changes its sum by at most one.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bittable::{check_cap, pow2, BitColumn};
use crate::error::{Error, Result};

/// Cap on the order accepted by [`attained_set`].
pub const ATTAINED_SET_CAP: u32 = 20;

/// Closed integer interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SumRange {
    pub lo: BigUint,
    pub hi: BigUint,
}

impl SumRange {
    pub fn contains(&self, v: &BigUint) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    /// Number of integers in the interval.
    pub fn size(&self) -> BigUint {
        &self.hi - &self.lo + 1u32
    }
}

/// Splits `len` into its full-period contribution and residue for column `i`.
fn split_window(index: u32, len: &BigUint) -> (BigUint, BigUint) {
    let base = (len >> index) << (index - 1);
    let residue = len & (pow2(index) - 1u32);
    (base, residue)
}

/// Range of the sum of `len` cyclically contiguous entries of column `index`.
pub fn range_of(index: u32, len: &BigUint, order: u32) -> Result<SumRange> {
    BitColumn::new(index, order)?;
    if len.is_zero() || *len > pow2(order) {
        return Err(Error::domain(format!(
            "window length {len} outside [1, 2^{order}]"
        )));
    }
    Ok(range_unchecked(index, len))
}

/// [`range_of`] without the bounds checks; callers guarantee `1 <= index` and
/// `1 <= len <= 2^order` for some `order >= index`.
pub(crate) fn range_unchecked(index: u32, len: &BigUint) -> SumRange {
    let half = pow2(index - 1);
    let (base, residue) = split_window(index, len);
    let lo = if residue > half {
        &base + (&residue - &half)
    } else {
        base.clone()
    };
    let hi = base + residue.min(half);
    SumRange { lo, hi }
}

/// Number of distinct sums of `len` contiguous entries of column `index`:
/// `1 + min(R, p - R)` with `p = 2^index`, `R = len mod p`.
pub fn range_size(index: u32, len: &BigUint) -> Result<BigUint> {
    if index == 0 {
        return Err(Error::domain("column index must be at least 1"));
    }
    if len.is_zero() {
        return Err(Error::domain("window length must be at least 1"));
    }
    let period = pow2(index);
    let residue = len & (&period - 1u32);
    let complement = &period - &residue;
    Ok(residue.min(complement) + BigUint::one())
}

/// Every sum of `len` cyclically contiguous entries of column `index`,
/// found by sliding a window over the explicit list. Test and oracle use only.
pub fn attained_set(index: u32, len: u64, order: u32) -> Result<BTreeSet<u64>> {
    check_cap(order, ATTAINED_SET_CAP)?;
    let list = BitColumn::new(index, order)?.materialize(ATTAINED_SET_CAP)?;
    let size = list.len() as u64;
    if len == 0 || len > size {
        return Err(Error::domain(format!(
            "window length {len} outside [1, 2^{order}]"
        )));
    }
    Ok(window_sums(&list, len as usize).collect())
}

/// Sums of all `list.len()` cyclic windows of length `len >= 1`, in start order.
pub(crate) fn window_sums(list: &[u8], len: usize) -> impl Iterator<Item = u64> + '_ {
    let m = list.len();
    let mut sum: u64 = (0..len).map(|j| u64::from(list[j % m])).sum();
    (0..m).map(move |start| {
        let current = sum;
        sum = sum + u64::from(list[(start + len) % m]) - u64::from(list[start]);
        current
    })
}
