//! Implicit n-bit lists and column-shifted bit tables.
//!
//! Column `i` of the order-`n` table is the list of length `2^n` whose 1-based
//! entry `j` is bit `i` (least significant bit is `i = 1`) of `j - 1`. The
//! list is the pattern `0^(2^(i-1)) 1^(2^(i-1))` repeated `2^(n-i)` times, so
//! every query here is answered from `(i, n)` alone with a constant number of
//! big-integer operations. Nothing of length `2^n` is stored unless a caller
//! explicitly asks for it and the order is under the materialization cap.
//!
//! Row and start indices are 0-based throughout, except [`BitColumn::bit_at`]
//! which keeps the 1-based position used by the table definition.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest order for which a full `2^n`-row table may be materialized by default.
pub const DEFAULT_TABLE_CAP: u32 = 24;

/// Hard ceiling for any materializing routine, regardless of the cap passed in.
const MAX_TABLE_CAP: u32 = 32;

pub(crate) fn pow2(exp: u32) -> BigUint {
    BigUint::one() << exp
}

/// Column `i` of the order-`n` bit table, described implicitly by `(i, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitColumn {
    index: u32,
    order: u32,
}

impl BitColumn {
    pub fn new(index: u32, order: u32) -> Result<Self> {
        if index == 0 || index > order {
            return Err(Error::domain(format!(
                "column index {index} outside [1, {order}]"
            )));
        }
        Ok(BitColumn { index, order })
    }

    /// 1-based column index `i`.
    pub fn index(&self) -> u32 {
        self.index
    }

    /// Table order `n`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Length of the list, `2^n`.
    pub fn len(&self) -> BigUint {
        pow2(self.order)
    }

    /// Period of the bit pattern, `2^i`.
    pub fn period(&self) -> BigUint {
        pow2(self.index)
    }

    /// Entry at 1-based position `j`, i.e. bit `i` of `j - 1`.
    pub fn bit_at(&self, j: &BigUint) -> Result<u8> {
        if j.is_zero() || *j > self.len() {
            return Err(Error::domain(format!(
                "row position {j} outside [1, 2^{}]",
                self.order
            )));
        }
        let offset = j - 1u32;
        Ok(offset.bit(u64::from(self.index - 1)) as u8)
    }

    /// Number of ones among the first `t` entries of the periodic extension of
    /// the list. `t` may exceed the list length.
    pub fn ones_prefix(&self, t: &BigUint) -> BigUint {
        let half_exp = self.index - 1;
        let full_periods = t >> self.index;
        let residue = t & (self.period() - 1u32);
        let half = pow2(half_exp);
        let tail = if residue > half {
            residue - half
        } else {
            BigUint::zero()
        };
        (full_periods << half_exp) + tail
    }

    /// Sum of the cyclic window of `len` entries starting at 0-based `start`.
    pub fn contiguous_sum(&self, start: &BigUint, len: &BigUint) -> Result<BigUint> {
        let size = self.len();
        if *start >= size {
            return Err(Error::domain(format!(
                "window start {start} outside [0, 2^{})",
                self.order
            )));
        }
        if *len > size {
            return Err(Error::domain(format!(
                "window length {len} exceeds 2^{}",
                self.order
            )));
        }
        // The period divides 2^n, so the periodic extension already wraps.
        Ok(self.ones_prefix(&(start + len)) - self.ones_prefix(start))
    }

    /// The explicit list, built from the repeated `0^h 1^h` block. Intended for
    /// brute-force checks only.
    pub fn materialize(&self, cap: u32) -> Result<Vec<u8>> {
        check_cap(self.order, cap)?;
        let half = 1usize << (self.index - 1);
        let mut block = vec![0u8; half];
        block.extend(std::iter::repeat_n(1u8, half));
        let repeats = 1usize << (self.order - self.index);
        Ok(block.repeat(repeats))
    }
}

pub(crate) fn check_cap(order: u32, cap: u32) -> Result<()> {
    let cap = cap.min(MAX_TABLE_CAP);
    if order > cap {
        return Err(Error::capacity(
            format!("materializing 2^{order} rows"),
            format!("order {cap}"),
        ));
    }
    Ok(())
}

/// One cyclic offset per column: row `k` of the shifted table reads column `i`
/// at position `(k + s_i) mod 2^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftVector {
    shifts: Vec<BigUint>,
}

impl ShiftVector {
    /// `shifts[i - 1]` is the offset of column `i`.
    pub fn new(order: u32, shifts: Vec<BigUint>) -> Result<Self> {
        if shifts.len() != order as usize {
            return Err(Error::domain(format!(
                "expected {order} shifts, got {}",
                shifts.len()
            )));
        }
        let size = pow2(order);
        if let Some((i, s)) = shifts.iter().enumerate().find(|(_, s)| **s >= size) {
            return Err(Error::domain(format!(
                "shift {s} of column {} outside [0, 2^{order})",
                i + 1
            )));
        }
        Ok(ShiftVector { shifts })
    }

    pub fn from_u64(order: u32, shifts: &[u64]) -> Result<Self> {
        Self::new(order, shifts.iter().map(|&s| BigUint::from(s)).collect())
    }

    pub fn identity(order: u32) -> Self {
        ShiftVector {
            shifts: vec![BigUint::zero(); order as usize],
        }
    }

    pub fn order(&self) -> u32 {
        self.shifts.len() as u32
    }

    pub fn shifts(&self) -> &[BigUint] {
        &self.shifts
    }

    /// The shift that undoes this one column by column.
    pub fn inverse(&self) -> Self {
        let size = pow2(self.order());
        let shifts = self
            .shifts
            .iter()
            .map(|s| (&size - s) % &size)
            .collect();
        ShiftVector { shifts }
    }

    /// Row `k` (0-based) of the shifted table.
    pub fn row(&self, k: &BigUint) -> Result<RowVector> {
        let order = self.order();
        let size = pow2(order);
        if *k >= size {
            return Err(Error::domain(format!(
                "row index {k} outside [0, 2^{order})"
            )));
        }
        let bits = self
            .shifts
            .iter()
            .enumerate()
            .map(|(c, s)| {
                let col = BitColumn {
                    index: c as u32 + 1,
                    order,
                };
                let position = (k + s) % &size + 1u32;
                col.bit_at(&position)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RowVector { bits })
    }

    /// Whether all `2^n` rows of the shifted table are pairwise distinct.
    pub fn all_rows_distinct(&self, cap: u32) -> Result<bool> {
        let order = self.order();
        check_cap(order, cap)?;
        let rows = 1u64 << order;
        let mask = rows - 1;
        let shifts: Vec<u64> = self
            .shifts
            .iter()
            .map(|s| s.to_u64().expect("shift below 2^order fits in u64"))
            .collect();
        let mut seen = vec![0u64; (rows as usize).div_ceil(64)];
        for k in 0..rows {
            // Bit i-1 of (k + s_i) mod 2^n is bit i-1 of k + s_i.
            let code = shifts
                .iter()
                .enumerate()
                .fold(0u64, |acc, (c, &s)| acc | ((k + s) & mask & (1 << c)));
            let (word, bit) = ((code >> 6) as usize, code & 63);
            if seen[word] >> bit & 1 == 1 {
                return Ok(false);
            }
            seen[word] |= 1 << bit;
        }
        Ok(true)
    }
}

/// A row of the table: one bit per column, `bits[i - 1]` for column `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowVector {
    bits: Vec<u8>,
}

impl RowVector {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::domain(format!("row entry {b} is not a bit")));
        }
        Ok(RowVector { bits })
    }

    /// Bit of 1-based column `i`.
    pub fn get(&self, i: u32) -> Option<u8> {
        i.checked_sub(1).and_then(|c| self.bits.get(c as usize).copied())
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

impl fmt::Display for RowVector {
    /// Most significant column first, as the table is printed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.bits.iter().rev().try_for_each(|b| write!(f, "{b}"))
    }
}

/// Cyclic rotation by `k`: output position `j` holds input position `(j + k) mod m`.
pub fn rotate<T: Clone>(list: &[T], k: usize) -> Result<Vec<T>> {
    if list.is_empty() {
        return Err(Error::domain("cannot rotate an empty list"));
    }
    let k = k % list.len();
    Ok(list[k..].iter().chain(&list[..k]).cloned().collect())
}
