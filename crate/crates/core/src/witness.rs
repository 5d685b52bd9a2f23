//! Certificates for accepted sequences and the hypergraphs they describe.
//!
//! A [`Witness`] fixes the window to rows `0..N` of the table whose column
//! `i` is shifted by `starts[i - 1]`. Edge `k` contains vertex `perm[i - 1]`
//! exactly when column `i` reads a one at position `(k + s_i) mod 2^n`.
//! Shifted tables never repeat a row, so the `N` edges are distinct and the
//! certificate stays `O(n)` big integers no matter how large `N` is.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::bittable::{pow2, BitColumn, ShiftVector};
use crate::error::{Error, Result};
use crate::ranges::range_of;
use crate::recognizer::{is_permutation, Assignment, DegreeSequence};

/// Default cap on the number of edges [`materialize_edges`] will produce.
pub const DEFAULT_EDGE_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    order: u32,
    window: BigUint,
    perm: Vec<usize>,
    starts: Vec<BigUint>,
}

impl Witness {
    /// Assembles a certificate without checking it; see [`verify_witness`].
    pub fn new(order: u32, window: BigUint, perm: Vec<usize>, starts: Vec<BigUint>) -> Self {
        Witness {
            order,
            window,
            perm,
            starts,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn window(&self) -> &BigUint {
        &self.window
    }

    /// `perm[i - 1]` is the 0-based vertex carried by column `i`.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// `starts[i - 1]` is the 0-based window start in column `i`.
    pub fn starts(&self) -> &[BigUint] {
        &self.starts
    }

    /// The column shifts under which the edges are rows `0..N` of the table.
    pub fn shift_vector(&self) -> Result<ShiftVector> {
        ShiftVector::new(self.order, self.starts.clone())
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.order as usize;
        if n == 0 || self.perm.len() != n || self.starts.len() != n {
            return Err(Error::domain("witness dimensions do not match its order"));
        }
        if !is_permutation(&self.perm, n) {
            return Err(Error::domain("witness permutation is not a bijection"));
        }
        let size = pow2(self.order);
        if self.window.is_zero() || self.window > size {
            return Err(Error::domain(format!(
                "window length {} outside [1, 2^{}]",
                self.window, self.order
            )));
        }
        if self.starts.iter().any(|s| *s >= size) {
            return Err(Error::domain("window start outside the table"));
        }
        Ok(())
    }

    /// Streams the `N` edges in row order. `N` must fit in a `u64`.
    pub fn edges(&self) -> Result<Edges> {
        self.check_shape()?;
        let remaining = self
            .window
            .to_u64()
            .ok_or_else(|| Error::capacity("streaming edges", u64::MAX))?;
        let columns = self
            .starts
            .iter()
            .enumerate()
            .map(|(c, s)| ColumnCursor::new(c as u32 + 1, s))
            .collect();
        Ok(Edges {
            columns,
            perm: self.perm.clone(),
            remaining,
        })
    }
}

/// Run-length cursor over one column, starting at an arbitrary offset.
#[derive(Debug, Clone)]
struct ColumnCursor {
    bit: bool,
    run_left: u64,
    half: u64,
}

impl ColumnCursor {
    fn new(index: u32, start: &BigUint) -> Self {
        let half = pow2(index - 1);
        let offset = start & (pow2(index) - 1u32);
        let (bit, run_left) = if offset < half {
            (false, &half - &offset)
        } else {
            (true, (&half << 1u32) - &offset)
        };
        ColumnCursor {
            bit,
            run_left: run_left.to_u64().unwrap_or(u64::MAX),
            half: half.to_u64().unwrap_or(u64::MAX),
        }
    }

    fn step(&mut self) -> bool {
        let bit = self.bit;
        self.run_left -= 1;
        if self.run_left == 0 {
            self.bit = !self.bit;
            self.run_left = self.half;
        }
        bit
    }
}

/// Iterator returned by [`Witness::edges`].
#[derive(Debug, Clone)]
pub struct Edges {
    columns: Vec<ColumnCursor>,
    perm: Vec<usize>,
    remaining: u64,
}

impl Iterator for Edges {
    type Item = Hyperedge;

    fn next(&mut self) -> Option<Hyperedge> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let mut incidence = vec![false; self.perm.len()];
        for (cursor, &vertex) in self.columns.iter_mut().zip(&self.perm) {
            incidence[vertex] = cursor.step();
        }
        Some(Hyperedge { incidence })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, usize::try_from(self.remaining).ok())
    }
}

/// An edge as an incidence vector over vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperedge {
    incidence: Vec<bool>,
}

impl Hyperedge {
    pub fn new(incidence: Vec<bool>) -> Self {
        Hyperedge { incidence }
    }

    pub fn incidence(&self) -> &[bool] {
        &self.incidence
    }

    /// Whether 1-based vertex `v` belongs to the edge.
    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && self.incidence.get(v - 1).copied().unwrap_or(false)
    }

    /// Sorted 1-based vertex indices.
    pub fn vertices(&self) -> Vec<usize> {
        self.incidence
            .iter()
            .enumerate()
            .filter_map(|(v, &b)| b.then_some(v + 1))
            .collect()
    }

    /// The empty edge is legal (the all-zero row) but some consumers exclude it.
    pub fn is_empty(&self) -> bool {
        !self.incidence.iter().any(|&b| b)
    }
}

/// Smallest 0-based start `s` in `[0, 2^(i-1)]` whose window of `len` entries
/// in column `index` sums to `target`.
///
/// Past the full periods the residual window sum cannot decrease while the
/// start moves across the leading run of zeros, since each step drops a zero.
/// That makes the search a binary search over at most `2^(i-1) + 1` starts.
pub fn solve_start(index: u32, len: &BigUint, target: &BigUint, order: u32) -> Result<BigUint> {
    let range = range_of(index, len, order)?;
    if !range.contains(target) {
        return Err(Error::domain(format!(
            "value {target} outside [{}, {}] for column {index}, window {len}",
            range.lo, range.hi
        )));
    }
    let column = BitColumn::new(index, order)?;
    if (len & (column.period() - 1u32)).is_zero() {
        return Ok(BigUint::zero());
    }
    let mut lo = BigUint::zero();
    let mut hi = pow2(index - 1);
    while lo < hi {
        let mid: BigUint = (&lo + &hi) >> 1u32;
        if column.contiguous_sum(&mid, len)? >= *target {
            hi = mid;
        } else {
            lo = mid + 1u32;
        }
    }
    Ok(lo)
}

/// Turns an assignment into explicit window starts.
pub fn build_witness(w: &DegreeSequence, a: &Assignment) -> Result<Witness> {
    let n = w.order();
    if a.perm().len() != n as usize {
        return Err(Error::domain("assignment order does not match the sequence"));
    }
    let starts = (1..=n)
        .map(|i| solve_start(i, a.window(), &w.entries()[a.coordinate_of(i)], n))
        .collect::<Result<Vec<_>>>()?;
    Ok(Witness {
        order: n,
        window: a.window().clone(),
        perm: a.perm().to_vec(),
        starts,
    })
}

/// All `N` edges, refusing when `N > cap`. The witness itself remains a
/// complete description above the cap.
pub fn materialize_edges(wit: &Witness, cap: u64) -> Result<Vec<Hyperedge>> {
    wit.check_shape()?;
    if wit.window > BigUint::from(cap) {
        return Err(Error::capacity(
            format!("materializing {} edges", wit.window),
            cap,
        ));
    }
    Ok(wit.edges()?.collect())
}

/// [`verify_witness_with_cap`] with [`DEFAULT_EDGE_CAP`].
pub fn verify_witness(w: &DegreeSequence, wit: &Witness) -> bool {
    verify_witness_with_cap(w, wit, DEFAULT_EDGE_CAP)
}

/// Checks every column sum in closed form and, when `N <= cap`, also streams
/// the edges to confirm they are pairwise distinct with vertex degrees `w`.
pub fn verify_witness_with_cap(w: &DegreeSequence, wit: &Witness, cap: u64) -> bool {
    if wit.order != w.order() || wit.check_shape().is_err() {
        return false;
    }
    let n = wit.order;
    let sums_match = (1..=n).all(|i| {
        let column = BitColumn::new(i, n).expect("1 <= i <= n");
        let target = &w.entries()[wit.perm[i as usize - 1]];
        column
            .contiguous_sum(&wit.starts[i as usize - 1], &wit.window)
            .is_ok_and(|sum| sum == *target)
    });
    if !sums_match {
        return false;
    }
    if wit.window > BigUint::from(cap) {
        return true;
    }
    let Ok(edges) = wit.edges() else {
        return false;
    };
    let mut degrees = vec![0u64; n as usize];
    let mut seen = HashSet::new();
    for edge in edges {
        for (d, &b) in degrees.iter_mut().zip(edge.incidence()) {
            *d += u64::from(b);
        }
        if !seen.insert(edge) {
            return false;
        }
    }
    degrees
        .iter()
        .zip(w.entries())
        .all(|(&d, e)| BigUint::from(d) == *e)
}
