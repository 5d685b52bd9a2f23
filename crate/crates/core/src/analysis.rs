//! Counting cyclic hyper degrees.
//!
//! For a fixed window length `M` every coordinate of a sum of `M` rows ranges
//! over an interval of `B_i` values independently, so at least `∏ B_i`
//! sequences are cyclic hyper degrees. Choosing `M = 1 + 4 + 16 + ...` (the
//! alternating-bit integer below `2^n`) keeps every residue `M mod 2^i` close
//! to `2^i / 3`, which gives `B_i >= 2^(i-2)` and a product of at least
//! `2^((n-1)(n-2)/2)`.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::bittable::pow2;
use crate::error::{Error, Result};
use crate::oracle::{ChdOracle, ENUMERATE_CAP};
use crate::ranges::range_size;

/// `2^((n-1)(n-2)/2)`.
pub fn lower_bound(order: u32) -> BigUint {
    let n = u64::from(order.max(2));
    let exponent = (n - 1) * (n - 2) / 2;
    BigUint::one() << exponent
}

/// Window length `M = Σ_{j=0}^{floor((n-1)/2)} 4^j`, always in `[1, 2^n]`.
pub fn special_window(order: u32) -> BigUint {
    (0..=(order.saturating_sub(1)) / 2).map(|j| pow2(2 * j)).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundReport {
    pub n: u32,
    #[serde(rename = "M", serialize_with = "as_decimal")]
    pub window: BigUint,
    /// `B[i - 1] = range_size(i, M)`.
    #[serde(rename = "B", serialize_with = "as_decimals")]
    pub sizes: Vec<BigUint>,
    #[serde(serialize_with = "as_decimal")]
    pub product: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub bound: BigUint,
    pub satisfied: bool,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn as_decimals<S: serde::Serializer>(
    v: &[BigUint],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl LowerBoundReport {
    /// Whether `B_i >= 2^(i-2)` for every `i >= 2`.
    pub fn per_column_bound_holds(&self) -> bool {
        self.sizes
            .iter()
            .enumerate()
            .skip(1)
            .all(|(c, b)| *b >= pow2(c as u32 - 1))
    }
}

pub fn lemma_lower_report(order: u32) -> Result<LowerBoundReport> {
    if order < 2 {
        return Err(Error::domain("lower-bound report needs order >= 2"));
    }
    let window = special_window(order);
    let sizes = (1..=order)
        .map(|i| range_size(i, &window))
        .collect::<Result<Vec<_>>>()?;
    let product: BigUint = sizes.iter().product();
    let bound = lower_bound(order);
    Ok(LowerBoundReport {
        n: order,
        satisfied: product >= bound,
        window,
        sizes,
        product,
        bound,
    })
}

/// Exact number of cyclic hyper degrees of order `n <= 4`, by enumeration.
pub fn exact_count(order: u32) -> Result<BigUint> {
    if order > ENUMERATE_CAP {
        return Err(Error::capacity(
            format!("exact count at order {order}"),
            format!("order {ENUMERATE_CAP}"),
        ));
    }
    Ok(BigUint::from(ChdOracle::new(order)?.enumerate().len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(1), big(1));
        assert_eq!(lower_bound(2), big(1));
        assert_eq!(lower_bound(4), big(8));
        assert_eq!(lower_bound(8), big(2_097_152));
    }

    #[test]
    fn report_examples() {
        let r = lemma_lower_report(4).unwrap();
        assert_eq!(r.window, big(5));
        assert_eq!(r.sizes, vec![big(2), big(2), big(4), big(6)]);
        assert_eq!(r.product, big(96));
        assert!(r.satisfied);

        let r = lemma_lower_report(5).unwrap();
        assert_eq!(r.window, big(21));
        assert!(r.product >= big(64));

        let r = lemma_lower_report(2).unwrap();
        assert_eq!(r.window, big(1));
        assert!(r.satisfied);
        assert!(lemma_lower_report(1).is_err());
    }

    #[test]
    fn special_window_is_a_legal_length() {
        for n in 1..=64 {
            let m = special_window(n);
            assert!(m >= big(1) && m <= pow2(n), "n = {n}");
        }
    }

    #[test]
    fn exact_count_examples() {
        assert_eq!(exact_count(1).unwrap(), big(2));
        assert_eq!(exact_count(2).unwrap(), big(7));
        assert!(matches!(exact_count(5), Err(Error::Capacity { .. })));
    }
}
