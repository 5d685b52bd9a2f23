//! Self-check suites: the recognizer and friends against the brute-force
//! oracles, at whatever order the caller asks for.
//!
//! Sampled suites draw from a ChaCha generator seeded by the caller, so a
//! given `(order, samples, seed)` always checks the same inputs.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{exact_count, lemma_lower_report, lower_bound};
use crate::bittable::{pow2, BitColumn, ShiftVector, DEFAULT_TABLE_CAP};
use crate::error::{Error, Result};
use crate::oracle::{
    chd_bruteforce, ChdOracle, HnTable, BRUTEFORCE_CAP, ENUMERATE_CAP, EXHAUSTIVE_PERMUTATION_CAP,
    HN_CAP,
};
use crate::ranges::{attained_set, range_of, range_size, ATTAINED_SET_CAP};
use crate::recognizer::{recognize, DegreeSequence};
use crate::witness::{build_witness, verify_witness};

/// Largest order `chd verify` accepts.
pub const VERIFY_CAP: u32 = DEFAULT_TABLE_CAP;

/// Orders at which the range suite scans every window length.
const EXHAUSTIVE_RANGE_CAP: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl SuiteReport {
    fn new(name: impl Into<String>) -> Self {
        SuiteReport {
            name: name.into(),
            checked: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform-enough integer in `[0, bound)`; `bound` must be positive.
pub fn random_below<R: Rng>(bound: &BigUint, rng: &mut R) -> BigUint {
    let words = (bound.bits() as usize).div_ceil(32) + 2;
    let digits: Vec<u32> = (0..words).map(|_| rng.gen()).collect();
    BigUint::new(digits) % bound
}

/// Random sequence with every entry in `[0, 2^(n-1)]`.
pub fn random_valid_sequence<R: Rng>(order: u32, rng: &mut R) -> DegreeSequence {
    let bound = pow2(order - 1) + 1u32;
    let entries = (0..order).map(|_| random_below(&bound, rng)).collect();
    DegreeSequence::new(entries).expect("order >= 1")
}

/// A cyclic hyper degree built straight from the definition: random window
/// length, random column starts and a random column-to-coordinate placement.
pub fn random_cyclic_hyper_degree<R: Rng>(order: u32, rng: &mut R) -> DegreeSequence {
    let size = pow2(order);
    let window = random_below(&size, rng) + 1u32;
    let mut coords: Vec<usize> = (0..order as usize).collect();
    for k in (1..coords.len()).rev() {
        coords.swap(k, rng.gen_range(0..=k));
    }
    let mut entries = vec![BigUint::zero(); order as usize];
    for i in 1..=order {
        let start = random_below(&size, rng);
        let column = BitColumn::new(i, order).expect("1 <= i <= n");
        entries[coords[i as usize - 1]] = column
            .contiguous_sum(&start, &window)
            .expect("start and window in range");
    }
    DegreeSequence::new(entries).expect("order >= 1")
}

fn small(w: &DegreeSequence) -> Vec<u64> {
    w.entries()
        .iter()
        .map(|e| e.to_u64().expect("small order"))
        .collect()
}

/// Every tuple in `[0, bound]^order`, lexicographically.
fn all_tuples(order: u32, bound: u64) -> impl Iterator<Item = Vec<u64>> {
    let n = order as usize;
    let total = (bound + 1).pow(order);
    (0..total).map(move |mut code| {
        let mut t = vec![0u64; n];
        for slot in t.iter_mut().rev() {
            *slot = code % (bound + 1);
            code /= bound + 1;
        }
        t
    })
}

/// The recognizer against the brute-force decision. Exhaustive for
/// `n <= 4`, sampled (half uniform, half constructed positives) up to `n = 12`.
pub fn recognizer_vs_oracle(order: u32, samples: u64, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("recognizer agrees with brute force (n={order})"));
    if order > BRUTEFORCE_CAP {
        return Err(Error::capacity("brute-force comparison", format!("order {BRUTEFORCE_CAP}")));
    }
    let table = if order <= EXHAUSTIVE_PERMUTATION_CAP {
        Some(ChdOracle::new(order)?)
    } else {
        None
    };
    let oracle = |w: &DegreeSequence| -> Result<bool> {
        match &table {
            Some(t) => Ok(t.accepts(&small(w))),
            None => chd_bruteforce(w),
        }
    };
    let check = |w: DegreeSequence, report: &mut SuiteReport| -> Result<()> {
        let fast = recognize(&w).is_some();
        let slow = oracle(&w)?;
        report.record(fast == slow, || {
            format!("{w}: recognizer {fast}, brute force {slow}")
        });
        Ok(())
    };
    if order <= ENUMERATE_CAP {
        for t in all_tuples(order, 1 << (order - 1)) {
            check(DegreeSequence::from_u64(&t)?, &mut report)?;
        }
    } else {
        let mut rng = rng_from_seed(seed);
        for k in 0..samples {
            let w = if k % 2 == 0 {
                random_valid_sequence(order, &mut rng)
            } else {
                random_cyclic_hyper_degree(order, &mut rng)
            };
            check(w, &mut report)?;
        }
    }
    Ok(report)
}

/// Cyclic hyper degrees are degree sequences of simple hypergraphs.
/// Exhaustive for `n <= 4`; sampled constructed positives at `n = 5`.
pub fn sufficiency(order: u32, samples: u64, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("cyclic hyper degrees are realizable (n={order})"));
    let table = HnTable::new(order)?;
    if order <= ENUMERATE_CAP {
        for t in ChdOracle::new(order)?.enumerate() {
            report.record(table.contains(&t), || format!("{t:?} not a degree sum"));
        }
    } else {
        let mut rng = rng_from_seed(seed);
        for _ in 0..samples {
            let w = random_cyclic_hyper_degree(order, &mut rng);
            report.record(table.contains(&small(&w)), || format!("{w} not a degree sum"));
        }
    }
    Ok(report)
}

/// `(4,1,1,1)` is realizable but not a cyclic hyper degree.
pub fn strict_inclusion() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("(4,1,1,1) separates the two families");
    let w = DegreeSequence::from_u64(&[4, 1, 1, 1])?;
    let realizable = HnTable::new(4)?.contains(&[4, 1, 1, 1]);
    report.record(realizable, || "(4,1,1,1) reported unrealizable".into());
    let rejected = recognize(&w).is_none();
    report.record(rejected, || "(4,1,1,1) accepted by the recognizer".into());
    let brute = !chd_bruteforce(&w)?;
    report.record(brute, || "(4,1,1,1) accepted by brute force".into());
    Ok(report)
}

/// Every shift vector for `n <= 3`, otherwise `samples` random ones.
pub fn rows_distinct(order: u32, samples: u64, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("shifted tables have distinct rows (n={order})"));
    let check = |shifts: ShiftVector, report: &mut SuiteReport| -> Result<()> {
        let ok = shifts.all_rows_distinct(DEFAULT_TABLE_CAP)?;
        report.record(ok, || format!("repeated row under shifts {:?}", shifts.shifts()));
        Ok(())
    };
    if order <= 3 {
        let size = 1u64 << order;
        for t in all_tuples(order, size - 1) {
            check(ShiftVector::from_u64(order, &t)?, &mut report)?;
        }
    } else {
        let mut rng = rng_from_seed(seed);
        let size = pow2(order);
        for _ in 0..samples {
            let shifts = (0..order).map(|_| random_below(&size, &mut rng)).collect();
            check(ShiftVector::new(order, shifts)?, &mut report)?;
        }
    }
    Ok(report)
}

/// Closed-form ranges against window scans: interval equality, size, and
/// `hi = N - lo`. Every window length up to `n = 10`, sampled lengths above.
pub fn ranges_vs_scan(order: u32, samples: u64, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("window-sum ranges match scans (n={order})"));
    if order > ATTAINED_SET_CAP {
        return Err(Error::capacity("range scans", format!("order {ATTAINED_SET_CAP}")));
    }
    let size = 1u64 << order;
    let lengths: Vec<u64> = if order <= EXHAUSTIVE_RANGE_CAP {
        (1..=size).collect()
    } else {
        let mut rng = rng_from_seed(seed);
        (0..samples.min(size)).map(|_| rng.gen_range(1..=size)).collect()
    };
    for i in 1..=order {
        for &len in &lengths {
            let big_len = BigUint::from(len);
            let range = range_of(i, &big_len, order)?;
            let (lo, hi) = (range.lo.to_u64().unwrap(), range.hi.to_u64().unwrap());
            let scanned = attained_set(i, len, order)?;
            let interval: BTreeSet<u64> = (lo..=hi).collect();
            report.record(scanned == interval, || {
                format!("i={i}, N={len}: scan {scanned:?} vs [{lo}, {hi}]")
            });
            let card = range_size(i, &big_len)?;
            report.record(card == BigUint::from(scanned.len()), || {
                format!("i={i}, N={len}: size {card} vs {}", scanned.len())
            });
            report.record(hi == len - lo, || format!("i={i}, N={len}: hi != N - lo"));
        }
    }
    Ok(report)
}

/// The product bound and per-column bound for the special window, and the
/// exact count against the bound where enumeration is feasible.
pub fn lower_bound_suite(orders: impl IntoIterator<Item = u32>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lower bound on the number of cyclic hyper degrees");
    for n in orders {
        if n >= 2 {
            let r = lemma_lower_report(n)?;
            report.record(r.satisfied, || format!("n={n}: product {} < bound {}", r.product, r.bound));
            report.record(r.per_column_bound_holds(), || format!("n={n}: some B_i < 2^(i-2)"));
        }
        if n <= ENUMERATE_CAP {
            let count = exact_count(n)?;
            let bound = lower_bound(n);
            report.record(count >= bound, || format!("n={n}: exact {count} < bound {bound}"));
        }
    }
    Ok(report)
}

/// Constructed positives must be accepted and their witnesses must verify.
pub fn witness_soundness(order: u32, samples: u64, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("witnesses verify (n={order})"));
    let mut rng = rng_from_seed(seed);
    for _ in 0..samples {
        let w = random_cyclic_hyper_degree(order, &mut rng);
        let ok = recognize(&w)
            .and_then(|a| build_witness(&w, &a).ok())
            .is_some_and(|wit| verify_witness(&w, &wit));
        report.record(ok, || format!("{w}: no verified witness"));
    }
    Ok(report)
}

/// The suites applicable at `order`, as run by `chd verify`.
pub fn run_suites(order: u32, samples: u64, seed: u64) -> Result<Vec<SuiteReport>> {
    if order == 0 {
        return Err(Error::domain("order must be at least 1"));
    }
    if order > VERIFY_CAP {
        return Err(Error::capacity(
            format!("verification at order {order}"),
            format!("order {VERIFY_CAP}"),
        ));
    }
    let mut reports = Vec::new();
    if order <= BRUTEFORCE_CAP {
        // Each brute-force call above the permutation cap scans 4^n windows.
        let budget = if order > EXHAUSTIVE_PERMUTATION_CAP {
            samples.min(50)
        } else {
            samples
        };
        reports.push(recognizer_vs_oracle(order, budget, seed)?);
    }
    if order <= HN_CAP {
        reports.push(sufficiency(order, samples, seed)?);
    }
    if order == 4 {
        reports.push(strict_inclusion()?);
    }
    reports.push(rows_distinct(order, samples.min(if order > 16 { 10 } else { samples }), seed)?);
    if order <= ATTAINED_SET_CAP {
        reports.push(ranges_vs_scan(order, samples.min(256), seed)?);
    }
    reports.push(lower_bound_suite([order])?);
    reports.push(witness_soundness(order, samples, seed)?);
    Ok(reports)
}
