//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cyclic_hyper::analysis::{exact_count, lemma_lower_report, lower_bound};
use cyclic_hyper::oracle::{chd_bruteforce, enumerate_chd, hn_member};
use cyclic_hyper::ranges::attained_set;
use cyclic_hyper::verify::{random_below, random_cyclic_hyper_degree, random_valid_sequence, rng_from_seed};
use cyclic_hyper::{
    build_witness, materialize_edges, range_of, range_size, recognize, verify_witness,
    DegreeSequence, ShiftVector,
};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;

type Outcome = Result<(), String>;

fn tuples(order: u32, bound: u64) -> impl Iterator<Item = Vec<u64>> {
    let base = bound + 1;
    (0..base.pow(order)).map(move |code| (0..order).map(|c| code / base.pow(c) % base).collect())
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let spent = start.elapsed();
    if spent > limit {
        return Err(format!("took {spent:.2?}, limit {limit:?}"));
    }
    Ok(())
}

fn c1_recognizer_matches_bruteforce() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (n, bound) in [(3u32, 4u64), (4, 8)] {
        for t in tuples(n, bound) {
            let w = DegreeSequence::from_u64(&t).unwrap();
            let fast = recognize(&w).is_some();
            let slow = chd_bruteforce(&w).map_err(|e| e.to_string())?;
            if fast != slow {
                return Err(format!("{w}: recognizer {fast}, brute force {slow}"));
            }
            checked += 1;
        }
    }
    if checked != 125 + 6561 {
        return Err(format!("checked {checked} tuples"));
    }
    within(start, Duration::from_secs(60))
}

fn c2_strict_inclusion() -> Outcome {
    let w = DegreeSequence::from_u64(&[4, 1, 1, 1]).unwrap();
    if !hn_member(&w).map_err(|e| e.to_string())? {
        return Err("(4,1,1,1) not realizable".into());
    }
    if recognize(&w).is_some() {
        return Err("(4,1,1,1) recognized".into());
    }
    Ok(())
}

fn c3_sufficiency() -> Outcome {
    for n in 1..=4 {
        for w in enumerate_chd(n).map_err(|e| e.to_string())? {
            if !hn_member(&w).map_err(|e| e.to_string())? {
                return Err(format!("{w} not realizable"));
            }
        }
    }
    Ok(())
}

fn c4_rows_distinct() -> Outcome {
    let start = Instant::now();
    for t in tuples(3, 7) {
        let sv = ShiftVector::from_u64(3, &t).unwrap();
        if !sv.all_rows_distinct(24).map_err(|e| e.to_string())? {
            return Err(format!("repeated row for shifts {t:?}"));
        }
    }
    for n in [8u32, 10, 12] {
        let mut rng = rng_from_seed(u64::from(n));
        let size = BigUint::from(1u64 << n);
        for _ in 0..10_000 {
            let shifts = (0..n).map(|_| random_below(&size, &mut rng)).collect();
            let sv = ShiftVector::new(n, shifts).unwrap();
            if !sv.all_rows_distinct(24).map_err(|e| e.to_string())? {
                return Err(format!("repeated row at n={n} for {:?}", sv.shifts()));
            }
        }
    }
    within(start, Duration::from_secs(30))
}

/// Criteria 5 and 6 share one sweep.
fn ranges_sweep() -> (Outcome, Outcome) {
    let start = Instant::now();
    let mut interval = Ok(());
    let mut complement = Ok(());
    for n in 1..=10u32 {
        for i in 1..=n {
            for len in 1..=1u64 << n {
                let big_len = BigUint::from(len);
                let r = range_of(i, &big_len, n).unwrap();
                let (lo, hi) = (r.lo.to_u64().unwrap(), r.hi.to_u64().unwrap());
                let scanned = attained_set(i, len, n).unwrap();
                let size = range_size(i, &big_len).unwrap();
                let contiguous = scanned.len() as u64 == hi - lo + 1
                    && scanned.first() == Some(&lo)
                    && scanned.last() == Some(&hi);
                if interval.is_ok() && (!contiguous || size != BigUint::from(scanned.len())) {
                    interval = Err(format!("i={i} N={len} n={n}: [{lo}, {hi}] size {size} vs scan"));
                }
                if complement.is_ok() && hi != len - lo {
                    complement = Err(format!("i={i} N={len} n={n}: hi={hi}, lo={lo}"));
                }
            }
        }
    }
    (interval.and(within(start, Duration::from_secs(120))), complement)
}

fn c7_lower_bound() -> Outcome {
    let start = Instant::now();
    for n in 3..=64 {
        let r = lemma_lower_report(n).map_err(|e| e.to_string())?;
        if !r.satisfied {
            return Err(format!("n={n}: product {} < {}", r.product, r.bound));
        }
        if !r.per_column_bound_holds() {
            return Err(format!("n={n}: some B_i < 2^(i-2)"));
        }
    }
    for n in 1..=4 {
        let count = exact_count(n).map_err(|e| e.to_string())?;
        if count < lower_bound(n) {
            return Err(format!("n={n}: exact count {count} below bound"));
        }
    }
    within(start, Duration::from_secs(5))
}

fn c8_witness_soundness() -> Outcome {
    let start = Instant::now();
    let mut rng = rng_from_seed(8);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=16);
        let w = random_cyclic_hyper_degree(n, &mut rng);
        let a = recognize(&w).ok_or_else(|| format!("{w} rejected"))?;
        let wit = build_witness(&w, &a).map_err(|e| e.to_string())?;
        if !verify_witness(&w, &wit) {
            return Err(format!("{w}: witness failed verification"));
        }
        let edges = materialize_edges(&wit, 1 << 16).map_err(|e| e.to_string())?;
        let mut seen = HashSet::with_capacity(edges.len());
        let mut degree = vec![0u64; n as usize];
        for e in &edges {
            if !seen.insert(e.incidence().to_vec()) {
                return Err(format!("{w}: repeated edge {:?}", e.vertices()));
            }
            for v in e.vertices() {
                degree[v - 1] += 1;
            }
        }
        let expected: Vec<u64> = w.entries().iter().map(|d| d.to_u64().unwrap()).collect();
        if degree != expected || BigUint::from(edges.len()) != *wit.window() {
            return Err(format!("{w}: materialized degrees {degree:?}"));
        }
    }
    within(start, Duration::from_secs(60))
}

fn c9_large_order() -> Outcome {
    let mut rng = rng_from_seed(256);
    let mut accepted = 0;
    for k in 0..40 {
        let w = if k % 2 == 0 {
            random_valid_sequence(256, &mut rng)
        } else {
            random_cyclic_hyper_degree(256, &mut rng)
        };
        let start = Instant::now();
        let decision = recognize(&w);
        within(start, Duration::from_secs(1))?;
        if k % 2 == 1 {
            let a = decision.ok_or("constructed sequence rejected at n=256")?;
            let wit = build_witness(&w, &a).map_err(|e| e.to_string())?;
            if !verify_witness(&w, &wit) {
                return Err("n=256 witness failed verification".into());
            }
            accepted += 1;
        }
    }
    if accepted != 20 {
        return Err(format!("{accepted} constructed sequences accepted"));
    }
    Ok(())
}

fn timed(results: &mut Vec<(&'static str, Duration, Outcome)>, name: &'static str, f: fn() -> Outcome) {
    let start = Instant::now();
    let outcome = f();
    results.push((name, start.elapsed(), outcome));
}

fn main() -> ExitCode {
    let mut results = Vec::new();
    timed(&mut results, "1 recognizer equals brute force (n=3, n=4 exhaustive)", c1_recognizer_matches_bruteforce);
    timed(&mut results, "2 (4,1,1,1) realizable but not recognized", c2_strict_inclusion);
    timed(&mut results, "3 cyclic hyper degrees are realizable (n<=4)", c3_sufficiency);
    timed(&mut results, "4 shifted tables have distinct rows", c4_rows_distinct);
    let start = Instant::now();
    let (c5, c6) = ranges_sweep();
    let spent = start.elapsed();
    results.push(("5 attained sums fill [lo, hi] (n<=10)", spent, c5));
    results.push(("6 hi = N - lo (n<=10)", spent, c6));
    timed(&mut results, "7 lower bound holds (n in 3..=64)", c7_lower_bound);
    timed(&mut results, "8 witnesses verify (10^3 sequences, n<=16)", c8_witness_soundness);
    timed(&mut results, "9 recognize at n=256 under 1 s per call", c9_large_order);

    let mut failed = 0;
    for (name, spent, outcome) in &results {
        match outcome {
            Ok(()) => println!("PASS  criterion {name}  [{spent:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}  [{spent:.2?}]: {why}");
            }
        }
    }
    println!("{}/{} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
