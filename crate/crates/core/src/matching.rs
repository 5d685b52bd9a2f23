//! Perfect matchings between coordinates (values) and columns (intervals).
//!
//! Two independent routines live here. [`interval_assignment`] exploits the
//! fact that every column accepts a contiguous interval of values and solves
//! the problem with a sweep in `O(n log n)` comparisons. [`augmenting_path`]
//! is a plain augmenting-path matcher over an explicit bipartite graph and is
//! used to cross-check the sweep.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigUint;

use crate::ranges::SumRange;

/// Assigns every column a distinct coordinate whose value lies in the
/// column's range. Returns `assignment[column] = coordinate` (both 0-based),
/// or `None` when no perfect matching exists. Requires
/// `values.len() == ranges.len()`.
///
/// Coordinates are visited in ascending value; each takes, among the columns
/// whose lower end it has reached, the one whose upper end is smallest. If that
/// upper end is already below the value, the column can never be used and no
/// perfect matching exists.
pub fn interval_assignment(values: &[BigUint], ranges: &[SumRange]) -> Option<Vec<usize>> {
    assert_eq!(values.len(), ranges.len(), "one range per value");
    let n = values.len();

    let mut coords: Vec<usize> = (0..n).collect();
    coords.sort_by(|&a, &b| values[a].cmp(&values[b]));
    let mut columns: Vec<usize> = (0..n).collect();
    columns.sort_by(|&a, &b| ranges[a].lo.cmp(&ranges[b].lo));

    let mut assignment = vec![usize::MAX; n];
    let mut open: BinaryHeap<Reverse<(&BigUint, usize)>> = BinaryHeap::with_capacity(n);
    let mut next = 0;
    for &coord in &coords {
        let v = &values[coord];
        while next < n && ranges[columns[next]].lo <= *v {
            let c = columns[next];
            open.push(Reverse((&ranges[c].hi, c)));
            next += 1;
        }
        let Reverse((hi, column)) = open.pop()?;
        if hi < v {
            return None;
        }
        assignment[column] = coord;
    }
    Some(assignment)
}

/// Perfect matching of the left side of a bipartite graph by repeated
/// augmenting-path search. `adjacency[l]` lists the right vertices adjacent
/// to left vertex `l`. Returns `matched[l] = r` if every left vertex can be
/// matched into the `right` right vertices, else `None`.
pub fn augmenting_path(adjacency: &[Vec<usize>], right: usize) -> Option<Vec<usize>> {
    let left = adjacency.len();
    if left > right {
        return None;
    }
    let mut owner = vec![usize::MAX; right];
    for start in 0..left {
        let mut visited = vec![false; right];
        if !augment(adjacency, start, &mut owner, &mut visited) {
            return None;
        }
    }
    let mut matched = vec![usize::MAX; left];
    for (r, &l) in owner.iter().enumerate() {
        if l != usize::MAX {
            matched[l] = r;
        }
    }
    Some(matched)
}

fn augment(adjacency: &[Vec<usize>], l: usize, owner: &mut [usize], visited: &mut [bool]) -> bool {
    for &r in &adjacency[l] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        if owner[r] == usize::MAX || augment(adjacency, owner[r], owner, visited) {
            owner[r] = l;
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(lo: u64, hi: u64) -> SumRange {
        SumRange {
            lo: lo.into(),
            hi: hi.into(),
        }
    }

    fn vals(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| x.into()).collect()
    }

    fn valid(values: &[BigUint], ranges: &[SumRange], a: &[usize]) -> bool {
        let mut used = vec![false; values.len()];
        a.iter().enumerate().all(|(c, &j)| {
            let fresh = !std::mem::replace(&mut used[j], true);
            fresh && ranges[c].contains(&values[j])
        })
    }

    #[test]
    fn sweep_finds_matching() {
        let values = vals(&[2, 2, 2]);
        let ranges = [r(2, 2), r(2, 2), r(0, 4)];
        let a = interval_assignment(&values, &ranges).unwrap();
        assert!(valid(&values, &ranges, &a));
    }

    #[test]
    fn sweep_detects_hall_violation() {
        // Three coordinates of value 1, only one column accepts 1.
        let values = vals(&[4, 1, 1, 1]);
        let ranges = [r(3, 4), r(3, 4), r(3, 4), r(0, 7)];
        assert!(interval_assignment(&values, &ranges).is_none());
    }

    #[test]
    fn augmenting_path_basic() {
        let adj = vec![vec![0, 1], vec![0], vec![1, 2]];
        let m = augmenting_path(&adj, 3).unwrap();
        assert_eq!(m[1], 0);
        assert_eq!(m[0], 1);
        assert_eq!(m[2], 2);
        assert!(augmenting_path(&[vec![0], vec![0]], 2).is_none());
    }

    proptest! {
        #[test]
        fn sweep_agrees_with_augmenting_path(
            raw in proptest::collection::vec((0u64..12, 0u64..12, 0u64..12), 1..9)
        ) {
            let values: Vec<BigUint> = raw.iter().map(|t| t.0.into()).collect();
            let ranges: Vec<SumRange> = raw
                .iter()
                .map(|t| r(t.1.min(t.2), t.1.max(t.2)))
                .collect();
            let adjacency: Vec<Vec<usize>> = ranges
                .iter()
                .map(|range| (0..values.len()).filter(|&j| range.contains(&values[j])).collect())
                .collect();
            let sweep = interval_assignment(&values, &ranges);
            let general = augmenting_path(&adjacency, values.len());
            prop_assert_eq!(sweep.is_some(), general.is_some());
            if let Some(a) = sweep {
                prop_assert!(valid(&values, &ranges, &a));
            }
        }
    }
}
