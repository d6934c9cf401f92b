//! Depth-first enumeration of pointed maps with prefix pruning.
//!
//! Maps source -> target fixing the identity are produced in lexicographic
//! order. A caller-supplied predicate sees partially-filled prefixes and must
//! be monotone: once a prefix is rejected, every completion of it is skipped.

use crate::error::{Error, Result};

/// Iterator over pointed maps `[0, v1, ..., v_{n-1}]` in lexicographic order.
///
/// Yields `Err` once if the visited-node budget is exhausted, then stops.
pub struct PointedMapIter<F> {
    source_order: usize,
    target_order: usize,
    filter: F,
    /// values[i] is the current choice at position i (positions 1..n-1)
    values: Vec<usize>,
    /// next position to fill; source_order means a complete map is pending
    depth: usize,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<F: FnMut(&[usize]) -> bool> PointedMapIter<F> {
    pub fn new(source_order: usize, target_order: usize, filter: F, budget: u64) -> Self {
        PointedMapIter {
            source_order,
            target_order,
            filter,
            values: vec![0; source_order],
            depth: 1,
            nodes: 0,
            budget,
            exhausted: source_order == 0,
        }
    }

    /// Backtrack to the deepest position that can still be incremented.
    fn advance(&mut self) -> bool {
        while self.depth > 1 {
            let pos = self.depth - 1;
            if self.values[pos] + 1 < self.target_order {
                self.values[pos] += 1;
                return true;
            }
            self.values[pos] = 0;
            self.depth -= 1;
        }
        self.exhausted = true;
        false
    }
}

impl<F: FnMut(&[usize]) -> bool> Iterator for PointedMapIter<F> {
    type Item = Result<Vec<usize>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted {
            return None;
        }
        if self.source_order == 1 {
            self.exhausted = true;
            return Some(Ok(vec![0]));
        }
        loop {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return Some(Err(Error::Budget {
                    estimate: self.nodes as u128,
                    budget: self.budget,
                }));
            }
            let accepted = (self.filter)(&self.values[..self.depth]);
            if accepted {
                if self.depth == self.source_order {
                    let out = self.values.clone();
                    if !self.advance() {
                        self.exhausted = true;
                    }
                    return Some(Ok(out));
                }
                // descend
                self.depth += 1;
                self.values[self.depth - 1] = 0;
            } else if !self.advance() {
                return None;
            }
        }
    }
}

/// Pointed maps between two groups, lexicographically, pruned by `filter`.
pub fn enumerate_pointed_maps<F: FnMut(&[usize]) -> bool>(
    source: &crate::group::GroupRef,
    target: &crate::group::GroupRef,
    filter: F,
    budget: crate::error::Budget,
) -> impl Iterator<Item = Result<crate::group::PointedMap>> {
    let source = source.clone();
    let target = target.clone();
    PointedMapIter::new(source.order(), target.order(), filter, budget.0).map(move |r| {
        r.and_then(|map| crate::group::PointedMap::new(source.clone(), target.clone(), map))
    })
}

/// Worst-case node estimate for an unfiltered pointed-map enumeration.
pub fn pointed_map_estimate(source_order: usize, target_order: usize) -> u128 {
    if source_order <= 1 {
        return 1;
    }
    let mut est: u128 = 1;
    for _ in 1..source_order {
        est = est.saturating_mul(target_order as u128);
    }
    est
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect_all(src: usize, tgt: usize) -> Vec<Vec<usize>> {
        PointedMapIter::new(src, tgt, |_| true, 1_000_000)
            .map(|r| r.unwrap())
            .collect()
    }

    #[test]
    fn counts_match_power_law() {
        assert_eq!(collect_all(1, 5).len(), 1);
        assert_eq!(collect_all(2, 2).len(), 2);
        assert_eq!(collect_all(3, 4).len(), 16);
        // lexicographic order
        let maps = collect_all(3, 2);
        assert_eq!(
            maps,
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]
        );
    }

    #[test]
    fn prefix_filter_prunes() {
        // source C2, target C4, image restricted to {0, 2}
        let maps: Vec<_> = PointedMapIter::new(2, 4, |p| p.iter().all(|&v| v % 2 == 0), 1000)
            .map(|r| r.unwrap())
            .collect();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 2]]);
    }

    #[test]
    fn group_level_wrapper() {
        use crate::error::Budget;
        use crate::group::FiniteGroup;
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let all: Vec<_> = enumerate_pointed_maps(&c2, &c2, |_| true, Budget::default())
            .map(|r| r.unwrap())
            .collect();
        assert_eq!(all.len(), 2);
        let filtered: Vec<_> = enumerate_pointed_maps(
            &c2,
            &c4,
            |p| p.iter().all(|&v| v % 2 == 0),
            Budget::default(),
        )
        .map(|r| r.unwrap())
        .collect();
        assert_eq!(filtered.len(), 2);
        assert_eq!(filtered[1].map, vec![0, 2]);
    }

    #[test]
    fn budget_trips() {
        let mut it = PointedMapIter::new(5, 10, |_| true, 3);
        let mut saw_err = false;
        for r in &mut it {
            if r.is_err() {
                saw_err = true;
                break;
            }
        }
        assert!(saw_err);
    }
}
