//! Exhaustive census over every weight-`k` unital row of order `n`.

use rayon::prelude::*;

use super::ResidueTable;
use crate::cyclo::CyclotomicCache;

/// Positions decided up front to carve the search into independent tasks.
const SPLIT_DEPTH: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustiveReport {
    pub n: usize,
    pub k: usize,
    /// Number of supports visited; equals `C(n, k)` on completion.
    pub checked: u64,
    pub singular: u64,
    /// Lexicographically smallest singular support, if any.
    pub first_singular: Option<Vec<usize>>,
}

impl ExhaustiveReport {
    fn empty(n: usize, k: usize) -> Self {
        ExhaustiveReport { n, k, checked: 0, singular: 0, first_singular: None }
    }

    fn merge(mut self, other: Self) -> Self {
        self.checked += other.checked;
        self.singular += other.singular;
        self.first_singular = match (self.first_singular, other.first_singular) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

struct Walker<'a> {
    table: &'a ResidueTable,
    acc: Vec<i64>,
    chosen: Vec<usize>,
    report: ExhaustiveReport,
}

impl Walker<'_> {
    fn walk(&mut self, pos: usize, remaining: usize) {
        if remaining == 0 {
            self.report.checked += 1;
            if self.table.any_vanishing(&self.acc) {
                self.report.singular += 1;
                if self.report.first_singular.as_ref().is_none_or(|s| self.chosen < *s) {
                    self.report.first_singular = Some(self.chosen.clone());
                }
            }
            return;
        }
        let n = self.table.n();
        if n - pos < remaining {
            return;
        }
        self.table.add_monomial(&mut self.acc, pos);
        self.chosen.push(pos);
        self.walk(pos + 1, remaining - 1);
        self.chosen.pop();
        self.table.remove_monomial(&mut self.acc, pos);
        self.walk(pos + 1, remaining);
    }
}

/// Visits all `C(n, k)` supports and counts the singular ones. The search is
/// split on the first few positions and the pieces run in parallel; the
/// merged report does not depend on scheduling.
pub fn exhaustive_weight_census(n: usize, k: usize, cache: &CyclotomicCache) -> ExhaustiveReport {
    assert!(n <= 64, "supports are enumerated as 64-bit masks");
    if k > n {
        return ExhaustiveReport::empty(n, k);
    }
    let table = ResidueTable::new(n, cache);
    let split = n.min(SPLIT_DEPTH);
    let rest = n - split;
    (0u64..1 << split)
        .into_par_iter()
        .filter(|mask| {
            let chosen = mask.count_ones() as usize;
            chosen <= k && k - chosen <= rest
        })
        .map(|mask| {
            let chosen: Vec<usize> = (0..split).filter(|&j| mask >> j & 1 == 1).collect();
            let mut walker = Walker {
                table: &table,
                acc: table.accumulate_support(&chosen),
                report: ExhaustiveReport::empty(n, k),
                chosen,
            };
            let remaining = k - walker.chosen.len();
            walker.walk(split, remaining);
            walker.report
        })
        .reduce(|| ExhaustiveReport::empty(n, k), ExhaustiveReport::merge)
}
