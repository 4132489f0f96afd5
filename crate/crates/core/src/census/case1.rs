//! Weight-22 unital rows of order 45 divisible by `Φ_45`.

use std::collections::{BTreeSet, HashSet};

use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::params::{count_by_weight, uniformized_counts};
use crate::cyclo::{divides_cyclotomic, CyclotomicCache};
use crate::poly::IntPoly;

const N: usize = 45;
const K: usize = 22;

/// Uniformized `(h_15, h_9)` pairs split by how many of the three classes
/// carry a nonzero `C_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Case1Count {
    pub one_class: u64,
    pub two_classes: u64,
}

impl Case1Count {
    pub fn total(&self) -> u64 {
        self.one_class + self.two_classes
    }
}

pub fn count_case1() -> Case1Count {
    let table = uniformized_counts(3, 5, 3, 1);
    let split = count_by_weight(&table, 3, 5, K);
    let get = |t: usize| split.get(&t).map_or(0, |v| v.to_u64().expect("small count"));
    assert!(split.keys().all(|&t| t == 1 || t == 2), "unexpected split {split:?}");
    Case1Count { one_class: get(1), two_classes: get(2) }
}

/// Mask of `h(x) G(45, r)` for `h` of degree `< r` given by `mask`.
fn spread(mask: u64, r: usize) -> u64 {
    (0..N / r).fold(0, |acc, t| acc | mask << (t * r))
}

/// Every distinct unital `f = h_15 G(45, 15) + h_9 G(45, 9)` of weight 22
/// over all `2^15 * 2^9` unital pairs, as bit masks of the support.
pub fn enumerate_case1_bruteforce() -> BTreeSet<u64> {
    let inner: Vec<u64> = (0u64..1 << 9).map(|m| spread(m, 9)).collect();
    let found: HashSet<u64> = (0u64..1 << 15)
        .into_par_iter()
        .fold(HashSet::new, |mut set, h15| {
            let a = spread(h15, 15);
            for &b in &inner {
                // a sum of two 0/1 vectors is unital iff they are disjoint
                if a & b == 0 && (a | b).count_ones() as usize == K {
                    set.insert(a | b);
                }
            }
            set
        })
        .reduce(HashSet::new, |mut x, y| {
            x.extend(y);
            x
        });
    found.into_iter().collect()
}

pub fn mask_to_poly(mask: u64) -> IntPoly {
    IntPoly::from_support((0..64).filter(|j| mask >> j & 1 == 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleCount {
    /// Members of the `Φ_45` family also divisible by `Φ_15`.
    pub divisible: u64,
    /// Nonnegative solutions of `4 = 3 a + 5 b`.
    pub weight_solutions: usize,
}

pub fn count_double() -> DoubleCount {
    let cache = CyclotomicCache::new();
    let divisible = enumerate_case1_bruteforce()
        .into_iter()
        .filter(|&m| divides_cyclotomic(&mask_to_poly(m), 15, &cache))
        .count() as u64;
    let weight_solutions = (0..=4usize)
        .flat_map(|a| (0..=4usize).map(move |b| (a, b)))
        .filter(|&(a, b)| 3 * a + 5 * b == 4)
        .count();
    DoubleCount { divisible, weight_solutions }
}
