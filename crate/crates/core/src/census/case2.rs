//! Weight-22 unital rows of order 45 divisible by `Φ_15`, counted through
//! their residues `f mod (x^15 - 1)` in `{0..3}^15`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::params::{small_binomial, vectors};
use crate::cyclo::CyclotomicCache;
use crate::poly::IntPoly;

const D: usize = 15;
const CAP: u8 = 3;
const K: u32 = 22;

/// One sorted `(b, c)` pattern: `b` are the coefficients of `h_5`, `c` of `h_3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case2Profile {
    pub b: [u8; 5],
    pub c: [u8; 3],
    /// Distinct orderings of `b` times distinct orderings of `c`.
    pub permutations: u64,
    /// `prod_j C(3, d_j)` with `d = b_(j mod 5) + c_(j mod 3)`.
    pub multiplier: u64,
}

impl Case2Profile {
    pub fn contribution(&self) -> u64 {
        self.permutations * self.multiplier
    }
}

fn orderings(values: &[u8]) -> u64 {
    let mut counts = [0u64; CAP as usize + 1];
    for &v in values {
        counts[v as usize] += 1;
    }
    let mut left = values.len() as u64;
    counts.iter().fold(1, |acc, &c| {
        let ways = small_binomial(left, c);
        left -= c;
        acc * ways
    })
}

fn sorted_tuples<const L: usize>(sum: u8) -> Vec<[u8; L]> {
    vectors(L, CAP)
        .filter(|v| v.windows(2).all(|w| w[0] <= w[1]) && v.iter().sum::<u8>() == sum)
        .map(|v| v.try_into().expect("length L"))
        .collect()
}

/// Patterns with `sum b = 4`, `sum c = 2`, `min b = 0` and `max b + max c <= 3`.
pub fn case2_profiles() -> Vec<Case2Profile> {
    let mut out = Vec::new();
    for b in sorted_tuples::<5>(4) {
        for c in sorted_tuples::<3>(2) {
            if b[0] != 0 || b[4] + c[2] > CAP {
                continue;
            }
            let multiplier = b
                .iter()
                .flat_map(|&bi| c.iter().map(move |&cj| small_binomial(CAP as u64, (bi + cj) as u64)))
                .product();
            out.push(Case2Profile { b, c, permutations: orderings(&b) * orderings(&c), multiplier });
        }
    }
    out.sort_by_key(|p| (p.b, p.c));
    out
}

pub fn count_case2() -> u64 {
    case2_profiles().iter().map(Case2Profile::contribution).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case2Scan {
    /// Residue vectors in `{0..3}^15` of weight 22 divisible by `Φ_15`, sorted.
    pub vectors: Vec<[u8; D]>,
    /// `sum_v prod_j C(3, v_j)`.
    pub weighted: u64,
}

/// Scans all of `{0..3}^15` by meeting in the middle on exact residues
/// modulo `Φ_15`: positions `0..7` on one side, `7..15` on the other.
pub fn enumerate_case2_bruteforce() -> Case2Scan {
    const SPLIT: usize = 7;
    let cache = CyclotomicCache::new();
    let phi = cache.get(D);
    let width = phi.degree().finite().expect("nonzero");
    let basis: Vec<Vec<i64>> = (0..D)
        .map(|j| {
            let mut r = IntPoly::monomial(BigInt::one(), j)
                .rem_monic(&phi)
                .expect("monic")
                .to_i64s()
                .expect("small");
            r.resize(width, 0);
            r
        })
        .collect();
    let residue = |v: &[u8], offset: usize| -> Vec<i64> {
        let mut acc = vec![0i64; width];
        for (j, &c) in v.iter().enumerate() {
            for (a, r) in acc.iter_mut().zip(&basis[offset + j]) {
                *a += c as i64 * r;
            }
        }
        acc
    };

    let mut left: HashMap<(Vec<i64>, u32), Vec<Vec<u8>>> = HashMap::new();
    for v in vectors(SPLIT, CAP) {
        let sum: u32 = v.iter().map(|&c| c as u32).sum();
        if sum <= K {
            left.entry((residue(&v, 0), sum)).or_default().push(v);
        }
    }
    let mut found = Vec::new();
    for v in vectors(D - SPLIT, CAP) {
        let sum: u32 = v.iter().map(|&c| c as u32).sum();
        if sum > K {
            continue;
        }
        let target: Vec<i64> = residue(&v, SPLIT).iter().map(|x| -x).collect();
        if let Some(heads) = left.get(&(target, K - sum)) {
            for head in heads {
                let mut full = [0u8; D];
                full[..SPLIT].copy_from_slice(head);
                full[SPLIT..].copy_from_slice(&v);
                found.push(full);
            }
        }
    }
    found.sort_unstable();
    let weighted = found
        .iter()
        .map(|v| v.iter().map(|&c| small_binomial(CAP as u64, c as u64)).product::<u64>())
        .sum();
    Case2Scan { vectors: found, weighted }
}
