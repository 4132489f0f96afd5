//! Experimental census for other orders with two distinct primes.
//!
//! Requires `gcd(k, n) = 1`: then no `Φ_1` or `Φ_(p^i)` divides a weight-`k`
//! unital row, and only `d` divisible by both primes can be witnesses. At
//! most two such `d` are supported (`n = pq`, `p^2 q` or `p q^2`); the
//! overlap of the two families is found by listing the `Φ_n` family.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use super::params::{class_choices, count_by_weight, uniformized_counts, CLASS_LIMIT};
use super::CensusReport;
use crate::circulant::ResidueTable;
use crate::cyclo::{divisors, factorize, CyclotomicCache};

/// Largest `Φ_n` family listed to resolve double counts.
const FAMILY_LIMIT: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("order {0} does not have exactly two distinct prime factors")]
    NotTwoPrimeOrder(usize),
    #[error("weight {k} exceeds order {n}")]
    WeightTooLarge { n: usize, k: usize },
    #[error("weight {k} shares a factor with order {n}")]
    SharedFactor { n: usize, k: usize },
    #[error("order {n} has {count} divisors divisible by both primes; at most 2 are supported")]
    UnsupportedShape { n: usize, count: usize },
    #[error("search space too large: {0}")]
    TooLarge(String),
}

/// Weighted count of unital weight-`k` rows of order `n` divisible by `Φ_d`.
fn divisor_count(n: usize, d: usize, k: usize, p: usize, q: usize) -> Result<BigUint, CensusError> {
    let cap = n / d;
    let per_class = (cap as u64 + 1).checked_pow((p + q) as u32);
    if per_class.is_none_or(|s| s > CLASS_LIMIT) {
        return Err(CensusError::TooLarge(format!("{}^{} choices per class", cap + 1, p + q)));
    }
    let cap = u8::try_from(cap).map_err(|_| CensusError::TooLarge(format!("cap {cap}")))?;
    let table = uniformized_counts(p, q, d / (p * q), cap);
    Ok(count_by_weight(&table, p, q, k).into_values().sum())
}

/// Supports (as masks) of the unital weight-`k` rows of order `n` divisible by `Φ_n`.
fn phi_n_family(n: usize, k: usize, p: usize, q: usize) -> Vec<u128> {
    let classes = n / (p * q);
    let choices = class_choices(p, q, 1);
    // position of the CRT pair (i mod q, j mod p) inside a class
    let mut slot = vec![vec![0usize; p]; q];
    for l in 0..p * q {
        slot[l % q][l % p] = l;
    }
    let masks: Vec<(u128, usize, usize)> = choices
        .iter()
        .map(|(b, c)| {
            let mut m = 0u128;
            for (i, &bi) in b.iter().enumerate() {
                for (j, &cj) in c.iter().enumerate() {
                    if bi + cj == 1 {
                        m |= 1 << slot[i][j];
                    }
                }
            }
            let sb = b.iter().map(|&v| v as usize).sum();
            let sc = c.iter().map(|&v| v as usize).sum();
            (m, sb, sc)
        })
        .collect();

    fn go(
        s: usize,
        classes: usize,
        weight: usize,
        acc: u128,
        (p, q, k): (usize, usize, usize),
        masks: &[(u128, usize, usize)],
        out: &mut Vec<u128>,
    ) {
        if s == classes {
            if weight == k {
                out.push(acc);
            }
            return;
        }
        for &(m, sb, sc) in masks {
            let w = weight + p * sb + q * sc;
            if w > k {
                continue;
            }
            let spread = (0..p * q)
                .filter(|l| m >> l & 1 == 1)
                .fold(0u128, |a, l| a | 1 << (l * classes + s));
            go(s + 1, classes, w, acc | spread, (p, q, k), masks, out);
        }
    }
    let mut out = Vec::new();
    go(0, classes, 0, 0, (p, q, k), &masks, &mut out);
    out
}

/// Census of unital weight-`k` rows of order `n = p^a q^b` with `a b <= 2`.
pub fn census_two_prime(n: usize, k: usize) -> Result<CensusReport, CensusError> {
    let primes = factorize(n).map_err(|_| CensusError::NotTwoPrimeOrder(n))?.primes();
    let [p, q] = primes[..] else {
        return Err(CensusError::NotTwoPrimeOrder(n));
    };
    if k > n {
        return Err(CensusError::WeightTooLarge { n, k });
    }
    if n.gcd(&k) != 1 {
        return Err(CensusError::SharedFactor { n, k });
    }
    let witnesses: Vec<usize> = divisors(n).into_iter().filter(|d| d % (p * q) == 0).collect();
    let count_phi_n = divisor_count(n, n, k, p, q)?;
    match witnesses[..] {
        [_] => Ok(CensusReport::assemble(n, k, None, count_phi_n, BigUint::zero(), BigUint::zero())),
        [sub, _] => {
            let count_phi_sub = divisor_count(n, sub, k, p, q)?;
            if n > 128 {
                return Err(CensusError::TooLarge(format!("order {n} exceeds 128-bit supports")));
            }
            if count_phi_n.to_u64().is_none_or(|c| c > FAMILY_LIMIT) {
                return Err(CensusError::TooLarge(format!("Φ_{n} family of size {count_phi_n}")));
            }
            let cache = CyclotomicCache::new();
            let table = ResidueTable::new(n, &cache);
            let family = phi_n_family(n, k, p, q);
            debug_assert_eq!(BigUint::from(family.len()), count_phi_n);
            let both = family
                .iter()
                .filter(|&&m| {
                    let support: Vec<usize> = (0..n).filter(|j| m >> j & 1 == 1).collect();
                    table.vanishing_divisors(&table.accumulate_support(&support)).any(|d| d == sub)
                })
                .count();
            Ok(CensusReport::assemble(n, k, Some(sub), count_phi_n, count_phi_sub, BigUint::from(both)))
        }
        _ => Err(CensusError::UnsupportedShape { n, count: witnesses.len() }),
    }
}
