//! Cyclotomic polynomials, fundamental recurrent polynomials and divisor
//! machinery.
//!
//! `Φ_n` is obtained by exactly dividing `x^n - 1` by every `Φ_d` with `d | n`,
//! `d < n`; the results are memoised in an explicit [`CyclotomicCache`].

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("{r} is not a proper divisor of {n}")]
    NotProperDivisor { n: usize, r: usize },
    #[error("{0} is out of range (need n >= 2)")]
    OutOfRange(usize),
}

/// Memo table `n -> Φ_n`. Readers share the lock; a missing entry is computed
/// outside the lock and then inserted, so two threads may race to compute the
/// same polynomial, with identical results.
#[derive(Debug, Default)]
pub struct CyclotomicCache {
    memo: RwLock<HashMap<usize, Arc<IntPoly>>>,
}

impl CyclotomicCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: usize) -> Arc<IntPoly> {
        assert!(n >= 1, "cyclotomic polynomials are indexed by n >= 1");
        if let Some(phi) = self.memo.read().expect("cache lock poisoned").get(&n) {
            return Arc::clone(phi);
        }
        let phi = Arc::new(self.compute(n));
        let mut memo = self.memo.write().expect("cache lock poisoned");
        Arc::clone(memo.entry(n).or_insert(phi))
    }

    fn compute(&self, n: usize) -> IntPoly {
        divisors(n)
            .into_iter()
            .filter(|&d| d < n)
            .fold(IntPoly::x_pow_minus_one(n), |acc, d| {
                acc.exact_div(&self.get(d))
                    .expect("Φ_d divides x^n - 1 for every d | n")
            })
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The n-th cyclotomic polynomial.
pub fn cyclotomic(n: usize, cache: &CyclotomicCache) -> Arc<IntPoly> {
    cache.get(n)
}

/// `G(n, r; x) = (x^n - 1)/(x^r - 1) = 1 + x^r + ... + x^(n-r)` for a proper divisor `r` of `n`.
pub fn fundamental_recurrent(n: usize, r: usize) -> Result<IntPoly, CycloError> {
    if r == 0 || r >= n || !n.is_multiple_of(r) {
        return Err(CycloError::NotProperDivisor { n, r });
    }
    Ok(IntPoly::from_support((0..n / r).map(|i| i * r)))
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime-power factorization with ascending primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredOrder {
    pub n: usize,
    pub prime_powers: Vec<(usize, u32)>,
}

impl FactoredOrder {
    pub fn primes(&self) -> Vec<usize> {
        self.prime_powers.iter().map(|&(p, _)| p).collect()
    }

    pub fn distinct_primes(&self) -> usize {
        self.prime_powers.len()
    }

    /// Euler's totient from the factorization.
    pub fn totient(&self) -> usize {
        self.prime_powers
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }
}

/// Trial-division factorization of `n >= 2`.
pub fn factorize(n: usize) -> Result<FactoredOrder, CycloError> {
    if n < 2 {
        return Err(CycloError::OutOfRange(n));
    }
    let mut rest = n;
    let mut prime_powers = Vec::new();
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            prime_powers.push((p, e));
        }
        p += 1;
    }
    if rest > 1 {
        prime_powers.push((rest, 1));
    }
    Ok(FactoredOrder { n, prime_powers })
}

/// Euler's totient; `totient(1) = 1`.
pub fn totient(n: usize) -> usize {
    match factorize(n) {
        Ok(f) => f.totient(),
        Err(_) => n,
    }
}

/// Whether `Φ_d` divides `f`.
pub fn divides_cyclotomic(f: &IntPoly, d: usize, cache: &CyclotomicCache) -> bool {
    f.rem_monic(&cache.get(d))
        .expect("cyclotomic polynomials are monic")
        .is_zero()
}

/// `{ d : d | n and Φ_d | f }`.
pub fn cyclotomic_divisors_of(f: &IntPoly, n: usize, cache: &CyclotomicCache) -> BTreeSet<usize> {
    divisors(n)
        .into_iter()
        .filter(|&d| divides_cyclotomic(f, d, cache))
        .collect()
}
