//! Circulant matrices `C(a_0, ..., a_{n-1})` described by their first row.
//!
//! Row `i` is the first row rotated right `i` times, so the entry at
//! `(i, j)` is `a_{(j - i) mod n}`. The matrix is singular exactly when its
//! associated polynomial `f = sum a_j x^j` shares a root with `x^n - 1`,
//! i.e. when some `Φ_d` with `d | n` divides `f`.

mod det;
mod exhaustive;
mod fast;

pub use det::{det_elimination, det_elimination_bounded, det_resultant, DEFAULT_ORACLE_BOUND};
pub use exhaustive::{exhaustive_weight_census, ExhaustiveReport};
pub use fast::ResidueTable;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use thiserror::Error;

use crate::cyclo::{cyclotomic_divisors_of, divisors, CyclotomicCache};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CirculantError {
    #[error("order must be at least 1")]
    EmptyOrder,
    #[error("index {index} is outside [0, {n})")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("index {0} appears more than once in the support")]
    DuplicateIndex(usize),
    #[error("row polynomial has degree {degree}, needs < {n}")]
    RowTooLong { degree: usize, n: usize },
    #[error("order {n} exceeds the elimination oracle bound {bound}")]
    OracleBoundExceeded { n: usize, bound: usize },
}

/// Order `n` plus the associated polynomial of the first row (`deg < n`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    n: usize,
    row: IntPoly,
}

impl CirculantSpec {
    pub fn new(n: usize, row: IntPoly) -> Result<Self, CirculantError> {
        if n == 0 {
            return Err(CirculantError::EmptyOrder);
        }
        if let Some(degree) = row.degree().finite().filter(|&d| d >= n) {
            return Err(CirculantError::RowTooLong { degree, n });
        }
        Ok(CirculantSpec { n, row })
    }

    /// Unital spec with `a_j = 1` exactly for `j` in `support`.
    pub fn from_support(n: usize, support: &[usize]) -> Result<Self, CirculantError> {
        if n == 0 {
            return Err(CirculantError::EmptyOrder);
        }
        let mut seen = vec![false; n];
        for &index in support {
            if index >= n {
                return Err(CirculantError::IndexOutOfRange { index, n });
            }
            if std::mem::replace(&mut seen[index], true) {
                return Err(CirculantError::DuplicateIndex(index));
            }
        }
        Ok(CirculantSpec {
            n,
            row: IntPoly::from_support(support.iter().copied()),
        })
    }

    pub fn from_row_i64(row: &[i64]) -> Result<Self, CirculantError> {
        Self::new(row.len(), IntPoly::from_i64s(row))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The associated polynomial.
    pub fn row(&self) -> &IntPoly {
        &self.row
    }

    pub fn is_unital(&self) -> bool {
        self.row.is_unital()
    }

    pub fn weight(&self) -> BigInt {
        self.row.weight()
    }

    /// Exponents carrying a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        self.row.support()
    }

    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        self.row.coeff((j + self.n - i % self.n) % self.n)
    }

    /// The explicit `n x n` matrix.
    pub fn matrix(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }
}

/// `singular` iff `witnesses` (the `d | n` with `Φ_d | f`) is nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityVerdict {
    pub singular: bool,
    pub witnesses: BTreeSet<usize>,
}

impl SingularityVerdict {
    pub fn from_witnesses(witnesses: BTreeSet<usize>) -> Self {
        SingularityVerdict {
            singular: !witnesses.is_empty(),
            witnesses,
        }
    }
}

pub fn is_singular(spec: &CirculantSpec, cache: &CyclotomicCache) -> SingularityVerdict {
    SingularityVerdict::from_witnesses(cyclotomic_divisors_of(spec.row(), spec.n(), cache))
}

/// Proper divisors `r` of `n` for which the first row is constant on residue
/// classes mod `r`. Empty iff the spec is non-recurrent.
pub fn recurrence_divisors(spec: &CirculantSpec) -> BTreeSet<usize> {
    let row: Vec<BigInt> = (0..spec.n).map(|j| spec.row.coeff(j)).collect();
    divisors(spec.n)
        .into_iter()
        .filter(|&r| r < spec.n)
        .filter(|&r| (r..spec.n).all(|j| row[j] == row[j % r]))
        .collect()
}
