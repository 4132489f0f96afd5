//! Machine-integer singularity checks for many rows of the same order.
//!
//! For every `d | n` the table stores the exact residues of `x^j mod Φ_d`
//! (`j < n`) as `i64` vectors of length `φ(d)`. The residue of a row is the
//! sum of the residues of its monomials, and `Φ_d` divides the row iff that
//! block is zero. The blocks together have width `sum_{d|n} φ(d) = n`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;

use crate::cyclo::{divisors, CyclotomicCache};
use crate::poly::IntPoly;

#[derive(Debug, Clone)]
pub struct ResidueTable {
    n: usize,
    /// `(d, start, len)` per divisor, ascending `d`.
    blocks: Vec<(usize, usize, usize)>,
    /// Row-major `n x n`: row `j` is the concatenated residues of `x^j`.
    residues: Vec<i64>,
}

impl ResidueTable {
    pub fn new(n: usize, cache: &CyclotomicCache) -> Self {
        assert!(n >= 1);
        let mut blocks = Vec::new();
        let mut start = 0;
        for d in divisors(n) {
            let len = cache.get(d).degree().finite().expect("Φ_d is nonzero");
            blocks.push((d, start, len));
            start += len;
        }
        debug_assert_eq!(start, n);
        let mut residues = vec![0i64; n * n];
        for &(d, start, len) in &blocks {
            let phi = cache.get(d);
            for j in 0..n {
                let r = IntPoly::monomial(BigInt::one(), j % d)
                    .rem_monic(&phi)
                    .expect("Φ_d is monic");
                let r = r.to_i64s().expect("residue coefficients fit in i64");
                let row = &mut residues[j * n + start..j * n + start + len];
                row[..r.len()].copy_from_slice(&r);
            }
        }
        ResidueTable { n, blocks, residues }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Residues of `x^j` across all divisor blocks.
    pub fn row(&self, j: usize) -> &[i64] {
        &self.residues[j * self.n..(j + 1) * self.n]
    }

    pub fn add_monomial(&self, acc: &mut [i64], j: usize) {
        for (a, r) in acc.iter_mut().zip(self.row(j)) {
            *a += r;
        }
    }

    pub fn remove_monomial(&self, acc: &mut [i64], j: usize) {
        for (a, r) in acc.iter_mut().zip(self.row(j)) {
            *a -= r;
        }
    }

    /// Divisors `d` whose block of `acc` vanishes, i.e. `Φ_d | f`.
    pub fn vanishing_divisors<'a>(&'a self, acc: &'a [i64]) -> impl Iterator<Item = usize> + 'a {
        self.blocks
            .iter()
            .filter(move |&&(_, start, len)| acc[start..start + len].iter().all(|&v| v == 0))
            .map(|&(d, _, _)| d)
    }

    pub fn any_vanishing(&self, acc: &[i64]) -> bool {
        self.vanishing_divisors(acc).next().is_some()
    }

    pub fn accumulate_support(&self, support: &[usize]) -> Vec<i64> {
        let mut acc = vec![0i64; self.n];
        for &j in support {
            self.add_monomial(&mut acc, j);
        }
        acc
    }

    /// `{ d | n : Φ_d divides sum_{j in support} x^j }`.
    pub fn support_witnesses(&self, support: &[usize]) -> BTreeSet<usize> {
        let acc = self.accumulate_support(support);
        self.vanishing_divisors(&acc).collect()
    }

    pub fn is_singular_support(&self, support: &[usize]) -> bool {
        let acc = self.accumulate_support(support);
        self.any_vanishing(&acc)
    }
}
