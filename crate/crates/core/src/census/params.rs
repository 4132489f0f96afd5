//! Counting p-uniformized bounded decompositions class by class.
//!
//! For `d = p^i q^j` with `M = d/pq` classes, a residue vector
//! `v in {0..m}^d` divisible by `Φ_d` corresponds to one choice per class
//! `s` of `B_s in {0..m}^q` and `C_s in {0..m}^p` with `min B_s = 0` and
//! `max B_s + max C_s <= m`; then `v` at the CRT pair `(i, j)` of class `s`
//! is `B_s[i] + C_s[j]`. Each `v` lifts to `prod_j C(m, v_j)` unital rows of
//! order `m d`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Largest `(m + 1)^(p + q)` enumerated per class.
pub(crate) const CLASS_LIMIT: u64 = 1 << 24;

/// Key `(sum B, sum C, classes with C != 0)`.
pub(crate) type WeightKey = (usize, usize, usize);

pub(crate) fn small_binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every vector in `{0..=cap}^len`, in lexicographic order.
pub(crate) fn vectors(len: usize, cap: u8) -> impl Iterator<Item = Vec<u8>> {
    let total = (cap as u64 + 1).pow(len as u32);
    (0..total).map(move |mut code| {
        (0..len)
            .map(|_| {
                let digit = (code % (cap as u64 + 1)) as u8;
                code /= cap as u64 + 1;
                digit
            })
            .collect()
    })
}

/// Admissible `(B, C)` for a single class.
pub(crate) fn class_choices(p: usize, q: usize, cap: u8) -> Vec<(Vec<u8>, Vec<u8>)> {
    let bs: Vec<Vec<u8>> = vectors(q, cap).filter(|b| b.contains(&0)).collect();
    let cs: Vec<Vec<u8>> = vectors(p, cap).collect();
    let mut out = Vec::new();
    for b in &bs {
        let max_b = *b.iter().max().expect("q >= 1");
        for c in &cs {
            if max_b + c.iter().max().expect("p >= 1") <= cap {
                out.push((b.clone(), c.clone()));
            }
        }
    }
    out
}

/// `prod_{i, j} C(cap, b_i + c_j)`.
pub(crate) fn lift_multiplier(b: &[u8], c: &[u8], cap: u8) -> u64 {
    b.iter()
        .flat_map(|&bi| c.iter().map(move |&cj| small_binomial(cap as u64, (bi + cj) as u64)))
        .product()
}

/// Weighted generating table of all uniformized decompositions over `classes` classes.
pub(crate) fn uniformized_counts(p: usize, q: usize, classes: usize, cap: u8) -> BTreeMap<WeightKey, BigUint> {
    let mut single: BTreeMap<WeightKey, BigUint> = BTreeMap::new();
    for (b, c) in class_choices(p, q, cap) {
        let sb = b.iter().map(|&v| v as usize).sum();
        let sc = c.iter().map(|&v| v as usize).sum();
        let nonzero = usize::from(sc > 0);
        *single.entry((sb, sc, nonzero)).or_default() += lift_multiplier(&b, &c, cap);
    }
    let mut acc = BTreeMap::from([((0, 0, 0), BigUint::one())]);
    for _ in 0..classes {
        let mut next: BTreeMap<WeightKey, BigUint> = BTreeMap::new();
        for ((sb, sc, t), w) in &acc {
            for ((db, dc, dt), v) in &single {
                *next.entry((sb + db, sc + dc, t + dt)).or_default() += w * v;
            }
        }
        acc = next;
    }
    acc
}

/// Weighted count of entries with `p * sum B + q * sum C = weight`, split by
/// the number of classes carrying a nonzero `C`.
pub(crate) fn count_by_weight(
    table: &BTreeMap<WeightKey, BigUint>,
    p: usize,
    q: usize,
    weight: usize,
) -> BTreeMap<usize, BigUint> {
    let mut out: BTreeMap<usize, BigUint> = BTreeMap::new();
    for (&(sb, sc, t), w) in table {
        if p * sb + q * sc == weight && !w.is_zero() {
            *out.entry(t).or_default() += w;
        }
    }
    out
}
