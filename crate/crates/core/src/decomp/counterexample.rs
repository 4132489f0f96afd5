//! A unital multiple of `Φ_105` with no unital recurrent decomposition.

use std::collections::BTreeMap;

use super::Decomposition;
use crate::cyclo::{divides_cyclotomic, fundamental_recurrent, CyclotomicCache};
use crate::poly::IntPoly;

const N: usize = 105;
/// Multiplier indices `105/p` for `p = 7, 5, 3`.
const INDICES: [usize; 3] = [15, 21, 35];
const SUPPORT: [usize; 16] = [5, 6, 10, 25, 27, 35, 40, 48, 50, 65, 69, 70, 80, 85, 95, 100];

fn f105() -> IntPoly {
    IntPoly::from_support(SUPPORT)
}

/// `f mod Φ_d` and `G(105, r) mod Φ_d` for each multiplier index `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialValues {
    pub d: usize,
    pub f_residue: IntPoly,
    pub recurrent_residues: BTreeMap<usize, IntPoly>,
}

/// One solution of `16 = 7 h_15(1) + 5 h_21(1) + 3 h_35(1)` and why it fails:
/// a multiplier of weight zero is zero, so `Φ_{r0}` divides the remaining
/// two recurrent polynomials and hence `f`, but it does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    /// `r -> h_r(1)`.
    pub weights: BTreeMap<usize, u64>,
    pub vanishing_index: usize,
    /// `Φ_{r0}` divides `G(105, r)` for both `r != r0`.
    pub others_divisible: bool,
    /// `f mod Φ_{r0}`, nonzero.
    pub f_residue: IntPoly,
}

impl Refutation {
    pub fn holds(&self) -> bool {
        self.others_divisible && !self.f_residue.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample105 {
    pub f: IntPoly,
    /// `(1 + x^5 + x^10 + x^15 + x^25 + x^30) G(105, 35) + x^6 G(105, 21) - G(105, 15)`,
    /// keyed by prime.
    pub integer_decomposition: Decomposition,
    /// The decomposition above reconstructs `f`.
    pub identity_holds: bool,
    pub divisible_by_phi_n: bool,
    pub special_values: Vec<SpecialValues>,
    pub refutations: Vec<Refutation>,
    /// Unital multiplier triples meeting the weight equation.
    pub candidates_checked: u64,
    /// Of those, the ones reconstructing `f`; zero.
    pub unital_decompositions: u64,
}

impl Counterexample105 {
    /// Weight solutions as `(h_15(1), h_21(1), h_35(1))`.
    pub fn weight_tuples(&self) -> Vec<(u64, u64, u64)> {
        self.refutations
            .iter()
            .map(|r| (r.weights[&15], r.weights[&21], r.weights[&35]))
            .collect()
    }

    pub fn verified(&self) -> bool {
        self.f.is_unital()
            && self.identity_holds
            && self.divisible_by_phi_n
            && !self.refutations.is_empty()
            && self.refutations.iter().all(Refutation::holds)
            && self.candidates_checked > 0
            && self.unital_decompositions == 0
    }
}

fn recurrent(r: usize) -> IntPoly {
    fundamental_recurrent(N, r).expect("r divides 105")
}

/// Nonnegative weights `w_r <= r` with `sum (105/r) w_r = f(1)`.
fn weight_solutions(total: u64) -> Vec<BTreeMap<usize, u64>> {
    let mut out = Vec::new();
    let mut current = BTreeMap::new();
    fn go(i: usize, left: u64, current: &mut BTreeMap<usize, u64>, out: &mut Vec<BTreeMap<usize, u64>>) {
        if i == INDICES.len() {
            if left == 0 {
                out.push(current.clone());
            }
            return;
        }
        let r = INDICES[i];
        let p = (N / r) as u64;
        for w in 0..=(left / p).min(r as u64) {
            current.insert(r, w);
            go(i + 1, left - w * p, current, out);
        }
        current.remove(&r);
    }
    go(0, total, &mut current, &mut out);
    out
}

/// Masks of `h G(105, r)` for every unital `h` of weight `w` and degree `< r`.
fn recurrent_masks(r: usize, w: usize) -> Vec<u128> {
    fn subsets(start: usize, r: usize, w: usize, acc: u128, out: &mut Vec<u128>) {
        if w == 0 {
            out.push(acc);
            return;
        }
        for j in start..=r - w {
            subsets(j + 1, r, w - 1, acc | 1 << j, out);
        }
    }
    let mut base = Vec::new();
    subsets(0, r, w, 0, &mut base);
    base.into_iter()
        .map(|m| (0..N / r).fold(0u128, |acc, t| acc | m << (t * r)))
        .collect()
}

/// Sum of unital `h_r G(105, r)` is unital and equals `f` iff the masks are
/// disjoint and their union is `f`.
fn exhaustive_unital_search(target: u128, solutions: &[BTreeMap<usize, u64>]) -> (u64, u64) {
    let mut checked = 0;
    let mut found = 0;
    for weights in solutions {
        let families: Vec<Vec<u128>> = INDICES
            .iter()
            .map(|&r| recurrent_masks(r, weights[&r] as usize))
            .collect();
        for &a in &families[0] {
            for &b in &families[1] {
                for &c in &families[2] {
                    checked += 1;
                    if a & b == 0 && a & c == 0 && b & c == 0 && a | b | c == target {
                        found += 1;
                    }
                }
            }
        }
    }
    (checked, found)
}

/// Evidence that `f = x^5 + x^6 + ... + x^100` (16 monomials) is a unital
/// multiple of `Φ_105` whose every recurrent decomposition has a non-unital
/// multiplier.
pub fn verify_no_unital_decomposition_105(cache: &CyclotomicCache) -> Counterexample105 {
    let f = f105();
    let integer_decomposition = Decomposition::new(
        N,
        BTreeMap::from([
            (3, IntPoly::from_support([0, 5, 10, 15, 25, 30]).to_rational()),
            (5, IntPoly::from_support([6]).to_rational()),
            (7, IntPoly::from_i64s(&[-1]).to_rational()),
        ]),
    )
    .expect("keys are the primes of 105");
    let identity_holds = integer_decomposition.verify(&f);
    let divisible_by_phi_n = divides_cyclotomic(&f, N, cache);

    let residue = |g: &IntPoly, d: usize| g.rem_monic(&cache.get(d)).expect("Φ_d is monic");
    let special_values = INDICES
        .iter()
        .rev()
        .map(|&d| SpecialValues {
            d,
            f_residue: residue(&f, d),
            recurrent_residues: INDICES.iter().map(|&r| (r, residue(&recurrent(r), d))).collect(),
        })
        .collect();

    let total: u64 = f.weight().try_into().expect("small weight");
    let solutions = weight_solutions(total);
    let refutations = solutions
        .iter()
        .map(|weights| {
            let vanishing_index = *weights
                .iter()
                .find(|(_, &w)| w == 0)
                .expect("every solution has a zero weight")
                .0;
            let others_divisible = INDICES
                .iter()
                .filter(|&&r| r != vanishing_index)
                .all(|&r| divides_cyclotomic(&recurrent(r), vanishing_index, cache));
            Refutation {
                weights: weights.clone(),
                vanishing_index,
                others_divisible,
                f_residue: residue(&f, vanishing_index),
            }
        })
        .collect();

    let target = SUPPORT.iter().fold(0u128, |acc, &j| acc | 1 << j);
    let (candidates_checked, unital_decompositions) = exhaustive_unital_search(target, &solutions);

    Counterexample105 {
        f,
        integer_decomposition,
        identity_holds,
        divisible_by_phi_n,
        special_values,
        refutations,
        candidates_checked,
        unital_decompositions,
    }
}
