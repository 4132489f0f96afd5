//! Recurrent decompositions `f = sum_j h_{n/p_j} * G(n, n/p_j)` over the
//! distinct primes `p_j` of `n`, with `deg h_{n/p_j} < n/p_j`.
//!
//! Every `f` with `deg f < n` and `Φ_n | f` has one over Q. For two-prime
//! orders `n = p^a q^b` the decompositions form a one-parameter family
//! (shifts by `δ`), and fixing `min B_s = 0` for every coefficient group of
//! `h_{n/p}` picks a unique representative, which stays inside `{0..d}`
//! when `f` does.

mod counterexample;

pub use counterexample::{
    verify_no_unital_decomposition_105, Counterexample105, Refutation, SpecialValues,
};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

use crate::cyclo::{divides_cyclotomic, factorize, fundamental_recurrent, CyclotomicCache};
use crate::poly::{xgcd_multi, IntPoly, RatPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("order {0} has no prime factors")]
    OrderTooSmall(usize),
    #[error("polynomial of degree {degree} is too large for order {n}")]
    DegreeTooLarge { degree: usize, n: usize },
    #[error("Φ_{0} does not divide the polynomial")]
    NotDivisibleByPhiN(usize),
    #[error("order {0} does not have exactly two distinct prime factors")]
    NotTwoPrimeOrder(usize),
    #[error("coefficients are not all in {{0, ..., {0}}}")]
    CoefficientsOutOfRange(u64),
    #[error("multiplier keys do not match the primes of {0}")]
    WrongPrimes(usize),
    #[error("the decompositions reconstruct different polynomials")]
    NotSameF,
    #[error("a multiplier violates its degree bound")]
    NoDeltaExists,
}

/// Ordered map `p -> h_{n/p}` over the distinct primes of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    n: usize,
    parts: BTreeMap<usize, RatPoly>,
}

impl Decomposition {
    /// Checks that the keys are exactly the primes of `n`; degree bounds are
    /// not enforced here (see [`Decomposition::degree_bounds_hold`]).
    pub fn new(n: usize, parts: BTreeMap<usize, RatPoly>) -> Result<Self, DecompError> {
        let primes = factorize(n).map_err(|_| DecompError::OrderTooSmall(n))?.primes();
        if !parts.keys().copied().eq(primes) {
            return Err(DecompError::WrongPrimes(n));
        }
        Ok(Decomposition { n, parts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &BTreeMap<usize, RatPoly> {
        &self.parts
    }

    /// The multiplier `h_{n/p}` attached to prime `p`.
    pub fn part(&self, p: usize) -> Option<&RatPoly> {
        self.parts.get(&p)
    }

    pub fn reconstruct(&self) -> RatPoly {
        self.parts
            .iter()
            .map(|(&p, h)| h * &recurrent(self.n, self.n / p))
            .sum()
    }

    pub fn verify(&self, f: &IntPoly) -> bool {
        self.reconstruct() == f.to_rational()
    }

    pub fn degree_bounds_hold(&self) -> bool {
        self.parts.iter().all(|(&p, h)| h.degree().is_below(self.n / p))
    }

    /// Multipliers over Z, when all coefficients are integral.
    pub fn integer_parts(&self) -> Option<BTreeMap<usize, IntPoly>> {
        self.parts
            .iter()
            .map(|(&p, h)| h.to_integer().map(|h| (p, h)))
            .collect()
    }

    pub fn is_bounded(&self, bound: u64) -> bool {
        self.integer_parts()
            .is_some_and(|parts| parts.values().all(|h| h.is_bounded(bound)))
    }

    pub fn is_unital(&self) -> bool {
        self.is_bounded(1)
    }

    /// `min B_s = 0` for every group of `h_{n/p}`; false unless `n` has two primes.
    pub fn is_p_uniformized(&self) -> bool {
        let Ok(order) = TwoPrimeOrder::new(self.n) else {
            return false;
        };
        group_minima(&self.parts[&order.p], &order)
            .iter()
            .all(num_traits::Zero::is_zero)
    }
}

/// `n = p^a q^b` with `p < q`; `block = n/(p q)` is the number of groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoPrimeOrder {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub block: usize,
}

impl TwoPrimeOrder {
    pub fn new(n: usize) -> Result<Self, DecompError> {
        let primes = factorize(n)
            .map_err(|_| DecompError::NotTwoPrimeOrder(n))?
            .primes();
        match primes[..] {
            [p, q] => Ok(TwoPrimeOrder { n, p, q, block: n / (p * q) }),
            _ => Err(DecompError::NotTwoPrimeOrder(n)),
        }
    }

    /// `G(n/p, n/pq) = sum_{l<q} x^(l n/pq)`.
    pub fn shift_p(&self) -> RatPoly {
        recurrent(self.n / self.p, self.block)
    }

    /// `G(n/q, n/pq) = sum_{l<p} x^(l n/pq)`.
    pub fn shift_q(&self) -> RatPoly {
        recurrent(self.n / self.q, self.block)
    }
}

fn recurrent(n: usize, r: usize) -> RatPoly {
    fundamental_recurrent(n, r)
        .expect("r is a proper divisor of n")
        .to_rational()
}

/// `e_s = min B_s`, where `B_s = { b_(l n/pq + s) : l < q }` are the coefficients of `h_{n/p}`.
fn group_minima(h: &RatPoly, order: &TwoPrimeOrder) -> Vec<BigRational> {
    (0..order.block)
        .map(|s| {
            (0..order.q)
                .map(|l| h.coeff(l * order.block + s))
                .min()
                .expect("q >= 2")
        })
        .collect()
}

fn check_input(f: &IntPoly, n: usize, cache: &CyclotomicCache) -> Result<(), DecompError> {
    if n < 2 {
        return Err(DecompError::OrderTooSmall(n));
    }
    if let Some(degree) = f.degree().finite().filter(|&d| d >= n) {
        return Err(DecompError::DegreeTooLarge { degree, n });
    }
    if !divides_cyclotomic(f, n, cache) {
        return Err(DecompError::NotDivisibleByPhiN(n));
    }
    Ok(())
}

/// A decomposition over Q: Bezout cofactors of the `G(n, n/p_j)` express
/// `Φ_n`, they are scaled by `f / Φ_n`, and each is reduced modulo
/// `x^(n/p_j) - 1` to meet its degree bound.
pub fn decompose_rational(
    f: &IntPoly,
    n: usize,
    cache: &CyclotomicCache,
) -> Result<Decomposition, DecompError> {
    check_input(f, n, cache)?;
    let primes = factorize(n).expect("n >= 2").primes();
    let gs: Vec<RatPoly> = primes.iter().map(|&p| recurrent(n, n / p)).collect();
    let cert = xgcd_multi(&gs).expect("fundamental recurrent polynomials are nonzero");
    let phi = cache.get(n);
    debug_assert_eq!(cert.gcd, phi.to_rational());
    let quotient = f
        .exact_div(&phi)
        .expect("Φ_n divides f")
        .to_rational();
    let parts = primes
        .iter()
        .zip(&cert.cofactors)
        .map(|(&p, g)| (p, (&quotient * g).reduce_mod_xn_minus_1(n / p)))
        .collect();
    let dec = Decomposition { n, parts };
    debug_assert!(dec.verify(f));
    Ok(dec)
}

/// Moves `g = sum_s (min B_s) x^s` from `h_{n/p}` to `h_{n/q}`:
/// `h_{n/p} - g G(n/p, n/pq)` and `h_{n/q} + g G(n/q, n/pq)`.
pub fn uniformize_p(dec: &Decomposition) -> Result<Decomposition, DecompError> {
    let order = TwoPrimeOrder::new(dec.n)?;
    let g = RatPoly::from_coeffs(group_minima(&dec.parts[&order.p], &order));
    Ok(shift(dec, &order, &g))
}

/// `(h_{n/p} - δ G(n/p, n/pq), h_{n/q} + δ G(n/q, n/pq))`, another
/// decomposition of the same polynomial.
pub fn shift_by_delta(dec: &Decomposition, delta: &RatPoly) -> Result<Decomposition, DecompError> {
    let order = TwoPrimeOrder::new(dec.n)?;
    Ok(shift(dec, &order, delta))
}

fn shift(dec: &Decomposition, order: &TwoPrimeOrder, delta: &RatPoly) -> Decomposition {
    let mut parts = dec.parts.clone();
    let hp = &parts[&order.p] - &(delta * &order.shift_p());
    let hq = &parts[&order.q] + &(delta * &order.shift_q());
    parts.insert(order.p, hp);
    parts.insert(order.q, hq);
    Decomposition { n: dec.n, parts }
}

/// Decomposition with both multipliers in `Z_[0,d][x]` for `f` in
/// `Z_[0,d][x]` and two-prime `n`: the p-uniformization of any rational one.
pub fn decompose_bounded(
    f: &IntPoly,
    n: usize,
    bound: u64,
    cache: &CyclotomicCache,
) -> Result<Decomposition, DecompError> {
    TwoPrimeOrder::new(n)?;
    if !f.is_bounded(bound) {
        return Err(DecompError::CoefficientsOutOfRange(bound));
    }
    let dec = uniformize_p(&decompose_rational(f, n, cache)?)?;
    assert!(
        dec.is_bounded(bound),
        "uniformized decomposition of a bounded polynomial left the bound"
    );
    Ok(dec)
}

/// The `δ` with `h'_{n/p} = h_{n/p} - δ G(n/p, n/pq)` and
/// `h'_{n/q} = h_{n/q} + δ G(n/q, n/pq)`, where `h` is `first` and `h'` is `second`.
pub fn ambiguity_delta(first: &Decomposition, second: &Decomposition) -> Result<RatPoly, DecompError> {
    if first.n != second.n {
        return Err(DecompError::NotSameF);
    }
    let order = TwoPrimeOrder::new(first.n)?;
    if !first.degree_bounds_hold() || !second.degree_bounds_hold() {
        return Err(DecompError::NoDeltaExists);
    }
    if first.reconstruct() != second.reconstruct() {
        return Err(DecompError::NotSameF);
    }
    let diff_p = &first.parts[&order.p] - &second.parts[&order.p];
    let delta = diff_p
        .div_exact_rational(&order.shift_p())
        .map_err(|_| DecompError::NotSameF)?;
    let diff_q = &second.parts[&order.q] - &first.parts[&order.q];
    if diff_q != &delta * &order.shift_q() {
        return Err(DecompError::NotSameF);
    }
    debug_assert!(delta.degree().is_below(order.block));
    Ok(delta)
}

/// Coefficients of `f`, `h_{n/p}`, `h_{n/q}` at positions `l n/pq + s`,
/// stored as `(position, value)` in increasing `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientGrouping {
    pub s: usize,
    /// `p q` entries of `f`.
    pub a: Vec<(usize, BigRational)>,
    /// `q` entries of `h_{n/p}`.
    pub b: Vec<(usize, BigRational)>,
    /// `p` entries of `h_{n/q}`.
    pub c: Vec<(usize, BigRational)>,
}

impl CoefficientGrouping {
    /// `a_(l1) = b_(l1 mod q) + c_(l1 mod p)` for every `l1 < p q`.
    pub fn sum_law_holds(&self) -> bool {
        let (q, p) = (self.b.len(), self.c.len());
        self.a
            .iter()
            .enumerate()
            .all(|(l1, (_, a))| *a == &self.b[l1 % q].1 + &self.c[l1 % p].1)
    }

    pub fn min_b(&self) -> BigRational {
        self.b.iter().map(|(_, v)| v.clone()).min().expect("q >= 2")
    }

    /// Every value of `B_s` and `C_s` lies in `{0..bound}`.
    pub fn bounded_by(&self, bound: u64) -> bool {
        let bound = BigRational::from_integer(BigInt::from(bound));
        self.b
            .iter()
            .chain(&self.c)
            .all(|(_, v)| v.is_integer() && !v.is_negative() && *v <= bound)
    }
}

/// The `n/pq` coefficient groups of a two-prime decomposition of `f`.
pub fn coefficient_groupings(
    f: &IntPoly,
    dec: &Decomposition,
) -> Result<Vec<CoefficientGrouping>, DecompError> {
    let order = TwoPrimeOrder::new(dec.n)?;
    let f = f.to_rational();
    let (hp, hq) = (&dec.parts[&order.p], &dec.parts[&order.q]);
    let at = |poly: &RatPoly, count: usize, s: usize| -> Vec<(usize, BigRational)> {
        (0..count)
            .map(|l| {
                let pos = l * order.block + s;
                (pos, poly.coeff(pos))
            })
            .collect()
    };
    Ok((0..order.block)
        .map(|s| CoefficientGrouping {
            s,
            a: at(&f, order.p * order.q, s),
            b: at(hp, order.q, s),
            c: at(hq, order.p, s),
        })
        .collect())
}
