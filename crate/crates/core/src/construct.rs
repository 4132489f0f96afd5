//! Classification of `n = 2k + 1` and explicit singular unital rows of
//! weight `k` when `n` has at least three prime factors.

use std::fmt;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::circulant::CirculantSpec;
use crate::cyclo::{factorize, fundamental_recurrent};
use crate::poly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    PrimePower { p: usize, e: u32 },
    TwoPrimes { p: usize, q: usize },
    /// `p < q` the two smallest distinct primes, `r = n / (p q) >= p`.
    Composite { p: usize, q: usize, r: usize },
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OrderKind::PrimePower { p, e } => write!(f, "PrimePower({p},{e})"),
            OrderKind::TwoPrimes { p, q } => write!(f, "TwoPrimes({p},{q})"),
            OrderKind::Composite { p, q, r } => write!(f, "Composite({p},{q},{r})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderClass {
    pub n: usize,
    pub kind: OrderKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("every unital circulant of order {n} with weight {k} is nonsingular ({kind})")]
    NoSingularGuarantee { k: usize, n: usize, kind: OrderKind },
}

pub fn classify(k: usize) -> Result<OrderClass, ConstructError> {
    if k == 0 {
        return Err(ConstructError::ZeroK);
    }
    let n = 2 * k + 1;
    let factored = factorize(n).expect("n >= 3");
    let kind = match factored.prime_powers[..] {
        [(p, e)] => OrderKind::PrimePower { p, e },
        [(p, 1), (q, 1)] => OrderKind::TwoPrimes { p, q },
        [(p, _), (q, _), ..] => OrderKind::Composite { p, q, r: n / (p * q) },
        [] => unreachable!("n >= 3 has a prime factor"),
    };
    Ok(OrderClass { n, kind })
}

/// Selection of the `a` exponents placed against `G(pqr, qr)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExponentChoice {
    #[default]
    Smallest,
    Seeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub k: usize,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub a: usize,
    pub b: usize,
    /// Ascending; all below `q r` and none a multiple of `r`.
    pub r_a: Vec<usize>,
    pub spec: CirculantSpec,
}

impl Construction {
    pub fn n(&self) -> usize {
        self.spec.n()
    }
}

fn composite_parts(k: usize) -> Result<(usize, usize, usize), ConstructError> {
    let class = classify(k)?;
    match class.kind {
        OrderKind::Composite { p, q, r } => Ok((p, q, r)),
        kind => Err(ConstructError::NoSingularGuarantee { k, n: class.n, kind }),
    }
}

/// The unique `(a, b)` with `a p + b q = k`, `a >= 1` and `1 <= b <= p - 1`.
pub fn solve_weights(k: usize, p: usize, q: usize) -> (usize, usize) {
    let solutions: Vec<(usize, usize)> = (1..p)
        .filter(|&b| b * q < k && (k - b * q).is_multiple_of(p))
        .map(|b| ((k - b * q) / p, b))
        .collect();
    assert_eq!(solutions.len(), 1, "k={k} p={p} q={q}: {solutions:?}");
    solutions[0]
}

/// `q r - q - a`: eligible exponents left over after choosing `R_a`.
pub fn feasibility_margin(k: usize) -> Result<i64, ConstructError> {
    let (p, q, r) = composite_parts(k)?;
    let (a, _) = solve_weights(k, p, q);
    Ok((q * r) as i64 - q as i64 - a as i64)
}

pub fn construct_singular(k: usize) -> Result<Construction, ConstructError> {
    construct_singular_with(k, ExponentChoice::Smallest)
}

/// `f = (1 + x^r + ... + x^((b-1) r)) G(pqr, pr) + sum_{j in R_a} x^j G(pqr, qr)`.
/// The first sum covers `b q` multiples of `r`, the second `a p` non-multiples.
pub fn construct_singular_with(k: usize, choice: ExponentChoice) -> Result<Construction, ConstructError> {
    let (p, q, r) = composite_parts(k)?;
    let n = p * q * r;
    let (a, b) = solve_weights(k, p, q);
    let eligible: Vec<usize> = (0..q * r).filter(|j| j % r != 0).collect();
    assert!(a <= eligible.len(), "k={k}: {a} exponents requested, {} eligible", eligible.len());
    let mut r_a: Vec<usize> = match choice {
        ExponentChoice::Smallest => eligible[..a].to_vec(),
        ExponentChoice::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            sample(&mut rng, eligible.len(), a).into_iter().map(|i| eligible[i]).collect()
        }
    };
    r_a.sort_unstable();

    let g_pr = fundamental_recurrent(n, p * r).expect("pr divides n");
    let g_qr = fundamental_recurrent(n, q * r).expect("qr divides n");
    let row = &IntPoly::from_support((0..b).map(|t| t * r)) * &g_pr
        + &IntPoly::from_support(r_a.iter().copied()) * &g_qr;
    assert!(row.is_unital(), "k={k}: construction overlaps");
    let spec = CirculantSpec::new(n, row).expect("degree below n");
    Ok(Construction { k, p, q, r, a, b, r_a, spec })
}
