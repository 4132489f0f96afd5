//! Exact determinants. Two independent routes: the resultant of `x^n - 1`
//! and the row polynomial, and fraction-free elimination on the explicit
//! matrix. Neither is used to decide singularity; they are oracles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{CirculantError, CirculantSpec};
use crate::poly::{Degree, RatPoly};

pub const DEFAULT_ORACLE_BOUND: usize = 64;

/// `Res(a, b) = lc(a)^deg(b) * prod_{a(α)=0} b(α)`, by Euclidean remainders over Q.
fn resultant(a: &RatPoly, b: &RatPoly) -> BigRational {
    let mut acc = BigRational::one();
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        let (da, db) = match (a.degree(), b.degree()) {
            (Degree::Finite(da), Degree::Finite(db)) => (da, db),
            _ => return BigRational::zero(),
        };
        if da == 0 {
            return acc * pow(a.leading_coeff().unwrap(), db);
        }
        if db == 0 {
            return acc * pow(b.leading_coeff().unwrap(), da);
        }
        // Res(a, b) = (-1)^(da*db) * lc(b)^(da - dr) * Res(b, a mod b)
        let (_, r) = a.divrem(&b).expect("b is nonzero");
        let Degree::Finite(dr) = r.degree() else {
            return BigRational::zero();
        };
        if da * db % 2 == 1 {
            acc = -acc;
        }
        acc *= pow(b.leading_coeff().unwrap(), da - dr);
        (a, b) = (b, r);
    }
}

fn pow(base: &BigRational, exp: usize) -> BigRational {
    num_traits::pow(base.clone(), exp)
}

/// `det C = prod_j f(ω_j) = Res(x^n - 1, f)`.
pub fn det_resultant(spec: &CirculantSpec) -> BigInt {
    let modulus = RatPoly::x_pow_minus_one(spec.n());
    let value = resultant(&modulus, &spec.row().to_rational());
    assert!(value.is_integer(), "resultant of integer polynomials is an integer");
    value.to_integer()
}

/// Bareiss fraction-free elimination on the materialised matrix, `n <= 64`.
pub fn det_elimination(spec: &CirculantSpec) -> Result<BigInt, CirculantError> {
    det_elimination_bounded(spec, DEFAULT_ORACLE_BOUND)
}

pub fn det_elimination_bounded(spec: &CirculantSpec, bound: usize) -> Result<BigInt, CirculantError> {
    if spec.n() > bound {
        return Err(CirculantError::OracleBoundExceeded { n: spec.n(), bound });
    }
    Ok(bareiss(spec.matrix()))
}

fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, pivot);
            negate = !negate;
        }
        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Cofactor expansion; exponential, test sizes only.
#[cfg(test)]
pub(crate) fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    (0..n)
        .map(|col| {
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &m[0][col] * det_cofactor(&minor);
            if col % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}
