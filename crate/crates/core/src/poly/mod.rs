//! Dense univariate polynomials over exact coefficient rings.
//!
//! `Poly<C>` stores coefficients in ascending degree order. The representation
//! is canonical: the zero polynomial is the empty vector, and otherwise the
//! last coefficient is nonzero. [`IntPoly`] and [`RatPoly`] are the two
//! instantiations used throughout the crate.

mod division;
mod gcd;
mod ops;

pub use division::{divrem, exact_div};
pub use gcd::{xgcd, xgcd_multi, XgcdCertificate};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{NumAssignRef, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Coefficient ring requirements shared by [`IntPoly`] and [`RatPoly`].
pub trait Coeff:
    Clone + fmt::Debug + fmt::Display + Signed + NumAssignRef + Send + Sync
{
}

impl<T> Coeff for T where T: Clone + fmt::Debug + fmt::Display + Signed + NumAssignRef + Send + Sync {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("divisor is not monic")]
    NotMonic,
    #[error("division leaves a nonzero remainder")]
    NotDivisible,
    #[error("every input polynomial is zero")]
    AllZero,
    #[error("cannot parse coefficient {0:?}")]
    Parse(String),
}

/// Polynomial degree; the zero polynomial has degree `NegInfinity`, which
/// orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// `deg < bound`; always true for the zero polynomial.
    pub fn is_below(self, bound: usize) -> bool {
        match self {
            Degree::NegInfinity => true,
            Degree::Finite(d) => d < bound,
        }
    }
}

impl std::ops::Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A dense univariate polynomial; `coeffs[i]` is the coefficient of x^i.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Integer-coefficient polynomial.
pub type IntPoly = Poly<BigInt>;
/// Rational-coefficient polynomial; coefficients are kept in lowest terms.
pub type RatPoly = Poly<BigRational>;

impl<C: Coeff> Poly<C> {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![C::zero(); n + 1];
        coeffs[0] = -C::one();
        coeffs[n] += C::one();
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// Value at x = 1, i.e. the sum of the coefficients.
    pub fn weight(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |mut acc, c| {
            acc += c;
            acc
        })
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |mut acc, c| {
            acc *= x;
            acc += c;
            acc
        })
    }

    pub fn scale(&self, factor: &C) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c *= factor;
                    c
                })
                .collect(),
        )
    }

    /// Multiplication by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Residue modulo x^n - 1: the coefficient of x^j is the sum of all
    /// coefficients at exponents congruent to j mod n.
    pub fn reduce_mod_xn_minus_1(&self, n: usize) -> Self {
        assert!(n >= 1, "reduction modulo x^0 - 1 is undefined");
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let mut folded = vec![C::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            folded[i % n] += c;
        }
        Self::from_coeffs(folded)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Compact form: one decimal string per coefficient, index = exponent.
    pub fn to_json_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl<C: Coeff + FromStr> Poly<C> {
    pub fn from_json_coeffs<S: AsRef<str>>(coeffs: &[S]) -> Result<Self, PolyError> {
        coeffs
            .iter()
            .map(|s| {
                let s = s.as_ref();
                s.trim().parse::<C>().map_err(|_| PolyError::Parse(s.to_owned()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::from_coeffs)
    }
}

impl IntPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The 0/1 polynomial `sum_{j in support} x^j`; repeated exponents accumulate.
    pub fn from_support<I: IntoIterator<Item = usize>>(support: I) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for j in support {
            if coeffs.len() <= j {
                coeffs.resize(j + 1, BigInt::zero());
            }
            coeffs[j] += 1;
        }
        Self::from_coeffs(coeffs)
    }

    /// Every coefficient lies in `{0, ..., bound}`.
    pub fn is_bounded(&self, bound: u64) -> bool {
        let bound = BigInt::from(bound);
        self.coeffs.iter().all(|c| !c.is_negative() && *c <= bound)
    }

    pub fn is_unital(&self) -> bool {
        self.is_bounded(1)
    }

    /// Exponents with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl RatPoly {
    /// The same polynomial over the integers, if every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::from_coeffs)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn make_monic(&self) -> RatPoly {
        match self.leading_coeff() {
            None => RatPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        p.to_rational()
    }
}

/// Canonical text form `c0 + c1*x + ... + ck*x^k`, zero terms omitted, unit
/// coefficients elided, negative terms written with ` - `.
impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = magnitude.is_one();
            match i {
                0 => write!(f, "{magnitude}")?,
                _ if unit => {}
                _ => write!(f, "{magnitude}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), Degree::NegInfinity);
        assert_eq!(p(&[0, 0, 3]).degree(), Degree::Finite(2));
    }

    #[test]
    fn degree_sentinel_orders_below_everything() {
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(Degree::NegInfinity + Degree::Finite(4), Degree::NegInfinity);
        assert!(Degree::NegInfinity.is_below(0));
        assert!(!Degree::Finite(3).is_below(3));
    }

    #[test]
    fn weight_is_value_at_one() {
        assert_eq!(IntPoly::zero().weight(), BigInt::zero());
        assert_eq!(p(&[1, 0, 0, 1, 0, 0, 1]).weight(), BigInt::from(3));
        assert_eq!(p(&[2, -5, 1]).eval(&BigInt::from(2)), BigInt::from(-4));
    }

    #[test]
    fn reduce_folds_residue_classes() {
        assert_eq!(IntPoly::monomial(BigInt::one(), 15).reduce_mod_xn_minus_1(15), IntPoly::one());
        let f = p(&[1, 2, 3]);
        assert_eq!(f.reduce_mod_xn_minus_1(5), f);
        assert_eq!(p(&[1, 0, 0, 2, 5]).reduce_mod_xn_minus_1(3), p(&[3, 5]));
    }

    #[test]
    fn bounded_and_unital() {
        assert!(!p(&[2, 1]).is_bounded(1));
        assert!(p(&[2, 1]).is_bounded(2));
        assert!(!p(&[-1, 1]).is_bounded(5));
        assert!(IntPoly::zero().is_bounded(0));
        assert!(IntPoly::from_support([0, 3, 7]).is_unital());
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[-1, 1]).to_string(), "-1 + x");
        assert_eq!(p(&[1, 0, 0, 1, 0, 0, 1]).to_string(), "1 + x^3 + x^6");
        assert_eq!(p(&[0, -2, 0, 3]).to_string(), "-2*x + 3*x^3");
        assert_eq!(p(&[4, -1]).to_string(), "4 - x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        let half = RatPoly::constant(BigRational::new(1.into(), 2.into())).shift(2);
        assert_eq!(half.to_string(), "1/2*x^2");
    }

    #[test]
    fn json_coefficients_parse_back() {
        let f = p(&[3, 0, -7, 1]);
        assert_eq!(f.to_json_coeffs(), vec!["3", "0", "-7", "1"]);
        assert_eq!(IntPoly::from_json_coeffs(&f.to_json_coeffs()).unwrap(), f);
        let r = RatPoly::from_json_coeffs(&["1/2", "-3", "4/6"]).unwrap();
        assert_eq!(r.coeff(2), BigRational::new(2.into(), 3.into()));
        assert!(matches!(IntPoly::from_json_coeffs(&["x"]), Err(PolyError::Parse(_))));
    }

    #[test]
    fn rational_integer_conversion() {
        let f = p(&[1, -2, 3]);
        assert_eq!(f.to_rational().to_integer(), Some(f));
        let r = RatPoly::from_coeffs(vec![BigRational::new(1.into(), 3.into())]);
        assert_eq!(r.to_integer(), None);
        let m = RatPoly::from(&p(&[2, 4])).make_monic();
        assert!(m.is_monic());
        assert_eq!(m.coeff(0), BigRational::new(1.into(), 2.into()));
    }
}
