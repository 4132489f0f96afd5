use super::{Coeff, IntPoly, Poly, PolyError, RatPoly};

/// Schoolbook long division. `quotient_coeff` maps the current top
/// coefficient of the running remainder to the next quotient coefficient.
fn long_division<C: Coeff>(
    dividend: &Poly<C>,
    divisor: &Poly<C>,
    quotient_coeff: impl Fn(&C) -> C,
) -> (Poly<C>, Poly<C>) {
    let db = divisor.coeffs.len() - 1;
    if dividend.coeffs.len() <= db {
        return (Poly::zero(), dividend.clone());
    }
    let mut rem = dividend.coeffs.clone();
    let mut quot = vec![C::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        if rem[i + db].is_zero() {
            continue;
        }
        let q = quotient_coeff(&rem[i + db]);
        for (j, bj) in divisor.coeffs.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let mut t = q.clone();
            t *= bj;
            rem[i + j] -= t;
        }
        quot[i] = q;
    }
    rem.truncate(db);
    (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
}

impl<C: Coeff> Poly<C> {
    /// Division by a monic polynomial; valid over any coefficient ring.
    pub fn divrem_monic(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let lc = divisor.leading_coeff().ok_or(PolyError::DivisionByZeroPoly)?;
        if !lc.is_one() {
            return Err(PolyError::NotMonic);
        }
        Ok(long_division(self, divisor, Clone::clone))
    }

    pub fn rem_monic(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.divrem_monic(divisor).map(|(_, r)| r)
    }

    /// Quotient by a monic divisor that must divide exactly.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.divrem_monic(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible)
        }
    }
}

impl RatPoly {
    /// Euclidean division over the rationals: `self = q * divisor + r`, `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly), PolyError> {
        let inv = divisor
            .leading_coeff()
            .ok_or(PolyError::DivisionByZeroPoly)?
            .recip();
        Ok(long_division(self, divisor, |top| top * &inv))
    }

    /// Quotient when `divisor` divides `self` over the rationals.
    pub fn div_exact_rational(&self, divisor: &RatPoly) -> Result<RatPoly, PolyError> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible)
        }
    }
}

pub fn divrem(a: &RatPoly, b: &RatPoly) -> Result<(RatPoly, RatPoly), PolyError> {
    a.divrem(b)
}

pub fn exact_div(a: &IntPoly, b: &IntPoly) -> Result<IntPoly, PolyError> {
    a.exact_div(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn r(c: &[i64]) -> RatPoly {
        p(c).to_rational()
    }

    #[test]
    fn divrem_cube_minus_one() {
        let (q, rem) = divrem(&r(&[-1, 0, 0, 1]), &r(&[-1, 1])).unwrap();
        assert_eq!(q, r(&[1, 1, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn divrem_x5_by_x2_plus_1() {
        let a = r(&[0, 0, 0, 0, 0, 1]);
        let b = r(&[1, 0, 1]);
        let (q, rem) = divrem(&a, &b).unwrap();
        assert_eq!(q, r(&[0, -1, 0, 1]));
        assert_eq!(rem, r(&[0, 1]));
        assert_eq!(&(&q * &b) + &rem, a);
    }

    #[test]
    fn divrem_non_monic_rational() {
        let a = r(&[1, 2, 3]);
        let b = r(&[0, 2]);
        let (q, rem) = divrem(&a, &b).unwrap();
        let half = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(2));
        assert_eq!(q, RatPoly::from_coeffs(vec![half(2), half(3)]));
        assert_eq!(rem, r(&[1]));
    }

    #[test]
    fn division_errors() {
        assert_eq!(divrem(&r(&[1]), &RatPoly::zero()), Err(PolyError::DivisionByZeroPoly));
        assert_eq!(exact_div(&p(&[1, 1]), &p(&[1, 2])), Err(PolyError::NotMonic));
        assert_eq!(exact_div(&p(&[1, 0, 1]), &p(&[-1, 1])), Err(PolyError::NotDivisible));
        assert_eq!(exact_div(&p(&[1]), &IntPoly::zero()), Err(PolyError::DivisionByZeroPoly));
    }

    #[test]
    fn exact_div_fundamental_recurrent() {
        let q = exact_div(&IntPoly::x_pow_minus_one(9), &IntPoly::x_pow_minus_one(3)).unwrap();
        assert_eq!(q, p(&[1, 0, 0, 1, 0, 0, 1]));
        let f = p(&[3, -1, 4]);
        assert_eq!(exact_div(&f, &IntPoly::one()).unwrap(), f);
    }

    #[test]
    fn small_dividend_is_its_own_remainder() {
        let (q, rem) = p(&[1, 2]).divrem_monic(&p(&[0, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(rem, p(&[1, 2]));
    }
}
