use std::ops::{Add, Mul, Neg, Sub};

use super::{Coeff, Poly};

impl<C: Coeff> Add<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Sub<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, C::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Mul<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut term = a.clone();
                term *= b;
                coeffs[i + j] += term;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident) => {
        impl<C: Coeff> $imp<Poly<C>> for Poly<C> {
            type Output = Poly<C>;

            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }

        impl<C: Coeff> $imp<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;

            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$method(rhs)
            }
        }

        impl<C: Coeff> $imp<Poly<C>> for &Poly<C> {
            type Output = Poly<C>;

            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<C: Coeff> std::iter::Sum for Poly<C> {
    fn sum<I: Iterator<Item = Poly<C>>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |acc, p| &acc + &p)
    }
}

impl<C: Coeff> std::iter::Product for Poly<C> {
    fn product<I: Iterator<Item = Poly<C>>>(iter: I) -> Self {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}
