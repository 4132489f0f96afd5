//! Extended Euclidean algorithm over Q[x].

use super::{PolyError, RatPoly};

/// Bezout certificate: `sum_j cofactors[j] * inputs[j] == gcd`, with `gcd` monic.
#[derive(Debug, Clone, PartialEq)]
pub struct XgcdCertificate {
    pub gcd: RatPoly,
    pub cofactors: Vec<RatPoly>,
}

impl XgcdCertificate {
    /// Re-expands the Bezout identity and checks that the gcd divides every input.
    pub fn verify(&self, inputs: &[RatPoly]) -> bool {
        if inputs.len() != self.cofactors.len() || !self.gcd.is_monic() {
            return false;
        }
        let combo: RatPoly = self
            .cofactors
            .iter()
            .zip(inputs)
            .map(|(c, p)| c * p)
            .sum();
        combo == self.gcd
            && inputs
                .iter()
                .all(|p| p.divrem(&self.gcd).is_ok_and(|(_, r)| r.is_zero()))
    }
}

/// Returns `(g, s, t)` with `s*a + t*b = g` and `g` the monic gcd (zero iff both inputs are).
pub fn xgcd(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
    let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1).expect("divisor is nonzero");
        let s2 = &s0 - &(&q * &s1);
        let t2 = &t0 - &(&q * &t1);
        // keep the remainder sequence monic; cofactors follow the same scaling
        let (r2, s2, t2) = match r.leading_coeff().map(|lc| lc.recip()) {
            Some(inv) => (r.scale(&inv), s2.scale(&inv), t2.scale(&inv)),
            None => (r, s2, t2),
        };
        (r0, r1) = (r1, r2);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    match r0.leading_coeff().map(|lc| lc.recip()) {
        None => (RatPoly::zero(), RatPoly::zero(), RatPoly::zero()),
        Some(inv) => (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)),
    }
}

/// Monic gcd of several polynomials together with Bezout cofactors, folding
/// pairwise from left to right.
pub fn xgcd_multi(polys: &[RatPoly]) -> Result<XgcdCertificate, PolyError> {
    let mut gcd = RatPoly::zero();
    let mut cofactors: Vec<RatPoly> = Vec::with_capacity(polys.len());
    for p in polys {
        let (g, s, t) = xgcd(&gcd, p);
        for c in cofactors.iter_mut() {
            *c = &s * &*c;
        }
        cofactors.push(t);
        gcd = g;
    }
    if gcd.is_zero() {
        return Err(PolyError::AllZero);
    }
    Ok(XgcdCertificate { gcd, cofactors })
}
