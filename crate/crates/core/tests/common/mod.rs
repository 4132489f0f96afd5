#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use unital_circulant::cyclo::{factorize, fundamental_recurrent};
use unital_circulant::poly::{IntPoly, RatPoly};

pub fn random_unital(len: usize, density: f64, rng: &mut impl Rng) -> IntPoly {
    IntPoly::from_support((0..len).filter(|_| rng.gen_bool(density)))
}

/// Random nonzero unital `h_p G(n, n/p) + h_q G(n, n/q)` for two-prime `n`,
/// kept only when the sum is itself unital.
pub fn unital_phi_n_multiple(n: usize, rng: &mut impl Rng) -> IntPoly {
    let primes = factorize(n).unwrap().primes();
    let [p, q] = primes[..] else { panic!("{n} is not a two-prime order") };
    loop {
        let hp = random_unital(n / p, 0.15, rng);
        let hq = random_unital(n / q, 0.15, rng);
        let f = &hp * &fundamental_recurrent(n, n / p).unwrap() + &hq * &fundamental_recurrent(n, n / q).unwrap();
        if f.is_unital() && !f.is_zero() {
            return f;
        }
    }
}

pub fn random_rational_poly(len: usize, rng: &mut impl Rng) -> RatPoly {
    RatPoly::from_coeffs(
        (0..len)
            .map(|_| BigRational::new(BigInt::from(rng.gen_range(-9..=9)), BigInt::from(rng.gen_range(1..=5))))
            .collect(),
    )
}
