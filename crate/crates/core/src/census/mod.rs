//! Census of singular weight-22 unital circulants of order 45.
//!
//! A weight-22 row of order 45 is singular iff `Φ_45` or `Φ_15` divides it
//! (no prime-power `Φ` can, since neither 3 nor 5 divides 22). The two
//! families are counted separately, then the overlap is removed.

mod case1;
mod case2;
mod general;
mod params;
mod sample;

pub use case1::{count_case1, count_double, enumerate_case1_bruteforce, mask_to_poly, Case1Count, DoubleCount};
pub use case2::{case2_profiles, count_case2, enumerate_case2_bruteforce, Case2Profile, Case2Scan};
pub use general::{census_two_prime, CensusError};
pub use sample::{sample_singularity, SampleOutcome};

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde_json::{json, Value};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub k: usize,
    /// Proper divisor whose family is counted in `count_phi_sub`.
    pub sub_order: Option<usize>,
    pub count_phi_n: BigUint,
    pub count_phi_sub: BigUint,
    pub count_both: BigUint,
    pub total: BigUint,
    pub universe: BigUint,
    pub probability: BigRational,
}

impl CensusReport {
    pub(crate) fn assemble(
        n: usize,
        k: usize,
        sub_order: Option<usize>,
        count_phi_n: BigUint,
        count_phi_sub: BigUint,
        count_both: BigUint,
    ) -> Self {
        let total = &count_phi_n + &count_phi_sub - &count_both;
        let universe = binomial(n as u64, k as u64);
        let probability = BigRational::new(BigInt::from(total.clone()), BigInt::from(universe.clone()));
        CensusReport { n, k, sub_order, count_phi_n, count_phi_sub, count_both, total, universe, probability }
    }

    /// Counts as decimal strings; the probability as an exact fraction and
    /// rounded to 3 and 4 significant figures.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "sub_order": self.sub_order,
            "count_phi_n": self.count_phi_n.to_string(),
            "count_phi_sub": self.count_phi_sub.to_string(),
            "count_both": self.count_both.to_string(),
            "total": self.total.to_string(),
            "universe": self.universe.to_string(),
            "probability": format!("{}/{}", self.total, self.universe),
            "probability_decimal": Scientific::round(&self.probability, 4).to_ascii(),
            "probability_display": Scientific::round(&self.probability, 3).to_string(),
        })
    }
}

pub fn census_45() -> CensusReport {
    let double = count_double();
    assert_eq!(double.weight_solutions, 0);
    CensusReport::assemble(
        45,
        22,
        Some(15),
        BigUint::from(count_case1().total()),
        BigUint::from(count_case2()),
        BigUint::from(double.divisible),
    )
}

/// `digits * 10^(exponent - sig + 1)`, with `digits` having exactly `sig` digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scientific {
    digits: BigUint,
    sig: usize,
    exponent: i64,
}

fn pow10(e: i64) -> BigRational {
    let ten = BigRational::from_integer(BigInt::from(10));
    if e >= 0 {
        Pow::pow(ten, e as u64)
    } else {
        Pow::pow(ten, (-e) as u64).recip()
    }
}

impl Scientific {
    /// Round half up a positive rational to `sig >= 1` significant figures. Zero rounds to zero.
    pub fn round(value: &BigRational, sig: usize) -> Self {
        assert!(sig >= 1);
        if value.is_zero() {
            return Scientific { digits: BigUint::zero(), sig, exponent: 0 };
        }
        assert!(value > &BigRational::zero(), "negative values are not supported");
        let num_len = value.numer().to_string().len() as i64;
        let den_len = value.denom().to_string().len() as i64;
        let mut exponent = num_len - den_len;
        while pow10(exponent) > *value {
            exponent -= 1;
        }
        while pow10(exponent + 1) <= *value {
            exponent += 1;
        }
        let scaled = value * pow10(sig as i64 - 1 - exponent);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut digits = (scaled + half).floor().to_integer().to_biguint().expect("positive");
        if digits == Pow::pow(BigUint::from(10u32), sig as u32) {
            digits /= 10u32;
            exponent += 1;
        }
        Scientific { digits, sig, exponent }
    }

    fn mantissa(&self) -> String {
        let s = format!("{:0>width$}", self.digits, width = self.sig);
        if self.sig == 1 {
            s
        } else {
            format!("{}.{}", &s[..1], &s[1..])
        }
    }

    /// `2.142e-5` style.
    pub fn to_ascii(&self) -> String {
        format!("{}e{}", self.mantissa(), self.exponent)
    }
}

/// `2.14×10⁻⁵` style.
impl fmt::Display for Scientific {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
        let exp: String = self
            .exponent
            .to_string()
            .chars()
            .map(|c| match c {
                '-' => '⁻',
                d => SUPERSCRIPTS[d.to_digit(10).expect("digit") as usize],
            })
            .collect();
        write!(f, "{}×10{}", self.mantissa(), exp)
    }
}
