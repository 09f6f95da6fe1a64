//! Exact scalars: arbitrary-precision rationals, the quartic algebra Q(i,√2),
//! monomials q·π^e, p-local valuations, and the combinatorial primitives
//! (factorials, binomials, rising factorials, Bernoulli numbers) that feed the
//! constant computations.

mod combinat;
mod pi;
mod quad;
mod valuation;

pub use combinat::{
    bernoulli, binomial, factorial, gamma_integer, pochhammer, pochhammer_identity_check,
    zeta_even_over_pi,
};
pub use pi::PiQuantity;
pub use quad::QuadGaussian;
pub use valuation::{int_valuation, is_p_integral, rational_valuation, LocalValuation};

use num_bigint::BigInt;
use num_traits::One;

pub use num_rational::BigRational;

/// n as an exact rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// n/d in lowest terms. Panics if d = 0.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// x^e with integer (possibly negative) exponent; panics on 0^negative.
pub fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        x.pow(e as i32)
    } else {
        x.pow((-e) as i32).recip()
    }
}

/// Canonical text form: `n` for integers, `n/d` otherwise (always lowest
/// terms, denominator positive). This is the serialization used everywhere
/// rationals cross a file or report boundary.
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Inverse of [`format_rational`]; also accepts `n/d` not in lowest terms.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            if d == BigInt::from(0) {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
    }
}
