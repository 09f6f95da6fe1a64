//! Assembly of the exact π-power constants: completed zeta values, the
//! Siegel volume, local level factors, and the Petersson-norm, pairing and
//! discriminant constants whose product structure is verified exactly.

use super::archimedean::{c_closed, cprime};
use crate::exactnum::{
    gamma_integer, rat, ratio, zeta_even_over_pi, BigRational, PiQuantity,
};
use thiserror::Error;

/// A square-free positive level with its prime divisors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Level {
    n: u64,
    primes: Vec<u64>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LevelError {
    #[error("level must be positive")]
    Zero,
    #[error("level {0} is not square-free: divisible by {1}^2")]
    NotSquareFree(u64, u64),
}

impl Level {
    pub fn new(n: u64) -> Result<Self, LevelError> {
        if n == 0 {
            return Err(LevelError::Zero);
        }
        let mut rest = n;
        let mut primes = Vec::new();
        let mut p = 2u64;
        while p * p <= rest {
            if rest % p == 0 {
                rest /= p;
                if rest % p == 0 {
                    return Err(LevelError::NotSquareFree(n, p));
                }
                primes.push(p);
            }
            p += 1;
        }
        if rest > 1 {
            primes.push(rest);
        }
        Ok(Level { n, primes })
    }

    pub fn value(&self) -> u64 {
        self.n
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }
}

/// Local norm factor (1/l)(1 − l⁻²)/(1 − l⁻⁴) = (l + l⁻¹)⁻¹.
pub fn norm_local_factor(l: u64) -> BigRational {
    assert!(l >= 2, "local factor needs a prime");
    let li = rat(l as i64);
    let inv2 = ratio(1, (l * l) as i64);
    let inv4 = &inv2 * &inv2;
    let value = (rat(1) - inv2) / ((rat(1) - inv4) * &li);
    let closed = (li.clone() + li.recip()).recip();
    assert_eq!(value, closed);
    value
}

/// Π_{l | N} (l + l⁻¹)⁻¹ (l² + 1)⁻¹ — the full local discriminant factor.
pub fn c_level(level: &Level) -> BigRational {
    level.primes().iter().fold(rat(1), |acc, &l| {
        let li = rat(l as i64);
        acc * norm_local_factor(l) * (&li * &li + rat(1)).recip()
    })
}

/// Completed zeta ξ(n) = π^{−n/2} Γ(n/2) ζ(n) for even n ≥ 2, as an exact
/// multiple of a power of π.
pub fn xi_completed(n: u32) -> PiQuantity {
    assert!(n >= 2 && n % 2 == 0, "completed zeta evaluated at even n >= 2");
    let coeff = gamma_integer(n / 2) * zeta_even_over_pi(n);
    PiQuantity::new(coeff, (n / 2) as i64)
}

/// Volume 2 ξ(2) ξ(4) of the degree-two Siegel fundamental domain.
pub fn siegel_volume() -> PiQuantity {
    PiQuantity::rational(rat(2)) * xi_completed(2) * xi_completed(4)
}

/// Archimedean factor of the norm formula, from the minimal K-type
/// parameters λ₁ = k+3, λ₂ = −k'−1 plugged into
/// 2^{λ₁−λ₂+5} π^{3λ₁−λ₂+5} (1 + λ₁ − λ₂)⁻¹.
pub fn norm_archimedean_factor(k: u32, kp: u32) -> PiQuantity {
    assert!(k >= kp, "dominant weight required");
    let l1 = k as i64 + 3;
    let l2 = -(kp as i64) - 1;
    let two_pow = rational_pow2(l1 - l2 + 5);
    let denom = rat(1 + l1 - l2);
    PiQuantity::new(two_pow / denom, 3 * l1 - l2 + 5)
}

/// The global zeta piece 2² ζ(2)⁻¹ ζ(4)⁻¹ = 2⁴·3³·5 · π⁻⁶.
pub fn norm_zeta_factor() -> PiQuantity {
    let z2 = PiQuantity::new(zeta_even_over_pi(2), 2);
    let z4 = PiQuantity::new(zeta_even_over_pi(4), 4);
    let inv = |p: PiQuantity| PiQuantity::new(p.coeff.recip(), -p.pi_exp);
    PiQuantity::rational(rat(4)) * inv(z2) * inv(z4)
}

fn rational_pow2(e: i64) -> BigRational {
    crate::exactnum::rational_pow(&rat(2), e)
}

/// Petersson-norm constant
/// 2^{m+13} · 3³ · 5 · π^{3k+k'+9} / (m+5) · Π_{l|N} (l + l⁻¹)⁻¹, m = k+k'.
pub fn norm_constant(k: u32, kp: u32, level: &Level) -> PiQuantity {
    let local: BigRational =
        level.primes().iter().map(|&l| norm_local_factor(l)).product();
    let assembled = norm_archimedean_factor(k, kp)
        * norm_zeta_factor()
        * PiQuantity::rational(local);
    // Closed form for the same quantity.
    let m = (k + kp) as i64;
    let closed_coeff = rational_pow2(m + 13) * rat(135)
        / rat(m + 5)
        * level.primes().iter().map(|&l| norm_local_factor(l)).product::<BigRational>();
    let closed = PiQuantity::new(closed_coeff, 3 * k as i64 + kp as i64 + 9);
    assert_eq!(assembled, closed, "norm constant assembly disagrees with closed form");
    closed
}

/// Pairing constant (π³/135) · C'_{k,k'} · Π_{l|N} (l² + 1)⁻¹, built from the
/// quadruple-sum evaluation of C'.
pub fn pairing_constant(k: u32, kp: u32, level: &Level) -> PiQuantity {
    let local = level.primes().iter().fold(rat(1), |acc, &l| {
        let li = rat(l as i64);
        acc * (&li * &li + rat(1)).recip()
    });
    PiQuantity::new(cprime(k, kp) * local / rat(135), 3)
}

/// Discriminant constant 2^{m+13} C_{k,k'} C_N π^{3k+k'+12} / (m+5) with
/// C_N the full local factor; equals pairing × norm by construction, and
/// that identity is asserted here.
pub fn discriminant_constant(k: u32, kp: u32, level: &Level) -> PiQuantity {
    let m = (k + kp) as i64;
    let coeff = rational_pow2(m + 13) * c_closed(k, kp) * c_level(level) / rat(m + 5);
    let result = PiQuantity::new(coeff, 3 * k as i64 + kp as i64 + 12);
    debug_assert_eq!(
        pairing_constant(k, kp, level) * norm_constant(k, kp, level),
        result,
        "pairing × norm must reproduce the discriminant constant"
    );
    result
}
