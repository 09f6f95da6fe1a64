//! Integer combinatorics and the Bernoulli/zeta values entering the constant
//! computations. All results are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 2..=i64::from(n) {
        acc *= j;
    }
    acc
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * i64::from(n - j) / i64::from(j + 1);
    }
    acc
}

/// Rising factorial (x)_n = x(x+1)···(x+n−1). Empty product 1 for n = 0; the
/// value is 0 exactly when the range [x, x+n−1] contains 0. Returned as a
/// rational so it composes with rational sums without conversion.
pub fn pochhammer(x: i64, n: u32) -> BigRational {
    let mut acc = BigInt::one();
    for j in 0..i64::from(n) {
        acc *= x + j;
    }
    BigRational::from_integer(acc)
}

/// Checks Σ_{a=0}^{l} (−1)^a C(l,a) (b−a)_m = C(m,l)·l!·(b)_{m−l} by exact
/// evaluation of both sides. Panics unless 0 ≤ l ≤ m.
pub fn pochhammer_identity_check(b: i64, l: u32, m: u32) -> bool {
    assert!(l <= m, "identity requires l <= m, got l={l}, m={m}");
    let mut lhs = BigRational::zero();
    for a in 0..=l {
        let sign = if a % 2 == 0 { 1 } else { -1 };
        let term = BigRational::from_integer(sign * binomial(l, a)) * pochhammer(b - i64::from(a), m);
        lhs += term;
    }
    let rhs = BigRational::from_integer(binomial(m, l) * factorial(l)) * pochhammer(b, m - l);
    lhs == rhs
}

/// Bernoulli number B_n in the convention B_1 = −1/2, from the recurrence
/// Σ_{k=0}^{n} C(n+1,k) B_k = 0.
pub fn bernoulli(n: u32) -> BigRational {
    let mut b: Vec<BigRational> = Vec::with_capacity(n as usize + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        // B_m = −(Σ_{k<m} C(m+1,k) B_k) / C(m+1,m)
        let mut s = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += BigRational::from_integer(binomial(m + 1, k as u32)) * bk;
        }
        b.push(-s / BigRational::from_integer(binomial(m + 1, m)));
    }
    b.pop().unwrap()
}

/// ζ(n)/π^n for even n ≥ 2, via (−1)^{n/2+1}·B_n·2^{n−1}/n!.
pub fn zeta_even_over_pi(n: u32) -> BigRational {
    assert!(n >= 2 && n % 2 == 0, "zeta ratio is rational only for even n >= 2, got {n}");
    let sign = if (n / 2 + 1) % 2 == 0 { 1 } else { -1 };
    let two_pow = BigInt::from(2).pow(n - 1);
    BigRational::from_integer(sign * two_pow) * bernoulli(n)
        / BigRational::from_integer(factorial(n))
}

/// Γ(n) = (n−1)! at positive integer arguments (all the completed-zeta
/// factors need).
pub fn gamma_integer(n: u32) -> BigRational {
    assert!(n >= 1, "gamma is evaluated at positive integers only");
    BigRational::from_integer(factorial(n - 1))
}
