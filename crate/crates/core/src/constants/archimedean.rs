//! The archimedean pairing constant C'_{k,k'} as an alternating quadruple
//! sum of factorial coefficients, its closed form C_{k,k'}, and the chain of
//! summation identities connecting the two.
//!
//! Throughout, m = k + k' and the sum runs over 0 ≤ r ≤ 4, 0 ≤ i ≤ m and
//! inner indices 0 ≤ u, u' ≤ r. Coefficients are evaluated as rising
//! factorials so that out-of-range index combinations vanish instead of
//! hitting negative factorials; the factorial form with explicitly
//! constrained indices is kept alongside as a cross-check.

use crate::exactnum::{binomial, factorial, pochhammer, rat, ratio, BigRational};
use num_traits::Zero;

/// Alternating weights a_0, …, a_4 of the five derivative layers.
pub fn alternation_coefficients() -> [BigRational; 5] {
    [rat(-1), ratio(-1, 4), ratio(1, 72), ratio(-1, 72), ratio(-1, 576)]
}

/// (−1)^m · m! · (m+4)! / 36.
pub fn prefactor(m: u32) -> BigRational {
    let sign = if m % 2 == 0 { 1 } else { -1 };
    rat(sign) * BigRational::from_integer(factorial(m) * factorial(m + 4)) / rat(36)
}

/// The three coefficient families in rising-factorial form:
/// r_{i,u,r} = (m−i+1)_u (m+4−i−r+u+1)_{r−u} (i−u+1)_r,
/// s_{i,u}   = (i−u)! / (m−i+u)!,
/// t_{i,u,r} = (m+4−i−r+u)! / (i+r−u)!.
/// s and t require the index constraints that make their factorials legal;
/// r vanishes exactly when those constraints fail, so callers test r first.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTriple {
    pub r_val: BigRational,
    pub s_val: BigRational,
    pub t_val: BigRational,
}

fn r_coeff(m: i64, i: i64, u: i64, r: i64) -> BigRational {
    pochhammer(m - i + 1, u as u32)
        * pochhammer(m + 4 - i - r + u + 1, (r - u) as u32)
        * pochhammer(i - u + 1, r as u32)
}

pub fn coefficient_triple(m: u32, i: u32, u: u32, r: u32) -> CoefficientTriple {
    let (mi, ii, ui, ri) = (m as i64, i as i64, u as i64, r as i64);
    assert!(u <= r && r <= 4 && i <= m, "index range violated");
    let r_val = r_coeff(mi, ii, ui, ri);
    assert!(
        r_val.is_zero() || (ii >= ui && mi + 4 - ii - ri + ui >= 0),
        "nonzero r-coefficient implies the factorial constraints"
    );
    let (s_val, t_val) = if ii >= ui && mi + 4 - ii - ri + ui >= 0 {
        (
            BigRational::from_integer(factorial(i - u))
                / BigRational::from_integer(factorial(m - i + u)),
            BigRational::from_integer(factorial((mi + 4 - ii - ri + ui) as u32))
                / BigRational::from_integer(factorial(i + r - u)),
        )
    } else {
        (rat(0), rat(0)) // unused: r_val is zero here
    };
    CoefficientTriple { r_val, s_val, t_val }
}

/// r_{i,u,r} · r_{j,u',r} · s_{i,u} · t_{i,u,r} with j = i−u+u' collapses to
/// (m−i+1)₄ (m−i+u−u'+1)₄ (i−u+1)_r / (m−i+u+1)_{4−r}; both sides, for tests.
pub fn coefficient_ratio_identity_check(m: u32, i: u32, u: u32, up: u32, r: u32) -> bool {
    let (mi, ii, ui, upi, ri) = (m as i64, i as i64, u as i64, up as i64, r as i64);
    let j = ii - ui + upi;
    let r1 = r_coeff(mi, ii, ui, ri);
    let r2 = r_coeff(mi, j, upi, ri);
    // A vanishing r-coefficient zeroes the whole term; only survivors have
    // legal factorial forms for s and t.
    let lhs = if r1.is_zero() || r2.is_zero() {
        rat(0)
    } else {
        let t = coefficient_triple(m, i, u, r);
        &r1 * &r2 * &t.s_val * &t.t_val
    };
    let rhs = pochhammer(mi - ii + 1, 4)
        * pochhammer(mi - ii + ui - upi + 1, 4)
        * pochhammer(ii - ui + 1, r)
        / pochhammer(mi - ii + ui + 1, 4 - r);
    lhs == rhs
}

/// The quadruple sum for C'_{k,k'}: the defining expression, with vanishing
/// terms skipped via the rising-factorial test.
pub fn cprime(k: u32, kp: u32) -> BigRational {
    assert!(k >= kp, "dominant weight required");
    let m = k + kp;
    let mi = m as i64;
    let a = alternation_coefficients();
    let mut sum = BigRational::zero();
    for r in 0..=4u32 {
        for i in 0..=m {
            for u in 0..=r {
                let r1 = r_coeff(mi, i as i64, u as i64, r as i64);
                if r1.is_zero() {
                    continue;
                }
                let triple = coefficient_triple(m, i, u, r);
                for up in 0..=r {
                    let j = i as i64 - u as i64 + up as i64;
                    let r2 = r_coeff(mi, j, up as i64, r as i64);
                    if r2.is_zero() {
                        continue;
                    }
                    let sign = if (r + u + up) % 2 == 0 { 1 } else { -1 };
                    let term = rat(sign)
                        * &a[r as usize]
                        * BigRational::from_integer(binomial(r, u) * binomial(r, up))
                        * &r1
                        * &r2
                        * &triple.s_val
                        * &triple.t_val;
                    sum += term;
                }
            }
        }
    }
    prefactor(m) * sum
}

/// Same sum in factorial form with the index constraints written out;
/// agreement with [`cprime`] is the check that the two index conventions
/// pick out the same nonzero terms.
pub fn cprime_factorial_form(k: u32, kp: u32) -> BigRational {
    assert!(k >= kp, "dominant weight required");
    let m = k + kp;
    let mi = m as i64;
    let a = alternation_coefficients();
    let f = |n: i64| -> BigRational {
        assert!(n >= 0);
        BigRational::from_integer(factorial(n as u32))
    };
    let r_fact = |i: i64, u: i64, r: i64| -> BigRational {
        f(mi + u - i) * f(mi + 4 - i) * f(i + r - u) / (f(i - u) * f(mi - i) * f(mi + 4 - i - r + u))
    };
    let mut sum = BigRational::zero();
    for r in 0..=4i64 {
        for i in 0..=mi {
            for u in 0..=r.min(i) {
                if mi + 4 - i - r + u < 0 {
                    continue;
                }
                for up in 0..=r {
                    let j = i - u + up;
                    if j > mi || mi + 4 - j - r + up < 0 {
                        continue;
                    }
                    let sign = if (r + u + up) % 2 == 0 { 1 } else { -1 };
                    let term = rat(sign)
                        * &a[r as usize]
                        * BigRational::from_integer(
                            binomial(r as u32, u as u32) * binomial(r as u32, up as u32),
                        )
                        * r_fact(i, u, r)
                        * r_fact(j, up, r)
                        * (f(i - u) / f(mi - i + u))
                        * (f(mi + 4 - i - r + u) / f(i + r - u));
                    sum += term;
                }
            }
        }
    }
    prefactor(m) * sum
}

/// Quadruple sums for a batch of weight pairs, evaluated across threads.
pub fn cprime_batch(pairs: &[(u32, u32)]) -> Vec<BigRational> {
    crate::par::map(pairs, |&(k, kp)| cprime(k, kp))
}

/// Closed form C_{k,k'} = (−1)^m (m+4)! (m+5)! / 135.
pub fn c_closed(k: u32, kp: u32) -> BigRational {
    assert!(k >= kp, "dominant weight required");
    let m = k + kp;
    let sign = if m % 2 == 0 { 1 } else { -1 };
    rat(sign) * BigRational::from_integer(factorial(m + 4) * factorial(m + 5)) / rat(135)
}

/// The four stages of collapsing the quadruple sum, outermost first:
/// the full sum in ratio form, the triple sum after summing u', the double
/// sum after summing u, and the closed form after the final telescoping.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplificationTrace {
    pub quadruple: BigRational,
    pub triple: BigRational,
    pub double: BigRational,
    pub closed: BigRational,
}

pub fn simplification_trace(k: u32, kp: u32) -> SimplificationTrace {
    assert!(k >= kp, "dominant weight required");
    let m = k + kp;
    let mi = m as i64;
    let a = alternation_coefficients();
    let pf = prefactor(m);

    let mut quadruple = BigRational::zero();
    for r in 0..=4i64 {
        for i in 0..=mi {
            for u in 0..=r {
                for up in 0..=r {
                    let sign = if (r + u + up) % 2 == 0 { 1 } else { -1 };
                    let term = rat(sign)
                        * &a[r as usize]
                        * BigRational::from_integer(
                            binomial(r as u32, u as u32) * binomial(r as u32, up as u32),
                        )
                        * pochhammer(mi - i + 1, 4)
                        * pochhammer(mi - i + u - up + 1, 4)
                        * pochhammer(i - u + 1, r as u32)
                        / pochhammer(mi - i + u + 1, (4 - r) as u32);
                    quadruple += term;
                }
            }
        }
    }

    let mut triple = BigRational::zero();
    for r in 0..=4i64 {
        for i in 0..=mi {
            for u in 0..=r {
                let sign = if (r + u) % 2 == 0 { 1 } else { -1 };
                let term = rat(sign)
                    * &a[r as usize]
                    * BigRational::from_integer(
                        binomial(r as u32, u as u32) * binomial(4, r as u32) * factorial(r as u32),
                    )
                    * pochhammer(mi - i + 1, 4)
                    * pochhammer(i - u + 1, r as u32);
                triple += term;
            }
        }
    }

    let mut double = BigRational::zero();
    for r in 0..=4i64 {
        for i in 0..=mi {
            let sign = if r % 2 == 0 { 1 } else { -1 };
            let rf = BigRational::from_integer(factorial(r as u32));
            let term = rat(sign)
                * &a[r as usize]
                * BigRational::from_integer(binomial(4, r as u32))
                * &rf
                * &rf
                * pochhammer(mi - i + 1, 4);
            double += term;
        }
    }

    let closed = ratio(4, 3) * pochhammer(mi + 1, 5) / rat(5);

    SimplificationTrace {
        quadruple: &pf * quadruple,
        triple: &pf * triple,
        double: &pf * double,
        closed: pf * closed,
    }
}

/// Σ_{r=0}^{4} (−1)^r a_r C(4,r) (r!)², the weight sum left over once both
/// inner indices are collapsed.
pub fn alternation_weight_sum() -> BigRational {
    let a = alternation_coefficients();
    let mut sum = BigRational::zero();
    for r in 0..=4u32 {
        let sign = if r % 2 == 0 { 1 } else { -1 };
        let rf = factorial(r);
        sum += rat(sign) * &a[r as usize] * BigRational::from_integer(binomial(4, r) * &rf * rf);
    }
    sum
}

/// Σ_{i=0}^{m} (i+1)₄ — telescopes to (m+1)₅ / 5.
pub fn rising_power_sum(m: u32) -> BigRational {
    (0..=m as i64).map(|i| pochhammer(i + 1, 4)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_spot_values() {
        assert_eq!(c_closed(0, 0), ratio(64, 3));
        assert_eq!(c_closed(1, 0), rat(-640));
    }

    #[test]
    fn quadruple_sum_spot_values() {
        assert_eq!(cprime(0, 0), ratio(64, 3));
        assert_eq!(cprime(1, 0), rat(-640));
    }

    #[test]
    fn both_index_conventions_agree() {
        for k in 0..=6u32 {
            for kp in 0..=k {
                assert_eq!(cprime(k, kp), cprime_factorial_form(k, kp), "at ({k}, {kp})");
            }
        }
    }

    #[test]
    fn quadruple_sum_equals_closed_form_on_small_weights() {
        for k in 0..=5u32 {
            for kp in 0..=k {
                assert_eq!(cprime(k, kp), c_closed(k, kp), "at ({k}, {kp})");
            }
        }
    }

    #[test]
    fn simplification_stages_all_agree() {
        for (k, kp) in [(0, 0), (1, 0), (2, 1), (3, 3), (5, 2)] {
            let tr = simplification_trace(k, kp);
            assert_eq!(tr.quadruple, tr.triple, "({k},{kp}) quadruple vs triple");
            assert_eq!(tr.triple, tr.double, "({k},{kp}) triple vs double");
            assert_eq!(tr.double, tr.closed, "({k},{kp}) double vs closed");
            assert_eq!(tr.closed, c_closed(k, kp), "({k},{kp}) closed form");
            assert_eq!(tr.quadruple, cprime(k, kp), "({k},{kp}) against definition");
        }
    }

    #[test]
    fn ratio_identity_holds_pointwise() {
        for m in 0..=6u32 {
            for i in 0..=m {
                for r in 0..=4u32 {
                    for u in 0..=r {
                        for up in 0..=r {
                            assert!(
                                coefficient_ratio_identity_check(m, i, u, up, r),
                                "at (m,i,u,u',r) = ({m},{i},{u},{up},{r})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ratio_identity_small_example_value() {
        // At (m,i,u,u',r) = (1,0,0,0,0) both sides equal (2)₄ = 120.
        let t = coefficient_triple(1, 0, 0, 0);
        let lhs = &t.r_val * &t.r_val * &t.s_val * &t.t_val;
        assert_eq!(lhs, rat(120));
        assert_eq!(pochhammer(2, 4), rat(120));
    }

    #[test]
    fn alternation_weights_collapse_to_four_thirds() {
        assert_eq!(alternation_weight_sum(), ratio(4, 3));
    }

    #[test]
    fn rising_power_sum_telescopes() {
        for m in 0..=30u32 {
            assert_eq!(rising_power_sum(m), pochhammer(m as i64 + 1, 5) / rat(5), "m = {m}");
        }
    }

    #[test]
    fn coefficient_triple_matches_factorials_in_range() {
        // r in factorial form: (m+u−i)!(m+4−i)!(i+r−u)! / ((i−u)!(m−i)!(m+4−i−r+u)!).
        let f = |n: u32| BigRational::from_integer(factorial(n));
        for (m, i, u, r) in [(3, 2, 1, 2), (4, 0, 0, 3), (2, 2, 2, 4), (5, 3, 0, 0)] {
            let t = coefficient_triple(m, i, u, r);
            let expected = f(m + u - i) * f(m + 4 - i) * f(i + r - u)
                / (f(i - u) * f(m - i) * f(m + 4 - i - r + u));
            assert_eq!(t.r_val, expected, "(m,i,u,r) = ({m},{i},{u},{r})");
        }
    }
}
