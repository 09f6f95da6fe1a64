//! p-adic valuations of rationals, with +∞ for zero. These drive every
//! membership test in the p-local lattice machinery.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

/// v_p(x) together with the prime it was taken at. `value = None` encodes +∞
/// (the valuation of zero).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LocalValuation {
    pub prime: u64,
    pub value: Option<i64>,
}

impl LocalValuation {
    pub fn of_rational(prime: u64, x: &BigRational) -> Self {
        assert!(prime >= 2, "valuation needs a prime >= 2");
        if x.is_zero() {
            return LocalValuation { prime, value: None };
        }
        let v = int_valuation(prime, x.numer()) - int_valuation(prime, x.denom());
        LocalValuation { prime, value: Some(v) }
    }

    pub fn is_infinite(&self) -> bool {
        self.value.is_none()
    }

    /// v_p(x) ≥ 0, i.e. x ∈ Z_(p).
    pub fn is_integral(&self) -> bool {
        self.value.map_or(true, |v| v >= 0)
    }
}

/// Exact power of p dividing a nonzero integer.
pub fn int_valuation(prime: u64, n: &BigInt) -> i64 {
    assert!(!n.is_zero());
    let p = BigInt::from(prime);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}

/// Convenience: v_p of a rational as Option (None = +∞).
pub fn rational_valuation(prime: u64, x: &BigRational) -> Option<i64> {
    LocalValuation::of_rational(prime, x).value
}

/// x ∈ Z_(p).
pub fn is_p_integral(prime: u64, x: &BigRational) -> bool {
    LocalValuation::of_rational(prime, x).is_integral()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn basic_valuations() {
        assert_eq!(rational_valuation(5, &rat(50)), Some(2));
        assert_eq!(rational_valuation(5, &ratio(3, 25)), Some(-2));
        assert_eq!(rational_valuation(2, &ratio(-12, 7)), Some(2));
        assert_eq!(rational_valuation(691, &rat(0)), None);
        assert!(is_p_integral(5, &ratio(7, 3)));
        assert!(!is_p_integral(3, &ratio(7, 3)));
    }

    fn arb_nonzero_rat() -> impl Strategy<Value = BigRational> {
        ((-200i64..=200).prop_filter("nonzero", |n| *n != 0), 1i64..=200)
            .prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #[test]
        fn valuation_laws(x in arb_nonzero_rat(), y in arb_nonzero_rat(), pidx in 0usize..3) {
            let p = [2u64, 5, 691][pidx];
            let vx = rational_valuation(p, &x).unwrap();
            let vy = rational_valuation(p, &y).unwrap();
            prop_assert_eq!(rational_valuation(p, &(&x * &y)), Some(vx + vy));
            let s = &x + &y;
            if let Some(vs) = rational_valuation(p, &s) {
                prop_assert!(vs >= vx.min(vy));
            }
        }
    }
}
