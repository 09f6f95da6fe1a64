//! Monomials q·π^e. Since π is transcendental, two monomials are equal only
//! when both fields agree, and sums across different exponents have no
//! rational normal form — addition is therefore restricted to equal
//! exponents, which doubles as an assembly-bug tripwire in the constant
//! computations.

use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PiQuantity {
    pub coeff: BigRational,
    pub pi_exp: i64,
}

impl PiQuantity {
    pub fn new(coeff: BigRational, pi_exp: i64) -> Self {
        PiQuantity { coeff, pi_exp }
    }

    pub fn rational(coeff: BigRational) -> Self {
        PiQuantity { coeff, pi_exp: 0 }
    }

    /// π^e.
    pub fn pi_power(pi_exp: i64) -> Self {
        PiQuantity { coeff: BigRational::from_integer(1.into()), pi_exp }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// f64 rendering for `--approx` style output; never used in any verdict.
    pub fn approx(&self) -> f64 {
        let c = rational_to_f64(&self.coeff);
        c * std::f64::consts::PI.powi(self.pi_exp as i32)
    }
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

impl Mul for &PiQuantity {
    type Output = PiQuantity;
    fn mul(self, o: &PiQuantity) -> PiQuantity {
        PiQuantity::new(&self.coeff * &o.coeff, self.pi_exp + o.pi_exp)
    }
}

impl Mul for PiQuantity {
    type Output = PiQuantity;
    fn mul(self, o: PiQuantity) -> PiQuantity {
        &self * &o
    }
}

impl Add for &PiQuantity {
    type Output = PiQuantity;
    fn add(self, o: &PiQuantity) -> PiQuantity {
        assert_eq!(
            self.pi_exp, o.pi_exp,
            "pi-monomial addition requires equal exponents ({} vs {})",
            self.pi_exp, o.pi_exp
        );
        PiQuantity::new(&self.coeff + &o.coeff, self.pi_exp)
    }
}

impl Add for PiQuantity {
    type Output = PiQuantity;
    fn add(self, o: PiQuantity) -> PiQuantity {
        &self + &o
    }
}

impl fmt::Display for PiQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = crate::exactnum::format_rational(&self.coeff);
        match self.pi_exp {
            0 => write!(f, "{c}"),
            1 => write!(f, "{c}*pi"),
            e => write!(f, "{c}*pi^{e}"),
        }
    }
}
