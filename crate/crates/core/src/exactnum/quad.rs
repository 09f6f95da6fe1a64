//! The quartic algebra Q(i,√2) with fixed basis {1, i, √2, i√2}. Every matrix
//! entry appearing in the rank-2 symplectic computations lives here, so a
//! fixed-basis representation is both sufficient and fast.

use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// c0 + c1·i + c2·√2 + c3·i√2, all coordinates exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadGaussian {
    pub c0: BigRational,
    pub c1: BigRational,
    pub c2: BigRational,
    pub c3: BigRational,
}

impl QuadGaussian {
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational, c3: BigRational) -> Self {
        QuadGaussian { c0, c1, c2, c3 }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        QuadGaussian::new(
            BigRational::zero(),
            BigRational::from_integer(1.into()),
            BigRational::zero(),
            BigRational::zero(),
        )
    }

    pub fn sqrt2() -> Self {
        QuadGaussian::new(
            BigRational::zero(),
            BigRational::zero(),
            BigRational::from_integer(1.into()),
            BigRational::zero(),
        )
    }

    pub fn from_rational(q: BigRational) -> Self {
        QuadGaussian::new(q, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero() && self.c2.is_zero() && self.c3.is_zero()
    }

    /// The coordinate over 1 when the element is rational, else None.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.c1.is_zero() && self.c2.is_zero() && self.c3.is_zero() {
            Some(&self.c0)
        } else {
            None
        }
    }

    /// Complex conjugation i ↦ −i; fixes √2. A ring automorphism.
    pub fn conj(&self) -> Self {
        QuadGaussian::new(self.c0.clone(), -self.c1.clone(), self.c2.clone(), -self.c3.clone())
    }

    /// The other generator of the Galois group: √2 ↦ −√2, fixing i.
    fn conj_sqrt2(&self) -> Self {
        QuadGaussian::new(self.c0.clone(), self.c1.clone(), -self.c2.clone(), -self.c3.clone())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        QuadGaussian::new(&self.c0 * q, &self.c1 * q, &self.c2 * q, &self.c3 * q)
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn is_rational(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero() && self.c3.is_zero()
    }

    /// x^e with integer (possibly negative) exponent.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = QuadGaussian::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "attempt to invert zero in Q(i, sqrt2)");
        // x · conj_i(x) lands in Q(√2); multiplying by its √2-conjugate lands
        // in Q, giving the norm to divide by.
        let xbar = self.conj();
        let n1 = self * &xbar; // in Q(√2): i-parts vanish
        debug_assert!(n1.c1.is_zero() && n1.c3.is_zero());
        let n1bar = n1.conj_sqrt2();
        let norm = &n1 * &n1bar; // rational
        debug_assert!(norm.as_rational().is_some());
        let norm = norm.c0;
        (&xbar * &n1bar).scale(&norm.recip())
    }
}

impl Add for &QuadGaussian {
    type Output = QuadGaussian;
    fn add(self, o: &QuadGaussian) -> QuadGaussian {
        QuadGaussian::new(&self.c0 + &o.c0, &self.c1 + &o.c1, &self.c2 + &o.c2, &self.c3 + &o.c3)
    }
}

impl Sub for &QuadGaussian {
    type Output = QuadGaussian;
    fn sub(self, o: &QuadGaussian) -> QuadGaussian {
        QuadGaussian::new(&self.c0 - &o.c0, &self.c1 - &o.c1, &self.c2 - &o.c2, &self.c3 - &o.c3)
    }
}

impl Neg for &QuadGaussian {
    type Output = QuadGaussian;
    fn neg(self) -> QuadGaussian {
        QuadGaussian::new(-self.c0.clone(), -self.c1.clone(), -self.c2.clone(), -self.c3.clone())
    }
}

impl Mul for &QuadGaussian {
    type Output = QuadGaussian;
    fn mul(self, o: &QuadGaussian) -> QuadGaussian {
        // basis products: i² = −1, (√2)² = 2, (i√2)² = −2, i·√2 = i√2,
        // √2·i√2 = 2i, i·i√2 = −√2
        let (a0, a1, a2, a3) = (&self.c0, &self.c1, &self.c2, &self.c3);
        let (b0, b1, b2, b3) = (&o.c0, &o.c1, &o.c2, &o.c3);
        let two = BigRational::from_integer(2.into());
        QuadGaussian::new(
            a0 * b0 - a1 * b1 + &two * (a2 * b2) - &two * (a3 * b3),
            a0 * b1 + a1 * b0 + &two * (a2 * b3) + &two * (a3 * b2),
            a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QuadGaussian {
            type Output = QuadGaussian;
            fn $method(self, o: QuadGaussian) -> QuadGaussian {
                (&self).$method(&o)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Default for QuadGaussian {
    fn default() -> Self {
        QuadGaussian::zero()
    }
}

impl Neg for QuadGaussian {
    type Output = QuadGaussian;
    fn neg(self) -> QuadGaussian {
        -&self
    }
}

impl fmt::Debug for QuadGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (c, sym) in [(&self.c0, ""), (&self.c1, "i"), (&self.c2, "r2"), (&self.c3, "ir2")] {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            if sym.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{sym}")?;
            }
            first = false;
        }
        Ok(())
    }
}
