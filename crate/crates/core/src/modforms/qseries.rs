//! Truncated q-expansions with exact rational coefficients.
//!
//! A series stores a_0..a_B; B is the precision. Arithmetic between two
//! series yields the minimum of the two precisions — coefficients beyond
//! that would be incomplete.

use crate::exactnum::BigRational;
use crate::par;
use num_traits::Zero;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    coeffs: Vec<BigRational>,
}

impl QSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a q-series needs at least a constant term");
        QSeries { coeffs }
    }

    pub fn zero(precision: usize) -> Self {
        QSeries { coeffs: vec![BigRational::zero(); precision + 1] }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// n-th coefficient; panics past the precision rather than guessing zero.
    pub fn coeff(&self, n: usize) -> &BigRational {
        assert!(
            n <= self.precision(),
            "coefficient {n} beyond precision {}",
            self.precision()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision <= self.precision(), "truncation cannot extend a series");
        QSeries { coeffs: self.coeffs[..=precision].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QSeries::one(self.precision());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn one(precision: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); precision + 1];
        coeffs[0] = BigRational::from_integer(1.into());
        QSeries { coeffs }
    }
}

impl std::ops::Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let b = self.precision().min(rhs.precision());
        QSeries {
            coeffs: (0..=b).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect(),
        }
    }
}

impl std::ops::Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        let b = self.precision().min(rhs.precision());
        QSeries {
            coeffs: (0..=b).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect(),
        }
    }
}

impl std::ops::Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let b = self.precision().min(rhs.precision());
        let idx: Vec<usize> = (0..=b).collect();
        let coeffs = par::map(&idx, |&n| {
            let mut acc = BigRational::zero();
            for i in 0..=n {
                if !self.coeffs[i].is_zero() && !rhs.coeffs[n - i].is_zero() {
                    acc += &self.coeffs[i] * &rhs.coeffs[n - i];
                }
            }
            acc
        });
        QSeries { coeffs }
    }
}
