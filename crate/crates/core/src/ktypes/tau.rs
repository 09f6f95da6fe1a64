//! Abstract irreducible K-modules τ_(k,k'), k ≥ k', of dimension d+1 with
//! d = k − k'. The basis string v_0, …, v_d is normalized so that
//!
//!   H₁ v_s = (s + k') v_s,      H₂ v_s = (k − s) v_s,
//!   R v_s  = (s + 1) v_{s+1},   L v_s  = (d − s + 1) v_{s−1},
//!
//! with v_{−1} = v_{d+1} = 0; v_d is the highest weight vector.

use crate::exactnum::{rat, BigRational};
use num_bigint::BigInt;
use num_traits::Zero;

/// Label of an irreducible K-module. Unlike dominant weights of the full
/// group, k' may be negative (e.g. τ_(3,−1) or τ_(0,−2)).
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct TauPair {
    pub k: i64,
    pub kp: i64,
}

impl TauPair {
    pub fn new(k: i64, kp: i64) -> Self {
        assert!(k >= kp, "tau label requires k >= k', got ({k}, {kp})");
        TauPair { k, kp }
    }

    pub fn string_length(&self) -> usize {
        (self.k - self.kp) as usize
    }

    pub fn dim(&self) -> usize {
        self.string_length() + 1
    }
}

/// The four generators acting on a string module.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    H1,
    H2,
    Raise,
    Lower,
}

/// τ_(k,k') with vectors as coordinate rows against v_0, …, v_d.
#[derive(Clone, Copy, Debug)]
pub struct TauModule {
    pub label: TauPair,
}

impl TauModule {
    pub fn new(label: TauPair) -> Self {
        TauModule { label }
    }

    pub fn dim(&self) -> usize {
        self.label.dim()
    }

    /// Weight of v_s against (H₁, H₂).
    pub fn weight_of(&self, s: usize) -> (i64, i64) {
        assert!(s < self.dim());
        (s as i64 + self.label.kp, self.label.k - s as i64)
    }

    pub fn act(&self, g: Gen, v: &[BigRational]) -> Vec<BigRational> {
        let n = self.dim();
        assert_eq!(v.len(), n);
        let d = self.label.string_length() as i64;
        let mut out = vec![BigRational::zero(); n];
        for (s, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let s_i = s as i64;
            match g {
                Gen::H1 => out[s] += x * rat(s_i + self.label.kp),
                Gen::H2 => out[s] += x * rat(self.label.k - s_i),
                Gen::Raise => {
                    if s + 1 < n {
                        out[s + 1] += x * rat(s_i + 1);
                    }
                }
                Gen::Lower => {
                    if s > 0 {
                        out[s - 1] += x * rat(d - s_i + 1);
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, s: usize) -> Vec<BigRational> {
        assert!(s < self.dim());
        let mut v = vec![BigRational::zero(); self.dim()];
        v[s] = rat(1);
        v
    }
}

/// The scalar by which R^i L^i acts on the highest weight vector of a
/// length-d string: i! · d! / (d−i)!.
pub fn raise_lower_power_scalar(d: u32, i: u32) -> BigRational {
    assert!(i <= d);
    let mut acc = BigInt::from(1);
    for j in 1..=i {
        acc *= j; // i!
    }
    for j in (d - i + 1)..=d {
        acc *= j; // d!/(d−i)!
    }
    BigRational::from_integer(acc)
}

/// Signed pairing coefficient (−1)^i · i! · d! / (d−i)!.
pub fn pairing_coefficient(d: u32, i: u32) -> BigRational {
    let s = raise_lower_power_scalar(d, i);
    if i % 2 == 0 {
        s
    } else {
        -s
    }
}
