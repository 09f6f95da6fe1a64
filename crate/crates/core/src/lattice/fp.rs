//! Dense arithmetic over F_p with u64 representatives. Moduli are always
//! prime here, so inverses go through Fermat; products go through u128 to
//! stay overflow-safe for p up to 2^63.

use crate::exactnum::BigRational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn mod_add(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub fn mod_sub(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 + p as u128 - b as u128 % p as u128) as u64 % p as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn mod_inv(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of 0 mod {p}");
    mod_pow(a, p - 2, p)
}

/// Least nonnegative representative of an integer mod p.
pub fn int_mod_p(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Reduction of a p-integral rational mod p.
pub fn rational_mod_p(x: &BigRational, p: u64) -> u64 {
    let den = int_mod_p(x.denom(), p);
    assert!(den != 0, "rational has a pole at {p}");
    mod_mul(int_mod_p(x.numer(), p), mod_inv(den, p), p)
}

/// A nonzero left-kernel vector λ with λ·M ≡ 0 mod p, or None when the rows
/// of M are independent mod p. Rows of M must already be reduced mod p.
pub fn left_null_vector(m: &[Vec<u64>], p: u64) -> Option<Vec<u64>> {
    let rows = m.len();
    if rows == 0 {
        return None;
    }
    let cols = m[0].len();
    let mut work: Vec<Vec<u64>> = m.to_vec();
    // Transformation rows: work = trans · m throughout.
    let mut trans: Vec<Vec<u64>> = (0..rows)
        .map(|i| (0..rows).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&r| work[r][col] % p != 0) else {
            continue;
        };
        work.swap(pivot_row, src);
        trans.swap(pivot_row, src);
        let inv = mod_inv(work[pivot_row][col], p);
        for r in 0..rows {
            if r == pivot_row || work[r][col] % p == 0 {
                continue;
            }
            let f = mod_mul(work[r][col], inv, p);
            for c in 0..cols {
                let sub = mod_mul(f, work[pivot_row][c], p);
                work[r][c] = mod_sub(work[r][c], sub, p);
            }
            for c in 0..rows {
                let sub = mod_mul(f, trans[pivot_row][c], p);
                trans[r][c] = mod_sub(trans[r][c], sub, p);
            }
        }
        pivot_row += 1;
        if pivot_row == rows {
            return None;
        }
    }
    // Any remaining row of `work` is zero; its `trans` row is a dependence.
    Some(trans[pivot_row].clone())
}
