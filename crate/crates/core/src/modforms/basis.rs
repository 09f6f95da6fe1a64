//! Level-1 building blocks: divisor sums, Eisenstein series, Δ, and the
//! echelonized monomial basis E₄^a E₆^b of the full weight-κ space.

use super::qseries::QSeries;
use crate::exactnum::{bernoulli, rat, BigRational};
use crate::linalg::Matrix;
use crate::par;
use num_bigint::BigInt;
use num_traits::Zero;

/// σ_k(n) = Σ_{d|n} d^k.
pub fn sigma(n: u64, k: u32) -> BigInt {
    assert!(n >= 1, "divisor sum needs n >= 1");
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            total += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    total
}

/// σ_k(1..=bound), index 0 holds a placeholder zero.
pub fn sigma_table(k: u32, bound: usize) -> Vec<BigInt> {
    let idx: Vec<u64> = (0..=bound as u64).collect();
    par::map(&idx, |&n| if n == 0 { BigInt::zero() } else { sigma(n, k) })
}

/// E_k = 1 − (2k/B_k) Σ σ_{k−1}(n) qⁿ, the normalized weight-k Eisenstein
/// series (constant term 1).
pub fn eisenstein(k: u32, precision: usize) -> QSeries {
    assert!(k >= 4 && k % 2 == 0, "Eisenstein weight must be even and at least 4, got {k}");
    let factor = -rat(2) * rat(i64::from(k)) / bernoulli(k);
    let table = sigma_table(k - 1, precision);
    let mut coeffs = vec![BigRational::from_integer(1.into())];
    coeffs.extend(
        table[1..]
            .iter()
            .map(|s| &factor * BigRational::from_integer(s.clone())),
    );
    QSeries::new(coeffs)
}

/// Δ = (E₄³ − E₆²)/1728, the normalized weight-12 cusp form.
pub fn delta(precision: usize) -> QSeries {
    assert!(precision >= 2, "Δ needs precision at least 2");
    let e4 = eisenstein(4, precision);
    let e6 = eisenstein(6, precision);
    let num = &e4.pow(3) - &e6.pow(2);
    num.scale(&(rat(1) / rat(1728)))
}

/// Monomials E₄^a E₆^b of total weight κ, in decreasing powers of E₄. Their
/// span is the full space of weight-κ forms for level 1.
pub fn weight_monomials(weight: u32, precision: usize) -> Vec<QSeries> {
    assert!(weight >= 4 && weight % 2 == 0, "weight must be even and at least 4");
    let e4 = eisenstein(4, precision);
    let e6 = eisenstein(6, precision);
    let mut out = Vec::new();
    for a in (0..=weight / 4).rev() {
        let rest = weight - 4 * a;
        if rest % 6 == 0 {
            out.push(&e4.pow(a) * &e6.pow(rest / 6));
        }
    }
    assert!(!out.is_empty(), "no monomials of weight {weight}");
    out
}

/// Row-reduce the monomials to an echelon basis: row i has leading
/// coefficient 1 at qⁱ and zeros at the other leading exponents.
pub fn echelon_basis(weight: u32, precision: usize) -> Vec<QSeries> {
    let monomials = weight_monomials(weight, precision);
    let dim = monomials.len();
    assert!(
        precision + 1 >= dim,
        "precision {precision} cannot separate {dim} basis elements"
    );
    let rows: Vec<Vec<BigRational>> = monomials.iter().map(|f| f.coeffs().to_vec()).collect();
    let (reduced, pivots) = Matrix::from_rows(rows).rref();
    // The monomial span contains forms with every leading exponent 0..dim.
    assert_eq!(
        pivots,
        (0..dim).collect::<Vec<_>>(),
        "echelon pivots of the weight-{weight} space must be the initial exponents"
    );
    (0..dim)
        .map(|i| QSeries::new(reduced.row(i).to_vec()))
        .collect()
}
