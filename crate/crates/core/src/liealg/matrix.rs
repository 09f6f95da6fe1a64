//! 4×4 matrices over Q(i,√2) and the symplectic conditions that carve out
//! gsp(4) and its group.

use crate::exactnum::{ratio, QuadGaussian};
use crate::linalg::Matrix;

pub type CMat = Matrix<QuadGaussian>;

/// 4×4 matrix from 16 entries, row major.
pub fn cmat(entries: [QuadGaussian; 16]) -> CMat {
    Matrix::new(4, 4, entries.to_vec())
}

pub fn cmat_from_int(grid: [[i64; 4]; 4]) -> CMat {
    let data = grid.iter().flatten().map(|&n| QuadGaussian::from_int(n)).collect();
    Matrix::new(4, 4, data)
}

/// The form ⟨u, v⟩ = ᵗu J v with J = [[0, I₂], [−I₂, 0]].
pub fn symplectic_form() -> CMat {
    cmat_from_int([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
}

pub fn bracket(a: &CMat, b: &CMat) -> CMat {
    a.matmul(b).sub_mat(&b.matmul(a))
}

pub fn conj_entrywise(a: &CMat) -> CMat {
    a.map(QuadGaussian::conj)
}

/// Lie algebra condition: ᵗX J + J X = 0.
pub fn is_in_sp4(x: &CMat) -> bool {
    let j = symplectic_form();
    x.transpose().matmul(&j).add_mat(&j.matmul(x)).is_zero_matrix()
}

/// Group condition ᵗg J g = ν J; returns the similitude ν when it holds.
pub fn similitude_factor(g: &CMat) -> Option<QuadGaussian> {
    let j = symplectic_form();
    let m = g.transpose().matmul(&j).matmul(g);
    // J is nonzero at (0,2); read ν off there, then confirm globally.
    let nu = m[(0, 2)].clone();
    if m == j.scale(&nu) {
        Some(nu)
    } else {
        None
    }
}

pub fn is_in_gsp4(g: &CMat) -> bool {
    similitude_factor(g).is_some()
}

/// 2×2 complex matrix as a 2×2 grid of Q(i,√2) scalars.
pub type TwoByTwo = [[QuadGaussian; 2]; 2];

pub fn e2(i: usize, j: usize) -> TwoByTwo {
    let mut z: TwoByTwo = Default::default();
    z[i][j] = QuadGaussian::one();
    z
}

pub fn two_scale(z: &TwoByTwo, s: &QuadGaussian) -> TwoByTwo {
    let mut out: TwoByTwo = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = &z[i][j] * s;
        }
    }
    out
}

pub fn two_add(a: &TwoByTwo, b: &TwoByTwo) -> TwoByTwo {
    let mut out: TwoByTwo = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = &a[i][j] + &b[i][j];
        }
    }
    out
}

pub fn half() -> QuadGaussian {
    QuadGaussian::from_rational(ratio(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symplectic_form_is_antisymmetric_nondegenerate() {
        let j = symplectic_form();
        assert_eq!(j.transpose(), j.scale(&QuadGaussian::from_int(-1)));
        assert!(j.inverse().is_some());
    }

    #[test]
    fn bracket_is_antisymmetric_and_satisfies_jacobi() {
        let a = cmat_from_int([[1, 2, 0, 0], [0, 0, 3, 0], [0, 1, 0, 0], [4, 0, 0, 1]]);
        let b = cmat_from_int([[0, 1, 0, 2], [1, 0, 0, 0], [0, 0, 2, 0], [0, 3, 0, 0]]);
        let c = cmat_from_int([[2, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 5], [0, 0, 0, 3]]);
        assert_eq!(bracket(&a, &b), bracket(&b, &a).scale(&QuadGaussian::from_int(-1)));
        let jacobi = bracket(&a, &bracket(&b, &c))
            .add_mat(&bracket(&b, &bracket(&c, &a)))
            .add_mat(&bracket(&c, &bracket(&a, &b)));
        assert!(jacobi.is_zero_matrix());
    }

    #[test]
    fn sp4_membership() {
        // diag(1, 1, −1, −1) satisfies ᵗX J + J X = 0; diag(1,1,1,1) does not.
        let x = cmat_from_int([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]);
        assert!(is_in_sp4(&x));
        assert!(!is_in_sp4(&Matrix::identity(4)));
    }

    #[test]
    fn similitude_of_scaled_identity() {
        // diag(1, 1, ν, ν) has similitude ν.
        let g = cmat_from_int([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 7, 0], [0, 0, 0, 7]]);
        assert_eq!(similitude_factor(&g), Some(QuadGaussian::from_int(7)));
        let bad = cmat_from_int([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1]]);
        assert!(similitude_factor(&bad).is_none());
    }
}
