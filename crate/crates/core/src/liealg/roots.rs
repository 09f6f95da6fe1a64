//! Compact Cartan subalgebra and root vectors.
//!
//! The maximal compact subgroup of Sp(4,R) is a copy of U(2) embedded by
//! writing a complex 2×2 matrix A + iB as the real 4×4 block matrix
//! [[A, B], [−B, A]]. `dkappa` is the complexified derivative of that
//! embedding, sending gl(2,C) into sp(4,C); the images of iE₁₁ and iE₂₂
//! span the compact Cartan, and weights are taken against H₁ = dκ(E₁₁),
//! H₂ = dκ(E₂₂) so that they land in Z².

use super::matrix::{
    conj_entrywise, e2, half, similitude_factor, two_add, two_scale, CMat, TwoByTwo,
};
use crate::exactnum::{rat, BigRational, QuadGaussian};
use crate::linalg::{coordinates_in_span, Matrix};
use num_traits::Zero;

/// Real 4×4 block matrix [[A, B], [−B, A]] from 2×2 blocks.
fn realify(a: &TwoByTwo, b: &TwoByTwo) -> CMat {
    let mut m = Matrix::zero(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = a[i][j].clone();
            m[(i, j + 2)] = b[i][j].clone();
            m[(i + 2, j)] = -&b[i][j];
            m[(i + 2, j + 2)] = a[i][j].clone();
        }
    }
    m
}

fn two_conj_transpose(z: &TwoByTwo) -> TwoByTwo {
    let mut out: TwoByTwo = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = z[j][i].conj();
        }
    }
    out
}

fn two_conj(z: &TwoByTwo) -> TwoByTwo {
    let mut out: TwoByTwo = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = z[i][j].conj();
        }
    }
    out
}

/// Split an anti-Hermitian W into real part A (antisymmetric) and imaginary
/// part B (symmetric), then realify.
fn realify_anti_hermitian(w: &TwoByTwo) -> CMat {
    let minus_half_i = -&(&QuadGaussian::i() * &half());
    let wc = two_conj(w);
    let mut a: TwoByTwo = Default::default();
    let mut b: TwoByTwo = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            a[i][j] = &(&w[i][j] + &wc[i][j]) * &half();
            b[i][j] = &(&w[i][j] - &wc[i][j]) * &minus_half_i;
        }
    }
    realify(&a, &b)
}

/// Complexified embedding gl(2,C) → sp(4,C). Decomposes Z into
/// anti-Hermitian parts X = (Z − Z*)/2, Y = (Z + Z*)/2i and extends the
/// real embedding C-linearly: dκ(Z) = dκ(X) + i·dκ(Y).
pub fn dkappa(z: &TwoByTwo) -> CMat {
    let zstar = two_conj_transpose(z);
    let minus_half_i = -&(&QuadGaussian::i() * &half());
    let mut x: TwoByTwo = Default::default();
    let mut y: TwoByTwo = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            x[i][j] = &(&z[i][j] - &zstar[i][j]) * &half();
            y[i][j] = &(&z[i][j] + &zstar[i][j]) * &minus_half_i;
        }
    }
    realify_anti_hermitian(&x)
        .add_mat(&realify_anti_hermitian(&y).scale(&QuadGaussian::i()))
}

/// Noncompact root vector with positive i-eigenvalue under the center of k:
/// p₊(Z) = [[Z, iZ], [iZ, −Z]] for symmetric Z.
pub fn p_plus(z: &TwoByTwo) -> CMat {
    let iz = two_scale(z, &QuadGaussian::i());
    let mut m = Matrix::zero(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = z[i][j].clone();
            m[(i, j + 2)] = iz[i][j].clone();
            m[(i + 2, j)] = iz[i][j].clone();
            m[(i + 2, j + 2)] = -&z[i][j];
        }
    }
    m
}

/// p₋(Z) = [[Z, −iZ], [−iZ, −Z]] for symmetric Z.
pub fn p_minus(z: &TwoByTwo) -> CMat {
    let miz = two_scale(z, &-&QuadGaussian::i());
    let mut m = Matrix::zero(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = z[i][j].clone();
            m[(i, j + 2)] = miz[i][j].clone();
            m[(i + 2, j)] = miz[i][j].clone();
            m[(i + 2, j + 2)] = -&z[i][j];
        }
    }
    m
}

/// Cartan generators and the eight root vectors of sp(4,C), organized by
/// weight under (H₁, H₂).
pub struct RootVectors {
    /// dκ(iE₁₁) = e₁₃ − e₃₁ and dκ(iE₂₂) = e₂₄ − e₄₂.
    pub t1: CMat,
    pub t2: CMat,
    /// H₁ = −i·T₁, H₂ = −i·T₂: integral weight normalization.
    pub h1: CMat,
    pub h2: CMat,
    pub x20: CMat,
    pub x11: CMat,
    pub x02: CMat,
    pub xm20: CMat,
    pub xm1m1: CMat,
    pub x0m2: CMat,
    /// Compact root vectors dκ(E₁₂), dκ(E₂₁).
    pub x1m1: CMat,
    pub xm11: CMat,
}

impl RootVectors {
    /// `scale` multiplies the six noncompact root vectors; it must be
    /// nonzero so they stay a basis of p⁺ ⊕ p⁻.
    pub fn build(scale: &BigRational) -> Self {
        assert!(!scale.is_zero(), "root vector scale must be nonzero");
        let s = QuadGaussian::from_rational(scale.clone());
        let i = QuadGaussian::i();
        let e11 = e2(0, 0);
        let e22 = e2(1, 1);
        let e12 = e2(0, 1);
        let e21 = e2(1, 0);
        let e12p21 = two_add(&e12, &e21);
        let t1 = dkappa(&two_scale(&e11, &i));
        let t2 = dkappa(&two_scale(&e22, &i));
        RootVectors {
            h1: dkappa(&e11),
            h2: dkappa(&e22),
            t1,
            t2,
            x20: p_plus(&e11).scale(&s),
            x11: p_plus(&e12p21).scale(&s),
            x02: p_plus(&e22).scale(&s),
            xm20: p_minus(&e11).scale(&s),
            xm1m1: p_minus(&e12p21).scale(&s),
            x0m2: p_minus(&e22).scale(&s),
            x1m1: dkappa(&e12),
            xm11: dkappa(&e21),
        }
    }

    /// (vector, weight) pairs for all eight root vectors.
    pub fn labeled_roots(&self) -> Vec<(&CMat, (i64, i64))> {
        vec![
            (&self.x20, (2, 0)),
            (&self.x11, (1, 1)),
            (&self.x02, (0, 2)),
            (&self.xm20, (-2, 0)),
            (&self.xm1m1, (-1, -1)),
            (&self.x0m2, (0, -2)),
            (&self.x1m1, (1, -1)),
            (&self.xm11, (-1, 1)),
        ]
    }

    pub fn p_plus_basis(&self) -> [&CMat; 3] {
        [&self.x20, &self.x11, &self.x02]
    }

    pub fn p_minus_basis(&self) -> [&CMat; 3] {
        [&self.x0m2, &self.xm1m1, &self.xm20]
    }
}

/// [H₁, x] = a·x and [H₂, x] = b·x.
pub fn verify_root_vector(rv: &RootVectors, x: &CMat, weight: (i64, i64)) -> bool {
    let ha = super::matrix::bracket(&rv.h1, x);
    let hb = super::matrix::bracket(&rv.h2, x);
    ha == x.scale(&QuadGaussian::from_int(weight.0))
        && hb == x.scale(&QuadGaussian::from_int(weight.1))
}

fn flatten(m: &CMat) -> Vec<QuadGaussian> {
    m.entries().to_vec()
}

/// Structural checks for sp(4,C) = k_C ⊕ p⁺ ⊕ p⁻:
/// all ten spanning matrices satisfy the symplectic Lie-algebra condition
/// and are linearly independent; [k, p±] ⊆ p±; p⁺ and p⁻ are abelian;
/// [p⁺, p⁻] ⊆ k_C; and every root vector has its advertised weight.
pub fn cartan_decomposition_check(rv: &RootVectors) -> bool {
    use super::matrix::{bracket, is_in_sp4};
    let k_basis = [&rv.t1, &rv.t2, &rv.x1m1, &rv.xm11];
    let pp = rv.p_plus_basis();
    let pm = rv.p_minus_basis();
    let all: Vec<&CMat> = k_basis.iter().chain(pp.iter()).chain(pm.iter()).copied().collect();

    if !all.iter().all(|m| is_in_sp4(m)) {
        return false;
    }
    let span_all = Matrix::from_rows(all.iter().map(|m| flatten(m)).collect());
    if span_all.rank() != 10 {
        return false;
    }

    let span_k = Matrix::from_rows(k_basis.iter().map(|m| flatten(m)).collect());
    let span_pp = Matrix::from_rows(pp.iter().map(|m| flatten(m)).collect());
    let span_pm = Matrix::from_rows(pm.iter().map(|m| flatten(m)).collect());
    let in_span = |basis: &Matrix<QuadGaussian>, m: &CMat| {
        coordinates_in_span(basis, &flatten(m)).is_some()
    };

    for k in &k_basis {
        for p in &pp {
            if !in_span(&span_pp, &bracket(k, p)) {
                return false;
            }
        }
        for p in &pm {
            if !in_span(&span_pm, &bracket(k, p)) {
                return false;
            }
        }
    }
    for a in &pp {
        for b in &pp {
            if !bracket(a, b).is_zero_matrix() {
                return false;
            }
        }
    }
    for a in &pm {
        for b in &pm {
            if !bracket(a, b).is_zero_matrix() {
                return false;
            }
        }
    }
    for a in &pp {
        for b in &pm {
            if !in_span(&span_k, &bracket(a, b)) {
                return false;
            }
        }
    }
    rv.labeled_roots().iter().all(|(x, w)| verify_root_vector(rv, x, *w))
}

/// The Cayley-type element (1/√2)[[I, iI], [iI, I]] of Sp(4,C) that conjugates
/// the compact torus into the diagonal one.
pub fn j_matrix() -> CMat {
    let s = QuadGaussian::new(rat(0), rat(0), crate::exactnum::ratio(1, 2), rat(0)); // 1/√2
    let i = QuadGaussian::i();
    let mut m: CMat = Matrix::zero(4, 4);
    for k in 0..4 {
        m[(k, k)] = QuadGaussian::one();
    }
    m[(0, 2)] = i.clone();
    m[(1, 3)] = i.clone();
    m[(2, 0)] = i.clone();
    m[(3, 1)] = i;
    m.scale(&s)
}

pub fn conj_j_matrix() -> CMat {
    conj_entrywise(&j_matrix())
}

/// Compact-torus element t(x, y, x', y') = [[X, Y], [−Y, X]] with
/// X = diag(x, x'), Y = diag(y, y').
pub fn torus_point(x: &BigRational, y: &BigRational, xp: &BigRational, yp: &BigRational) -> CMat {
    let q = |v: &BigRational| QuadGaussian::from_rational(v.clone());
    let mut m: CMat = Matrix::zero(4, 4);
    m[(0, 0)] = q(x);
    m[(1, 1)] = q(xp);
    m[(2, 2)] = q(x);
    m[(3, 3)] = q(xp);
    m[(0, 2)] = q(y);
    m[(1, 3)] = q(yp);
    m[(2, 0)] = -&q(y);
    m[(3, 1)] = -&q(yp);
    m
}

/// Rational point ((1−t²)/(1+t²), 2t/(1+t²)) on the unit circle.
pub fn circle_point(t: &BigRational) -> (BigRational, BigRational) {
    let one = rat(1);
    let t2 = t * t;
    let denominator = &one + &t2;
    ((&one - &t2) / &denominator, (t + t) / denominator)
}

/// J⁻¹ t J = diag(x+iy, x'+iy', x−iy, x'−iy') and the conjugate statement
/// for conj(J); also J itself is symplectic with similitude 1 and
/// J⁻¹ = conj(J). Inputs must satisfy x²+y² = x'²+y'² = 1.
pub fn verify_torus_diagonalization(
    x: &BigRational,
    y: &BigRational,
    xp: &BigRational,
    yp: &BigRational,
) -> bool {
    assert_eq!(x * x + y * y, rat(1), "(x, y) must lie on the unit circle");
    assert_eq!(xp * xp + yp * yp, rat(1), "(x', y') must lie on the unit circle");
    let j = j_matrix();
    let jc = conj_j_matrix();
    if similitude_factor(&j) != Some(QuadGaussian::one()) {
        return false;
    }
    if j.matmul(&jc) != Matrix::identity(4) {
        return false;
    }
    let t = torus_point(x, y, xp, yp);
    let q = |v: &BigRational| QuadGaussian::from_rational(v.clone());
    let iy = &QuadGaussian::i() * &q(y);
    let iyp = &QuadGaussian::i() * &q(yp);
    let diag = |a: QuadGaussian, b: QuadGaussian, c: QuadGaussian, d: QuadGaussian| {
        let mut m: CMat = Matrix::zero(4, 4);
        m[(0, 0)] = a;
        m[(1, 1)] = b;
        m[(2, 2)] = c;
        m[(3, 3)] = d;
        m
    };
    // J⁻¹ = conj(J), so J⁻¹ t J is jc·t·j.
    let by_j = jc.matmul(&t).matmul(&j);
    let by_jc = j.matmul(&t).matmul(&jc);
    by_j == diag(&q(x) + &iy, &q(xp) + &iyp, &q(x) - &iy, &q(xp) - &iyp)
        && by_jc == diag(&q(x) - &iy, &q(xp) - &iyp, &q(x) + &iy, &q(xp) + &iyp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use crate::liealg::matrix::{bracket, cmat_from_int};

    fn i_times(m: &CMat) -> CMat {
        m.scale(&QuadGaussian::i())
    }

    #[test]
    fn cartan_generators_match_known_matrices() {
        let rv = RootVectors::build(&rat(1));
        assert_eq!(
            rv.t1,
            cmat_from_int([[0, 0, 1, 0], [0, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0]])
        );
        assert_eq!(
            rv.t2,
            cmat_from_int([[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, -1, 0, 0]])
        );
        // H₁ = −i T₁ so that adjoint eigenvalues are integers.
        assert_eq!(rv.h1, i_times(&rv.t1).scale(&QuadGaussian::from_int(-1)));
        assert_eq!(rv.h2, i_times(&rv.t2).scale(&QuadGaussian::from_int(-1)));
    }

    #[test]
    fn compact_root_vector_has_expected_entries() {
        // dκ(E₁₂) = ½·[[0,1,0,−i],[−1,0,−i,0],[0,i,0,1],[i,0,−1,0]].
        let got = dkappa(&e2(0, 1));
        let i = QuadGaussian::i();
        let one = QuadGaussian::one();
        let z = QuadGaussian::zero;
        let expected = super::super::matrix::cmat([
            z(), one.clone(), z(), -&i,
            -&one, z(), -&i, z(),
            z(), i.clone(), z(), one.clone(),
            i.clone(), z(), -&one, z(),
        ])
        .scale(&half());
        assert_eq!(got, expected);
    }

    #[test]
    fn dkappa_respects_brackets() {
        let gens = [e2(0, 0), e2(0, 1), e2(1, 0), e2(1, 1)];
        for a in &gens {
            for b in &gens {
                // [Z, W] in gl(2) first, then embed.
                let mut zw: TwoByTwo = Default::default();
                for i in 0..2 {
                    for j in 0..2 {
                        for k in 0..2 {
                            zw[i][j] = &zw[i][j] + &(&a[i][k] * &b[k][j]);
                            zw[i][j] = &zw[i][j] - &(&b[i][k] * &a[k][j]);
                        }
                    }
                }
                assert_eq!(dkappa(&zw), bracket(&dkappa(a), &dkappa(b)));
            }
        }
    }

    #[test]
    fn all_root_vectors_have_their_weights() {
        for scale in [rat(1), ratio(1, 2), rat(-3)] {
            let rv = RootVectors::build(&scale);
            for (x, w) in rv.labeled_roots() {
                assert!(verify_root_vector(&rv, x, w), "weight {w:?} failed at scale {scale}");
            }
        }
    }

    #[test]
    #[should_panic(expected = "nonzero")]
    fn zero_scale_rejected() {
        RootVectors::build(&rat(0));
    }

    #[test]
    fn triangular_decomposition() {
        assert!(cartan_decomposition_check(&RootVectors::build(&rat(1))));
        assert!(cartan_decomposition_check(&RootVectors::build(&ratio(2, 7))));
    }

    #[test]
    fn bracket_of_opposite_long_roots_is_cartan() {
        let rv = RootVectors::build(&rat(1));
        // [X₍₂,₀₎, X₍₋₂,₀₎] = 4H₁ at scale 1.
        assert_eq!(bracket(&rv.x20, &rv.xm20), rv.h1.scale(&QuadGaussian::from_int(4)));
    }

    #[test]
    fn torus_diagonalization_at_rational_circle_points() {
        for (s, t) in [(rat(0), rat(2)), (ratio(1, 2), ratio(-1, 3)), (rat(3), ratio(2, 5))] {
            let (x, y) = circle_point(&s);
            let (xp, yp) = circle_point(&t);
            assert!(verify_torus_diagonalization(&x, &y, &xp, &yp));
        }
    }

    #[test]
    fn circle_points_are_on_the_circle() {
        for t in [rat(0), rat(1), ratio(-7, 3), rat(100)] {
            let (x, y) = circle_point(&t);
            assert_eq!(&x * &x + &y * &y, rat(1));
        }
    }
}
