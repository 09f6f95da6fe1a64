//! Irreducible algebraic representations of the symplectic similitude group,
//! realized inside tensor powers of the standard 4-dimensional representation.
//!
//! For a dominant weight λ(k, k', c) with k ≥ k' ≥ 0 and c ≡ k+k' (mod 2),
//! set d = k+k'. Inside (C⁴)^⊗d sits the image of the Young symmetrizer for
//! the two-row partition (k, k') and the joint kernel of all contractions
//! against the symplectic form; their intersection is the irreducible module
//! with highest weight (k, k'), and the leftover similitude exponent is the
//! twist t = (c − k − k')/2. Everything here is exact rational arithmetic in
//! ambient coordinates of dimension 4^d.

use super::matrix::CMat;
use super::roots::{circle_point, conj_j_matrix, j_matrix, torus_point};
use crate::exactnum::{rat, rational_pow, BigRational, QuadGaussian};
use crate::linalg::Matrix;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Character of the diagonal torus diag(a, b, a⁻¹ν, b⁻¹ν) sending it to
/// a^k · b^k' · ν^{(c−k−k')/2}. Doubles as a highest weight when dominant.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AlgebraicWeight {
    pub k: i64,
    pub kp: i64,
    pub c: i64,
}

impl AlgebraicWeight {
    pub fn new(k: i64, kp: i64, c: i64) -> Self {
        assert!(
            (k + kp - c) % 2 == 0,
            "similitude exponent parity violated: k+k' = {} but c = {c}",
            k + kp
        );
        AlgebraicWeight { k, kp, c }
    }

    pub fn is_dominant(&self) -> bool {
        self.k >= self.kp && self.kp >= 0
    }
}

/// Weight (a, b) against the compact Cartan pair (H₁, H₂) = (−iT₁, −iT₂).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AnalyticWeight {
    pub a: i64,
    pub b: i64,
}

/// Which symplectic Cayley element transports algebraic weight vectors to
/// compact-torus eigenvectors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Transport {
    J,
    ConjJ,
}

/// Dimension of the irreducible sp(4) module with highest weight (k, k').
pub fn weyl_dim(k: i64, kp: i64) -> i64 {
    assert!(k >= kp && kp >= 0, "highest weight must be dominant");
    (k - kp + 1) * (kp + 1) * (k + 2) * (k + kp + 3) / 6
}

/// An irreducible module in ambient tensor coordinates. Basis rows are
/// weight-homogeneous; `basis_weights[i] = (u, u', m)` records that row i
/// scales by a^u · b^u' · ν^{m + twist} under diag(a, b, a⁻¹ν, b⁻¹ν).
pub struct WeylModule {
    pub weight: AlgebraicWeight,
    pub degree: usize,
    pub twist: i64,
    pub basis: Vec<Vec<BigRational>>,
    pub basis_weights: Vec<(i64, i64, i64)>,
}

fn index_to_tuple(mut idx: usize, d: usize) -> Vec<u8> {
    let mut t = vec![0u8; d];
    for s in (0..d).rev() {
        t[s] = (idx % 4) as u8;
        idx /= 4;
    }
    t
}

fn tuple_to_index(t: &[u8]) -> usize {
    t.iter().fold(0usize, |acc, &x| acc * 4 + x as usize)
}

/// All permutations of 0..n as images (perm[i] = where slot i goes).
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
    if n == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..n {
        heap_permute(items, n - 1, out);
        if n % 2 == 0 {
            items.swap(i, n - 1);
        } else {
            items.swap(0, n - 1);
        }
    }
}

/// perm sends slot r to perm[r]: (π·I)[π(r)] = I[r].
fn apply_perm(perm: &[usize], tuple: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; tuple.len()];
    for (r, &dst) in perm.iter().enumerate() {
        out[dst] = tuple[r];
    }
    out
}

/// Row-symmetrize then column-antisymmetrize for the two-row partition
/// (k, k') with rows {0..k} and {k..k+k'}; returns the n×n operator matrix.
fn young_symmetrizer(k: usize, kp: usize) -> Matrix<BigRational> {
    let d = k + kp;
    let n = 4usize.pow(d as u32);
    // Row group: independent permutations of the two rows.
    let perms_top = permutations(k);
    let perms_bot = permutations(kp);
    let mut row_group = Vec::with_capacity(perms_top.len() * perms_bot.len());
    for pt in &perms_top {
        for pb in &perms_bot {
            let mut perm = vec![0usize; d];
            for (i, &dst) in pt.iter().enumerate() {
                perm[i] = dst;
            }
            for (i, &dst) in pb.iter().enumerate() {
                perm[k + i] = k + dst;
            }
            row_group.push(perm);
        }
    }
    // Column group: column j pairs slots (j, k+j); enumerate swap subsets.
    let mut col_group = Vec::with_capacity(1 << kp);
    for mask in 0u32..(1 << kp) {
        let mut perm: Vec<usize> = (0..d).collect();
        for j in 0..kp {
            if mask & (1 << j) != 0 {
                perm.swap(j, k + j);
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1i64 } else { -1 };
        col_group.push((perm, sign));
    }

    let mut y = Matrix::zero(n, n);
    for col in 0..n {
        let tuple = index_to_tuple(col, d);
        for sigma in &row_group {
            let mid = apply_perm(sigma, &tuple);
            for (tau, sign) in &col_group {
                let row = tuple_to_index(&apply_perm(tau, &mid));
                y[(row, col)] = &y[(row, col)] + &rat(*sign);
            }
        }
    }
    y
}

/// Stacked matrix of all contractions ⟨slot p, slot q⟩ against the
/// symplectic form, mapping degree-d tensors to degree-(d−2) tensors.
/// Row block order follows lexicographic (p, q).
fn contraction_matrix(d: usize) -> Matrix<BigRational> {
    assert!(d >= 2);
    let n = 4usize.pow(d as u32);
    let n_out = 4usize.pow((d - 2) as u32);
    let pairs: Vec<(usize, usize)> =
        (0..d).flat_map(|p| (p + 1..d).map(move |q| (p, q))).collect();
    // ⟨e_a, e_b⟩ = ᵗe_a J e_b.
    let form = |a: u8, b: u8| -> i64 {
        match (a, b) {
            (0, 2) | (1, 3) => 1,
            (2, 0) | (3, 1) => -1,
            _ => 0,
        }
    };
    let mut m = Matrix::zero(pairs.len() * n_out, n);
    for col in 0..n {
        let tuple = index_to_tuple(col, d);
        for (pi, &(p, q)) in pairs.iter().enumerate() {
            let c = form(tuple[p], tuple[q]);
            if c == 0 {
                continue;
            }
            let rest: Vec<u8> = tuple
                .iter()
                .enumerate()
                .filter(|&(s, _)| s != p && s != q)
                .map(|(_, &x)| x)
                .collect();
            let row = pi * n_out + tuple_to_index(&rest);
            m[(row, col)] = &m[(row, col)] + &rat(c);
        }
    }
    m
}

/// Nonzero rows of the reduced row echelon form.
fn rref_rows(m: &Matrix<BigRational>) -> Vec<Vec<BigRational>> {
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// (u, u', m): exponents of a, b, ν for the coordinate index.
fn tuple_weight(tuple: &[u8]) -> (i64, i64, i64) {
    let mut w = (0i64, 0i64, 0i64);
    for &x in tuple {
        match x {
            0 => w.0 += 1,
            1 => w.1 += 1,
            2 => {
                w.0 -= 1;
                w.2 += 1;
            }
            _ => {
                w.1 -= 1;
                w.2 += 1;
            }
        }
    }
    w
}

/// Build the irreducible module for a dominant weight with k + k' ≤ 4.
pub fn weyl_construct(lambda: &AlgebraicWeight) -> WeylModule {
    assert!(lambda.is_dominant(), "weight {lambda:?} is not dominant");
    let k = lambda.k as usize;
    let kp = lambda.kp as usize;
    let d = k + kp;
    assert!(d <= 4, "tensor degree {d} too large; only k+k' <= 4 is supported");
    let twist = (lambda.c - (d as i64)) / 2;
    let n = 4usize.pow(d as u32);

    let image = rref_rows(&young_symmetrizer(k, kp).transpose());
    let vectors: Vec<Vec<BigRational>> = if d < 2 {
        image
    } else {
        let kernel = contraction_matrix(d).nullspace();
        let (a, b) = (image.len(), kernel.len());
        // Columns: image coefficients α then kernel coefficients β;
        // right-kernel rows solve Σ αᵢ·imageᵢ = Σ βⱼ·kernelⱼ.
        let mut stacked = Matrix::zero(n, a + b);
        for (i, v) in image.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                stacked[(j, i)] = x.clone();
            }
        }
        for (i, v) in kernel.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                stacked[(j, a + i)] = -x.clone();
            }
        }
        let combos = stacked.nullspace();
        let mut vecs = Vec::with_capacity(combos.len());
        for coef in &combos {
            let mut v = vec![BigRational::zero(); n];
            for (i, im) in image.iter().enumerate() {
                if coef[i].is_zero() {
                    continue;
                }
                for (j, x) in im.iter().enumerate() {
                    v[j] = &v[j] + &(&coef[i] * x);
                }
            }
            vecs.push(v);
        }
        vecs
    };

    // Torus stability means the module splits over the coordinate weight
    // grading; project each vector to its homogeneous pieces, then reduce
    // within each weight class to a clean basis.
    let index_weights: Vec<(i64, i64, i64)> =
        (0..n).map(|i| tuple_weight(&index_to_tuple(i, d))).collect();
    let mut classes: BTreeMap<(i64, i64, i64), Vec<Vec<BigRational>>> = BTreeMap::new();
    for v in &vectors {
        let mut pieces: BTreeMap<(i64, i64, i64), Vec<BigRational>> = BTreeMap::new();
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            pieces
                .entry(index_weights[j])
                .or_insert_with(|| vec![BigRational::zero(); n])[j] = x.clone();
        }
        for (w, piece) in pieces {
            classes.entry(w).or_default().push(piece);
        }
    }

    let mut basis = Vec::new();
    let mut basis_weights = Vec::new();
    let mut ordered: Vec<_> = classes.into_iter().collect();
    // Highest weight first: sort by (u, u') descending.
    ordered.sort_by(|x, y| (y.0 .0, y.0 .1).cmp(&(x.0 .0, x.0 .1)));
    for (w, vecs) in ordered {
        for row in rref_rows(&Matrix::from_rows(vecs)) {
            basis.push(row);
            basis_weights.push(w);
        }
    }

    WeylModule { weight: *lambda, degree: d, twist, basis, basis_weights }
}

impl WeylModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        4usize.pow(self.degree as u32)
    }

    /// Row index of the highest weight vector (unique by irreducibility).
    pub fn highest_weight_row(&self) -> usize {
        let target = (self.weight.k, self.weight.kp);
        let hits: Vec<usize> = self
            .basis_weights
            .iter()
            .enumerate()
            .filter(|(_, w)| (w.0, w.1) == target)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(hits.len(), 1, "highest weight space must be a line");
        hits[0]
    }

    /// Full torus character of row i as λ'(u, u', c).
    pub fn algebraic_weight_of_row(&self, i: usize) -> AlgebraicWeight {
        let (u, up, m) = self.basis_weights[i];
        AlgebraicWeight { k: u, kp: up, c: u + up + 2 * (m + self.twist) }
    }

    /// Check every basis row scales correctly under diag(a, b, a⁻¹ν, b⁻¹ν).
    /// The ambient realization carries the untwisted action; the similitude
    /// twist is a formal character factor ν^twist on top of it, which is
    /// why the expected eigenvalue here uses m alone while
    /// [`Self::algebraic_weight_of_row`] reports the full character.
    pub fn torus_eigen_check(&self, a: &BigRational, b: &BigRational, nu: &BigRational) -> bool {
        assert!(!a.is_zero() && !b.is_zero() && !nu.is_zero());
        let mut t = Matrix::zero(4, 4);
        t[(0, 0)] = a.clone();
        t[(1, 1)] = b.clone();
        t[(2, 2)] = nu / a;
        t[(3, 3)] = nu / b;
        self.basis.iter().zip(&self.basis_weights).all(|(row, &(u, up, m))| {
            let image = apply_factorwise(&t, self.degree, row);
            let scalar = rational_pow(a, u) * rational_pow(b, up) * rational_pow(nu, m);
            image.iter().zip(row).all(|(got, x)| *got == &scalar * x)
        })
    }

    /// Every contraction against the symplectic form kills the module.
    pub fn contraction_annihilation_check(&self) -> bool {
        if self.degree < 2 {
            return true;
        }
        let c = contraction_matrix(self.degree);
        self.basis.iter().all(|row| {
            (0..c.rows).all(|r| {
                let mut acc = BigRational::zero();
                for j in 0..c.cols {
                    if !c[(r, j)].is_zero() && !row[j].is_zero() {
                        acc += &c[(r, j)] * &row[j];
                    }
                }
                acc.is_zero()
            })
        })
    }

    /// Apply the Cayley transport to a basis row, landing in Q(i,√2)
    /// coordinates.
    pub fn transported_row(&self, i: usize, t: Transport) -> Vec<QuadGaussian> {
        let g: CMat = match t {
            Transport::J => j_matrix(),
            Transport::ConjJ => conj_j_matrix(),
        };
        let row: Vec<QuadGaussian> =
            self.basis[i].iter().map(|x| QuadGaussian::from_rational(x.clone())).collect();
        apply_factorwise(&g, self.degree, &row)
    }

    /// Compact-torus weight of the transported row: J preserves the sign of
    /// the algebraic weight, conj(J) flips it.
    pub fn analytic_weight_of_transported(&self, i: usize, t: Transport) -> AnalyticWeight {
        let (u, up, _) = self.basis_weights[i];
        match t {
            Transport::J => AnalyticWeight { a: u, b: up },
            Transport::ConjJ => AnalyticWeight { a: -u, b: -up },
        }
    }

    /// Exact eigenvector check for the transported row at the rational
    /// circle points determined by slopes s₁, s₂: the compact torus element
    /// t(x, y, x', y') scales it by (x+iy)^a (x'+iy')^b.
    pub fn verify_transported_weight(
        &self,
        i: usize,
        t: Transport,
        s1: &BigRational,
        s2: &BigRational,
    ) -> bool {
        let (x, y) = circle_point(s1);
        let (xp, yp) = circle_point(s2);
        let torus = torus_point(&x, &y, &xp, &yp);
        let v = self.transported_row(i, t);
        let image = apply_factorwise(&torus, self.degree, &v);
        let w = self.analytic_weight_of_transported(i, t);
        let ei = |re: &BigRational, im: &BigRational| {
            &QuadGaussian::from_rational(re.clone())
                + &(&QuadGaussian::i() * &QuadGaussian::from_rational(im.clone()))
        };
        let scalar = &ei(&x, &y).pow(w.a) * &ei(&xp, &yp).pow(w.b);
        image.iter().zip(&v).all(|(got, x)| *got == &scalar * x)
    }
}

/// Apply a 4×4 matrix to every tensor factor of a 4^d coordinate vector:
/// the diagonal action of the matrix on the tensor power.
pub fn apply_factorwise<F: crate::linalg::Field>(m: &Matrix<F>, d: usize, v: &[F]) -> Vec<F> {
    assert!(m.rows == 4 && m.cols == 4);
    assert_eq!(v.len(), 4usize.pow(d as u32));
    let mut cur = v.to_vec();
    for slot in 0..d {
        let stride = 4usize.pow((d - 1 - slot) as u32);
        let mut next = vec![F::zero(); cur.len()];
        for (idx, x) in cur.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let digit = (idx / stride) % 4;
            let base = idx - digit * stride;
            for r in 0..4 {
                let c = m[(r, digit)].mul(x);
                if !c.is_zero() {
                    let dst = base + r * stride;
                    next[dst] = next[dst].add(&c);
                }
            }
        }
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn dimension_formula_spot_values() {
        assert_eq!(weyl_dim(0, 0), 1);
        assert_eq!(weyl_dim(1, 0), 4);
        assert_eq!(weyl_dim(1, 1), 5);
        assert_eq!(weyl_dim(2, 0), 10);
        assert_eq!(weyl_dim(2, 1), 16);
        assert_eq!(weyl_dim(2, 2), 14);
        assert_eq!(weyl_dim(3, 1), 35);
        assert_eq!(weyl_dim(4, 0), 35);
    }

    #[test]
    fn constructed_dimensions_match_formula() {
        for (k, kp) in [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)] {
            let m = weyl_construct(&AlgebraicWeight::new(k, kp, k + kp));
            assert_eq!(m.dim() as i64, weyl_dim(k, kp), "dim mismatch at ({k}, {kp})");
        }
    }

    #[test]
    fn contractions_kill_every_module_vector() {
        for (k, kp) in [(1, 1), (2, 0), (2, 1)] {
            let m = weyl_construct(&AlgebraicWeight::new(k, kp, k + kp));
            assert!(m.contraction_annihilation_check());
        }
    }

    #[test]
    fn standard_rep_is_whole_space() {
        let m = weyl_construct(&AlgebraicWeight::new(1, 0, 1));
        assert_eq!(m.dim(), 4);
        assert_eq!(m.degree, 1);
        let ws: Vec<_> = m.basis_weights.iter().map(|&(u, up, _)| (u, up)).collect();
        assert_eq!(ws, vec![(1, 0), (0, 1), (0, -1), (-1, 0)]);
    }

    #[test]
    fn torus_acts_by_recorded_weights() {
        let points = [
            (rat(2), rat(3), rat(1)),
            (rat(5), rat(7), rat(3)),
            (ratio(1, 2), ratio(-2, 3), rat(-5)),
        ];
        for (k, kp, c) in [(1, 0, 1), (1, 1, 2), (2, 0, 2), (2, 0, 4)] {
            let m = weyl_construct(&AlgebraicWeight::new(k, kp, c));
            for (a, b, nu) in &points {
                assert!(m.torus_eigen_check(a, b, nu), "failed at ({k},{kp},{c})");
            }
        }
    }

    #[test]
    fn central_character_is_constant() {
        for (k, kp) in [(1, 0), (1, 1), (2, 0), (2, 1)] {
            let m = weyl_construct(&AlgebraicWeight::new(k, kp, k + kp));
            for &(u, up, nu) in &m.basis_weights {
                assert_eq!(u + up + 2 * nu, k + kp);
            }
            for i in 0..m.dim() {
                assert_eq!(m.algebraic_weight_of_row(i).c, m.weight.c);
            }
        }
    }

    #[test]
    fn adjoint_type_module_has_root_weights() {
        let m = weyl_construct(&AlgebraicWeight::new(2, 0, 2));
        let mut counts: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for &(u, up, _) in &m.basis_weights {
            *counts.entry((u, up)).or_default() += 1;
        }
        for root in [(2, 0), (-2, 0), (0, 2), (0, -2), (1, 1), (1, -1), (-1, 1), (-1, -1)] {
            assert_eq!(counts.get(&root), Some(&1), "root {root:?}");
        }
        assert_eq!(counts.get(&(0, 0)), Some(&2));
    }

    #[test]
    fn highest_weight_line_exists() {
        for (k, kp) in [(1, 0), (1, 1), (2, 0), (2, 2)] {
            let m = weyl_construct(&AlgebraicWeight::new(k, kp, k + kp));
            let i = m.highest_weight_row();
            assert_eq!(
                (m.basis_weights[i].0, m.basis_weights[i].1),
                (k, kp)
            );
        }
    }

    #[test]
    fn transported_rows_are_compact_torus_eigenvectors() {
        let slopes = [(ratio(1, 2), rat(2)), (rat(0), ratio(-1, 3))];
        for (k, kp, c) in [(1, 0, 1), (1, 1, 2)] {
            let m = weyl_construct(&AlgebraicWeight::new(k, kp, c));
            for i in 0..m.dim() {
                for t in [Transport::J, Transport::ConjJ] {
                    for (s1, s2) in &slopes {
                        assert!(
                            m.verify_transported_weight(i, t, s1, s2),
                            "({k},{kp}) row {i} transport {t:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn transport_flips_sign_under_conjugation() {
        let m = weyl_construct(&AlgebraicWeight::new(1, 1, 2));
        let i = m.highest_weight_row();
        assert_eq!(
            m.analytic_weight_of_transported(i, Transport::J),
            AnalyticWeight { a: 1, b: 1 }
        );
        assert_eq!(
            m.analytic_weight_of_transported(i, Transport::ConjJ),
            AnalyticWeight { a: -1, b: -1 }
        );
    }

    #[test]
    #[should_panic(expected = "parity")]
    fn weight_parity_is_enforced() {
        AlgebraicWeight::new(1, 0, 2);
    }

    #[test]
    #[should_panic(expected = "dominant")]
    fn dominance_is_enforced() {
        weyl_construct(&AlgebraicWeight::new(0, 1, 1));
    }
}
