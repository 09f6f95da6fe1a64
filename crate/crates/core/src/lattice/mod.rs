//! p-local lattices in rational inner-product spaces: Gram discriminants,
//! dual lattices and indices, the self-dual splitting duality, similarity of
//! discriminants modulo unit squares, and congruence-prime scans on Hecke
//! eigen systems.

mod eigensys;
pub mod fp;
pub mod fpoly;
mod io;
mod random;

pub use eigensys::{
    congruence_prime_scan, CongruenceWitness, EigenSystem, ScanError, ScanOutcome,
};
pub use io::{
    parse_eigen_json, parse_lattice_json, render_eigen_json, render_lattice_json, LatticeFile,
    ParseError,
};
pub use random::{
    random_dual_index_instance, random_split_instance, random_unimodular_at_p, SplitInstance,
};

use crate::exactnum::{is_p_integral, rat, rational_valuation, BigRational};
use crate::linalg::Matrix;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("basis matrix must be square and nonsingular")]
    SingularBasis,
    #[error("Gram matrix is degenerate")]
    DegenerateForm,
    #[error("Gram matrix does not match its symmetry flag ({0})")]
    FormFlagMismatch(&'static str),
    #[error("dimension mismatch: lattice is {0}-dimensional, form is {1}-dimensional")]
    DimensionMismatch(usize, usize),
    #[error("basis pairing entry ({0},{1}) is not integral at {2}")]
    NonIntegralPairing(usize, usize, u64),
    #[error("lattice is not contained in its dual")]
    NotContainedInDual,
    #[error("splitter matrix is not idempotent")]
    NotIdempotent,
    #[error("splitter does not give an orthogonal splitting for the form")]
    NotOrthogonal,
    #[error("lattice is not self-dual for the form")]
    NotSelfDual,
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Full-rank lattice over Z_(p) inside Q^n, presented by basis rows.
#[derive(Clone, PartialEq, Debug)]
pub struct LatticeZp {
    prime: u64,
    basis: Matrix<BigRational>,
}

impl LatticeZp {
    pub fn new(prime: u64, basis: Matrix<BigRational>) -> Result<Self, LatticeError> {
        if !is_prime_u64(prime) {
            return Err(LatticeError::NotPrime(prime));
        }
        if basis.rows != basis.cols || basis.rank() != basis.rows {
            return Err(LatticeError::SingularBasis);
        }
        Ok(LatticeZp { prime, basis })
    }

    /// Z_(p)^n with the standard basis.
    pub fn standard(prime: u64, n: usize) -> Self {
        LatticeZp::new(prime, Matrix::identity(n)).unwrap()
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &Matrix<BigRational> {
        &self.basis
    }

    /// x ∈ L iff its coordinates over the basis are all p-integral.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        let coords = self
            .basis
            .transpose()
            .solve(x)
            .expect("basis is nonsingular");
        coords.iter().all(|c| is_p_integral(self.prime, c))
    }

    /// other ⊆ self.
    pub fn contains_lattice(&self, other: &LatticeZp) -> bool {
        assert_eq!(self.prime, other.prime, "lattices live at different primes");
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn same_lattice(&self, other: &LatticeZp) -> bool {
        self.contains_lattice(other) && other.contains_lattice(self)
    }
}

/// Rational bilinear form on the ambient space, symmetric or alternating.
#[derive(Clone, PartialEq, Debug)]
pub struct BilinearForm {
    gram: Matrix<BigRational>,
    alternating: bool,
}

impl BilinearForm {
    pub fn new(gram: Matrix<BigRational>, alternating: bool) -> Result<Self, LatticeError> {
        assert_eq!(gram.rows, gram.cols, "Gram matrix must be square");
        let flipped = gram.transpose();
        let ok = if alternating {
            flipped == gram.scale(&rat(-1))
        } else {
            flipped == gram
        };
        if !ok {
            return Err(LatticeError::FormFlagMismatch(if alternating {
                "alternating"
            } else {
                "symmetric"
            }));
        }
        Ok(BilinearForm { gram, alternating })
    }

    pub fn identity(n: usize) -> Self {
        BilinearForm { gram: Matrix::identity(n), alternating: false }
    }

    pub fn gram(&self) -> &Matrix<BigRational> {
        &self.gram
    }

    pub fn alternating(&self) -> bool {
        self.alternating
    }

    pub fn dim(&self) -> usize {
        self.gram.rows
    }

    pub fn pair(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        assert!(x.len() == self.dim() && y.len() == self.dim());
        let mut acc = rat(0);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                acc += &x[i] * &self.gram[(i, j)] * &y[j];
            }
        }
        acc
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.gram.det().is_zero()
    }
}

fn check_dims(l: &LatticeZp, b: &BilinearForm) -> Result<(), LatticeError> {
    if l.dim() != b.dim() {
        return Err(LatticeError::DimensionMismatch(l.dim(), b.dim()));
    }
    Ok(())
}

/// Gram matrix of the lattice basis under the form: B·G·Bᵀ.
fn basis_gram(l: &LatticeZp, b: &BilinearForm) -> Matrix<BigRational> {
    l.basis.matmul(&b.gram).matmul(&l.basis.transpose())
}

/// det⟨δ_i, δ_j⟩ over the lattice basis. Well defined up to squares of
/// p-units across basis changes; requires all pairings p-integral.
pub fn gram_discriminant(l: &LatticeZp, b: &BilinearForm) -> Result<BigRational, LatticeError> {
    check_dims(l, b)?;
    let m = basis_gram(l, b);
    for i in 0..m.rows {
        for j in 0..m.cols {
            if !is_p_integral(l.prime, &m[(i, j)]) {
                return Err(LatticeError::NonIntegralPairing(i, j, l.prime));
            }
        }
    }
    Ok(m.det())
}

/// L* = {x : ⟨x, y⟩ ∈ Z_(p) for all y ∈ L}, via the dual basis
/// D = (G·Bᵀ)⁻¹ (rows pair to δ_ij with the rows of B).
pub fn dual_lattice(l: &LatticeZp, b: &BilinearForm) -> Result<LatticeZp, LatticeError> {
    check_dims(l, b)?;
    let d = b
        .gram
        .matmul(&l.basis.transpose())
        .inverse()
        .ok_or(LatticeError::DegenerateForm)?;
    LatticeZp::new(l.prime, d)
}

/// Valuations of the elementary divisors at p of a nonsingular p-integral
/// matrix, by Smith-type reduction over the local ring Z_(p): pivot on a
/// minimal-valuation entry, clear its row and column with p-integral
/// multipliers, recurse.
pub fn elementary_divisor_valuations(m: &Matrix<BigRational>, p: u64) -> Vec<i64> {
    let mut m = m.clone();
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut vals = Vec::with_capacity(n);
    for k in 0..n {
        let mut best: Option<(usize, usize, i64)> = None;
        for i in k..n {
            for j in k..n {
                if let Some(v) = rational_valuation(p, &m[(i, j)]) {
                    assert!(v >= 0, "matrix entry not p-integral");
                    if best.map_or(true, |(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        let (pi, pj, v) = best.expect("matrix is singular");
        m.swap_rows(k, pi);
        swap_cols(&mut m, k, pj);
        let pivot = m[(k, k)].clone();
        for i in (k + 1)..n {
            if m[(i, k)].is_zero() {
                continue;
            }
            let f = &m[(i, k)] / &pivot;
            debug_assert!(is_p_integral(p, &f));
            for j in k..n {
                let sub = &f * &m[(k, j)];
                m[(i, j)] = &m[(i, j)] - &sub;
            }
        }
        for j in (k + 1)..n {
            if m[(k, j)].is_zero() {
                continue;
            }
            let f = &m[(k, j)] / &pivot;
            for i in k..n {
                let sub = &f * &m[(i, k)];
                m[(i, j)] = &m[(i, j)] - &sub;
            }
        }
        vals.push(v);
    }
    vals.sort_unstable();
    vals
}

/// [L* : L] as a power of p, by elementary-divisor reduction of the basis
/// Gram matrix (which is exactly the change of basis from L* to L).
pub fn dual_index(l: &LatticeZp, b: &BilinearForm) -> Result<BigRational, LatticeError> {
    check_dims(l, b)?;
    if !b.is_nondegenerate() {
        return Err(LatticeError::DegenerateForm);
    }
    let m = basis_gram(l, b);
    for i in 0..m.rows {
        for j in 0..m.cols {
            if !is_p_integral(l.prime, &m[(i, j)]) {
                return Err(LatticeError::NotContainedInDual);
            }
        }
    }
    let total: i64 = elementary_divisor_valuations(&m, l.prime).iter().sum();
    Ok(crate::exactnum::rational_pow(&rat(l.prime as i64), total))
}

fn swap_cols(m: &mut Matrix<BigRational>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows {
        let tmp = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = tmp;
    }
}

/// Z_(p)-basis of the row span of an arbitrary rational matrix, by
/// Hermite-style reduction over the local ring: pivot on a globally minimal
/// valuation entry so every clearing multiplier is p-integral.
pub fn zp_row_basis(rows: &Matrix<BigRational>, p: u64) -> Matrix<BigRational> {
    let mut m = rows.clone();
    let mut active_rows: Vec<usize> = (0..m.rows).collect();
    let mut active_cols: Vec<usize> = (0..m.cols).collect();
    let mut out_rows: Vec<usize> = Vec::new();
    while !active_rows.is_empty() && !active_cols.is_empty() {
        let mut best: Option<(usize, usize, i64)> = None;
        for &i in &active_rows {
            for &j in &active_cols {
                if let Some(v) = rational_valuation(p, &m[(i, j)]) {
                    if best.map_or(true, |(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else {
            break; // all remaining rows are zero on the remaining columns
        };
        let pivot = m[(pi, pj)].clone();
        // Only active rows are cleared: touching a retired row could need a
        // multiplier below the current minimum valuation, which would leave
        // the ring. Retired rows are frozen, so each is zero on all earlier
        // pivot columns and the output stays triangular.
        for &i in &active_rows {
            if i == pi || m[(i, pj)].is_zero() {
                continue;
            }
            let f = &m[(i, pj)] / &pivot;
            debug_assert!(is_p_integral(p, &f), "pivot was not minimal");
            for j in 0..m.cols {
                let sub = &f * &m[(pi, j)];
                m[(i, j)] = &m[(i, j)] - &sub;
            }
        }
        out_rows.push(pi);
        active_rows.retain(|&r| r != pi);
        active_cols.retain(|&c| c != pj);
    }
    Matrix::from_rows(out_rows.iter().map(|&r| m.row(r).to_vec()).collect())
}

/// Basis of (Q-span of rows) ∩ Z_(p)^n. Rows are first reduced to a
/// Q-independent set, scaled to unit content at p, then repaired: as long as
/// they are dependent mod p, an F_p-dependence divided by p enlarges the
/// span while staying inside the saturation.
pub fn saturate_at_p(rows: &Matrix<BigRational>, p: u64) -> Matrix<BigRational> {
    let (reduced, pivots) = rows.rref();
    let mut basis: Vec<Vec<BigRational>> =
        (0..pivots.len()).map(|i| reduced.row(i).to_vec()).collect();
    for row in &mut basis {
        scale_to_unit_content(row, p);
    }
    loop {
        let table: Vec<Vec<u64>> = basis
            .iter()
            .map(|r| r.iter().map(|x| fp::rational_mod_p(x, p)).collect())
            .collect();
        let Some(lambda) = fp::left_null_vector(&table, p) else {
            break;
        };
        let idx = (0..basis.len())
            .find(|&i| lambda[i] % p != 0)
            .expect("dependence vector is nonzero");
        let pr = rat(p as i64);
        let mut combo = vec![rat(0); basis[0].len()];
        for (i, lam) in lambda.iter().enumerate() {
            if *lam == 0 {
                continue;
            }
            let c = rat(*lam as i64);
            for (dst, src) in combo.iter_mut().zip(&basis[i]) {
                *dst += &c * src;
            }
        }
        for x in &mut combo {
            *x /= &pr; // every entry of the combination is ≡ 0 mod p
        }
        scale_to_unit_content(&mut combo, p);
        basis[idx] = combo;
    }
    Matrix::from_rows(basis)
}

fn scale_to_unit_content(row: &mut [BigRational], p: u64) {
    let min_v = row
        .iter()
        .filter_map(|x| rational_valuation(p, x))
        .min()
        .expect("zero row has no content");
    let scale = crate::exactnum::rational_pow(&rat(p as i64), -min_v);
    for x in row.iter_mut() {
        *x *= &scale;
    }
}

/// For a self-dual L and an idempotent splitter e whose image and co-image
/// are orthogonal under the form: does the projection of L onto W₁ = im(e)
/// equal the lattice dual, inside W₁, of L ∩ W₁?
pub fn split_project_duality_check(
    l: &LatticeZp,
    b: &BilinearForm,
    splitter: &Matrix<BigRational>,
) -> Result<bool, LatticeError> {
    check_dims(l, b)?;
    let n = l.dim();
    assert!(splitter.rows == n && splitter.cols == n, "splitter has wrong shape");
    if splitter.matmul(splitter) != *splitter {
        return Err(LatticeError::NotIdempotent);
    }
    let co = Matrix::identity(n).sub_mat(splitter);
    if !splitter.matmul(&b.gram).matmul(&co.transpose()).is_zero_matrix() {
        return Err(LatticeError::NotOrthogonal);
    }
    if !l.same_lattice(&dual_lattice(l, b)?) {
        return Err(LatticeError::NotSelfDual);
    }
    let k = splitter.rank();
    if k == 0 {
        return Ok(true); // both sides are the zero lattice
    }

    // Projection of L onto W₁: row basis of B·e over Z_(p).
    let projected = zp_row_basis(&l.basis.matmul(splitter), l.prime);
    assert_eq!(projected.rows, k);

    // L ∩ W₁: coordinate vectors c with c·B·(1−e) = 0, saturated at p.
    let kernel = l.basis.matmul(&co).transpose().nullspace();
    let coords = saturate_at_p(&Matrix::from_rows(kernel), l.prime);
    let inner = coords.matmul(&l.basis);
    assert_eq!(inner.rows, k, "intersection rank must match the splitter rank");

    // Dual of L ∩ W₁ inside W₁: rows of M₁⁻¹·C for M₁ = C·G·Cᵀ.
    let m1 = inner.matmul(&b.gram).matmul(&inner.transpose());
    let dual_inside = m1
        .inverse()
        .expect("form is nondegenerate on the split summand")
        .matmul(&inner);

    Ok(same_row_module(&projected, &dual_inside, l.prime))
}

/// Equality of the Z_(p)-spans of two full-row-rank matrices spanning the
/// same rational subspace: mutual coordinates must be p-integral.
fn same_row_module(a: &Matrix<BigRational>, b: &Matrix<BigRational>, p: u64) -> bool {
    integral_coords(a, b, p) && integral_coords(b, a, p)
}

fn integral_coords(a: &Matrix<BigRational>, b: &Matrix<BigRational>, p: u64) -> bool {
    let bt = b.transpose();
    (0..a.rows).all(|i| match bt.solve(&a.row(i)) {
        Some(c) => c.iter().all(|x| is_p_integral(p, x)),
        None => false,
    })
}

/// x ∼ y iff x = s·y with s the square of a p-unit: equal valuations and a
/// square unit ratio (odd p: Euler criterion after Hensel; p = 2: the 2-adic
/// unit squares are exactly 1 mod 8).
pub fn similar_mod_unit_squares(x: &BigRational, y: &BigRational, p: u64) -> bool {
    assert!(is_prime_u64(p), "{p} is not prime");
    let vx = rational_valuation(p, x).expect("similarity needs nonzero inputs");
    let vy = rational_valuation(p, y).expect("similarity needs nonzero inputs");
    if vx != vy {
        return false;
    }
    let u = x / y;
    if p == 2 {
        // u = a/b with a, b odd; b⁻¹ ≡ b mod 8, so u ≡ a·b mod 8.
        let a = u.numer().mod_floor(&num_bigint::BigInt::from(8u8));
        let b = u.denom().mod_floor(&num_bigint::BigInt::from(8u8));
        (a * b) % num_bigint::BigInt::from(8u8) == num_bigint::BigInt::one()
    } else {
        let r = fp::rational_mod_p(&u, p);
        fp::mod_pow(r, (p - 1) / 2, p) == 1
    }
}
