//! Dense exact linear algebra over a field (rationals or Q(i,√2)): reduced
//! row echelon form, rank, nullspace, determinant, inverse, and linear
//! solving. Everything is plain Gaussian elimination; with exact scalars
//! there are no tolerance questions.

use crate::exactnum::QuadGaussian;
use num_rational::BigRational;
use num_traits::Zero;

/// The scalar operations elimination needs.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Field for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        BigRational::from_integer(1.into())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Field for QuadGaussian {
    fn zero() -> Self {
        QuadGaussian::zero()
    }
    fn one() -> Self {
        QuadGaussian::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        QuadGaussian::inv(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        QuadGaussian::is_zero(self)
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data size mismatch");
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![F::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn matmul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut m = Self::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    m[(i, j)] = m[(i, j)].add(&a.mul(&o[(k, j)]));
                }
            }
        }
        m
    }

    pub fn add_mat(&self, o: &Self) -> Self {
        assert!(self.rows == o.rows && self.cols == o.cols);
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect();
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn sub_mat(&self, o: &Self) -> Self {
        assert!(self.rows == o.rows && self.cols == o.cols);
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect();
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix::new(self.rows, self.cols, self.data.iter().map(|a| a.mul(s)).collect())
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn trace(&self) -> F {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).fold(F::zero(), |acc, i| acc.add(&self[(i, i)]))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix::new(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let piv_inv = self[(r, c)].inv();
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].mul(&piv_inv);
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in c..self.cols {
                        let t = factor.mul(&self[(r, j)]);
                        self[(i, j)] = self[(i, j)].sub(&t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {x : self · xᵀ = 0} as row vectors (kernel of the map given
    /// by rows acting on coordinate columns).
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = r[(prow, free)].neg();
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = det.neg();
            }
            det = det.mul(&m[(c, c)]);
            let inv = m[(c, c)].inv();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].mul(&inv);
                for j in c..n {
                    let t = factor.mul(&m[(c, j)]);
                    m[(i, j)] = m[(i, j)].sub(&t);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// One solution x of self · x = b (x, b column vectors), or None when
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the augmented column means inconsistent
        }
        let mut x = vec![F::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug[(prow, self.cols)].clone();
        }
        Some(x)
    }

}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

/// Coordinates of v in the span of `basis` rows, or None if v is outside.
pub fn coordinates_in_span<F: Field>(basis: &Matrix<F>, v: &[F]) -> Option<Vec<F>> {
    basis.transpose().solve(v)
}

/// True when v lies in the row span of `basis`.
pub fn in_span<F: Field>(basis: &Matrix<F>, v: &[F]) -> bool {
    coordinates_in_span(basis, v).is_some()
}
