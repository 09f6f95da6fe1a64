//! Seeded random instances for the duality properties: unimodular-at-p basis
//! changes, lattices with prescribed p-power content, and self-dual lattices
//! carrying orthogonal idempotent splitters.

use super::{BilinearForm, LatticeZp};
use crate::exactnum::{rat, ratio, BigRational};
use crate::linalg::Matrix;
use rand::Rng;

/// Invertible over Z_(p): built from the identity by row swaps, small
/// integer row additions, and scalings by p-units.
pub fn random_unimodular_at_p(rng: &mut impl Rng, n: usize, p: u64) -> Matrix<BigRational> {
    const UNITS: [(i64, i64); 6] = [(-1, 1), (2, 1), (3, 1), (1, 2), (1, 3), (-3, 2)];
    let mut m = Matrix::identity(n);
    for _ in 0..(3 * n + 2) {
        match rng.gen_range(0..4u8) {
            0 => {
                let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                m.swap_rows(a, b);
            }
            1 => {
                let u = loop {
                    let (num, den) = UNITS[rng.gen_range(0..UNITS.len())];
                    if num.unsigned_abs() % p != 0 && den.unsigned_abs() % p != 0 {
                        break ratio(num, den);
                    }
                };
                let i = rng.gen_range(0..n);
                for col in 0..n {
                    m[(i, col)] = &m[(i, col)] * &u;
                }
            }
            _ => {
                let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if i != j {
                    let c = rat(rng.gen_range(-3i64..=3));
                    for col in 0..n {
                        let add = &c * &m[(j, col)];
                        m[(i, col)] = &m[(i, col)] + &add;
                    }
                }
            }
        }
    }
    m
}

fn p_power_diagonal(rng: &mut impl Rng, n: usize, p: u64, max_exp: u32) -> Matrix<BigRational> {
    let mut d = Matrix::zero(n, n);
    for i in 0..n {
        let e = rng.gen_range(0..=max_exp);
        d[(i, i)] = rat((p as i64).pow(e));
    }
    d
}

/// A lattice contained in its dual: basis T·diag(p^{e_i}) and ambient form
/// Sᵀ·diag(p^{f_i})·S with T, S unimodular at p, so the basis Gram matrix is
/// p-integral while its discriminant carries a nontrivial p-part.
pub fn random_dual_index_instance(
    rng: &mut impl Rng,
    n: usize,
    p: u64,
) -> (LatticeZp, BilinearForm) {
    let t = random_unimodular_at_p(rng, n, p);
    let basis = t.matmul(&p_power_diagonal(rng, n, p, 2));
    let s = random_unimodular_at_p(rng, n, p);
    let gram = s.transpose().matmul(&p_power_diagonal(rng, n, p, 1)).matmul(&s);
    let lattice = LatticeZp::new(p, basis).expect("construction is nonsingular");
    let form = BilinearForm::new(gram, false).expect("construction is symmetric");
    (lattice, form)
}

pub struct SplitInstance {
    pub lattice: LatticeZp,
    pub form: BilinearForm,
    pub splitter: Matrix<BigRational>,
}

/// Self-dual lattice with a form-orthogonal idempotent splitter: the form is
/// UᵀU (or Uᵀ·J·U in the alternating case) for unimodular-at-p U, the basis
/// is unimodular-at-p, and the splitter projects onto a random subspace
/// along its orthogonal complement.
pub fn random_split_instance(
    rng: &mut impl Rng,
    n: usize,
    p: u64,
    alternating: bool,
) -> SplitInstance {
    assert!(n >= 2);
    assert!(
        !alternating || (n % 2 == 0 && n >= 4),
        "alternating splits need even dimension at least 4"
    );
    let u = random_unimodular_at_p(rng, n, p);
    let core = if alternating {
        let mut j = Matrix::zero(n, n);
        for i in 0..n / 2 {
            j[(i, n / 2 + i)] = rat(1);
            j[(n / 2 + i, i)] = rat(-1);
        }
        j
    } else {
        Matrix::identity(n)
    };
    let gram = u.transpose().matmul(&core).matmul(&u);
    let form = BilinearForm::new(gram, alternating).expect("symmetry matches the flag");
    let basis = random_unimodular_at_p(rng, n, p);
    let lattice = LatticeZp::new(p, basis).expect("unimodular basis is nonsingular");

    let splitter = loop {
        let k = if alternating {
            2 * rng.gen_range(1..=n / 2 - 1)
        } else {
            rng.gen_range(1..n)
        };
        let mut r = Matrix::zero(k, n);
        for i in 0..k {
            for j in 0..n {
                r[(i, j)] = rat(rng.gen_range(-3i64..=3));
            }
        }
        if r.rank() < k {
            continue;
        }
        // Orthogonal complement of the row space of R under the form.
        let complement = Matrix::from_rows(r.matmul(form.gram()).nullspace());
        let mut stacked = r.rows_vec();
        stacked.extend(complement.rows_vec());
        let f = Matrix::from_rows(stacked);
        let Some(f_inv) = f.inverse() else {
            continue; // the form degenerates on the chosen subspace; redraw
        };
        let mut delta = Matrix::zero(n, n);
        for i in 0..k {
            delta[(i, i)] = rat(1);
        }
        break f_inv.matmul(&delta).matmul(&f);
    };
    SplitInstance { lattice, form, splitter }
}
