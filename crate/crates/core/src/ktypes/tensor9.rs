//! The 9-dimensional K-module Λ²p⁺ ⊗ p⁻ and its decomposition
//! τ_(3,−1) ⊕ τ_(2,0) ⊕ τ_(1,1).
//!
//! Basis: b₁, …, b₉ runs through (X₍₂,₀₎∧X₍₁,₁₎, X₍₂,₀₎∧X₍₀,₂₎,
//! X₍₁,₁₎∧X₍₀,₂₎) × (X₍₀,₋₂₎, X₍₋₁,₋₁₎, X₍₋₂,₀₎) with the p⁻ factor varying
//! fastest. All K-actions are induced from honest brackets of 4×4 matrices,
//! so every sign convention downstream of the root vectors is inherited
//! rather than assumed; the frozen tables in this file are the values those
//! conventions are checked against.

use super::tau::TauPair;
use crate::exactnum::{rat, ratio, BigRational};
use crate::liealg::{bracket, CMat, RootVectors};
use crate::linalg::{coordinates_in_span, Matrix};
use num_traits::Zero;
use std::collections::BTreeMap;

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// Weight of each basis vector b₁, …, b₉ against (H₁, H₂).
pub fn tensor9_weights() -> [(i64, i64); 9] {
    [(3, -1), (2, 0), (1, 1), (2, 0), (1, 1), (0, 2), (1, 1), (0, 2), (-1, 3)]
}

fn flatten(m: &CMat) -> Vec<crate::exactnum::QuadGaussian> {
    m.entries().to_vec()
}

/// 3×3 matrices of ad(z) on p⁺ and p⁻ in the bases (X₍₂,₀₎, X₍₁,₁₎, X₍₀,₂₎)
/// and (X₍₀,₋₂₎, X₍₋₁,₋₁₎, X₍₋₂,₀₎); columns hold bracket coordinates.
/// Returns None when some bracket leaves the span or has an irrational
/// coordinate — i.e. exactly when z does not act like a complexified
/// compact-group element on these spaces.
pub fn k_action_matrices(
    z: &CMat,
    rv: &RootVectors,
) -> Option<(Matrix<BigRational>, Matrix<BigRational>)> {
    let mut out = Vec::with_capacity(2);
    for basis in [rv.p_plus_basis(), rv.p_minus_basis()] {
        let span = Matrix::from_rows(basis.iter().map(|m| flatten(m)).collect());
        let mut action = Matrix::zero(3, 3);
        for (j, b) in basis.iter().enumerate() {
            let coords = coordinates_in_span(&span, &flatten(&bracket(z, b)))?;
            for (i, c) in coords.iter().enumerate() {
                action[(i, j)] = c.as_rational()?.clone();
            }
        }
        out.push(action);
    }
    let pm = out.pop().unwrap();
    let pp = out.pop().unwrap();
    Some((pp, pm))
}

/// 9×9 matrix of the induced action of z on Λ²p⁺ ⊗ p⁻ (columns = images of
/// the bᵢ), by the Leibniz rule on both tensor factors and the wedge.
pub fn action_on_tensor9(z: &CMat, rv: &RootVectors) -> Option<Matrix<BigRational>> {
    let (mp, mm) = k_action_matrices(z, rv)?;
    // Signed position of A_i ∧ A_j in the wedge basis.
    let wedge_pos = |i: usize, j: usize| -> Option<(usize, i64)> {
        if i == j {
            return None;
        }
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        PAIRS.iter().position(|&p| p == (a, b)).map(|idx| (idx, sign))
    };
    let mut out = Matrix::zero(9, 9);
    for (pi, &(i, j)) in PAIRS.iter().enumerate() {
        for c in 0..3 {
            let col = 3 * pi + c;
            // z·(A_i ∧ A_j) ⊗ C_c, first factor.
            for l in 0..3 {
                let coeff = &mp[(l, i)];
                if !coeff.is_zero() {
                    if let Some((idx, sign)) = wedge_pos(l, j) {
                        let row = 3 * idx + c;
                        out[(row, col)] = &out[(row, col)] + &(coeff * rat(sign));
                    }
                }
                let coeff = &mp[(l, j)];
                if !coeff.is_zero() {
                    if let Some((idx, sign)) = wedge_pos(i, l) {
                        let row = 3 * idx + c;
                        out[(row, col)] = &out[(row, col)] + &(coeff * rat(sign));
                    }
                }
            }
            // (A_i ∧ A_j) ⊗ z·C_c.
            for l in 0..3 {
                let coeff = &mm[(l, c)];
                if !coeff.is_zero() {
                    let row = 3 * pi + l;
                    out[(row, col)] = &out[(row, col)] + coeff;
                }
            }
        }
    }
    Some(out)
}

/// An irreducible summand with its string v_0, …, v_d in b-coordinates.
pub struct Summand {
    pub label: TauPair,
    pub string: Vec<Vec<BigRational>>,
}

fn apply(m: &Matrix<BigRational>, v: &[BigRational]) -> Vec<BigRational> {
    (0..m.rows)
        .map(|r| (0..m.cols).fold(BigRational::zero(), |acc, c| acc + &m[(r, c)] * &v[c]))
        .collect()
}

/// Decompose Λ²p⁺ ⊗ p⁻: highest vectors are the kernel of the raising
/// operator, split by weight; each is normalized to leading coordinate 1 and
/// lowered with v_{d−j} = L v_{d−j+1} / j, which enforces the string
/// normalization L v_s = (d−s+1) v_{s−1}. Summands come out by decreasing
/// string length: τ_(3,−1), τ_(2,0), τ_(1,1).
pub fn decompose_tensor_space(rv: &RootVectors) -> Vec<Summand> {
    let raise = action_on_tensor9(&rv.x1m1, rv).expect("raising operator must act");
    let lower = action_on_tensor9(&rv.xm11, rv).expect("lowering operator must act");
    let weights = tensor9_weights();

    // Weight-homogeneous basis of ker(raise).
    let mut by_weight: BTreeMap<(i64, i64), Vec<Vec<BigRational>>> = BTreeMap::new();
    for v in Matrix::from_rows(raise.rows_vec()).nullspace() {
        let mut pieces: BTreeMap<(i64, i64), Vec<BigRational>> = BTreeMap::new();
        for (j, x) in v.iter().enumerate() {
            if !x.is_zero() {
                pieces.entry(weights[j]).or_insert_with(|| vec![BigRational::zero(); 9])[j] =
                    x.clone();
            }
        }
        for (w, piece) in pieces {
            by_weight.entry(w).or_default().push(piece);
        }
    }

    let mut summands = Vec::new();
    for (w, vecs) in by_weight {
        let reduced = Matrix::from_rows(vecs);
        let (r, pivots) = reduced.rref();
        for hi in 0..pivots.len() {
            let mut top = r.row(hi).to_vec();
            let lead = top.iter().find(|x| !x.is_zero()).expect("kernel vector is nonzero");
            let lead = lead.clone();
            for x in &mut top {
                *x = &*x / &lead;
            }
            let label = TauPair::new(w.0, w.1);
            let d = label.string_length();
            let mut string = vec![Vec::new(); d + 1];
            string[d] = top;
            for j in 1..=d {
                let prev = apply(&lower, &string[d - j + 1]);
                string[d - j] = prev.iter().map(|x| x / rat(j as i64)).collect();
            }
            summands.push(Summand { label, string });
        }
    }
    summands.sort_by_key(|s| std::cmp::Reverse(s.label.string_length()));
    summands
}

/// The five vectors w₀, …, w₄ spanning the τ_(3,−1) summand, ascending.
pub fn standard_w_basis() -> [Vec<BigRational>; 5] {
    let row = |coeffs: [i64; 9]| coeffs.iter().map(|&n| rat(n)).collect::<Vec<_>>();
    [
        row([0, 0, 0, 0, 0, 0, 0, 0, 1]),
        row([0, 0, 0, 0, 0, 2, 0, -1, 0]),
        row([0, 0, 1, 0, -2, 0, 1, 0, 0]),
        row([0, -1, 0, 2, 0, 0, 0, 0, 0]),
        row([1, 0, 0, 0, 0, 0, 0, 0, 0]),
    ]
}

/// The three vectors x₀, x₁, x₂ spanning the τ_(2,0) summand, ascending.
pub fn standard_x_basis() -> [Vec<BigRational>; 3] {
    let row = |coeffs: [i64; 9]| coeffs.iter().map(|&n| rat(n)).collect::<Vec<_>>();
    [
        row([0, 0, 0, 0, 0, -2, 0, -1, 0]),
        row([0, 0, -2, 0, 0, 0, 2, 0, 0]),
        row([0, 1, 0, 2, 0, 0, 0, 0, 0]),
    ]
}

/// The vector y₀ spanning the τ_(1,1) summand.
pub fn standard_y_vector() -> Vec<BigRational> {
    [0, 0, 1, 0, 1, 0, 1, 0, 0].iter().map(|&n| rat(n)).collect()
}

/// Projection onto the τ_(3,−1) summand along the other two, as a fixed
/// 9×9 table (columns = images of b₁, …, b₉).
pub fn projection_table() -> Matrix<BigRational> {
    let r = ratio;
    let rows: Vec<Vec<BigRational>> = vec![
        vec![r(1, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1)],
        vec![r(0, 1), r(1, 2), r(0, 1), r(-1, 4), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1)],
        vec![r(0, 1), r(0, 1), r(1, 6), r(0, 1), r(-1, 3), r(0, 1), r(1, 6), r(0, 1), r(0, 1)],
        vec![r(0, 1), r(-1, 1), r(0, 1), r(1, 2), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1)],
        vec![r(0, 1), r(0, 1), r(-1, 3), r(0, 1), r(2, 3), r(0, 1), r(-1, 3), r(0, 1), r(0, 1)],
        vec![r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(1, 2), r(0, 1), r(-1, 1), r(0, 1)],
        vec![r(0, 1), r(0, 1), r(1, 6), r(0, 1), r(-1, 3), r(0, 1), r(1, 6), r(0, 1), r(0, 1)],
        vec![r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(-1, 4), r(0, 1), r(1, 2), r(0, 1)],
        vec![r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(1, 1)],
    ];
    Matrix::from_rows(rows)
}

/// The same projection computed from the decomposition: conjugate the
/// rank-5 coordinate projector by the change of basis whose columns are the
/// τ_(3,−1) string followed by the other summands' strings.
pub fn projection_onto_31(rv: &RootVectors) -> Matrix<BigRational> {
    let summands = decompose_tensor_space(rv);
    assert_eq!(summands.len(), 3, "expected three summands");
    let mut columns: Vec<Vec<BigRational>> = Vec::with_capacity(9);
    let lead_dim = summands[0].string.len();
    for s in &summands {
        for v in &s.string {
            columns.push(v.clone());
        }
    }
    assert_eq!(columns.len(), 9);
    let s = Matrix::from_rows(columns).transpose();
    let mut diag = Matrix::zero(9, 9);
    for i in 0..lead_dim {
        diag[(i, i)] = rat(1);
    }
    let s_inv = s.inverse().expect("summand strings form a basis");
    s.matmul(&diag).matmul(&s_inv)
}

/// (coefficient, lowering power) pairs expressing each projected basis
/// vector as a multiple of a lowering power of the top vector:
/// P(b_j) = c_j · L^{e_j}(b₁).
pub fn lowering_pairs() -> [(BigRational, u32); 9] {
    [
        (rat(1), 0),
        (ratio(-1, 2), 1),
        (ratio(1, 12), 2),
        (ratio(1, 4), 1),
        (ratio(-1, 6), 2),
        (ratio(1, 24), 3),
        (ratio(1, 12), 2),
        (ratio(-1, 12), 3),
        (ratio(1, 24), 4),
    ]
}

/// Verify P(b_j) = c_j · L^{e_j}(b₁) for every j against the fixed table.
pub fn verify_projection_as_lowering(rv: &RootVectors) -> bool {
    let p = projection_table();
    let lower = match action_on_tensor9(&rv.xm11, rv) {
        Some(m) => m,
        None => return false,
    };
    // L^e(b₁) for e = 0..=4.
    let mut powers: Vec<Vec<BigRational>> = Vec::with_capacity(5);
    let mut v: Vec<BigRational> = (0..9).map(|i| rat((i == 0) as i64)).collect();
    powers.push(v.clone());
    for _ in 0..4 {
        v = apply(&lower, &v);
        powers.push(v.clone());
    }
    lowering_pairs().iter().enumerate().all(|(j, (c, e))| {
        let expected: Vec<BigRational> =
            powers[*e as usize].iter().map(|x| x * c).collect();
        (0..9).all(|i| p[(i, j)] == expected[i])
    })
}
