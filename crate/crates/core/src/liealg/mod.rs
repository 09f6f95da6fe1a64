//! The symplectic similitude group on four variables and its Lie algebra:
//! complex 4×4 matrices over Q(i,√2), the compact Cartan subalgebra coming
//! from the unitary-group embedding, root vectors for the (±2,0), (±1,±1),
//! (0,±2) and (±1,∓1) root spaces, and finite-dimensional representations
//! realized inside tensor powers of the standard representation.

mod matrix;
mod roots;
mod weyl;

pub use matrix::{
    bracket, cmat, cmat_from_int, conj_entrywise, is_in_gsp4, is_in_sp4, similitude_factor,
    symplectic_form, CMat,
};
pub use roots::{
    cartan_decomposition_check, circle_point, conj_j_matrix, dkappa, j_matrix, torus_point,
    verify_root_vector, verify_torus_diagonalization, RootVectors,
};
pub use weyl::{
    apply_factorwise, weyl_construct, weyl_dim, AlgebraicWeight, AnalyticWeight, Transport,
    WeylModule,
};
