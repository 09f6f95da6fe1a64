//! Exact level-1 modular forms: q-expansions, Eisenstein series, Δ, echelon
//! bases, Hecke operators, and integer eigen systems — enough to exhibit the
//! 691 congruence between Δ and E₁₂ and to feed congruence-prime scans.

mod basis;
mod hecke;
mod qseries;

pub use basis::{delta, echelon_basis, eisenstein, sigma, sigma_table, weight_monomials};
pub use hecke::{
    cusp_eigensystems, echelon_span_is_hecke_stable, eisenstein_congruence_demo,
    eisenstein_eigensystem, hecke_operator, HeckeEigenSystem,
};
pub use qseries::QSeries;
