//! Exact evaluation of the archimedean pairing constants and their
//! assembly into Petersson-norm and discriminant formulas.

mod archimedean;
mod assembly;

pub use archimedean::{
    alternation_coefficients, alternation_weight_sum, c_closed, coefficient_ratio_identity_check,
    coefficient_triple, cprime, cprime_batch, cprime_factorial_form, prefactor, rising_power_sum,
    simplification_trace, CoefficientTriple, SimplificationTrace,
};
pub use assembly::{
    c_level, discriminant_constant, norm_archimedean_factor, norm_constant, norm_local_factor,
    norm_zeta_factor, pairing_constant, siegel_volume, xi_completed, Level, LevelError,
};
