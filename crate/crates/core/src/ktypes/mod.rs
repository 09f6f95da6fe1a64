//! Representations of the maximal compact subgroup (a unitary group on two
//! variables): abstract highest-weight strings τ_(k,k'), the 9-dimensional
//! tensor space Λ²p⁺ ⊗ p⁻ with its explicit decomposition and projection
//! matrices, and the minimal K-type bookkeeping for the four archimedean
//! packet members attached to a dominant weight.

mod minimal;
mod tau;
mod tensor9;

pub use minimal::{minimal_k_types, MinimalKType};
pub use tau::{pairing_coefficient, raise_lower_power_scalar, Gen, TauModule, TauPair};
pub use tensor9::{
    action_on_tensor9, decompose_tensor_space, k_action_matrices, lowering_pairs,
    projection_onto_31, projection_table, standard_w_basis, standard_x_basis, standard_y_vector,
    tensor9_weights, verify_projection_as_lowering, Summand,
};
