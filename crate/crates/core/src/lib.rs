//! Exact-arithmetic toolkit for the representation theory around `GSp(4)`:
//! explicit `sp(4)` root vectors and K-type projections, the archimedean
//! constants that normalize Petersson pairings, p-local lattice discriminant
//! and duality machinery, and a level-1 modular-forms lab for detecting
//! eigenvalue congruences.
//!
//! Everything is computed over exact scalars (big rationals, the quartic
//! algebra Q(i,√2), and monomials q·π^e); no floating point enters any
//! verdict.

pub mod constants;
pub mod exactnum;
pub mod ktypes;
pub mod lattice;
pub mod liealg;
pub mod linalg;
pub mod modforms;
pub mod par;
