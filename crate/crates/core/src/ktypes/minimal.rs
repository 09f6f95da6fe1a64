//! Minimal K-types of the four discrete-series members of the archimedean
//! packet attached to a dominant weight (k, k'). The packet member with
//! Hodge type (p, q), p + q = 3, has the minimal K-type recorded here;
//! (3,0) is the holomorphic member, (0,3) the antiholomorphic one, (2,1)
//! and (1,2) the generic ones.

use super::tau::TauPair;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MinimalKType {
    /// Hodge type (p, q) with p + q = 3.
    pub hodge: (u8, u8),
    pub tau: TauPair,
}

/// Table of the four minimal K-types for a dominant weight k ≥ k' ≥ 0.
pub fn minimal_k_types(k: i64, kp: i64) -> [MinimalKType; 4] {
    assert!(k >= kp && kp >= 0, "dominant weight required, got ({k}, {kp})");
    [
        MinimalKType { hodge: (3, 0), tau: TauPair::new(k + 3, kp + 3) },
        MinimalKType { hodge: (2, 1), tau: TauPair::new(k + 3, -kp - 1) },
        MinimalKType { hodge: (1, 2), tau: TauPair::new(kp + 1, -k - 3) },
        MinimalKType { hodge: (0, 3), tau: TauPair::new(-kp - 3, -k - 3) },
    ]
}
