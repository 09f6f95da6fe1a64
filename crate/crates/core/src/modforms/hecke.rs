//! Hecke operators on weight-κ q-expansions and the eigen systems they
//! produce. Level 1 throughout; the six weights with a one-dimensional cusp
//! space give integer eigenvalue sequences without any number-field work.

use super::basis::{echelon_basis, sigma_table};
use super::qseries::QSeries;
use crate::exactnum::{zeta_even_over_pi, BigRational};
use crate::lattice::EigenSystem;
use crate::linalg::coordinates_in_span;
use crate::linalg::Matrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// a_m(T_n f) = Σ_{d | gcd(m,n)} d^{κ−1} a_{mn/d²}(f). Output precision is
/// ⌊B/n⌋ — coefficients beyond that would need unknown input terms.
pub fn hecke_operator(f: &QSeries, weight: u32, n: usize) -> QSeries {
    assert!(n >= 1, "Hecke index must be positive");
    let out_prec = f.precision() / n;
    assert!(
        out_prec >= 1,
        "insufficient precision: T_{n} on a series of precision {} leaves nothing",
        f.precision()
    );
    let mut coeffs = Vec::with_capacity(out_prec + 1);
    for m in 0..=out_prec {
        let mut acc = BigRational::zero();
        // d runs over divisors of gcd(m, n); gcd(0, n) = n.
        let g = if m == 0 { n } else { m.gcd(&n) };
        for d in 1..=g {
            if g % d == 0 {
                let dk = BigRational::from_integer(BigInt::from(d).pow(weight - 1));
                acc += dk * f.coeff(m * n / (d * d));
            }
        }
        coeffs.push(acc);
    }
    QSeries::new(coeffs)
}

/// Integer Hecke eigenvalues a_1..a_B of a level-1 rational eigenform.
/// Construction enforces a_1 = 1, multiplicativity on coprime indices, and
/// the prime-power recursion a_{p^{r+1}} = a_p a_{p^r} − p^{κ−1} a_{p^{r−1}}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeEigenSystem {
    weight: u32,
    values: Vec<BigInt>,
}

impl HeckeEigenSystem {
    pub fn new(weight: u32, values: Vec<BigInt>) -> Self {
        assert!(!values.is_empty(), "an eigen system needs at least a_1");
        assert!(values[0].is_one(), "eigenforms are normalized with a_1 = 1");
        let sys = HeckeEigenSystem { weight, values };
        sys.assert_hecke_relations();
        sys
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Largest n with a_n available.
    pub fn bound(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, n: usize) -> &BigInt {
        assert!((1..=self.bound()).contains(&n), "a_{n} out of range");
        &self.values[n - 1]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    fn assert_hecke_relations(&self) {
        let b = self.bound();
        for m in 2..=b {
            for n in 2..=b / m {
                if m.gcd(&n) == 1 {
                    assert_eq!(
                        *self.value(m * n),
                        self.value(m) * self.value(n),
                        "multiplicativity fails at ({m}, {n})"
                    );
                }
            }
        }
        let pk = |p: usize| BigInt::from(p).pow(self.weight - 1);
        for p in 2..=b {
            if !is_prime_usize(p) {
                continue;
            }
            let mut power = p;
            while power * p <= b {
                let next = self.value(power * p);
                let recursion = self.value(p) * self.value(power) - pk(p) * self.value(power / p);
                assert_eq!(*next, recursion, "prime-power recursion fails at {p}^·{power}");
                power *= p;
            }
        }
    }

    /// Degree-1 eigen system over Z, labels T_1..T_B, for congruence scans.
    pub fn to_eigen_system(&self) -> EigenSystem {
        let values: BTreeMap<String, Vec<BigInt>> = (1..=self.bound())
            .map(|n| (format!("T_{n}"), vec![self.value(n).clone()]))
            .collect();
        EigenSystem::new(vec![BigInt::zero(), BigInt::one()], values)
            .expect("linear minimal polynomial is always valid")
    }
}

fn is_prime_usize(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The unique normalized eigen cusp form of the given weight, as its
/// eigenvalue sequence a_1..a_B. Only weights with a one-dimensional cusp
/// space are accepted; there the q-pivot echelon vector is the eigenform and
/// its coefficients are the eigenvalues.
pub fn cusp_eigensystems(weight: u32, precision: usize) -> HeckeEigenSystem {
    assert!(
        matches!(weight, 12 | 16 | 18 | 20 | 22 | 26),
        "weight {weight} does not have a one-dimensional cusp space"
    );
    assert!(precision >= 2, "need at least a_1 and a_2");
    let basis = echelon_basis(weight, precision);
    assert_eq!(basis.len(), 2);
    let f = &basis[1];
    assert!(f.coeff(0).is_zero() && f.coeff(1).is_one());

    // Diagonalization check: the cusp line is T_2-stable with a_2 on it.
    let t2 = hecke_operator(f, weight, 2);
    let expected = f.truncate(t2.precision()).scale(f.coeff(2));
    assert_eq!(t2, expected, "T_2 does not act by a_2 on the cusp line");

    let values = f.coeffs()[1..]
        .iter()
        .map(|a| {
            assert!(a.is_integer(), "level-1 rational eigenform has integer coefficients");
            a.numer().clone()
        })
        .collect();
    HeckeEigenSystem::new(weight, values)
}

/// Eigen system of the weight-κ Eisenstein series: a_n = σ_{κ−1}(n).
pub fn eisenstein_eigensystem(weight: u32, bound: usize) -> HeckeEigenSystem {
    assert!(weight >= 4 && weight % 2 == 0, "weight must be even and at least 4");
    assert!(bound >= 1);
    let values = sigma_table(weight - 1, bound)[1..].to_vec();
    HeckeEigenSystem::new(weight, values)
}

/// Checks τ(n) ≡ σ₁₁(n) mod 691 for 1 ≤ n ≤ bound and that 691 is the
/// numerator of ζ(12)/π¹². Panics on any failure; returns (691, bound).
pub fn eisenstein_congruence_demo(bound: usize) -> (u64, usize) {
    assert!(bound >= 50, "demonstration requires at least 50 coefficients");
    let modulus = BigInt::from(691);
    assert_eq!(
        zeta_even_over_pi(12).numer().clone(),
        modulus,
        "the congruence prime must be the numerator of ζ(12)/π¹²"
    );
    let tau = cusp_eigensystems(12, bound);
    let sigma11 = eisenstein_eigensystem(12, bound);
    for n in 1..=bound {
        let diff = sigma11.value(n) - tau.value(n);
        assert!(
            diff.mod_floor(&modulus).is_zero(),
            "congruence fails at n = {n}: difference {diff}"
        );
    }
    (691, bound)
}

/// T_2-stability of the echelon span, coefficient-exact to precision ⌊B/2⌋.
pub fn echelon_span_is_hecke_stable(weight: u32, precision: usize) -> bool {
    let basis = echelon_basis(weight, precision);
    let half = precision / 2;
    let rows: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|f| f.truncate(half).coeffs().to_vec())
        .collect();
    let span = Matrix::from_rows(rows);
    basis.iter().all(|f| {
        let image = hecke_operator(f, weight, 2);
        coordinates_in_span(&span, image.coeffs()).is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::super::basis::delta;
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn t1_is_the_identity() {
        let d = delta(10);
        assert_eq!(hecke_operator(&d, 12, 1), d);
    }

    #[test]
    fn delta_is_a_t2_eigenform() {
        let d = delta(20);
        let t2 = hecke_operator(&d, 12, 2);
        assert_eq!(t2.precision(), 10);
        assert_eq!(t2, d.truncate(10).scale(&rat(-24)));
    }

    #[test]
    fn hecke_composition_is_multiplicative_on_coprime_indices() {
        let d = delta(36);
        let t6 = hecke_operator(&d, 12, 6);
        let t2_t3 = hecke_operator(&hecke_operator(&d, 12, 3), 12, 2);
        assert_eq!(t6, t2_t3);
        // and the eigenvalue is the product: T_6 Δ = (−24·252) Δ
        assert_eq!(t6, d.truncate(6).scale(&rat(-24 * 252)));
    }

    #[test]
    fn hecke_constant_term_picks_up_a_divisor_sum() {
        // T_n (E_12) = σ_11(n) E_12: Eisenstein series are eigenforms too.
        let e12 = super::super::basis::eisenstein(12, 24);
        for n in [2usize, 3, 4, 6] {
            let tn = hecke_operator(&e12, 12, n);
            let lam = BigRational::from_integer(super::super::basis::sigma(n as u64, 11));
            assert_eq!(tn, e12.truncate(24 / n).scale(&lam), "T_{n}");
        }
    }

    #[test]
    fn eigen_systems_for_all_one_dimensional_weights() {
        // frozen a_2 for each weight; the constructor re-checks the Hecke
        // relations among everything else
        let expects = [
            (12, -24i64),
            (16, 216),
            (18, -528),
            (20, 456),
            (22, -288),
            (26, -48),
        ];
        for (w, a2) in expects {
            let sys = cusp_eigensystems(w, 24);
            assert_eq!(*sys.value(2), BigInt::from(a2), "weight {w}");
            assert_eq!(sys.weight(), w);
            assert_eq!(sys.bound(), 24);
        }
    }

    #[test]
    fn tau_prime_power_recursion_at_two() {
        let sys = cusp_eigensystems(12, 8);
        // a_4 = a_2² − 2^{11}
        assert_eq!(*sys.value(4), BigInt::from(576 - 2048));
        assert_eq!(*sys.value(8), BigInt::from(84480));
    }

    #[test]
    #[should_panic(expected = "one-dimensional")]
    fn weight_without_unique_cusp_form_is_rejected() {
        cusp_eigensystems(24, 10);
    }

    #[test]
    fn eisenstein_system_matches_divisor_sums() {
        let sys = eisenstein_eigensystem(12, 20);
        assert_eq!(*sys.value(1), BigInt::one());
        assert_eq!(*sys.value(2), BigInt::from(2049));
        assert_eq!(*sys.value(12), sigma_table(11, 12)[12]);
    }

    #[test]
    fn congruence_demo_and_eigen_export() {
        let (p, b) = eisenstein_congruence_demo(60);
        assert_eq!((p, b), (691, 60));
        // σ_11(2) − τ(2) = 2049 + 24 = 3·691
        let diff = BigInt::from(2049 + 24);
        assert_eq!(diff, BigInt::from(3 * 691));

        let tau = cusp_eigensystems(12, 6).to_eigen_system();
        assert_eq!(tau.degree(), 1);
        assert_eq!(tau.values()["T_3"], vec![BigInt::from(252)]);
        assert_eq!(tau.values().len(), 6);
    }

    #[test]
    fn echelon_span_stability() {
        for w in [12, 16, 26] {
            assert!(echelon_span_is_hecke_stable(w, 16), "weight {w}");
        }
    }

    #[test]
    #[should_panic(expected = "insufficient precision")]
    fn hecke_with_too_little_precision_panics() {
        let d = delta(4);
        hecke_operator(&d, 12, 5);
    }
}
