//! Eigen systems over explicitly presented rings Z[x]/(f), and the scan for
//! congruence primes between two systems: build T = Z[x,y]/(f,g), take the
//! ideal generated by all operator differences, measure the finite quotient,
//! and certify each prime divisor with a maximal ideal above it.

use super::fp;
use super::fpoly::{
    self, factor_bigint, qpoly_factor, qpoly_gcd, Fq, Poly, QPoly,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use thiserror::Error;

/// Operator labels mapped to algebraic-integer eigenvalues, written as
/// integer coordinates over the power basis of a monic minimal polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EigenSystem {
    min_poly: Vec<BigInt>,
    values: BTreeMap<String, Vec<BigInt>>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ScanError {
    #[error("minimal polynomial must be monic with degree at least 1")]
    BadMinPoly,
    #[error("value for {0} has more coordinates than the ring degree")]
    ValueTooLong(String),
    #[error("operator {0} is missing from one of the systems")]
    IncompatibleLabels(String),
    #[error("empty comparison range")]
    EmptyRange,
    #[error("congruence prime {0} exceeds the machine-word factorization range")]
    PrimeTooLarge(BigInt),
}

impl EigenSystem {
    /// `min_poly` in ascending degree; each value's coordinates over
    /// 1, x, …, x^{deg−1}.
    pub fn new(
        min_poly: Vec<BigInt>,
        values: BTreeMap<String, Vec<BigInt>>,
    ) -> Result<Self, ScanError> {
        if min_poly.len() < 2 || !min_poly.last().unwrap().is_one() {
            return Err(ScanError::BadMinPoly);
        }
        let deg = min_poly.len() - 1;
        for (label, v) in &values {
            if v.len() > deg {
                return Err(ScanError::ValueTooLong(label.clone()));
            }
        }
        Ok(EigenSystem { min_poly, values })
    }

    /// System with rational-integer eigenvalues: the ring is Z[x]/(x).
    pub fn rational(values: BTreeMap<String, BigInt>) -> Self {
        EigenSystem {
            min_poly: vec![BigInt::zero(), BigInt::one()],
            values: values.into_iter().map(|(k, v)| (k, vec![v])).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    pub fn values(&self) -> &BTreeMap<String, Vec<BigInt>> {
        &self.values
    }

    fn padded_value(&self, label: &str) -> Option<Vec<BigInt>> {
        let v = self.values.get(label)?;
        let mut out = v.clone();
        out.resize(self.degree(), BigInt::zero());
        Some(out)
    }
}

/// Maximal ideal (p, φ(x), ψ(x,y)) at which every operator difference
/// vanishes: φ is an irreducible factor of f mod p, ψ an irreducible factor
/// over F_q = F_p[x]/(φ), with coefficients given as F_q coordinate vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CongruenceWitness {
    pub prime: BigInt,
    pub phi: Poly,
    pub psi: Vec<Poly>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ScanOutcome {
    /// The difference ideal has infinite quotient: the systems agree along
    /// an embedding, so they are congruent modulo every prime.
    Identical,
    Congruences(Vec<CongruenceWitness>),
}

/// Labels of the shape `T_n` with 1 ≤ n ≤ bound, in increasing n.
fn select_labels(sys: &EigenSystem, bound: u64) -> Vec<(u64, String)> {
    let mut out: Vec<(u64, String)> = sys
        .values
        .keys()
        .filter_map(|label| {
            let n: u64 = label.strip_prefix("T_")?.parse().ok()?;
            (n >= 1 && n <= bound).then(|| (n, label.clone()))
        })
        .collect();
    out.sort();
    out
}

/// Congruence primes between two eigen systems, using the operators T_n with
/// n ≤ bound. Each reported prime carries a deterministic witness ideal.
pub fn congruence_prime_scan(
    a: &EigenSystem,
    b: &EigenSystem,
    bound: u64,
) -> Result<ScanOutcome, ScanError> {
    let labels_a = select_labels(a, bound);
    let labels_b = select_labels(b, bound);
    if labels_a.is_empty() && labels_b.is_empty() {
        return Err(ScanError::EmptyRange);
    }
    for (_, l) in labels_a.iter().chain(&labels_b) {
        if !(a.values.contains_key(l) && b.values.contains_key(l)) {
            return Err(ScanError::IncompatibleLabels(l.clone()));
        }
    }

    let da = a.degree();
    let db = b.degree();
    let n = da * db;
    // Z-module generators of the difference ideal: x^i y^j (a_T(x) − b_T(y))
    // over the monomial basis x^i y^j of T = Z[x,y]/(f, g).
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n * labels_a.len());
    for (_, label) in &labels_a {
        let av = a.padded_value(label).unwrap();
        let bv = b.padded_value(label).unwrap();
        let mut delta = vec![BigInt::zero(); n];
        for (i, c) in av.iter().enumerate() {
            delta[i * db] += c;
        }
        for (j, c) in bv.iter().enumerate() {
            delta[j] -= c;
        }
        let mut xi = delta;
        for i in 0..da {
            let mut xiyj = xi.clone();
            for j in 0..db {
                rows.push(xiyj.clone());
                if j + 1 < db {
                    xiyj = scale_by_y(&xiyj, da, db, &b.min_poly);
                }
            }
            if i + 1 < da {
                xi = scale_by_x(&xi, da, db, &a.min_poly);
            }
        }
    }

    let diag = smith_nonzero_diagonal(rows, n);
    if diag.len() < n {
        return Ok(ScanOutcome::Identical);
    }
    let order: BigInt = diag.iter().map(|d| d.abs()).product();
    if order.is_one() {
        return Ok(ScanOutcome::Congruences(Vec::new()));
    }

    let mut witnesses = Vec::new();
    for (p, _) in factor_bigint(&order) {
        let pu = p.to_u64().ok_or_else(|| ScanError::PrimeTooLarge(p.clone()))?;
        witnesses.push(find_witness(a, b, &labels_a, pu));
    }
    Ok(ScanOutcome::Congruences(witnesses))
}

/// Multiplication by x on coordinate vectors over the basis x^i y^j
/// (row-major in i), reducing x^da through the monic f.
fn scale_by_x(v: &[BigInt], da: usize, db: usize, f: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); da * db];
    for i in 0..da {
        for j in 0..db {
            let c = &v[i * db + j];
            if c.is_zero() {
                continue;
            }
            if i + 1 < da {
                out[(i + 1) * db + j] += c;
            } else {
                for t in 0..da {
                    out[t * db + j] -= c * &f[t];
                }
            }
        }
    }
    out
}

fn scale_by_y(v: &[BigInt], da: usize, db: usize, g: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); da * db];
    for i in 0..da {
        for j in 0..db {
            let c = &v[i * db + j];
            if c.is_zero() {
                continue;
            }
            if j + 1 < db {
                out[i * db + j + 1] += c;
            } else {
                for t in 0..db {
                    out[i * db + t] -= c * &g[t];
                }
            }
        }
    }
    out
}

/// Nonzero diagonal of an integer Smith-type reduction; its length is the
/// rank and the product of absolute values is the index of the row span in
/// Z^cols (when the rank is full).
fn smith_nonzero_diagonal(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut k = 0;
    while k < rows && k < cols {
        let mut best: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if m[i][j].is_zero() {
                    continue;
                }
                if best.map_or(true, |(bi, bj)| {
                    m[i][j].magnitude() < m[bi][bj].magnitude()
                }) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(k, bi);
        if bj != k {
            for row in &mut m {
                row.swap(k, bj);
            }
        }
        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if m[i][k].is_zero() {
                    continue;
                }
                let q = &m[i][k] / &m[k][k];
                if !q.is_zero() {
                    for j in k..cols {
                        let sub = &q * &m[k][j];
                        m[i][j] -= sub;
                    }
                }
                if !m[i][k].is_zero() {
                    m.swap(i, k); // strictly smaller pivot; re-run the pass
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            for j in k + 1..cols {
                if m[k][j].is_zero() {
                    continue;
                }
                let q = &m[k][j] / &m[k][k];
                if !q.is_zero() {
                    for i in k..rows {
                        let sub = &q * &m[i][k];
                        m[i][j] -= sub;
                    }
                }
                if !m[k][j].is_zero() {
                    for row in &mut m {
                        row.swap(k, j);
                    }
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        diag.push(m[k][k].clone());
        k += 1;
    }
    diag
}

fn int_poly_mod_p(poly: &[BigInt], p: u64) -> Poly {
    let mut out: Poly = poly.iter().map(|c| fp::int_mod_p(c, p)).collect();
    fpoly::trim(&mut out);
    out
}

/// Deterministic maximal-ideal witness above p: walk the irreducible factors
/// φ of f mod p in (degree, coefficients) order; inside F_q = F_p[x]/(φ)
/// collect h = gcd(ḡ, all differences evaluated at x = α); the first φ with
/// deg h ≥ 1 contributes its lexicographically least irreducible factor ψ.
fn find_witness(
    a: &EigenSystem,
    b: &EigenSystem,
    labels: &[(u64, String)],
    p: u64,
) -> CongruenceWitness {
    let f_bar = int_poly_mod_p(&a.min_poly, p);
    let g_bar = int_poly_mod_p(&b.min_poly, p);
    let mut rng = ChaCha8Rng::seed_from_u64(0x51ca_2608);
    for (phi, _) in fpoly::factor(&f_bar, p, &mut rng) {
        let fq = Fq::new(p, phi.clone());
        // ḡ as a polynomial over F_q (its coefficients are constants).
        let g_q: QPoly = g_bar.iter().map(|&c| fq.from_fp(c)).collect();
        let mut h = g_q;
        for (_, label) in labels {
            let av = a.padded_value(label).unwrap();
            let bv = b.padded_value(label).unwrap();
            // a_T(α) − b_T(y) ∈ F_q[y].
            let mut alpha_pow = fq.from_fp(1);
            let mut constant = fq.from_fp(0);
            for c in &av {
                let term = fq.mul(&fq.from_fp(fp::int_mod_p(c, p)), &alpha_pow);
                constant = fq.add(&constant, &term);
                alpha_pow = fq.mul(&alpha_pow, &fq.reduce(&vec![0, 1]));
            }
            let mut diff: QPoly = Vec::with_capacity(bv.len());
            for (j, c) in bv.iter().enumerate() {
                let coeff = fq.from_fp(fp::int_mod_p(c, p));
                let neg = fq.sub(&fq.from_fp(0), &coeff);
                if j == 0 {
                    diff.push(fq.add(&constant, &neg));
                } else {
                    diff.push(neg);
                }
            }
            fpoly::qtrim(&mut diff);
            h = qpoly_gcd(&h, &diff, &fq);
        }
        if fpoly::qdeg(&h).unwrap_or(0) >= 1 {
            let mut rng2 = ChaCha8Rng::seed_from_u64(0x51ca_2608);
            let factors = qpoly_factor(&h, &fq, &mut rng2);
            let psi = factors[0].0.clone();
            return CongruenceWitness { prime: BigInt::from(p), phi, psi };
        }
    }
    unreachable!("a prime dividing the quotient order always has a maximal ideal above it");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational_sys(pairs: &[(&str, i64)]) -> EigenSystem {
        EigenSystem::rational(
            pairs
                .iter()
                .map(|(k, v)| (k.to_string(), BigInt::from(*v)))
                .collect(),
        )
    }

    #[test]
    fn identical_systems_hit_the_sentinel() {
        let a = rational_sys(&[("T_2", -24), ("T_3", 252)]);
        assert_eq!(
            congruence_prime_scan(&a, &a, 10).unwrap(),
            ScanOutcome::Identical
        );
    }

    #[test]
    fn integer_difference_factors_into_primes() {
        let a = rational_sys(&[("T_2", 0)]);
        let b = rational_sys(&[("T_2", 15)]);
        let ScanOutcome::Congruences(ws) = congruence_prime_scan(&a, &b, 10).unwrap() else {
            panic!("expected finite outcome");
        };
        let primes: Vec<BigInt> = ws.iter().map(|w| w.prime.clone()).collect();
        assert_eq!(primes, vec![BigInt::from(3), BigInt::from(5)]);
        // Witness at 3: residue ring F_3 with φ = x, ψ = y.
        assert_eq!(ws[0].phi, vec![0, 1]);
        assert_eq!(ws[0].psi, vec![Vec::new(), vec![1]]);
    }

    #[test]
    fn unit_differences_give_no_primes() {
        let a = rational_sys(&[("T_2", 1)]);
        let b = rational_sys(&[("T_2", 2)]);
        assert_eq!(
            congruence_prime_scan(&a, &b, 10).unwrap(),
            ScanOutcome::Congruences(Vec::new())
        );
    }

    #[test]
    fn quadratic_system_witness_picks_the_matching_embedding() {
        // a_{T_2} = √2 in Z[x]/(x²−2) against the rational system b = 3:
        // the difference ideal has index 9 − 2 = 7, and only the embedding
        // √2 ↦ 3 mod 7 (φ = x + 4) kills the difference.
        let a = EigenSystem::new(
            vec![BigInt::from(-2), BigInt::zero(), BigInt::one()],
            [("T_2".to_string(), vec![BigInt::zero(), BigInt::one()])].into(),
        )
        .unwrap();
        let b = rational_sys(&[("T_2", 3)]);
        let ScanOutcome::Congruences(ws) = congruence_prime_scan(&a, &b, 10).unwrap() else {
            panic!("expected finite outcome");
        };
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].prime, BigInt::from(7));
        assert_eq!(ws[0].phi, vec![4, 1]); // x ≡ −4 ≡ 3, and 3² = 2 mod 7
        assert_eq!(ws[0].psi, vec![Vec::new(), vec![1]]); // ψ = y
    }

    #[test]
    fn scan_is_symmetric_in_the_reported_primes() {
        let pairs = [
            (rational_sys(&[("T_2", 0)]), rational_sys(&[("T_2", 15)])),
            (rational_sys(&[("T_2", -24), ("T_3", 252)]),
             rational_sys(&[("T_2", 2049), ("T_3", 177148)])),
        ];
        for (a, b) in &pairs {
            let p1 = primes_of(congruence_prime_scan(a, b, 10).unwrap());
            let p2 = primes_of(congruence_prime_scan(b, a, 10).unwrap());
            assert_eq!(p1, p2);
        }
    }

    fn primes_of(o: ScanOutcome) -> Vec<BigInt> {
        match o {
            ScanOutcome::Identical => panic!("finite outcome expected"),
            ScanOutcome::Congruences(ws) => ws.into_iter().map(|w| w.prime).collect(),
        }
    }

    #[test]
    fn tau_versus_sigma11_prefix_reports_691() {
        let tau = rational_sys(&[("T_2", -24), ("T_3", 252), ("T_4", -1472), ("T_5", 4830)]);
        let sigma = rational_sys(&[
            ("T_2", 2049),
            ("T_3", 177148),
            ("T_4", 4196353),
            ("T_5", 48828126),
        ]);
        let ScanOutcome::Congruences(ws) = congruence_prime_scan(&tau, &sigma, 100).unwrap()
        else {
            panic!("expected finite outcome");
        };
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].prime, BigInt::from(691));
    }

    #[test]
    fn label_validation() {
        let a = rational_sys(&[("T_2", 0)]);
        let b = rational_sys(&[("T_3", 1)]);
        assert_eq!(
            congruence_prime_scan(&a, &b, 10),
            Err(ScanError::IncompatibleLabels("T_2".to_string()))
        );
        assert_eq!(
            congruence_prime_scan(&a, &a, 0),
            Err(ScanError::EmptyRange)
        );
        // Bound excludes T_5 so a T_5-only mismatch is invisible.
        let c = rational_sys(&[("T_2", 0), ("T_5", 7)]);
        let d = rational_sys(&[("T_2", 0), ("T_5", 9)]);
        assert_eq!(
            congruence_prime_scan(&c, &d, 4).unwrap(),
            ScanOutcome::Identical
        );
    }

    #[test]
    fn min_poly_must_be_monic() {
        assert_eq!(
            EigenSystem::new(vec![BigInt::from(2), BigInt::from(2)], BTreeMap::new()),
            Err(ScanError::BadMinPoly)
        );
        assert_eq!(
            EigenSystem::new(vec![BigInt::one()], BTreeMap::new()),
            Err(ScanError::BadMinPoly)
        );
    }
}
