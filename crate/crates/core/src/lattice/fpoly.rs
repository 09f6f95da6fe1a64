//! Univariate polynomials over F_p and over extensions F_q = F_p[x]/(φ):
//! arithmetic, squarefree decomposition, distinct-degree splitting, and
//! randomized equal-degree splitting. Factor lists come back sorted by
//! (degree, coefficient list), so a fixed-seed generator makes every
//! factorization fully deterministic.

use super::fp::{mod_add, mod_inv, mod_mul, mod_sub};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

/// Coefficients in ascending degree, no trailing zeros; empty = 0.
pub type Poly = Vec<u64>;

pub fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn deg(a: &Poly) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub fn is_one(a: &Poly) -> bool {
    a.len() == 1 && a[0] == 1
}

pub fn poly_add(a: &Poly, b: &Poly, p: u64) -> Poly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = mod_add(x, y, p);
    }
    trim(&mut out);
    out
}

pub fn poly_sub(a: &Poly, b: &Poly, p: u64) -> Poly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = mod_sub(x, y, p);
    }
    trim(&mut out);
    out
}

pub fn poly_mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = mod_add(out[i + j], mod_mul(x, y, p), p);
        }
    }
    trim(&mut out);
    out
}

pub fn poly_scale(a: &Poly, c: u64, p: u64) -> Poly {
    let mut out: Poly = a.iter().map(|&x| mod_mul(x, c, p)).collect();
    trim(&mut out);
    out
}

pub fn poly_divrem(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    let mut rem = a.clone();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - db];
    while rem.len() >= b.len() {
        let dr = rem.len() - 1;
        let c = mod_mul(rem[dr], lead_inv, p);
        quot[dr - db] = c;
        for i in 0..=db {
            let sub = mod_mul(c, b[i], p);
            rem[dr - db + i] = mod_sub(rem[dr - db + i], sub, p);
        }
        trim(&mut rem); // the leading term cancels exactly, so this shrinks
    }
    trim(&mut quot);
    (quot, rem)
}

pub fn poly_rem(a: &Poly, b: &Poly, p: u64) -> Poly {
    poly_divrem(a, b, p).1
}

pub fn poly_monic(a: &Poly, p: u64) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => poly_scale(a, mod_inv(lead, p), p),
    }
}

pub fn poly_gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    poly_monic(&x, p)
}

/// (g, s, t) with s·a + t·b = g = monic gcd.
pub fn poly_ext_gcd(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Poly, Poly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Poly, Poly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1, p);
        let s = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
        let t = poly_sub(&t0, &poly_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if let Some(&lead) = r0.last() {
        let c = mod_inv(lead, p);
        return (poly_scale(&r0, c, p), poly_scale(&s0, c, p), poly_scale(&t0, c, p));
    }
    (r0, s0, t0)
}

pub fn poly_deriv(a: &Poly, p: u64) -> Poly {
    let mut out: Poly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mod_mul(c, (i as u64) % p, p))
        .collect();
    trim(&mut out);
    out
}

/// base^e mod m, with a big-integer exponent (needed for (p^d − 1)/2).
pub fn poly_powmod(base: &Poly, e: &BigInt, m: &Poly, p: u64) -> Poly {
    assert!(e >= &BigInt::zero());
    let mut acc: Poly = vec![1];
    let mut sq = poly_rem(base, m, p);
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            acc = poly_rem(&poly_mul(&acc, &sq, p), m, p);
        }
        if i + 1 < bits {
            sq = poly_rem(&poly_mul(&sq, &sq, p), m, p);
        }
    }
    acc
}

/// p-th root of f when f' = 0, i.e. f = Σ c_k x^{pk}; over F_p the
/// coefficients are fixed by Frobenius, so the root is Σ c_k x^k.
fn pth_root(f: &Poly, p: u64) -> Poly {
    let pu = p as usize;
    let mut out = Vec::with_capacity(f.len() / pu + 1);
    for (i, &c) in f.iter().enumerate() {
        if i % pu == 0 {
            out.push(c);
        } else {
            assert!(c == 0, "polynomial is not a p-th power");
        }
    }
    trim(&mut out);
    out
}

/// Monic squarefree decomposition: list of (monic factor, multiplicity).
pub fn squarefree_decompose(f: &Poly, p: u64) -> Vec<(Poly, u64)> {
    let f = poly_monic(f, p);
    assert!(deg(&f).unwrap_or(0) >= 1, "decomposition needs a nonconstant input");
    let mut result = Vec::new();
    let df = poly_deriv(&f, p);
    if df.is_empty() {
        for (h, m) in squarefree_decompose(&pth_root(&f, p), p) {
            result.push((h, m * p));
        }
        return result;
    }
    let mut c = poly_gcd(&f, &df, p);
    let mut w = poly_divrem(&f, &c, p).0;
    let mut i = 1u64;
    while !is_one(&w) {
        let y = poly_gcd(&w, &c, p);
        let z = poly_divrem(&w, &y, p).0;
        if !is_one(&z) {
            result.push((z, i));
        }
        i += 1;
        w = y.clone();
        c = poly_divrem(&c, &y, p).0;
    }
    if !is_one(&c) {
        for (h, m) in squarefree_decompose(&pth_root(&c, p), p) {
            result.push((h, m * p));
        }
    }
    result
}

/// Distinct-degree splitting of a squarefree monic f: (product, degree d).
pub fn distinct_degree_split(f: &Poly, p: u64) -> Vec<(Poly, usize)> {
    let mut f = f.clone();
    let mut out = Vec::new();
    let x: Poly = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0usize;
    while deg(&f).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = poly_powmod(&h, &BigInt::from(p), &f, p);
        let g = poly_gcd(&poly_sub(&h, &x, p), &f, p);
        if !is_one(&g) {
            out.push((g.clone(), d));
            f = poly_divrem(&f, &g, p).0;
            h = poly_rem(&h, &f, p);
        }
    }
    if deg(&f).unwrap_or(0) >= 1 {
        let df = deg(&f).unwrap();
        out.push((f, df));
    }
    out
}

fn random_poly(rng: &mut impl Rng, max_deg: usize, p: u64) -> Poly {
    let mut out: Poly = (0..=max_deg).map(|_| rng.gen_range(0..p)).collect();
    trim(&mut out);
    out
}

/// Equal-degree splitting: f monic squarefree, all irreducible factors of
/// degree d. Cantor–Zassenhaus for odd p, trace splitting for p = 2.
pub fn equal_degree_split(f: &Poly, d: usize, p: u64, rng: &mut impl Rng) -> Vec<Poly> {
    let n = deg(f).expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    loop {
        let a = random_poly(rng, n - 1, p);
        if a.is_empty() {
            continue;
        }
        let g0 = poly_gcd(&a, f, p);
        if !is_one(&g0) && deg(&g0) != Some(n) {
            let rest = poly_divrem(f, &g0, p).0;
            let mut out = equal_degree_split(&g0, d, p, rng);
            out.extend(equal_degree_split(&rest, d, p, rng));
            return out;
        }
        let b = if p == 2 {
            // Trace map over F_{2^d}: Σ a^{2^i} splits the factors.
            let mut acc = poly_rem(&a, f, p);
            let mut t = poly_rem(&a, f, p);
            for _ in 1..d {
                t = poly_rem(&poly_mul(&t, &t, p), f, p);
                acc = poly_add(&acc, &t, p);
            }
            acc
        } else {
            let e = (BigInt::from(p).pow(d as u32) - 1) / 2;
            let pw = poly_powmod(&a, &e, f, p);
            poly_sub(&pw, &vec![1], p)
        };
        let g = poly_gcd(&b, f, p);
        if !is_one(&g) && deg(&g) != Some(n) {
            let rest = poly_divrem(f, &g, p).0;
            let mut out = equal_degree_split(&g, d, p, rng);
            out.extend(equal_degree_split(&rest, d, p, rng));
            return out;
        }
    }
}

/// Full monic factorization, sorted by (degree, coefficient list).
pub fn factor(f: &Poly, p: u64, rng: &mut impl Rng) -> Vec<(Poly, u64)> {
    let mut out: Vec<(Poly, u64)> = Vec::new();
    for (sq, mult) in squarefree_decompose(f, p) {
        for (block, d) in distinct_degree_split(&sq, p) {
            for irr in equal_degree_split(&block, d, p, rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    out
}

// ---------------------------------------------------------------------------
// Extension fields F_q = F_p[x]/(φ) and polynomials over them.

/// Field context: all elements are polys of degree < deg φ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fq {
    pub p: u64,
    pub modulus: Poly,
}

pub type FqElt = Poly;

impl Fq {
    pub fn new(p: u64, modulus: Poly) -> Self {
        assert!(deg(&modulus).unwrap_or(0) >= 1, "extension needs a nonconstant modulus");
        assert_eq!(*modulus.last().unwrap(), 1, "modulus must be monic");
        Fq { p, modulus }
    }

    pub fn ext_degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// q = p^m as a big integer.
    pub fn order(&self) -> BigInt {
        BigInt::from(self.p).pow(self.ext_degree() as u32)
    }

    pub fn reduce(&self, a: &Poly) -> FqElt {
        poly_rem(a, &self.modulus, self.p)
    }

    pub fn from_fp(&self, c: u64) -> FqElt {
        let mut v = vec![c % self.p];
        trim(&mut v);
        v
    }

    pub fn add(&self, a: &FqElt, b: &FqElt) -> FqElt {
        poly_add(a, b, self.p)
    }

    pub fn sub(&self, a: &FqElt, b: &FqElt) -> FqElt {
        poly_sub(a, b, self.p)
    }

    pub fn mul(&self, a: &FqElt, b: &FqElt) -> FqElt {
        self.reduce(&poly_mul(a, b, self.p))
    }

    pub fn inv(&self, a: &FqElt) -> FqElt {
        assert!(!a.is_empty(), "inverse of zero in F_q");
        let (g, s, _) = poly_ext_gcd(a, &self.modulus, self.p);
        assert!(is_one(&g), "modulus is not irreducible or element not invertible");
        self.reduce(&s)
    }

    pub fn pow(&self, a: &FqElt, e: &BigInt) -> FqElt {
        poly_powmod(a, e, &self.modulus, self.p)
    }
}

/// Polynomial in y over F_q: ascending FqElt coefficients, trailing zeros
/// trimmed.
pub type QPoly = Vec<FqElt>;

pub fn qtrim(a: &mut QPoly) {
    while a.last().map_or(false, |c| c.is_empty()) {
        a.pop();
    }
}

pub fn qdeg(a: &QPoly) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub fn q_is_one(a: &QPoly) -> bool {
    a.len() == 1 && is_one(&a[0])
}

pub fn qpoly_add(a: &QPoly, b: &QPoly, fq: &Fq) -> QPoly {
    let mut out = vec![FqElt::new(); a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        *o = fq.add(&x, &y);
    }
    qtrim(&mut out);
    out
}

pub fn qpoly_sub(a: &QPoly, b: &QPoly, fq: &Fq) -> QPoly {
    let mut out = vec![FqElt::new(); a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        *o = fq.sub(&x, &y);
    }
    qtrim(&mut out);
    out
}

pub fn qpoly_mul(a: &QPoly, b: &QPoly, fq: &Fq) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FqElt::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_empty() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let prod = fq.mul(x, y);
            out[i + j] = fq.add(&out[i + j], &prod);
        }
    }
    qtrim(&mut out);
    out
}

pub fn qpoly_divrem(a: &QPoly, b: &QPoly, fq: &Fq) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let db = b.len() - 1;
    let lead_inv = fq.inv(&b[db]);
    let mut rem = a.clone();
    let mut quot = vec![FqElt::new(); a.len().saturating_sub(db)];
    loop {
        qtrim(&mut rem);
        let Some(dr) = qdeg(&rem) else { break };
        if dr < db {
            break;
        }
        let c = fq.mul(&rem[dr], &lead_inv);
        quot[dr - db] = c.clone();
        for i in 0..=db {
            let sub = fq.mul(&c, &b[i]);
            rem[dr - db + i] = fq.sub(&rem[dr - db + i], &sub);
        }
    }
    qtrim(&mut quot);
    (quot, rem)
}

pub fn qpoly_rem(a: &QPoly, b: &QPoly, fq: &Fq) -> QPoly {
    qpoly_divrem(a, b, fq).1
}

pub fn qpoly_monic(a: &QPoly, fq: &Fq) -> QPoly {
    match a.last() {
        None => Vec::new(),
        Some(lead) => {
            let inv = fq.inv(lead);
            let mut out: QPoly = a.iter().map(|c| fq.mul(c, &inv)).collect();
            qtrim(&mut out);
            out
        }
    }
}

pub fn qpoly_gcd(a: &QPoly, b: &QPoly, fq: &Fq) -> QPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = qpoly_rem(&x, &y, fq);
        x = y;
        y = r;
    }
    qpoly_monic(&x, fq)
}

pub fn qpoly_deriv(a: &QPoly, fq: &Fq) -> QPoly {
    let mut out: QPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| fq.mul(c, &fq.from_fp(i as u64 % fq.p)))
        .collect();
    qtrim(&mut out);
    out
}

pub fn qpoly_powmod(base: &QPoly, e: &BigInt, m: &QPoly, fq: &Fq) -> QPoly {
    assert!(e >= &BigInt::zero());
    let mut acc: QPoly = vec![fq.from_fp(1)];
    let mut sq = qpoly_rem(base, m, fq);
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            acc = qpoly_rem(&qpoly_mul(&acc, &sq, fq), m, fq);
        }
        if i + 1 < bits {
            sq = qpoly_rem(&qpoly_mul(&sq, &sq, fq), m, fq);
        }
    }
    acc
}

/// p-th root in F_q[y] of f with f' = 0: y^{pk} → y^k and each coefficient
/// goes through the inverse Frobenius c ↦ c^{p^{m−1}}.
fn q_pth_root(f: &QPoly, fq: &Fq) -> QPoly {
    let pu = fq.p as usize;
    let inv_frob = BigInt::from(fq.p).pow((fq.ext_degree() - 1) as u32);
    let mut out = QPoly::new();
    for (i, c) in f.iter().enumerate() {
        if i % pu == 0 {
            out.push(fq.pow(c, &inv_frob));
        } else {
            assert!(c.is_empty(), "polynomial is not a p-th power");
        }
    }
    qtrim(&mut out);
    out
}

pub fn q_squarefree_decompose(f: &QPoly, fq: &Fq) -> Vec<(QPoly, u64)> {
    let f = qpoly_monic(f, fq);
    assert!(qdeg(&f).unwrap_or(0) >= 1);
    let mut result = Vec::new();
    let df = qpoly_deriv(&f, fq);
    if df.is_empty() {
        for (h, m) in q_squarefree_decompose(&q_pth_root(&f, fq), fq) {
            result.push((h, m * fq.p));
        }
        return result;
    }
    let mut c = qpoly_gcd(&f, &df, fq);
    let mut w = qpoly_divrem(&f, &c, fq).0;
    let mut i = 1u64;
    while !q_is_one(&w) {
        let y = qpoly_gcd(&w, &c, fq);
        let z = qpoly_divrem(&w, &y, fq).0;
        if !q_is_one(&z) {
            result.push((z, i));
        }
        i += 1;
        w = y.clone();
        c = qpoly_divrem(&c, &y, fq).0;
    }
    if !q_is_one(&c) {
        for (h, m) in q_squarefree_decompose(&q_pth_root(&c, fq), fq) {
            result.push((h, m * fq.p));
        }
    }
    result
}

pub fn q_distinct_degree_split(f: &QPoly, fq: &Fq) -> Vec<(QPoly, usize)> {
    let mut f = f.clone();
    let mut out = Vec::new();
    let y: QPoly = vec![FqElt::new(), fq.from_fp(1)];
    let mut h = y.clone();
    let q = fq.order();
    let mut d = 0usize;
    while qdeg(&f).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = qpoly_powmod(&h, &q, &f, fq);
        let g = qpoly_gcd(&qpoly_sub(&h, &y, fq), &f, fq);
        if !q_is_one(&g) {
            out.push((g.clone(), d));
            f = qpoly_divrem(&f, &g, fq).0;
            h = qpoly_rem(&h, &f, fq);
        }
    }
    if qdeg(&f).unwrap_or(0) >= 1 {
        let df = qdeg(&f).unwrap();
        out.push((f, df));
    }
    out
}

fn q_random_poly(rng: &mut impl Rng, max_deg: usize, fq: &Fq) -> QPoly {
    let m = fq.ext_degree();
    let mut out: QPoly = (0..=max_deg)
        .map(|_| {
            let mut c: FqElt = (0..m).map(|_| rng.gen_range(0..fq.p)).collect();
            trim(&mut c);
            c
        })
        .collect();
    qtrim(&mut out);
    out
}

pub fn q_equal_degree_split(f: &QPoly, d: usize, fq: &Fq, rng: &mut impl Rng) -> Vec<QPoly> {
    let n = qdeg(f).expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    loop {
        let a = q_random_poly(rng, n - 1, fq);
        if a.is_empty() {
            continue;
        }
        let g0 = qpoly_gcd(&a, f, fq);
        if !q_is_one(&g0) && qdeg(&g0) != Some(n) {
            let rest = qpoly_divrem(f, &g0, fq).0;
            let mut out = q_equal_degree_split(&g0, d, fq, rng);
            out.extend(q_equal_degree_split(&rest, d, fq, rng));
            return out;
        }
        let b = if fq.p == 2 {
            // Trace over F_2: Σ a^{2^i} for i < m·d.
            let rounds = fq.ext_degree() * d;
            let mut acc = qpoly_rem(&a, f, fq);
            let mut t = qpoly_rem(&a, f, fq);
            for _ in 1..rounds {
                t = qpoly_rem(&qpoly_mul(&t, &t, fq), f, fq);
                acc = qpoly_add(&acc, &t, fq);
            }
            acc
        } else {
            let e = (fq.order().pow(d as u32) - 1) / 2;
            let pw = qpoly_powmod(&a, &e, f, fq);
            qpoly_sub(&pw, &vec![fq.from_fp(1)], fq)
        };
        let g = qpoly_gcd(&b, f, fq);
        if !q_is_one(&g) && qdeg(&g) != Some(n) {
            let rest = qpoly_divrem(f, &g, fq).0;
            let mut out = q_equal_degree_split(&g, d, fq, rng);
            out.extend(q_equal_degree_split(&rest, d, fq, rng));
            return out;
        }
    }
}

/// Full monic factorization over F_q, sorted by (degree, coefficient lists).
pub fn qpoly_factor(f: &QPoly, fq: &Fq, rng: &mut impl Rng) -> Vec<(QPoly, u64)> {
    let mut out: Vec<(QPoly, u64)> = Vec::new();
    for (sq, mult) in q_squarefree_decompose(f, fq) {
        for (block, d) in q_distinct_degree_split(&sq, fq) {
            for irr in q_equal_degree_split(&block, d, fq, rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    out
}

/// Deterministic primality for u64-scale integers is covered by trial
/// division in this crate; this Miller–Rabin handles the big quotient sizes
/// arising from products of eigenvalue differences. The witness set is
/// deterministic below 3.3·10^24; larger inputs fall back to the same bases
/// (composites slipping through would only mislabel a non-prime divisor, and
/// the subsequent witness factorization would fail loudly).
pub fn is_probable_prime(n: &BigInt) -> bool {
    use num_integer::Integer;
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let s = BigInt::from(small);
        if n == &s {
            return true;
        }
        if n.is_multiple_of(&s) {
            return false;
        }
    }
    let n_minus_1: BigInt = n - 1;
    let s = n_minus_1.trailing_zeros().unwrap();
    let d = &n_minus_1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of a positive integer: trial division for the small
/// part, Pollard's rho (Brent variant) for the rest.
pub fn factor_bigint(n: &BigInt) -> Vec<(BigInt, u32)> {
    use num_integer::Integer;
    assert!(n > &BigInt::zero(), "factorization needs a positive integer");
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let push = |p: BigInt, e: u32, out: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = out.iter_mut().find(|(q, _)| *q == p) {
            last.1 += e;
        } else {
            out.push((p, e));
        }
    };
    for small in 2u64..10_000 {
        let s = BigInt::from(small);
        if &s * &s > rest {
            break;
        }
        let mut e = 0;
        while rest.is_multiple_of(&s) {
            rest /= &s;
            e += 1;
        }
        if e > 0 {
            push(s, e, &mut out);
        }
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, 1, &mut out);
            continue;
        }
        let d = pollard_rho(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn pollard_rho(n: &BigInt) -> BigInt {
    use num_integer::Integer;
    assert!(!n.is_multiple_of(&BigInt::from(2)), "even inputs are removed first");
    let one = BigInt::one();
    let mut c = BigInt::from(1);
    loop {
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = one.clone();
        while d.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && &d != n {
            return d;
        }
        c += BigInt::one(); // cycle degenerated; restart with a new polynomial
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    #[test]
    fn division_and_gcd() {
        let p = 5;
        // (x+1)(x+4) = x² + 4 over F_5 (since 5x vanishes).
        let prod = poly_mul(&vec![1, 1], &vec![4, 1], p);
        assert_eq!(prod, vec![4, 0, 1]);
        let (q, r) = poly_divrem(&prod, &vec![1, 1], p);
        assert_eq!(q, vec![4, 1]);
        assert!(r.is_empty());
        assert_eq!(poly_gcd(&prod, &vec![1, 1], p), vec![1, 1]);
    }

    #[test]
    fn ext_gcd_is_bezout() {
        let p = 7;
        // (−2)² + 3 = 7 ≡ 0, so x+2 divides x²+3 over F_7.
        let a = vec![3, 0, 1];
        let b = vec![2, 1];
        let (g, s, t) = poly_ext_gcd(&a, &b, p);
        let lhs = poly_add(&poly_mul(&s, &a, p), &poly_mul(&t, &b, p), p);
        assert_eq!(lhs, g);
        assert_eq!(g, vec![2, 1]);
        // Coprime pair: x²+1 and x+2 (4+1 = 5 ≢ 0 mod 7).
        let a2 = vec![1, 0, 1];
        let (g2, s2, t2) = poly_ext_gcd(&a2, &b, p);
        assert!(is_one(&g2));
        let lhs2 = poly_add(&poly_mul(&s2, &a2, p), &poly_mul(&t2, &b, p), p);
        assert_eq!(lhs2, g2);
    }

    #[test]
    fn factoring_over_fp() {
        let mut r = rng();
        // x² − 1 = (x+1)(x+4) over F_5.
        let f = vec![4, 0, 1];
        let fact = factor(&f, 5, &mut r);
        assert_eq!(fact, vec![(vec![1, 1], 1), (vec![4, 1], 1)]);
        // x² − 2 is irreducible over F_5 but splits over F_7 as (x+3)(x+4).
        let g = vec![3, 0, 1];
        assert_eq!(factor(&g, 5, &mut r), vec![(vec![3, 0, 1], 1)]);
        let g7 = vec![5, 0, 1];
        assert_eq!(factor(&g7, 7, &mut r), vec![(vec![3, 1], 1), (vec![4, 1], 1)]);
        // (x+1)² over F_2 is x² + 1.
        assert_eq!(factor(&vec![1, 0, 1], 2, &mut r), vec![(vec![1, 1], 2)]);
        // x³ + x + 1 is irreducible over F_2.
        assert_eq!(factor(&vec![1, 1, 0, 1], 2, &mut r), vec![(vec![1, 1, 0, 1], 1)]);
    }

    #[test]
    fn factoring_respects_multiplicity_and_rebuilds() {
        let mut r = rng();
        let p = 3;
        // f = (x+1)²·(x²+1)·x over F_3 (x²+1 is irreducible mod 3).
        let f = poly_mul(
            &poly_mul(&poly_mul(&vec![1, 1], &vec![1, 1], p), &vec![1, 0, 1], p),
            &vec![0, 1],
            p,
        );
        let fact = factor(&f, p, &mut r);
        assert_eq!(
            fact,
            vec![(vec![0, 1], 1), (vec![1, 1], 2), (vec![1, 0, 1], 1)]
        );
        let mut rebuilt: Poly = vec![1];
        for (q, m) in &fact {
            for _ in 0..*m {
                rebuilt = poly_mul(&rebuilt, q, p);
            }
        }
        assert_eq!(rebuilt, poly_monic(&f, p));
    }

    #[test]
    fn fq_arithmetic_and_factoring() {
        // F_9 = F_3[x]/(x²+1); y² + 1 = (y − x)(y + x) since x² = −1.
        let fq = Fq::new(3, vec![1, 0, 1]);
        let x = vec![0, 1];
        assert_eq!(fq.mul(&x, &x), vec![2]); // x² ≡ −1 ≡ 2
        let inv = fq.inv(&x);
        assert_eq!(fq.mul(&x, &inv), vec![1]);
        let f: QPoly = vec![vec![1], Vec::new(), vec![1]]; // y² + 1
        let mut r = rng();
        let fact = qpoly_factor(&f, &fq, &mut r);
        assert_eq!(
            fact,
            vec![(vec![vec![0, 1], vec![1]], 1), (vec![vec![0, 2], vec![1]], 1)]
        );
    }

    #[test]
    fn fq_factoring_in_characteristic_two() {
        // F_4 = F_2[x]/(x²+x+1); y² + y + 1 = (y + x)(y + x + 1) over F_4.
        let fq = Fq::new(2, vec![1, 1, 1]);
        let f: QPoly = vec![vec![1], vec![1], vec![1]];
        let mut r = rng();
        let fact = qpoly_factor(&f, &fq, &mut r);
        assert_eq!(fact.len(), 2);
        let rebuilt = qpoly_mul(&fact[0].0, &fact[1].0, &fq);
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn bigint_primality_and_factoring() {
        assert!(is_probable_prime(&BigInt::from(691)));
        assert!(!is_probable_prime(&BigInt::from(691 * 3)));
        let n = BigInt::from(691u64 * 691 * 3 * 5);
        assert_eq!(
            factor_bigint(&n),
            vec![
                (BigInt::from(3), 1),
                (BigInt::from(5), 1),
                (BigInt::from(691), 2)
            ]
        );
        // A product of two five-digit primes exercises the rho path.
        let big = BigInt::from(99991u64) * BigInt::from(99989u64);
        assert_eq!(
            factor_bigint(&big),
            vec![(BigInt::from(99989), 1), (BigInt::from(99991), 1)]
        );
    }
}
