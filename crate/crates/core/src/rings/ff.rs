//! Finite fields `F_{p^k}` with deterministically chosen irreducible moduli.
//!
//! Elements are coefficient vectors over the prime field, constant term
//! first, always of length equal to the field degree. An extension field is
//! presented as `F_p[x]/(m)` where `m` is the canonical modulus: the
//! lexicographically least monic irreducible of the right degree, comparing
//! candidates by their base-`p` encoding with the constant term least
//! significant. That convention yields `x^2 + x + 1` for `F_4` and
//! `x^2 + 1` for `F_9`.

use smallvec::{smallvec, SmallVec};

use super::RingError;

/// Coefficient vector over `F_p`, constant term first, length = field degree.
pub type FfElem = SmallVec<[u64; 4]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u64,
    deg: usize,
    /// Monic modulus, constant term first, length `deg + 1`; empty for prime fields.
    modulus: SmallVec<[u64; 8]>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invm(a: u64, p: u64) -> u64 {
    // Extended Euclid on signed wide integers; `a` must be nonzero mod `p`.
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "inverse of non-unit mod {p}");
    t0.rem_euclid(p as i128) as u64
}

/// Dense polynomial helpers over `F_p`; slices are coefficient vectors with
/// constant term first and no trailing-zero guarantees.
fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(ai, bj, p), p);
        }
    }
    fp_trim(&mut out);
    out
}

fn fp_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    fp_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = invm(m[dm], p);
    while r.len() > dm {
        let dr = r.len() - 1;
        let c = mulm(r[dr], lead_inv, p);
        for (k, &mk) in m.iter().enumerate() {
            let idx = dr - dm + k;
            r[idx] = subm(r[idx], mulm(c, mk, p), p);
        }
        fp_trim(&mut r);
    }
    r
}

/// Decode a monic degree-`d` polynomial from the base-`p` encoding of its
/// non-leading coefficients (constant term least significant).
fn decode_monic(mut n: u64, d: usize, p: u64) -> Vec<u64> {
    let mut coeffs = Vec::with_capacity(d + 1);
    for _ in 0..d {
        coeffs.push(n % p);
        n /= p;
    }
    coeffs.push(1);
    coeffs
}

fn fp_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    // Degrees up to three are irreducible exactly when rootless.
    for a in 0..p {
        let mut acc = 0u64;
        for &c in f.iter().rev() {
            acc = addm(mulm(acc, a, p), c, p);
        }
        if acc == 0 {
            return false;
        }
    }
    if d <= 3 {
        return true;
    }
    for e in 2..=d / 2 {
        for g in monic_irreducibles_fp(p, e) {
            if fp_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// All monic irreducibles of exact degree `d` over `F_p`, in canonical order.
fn monic_irreducibles_fp(p: u64, d: usize) -> Vec<Vec<u64>> {
    let count = p.pow(d as u32);
    let mut out = Vec::new();
    for n in 0..count {
        let f = decode_monic(n, d, p);
        if fp_is_irreducible(&f, p) {
            out.push(f);
        }
    }
    out
}

impl FiniteField {
    pub fn prime(p: u64) -> Result<Self, RingError> {
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        Ok(FiniteField {
            p,
            deg: 1,
            modulus: SmallVec::new(),
        })
    }

    /// The field of order `p^k` presented with the canonical modulus.
    pub fn extension(p: u64, k: usize) -> Result<Self, RingError> {
        if k == 1 {
            return Self::prime(p);
        }
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        let modulus = Self::canonical_modulus(p, k);
        Ok(FiniteField {
            p,
            deg: k,
            modulus: modulus.into_iter().collect(),
        })
    }

    /// Lexicographically least monic irreducible of degree `k` over `F_p`.
    pub fn canonical_modulus(p: u64, k: usize) -> Vec<u64> {
        assert!(k >= 2, "canonical modulus only applies to proper extensions");
        let count = p.pow(k as u32);
        for n in 0..count {
            let f = decode_monic(n, k, p);
            if fp_is_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("irreducibles of every degree exist over F_{p}")
    }

    /// Field of order `p^k` with an explicitly supplied monic modulus
    /// (constant term first, length `k + 1`).
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self, RingError> {
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        if modulus.len() < 3 {
            return Err(RingError::BadModulus("degree must be at least 2".into()));
        }
        let reduced: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        if *reduced.last().unwrap() != 1 {
            return Err(RingError::BadModulus("modulus must be monic".into()));
        }
        if !fp_is_irreducible(&reduced, p) {
            return Err(RingError::BadModulus("modulus must be irreducible".into()));
        }
        Ok(FiniteField {
            p,
            deg: reduced.len() - 1,
            modulus: reduced.into_iter().collect(),
        })
    }

    /// Rebuild a field from data already validated once (descriptor layer).
    /// Skips the primality and irreducibility checks.
    pub(crate) fn unchecked(p: u64, modulus: &[u64]) -> Self {
        if modulus.is_empty() {
            FiniteField {
                p,
                deg: 1,
                modulus: SmallVec::new(),
            }
        } else {
            FiniteField {
                p,
                deg: modulus.len() - 1,
                modulus: modulus.iter().copied().collect(),
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        self.p
            .checked_pow(self.deg as u32)
            .expect("field order exceeds u64")
    }

    pub fn zero(&self) -> FfElem {
        smallvec![0; self.deg]
    }

    pub fn one(&self) -> FfElem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FfElem {
        let r = n.rem_euclid(self.p as i64) as u64;
        let mut e = self.zero();
        e[0] = r;
        e
    }

    /// Build an element from arbitrary coefficients (reduced mod `p`,
    /// truncated or zero-padded to the field degree).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FfElem, RingError> {
        if coeffs.len() > self.deg {
            return Err(RingError::BadCoefficients(format!(
                "expected at most {} coefficients, got {}",
                self.deg,
                coeffs.len()
            )));
        }
        let mut e = self.zero();
        for (i, &c) in coeffs.iter().enumerate() {
            e[i] = c % self.p;
        }
        Ok(e)
    }

    pub fn is_zero(&self, a: &FfElem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, a: &FfElem) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FfElem, b: &FfElem) -> FfElem {
        a.iter()
            .zip(b.iter())
            .map(|(&x, &y)| addm(x, y, self.p))
            .collect()
    }

    pub fn sub(&self, a: &FfElem, b: &FfElem) -> FfElem {
        a.iter()
            .zip(b.iter())
            .map(|(&x, &y)| subm(x, y, self.p))
            .collect()
    }

    pub fn neg(&self, a: &FfElem) -> FfElem {
        a.iter().map(|&x| subm(0, x, self.p)).collect()
    }

    pub fn mul(&self, a: &FfElem, b: &FfElem) -> FfElem {
        if self.deg == 1 {
            return smallvec![mulm(a[0], b[0], self.p)];
        }
        let prod = fp_mul(a, b, self.p);
        let red = fp_rem(&prod, &self.modulus, self.p);
        let mut e = self.zero();
        for (i, &c) in red.iter().enumerate() {
            e[i] = c;
        }
        e
    }

    pub fn inv(&self, a: &FfElem) -> Result<FfElem, RingError> {
        if self.is_zero(a) {
            return Err(RingError::DivisionByZero);
        }
        if self.deg == 1 {
            return Ok(smallvec![invm(a[0], self.p)]);
        }
        // Extended Euclid between `a` and the modulus over F_p.
        let mut r0: Vec<u64> = self.modulus.to_vec();
        let mut r1: Vec<u64> = a.iter().copied().collect();
        fp_trim(&mut r1);
        let mut t0: Vec<u64> = Vec::new();
        let mut t1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (q, r) = fp_divmod(&r0, &r1, self.p);
            let qt1 = fp_mul(&q, &t1, self.p);
            let t2 = fp_sub(&t0, &qt1, self.p);
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t2;
        }
        assert_eq!(r0.len(), 1, "gcd with irreducible modulus must be constant");
        let scale = invm(r0[0], self.p);
        let mut e = self.zero();
        for (i, &c) in t0.iter().enumerate() {
            e[i] = mulm(c, scale, self.p);
        }
        Ok(e)
    }

    pub fn pow(&self, a: &FfElem, mut e: u64) -> FfElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Index of an element in the canonical enumeration (base-`p` encoding,
    /// constant term least significant).
    pub fn to_index(&self, a: &FfElem) -> u64 {
        let mut n = 0u64;
        for &c in a.iter().rev() {
            n = n * self.p + c;
        }
        n
    }

    pub fn from_index(&self, mut n: u64) -> FfElem {
        let mut e = self.zero();
        for c in e.iter_mut() {
            *c = n % self.p;
            n /= self.p;
        }
        e
    }

    /// All field elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FfElem> + '_ {
        (0..self.order()).map(|n| self.from_index(n))
    }

    /// Canonically least generator of the multiplicative group.
    pub fn multiplicative_generator(&self) -> FfElem {
        let q1 = self.order() - 1;
        let primes = distinct_prime_factors(q1);
        'outer: for n in 1..self.order() {
            let a = self.from_index(n);
            if self.is_zero(&a) {
                continue;
            }
            for &l in &primes {
                if self.is_one(&self.pow(&a, q1 / l)) {
                    continue 'outer;
                }
            }
            return a;
        }
        unreachable!("multiplicative group of a finite field is cyclic")
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: &FfElem) -> u64 {
        assert!(!self.is_zero(a));
        let q1 = self.order() - 1;
        let mut ord = q1;
        for l in distinct_prime_factors(q1) {
            while ord.is_multiple_of(l) && self.is_one(&self.pow(a, ord / l)) {
                ord /= l;
            }
        }
        ord
    }
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = subm(x, y, p);
    }
    fp_trim(&mut out);
    out
}

fn fp_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r: Vec<u64> = a.to_vec();
    fp_trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = invm(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let c = mulm(*r.last().unwrap(), lead_inv, p);
        q[dr - db] = c;
        for (k, &bk) in b.iter().enumerate() {
            let idx = dr - db + k;
            r[idx] = subm(r[idx], mulm(c, bk, p), p);
        }
        fp_trim(&mut r);
    }
    fp_trim(&mut q);
    (q, r)
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d as u128 * d as u128 <= n as u128 {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All monic irreducibles of exact degree `d` over `F_p`, canonical order.
/// Exposed for modulus selection and for place enumeration over prime fields.
pub fn monic_irreducible_polys(p: u64, d: usize) -> Vec<Vec<u64>> {
    monic_irreducibles_fp(p, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli_match_known_small_fields() {
        assert_eq!(FiniteField::canonical_modulus(2, 2), vec![1, 1, 1]); // x^2+x+1
        assert_eq!(FiniteField::canonical_modulus(3, 2), vec![1, 0, 1]); // x^2+1
        assert_eq!(FiniteField::canonical_modulus(5, 2), vec![2, 0, 1]); // x^2+2
        assert_eq!(FiniteField::canonical_modulus(2, 3), vec![1, 1, 0, 1]); // x^3+x+1
    }

    #[test]
    fn f4_has_eight_element_table_consistency() {
        let f4 = FiniteField::extension(2, 2).unwrap();
        // x * x = x + 1 under x^2 + x + 1.
        let x = f4.from_index(2);
        let sq = f4.mul(&x, &x);
        assert_eq!(f4.to_index(&sq), 3);
        // Every nonzero element has a working inverse.
        for a in f4.elements().skip(1) {
            let inv = f4.inv(&a).unwrap();
            assert!(f4.is_one(&f4.mul(&a, &inv)));
        }
    }

    #[test]
    fn f9_arithmetic_and_generator() {
        let f9 = FiniteField::extension(3, 2).unwrap();
        assert_eq!(f9.order(), 9);
        // x^2 = -1 under x^2 + 1.
        let x = f9.from_index(3);
        let sq = f9.mul(&x, &x);
        assert_eq!(sq, f9.from_int(-1));
        let g = f9.multiplicative_generator();
        assert_eq!(f9.element_order(&g), 8);
        // Powers of the generator enumerate every nonzero element.
        let mut seen = std::collections::HashSet::new();
        let mut acc = f9.one();
        for _ in 0..8 {
            acc = f9.mul(&acc, &g);
            seen.insert(f9.to_index(&acc));
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn prime_field_matches_modular_arithmetic() {
        let f7 = FiniteField::prime(7).unwrap();
        for a in 0..7i64 {
            for b in 0..7i64 {
                let x = f7.from_int(a);
                let y = f7.from_int(b);
                assert_eq!(f7.add(&x, &y), f7.from_int(a + b));
                assert_eq!(f7.mul(&x, &y), f7.from_int(a * b));
                assert_eq!(f7.sub(&x, &y), f7.from_int(a - b));
            }
        }
    }

    #[test]
    fn irreducible_enumeration_counts() {
        // Counts of monic irreducibles follow the necklace numbers.
        assert_eq!(monic_irreducible_polys(2, 1).len(), 2);
        assert_eq!(monic_irreducible_polys(2, 2).len(), 1);
        assert_eq!(monic_irreducible_polys(2, 3).len(), 2);
        assert_eq!(monic_irreducible_polys(2, 4).len(), 3);
        assert_eq!(monic_irreducible_polys(3, 2).len(), 3);
        assert_eq!(monic_irreducible_polys(5, 2).len(), 10);
        assert_eq!(monic_irreducible_polys(5, 3).len(), 40);
    }

    #[test]
    fn explicit_modulus_is_validated() {
        assert!(FiniteField::with_modulus(2, &[1, 1, 1]).is_ok());
        // x^2 + 1 = (x+1)^2 over F_2.
        assert!(FiniteField::with_modulus(2, &[1, 0, 1]).is_err());
        assert!(FiniteField::with_modulus(4, &[1, 1, 1]).is_err());
    }
}
