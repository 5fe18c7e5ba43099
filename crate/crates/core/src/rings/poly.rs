//! Dense univariate polynomials, Laurent polynomials, and rational
//! functions over a finite field.
//!
//! All three types keep a canonical form at every step:
//! * `Poly`: coefficient vector with constant term first, no trailing zeros
//!   (the zero polynomial is the empty vector);
//! * `Laurent`: `t^low * u` where `u` is a `Poly` with nonzero constant
//!   term, and `low = 0` when the value is zero;
//! * `RatFn`: reduced fraction with monic denominator.
//!
//! Operations take the coefficient field explicitly rather than storing it
//! per value; the ring-element layer above guarantees matching fields.

use super::ff::{FfElem, FiniteField};
use super::RingError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FfElem>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(field: &FiniteField, c: FfElem) -> Self {
        if field.is_zero(&c) {
            Self::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    pub fn one(field: &FiniteField) -> Self {
        Self::constant(field, field.one())
    }

    /// Monomial c * t^d.
    pub fn monomial(field: &FiniteField, c: FfElem, d: usize) -> Self {
        if field.is_zero(&c) {
            return Self::zero();
        }
        let mut coeffs = vec![field.zero(); d + 1];
        coeffs[d] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(field: &FiniteField, coeffs: Vec<FfElem>) -> Self {
        let mut p = Poly { coeffs };
        p.trim(field);
        p
    }

    fn trim(&mut self, field: &FiniteField) {
        while self.coeffs.last().is_some_and(|c| field.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[FfElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FfElem> {
        self.coeffs.last()
    }

    pub fn coeff(&self, field: &FiniteField, i: usize) -> FfElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_one(&self, field: &FiniteField) -> bool {
        self.coeffs.len() == 1 && field.is_one(&self.coeffs[0])
    }

    pub fn is_monic(&self, field: &FiniteField) -> bool {
        self.leading().is_some_and(|c| field.is_one(c))
    }

    pub fn add(&self, field: &FiniteField, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| field.add(&self.coeff(field, i), &other.coeff(field, i)))
            .collect();
        Poly::from_coeffs(field, coeffs)
    }

    pub fn sub(&self, field: &FiniteField, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| field.sub(&self.coeff(field, i), &other.coeff(field, i)))
            .collect();
        Poly::from_coeffs(field, coeffs)
    }

    pub fn neg(&self, field: &FiniteField) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect(),
        }
    }

    pub fn mul(&self, field: &FiniteField, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(&coeffs[i + j], &field.mul(a, b));
            }
        }
        Poly { coeffs }
    }

    pub fn scale(&self, field: &FiniteField, c: &FfElem) -> Poly {
        if field.is_zero(c) {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| field.mul(a, c)).collect(),
        }
    }

    /// Multiply by t^k.
    pub fn shift(&self, field: &FiniteField, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn divmod(&self, field: &FiniteField, divisor: &Poly) -> Result<(Poly, Poly), RingError> {
        let dlead = divisor.leading().ok_or(RingError::DivisionByZero)?;
        let db = divisor.coeffs.len() - 1;
        let mut r = self.clone();
        if r.coeffs.len() < divisor.coeffs.len() {
            return Ok((Poly::zero(), r));
        }
        let lead_inv = field.inv(dlead)?;
        let mut q = vec![field.zero(); r.coeffs.len() - db];
        while r.coeffs.len() >= divisor.coeffs.len() {
            let dr = r.coeffs.len() - 1;
            let c = field.mul(r.leading().unwrap(), &lead_inv);
            q[dr - db] = c.clone();
            for (k, bk) in divisor.coeffs.iter().enumerate() {
                let idx = dr - db + k;
                let t = field.mul(&c, bk);
                r.coeffs[idx] = field.sub(&r.coeffs[idx], &t);
            }
            r.trim(field);
        }
        Ok((Poly::from_coeffs(field, q), r))
    }

    pub fn rem(&self, field: &FiniteField, divisor: &Poly) -> Result<Poly, RingError> {
        Ok(self.divmod(field, divisor)?.1)
    }

    /// Monic associate (zero stays zero).
    pub fn monic(&self, field: &FiniteField) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(field, &field.inv(l).expect("nonzero leading coefficient")),
        }
    }

    pub fn gcd(&self, field: &FiniteField, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(field, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(field)
    }

    pub fn eval(&self, field: &FiniteField, x: &FfElem) -> FfElem {
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = field.add(&field.mul(&acc, x), c);
        }
        acc
    }

    /// Modular exponentiation: self^e mod m.
    pub fn pow_mod(&self, field: &FiniteField, mut e: u64, m: &Poly) -> Result<Poly, RingError> {
        let mut base = self.rem(field, m)?;
        let mut acc = Poly::one(field).rem(field, m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base).rem(field, m)?;
            }
            base = base.mul(field, &base).rem(field, m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Order of the trailing coefficient: the t-adic valuation.
    pub fn t_valuation(&self, field: &FiniteField) -> Option<usize> {
        self.coeffs.iter().position(|c| !field.is_zero(c))
    }
}

/// Enumerate all polynomials of degree at most `max_deg` in canonical order
/// (by total base-q index, constant term least significant).
pub fn polys_up_to_degree(field: &FiniteField, max_deg: usize) -> Vec<Poly> {
    let q = field.order();
    let count = q.pow((max_deg + 1) as u32);
    (0..count)
        .map(|mut n| {
            let mut coeffs = Vec::with_capacity(max_deg + 1);
            for _ in 0..=max_deg {
                coeffs.push(field.from_index(n % q));
                n /= q;
            }
            Poly::from_coeffs(field, coeffs)
        })
        .collect()
}

/// All monic irreducibles of exact degree `d` over the field, in canonical
/// order. Works over any finite coefficient field.
pub fn monic_irreducibles(field: &FiniteField, d: usize) -> Vec<Poly> {
    assert!(d >= 1);
    let q = field.order();
    let count = q.pow(d as u32);
    let mut out = Vec::new();
    'cand: for n in 0..count {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut m = n;
        for _ in 0..d {
            coeffs.push(field.from_index(m % q));
            m /= q;
        }
        coeffs.push(field.one());
        let f = Poly { coeffs };
        if d >= 2 {
            // Root test covers reducibility for degrees two and three.
            for x in field.elements() {
                if field.is_zero(&f.eval(field, &x)) {
                    continue 'cand;
                }
            }
        }
        if d >= 4 {
            for e in 2..=d / 2 {
                for g in monic_irreducibles(field, e) {
                    if f.rem(field, &g).unwrap().is_zero() {
                        continue 'cand;
                    }
                }
            }
        }
        out.push(f);
    }
    out
}

/// Factor a nonzero polynomial by trial division: returns the leading
/// coefficient and the monic irreducible factors with multiplicities,
/// factors in canonical order.
pub fn factor(field: &FiniteField, f: &Poly) -> Result<(FfElem, Vec<(Poly, u32)>), RingError> {
    let lead = f.leading().ok_or(RingError::DivisionByZero)?.clone();
    let mut rest = f.monic(field);
    let mut out: Vec<(Poly, u32)> = Vec::new();
    let mut d = 1;
    while rest.degree() != Some(0) {
        let deg_left = rest.degree().unwrap();
        if d > deg_left / 2 && deg_left >= 1 {
            // What remains is irreducible.
            out.push((rest.clone(), 1));
            break;
        }
        for pi in monic_irreducibles(field, d) {
            let mut mult = 0u32;
            loop {
                let (q, r) = rest.divmod(field, &pi)?;
                if r.is_zero() {
                    mult += 1;
                    rest = q;
                } else {
                    break;
                }
            }
            if mult > 0 {
                out.push((pi, mult));
            }
            if rest.degree() == Some(0) {
                break;
            }
        }
        d += 1;
    }
    Ok((lead, out))
}

/// Laurent polynomial `t^low * unit_part`, empty unit part means zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent {
    low: i64,
    unit_part: Poly,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent {
            low: 0,
            unit_part: Poly::zero(),
        }
    }

    pub fn from_poly(field: &FiniteField, p: &Poly) -> Self {
        Self::from_parts(field, 0, p.clone())
    }

    /// Normalize `t^low * p` by pulling the t-valuation of `p` into `low`.
    pub fn from_parts(field: &FiniteField, low: i64, p: Poly) -> Self {
        match p.t_valuation(field) {
            None => Laurent::zero(),
            Some(v) => {
                let coeffs = p.coeffs()[v..].to_vec();
                Laurent {
                    low: low + v as i64,
                    unit_part: Poly::from_coeffs(field, coeffs),
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.unit_part.is_zero()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn unit_part(&self) -> &Poly {
        &self.unit_part
    }

    pub fn top(&self) -> Option<i64> {
        self.unit_part.degree().map(|d| self.low + d as i64)
    }

    /// Width of the support; zero for the zero value. Acts as the Euclidean
    /// size function for Laurent division.
    pub fn span(&self) -> u64 {
        self.unit_part.degree().map_or(0, |d| d as u64)
    }

    pub fn add(&self, field: &FiniteField, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let a = self.unit_part.shift(field, (self.low - low) as usize);
        let b = other.unit_part.shift(field, (other.low - low) as usize);
        Laurent::from_parts(field, low, a.add(field, &b))
    }

    pub fn neg(&self, field: &FiniteField) -> Laurent {
        Laurent {
            low: self.low,
            unit_part: self.unit_part.neg(field),
        }
    }

    pub fn sub(&self, field: &FiniteField, other: &Laurent) -> Laurent {
        self.add(field, &other.neg(field))
    }

    pub fn mul(&self, field: &FiniteField, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            low: self.low + other.low,
            unit_part: self.unit_part.mul(field, &other.unit_part),
        }
    }

    pub fn is_unit(&self, _field: &FiniteField) -> bool {
        self.unit_part.degree() == Some(0)
    }

    pub fn inv(&self, field: &FiniteField) -> Result<Laurent, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if !self.is_unit(field) {
            return Err(RingError::NotAUnit);
        }
        let c = field.inv(&self.unit_part.coeffs()[0])?;
        Ok(Laurent {
            low: -self.low,
            unit_part: Poly::constant(field, c),
        })
    }

    /// Euclidean division with size measured by `span`: the remainder always
    /// has strictly smaller span than the divisor, or is zero. Divide the
    /// unit parts as plain polynomials and carry the monomial factor.
    pub fn divmod(&self, field: &FiniteField, divisor: &Laurent) -> Result<(Laurent, Laurent), RingError> {
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok((Laurent::zero(), Laurent::zero()));
        }
        let (q, r) = self.unit_part.divmod(field, &divisor.unit_part)?;
        let qshift = self.low - divisor.low;
        Ok((
            Laurent::from_parts(field, qshift, q),
            Laurent::from_parts(field, self.low, r),
        ))
    }
}

/// Reduced fraction of polynomials; denominator monic and nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(field: &FiniteField, num: Poly, den: Poly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::reduced(field, num, den))
    }

    fn reduced(field: &FiniteField, num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFn {
                num: Poly::zero(),
                den: Poly::one(field),
            };
        }
        let g = num.gcd(field, &den);
        let num = num.divmod(field, &g).unwrap().0;
        let den = den.divmod(field, &g).unwrap().0;
        let lead_inv = field.inv(den.leading().unwrap()).unwrap();
        RatFn {
            num: num.scale(field, &lead_inv),
            den: den.scale(field, &lead_inv),
        }
    }

    pub fn from_poly(field: &FiniteField, p: Poly) -> Self {
        RatFn {
            num: p,
            den: Poly::one(field),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, field: &FiniteField, other: &RatFn) -> RatFn {
        let num = self
            .num
            .mul(field, &other.den)
            .add(field, &other.num.mul(field, &self.den));
        let den = self.den.mul(field, &other.den);
        Self::reduced(field, num, den)
    }

    pub fn neg(&self, field: &FiniteField) -> RatFn {
        RatFn {
            num: self.num.neg(field),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, field: &FiniteField, other: &RatFn) -> RatFn {
        self.add(field, &other.neg(field))
    }

    pub fn mul(&self, field: &FiniteField, other: &RatFn) -> RatFn {
        Self::reduced(
            field,
            self.num.mul(field, &other.num),
            self.den.mul(field, &other.den),
        )
    }

    pub fn inv(&self, field: &FiniteField) -> Result<RatFn, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::reduced(field, self.den.clone(), self.num.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FiniteField {
        FiniteField::prime(5).unwrap()
    }

    fn poly_from_ints(field: &FiniteField, ints: &[i64]) -> Poly {
        Poly::from_coeffs(field, ints.iter().map(|&n| field.from_int(n)).collect())
    }

    #[test]
    fn divmod_reconstructs_dividend() {
        let f = f5();
        let a = poly_from_ints(&f, &[3, 0, 1, 4, 2]);
        let b = poly_from_ints(&f, &[1, 2, 3]);
        let (q, r) = a.divmod(&f, &b).unwrap();
        let back = q.mul(&f, &b).add(&f, &r);
        assert_eq!(back, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_products_contains_common_factor() {
        let f = f5();
        let common = poly_from_ints(&f, &[1, 1]); // t + 1
        let a = common.mul(&f, &poly_from_ints(&f, &[2, 0, 1]));
        let b = common.mul(&f, &poly_from_ints(&f, &[3, 1]));
        let g = a.gcd(&f, &b);
        assert!(a.rem(&f, &g).unwrap().is_zero());
        assert!(b.rem(&f, &g).unwrap().is_zero());
        assert!(g.rem(&f, &common).unwrap().is_zero());
        assert!(g.is_monic(&f));
    }

    #[test]
    fn irreducible_counts_over_extension_field() {
        let f4 = FiniteField::extension(2, 2).unwrap();
        // Over F_q: q irreducibles of degree 1, (q^2-q)/2 of degree 2.
        assert_eq!(monic_irreducibles(&f4, 1).len(), 4);
        assert_eq!(monic_irreducibles(&f4, 2).len(), 6);
    }

    #[test]
    fn factor_recovers_constructed_product() {
        let f = f5();
        let p1 = poly_from_ints(&f, &[1, 1]);
        let p2 = poly_from_ints(&f, &[2, 0, 1]); // t^2 + 2, irreducible mod 5
        let prod = p1.mul(&f, &p1).mul(&f, &p2).scale(&f, &f.from_int(3));
        let (lead, factors) = factor(&f, &prod).unwrap();
        assert_eq!(lead, f.from_int(3));
        assert_eq!(factors, vec![(p1, 2), (p2, 1)]);
    }

    #[test]
    fn laurent_divmod_shrinks_span() {
        let f = f5();
        // a = t^-2 * (1 + t + 3t^4), b = t * (2 + t^2)
        let a = Laurent::from_parts(&f, -2, poly_from_ints(&f, &[1, 1, 0, 0, 3]));
        let b = Laurent::from_parts(&f, 1, poly_from_ints(&f, &[2, 0, 1]));
        let (q, r) = a.divmod(&f, &b).unwrap();
        let back = q.mul(&f, &b).add(&f, &r);
        assert_eq!(back, a);
        assert!(r.is_zero() || r.span() < b.span());
    }

    #[test]
    fn laurent_units_are_monomials() {
        let f = f5();
        let u = Laurent::from_parts(&f, -3, poly_from_ints(&f, &[2]));
        let v = u.inv(&f).unwrap();
        assert_eq!(u.mul(&f, &v), Laurent::from_poly(&f, &Poly::one(&f)));
        let nonunit = Laurent::from_parts(&f, 0, poly_from_ints(&f, &[1, 1]));
        assert!(matches!(nonunit.inv(&f), Err(RingError::NotAUnit)));
    }

    #[test]
    fn ratfn_reduces_and_keeps_monic_denominator() {
        let f = f5();
        let num = poly_from_ints(&f, &[1, 1]).mul(&f, &poly_from_ints(&f, &[0, 2]));
        let den = poly_from_ints(&f, &[1, 1]).mul(&f, &poly_from_ints(&f, &[3]));
        let r = RatFn::new(&f, num, den).unwrap();
        // (t+1)*2t / 3(t+1) = 2t/3 = 4t (den normalized to 1).
        assert_eq!(r.num(), &poly_from_ints(&f, &[0, 4]));
        assert!(r.den().is_one(&f));
        let s = r.mul(&f, &r.inv(&f).unwrap());
        assert_eq!(s.num(), &Poly::one(&f));
    }
}
