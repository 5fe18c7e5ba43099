//! Coefficient rings for the group machinery: the integers, finite fields,
//! polynomial and Laurent polynomial rings over finite fields, and rational
//! function fields.
//!
//! A [`RingElement`] pairs a payload with the [`RingDescriptor`] it lives
//! in; every binary operation checks that the descriptors agree and fails
//! with [`RingError::MixedRings`] otherwise. All arithmetic is exact.

pub mod ff;
pub mod grammar;
pub mod json;
pub mod place;
pub mod poly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use ff::{FfElem, FiniteField};
pub use poly::{Laurent, Poly, RatFn};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("elements of {0} and {1} cannot be combined")]
    MixedRings(String, String),
    #[error("{0} is not Euclidean")]
    NonEuclidean(String),
    #[error("operation not supported over {0}")]
    UnsupportedRing(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid field modulus: {0}")]
    BadModulus(String),
    #[error("invalid coefficients: {0}")]
    BadCoefficients(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("residue undefined: element has valuation {0} at the place")]
    ResidueUndefined(i64),
    #[error("valuation of zero is undefined")]
    ValuationOfZero,
    #[error("place degree {degree} exceeds the enumeration cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("cannot enumerate elements of the infinite ring {0}")]
    NotFinite(String),
    #[error("no embedding of {0} into {1}")]
    NoEmbedding(String, String),
}

/// Description of a finite coefficient field: characteristic plus an
/// optional modulus (absent for prime fields, stored with constant term
/// first otherwise). Construction validates once; arithmetic contexts are
/// rebuilt cheaply afterwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldDesc {
    p: u64,
    modulus: Option<Vec<u64>>,
}

impl FieldDesc {
    pub fn prime(p: u64) -> Result<Self, RingError> {
        FiniteField::prime(p)?;
        Ok(FieldDesc { p, modulus: None })
    }

    /// Field of order `q = p^k`, with the canonical modulus when `k > 1`.
    pub fn of_order(q: u64) -> Result<Self, RingError> {
        let (p, k) = split_prime_power(q).ok_or(RingError::NotPrimePower(q))?;
        if k == 1 {
            Self::prime(p)
        } else {
            let f = FiniteField::extension(p, k as usize)?;
            Ok(FieldDesc {
                p,
                modulus: Some(f.modulus().to_vec()),
            })
        }
    }

    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self, RingError> {
        let f = FiniteField::with_modulus(p, modulus)?;
        Ok(FieldDesc {
            p,
            modulus: Some(f.modulus().to_vec()),
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.as_ref().map_or(1, |m| m.len() - 1)
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.degree() as u32)
    }

    pub fn field(&self) -> FiniteField {
        FiniteField::unchecked(self.p, self.modulus.as_deref().unwrap_or(&[]))
    }
}

fn split_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut n = q;
            let mut k = 0u32;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            return if n == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    /// The rational integers.
    Integers,
    /// A finite field.
    Field(FieldDesc),
    /// Polynomials over a finite field.
    PolyRing(FieldDesc),
    /// Laurent polynomials over a finite field.
    LaurentRing(FieldDesc),
    /// The rational function field over a finite field.
    RationalFn(FieldDesc),
}

impl std::fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn base(fd: &FieldDesc) -> String {
            match &fd.modulus {
                None => format!("F{}", fd.p),
                Some(m) => format!(
                    "F{}[{}]",
                    fd.order(),
                    grammar::fp_poly_to_string(m, "x")
                ),
            }
        }
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::Field(fd) => write!(f, "{}", base(fd)),
            RingDescriptor::PolyRing(fd) => write!(f, "{}[t]", base(fd)),
            RingDescriptor::LaurentRing(fd) => write!(f, "{}[t,t^-1]", base(fd)),
            RingDescriptor::RationalFn(fd) => write!(f, "{}(t)", base(fd)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Payload {
    Int(BigInt),
    Ff(FfElem),
    Poly(Poly),
    Laurent(Laurent),
    RatFn(RatFn),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: RingDescriptor,
    payload: Payload,
}

impl RingDescriptor {
    pub fn coefficient_field(&self) -> Option<FieldDesc> {
        match self {
            RingDescriptor::Integers => None,
            RingDescriptor::Field(fd)
            | RingDescriptor::PolyRing(fd)
            | RingDescriptor::LaurentRing(fd)
            | RingDescriptor::RationalFn(fd) => Some(fd.clone()),
        }
    }

    /// 0 for the integers, p otherwise.
    pub fn characteristic(&self) -> u64 {
        self.coefficient_field().map_or(0, |fd| fd.characteristic())
    }

    pub fn is_field(&self) -> bool {
        matches!(
            self,
            RingDescriptor::Field(_) | RingDescriptor::RationalFn(_)
        )
    }

    pub fn zero(&self) -> RingElement {
        self.from_int(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> RingElement {
        let payload = match self {
            RingDescriptor::Integers => Payload::Int(BigInt::from(n)),
            RingDescriptor::Field(fd) => Payload::Ff(fd.field().from_int(n)),
            RingDescriptor::PolyRing(fd) => {
                let f = fd.field();
                Payload::Poly(Poly::constant(&f, f.from_int(n)))
            }
            RingDescriptor::LaurentRing(fd) => {
                let f = fd.field();
                Payload::Laurent(Laurent::from_poly(&f, &Poly::constant(&f, f.from_int(n))))
            }
            RingDescriptor::RationalFn(fd) => {
                let f = fd.field();
                Payload::RatFn(RatFn::from_poly(&f, Poly::constant(&f, f.from_int(n))))
            }
        };
        RingElement {
            ring: self.clone(),
            payload,
        }
    }

    pub(crate) fn element_from_payload(&self, payload: Payload) -> RingElement {
        RingElement {
            ring: self.clone(),
            payload,
        }
    }

    /// The variable t, for the three rings that have one.
    pub fn var(&self) -> Result<RingElement, RingError> {
        let payload = match self {
            RingDescriptor::PolyRing(fd) => {
                let f = fd.field();
                Payload::Poly(Poly::monomial(&f, f.one(), 1))
            }
            RingDescriptor::LaurentRing(fd) => {
                let f = fd.field();
                Payload::Laurent(Laurent::from_poly(&f, &Poly::monomial(&f, f.one(), 1)))
            }
            RingDescriptor::RationalFn(fd) => {
                let f = fd.field();
                Payload::RatFn(RatFn::from_poly(&f, Poly::monomial(&f, f.one(), 1)))
            }
            _ => return Err(RingError::UnsupportedRing(self.to_string())),
        };
        Ok(RingElement {
            ring: self.clone(),
            payload,
        })
    }

    /// All elements, for finite rings only.
    pub fn elements(&self) -> Result<Vec<RingElement>, RingError> {
        match self {
            RingDescriptor::Field(fd) => {
                let f = fd.field();
                Ok(f.elements()
                    .map(|e| self.element_from_payload(Payload::Ff(e)))
                    .collect())
            }
            _ => Err(RingError::NotFinite(self.to_string())),
        }
    }

    /// The unit group, where it admits a finite description.
    pub fn units(&self) -> Result<UnitGroup, RingError> {
        match self {
            RingDescriptor::Integers => Ok(UnitGroup::Finite {
                elements: vec![self.one(), self.from_int(-1)],
            }),
            RingDescriptor::Field(fd) => {
                let f = fd.field();
                Ok(UnitGroup::Finite {
                    elements: f
                        .elements()
                        .skip(1)
                        .map(|e| self.element_from_payload(Payload::Ff(e)))
                        .collect(),
                })
            }
            RingDescriptor::PolyRing(fd) => {
                let f = fd.field();
                Ok(UnitGroup::Finite {
                    elements: f
                        .elements()
                        .skip(1)
                        .map(|e| {
                            self.element_from_payload(Payload::Poly(Poly::constant(&f, e)))
                        })
                        .collect(),
                })
            }
            RingDescriptor::LaurentRing(fd) => {
                let f = fd.field();
                let torsion = f
                    .elements()
                    .skip(1)
                    .map(|e| {
                        self.element_from_payload(Payload::Laurent(Laurent::from_poly(
                            &f,
                            &Poly::constant(&f, e),
                        )))
                    })
                    .collect();
                Ok(UnitGroup::LaurentUnits {
                    torsion,
                    free_generator: self.var()?,
                })
            }
            RingDescriptor::RationalFn(_) => Err(RingError::UnsupportedRing(self.to_string())),
        }
    }
}

/// Unit group of a module ring: either a finite list or the Laurent shape
/// (finite torsion times the infinite cyclic group on t).
#[derive(Clone, Debug)]
pub enum UnitGroup {
    Finite { elements: Vec<RingElement> },
    LaurentUnits {
        torsion: Vec<RingElement>,
        free_generator: RingElement,
    },
}

impl UnitGroup {
    pub fn is_infinite(&self) -> bool {
        matches!(self, UnitGroup::LaurentUnits { .. })
    }

    pub fn torsion(&self) -> &[RingElement] {
        match self {
            UnitGroup::Finite { elements } => elements,
            UnitGroup::LaurentUnits { torsion, .. } => torsion,
        }
    }
}

macro_rules! same_ring {
    ($a:expr, $b:expr) => {
        if $a.ring != $b.ring {
            return Err(RingError::MixedRings(
                $a.ring.to_string(),
                $b.ring.to_string(),
            ));
        }
    };
}

impl RingElement {
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn is_zero(&self) -> bool {
        match &self.payload {
            Payload::Int(n) => n.is_zero(),
            Payload::Ff(e) => e.iter().all(|&c| c == 0),
            Payload::Poly(p) => p.is_zero(),
            Payload::Laurent(l) => l.is_zero(),
            Payload::RatFn(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    pub fn is_unit(&self) -> bool {
        match &self.payload {
            Payload::Int(n) => n.abs().is_one(),
            Payload::Ff(_) => !self.is_zero(),
            Payload::Poly(p) => p.degree() == Some(0),
            Payload::Laurent(l) => !l.is_zero() && l.span() == 0,
            Payload::RatFn(r) => !r.is_zero(),
        }
    }

    fn field(&self) -> FiniteField {
        self.ring
            .coefficient_field()
            .expect("payload carries field coefficients")
            .field()
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        same_ring!(self, other);
        let payload = match (&self.payload, &other.payload) {
            (Payload::Int(a), Payload::Int(b)) => Payload::Int(a + b),
            (Payload::Ff(a), Payload::Ff(b)) => Payload::Ff(self.field().add(a, b)),
            (Payload::Poly(a), Payload::Poly(b)) => Payload::Poly(a.add(&self.field(), b)),
            (Payload::Laurent(a), Payload::Laurent(b)) => {
                Payload::Laurent(a.add(&self.field(), b))
            }
            (Payload::RatFn(a), Payload::RatFn(b)) => Payload::RatFn(a.add(&self.field(), b)),
            _ => unreachable!("payload matches descriptor"),
        };
        Ok(RingElement {
            ring: self.ring.clone(),
            payload,
        })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RingElement {
        let payload = match &self.payload {
            Payload::Int(n) => Payload::Int(-n),
            Payload::Ff(e) => Payload::Ff(self.field().neg(e)),
            Payload::Poly(p) => Payload::Poly(p.neg(&self.field())),
            Payload::Laurent(l) => Payload::Laurent(l.neg(&self.field())),
            Payload::RatFn(r) => Payload::RatFn(r.neg(&self.field())),
        };
        RingElement {
            ring: self.ring.clone(),
            payload,
        }
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement, RingError> {
        same_ring!(self, other);
        let payload = match (&self.payload, &other.payload) {
            (Payload::Int(a), Payload::Int(b)) => Payload::Int(a * b),
            (Payload::Ff(a), Payload::Ff(b)) => Payload::Ff(self.field().mul(a, b)),
            (Payload::Poly(a), Payload::Poly(b)) => Payload::Poly(a.mul(&self.field(), b)),
            (Payload::Laurent(a), Payload::Laurent(b)) => {
                Payload::Laurent(a.mul(&self.field(), b))
            }
            (Payload::RatFn(a), Payload::RatFn(b)) => Payload::RatFn(a.mul(&self.field(), b)),
            _ => unreachable!("payload matches descriptor"),
        };
        Ok(RingElement {
            ring: self.ring.clone(),
            payload,
        })
    }

    pub fn inv(&self) -> Result<RingElement, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let payload = match &self.payload {
            Payload::Int(n) => {
                if n.abs().is_one() {
                    Payload::Int(n.clone())
                } else {
                    return Err(RingError::NotAUnit);
                }
            }
            Payload::Ff(e) => Payload::Ff(self.field().inv(e)?),
            Payload::Poly(p) => {
                if p.degree() != Some(0) {
                    return Err(RingError::NotAUnit);
                }
                let f = self.field();
                let c = f.inv(&p.coeffs()[0])?;
                Payload::Poly(Poly::constant(&f, c))
            }
            Payload::Laurent(l) => Payload::Laurent(l.inv(&self.field())?),
            Payload::RatFn(r) => Payload::RatFn(r.inv(&self.field())?),
        };
        Ok(RingElement {
            ring: self.ring.clone(),
            payload,
        })
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, n: i64) -> Result<RingElement, RingError> {
        let (base, mut e) = if n < 0 {
            (self.inv()?, n.unsigned_abs())
        } else {
            (self.clone(), n as u64)
        };
        let mut acc = self.ring.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            sq = sq.mul(&sq)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Euclidean division. For the integers the remainder is centered
    /// (|r| <= |b|/2); for Laurent polynomials the size function is the
    /// support span. The rational function field is rejected: its Euclidean
    /// structure is trivial and signals an upstream mistake.
    pub fn euclid_divmod(
        &self,
        divisor: &RingElement,
    ) -> Result<(RingElement, RingElement), RingError> {
        same_ring!(self, divisor);
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let wrap = |p: Payload| RingElement {
            ring: self.ring.clone(),
            payload: p,
        };
        match (&self.payload, &divisor.payload) {
            (Payload::Int(a), Payload::Int(b)) => {
                let (mut q, mut r) = a.div_rem(b);
                // Center the remainder.
                if &r.abs() * 2 > b.abs() {
                    let s = if r.sign() == b.sign() {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    };
                    r -= &s * b;
                    q += s;
                }
                Ok((wrap(Payload::Int(q)), wrap(Payload::Int(r))))
            }
            (Payload::Ff(_), Payload::Ff(_)) => {
                Ok((self.mul(&divisor.inv()?)?, self.ring.zero()))
            }
            (Payload::Poly(a), Payload::Poly(b)) => {
                let f = self.field();
                let (q, r) = a.divmod(&f, b)?;
                Ok((wrap(Payload::Poly(q)), wrap(Payload::Poly(r))))
            }
            (Payload::Laurent(a), Payload::Laurent(b)) => {
                let f = self.field();
                let (q, r) = a.divmod(&f, b)?;
                Ok((wrap(Payload::Laurent(q)), wrap(Payload::Laurent(r))))
            }
            (Payload::RatFn(_), Payload::RatFn(_)) => {
                Err(RingError::NonEuclidean(self.ring.to_string()))
            }
            _ => unreachable!("payload matches descriptor"),
        }
    }

    /// Euclidean size: None for zero, otherwise the value the division
    /// algorithm strictly decreases.
    pub fn euclid_size(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        match &self.payload {
            Payload::Int(n) => Some(
                u64::try_from(n.abs()).unwrap_or(u64::MAX),
            ),
            Payload::Ff(_) => Some(0),
            Payload::Poly(p) => Some(p.degree().unwrap() as u64),
            Payload::Laurent(l) => Some(l.span()),
            Payload::RatFn(_) => None,
        }
    }

    /// Embed along the natural inclusions
    /// F_q -> F_q[t] -> F_q[t,t^-1] -> F_q(t), and Z -> Z.
    pub fn embed_into(&self, target: &RingDescriptor) -> Result<RingElement, RingError> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let err = || RingError::NoEmbedding(self.ring.to_string(), target.to_string());
        let sf = self.ring.coefficient_field().ok_or_else(err)?;
        let tf = target.coefficient_field().ok_or_else(err)?;
        if sf != tf {
            return Err(err());
        }
        let f = sf.field();
        let as_ratfn: RatFn = match &self.payload {
            Payload::Ff(e) => RatFn::from_poly(&f, Poly::constant(&f, e.clone())),
            Payload::Poly(p) => RatFn::from_poly(&f, p.clone()),
            Payload::Laurent(l) => {
                let num = l.unit_part().shift(&f, l.low().max(0) as usize);
                let den = Poly::monomial(&f, f.one(), (-l.low()).max(0) as usize);
                RatFn::new(&f, num, den)?
            }
            _ => return Err(err()),
        };
        let payload = match target {
            RingDescriptor::Field(_) => {
                if as_ratfn.den().is_one(&f) && as_ratfn.num().degree().is_none_or(|d| d == 0) {
                    Payload::Ff(as_ratfn.num().coeff(&f, 0))
                } else {
                    return Err(err());
                }
            }
            RingDescriptor::PolyRing(_) => {
                if as_ratfn.den().is_one(&f) {
                    Payload::Poly(as_ratfn.num().clone())
                } else {
                    return Err(err());
                }
            }
            RingDescriptor::LaurentRing(_) => {
                // Denominator must be a monomial t^k.
                let den = as_ratfn.den();
                let v = den.t_valuation(&f).unwrap();
                if den.degree() != Some(v) {
                    return Err(err());
                }
                let unit = Laurent::from_parts(&f, -(v as i64), as_ratfn.num().clone());
                Payload::Laurent(unit)
            }
            RingDescriptor::RationalFn(_) => Payload::RatFn(as_ratfn),
            _ => return Err(err()),
        };
        Ok(RingElement {
            ring: target.clone(),
            payload,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_rings_are_rejected() {
        let z = RingDescriptor::Integers;
        let f5 = RingDescriptor::Field(FieldDesc::prime(5).unwrap());
        let e = z.one().add(&f5.one());
        assert!(matches!(e, Err(RingError::MixedRings(_, _))));
    }

    #[test]
    fn descriptor_display_round_trip_examples() {
        let f9 = RingDescriptor::Field(FieldDesc::of_order(9).unwrap());
        assert_eq!(f9.to_string(), "F9[x^2+1]");
        let f5t = RingDescriptor::PolyRing(FieldDesc::prime(5).unwrap());
        assert_eq!(f5t.to_string(), "F5[t]");
        let f5l = RingDescriptor::LaurentRing(FieldDesc::prime(5).unwrap());
        assert_eq!(f5l.to_string(), "F5[t,t^-1]");
        let f5r = RingDescriptor::RationalFn(FieldDesc::prime(5).unwrap());
        assert_eq!(f5r.to_string(), "F5(t)");
        assert_eq!(RingDescriptor::Integers.to_string(), "Z");
    }

    #[test]
    fn centered_integer_division() {
        let z = RingDescriptor::Integers;
        for a in -20i64..=20 {
            for b in [-7i64, -4, 3, 5, 6] {
                let (q, r) = z.from_int(a).euclid_divmod(&z.from_int(b)).unwrap();
                let back = q.mul(&z.from_int(b)).unwrap().add(&r).unwrap();
                assert_eq!(back, z.from_int(a));
                if let Payload::Int(rv) = r.payload() {
                    assert!(rv.abs() * 2 <= BigInt::from(b).abs());
                } else {
                    unreachable!();
                }
            }
        }
    }

    #[test]
    fn unit_groups_have_expected_shapes() {
        let z = RingDescriptor::Integers;
        assert_eq!(z.units().unwrap().torsion().len(), 2);

        let f7 = RingDescriptor::Field(FieldDesc::prime(7).unwrap());
        let u = f7.units().unwrap();
        assert!(!u.is_infinite());
        assert_eq!(u.torsion().len(), 6);

        let f3t = RingDescriptor::PolyRing(FieldDesc::prime(3).unwrap());
        assert_eq!(f3t.units().unwrap().torsion().len(), 2);

        let f3l = RingDescriptor::LaurentRing(FieldDesc::prime(3).unwrap());
        let ul = f3l.units().unwrap();
        assert!(ul.is_infinite());
        assert_eq!(ul.torsion().len(), 2);
        if let UnitGroup::LaurentUnits { free_generator, .. } = &ul {
            assert_eq!(*free_generator, f3l.var().unwrap());
        }

        let f3r = RingDescriptor::RationalFn(FieldDesc::prime(3).unwrap());
        assert!(f3r.units().is_err());
    }

    #[test]
    fn laurent_divmod_through_element_layer() {
        let ring = RingDescriptor::LaurentRing(FieldDesc::prime(5).unwrap());
        let t = ring.var().unwrap();
        // a = t^-1 + 2 + t^3, b = t + 3
        let a = t
            .pow(-1)
            .unwrap()
            .add(&ring.from_int(2))
            .unwrap()
            .add(&t.pow(3).unwrap())
            .unwrap();
        let b = t.add(&ring.from_int(3)).unwrap();
        let (q, r) = a.euclid_divmod(&b).unwrap();
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        assert!(r.is_zero() || r.euclid_size() < b.euclid_size());
    }

    #[test]
    fn rational_function_field_rejects_divmod_but_inverts() {
        let ring = RingDescriptor::RationalFn(FieldDesc::prime(3).unwrap());
        let t = ring.var().unwrap();
        let x = t.add(&ring.one()).unwrap();
        assert!(matches!(
            x.euclid_divmod(&t),
            Err(RingError::NonEuclidean(_))
        ));
        let y = x.inv().unwrap();
        assert!(x.mul(&y).unwrap().is_one());
    }

    #[test]
    fn embeddings_compose_up_the_tower() {
        let fd = FieldDesc::prime(3).unwrap();
        let fq = RingDescriptor::Field(fd.clone());
        let pr = RingDescriptor::PolyRing(fd.clone());
        let lr = RingDescriptor::LaurentRing(fd.clone());
        let rr = RingDescriptor::RationalFn(fd);
        let two = fq.from_int(2);
        let in_poly = two.embed_into(&pr).unwrap();
        assert_eq!(in_poly, pr.from_int(2));
        let t = lr.var().unwrap();
        let lau = t.pow(-2).unwrap().add(&lr.one()).unwrap();
        let rat = lau.embed_into(&rr).unwrap();
        // (1 + t^2)/t^2 in lowest terms.
        let expect = rr
            .one()
            .add(&rr.var().unwrap().pow(2).unwrap())
            .unwrap()
            .mul(&rr.var().unwrap().pow(-2).unwrap())
            .unwrap();
        assert_eq!(rat, expect);
        // Constants come back down.
        let down = lr.from_int(2).embed_into(&fq).unwrap();
        assert_eq!(down, fq.from_int(2));
        assert!(t.embed_into(&fq).is_err());
        assert!(lau.embed_into(&pr).is_err());
    }

    #[test]
    fn pow_handles_negative_exponents_on_units() {
        let f9 = RingDescriptor::Field(FieldDesc::of_order(9).unwrap());
        for e in f9.elements().unwrap() {
            if e.is_zero() {
                assert!(e.pow(-1).is_err());
                continue;
            }
            let p = e.pow(-2).unwrap();
            assert!(p.mul(&e.pow(2).unwrap()).unwrap().is_one());
        }
    }
}
