//! Places of the rational function field F_q(t), valuations, and residue
//! fields.
//!
//! Finite places are monic irreducible polynomials; the place at infinity
//! has uniformizer 1/t. Residues of valuation-zero elements live in
//! F_q[t]/(pi), represented concretely by reduced polynomials so that two
//! residues compare by value, not through any choice of abstract field
//! isomorphism.

use super::ff::{FfElem, FiniteField};
use super::poly::{monic_irreducibles, Poly, RatFn};
use super::{FieldDesc, Payload, RingDescriptor, RingElement, RingError};

/// Hard cap on place-enumeration degree; keeps accidental blowups loud.
pub const PLACE_DEGREE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

/// Self-contained ordering key: finite places sort by degree then by the
/// canonical enumeration index of their coefficients; infinity sorts last.
pub type PlaceKey = (u8, usize, Vec<u64>);

impl Place {
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(pi) => pi.degree().expect("irreducible is nonzero"),
            Place::Infinity => 1,
        }
    }

    pub fn key(&self, field: &FiniteField) -> PlaceKey {
        match self {
            Place::Finite(pi) => {
                let idx: Vec<u64> = pi.coeffs().iter().rev().map(|c| field.to_index(c)).collect();
                (0, self.degree(), idx)
            }
            Place::Infinity => (1, 1, Vec::new()),
        }
    }

    pub fn label(&self, field: &FiniteField) -> String {
        match self {
            Place::Finite(pi) => super::grammar::poly_to_string(field, pi, "t"),
            Place::Infinity => "infinity".to_string(),
        }
    }
}

/// Monic irreducibles of exact degree `d`, as places, in canonical order.
pub fn finite_places_of_degree(field: &FiniteField, d: usize) -> Result<Vec<Place>, RingError> {
    if d == 0 || d > PLACE_DEGREE_CAP {
        return Err(RingError::DegreeCapExceeded {
            degree: d,
            cap: PLACE_DEGREE_CAP,
        });
    }
    Ok(monic_irreducibles(field, d).into_iter().map(Place::Finite).collect())
}

/// All finite places of degree at most `d`, canonical order.
pub fn finite_places_up_to(field: &FiniteField, d: usize) -> Result<Vec<Place>, RingError> {
    let mut out = Vec::new();
    for k in 1..=d {
        out.extend(finite_places_of_degree(field, k)?);
    }
    Ok(out)
}

fn poly_valuation(field: &FiniteField, f: &Poly, pi: &Poly) -> i64 {
    let mut v = 0i64;
    let mut rest = f.clone();
    loop {
        let (q, r) = rest.divmod(field, pi).expect("irreducible is nonzero");
        if r.is_zero() {
            v += 1;
            rest = q;
        } else {
            return v;
        }
    }
}

/// Valuation of a nonzero rational function at a place.
pub fn valuation(field: &FiniteField, x: &RatFn, place: &Place) -> Result<i64, RingError> {
    if x.is_zero() {
        return Err(RingError::ValuationOfZero);
    }
    Ok(match place {
        Place::Finite(pi) => {
            poly_valuation(field, x.num(), pi) - poly_valuation(field, x.den(), pi)
        }
        Place::Infinity => {
            x.den().degree().unwrap() as i64 - x.num().degree().unwrap() as i64
        }
    })
}

/// Element of the residue field at a place: a polynomial reduced mod the
/// place (a constant for the infinite place).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueElem {
    base: FieldDesc,
    modulus: Option<Poly>,
    value: Poly,
}

impl ResidueElem {
    pub fn new(base: &FieldDesc, place: &Place, value: Poly) -> Self {
        let field = base.field();
        let (modulus, value) = match place {
            Place::Finite(pi) => (Some(pi.clone()), value.rem(&field, pi).unwrap()),
            Place::Infinity => {
                assert!(
                    value.degree().is_none_or(|d| d == 0),
                    "infinite-place residues are constants"
                );
                (None, value)
            }
        };
        ResidueElem {
            base: base.clone(),
            modulus,
            value,
        }
    }

    pub fn one(base: &FieldDesc, place: &Place) -> Self {
        let field = base.field();
        Self::new(base, place, Poly::one(&field))
    }

    pub fn place(&self) -> Place {
        match &self.modulus {
            Some(pi) => Place::Finite(pi.clone()),
            None => Place::Infinity,
        }
    }

    pub fn value(&self) -> &Poly {
        &self.value
    }

    pub fn base(&self) -> &FieldDesc {
        &self.base
    }

    pub fn residue_degree(&self) -> usize {
        self.place().degree()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one(&self.base.field())
    }

    fn assert_compatible(&self, other: &ResidueElem) {
        assert_eq!(self.base, other.base, "residues over different base fields");
        assert_eq!(self.modulus, other.modulus, "residues at different places");
    }

    pub fn mul(&self, other: &ResidueElem) -> ResidueElem {
        self.assert_compatible(other);
        let field = self.base.field();
        let prod = self.value.mul(&field, &other.value);
        let value = match &self.modulus {
            Some(pi) => prod.rem(&field, pi).unwrap(),
            None => prod,
        };
        ResidueElem {
            base: self.base.clone(),
            modulus: self.modulus.clone(),
            value,
        }
    }

    pub fn inv(&self) -> Result<ResidueElem, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let field = self.base.field();
        let value = match &self.modulus {
            None => Poly::constant(&field, field.inv(&self.value.coeff(&field, 0))?),
            Some(pi) => {
                // Extended Euclid against the irreducible modulus.
                let (mut r0, mut r1) = (pi.clone(), self.value.clone());
                let (mut t0, mut t1) = (Poly::zero(), Poly::one(&field));
                while !r1.is_zero() {
                    let (q, r) = r0.divmod(&field, &r1)?;
                    let t2 = t0.sub(&field, &q.mul(&field, &t1));
                    r0 = r1;
                    r1 = r;
                    t0 = t1;
                    t1 = t2;
                }
                assert_eq!(r0.degree(), Some(0), "gcd with irreducible is constant");
                let scale = field.inv(&r0.coeff(&field, 0))?;
                t0.scale(&field, &scale).rem(&field, pi)?
            }
        };
        Ok(ResidueElem {
            base: self.base.clone(),
            modulus: self.modulus.clone(),
            value,
        })
    }

    pub fn pow(&self, mut e: u64) -> ResidueElem {
        let field = self.base.field();
        let mut acc = ResidueElem {
            base: self.base.clone(),
            modulus: self.modulus.clone(),
            value: Poly::one(&field),
        };
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// Norm down to the base field: the product of the Galois conjugates,
    /// computed as the power x^((Q-1)/(q-1)) for nonzero x, with Q the
    /// residue field order.
    pub fn norm_to_base(&self) -> FfElem {
        let field = self.base.field();
        if self.is_zero() {
            return field.zero();
        }
        let q = field.order();
        let d = self.residue_degree() as u32;
        let qq = q.checked_pow(d).expect("residue field order fits u64");
        let n = self.pow((qq - 1) / (q - 1));
        assert!(
            n.value.degree() == Some(0),
            "norm lands in the base field"
        );
        n.value.coeff(&field, 0)
    }

    /// Every element of the residue field, canonical order.
    pub fn all_at(base: &FieldDesc, place: &Place) -> Vec<ResidueElem> {
        let field = base.field();
        let d = place.degree();
        let q = field.order();
        let count = q.pow(d as u32);
        (0..count)
            .map(|mut n| {
                let mut coeffs = Vec::with_capacity(d);
                for _ in 0..d {
                    coeffs.push(field.from_index(n % q));
                    n /= q;
                }
                ResidueElem::new(base, place, Poly::from_coeffs(&field, coeffs))
            })
            .collect()
    }
}

/// Residue of a valuation-zero element at a place.
pub fn residue(base: &FieldDesc, x: &RatFn, place: &Place) -> Result<ResidueElem, RingError> {
    let field = base.field();
    let v = valuation(&field, x, place)?;
    if v != 0 {
        return Err(RingError::ResidueUndefined(v));
    }
    match place {
        Place::Finite(pi) => {
            let num = ResidueElem::new(base, place, x.num().rem(&field, pi)?);
            let den = ResidueElem::new(base, place, x.den().rem(&field, pi)?);
            Ok(num.mul(&den.inv()?))
        }
        Place::Infinity => {
            let ln = x.num().leading().unwrap().clone();
            let ld = x.den().leading().unwrap().clone();
            let c = field.mul(&ln, &field.inv(&ld)?);
            Ok(ResidueElem::new(base, place, Poly::constant(&field, c)))
        }
    }
}

/// Valuation of a ring element (polynomial, Laurent, or rational function
/// over the matching base field) at a place.
pub fn element_valuation(x: &RingElement, place: &Place) -> Result<i64, RingError> {
    let fd = x
        .ring()
        .coefficient_field()
        .ok_or_else(|| RingError::UnsupportedRing(x.ring().to_string()))?;
    let target = RingDescriptor::RationalFn(fd.clone());
    let as_rat = x.embed_into(&target)?;
    match as_rat.payload() {
        Payload::RatFn(r) => valuation(&fd.field(), r, place),
        _ => unreachable!("rational-function payload"),
    }
}

/// Residue of a ring element at a place, through the same embedding.
pub fn element_residue(x: &RingElement, place: &Place) -> Result<ResidueElem, RingError> {
    let fd = x
        .ring()
        .coefficient_field()
        .ok_or_else(|| RingError::UnsupportedRing(x.ring().to_string()))?;
    let target = RingDescriptor::RationalFn(fd.clone());
    let as_rat = x.embed_into(&target)?;
    match as_rat.payload() {
        Payload::RatFn(r) => residue(&fd, r, place),
        _ => unreachable!("rational-function payload"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::grammar::{parse_descriptor, parse_element};

    fn f5_setup() -> (FieldDesc, FiniteField, RingDescriptor) {
        let fd = FieldDesc::prime(5).unwrap();
        let f = fd.field();
        let ring = parse_descriptor("F5(t)").unwrap();
        (fd, f, ring)
    }

    fn ratfn_of(ring: &RingDescriptor, s: &str) -> RatFn {
        match parse_element(ring, s).unwrap().payload() {
            Payload::RatFn(r) => r.clone(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn valuations_add_on_products() {
        let (_, f, ring) = f5_setup();
        let t_place = Place::Finite(Poly::monomial(&f, f.one(), 1));
        let x = ratfn_of(&ring, "t^2(t+1)");
        let y = ratfn_of(&ring, "(t+2)/t^3");
        assert_eq!(valuation(&f, &x, &t_place).unwrap(), 2);
        assert_eq!(valuation(&f, &y, &t_place).unwrap(), -3);
        let xy = x.mul(&f, &y);
        assert_eq!(valuation(&f, &xy, &t_place).unwrap(), -1);
        assert_eq!(valuation(&f, &x, &Place::Infinity).unwrap(), -3);
        assert_eq!(valuation(&f, &y, &Place::Infinity).unwrap(), 2);
    }

    #[test]
    fn degree_sum_formula_holds_for_samples() {
        // Sum over all places of deg(v) * v(f) vanishes for f != 0.
        let (_, f, ring) = f5_setup();
        for s in ["t^3+2t+1", "(t^2+2)/(t^3+t+1)", "2t^-0+t^5"] {
            let x = ratfn_of(&ring, s);
            let mut total = valuation(&f, &x, &Place::Infinity).unwrap();
            for d in 1..=6 {
                for pl in finite_places_of_degree(&f, d).unwrap() {
                    total += pl.degree() as i64 * valuation(&f, &x, &pl).unwrap();
                }
            }
            assert_eq!(total, 0, "degree formula for {s}");
        }
    }

    #[test]
    fn residues_multiply() {
        let fd = FieldDesc::prime(3).unwrap();
        let f = fd.field();
        let ring = parse_descriptor("F3(t)").unwrap();
        // pi = t^2+1 is irreducible over F_3; residue field F_9.
        let pi = Poly::from_coeffs(&f, vec![f.one(), f.zero(), f.one()]);
        let place = Place::Finite(pi);
        let x = ratfn_of(&ring, "t+1");
        let y = ratfn_of(&ring, "(t+2)/(t+1)");
        let rx = residue(&fd, &x, &place).unwrap();
        let ry = residue(&fd, &y, &place).unwrap();
        let rxy = residue(&fd, &x.mul(&f, &y), &place).unwrap();
        assert_eq!(rx.mul(&ry), rxy);
        let inv = rx.inv().unwrap();
        assert!(rx.mul(&inv).is_one());
    }

    #[test]
    fn residue_rejects_nonzero_valuation() {
        let (fd, f, ring) = f5_setup();
        let t_place = Place::Finite(Poly::monomial(&f, f.one(), 1));
        let x = ratfn_of(&ring, "t+1");
        assert!(residue(&fd, &x, &t_place).is_ok());
        let y = ratfn_of(&ring, "t^2");
        assert!(matches!(
            residue(&fd, &y, &t_place),
            Err(RingError::ResidueUndefined(2))
        ));
    }

    #[test]
    fn norm_is_multiplicative_and_surjective_on_units() {
        let fd = FieldDesc::prime(3).unwrap();
        let f = fd.field();
        let pi = Poly::from_coeffs(&f, vec![f.one(), f.zero(), f.one()]);
        let place = Place::Finite(pi);
        let all = ResidueElem::all_at(&fd, &place);
        assert_eq!(all.len(), 9);
        let mut norms = std::collections::HashSet::new();
        for a in &all {
            if a.is_zero() {
                continue;
            }
            norms.insert(f.to_index(&a.norm_to_base()));
            for b in &all {
                if b.is_zero() {
                    continue;
                }
                let lhs = a.mul(b).norm_to_base();
                let rhs = f.mul(&a.norm_to_base(), &b.norm_to_base());
                assert_eq!(lhs, rhs);
            }
        }
        // Norm hits every nonzero base element.
        assert_eq!(norms.len(), 2);
        assert!(!norms.contains(&0));
    }

    #[test]
    fn infinite_place_residue_is_leading_ratio() {
        let (fd, f, ring) = f5_setup();
        let x = ratfn_of(&ring, "(3t^2+1)/(2t^2+t)");
        let r = residue(&fd, &x, &Place::Infinity).unwrap();
        // 3/2 = 3 * 3 = 4 mod 5.
        assert_eq!(r.value().coeff(&f, 0), f.from_int(4));
    }

    #[test]
    fn place_ordering_matches_enumeration() {
        let f = FieldDesc::prime(2).unwrap().field();
        let places = finite_places_up_to(&f, 3).unwrap();
        let mut keys: Vec<_> = places.iter().map(|p| p.key(&f)).collect();
        let sorted = {
            let mut k = keys.clone();
            k.sort();
            k
        };
        assert_eq!(keys, sorted);
        keys.push(Place::Infinity.key(&f));
        // Infinity sorts after every finite place.
        let max = keys.iter().max().unwrap();
        assert_eq!(*max, Place::Infinity.key(&f));
    }
}
