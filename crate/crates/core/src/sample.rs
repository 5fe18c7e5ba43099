//! Seeded random sampling of ring elements for property sweeps.
//!
//! Every sampler takes the RNG by mutable reference; suites seed a
//! `ChaCha20Rng` so runs are reproducible bit for bit.

use rand::Rng;

use crate::rings::poly::{Laurent, Poly, RatFn};
use crate::rings::{Payload, RingDescriptor, RingElement};

#[derive(Clone, Copy, Debug)]
pub struct SampleBounds {
    /// Integers are drawn uniformly from [-int_abs, int_abs].
    pub int_abs: i64,
    /// Polynomial parts draw coefficients up to this degree.
    pub max_degree: usize,
    /// Laurent values shift by a power of t in [-laurent_shift, laurent_shift].
    pub laurent_shift: i64,
}

impl Default for SampleBounds {
    fn default() -> Self {
        SampleBounds {
            int_abs: 3,
            max_degree: 3,
            laurent_shift: 2,
        }
    }
}

fn random_poly<R: Rng>(ring: &RingDescriptor, rng: &mut R, max_degree: usize) -> Poly {
    let fd = ring.coefficient_field().expect("function ring");
    let f = fd.field();
    let q = f.order();
    let coeffs = (0..=max_degree)
        .map(|_| f.from_index(rng.gen_range(0..q)))
        .collect();
    Poly::from_coeffs(&f, coeffs)
}

pub fn element<R: Rng>(ring: &RingDescriptor, rng: &mut R, bounds: &SampleBounds) -> RingElement {
    match ring {
        RingDescriptor::Integers => ring.from_int(rng.gen_range(-bounds.int_abs..=bounds.int_abs)),
        RingDescriptor::Field(fd) => {
            let f = fd.field();
            let idx = rng.gen_range(0..f.order());
            ring.element_from_payload(Payload::Ff(f.from_index(idx)))
        }
        RingDescriptor::PolyRing(_) => {
            let p = random_poly(ring, rng, bounds.max_degree);
            ring.element_from_payload(Payload::Poly(p))
        }
        RingDescriptor::LaurentRing(fd) => {
            let f = fd.field();
            let low = rng.gen_range(-bounds.laurent_shift..=bounds.laurent_shift);
            let p = random_poly(ring, rng, bounds.max_degree);
            ring.element_from_payload(Payload::Laurent(Laurent::from_parts(&f, low, p)))
        }
        RingDescriptor::RationalFn(fd) => {
            let f = fd.field();
            let num = random_poly(ring, rng, bounds.max_degree);
            let den = loop {
                let d = random_poly(ring, rng, bounds.max_degree);
                if !d.is_zero() {
                    break d;
                }
            };
            ring.element_from_payload(Payload::RatFn(RatFn::new(&f, num, den).unwrap()))
        }
    }
}

pub fn nonzero<R: Rng>(ring: &RingDescriptor, rng: &mut R, bounds: &SampleBounds) -> RingElement {
    loop {
        let e = element(ring, rng, bounds);
        if !e.is_zero() {
            return e;
        }
    }
}

/// A uniform-ish unit: sign for Z, nonzero scalar for fields, nonzero
/// constant for polynomials, c * t^k for Laurent rings, any nonzero value
/// for rational functions.
pub fn unit<R: Rng>(ring: &RingDescriptor, rng: &mut R, bounds: &SampleBounds) -> RingElement {
    match ring {
        RingDescriptor::Integers => ring.from_int(if rng.gen() { 1 } else { -1 }),
        RingDescriptor::Field(fd) => {
            let f = fd.field();
            let idx = rng.gen_range(1..f.order());
            ring.element_from_payload(Payload::Ff(f.from_index(idx)))
        }
        RingDescriptor::PolyRing(fd) => {
            let f = fd.field();
            let idx = rng.gen_range(1..f.order());
            ring.element_from_payload(Payload::Poly(Poly::constant(&f, f.from_index(idx))))
        }
        RingDescriptor::LaurentRing(fd) => {
            let f = fd.field();
            let idx = rng.gen_range(1..f.order());
            let low = rng.gen_range(-bounds.laurent_shift..=bounds.laurent_shift);
            let unit = Laurent::from_parts(&f, low, Poly::constant(&f, f.from_index(idx)));
            ring.element_from_payload(Payload::Laurent(unit))
        }
        RingDescriptor::RationalFn(_) => nonzero(ring, rng, bounds),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::grammar::parse_descriptor;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn sampling_is_reproducible_and_in_bounds() {
        let bounds = SampleBounds::default();
        for ring_str in ["Z", "F7", "F9", "F5[t]", "F3[t,t^-1]", "F3(t)"] {
            let ring = parse_descriptor(ring_str).unwrap();
            let mut r1 = ChaCha20Rng::seed_from_u64(17);
            let mut r2 = ChaCha20Rng::seed_from_u64(17);
            for _ in 0..50 {
                let a = element(&ring, &mut r1, &bounds);
                let b = element(&ring, &mut r2, &bounds);
                assert_eq!(a, b, "determinism over {ring_str}");
                let u = unit(&ring, &mut r1, &bounds);
                unit(&ring, &mut r2, &bounds);
                assert!(u.is_unit(), "unit sample over {ring_str}");
                assert!(u.inv().is_ok());
            }
        }
    }

    #[test]
    fn nonzero_never_returns_zero() {
        let ring = parse_descriptor("F2").unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        for _ in 0..100 {
            assert!(!nonzero(&ring, &mut rng, &SampleBounds::default()).is_zero());
        }
    }
}
