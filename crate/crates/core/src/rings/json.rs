//! JSON encoding of ring elements.
//!
//! An element serializes as an object carrying its ring descriptor string
//! plus a shape-specific value:
//! * integers: `{"ring":"Z","value":"-12"}` (decimal string, unbounded);
//! * prime fields: `{"ring":"F5","value":3}`;
//! * extension fields: `{"ring":"F9[x^2+1]","coeffs":[2,1]}` (constant
//!   term first);
//! * polynomials: `{"ring":"F5[t]","coeffs":[1,0,2]}`;
//! * Laurent polynomials: `{"ring":"F5[t,t^-1]","low":-2,"coeffs":[1,0,2]}`;
//! * rational functions: `{"ring":"F5(t)","num":[0,1],"den":[1,1]}`.
//!
//! Coefficients over an extension base are arrays instead of numbers.
//! `value_to_json` / `value_from_json` handle the ring-less value part for
//! containers that state the ring once.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use super::ff::{FfElem, FiniteField};
use super::poly::{Laurent, Poly, RatFn};
use super::{Payload, RingDescriptor, RingElement, RingError};

fn ff_to_json(field: &FiniteField, e: &FfElem) -> Value {
    if field.degree() == 1 {
        json!(e[0])
    } else {
        Value::Array(e.iter().map(|&c| json!(c)).collect())
    }
}

fn ff_from_json(field: &FiniteField, v: &Value) -> Result<FfElem, RingError> {
    match v {
        Value::Number(n) => {
            let c = n
                .as_u64()
                .ok_or_else(|| RingError::Parse(format!("bad coefficient {n}")))?;
            field.from_coeffs(&[c])
        }
        Value::Array(a) => {
            let coeffs: Result<Vec<u64>, _> = a
                .iter()
                .map(|x| {
                    x.as_u64()
                        .ok_or_else(|| RingError::Parse(format!("bad coefficient {x}")))
                })
                .collect();
            field.from_coeffs(&coeffs?)
        }
        other => Err(RingError::Parse(format!(
            "expected coefficient, found {other}"
        ))),
    }
}

fn poly_to_json(field: &FiniteField, p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| ff_to_json(field, c)).collect())
}

fn poly_from_json(field: &FiniteField, v: &Value) -> Result<Poly, RingError> {
    let arr = v
        .as_array()
        .ok_or_else(|| RingError::Parse(format!("expected coefficient array, found {v}")))?;
    let coeffs: Result<Vec<FfElem>, _> = arr.iter().map(|c| ff_from_json(field, c)).collect();
    Ok(Poly::from_coeffs(field, coeffs?))
}

/// The value part of an element, without the ring tag.
pub fn value_to_json(e: &RingElement) -> Value {
    let field = || {
        e.ring()
            .coefficient_field()
            .expect("field-coefficient payload")
            .field()
    };
    match e.payload() {
        Payload::Int(n) => json!({ "value": n.to_string() }),
        Payload::Ff(c) => {
            let f = field();
            if f.degree() == 1 {
                json!({ "value": c[0] })
            } else {
                json!({ "coeffs": ff_to_json(&f, c) })
            }
        }
        Payload::Poly(p) => json!({ "coeffs": poly_to_json(&field(), p) }),
        Payload::Laurent(l) => json!({
            "low": l.low(),
            "coeffs": poly_to_json(&field(), l.unit_part()),
        }),
        Payload::RatFn(r) => {
            let f = field();
            json!({
                "num": poly_to_json(&f, r.num()),
                "den": poly_to_json(&f, r.den()),
            })
        }
    }
}

/// Read the value part against a known ring.
pub fn value_from_json(ring: &RingDescriptor, v: &Value) -> Result<RingElement, RingError> {
    let obj = v
        .as_object()
        .ok_or_else(|| RingError::Parse(format!("expected element object, found {v}")))?;
    let get = |k: &str| -> Result<&Value, RingError> {
        obj.get(k)
            .ok_or_else(|| RingError::Parse(format!("element object missing '{k}'")))
    };
    let payload = match ring {
        RingDescriptor::Integers => {
            let s = get("value")?;
            let n: BigInt = match s {
                Value::String(s) => s
                    .parse()
                    .map_err(|_| RingError::Parse(format!("bad integer '{s}'")))?,
                Value::Number(n) => {
                    let i = n
                        .as_i64()
                        .ok_or_else(|| RingError::Parse(format!("bad integer {n}")))?;
                    BigInt::from(i)
                }
                other => return Err(RingError::Parse(format!("bad integer {other}"))),
            };
            Payload::Int(n)
        }
        RingDescriptor::Field(fd) => {
            let f = fd.field();
            let raw = if f.degree() == 1 {
                get("value")?
            } else {
                get("coeffs")?
            };
            Payload::Ff(ff_from_json(&f, raw)?)
        }
        RingDescriptor::PolyRing(fd) => {
            Payload::Poly(poly_from_json(&fd.field(), get("coeffs")?)?)
        }
        RingDescriptor::LaurentRing(fd) => {
            let f = fd.field();
            let low = get("low")?
                .as_i64()
                .ok_or_else(|| RingError::Parse("bad 'low' exponent".into()))?;
            let unit = poly_from_json(&f, get("coeffs")?)?;
            Payload::Laurent(Laurent::from_parts(&f, low, unit))
        }
        RingDescriptor::RationalFn(fd) => {
            let f = fd.field();
            let num = poly_from_json(&f, get("num")?)?;
            let den = poly_from_json(&f, get("den")?)?;
            Payload::RatFn(RatFn::new(&f, num, den)?)
        }
    };
    Ok(ring.element_from_payload(payload))
}

/// Full element object including the ring tag.
pub fn element_to_json(e: &RingElement) -> Value {
    let mut obj = match value_to_json(e) {
        Value::Object(m) => m,
        _ => unreachable!("value encoding is an object"),
    };
    let mut out = Map::new();
    out.insert("ring".to_string(), json!(e.ring().to_string()));
    out.append(&mut obj);
    Value::Object(out)
}

/// Read a full element object, taking the ring from its tag.
pub fn element_from_json(v: &Value) -> Result<RingElement, RingError> {
    let ring_str = v
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| RingError::Parse("element object missing 'ring'".into()))?;
    let ring = super::grammar::parse_descriptor(ring_str)?;
    value_from_json(&ring, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::grammar::{parse_descriptor, parse_element};

    fn round_trip(ring: &str, expr: &str) {
        let r = parse_descriptor(ring).unwrap();
        let e = parse_element(&r, expr).unwrap();
        let v = element_to_json(&e);
        assert_eq!(v["ring"], ring);
        let back = element_from_json(&v).unwrap();
        assert_eq!(back, e, "{ring} / {expr}");
        let bare = value_to_json(&e);
        assert_eq!(value_from_json(&r, &bare).unwrap(), e);
    }

    #[test]
    fn round_trips_cover_every_ring_shape() {
        round_trip("Z", "-12");
        round_trip("F5", "3");
        round_trip("F9[x^2+1]", "2x+1");
        round_trip("F5[t]", "t^3+2t+4");
        round_trip("F5[t,t^-1]", "t^-2+3+t");
        round_trip("F5(t)", "(t+1)/(t^2+2)");
        round_trip("F4[x^2+x+1][t]", "(x+1)t^2+x");
    }

    #[test]
    fn huge_integers_survive() {
        let z = parse_descriptor("Z").unwrap();
        let big = z.from_int(i64::MAX).mul(&z.from_int(i64::MAX)).unwrap();
        let v = element_to_json(&big);
        assert_eq!(element_from_json(&v).unwrap(), big);
    }

    #[test]
    fn laurent_low_is_normalized_on_read() {
        let ring = parse_descriptor("F3[t,t^-1]").unwrap();
        // coeffs [0, 1] with low -1 is really t^0 * 1... the unit part
        // normalizes so low becomes 0.
        let v = serde_json::json!({ "low": -1, "coeffs": [0, 1] });
        let e = value_from_json(&ring, &v).unwrap();
        assert_eq!(e, ring.one());
    }

    #[test]
    fn mismatched_shapes_error() {
        let ring = parse_descriptor("F5[t]").unwrap();
        let v = serde_json::json!({ "value": 3 });
        assert!(value_from_json(&ring, &v).is_err());
        assert!(element_from_json(&serde_json::json!({"coeffs": [1]})).is_err());
    }
}
