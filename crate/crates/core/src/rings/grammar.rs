//! Text forms for ring descriptors and ring elements.
//!
//! Descriptors: `Z`, `F5`, `F9[x^2+1]`, `F5[t]`, `F5[t,t^-1]`, `F5(t)`.
//! A bare `F9` resolves to the canonical modulus. Elements parse as
//! arithmetic expressions in the ring variable (`t` for function rings,
//! `x` for the generator of an extension field), with `^` for integer
//! powers and implicit multiplication between a number and a variable.

use super::ff::FiniteField;
use super::poly::Poly;
use super::{FieldDesc, Payload, RingDescriptor, RingElement, RingError};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<Tok>, RingError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n: i64 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|m| m.checked_add(v as i64))
                            .ok_or_else(|| RingError::Parse("integer literal overflow".into()))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(n));
            }
            't' | 'x' => {
                out.push(Tok::Var(c));
                chars.next();
            }
            '+' => {
                out.push(Tok::Plus);
                chars.next();
            }
            '-' => {
                out.push(Tok::Minus);
                chars.next();
            }
            '*' => {
                out.push(Tok::Star);
                chars.next();
            }
            '/' => {
                out.push(Tok::Slash);
                chars.next();
            }
            '^' => {
                out.push(Tok::Caret);
                chars.next();
            }
            '(' => {
                out.push(Tok::LParen);
                chars.next();
            }
            ')' => {
                out.push(Tok::RParen);
                chars.next();
            }
            other => {
                return Err(RingError::Parse(format!(
                    "unexpected character '{other}' in expression"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a RingDescriptor,
    var: char,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RingElement, RingError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RingElement, RingError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.mul(&self.unary()?)?;
                }
                Some(Tok::Slash) => {
                    self.next();
                    acc = acc.mul(&self.unary()?.inv()?)?;
                }
                // Implicit multiplication: `2t`, `3(t+1)`, `t(t+1)`.
                Some(Tok::Int(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RingElement, RingError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RingElement, RingError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            let mut sign = 1i64;
            if matches!(self.peek(), Some(Tok::Minus)) {
                self.next();
                sign = -1;
            }
            match self.next() {
                Some(Tok::Int(n)) => base.pow(sign * n),
                _ => Err(RingError::Parse("expected integer exponent after ^".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RingElement, RingError> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(self.ring.from_int(n)),
            Some(Tok::Var(v)) if v == self.var => self.var_element(),
            Some(Tok::Var('x')) => self.coeff_generator(),
            Some(Tok::Var(v)) => Err(RingError::Parse(format!(
                "variable '{v}' is not defined in {}",
                self.ring
            ))),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(RingError::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(RingError::Parse(format!(
                "unexpected token {other:?} in expression"
            ))),
        }
    }

    fn var_element(&mut self) -> Result<RingElement, RingError> {
        match self.ring {
            RingDescriptor::Field(fd) if fd.degree() > 1 => {
                let f = fd.field();
                let x = f.from_coeffs(&[0, 1])?;
                Ok(self.ring.element_from_payload(Payload::Ff(x)))
            }
            _ => self.ring.var(),
        }
    }

    /// The generator of the coefficient field, embedded as a constant;
    /// lets expressions like `(x+1)t^2` mix both variables over F_q[t].
    fn coeff_generator(&mut self) -> Result<RingElement, RingError> {
        let fd = self
            .ring
            .coefficient_field()
            .filter(|fd| fd.degree() > 1)
            .ok_or_else(|| {
                RingError::Parse(format!("variable 'x' is not defined in {}", self.ring))
            })?;
        let field_ring = RingDescriptor::Field(fd.clone());
        let f = fd.field();
        let x = field_ring.element_from_payload(Payload::Ff(f.from_coeffs(&[0, 1])?));
        x.embed_into(self.ring)
    }
}

/// Parse an element expression in the ring's own variable.
pub fn parse_element(ring: &RingDescriptor, src: &str) -> Result<RingElement, RingError> {
    let var = match ring {
        RingDescriptor::Field(fd) if fd.degree() > 1 => 'x',
        RingDescriptor::PolyRing(_)
        | RingDescriptor::LaurentRing(_)
        | RingDescriptor::RationalFn(_) => 't',
        _ => '\0',
    };
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        ring,
        var,
    };
    if p.toks.is_empty() {
        return Err(RingError::Parse("empty expression".into()));
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(RingError::Parse(format!(
            "trailing input after position {}",
            p.pos
        )));
    }
    Ok(e)
}

/// Parse a monic modulus expression in `x` over `F_p` into the coefficient
/// vector (constant term first) expected by the field constructors.
fn parse_modulus(p: u64, src: &str) -> Result<Vec<u64>, RingError> {
    let ring = RingDescriptor::PolyRing(FieldDesc::prime(p)?);
    // Reuse the element parser with `x` spelled as the polynomial variable.
    let rewritten: String = src.chars().map(|c| if c == 'x' { 't' } else { c }).collect();
    let e = parse_element(&ring, &rewritten)?;
    match e.payload() {
        Payload::Poly(poly) => Ok(poly.coeffs().iter().map(|c| c[0]).collect()),
        _ => unreachable!("polynomial ring payload"),
    }
}

/// Parse a ring descriptor.
pub fn parse_descriptor(src: &str) -> Result<RingDescriptor, RingError> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "Z" {
        return Ok(RingDescriptor::Integers);
    }
    let rest = s
        .strip_prefix('F')
        .ok_or_else(|| RingError::Parse(format!("unrecognized ring '{src}'")))?;
    let digits_end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
    if digits_end == 0 {
        return Err(RingError::Parse(format!("missing field order in '{src}'")));
    }
    let q: u64 = rest[..digits_end]
        .parse()
        .map_err(|_| RingError::Parse(format!("bad field order in '{src}'")))?;
    let mut tail = &rest[digits_end..];

    // Optional modulus bracket: contains `x`, distinguishing it from `[t]`.
    let mut fd: Option<FieldDesc> = None;
    if let Some(inner) = bracket_content(tail)? {
        if inner.contains('x') {
            let (p, k) = super::split_prime_power(q)
                .ok_or(RingError::NotPrimePower(q))?;
            let coeffs = parse_modulus(p, inner)?;
            if coeffs.len() != k as usize + 1 {
                return Err(RingError::BadModulus(format!(
                    "modulus degree {} does not match field order {q}",
                    coeffs.len().saturating_sub(1)
                )));
            }
            fd = Some(FieldDesc::with_modulus(p, &coeffs)?);
            tail = &tail[inner.len() + 2..];
        }
    }
    let fd = match fd {
        Some(fd) => fd,
        None => FieldDesc::of_order(q)?,
    };

    match tail {
        "" => Ok(RingDescriptor::Field(fd)),
        "[t]" => Ok(RingDescriptor::PolyRing(fd)),
        "[t,t^-1]" => Ok(RingDescriptor::LaurentRing(fd)),
        "(t)" => Ok(RingDescriptor::RationalFn(fd)),
        other => Err(RingError::Parse(format!(
            "unrecognized ring suffix '{other}'"
        ))),
    }
}

fn bracket_content(s: &str) -> Result<Option<&str>, RingError> {
    if !s.starts_with('[') {
        return Ok(None);
    }
    let close = s
        .find(']')
        .ok_or_else(|| RingError::Parse("unbalanced '[' in ring descriptor".into()))?;
    Ok(Some(&s[1..close]))
}

/// Print a polynomial over `F_p` given as raw coefficients, highest degree
/// first, e.g. `x^2+x+1`.
pub fn fp_poly_to_string(coeffs: &[u64], var: &str) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => var.to_string(),
            (1, c) => format!("{c}{var}"),
            (i, 1) => format!("{var}^{i}"),
            (i, c) => format!("{c}{var}^{i}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

fn ff_coeff_string(field: &FiniteField, c: &super::ff::FfElem) -> String {
    if field.degree() == 1 {
        c[0].to_string()
    } else {
        let coeffs: Vec<u64> = c.iter().copied().collect();
        format!("({})", fp_poly_to_string(&coeffs, "x"))
    }
}

/// Print a polynomial over any finite field with powers of `var`,
/// highest degree first.
pub fn poly_to_string(field: &FiniteField, p: &Poly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<String> = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if field.is_zero(c) {
            continue;
        }
        let cs = ff_coeff_string(field, c);
        let t = match i {
            0 => cs,
            _ => {
                let pow = if i == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{i}")
                };
                if field.is_one(c) {
                    pow
                } else {
                    format!("{cs}{pow}")
                }
            }
        };
        terms.push(t);
    }
    terms.join("+")
}

/// Human-readable form of any ring element.
pub fn element_to_string(e: &RingElement) -> String {
    let field = || {
        e.ring()
            .coefficient_field()
            .expect("field-coefficient payload")
            .field()
    };
    match e.payload() {
        Payload::Int(n) => n.to_string(),
        Payload::Ff(c) => {
            let f = field();
            if f.degree() == 1 {
                c[0].to_string()
            } else {
                let coeffs: Vec<u64> = c.iter().copied().collect();
                fp_poly_to_string(&coeffs, "x")
            }
        }
        Payload::Poly(p) => poly_to_string(&field(), p, "t"),
        Payload::Laurent(l) => {
            if l.is_zero() {
                return "0".to_string();
            }
            let f = field();
            let mut terms: Vec<String> = Vec::new();
            for (i, c) in l.unit_part().coeffs().iter().enumerate().rev() {
                if f.is_zero(c) {
                    continue;
                }
                let e = l.low() + i as i64;
                let cs = ff_coeff_string(&f, c);
                let t = match e {
                    0 => cs,
                    1 if f.is_one(c) => "t".to_string(),
                    1 => format!("{cs}t"),
                    _ if f.is_one(c) => format!("t^{e}"),
                    _ => format!("{cs}t^{e}"),
                };
                terms.push(t);
            }
            terms.join("+")
        }
        Payload::RatFn(r) => {
            let f = field();
            let num = poly_to_string(&f, r.num(), "t");
            if r.den().is_one(&f) {
                num
            } else {
                format!("({})/({})", num, poly_to_string(&f, r.den(), "t"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_examples_parse_and_print() {
        for s in ["Z", "F5", "F9[x^2+1]", "F5[t]", "F5[t,t^-1]", "F5(t)"] {
            let d = parse_descriptor(s).unwrap();
            assert_eq!(d.to_string(), s, "round trip of {s}");
        }
        // Bare prime powers resolve to the canonical modulus.
        assert_eq!(parse_descriptor("F9").unwrap().to_string(), "F9[x^2+1]");
        assert_eq!(parse_descriptor("F4").unwrap().to_string(), "F4[x^2+x+1]");
        assert_eq!(
            parse_descriptor("F4[t,t^-1]").unwrap().to_string(),
            "F4[x^2+x+1][t,t^-1]"
        );
    }

    #[test]
    fn bad_descriptors_are_rejected() {
        assert!(parse_descriptor("F6").is_err());
        assert!(parse_descriptor("F9[x^3+1]").is_err());
        assert!(parse_descriptor("F5[u]").is_err());
        assert!(parse_descriptor("Q").is_err());
        // x^2+1 factors over F_2.
        assert!(parse_descriptor("F4[x^2+1]").is_err());
    }

    #[test]
    fn element_expressions_evaluate() {
        let ring = parse_descriptor("F5[t]").unwrap();
        let e = parse_element(&ring, "t^2 + 2t + 1").unwrap();
        let t = ring.var().unwrap();
        let expect = t
            .mul(&t)
            .unwrap()
            .add(&t.mul(&ring.from_int(2)).unwrap())
            .unwrap()
            .add(&ring.one())
            .unwrap();
        assert_eq!(e, expect);
        // (t+1)^2 via parentheses and implicit multiplication.
        let sq = parse_element(&ring, "(t+1)(t+1)").unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn laurent_and_rational_expressions() {
        let lr = parse_descriptor("F3[t,t^-1]").unwrap();
        let e = parse_element(&lr, "2t^-2 + 1").unwrap();
        assert_eq!(element_to_string(&e), "1+2t^-2");
        let rr = parse_descriptor("F3(t)").unwrap();
        let r = parse_element(&rr, "(t+1)/(t^2+t)").unwrap();
        // Reduces to 1/t.
        assert_eq!(element_to_string(&r), "(1)/(t)");
        assert!(parse_element(&lr, "1/(t+1)").is_err());
    }

    #[test]
    fn extension_field_elements_use_x() {
        let f9 = parse_descriptor("F9").unwrap();
        let e = parse_element(&f9, "x+2").unwrap();
        assert_eq!(element_to_string(&e), "x+2");
        // x^2 = -1 = 2 under the canonical modulus.
        let sq = parse_element(&f9, "x^2").unwrap();
        assert_eq!(sq, f9.from_int(2));
        assert!(parse_element(&f9, "t").is_err());
    }

    #[test]
    fn negative_powers_need_units() {
        let pr = parse_descriptor("F5[t]").unwrap();
        assert!(parse_element(&pr, "t^-1").is_err());
        assert_eq!(
            parse_element(&pr, "2^-1").unwrap(),
            pr.from_int(3)
        );
    }
}
