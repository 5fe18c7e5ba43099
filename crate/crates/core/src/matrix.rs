//! Dense square matrices over a ring, used both for concrete group
//! elements and for adjoint-representation computations.
//!
//! Multiplication skips zero entries, which matters: group elements built
//! from root unipotents are identity-plus-sparse, and the big adjoint
//! sweeps spend nearly all their time here.

use crate::rings::{json, RingDescriptor, RingElement, RingError};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: RingDescriptor,
    n: usize,
    entries: Vec<RingElement>,
}

impl Matrix {
    pub fn zero(ring: &RingDescriptor, n: usize) -> Self {
        Matrix {
            ring: ring.clone(),
            n,
            entries: vec![ring.zero(); n * n],
        }
    }

    pub fn identity(ring: &RingDescriptor, n: usize) -> Self {
        let mut m = Self::zero(ring, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    pub fn from_rows(ring: &RingDescriptor, rows: Vec<Vec<RingElement>>) -> Result<Self, RingError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(RingError::BadCoefficients(format!(
                    "matrix row has {} entries, expected {n}",
                    row.len()
                )));
            }
            for e in row {
                if e.ring() != ring {
                    return Err(RingError::MixedRings(
                        e.ring().to_string(),
                        ring.to_string(),
                    ));
                }
                entries.push(e);
            }
        }
        Ok(Matrix {
            ring: ring.clone(),
            n,
            entries,
        })
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElement) {
        debug_assert_eq!(v.ring(), &self.ring);
        self.entries[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, RingError> {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let n = self.n;
        let mut out = Matrix::zero(&self.ring, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b)?;
                    let cur = out.get(i, j).add(&prod)?;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, RingError> {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(other.entries.iter()) {
            *a = a.add(b)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, RingError> {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(other.entries.iter()) {
            *a = a.sub(b)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RingElement) -> Result<Matrix, RingError> {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.mul(c)?;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n;
        self.entries.iter().enumerate().all(|(k, e)| {
            if k / n == k % n {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else if i > j {
                    e.is_zero()
                } else {
                    true
                }
            })
        })
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.transpose().is_upper_unitriangular()
    }

    /// Determinant by cofactor expansion: exact over any commutative ring,
    /// exponential in size, fine for the small concrete groups handled here.
    pub fn determinant(&self) -> Result<RingElement, RingError> {
        assert!(self.n <= 8, "cofactor determinant limited to small sizes");
        self.det_rec(&(0..self.n).collect::<Vec<_>>(), 0)
    }

    fn det_rec(&self, cols: &[usize], row: usize) -> Result<RingElement, RingError> {
        if cols.is_empty() {
            return Ok(self.ring.one());
        }
        let mut acc = self.ring.zero();
        for (pos, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&x| x != c)
                .collect();
            let minor = self.det_rec(&rest, row + 1)?;
            let term = a.mul(&minor)?;
            acc = if pos % 2 == 0 {
                acc.add(&term)?
            } else {
                acc.sub(&term)?
            };
        }
        Ok(acc)
    }

    /// The leading principal k-by-k minor determinant.
    pub fn leading_minor(&self, k: usize) -> Result<RingElement, RingError> {
        assert!(k <= self.n);
        let cols: Vec<usize> = (0..k).collect();
        let sub = Matrix {
            ring: self.ring.clone(),
            n: k,
            entries: (0..k)
                .flat_map(|i| cols.iter().map(move |&j| (i, j)))
                .map(|(i, j)| self.get(i, j).clone())
                .collect(),
        };
        sub.determinant()
    }

    /// Inverse for matrices known to be invertible over a field, by
    /// Gauss-Jordan elimination. Errors with NotAUnit when singular or when
    /// a pivot fails to invert (non-field rings).
    pub fn inverse(&self) -> Result<Matrix, RingError> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Matrix::identity(&self.ring, n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| a.get(r, col).is_unit())
                .ok_or(RingError::NotAUnit)?;
            if pivot_row != col {
                for j in 0..n {
                    a.entries.swap(col * n + j, pivot_row * n + j);
                    inv.entries.swap(col * n + j, pivot_row * n + j);
                }
            }
            let p = a.get(col, col).inv()?;
            for j in 0..n {
                a.entries[col * n + j] = a.entries[col * n + j].mul(&p)?;
                inv.entries[col * n + j] = inv.entries[col * n + j].mul(&p)?;
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let t = a.entries[col * n + j].mul(&f)?;
                    a.entries[r * n + j] = a.entries[r * n + j].sub(&t)?;
                    let t = inv.entries[col * n + j].mul(&f)?;
                    inv.entries[r * n + j] = inv.entries[r * n + j].sub(&t)?;
                }
            }
        }
        if !a.is_identity() {
            return Err(RingError::NotAUnit);
        }
        Ok(inv)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring.to_string(),
            "size": self.n,
            "entries": (0..self.n)
                .map(|i| {
                    (0..self.n)
                        .map(|j| json::value_to_json(self.get(i, j)))
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, RingError> {
        let ring_str = v
            .get("ring")
            .and_then(Value::as_str)
            .ok_or_else(|| RingError::Parse("matrix object missing 'ring'".into()))?;
        let ring = crate::rings::grammar::parse_descriptor(ring_str)?;
        let entries = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| RingError::Parse("matrix object missing 'entries'".into()))?;
        let mut rows = Vec::with_capacity(entries.len());
        for row in entries {
            let row = row
                .as_array()
                .ok_or_else(|| RingError::Parse("matrix row must be an array".into()))?;
            let parsed: Result<Vec<RingElement>, RingError> = row
                .iter()
                .map(|cell| json::value_from_json(&ring, cell))
                .collect();
            rows.push(parsed?);
        }
        Self::from_rows(&ring, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::grammar::{parse_descriptor, parse_element};

    fn mat(ring: &RingDescriptor, rows: &[&[i64]]) -> Matrix {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| ring.from_int(v)).collect())
            .collect();
        Matrix::from_rows(ring, rows).unwrap()
    }

    #[test]
    fn multiplication_against_hand_product() {
        let z = parse_descriptor("Z").unwrap();
        let a = mat(&z, &[&[1, 2], &[3, 4]]);
        let b = mat(&z, &[&[0, 1], &[1, 0]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, mat(&z, &[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn determinant_matches_cofactor_values() {
        let z = parse_descriptor("Z").unwrap();
        let a = mat(&z, &[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]]);
        // det = 2(1*1-0*3) - 0 + 1(1*3-1*0) = 2 + 3 = 5.
        assert_eq!(a.determinant().unwrap(), z.from_int(5));
        assert_eq!(a.leading_minor(2).unwrap(), z.from_int(2));
        assert_eq!(a.leading_minor(0).unwrap(), z.one());
    }

    #[test]
    fn inverse_over_a_field() {
        let f7 = parse_descriptor("F7").unwrap();
        let a = mat(&f7, &[&[1, 2, 0], &[0, 1, 5], &[3, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&a).unwrap().is_identity());
        let singular = mat(&f7, &[&[1, 2, 0], &[2, 4, 0], &[0, 0, 1]]);
        assert!(singular.inverse().is_err());
    }

    #[test]
    fn unitriangular_predicates() {
        let z = parse_descriptor("Z").unwrap();
        let u = mat(&z, &[&[1, 5], &[0, 1]]);
        assert!(u.is_upper_unitriangular());
        assert!(!u.is_lower_unitriangular());
        assert!(u.transpose().is_lower_unitriangular());
        assert!(Matrix::identity(&z, 3).is_upper_unitriangular());
    }

    #[test]
    fn json_round_trip_with_polynomial_entries() {
        let ring = parse_descriptor("F3[t]").unwrap();
        let t = parse_element(&ring, "t").unwrap();
        let rows = vec![
            vec![ring.one(), t.clone()],
            vec![ring.zero(), ring.one()],
        ];
        let m = Matrix::from_rows(&ring, rows).unwrap();
        let v = m.to_json();
        let back = Matrix::from_json(&v).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn laurent_inverse_needs_unit_pivots() {
        let ring = parse_descriptor("F3[t,t^-1]").unwrap();
        let t = parse_element(&ring, "t").unwrap();
        // diag(t, t^-1) inverts fine.
        let rows = vec![
            vec![t.clone(), ring.zero()],
            vec![ring.zero(), t.pow(-1).unwrap()],
        ];
        let d = Matrix::from_rows(&ring, rows).unwrap();
        let inv = d.inverse().unwrap();
        assert!(d.mul(&inv).unwrap().is_identity());
        // But a matrix needing division by t+1 fails.
        let bad = Matrix::from_rows(
            &ring,
            vec![
                vec![parse_element(&ring, "t+1").unwrap(), ring.zero()],
                vec![ring.zero(), ring.one()],
            ],
        )
        .unwrap();
        assert!(bad.inverse().is_err());
    }
}
