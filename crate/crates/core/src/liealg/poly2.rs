//! Sparse integer polynomials in two variables and sparse matrices over
//! them. Internal scaffolding for the commutator-coefficient derivation;
//! exponents stay tiny, so terms are keyed by (i, j) pairs directly.

use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Poly2 {
    terms: BTreeMap<(u8, u8), i64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn monomial(i: u8, j: u8, c: i64) -> Self {
        let mut p = Poly2::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: u8, j: u8, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add_assign(&mut self, other: &Poly2) {
        for (&(i, j), &c) in &other.terms {
            self.add_term(i, j, c);
        }
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i1, j1), &c1) in &self.terms {
            for (&(i2, j2), &c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn coeff(&self, i: u8, j: u8) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }
}

/// Row-sparse square matrix over Poly2. Rows hold (column, entry) pairs
/// sorted by column with nonzero entries only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SpMat {
    pub n: usize,
    pub rows: Vec<Vec<(usize, Poly2)>>,
}

impl SpMat {
    pub fn mul(&self, other: &SpMat) -> SpMat {
        assert_eq!(self.n, other.n);
        let mut rows = Vec::with_capacity(self.n);
        for row in &self.rows {
            let mut acc: BTreeMap<usize, Poly2> = BTreeMap::new();
            for (k, p) in row {
                for (j, q) in &other.rows[*k] {
                    acc.entry(*j).or_insert_with(Poly2::zero).add_assign(&p.mul(q));
                }
            }
            rows.push(
                acc.into_iter()
                    .filter(|(_, p)| !p.is_zero())
                    .collect::<Vec<_>>(),
            );
        }
        SpMat { n: self.n, rows }
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.len() == 1 && row[0].0 == i && row[0].1 == Poly2::monomial(0, 0, 1)
        })
    }

    /// Dense integer matrix of the coefficients at monomial (i, j).
    pub fn coeff_matrix(&self, i: u8, j: u8) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.n]; self.n];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, p) in row {
                out[r][*c] = p.coeff(i, j);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_arithmetic() {
        let mut p = Poly2::monomial(1, 0, 2);
        p.add_term(0, 1, 3);
        let q = Poly2::monomial(1, 1, 1);
        let prod = p.mul(&q);
        assert_eq!(prod.coeff(2, 1), 2);
        assert_eq!(prod.coeff(1, 2), 3);
        assert_eq!(prod.coeff(1, 1), 0);
        p.add_term(1, 0, -2);
        assert_eq!(p.coeff(1, 0), 0);
    }

    #[test]
    fn sparse_identity_product() {
        let id = SpMat {
            n: 3,
            rows: (0..3).map(|i| vec![(i, Poly2::monomial(0, 0, 1))]).collect(),
        };
        let mut m = id.clone();
        m.rows[0].push((2, Poly2::monomial(1, 1, 5)));
        assert!(!m.is_identity());
        assert_eq!(id.mul(&m), m);
        assert_eq!(m.mul(&id), m);
        assert_eq!(m.coeff_matrix(1, 1)[0][2], 5);
    }
}
