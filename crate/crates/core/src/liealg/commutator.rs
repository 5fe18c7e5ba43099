//! Coefficients of the commutator formula for root unipotents, derived by
//! exact computation in the adjoint representation over Z[r, s].
//!
//! For roots alpha != +-beta the commutator
//! X_alpha(r) X_beta(s) X_alpha(r)^-1 X_beta(s)^-1 equals an ordered
//! product of X_{i alpha + j beta}(N_ij r^i s^j) over the root
//! combinations of the pair, ordered by (i + j, i). The coefficients are
//! found by peeling: at each step the lowest remaining monomial of the
//! accumulated matrix must be an integer multiple of ad e_gamma (products
//! of later factors only reach strictly higher monomials), the multiple is
//! read off, the factor's inverse is applied, and after the last step the
//! accumulator must be the identity. That final check certifies the
//! formula as an identity of matrices over Z[r, s], so the derivation can
//! not silently return wrong coefficients.

use super::adjoint::AdjointRep;
use super::poly2::{Poly2, SpMat};
use super::{IntMat, StructureConstants};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorTerm {
    /// Multiple of the first root in the combination i*alpha + j*beta.
    pub i: i32,
    /// Multiple of the second root.
    pub j: i32,
    /// Index of the root i*alpha + j*beta.
    pub root: usize,
    /// Integer coefficient of r^i s^j.
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CommutatorFormula {
    /// Terms in product order: ascending (i + j, i), zero coefficients
    /// dropped.
    pub terms: Vec<CommutatorTerm>,
}

/// Derives and caches commutator formulas for one root system.
pub struct CommutatorTables {
    ad: AdjointRep,
    cache: HashMap<(usize, usize), CommutatorFormula>,
}

impl CommutatorTables {
    pub fn new(consts: &StructureConstants) -> Self {
        CommutatorTables {
            ad: AdjointRep::new(consts),
            cache: HashMap::new(),
        }
    }

    pub fn constants(&self) -> &StructureConstants {
        self.ad.constants()
    }

    /// Formula for [x_alpha(r), x_beta(s)]. Panics if beta = +-alpha,
    /// where the commutator formula does not apply.
    pub fn formula(&mut self, alpha: usize, beta: usize) -> CommutatorFormula {
        if let Some(f) = self.cache.get(&(alpha, beta)) {
            return f.clone();
        }
        let f = derive(&self.ad, alpha, beta);
        self.cache.insert((alpha, beta), f.clone());
        f
    }

    /// Seed the cache with an externally stored formula. The value is
    /// trusted only as far as whatever verification consumes it later;
    /// loading corrupt terms makes the group-level identity fail, it does
    /// not corrupt the derivation path for other pairs.
    pub fn insert_formula(&mut self, alpha: usize, beta: usize, f: CommutatorFormula) {
        self.cache.insert((alpha, beta), f);
    }
}

/// exp(c r^i s^j ad e_gamma) as a sparse matrix over Z[r, s], assembled
/// from the integral divided powers of ad e_gamma.
fn exp_factor(ad: &AdjointRep, gamma: usize, c: i64, i: u8, j: u8) -> SpMat {
    let layers = ad.exp_layers(gamma);
    let n = ad.dim();
    let mut rows: Vec<Vec<(usize, Poly2)>> = vec![Vec::new(); n];
    for (k, layer) in layers.iter().enumerate() {
        let ck = c.pow(k as u32);
        for (r, row) in layer.iter().enumerate() {
            for (col, &v) in row.iter().enumerate() {
                if v == 0 {
                    continue;
                }
                let ki = k as u8;
                match rows[r].iter_mut().find(|(cc, _)| *cc == col) {
                    Some((_, p)) => p.add_term(ki * i, ki * j, v * ck),
                    None => rows[r].push((col, Poly2::monomial(ki * i, ki * j, v * ck))),
                }
            }
        }
    }
    for row in &mut rows {
        row.sort_by_key(|(c, _)| *c);
        row.retain(|(_, p)| !p.is_zero());
    }
    SpMat { n, rows }
}

fn derive(ad: &AdjointRep, alpha: usize, beta: usize) -> CommutatorFormula {
    let rs = ad.constants().system().clone();
    assert!(alpha != beta && alpha != rs.negate(beta));
    let combos = rs.string_combinations(alpha, beta);

    let xa = exp_factor(ad, alpha, 1, 1, 0);
    let xb = exp_factor(ad, beta, 1, 0, 1);
    let xa_inv = exp_factor(ad, alpha, -1, 1, 0);
    let xb_inv = exp_factor(ad, beta, -1, 0, 1);
    let mut acc = xa.mul(&xb).mul(&xa_inv).mul(&xb_inv);

    let mut terms = Vec::new();
    for (i, j, gamma) in combos {
        let m = acc.coeff_matrix(i as u8, j as u8);
        let ad_g = ad.ad_root(gamma);
        let coeff = read_multiple(&m, &ad_g);
        if coeff != 0 {
            acc = exp_factor(ad, gamma, -coeff, i as u8, j as u8).mul(&acc);
            terms.push(CommutatorTerm {
                i,
                j,
                root: gamma,
                coeff,
            });
        }
    }
    assert!(
        acc.is_identity(),
        "commutator peel must close: the formula holds identically over Z[r, s]"
    );
    CommutatorFormula { terms }
}

/// Solves m = c * base for an integer c, asserting exactness entrywise.
fn read_multiple(m: &IntMat, base: &IntMat) -> i64 {
    let mut pivot = None;
    'outer: for (r, row) in base.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v != 0 {
                pivot = Some((r, c, v));
                break 'outer;
            }
        }
    }
    let (r, c, v) = pivot.expect("ad of a root vector is nonzero");
    assert_eq!(m[r][c] % v, 0, "coefficient matrix is an integer multiple");
    let coeff = m[r][c] / v;
    for (row_m, row_b) in m.iter().zip(base) {
        for (&vm, &vb) in row_m.iter().zip(row_b) {
            assert_eq!(vm, coeff * vb, "coefficient matrix is a clean multiple");
        }
    }
    coeff
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootSystem;

    fn tables(name: &str) -> CommutatorTables {
        let rs = RootSystem::parse(name).unwrap();
        CommutatorTables::new(&StructureConstants::new(&rs))
    }

    #[test]
    fn a2_single_term_matches_bracket() {
        let mut t = tables("A2");
        let sc = t.constants().clone();
        let f = t.formula(0, 1);
        assert_eq!(f.terms.len(), 1);
        let term = &f.terms[0];
        assert_eq!((term.i, term.j), (1, 1));
        assert_eq!(term.coeff, sc.n(0, 1).unwrap());
    }

    #[test]
    fn leading_coefficient_is_always_the_bracket_constant() {
        for name in ["A3", "B2", "C3", "G2"] {
            let mut t = tables(name);
            let sc = t.constants().clone();
            let rs = sc.system().clone();
            for a in 0..rs.num_roots() {
                for b in 0..rs.num_roots() {
                    if a == b || b == rs.negate(a) || rs.sum(a, b).is_none() {
                        continue;
                    }
                    let f = t.formula(a, b);
                    let lead = f.terms.first().expect("alpha+beta term present");
                    assert_eq!((lead.i, lead.j), (1, 1), "{name} ({a},{b})");
                    assert_eq!(lead.coeff, sc.n(a, b).unwrap(), "{name} ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn commuting_pairs_produce_empty_formulas() {
        let mut t = tables("A3");
        let rs = t.constants().system().clone();
        let mut seen_empty = false;
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if a == b || b == rs.negate(a) {
                    continue;
                }
                if rs.string_combinations(a, b).is_empty() {
                    assert!(t.formula(a, b).terms.is_empty());
                    seen_empty = true;
                }
            }
        }
        assert!(seen_empty);
    }

    #[test]
    fn b2_short_short_pair_has_double_term() {
        let t = tables("B2");
        let sc = t.constants().clone();
        let rs = sc.system().clone();
        let mut t = t;
        // Two short roots summing to a long root: terms (1,1) and, for the
        // doubled combination, coefficients of magnitude 1.
        let mut found = false;
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if a == b || b == rs.negate(a) {
                    continue;
                }
                let combos = rs.string_combinations(a, b);
                if combos.len() == 2 {
                    let f = t.formula(a, b);
                    assert_eq!(f.terms.len(), 2);
                    // The doubled slot is the short root of the pair.
                    let expect = if rs.is_long(b) { (2, 1) } else { (1, 2) };
                    assert_eq!((f.terms[1].i, f.terms[1].j), expect, "({a},{b})");
                    assert_eq!(f.terms[1].coeff.abs(), 1, "({a},{b})");
                    found = true;
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn g2_formulas_reach_coefficient_three() {
        let mut t = tables("G2");
        let rs = t.constants().system().clone();
        let mut max_len = 0;
        let mut max_coeff = 0i64;
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if a == b || b == rs.negate(a) {
                    continue;
                }
                let f = t.formula(a, b);
                max_len = max_len.max(f.terms.len());
                for term in &f.terms {
                    max_coeff = max_coeff.max(term.coeff.abs());
                }
            }
        }
        assert_eq!(max_len, 4);
        assert_eq!(max_coeff, 3);
    }

    #[test]
    fn f4_sample_pair_closes() {
        // The long-short simple pair in F4 exercises the larger adjoint.
        let mut t = tables("F4");
        let rs = t.constants().system().clone();
        assert!(rs.is_long(1) && !rs.is_long(2));
        assert!(rs.sum(1, 2).is_some());
        let f = t.formula(1, 2);
        assert!(!f.terms.is_empty());
        assert!(f.terms.iter().all(|term| term.coeff.abs() <= 2));
    }
}
