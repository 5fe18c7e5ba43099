//! Concrete Chevalley groups: matrix representations of the root
//! unipotents x_gamma(r) and the derived elements w_gamma(u), h_gamma(u).
//!
//! Three representations cover every system we need. The standard ones
//! (special linear for type A, symplectic for type C) are faithful and
//! have nilpotency-two root matrices, so x_gamma(r) = 1 + r rho(e_gamma).
//! The adjoint representation works for every type but kills the center.
//!
//! Standard representations are not transcribed root by root: only the
//! simple root vectors are written down, and the rest follow by the
//! extraspecial induction of [`crate::liealg::extend_rep`]. Exactness of
//! every division and the bracket-compatibility tests certify that the
//! matrices realize the same structure constants as the abstract algebra.

use crate::liealg::adjoint::AdjointRep;
use crate::liealg::commutator::CommutatorTables;
use crate::liealg::{extend_rep, int_is_zero, int_mul, IntMat, StructureConstants};
use crate::matrix::Matrix;
use crate::rings::{RingDescriptor, RingElement, RingError};
use crate::roots::SystemKind;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("representation {0:?} is not defined for {1}")]
    UnsupportedRep(RepKind, String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    /// Adjoint action on the Lie algebra; defined for every type, kernel
    /// is the center of the simply connected group.
    Adjoint,
    /// Natural (l+1)-dimensional representation for type A; faithful.
    StandardSL,
    /// Natural 2l-dimensional symplectic representation for type C;
    /// faithful.
    StandardSp,
}

#[derive(Clone)]
pub struct GroupRep {
    consts: StructureConstants,
    kind: RepKind,
    dim: usize,
    /// rho(e_gamma) for every root, standard representations only.
    root_mats: Option<Vec<IntMat>>,
    adjoint: Option<AdjointRep>,
}

impl GroupRep {
    pub fn new(consts: &StructureConstants, kind: RepKind) -> Result<Self, GroupError> {
        let rs = consts.system();
        let l = rs.rank();
        match kind {
            RepKind::Adjoint => Ok(GroupRep {
                consts: consts.clone(),
                kind,
                dim: rs.num_roots() + l,
                root_mats: None,
                adjoint: Some(AdjointRep::new(consts)),
            }),
            RepKind::StandardSL => {
                if !matches!(rs.kind(), SystemKind::A(_)) {
                    return Err(GroupError::UnsupportedRep(kind, rs.kind().to_string()));
                }
                let n = l + 1;
                let mut pos = Vec::new();
                let mut neg = Vec::new();
                for i in 0..l {
                    pos.push(unit_mat(n, &[(i, i + 1, 1)]));
                    neg.push(unit_mat(n, &[(i + 1, i, 1)]));
                }
                Self::standard(consts, kind, n, pos, neg)
            }
            RepKind::StandardSp => {
                if !matches!(rs.kind(), SystemKind::C(_)) {
                    return Err(GroupError::UnsupportedRep(kind, rs.kind().to_string()));
                }
                let n = 2 * l;
                let mut pos = Vec::new();
                let mut neg = Vec::new();
                // Antidiagonal symplectic form: the short simples pair two
                // elementary moves; the long simple is a single corner move.
                for i in 0..l - 1 {
                    pos.push(unit_mat(n, &[(i, i + 1, 1), (n - 2 - i, n - 1 - i, -1)]));
                    neg.push(unit_mat(n, &[(i + 1, i, 1), (n - 1 - i, n - 2 - i, -1)]));
                }
                pos.push(unit_mat(n, &[(l - 1, l, 1)]));
                neg.push(unit_mat(n, &[(l, l - 1, 1)]));
                Self::standard(consts, kind, n, pos, neg)
            }
        }
    }

    fn standard(
        consts: &StructureConstants,
        kind: RepKind,
        n: usize,
        pos: Vec<IntMat>,
        neg: Vec<IntMat>,
    ) -> Result<Self, GroupError> {
        let mats = extend_rep(consts, &pos, &neg);
        for m in &mats {
            assert!(
                int_is_zero(&int_mul(m, m)),
                "standard root matrices square to zero"
            );
        }
        Ok(GroupRep {
            consts: consts.clone(),
            kind,
            dim: n,
            root_mats: Some(mats),
            adjoint: None,
        })
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.consts
    }

    pub fn system(&self) -> &crate::roots::RootSystem {
        self.consts.system()
    }

    /// The root unipotent x_gamma(r).
    pub fn root_element(&self, gamma: usize, r: &RingElement) -> Result<Matrix, RingError> {
        if let Some(ad) = &self.adjoint {
            return ad.exp_ad(gamma, r);
        }
        let ring = r.ring().clone();
        let m = &self.root_mats.as_ref().unwrap()[gamma];
        let mut out = Matrix::identity(&ring, self.dim);
        for (i, row) in m.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    let term = ring.from_int(v).mul(r)?;
                    out.set(i, j, out.get(i, j).add(&term)?);
                }
            }
        }
        Ok(out)
    }

    /// w_gamma(u) = x_gamma(u) x_{-gamma}(-u^-1) x_gamma(u) for a unit u.
    pub fn w_element(&self, gamma: usize, u: &RingElement) -> Result<Matrix, RingError> {
        let rs = self.consts.system();
        let inv = u.inv()?;
        let a = self.root_element(gamma, u)?;
        let b = self.root_element(rs.negate(gamma), &inv.neg())?;
        a.mul(&b)?.mul(&a)
    }

    /// h_gamma(u) = w_gamma(u) w_gamma(1)^-1; note w_gamma(1)^-1 = w_gamma(-1).
    pub fn h_element(&self, gamma: usize, u: &RingElement) -> Result<Matrix, RingError> {
        let ring = u.ring().clone();
        let w1 = self.w_element(gamma, &ring.from_int(-1))?;
        self.w_element(gamma, u)?.mul(&w1)
    }

    /// Both sides of the commutator formula for x_alpha(r), x_beta(s);
    /// returns true when they agree in this representation.
    pub fn commutator_holds(
        &self,
        tables: &mut CommutatorTables,
        alpha: usize,
        beta: usize,
        r: &RingElement,
        s: &RingElement,
    ) -> Result<bool, RingError> {
        let xa = self.root_element(alpha, r)?;
        let xb = self.root_element(beta, s)?;
        let xa_inv = self.root_element(alpha, &r.neg())?;
        let xb_inv = self.root_element(beta, &s.neg())?;
        let lhs = xa.mul(&xb)?.mul(&xa_inv)?.mul(&xb_inv)?;

        let ring = r.ring().clone();
        let mut rhs = Matrix::identity(&ring, self.dim);
        for term in &tables.formula(alpha, beta).terms {
            let coeff = ring
                .from_int(term.coeff)
                .mul(&r.pow(term.i as i64)?)?
                .mul(&s.pow(term.j as i64)?)?;
            rhs = rhs.mul(&self.root_element(term.root, &coeff)?)?;
        }
        Ok(lhs == rhs)
    }

    /// The bilinear form preserved by the standard symplectic
    /// representation: antidiagonal, +1 in the upper half and -1 in the
    /// lower. None for representations that do not fix a form here.
    pub fn symplectic_form(&self, ring: &RingDescriptor) -> Option<Matrix> {
        if self.kind != RepKind::StandardSp {
            return None;
        }
        let n = self.dim;
        let mut j = Matrix::zero(ring, n);
        for i in 0..n / 2 {
            j.set(i, n - 1 - i, ring.one());
            j.set(n - 1 - i, i, ring.from_int(-1));
        }
        Some(j)
    }

    /// Whether a matrix commutes with every root unipotent over a finite
    /// field (checked against all parameters, so this is genuine
    /// centrality of the image subgroup).
    pub fn is_central(&self, m: &Matrix) -> Result<bool, RingError> {
        let ring = m.ring().clone();
        let rs = self.consts.system().clone();
        let elements = ring.elements()?;
        for gamma in 0..rs.num_roots() {
            for r in &elements {
                if r.is_zero() {
                    continue;
                }
                let x = self.root_element(gamma, r)?;
                if m.mul(&x)? != x.mul(m)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn unit_mat(n: usize, entries: &[(usize, usize, i64)]) -> IntMat {
    let mut m = vec![vec![0i64; n]; n];
    for &(i, j, v) in entries {
        m[i][j] = v;
    }
    m
}

/// Product of root elements over a whole set of roots in a fixed order,
/// with parameters supplied per root.
pub fn product_over_roots(
    rep: &GroupRep,
    ring: &RingDescriptor,
    items: &[(usize, RingElement)],
) -> Result<Matrix, RingError> {
    let mut out = Matrix::identity(ring, rep.dim());
    for (gamma, r) in items {
        out = out.mul(&rep.root_element(*gamma, r)?)?;
    }
    Ok(out)
}
