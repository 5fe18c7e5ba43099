//! Adjoint representation on the integral Chevalley basis.
//!
//! Basis layout: index r < 2m is the root vector e_r (root indexing), and
//! index 2m + i is the Cartan element h_i for the i-th simple root. All
//! matrices are exact integer matrices.

use super::{int_is_zero, int_mul, int_zero, IntMat, StructureConstants};
use crate::matrix::Matrix;
use crate::rings::{RingElement, RingError};

#[derive(Clone, Debug)]
pub struct AdjointRep {
    consts: StructureConstants,
}

impl AdjointRep {
    pub fn new(consts: &StructureConstants) -> Self {
        AdjointRep {
            consts: consts.clone(),
        }
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.consts
    }

    pub fn dim(&self) -> usize {
        let rs = self.consts.system();
        rs.num_roots() + rs.rank()
    }

    /// Matrix of ad(e_gamma): column b holds the image of basis vector b.
    pub fn ad_root(&self, gamma: usize) -> IntMat {
        let rs = self.consts.system();
        let m = rs.num_positive();
        let dim = self.dim();
        let mut out = int_zero(dim);
        // delta walks the column index, out is indexed by row first
        #[allow(clippy::needless_range_loop)]
        for delta in 0..2 * m {
            if delta == rs.negate(gamma) {
                // [e_gamma, e_{-gamma}] = h_gamma in coroot coordinates.
                for (i, c) in self.consts.coroot_coords(gamma).iter().enumerate() {
                    out[2 * m + i][delta] = *c;
                }
            } else if let Some(sum) = rs.sum(gamma, delta) {
                out[sum][delta] = self.consts.n(gamma, delta).unwrap();
            }
        }
        for i in 0..rs.rank() {
            // [e_gamma, h_i] = -<gamma, alpha_i^vee> e_gamma.
            out[gamma][2 * m + i] = -rs.pairing(gamma, i);
        }
        out
    }

    /// Matrix of ad(h) for h given in simple-coroot coordinates.
    pub fn ad_cartan(&self, coords: &[i64]) -> IntMat {
        let rs = self.consts.system();
        let m = rs.num_positive();
        let mut out = int_zero(self.dim());
        for (beta, row) in out.iter_mut().enumerate().take(2 * m) {
            row[beta] = (0..rs.rank()).map(|i| coords[i] * rs.pairing(beta, i)).sum();
        }
        out
    }

    /// The unipotent exp(r ad e_gamma) as a matrix over `r`'s ring.
    /// ad e_gamma is nilpotent of index at most 4, and the divided powers
    /// (ad e)^k / k! stay integral.
    pub fn exp_ad(&self, gamma: usize, r: &RingElement) -> Result<Matrix, RingError> {
        let layers = self.exp_layers(gamma);
        let ring = r.ring().clone();
        let dim = self.dim();
        let mut out = Matrix::identity(&ring, dim);
        let mut rpow = ring.one();
        for layer in &layers[1..] {
            rpow = rpow.mul(r)?;
            for (i, row) in layer.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if v != 0 {
                        let term = ring.from_int(v).mul(&rpow)?;
                        out.set(i, j, out.get(i, j).add(&term)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Divided powers (ad e_gamma)^k / k! for k = 0..=3, integral by
    /// construction; the fourth power must vanish.
    pub fn exp_layers(&self, gamma: usize) -> Vec<IntMat> {
        let a = self.ad_root(gamma);
        let a2 = super::int_scale_div(&int_mul(&a, &a), 2);
        let a3 = super::int_scale_div(&int_mul(&a2, &a), 3);
        let a4 = int_mul(&a3, &a);
        assert!(int_is_zero(&a4), "ad of a root vector has nilpotency <= 4");
        let mut id = int_zero(self.dim());
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = 1;
        }
        vec![id, a, a2, a3]
    }
}
