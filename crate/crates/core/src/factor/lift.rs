//! Lifting four-block coverage through a rank drop, instantiated for
//! SL_4(F_2) on top of the SL_3(F_2) block table.
//!
//! Dropping the last simple root of A_3 splits the positive roots into an
//! A_2 head and the cone Sigma of roots through the dropped node; in the
//! standard representation the head is the top-left 3x3 block and the two
//! signs of Sigma are the last column and the last row. The block subgroup
//! normalizes each sign of the cone, which gives an exact rewriting
//!
//!   (A1 A2 A3 A4) c1 c2 c3 c4 = (A1 c1')(A2 c2')(A3 c3')(A4 c4'),
//!   c_i' = S_i c_i S_i^-1,  S_i = A_{i+1} .. A_4,
//!
//! where each A_i c_i' is a full triangular block of the parent group. Any
//! determinant-one matrix reaches the left-hand shape by solving one linear
//! condition on its bottom row, so the lift is closed form except for the
//! table entry A = A1 A2 A3 A4, which comes from the exhaustive rank-two
//! search.

use std::collections::{HashMap, HashSet};

use crate::matrix::Matrix;
use crate::rings::RingDescriptor;
use crate::roots::RootSystem;

use super::blocks::{gf_unitriangular_word, BlockSearcher, FourBlocks};
use super::gfp::{all_sl, all_unitriangular, GfMat};
use super::FactorError;

pub struct RankLift {
    rs: RootSystem,
    ring: RingDescriptor,
    table: HashMap<u64, [GfMat; 4]>,
}

/// blockdiag(a, 1) with a of size 3.
fn embed(a: &GfMat) -> GfMat {
    let mut e = GfMat::identity(2, 4);
    for i in 0..3 {
        for j in 0..3 {
            e.set(i, j, a.get(i, j));
        }
    }
    e
}

/// Column-cone element I + sum z_i E_{i,3}.
fn col_cone(z: &[u8; 3]) -> GfMat {
    let mut c = GfMat::identity(2, 4);
    for (i, v) in z.iter().enumerate() {
        c.set(i, 3, *v);
    }
    c
}

/// Row-cone element I + sum w_j E_{3,j}.
fn row_cone(w: &[u8; 3]) -> GfMat {
    let mut c = GfMat::identity(2, 4);
    for (j, v) in w.iter().enumerate() {
        c.set(3, j, *v);
    }
    c
}

fn top_left(m: &GfMat) -> GfMat {
    let mut a = GfMat::identity(2, 3);
    for i in 0..3 {
        for j in 0..3 {
            a.set(i, j, m.get(i, j));
        }
    }
    a
}

impl RankLift {
    /// Builds the rank-two block table by exhaustive search (168 entries)
    /// and keeps it for closed-form lifting.
    pub fn new() -> Result<Self, FactorError> {
        let searcher = BlockSearcher::new(2, 3)?;
        let mut table = HashMap::new();
        for m in searcher.elements() {
            table.insert(m.key(), searcher.decompose_gf(&m)?);
        }
        let four = BlockSearcher::new(2, 4)?;
        Ok(RankLift {
            rs: four.system().clone(),
            ring: four.ring().clone(),
            table,
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn elements(&self) -> Vec<GfMat> {
        all_sl(2, 4)
    }

    pub fn to_matrix(&self, m: &GfMat) -> Matrix {
        let mut out = Matrix::zero(&self.ring, 4);
        for i in 0..4 {
            for j in 0..4 {
                out.set(i, j, self.ring.from_int(m.get(i, j) as i64));
            }
        }
        out
    }

    /// Lift a determinant-one 4x4 matrix over F_2 to four triangular
    /// blocks. Closed form except for the rank-two table lookup.
    pub fn decompose(&self, m: &GfMat) -> Result<FourBlocks, FactorError> {
        assert!(m.n == 4 && m.p == 2 && m.det() == 1);

        // Step 1: one cone letter makes the corner entry 1. The bottom row
        // of an invertible matrix is nonzero, so a pivot always exists.
        let mut c3 = GfMat::identity(2, 4);
        if m.get(3, 3) != 1 {
            let j = (0..3)
                .find(|&j| m.get(3, j) == 1)
                .expect("invertible matrix has a nonzero bottom row");
            c3.set(j, 3, 1);
        }
        let c4 = GfMat::identity(2, 4);
        // Cone elements square to the identity over F_2.
        let m2 = m.mul(&c4).mul(&c3);
        debug_assert_eq!(m2.get(3, 3), 1);

        // Step 2: strip the bottom row, then the last column.
        let w2 = [m2.get(3, 0), m2.get(3, 1), m2.get(3, 2)];
        let c2 = row_cone(&w2);
        let m3 = m2.mul(&c2);
        debug_assert!((0..3).all(|j| m3.get(3, j) == 0) && m3.get(3, 3) == 1);
        let a = top_left(&m3);
        debug_assert_eq!(a.det(), 1);
        let a_inv = a.inverse();
        let mut z1 = [0u8; 3];
        for (i, z) in z1.iter_mut().enumerate() {
            let mut acc = 0u8;
            for k in 0..3 {
                acc ^= a_inv.get(i, k) & m3.get(k, 3);
            }
            *z = acc;
        }
        let c1 = col_cone(&z1);
        let d = embed(&a);
        debug_assert_eq!(d.mul(&c1).mul(&c2).mul(&c3).mul(&c4), *m);

        // Step 3: table split of the head, then the exact interleave.
        let parts = self.table.get(&a.key()).ok_or_else(|| {
            FactorError::CoverageGap("rank-two table misses a block".into())
        })?;
        let e: Vec<GfMat> = parts.iter().map(embed).collect();
        let chain = [c1, c2, c3, c4];
        let mut blocks = Vec::with_capacity(4);
        for i in 0..4 {
            let mut suffix = GfMat::identity(2, 4);
            for s in &e[i + 1..] {
                suffix = suffix.mul(s);
            }
            let conj = suffix.mul(&chain[i]).mul(&suffix.inverse());
            let v = e[i].mul(&conj);
            if i % 2 == 0 {
                assert!(v.is_upper_uni(), "interleave must stay triangular");
            } else {
                assert!(v.is_lower_uni(), "interleave must stay triangular");
            }
            blocks.push(v);
        }
        debug_assert_eq!(
            blocks[0].mul(&blocks[1]).mul(&blocks[2]).mul(&blocks[3]),
            *m
        );

        Ok(FourBlocks {
            parts: [
                gf_unitriangular_word(&self.rs, &self.ring, &blocks[0])?,
                gf_unitriangular_word(&self.rs, &self.ring, &blocks[1])?,
                gf_unitriangular_word(&self.rs, &self.ring, &blocks[2])?,
                gf_unitriangular_word(&self.rs, &self.ring, &blocks[3])?,
            ],
        })
    }
}

/// Independent coverage check: the size of the product set
/// U+ U- U+ U- inside SL_4(F_2), computed by raw set multiplication with
/// no factorization machinery involved. Returns (reached, group order).
pub fn cone_product_coverage() -> (usize, usize) {
    let uppers = all_unitriangular(2, 4, true);
    let lowers = all_unitriangular(2, 4, false);
    let mut cur: Vec<GfMat> = vec![GfMat::identity(2, 4)];
    for stage in 0..4 {
        let factors = if stage % 2 == 0 { &uppers } else { &lowers };
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for m in &cur {
            for f in factors {
                let prod = m.mul(f);
                if seen.insert(prod.key()) {
                    next.push(prod);
                }
            }
        }
        cur = next;
    }
    (cur.len(), all_sl(2, 4).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{GroupRep, RepKind};
    use crate::liealg::StructureConstants;

    #[test]
    fn product_set_reaches_the_whole_group() {
        let (reached, order) = cone_product_coverage();
        assert_eq!(order, 20160);
        assert_eq!(reached, order);
    }

    #[test]
    fn lift_round_trips_on_a_deterministic_sample() {
        let lift = RankLift::new().unwrap();
        let rep = GroupRep::new(
            &StructureConstants::new(lift.system()),
            RepKind::StandardSL,
        )
        .unwrap();
        let els = lift.elements();
        assert_eq!(els.len(), 20160);
        // Every 97th element exercises all the shapes without the full
        // exhaustive cost, which the acceptance suite runs separately.
        for m in els.iter().step_by(97) {
            let blocks = lift.decompose(m).unwrap();
            let rebuilt = blocks.concatenated().unwrap().eval(&rep).unwrap();
            assert_eq!(rebuilt, lift.to_matrix(m));
            for (k, part) in blocks.parts.iter().enumerate() {
                for letter in part.letters() {
                    assert_eq!(lift.system().is_positive(letter.root), k % 2 == 0);
                }
            }
        }
    }

    #[test]
    fn lift_width_stays_within_four_cones() {
        let lift = RankLift::new().unwrap();
        for m in lift.elements().iter().step_by(211) {
            let blocks = lift.decompose(m).unwrap();
            // Each block has at most |Sigma+ union A_2 positives| = 6 letters.
            assert!(blocks.width() <= 24);
        }
    }
}
