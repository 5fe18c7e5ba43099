//! Four-block unitriangular decompositions over small prime fields.
//!
//! The target shape is M = u1 v1 u2 v2 with u's upper and v's lower
//! unitriangular. Conjugating the problem, M has that shape exactly when
//! some pair (u1, v2) makes every leading principal minor of u1^-1 M v2^-1
//! equal to 1, which is one Doolittle pass per candidate. The groups in
//! scope are tiny, so the search enumerates both cones outright.

use crate::matrix::Matrix;
use crate::rings::{FieldDesc, RingDescriptor, RingError};
use crate::roots::{RootSystem, SystemKind};
use crate::steinberg::Word;

use super::gfp::{all_sl, all_unitriangular, unitriangular_lu, unitriangular_positions, GfMat};
use super::{a_root, FactorError};

/// An ordered upper/lower/upper/lower factorization, stored as words.
#[derive(Debug, Clone)]
pub struct FourBlocks {
    pub parts: [Word; 4],
}

impl FourBlocks {
    /// Total number of elementary letters across the four blocks.
    pub fn width(&self) -> usize {
        self.parts.iter().map(Word::len).sum()
    }

    /// All four blocks as one word, for evaluation.
    pub fn concatenated(&self) -> Result<Word, RingError> {
        let mut out = self.parts[0].clone();
        for p in &self.parts[1..] {
            out.extend(p)?;
        }
        Ok(out)
    }
}

/// A unipotent triangular byte matrix as a word in the matching cone of
/// A_{n-1} roots.
pub(crate) fn gf_unitriangular_word(
    rs: &RootSystem,
    ring: &RingDescriptor,
    m: &GfMat,
) -> Result<Word, RingError> {
    let mut w = Word::identity(ring);
    for (i, j, v) in unitriangular_positions(m) {
        w.push(a_root(rs, i, j), ring.from_int(v as i64))?;
    }
    Ok(w)
}

/// Exhaustive four-block decomposer for SL_n(F_p), n and p tiny.
pub struct BlockSearcher {
    p: u8,
    n: usize,
    rs: RootSystem,
    ring: RingDescriptor,
    uppers: Vec<GfMat>,
    uppers_inv: Vec<GfMat>,
    lowers: Vec<GfMat>,
    lowers_inv: Vec<GfMat>,
}

impl BlockSearcher {
    pub fn new(p: u8, n: usize) -> Result<Self, FactorError> {
        let field = FieldDesc::prime(p as u64)?;
        let uppers = all_unitriangular(p, n, true);
        let lowers = all_unitriangular(p, n, false);
        let uppers_inv = uppers.iter().map(GfMat::inverse).collect();
        let lowers_inv = lowers.iter().map(GfMat::inverse).collect();
        Ok(BlockSearcher {
            p,
            n,
            rs: RootSystem::new(SystemKind::A(n - 1)),
            ring: RingDescriptor::Field(field),
            uppers,
            uppers_inv,
            lowers,
            lowers_inv,
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    /// Every element of SL_n(F_p), in a fixed enumeration order.
    pub fn elements(&self) -> Vec<GfMat> {
        all_sl(self.p, self.n)
    }

    pub fn group_order(&self) -> usize {
        // p^(n(n-1)/2) * prod_{k=2..n} (p^k - 1)
        let p = self.p as usize;
        let mut order = p.pow((self.n * (self.n - 1) / 2) as u32);
        for k in 2..=self.n {
            order *= p.pow(k as u32) - 1;
        }
        order
    }

    /// Exact-arithmetic copy of a byte matrix.
    pub fn to_matrix(&self, m: &GfMat) -> Matrix {
        let mut out = Matrix::zero(&self.ring, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.ring.from_int(m.get(i, j) as i64));
            }
        }
        out
    }

    /// The raw byte blocks (upper, lower, upper, lower), first hit in the
    /// enumeration order of the two cones. Identity blocks are tried first.
    pub(crate) fn decompose_gf(&self, m: &GfMat) -> Result<[GfMat; 4], FactorError> {
        for (u1, u1i) in self.uppers.iter().zip(&self.uppers_inv) {
            let left = u1i.mul(m);
            for (v2, v2i) in self.lowers.iter().zip(&self.lowers_inv) {
                let probe = left.mul(v2i);
                if let Some((l, u)) = unitriangular_lu(&probe) {
                    return Ok([*u1, l, u, *v2]);
                }
            }
        }
        Err(FactorError::CoverageGap(format!(
            "no four-block split for an element of SL_{}(F_{})",
            self.n, self.p
        )))
    }

    /// Four-block decomposition as words, verified to rebuild the input.
    pub fn decompose(&self, m: &GfMat) -> Result<FourBlocks, FactorError> {
        let [b0, b1, b2, b3] = self.decompose_gf(m)?;
        debug_assert!(b0.is_upper_uni() && b2.is_upper_uni());
        debug_assert!(b1.is_lower_uni() && b3.is_lower_uni());
        debug_assert_eq!(b0.mul(&b1).mul(&b2).mul(&b3), *m);
        let parts = [
            gf_unitriangular_word(&self.rs, &self.ring, &b0)?,
            gf_unitriangular_word(&self.rs, &self.ring, &b1)?,
            gf_unitriangular_word(&self.rs, &self.ring, &b2)?,
            gf_unitriangular_word(&self.rs, &self.ring, &b3)?,
        ];
        Ok(FourBlocks { parts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{GroupRep, RepKind};
    use crate::liealg::StructureConstants;

    #[test]
    fn sl2_f3_decomposes_exhaustively() {
        let searcher = BlockSearcher::new(3, 2).unwrap();
        let rep = GroupRep::new(
            &StructureConstants::new(searcher.system()),
            RepKind::StandardSL,
        )
        .unwrap();
        let els = searcher.elements();
        assert_eq!(els.len(), searcher.group_order());
        for m in &els {
            let blocks = searcher.decompose(m).unwrap();
            let rebuilt = blocks.concatenated().unwrap().eval(&rep).unwrap();
            assert_eq!(rebuilt, searcher.to_matrix(m));
        }
    }

    #[test]
    fn blocks_follow_the_sign_pattern() {
        let searcher = BlockSearcher::new(3, 3).unwrap();
        let rs = searcher.system();
        let m = GfMat::from_entries(3, 3, &[0, 1, 0, 2, 0, 0, 0, 0, 1]);
        assert_eq!(m.det(), 1);
        let blocks = searcher.decompose(&m).unwrap();
        for (k, part) in blocks.parts.iter().enumerate() {
            for letter in part.letters() {
                assert_eq!(
                    rs.is_positive(letter.root),
                    k % 2 == 0,
                    "block {k} letter sign"
                );
            }
        }
    }

    #[test]
    fn identity_blocks_win_when_minors_are_one() {
        let searcher = BlockSearcher::new(3, 3).unwrap();
        // Already LU-decomposable: the identity pair must be selected.
        let m = GfMat::from_entries(3, 3, &[1, 2, 0, 1, 0, 1, 0, 2, 0]);
        assert_eq!(m.det(), 1);
        let blocks = searcher.decompose(&m).unwrap();
        assert!(blocks.parts[0].is_empty());
        assert!(blocks.parts[3].is_empty());
        assert!(blocks.width() <= 6);
    }
}
