//! Factoring special linear matrices into elementary generators.
//!
//! Every routine here returns a `Word` whose evaluation in the standard
//! representation reproduces the input matrix exactly. The algorithms keep
//! no hidden normal form: the round trip through `Word::eval` is the only
//! contract, and the tests and the acceptance suite check it directly.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::groups::GroupRep;
use crate::matrix::Matrix;
use crate::rings::{RingDescriptor, RingElement, RingError};
use crate::roots::{RootCoords, RootSystem, SystemKind};
use crate::sample::{self, SampleBounds};
use crate::steinberg::{h_word, Word};

mod gfp;

pub use gfp::GfMat;

pub mod blocks;
pub mod lift;

#[derive(Debug, Error)]
pub enum FactorError {
    #[error("expected a square matrix of size {expected}, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("matrix determinant must be 1")]
    DeterminantNotOne,
    #[error("no decomposition found: {0}")]
    CoverageGap(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Root index of e_i - e_j inside A_{n-1}.
fn a_root(rs: &RootSystem, i: usize, j: usize) -> usize {
    debug_assert!(i != j);
    let (lo, hi) = (i.min(j), i.max(j));
    let mut c = RootCoords::new();
    c.resize(rs.rank(), 0);
    for k in lo..hi {
        c[k] = 1;
    }
    let idx = rs
        .index_of_coords(&c)
        .expect("consecutive simple sums are roots");
    if i < j {
        idx
    } else {
        rs.negate(idx)
    }
}

fn check_special(m: &Matrix, n: usize) -> Result<(), FactorError> {
    if m.size() != n {
        return Err(FactorError::WrongSize { expected: n, got: m.size() });
    }
    if !m.determinant()?.is_one() {
        return Err(FactorError::DeterminantNotOne);
    }
    Ok(())
}

/// Tracks row operations applied on the left so the inverse prefix can be
/// replayed as word letters: if L_k .. L_1 M = T then M = prod x(-q_i) T.
struct RowOps {
    rs: RootSystem,
    applied: Vec<(usize, RingElement)>,
}

impl RowOps {
    fn new(rs: RootSystem) -> Self {
        RowOps { rs, applied: Vec::new() }
    }

    /// row_i += q * row_j, recorded.
    fn add_row(&mut self, cur: &mut Matrix, i: usize, j: usize, q: &RingElement) -> Result<(), RingError> {
        if q.is_zero() {
            return Ok(());
        }
        for col in 0..cur.size() {
            let v = cur.get(i, col).add(&q.mul(cur.get(j, col))?)?;
            cur.set(i, col, v);
        }
        self.applied.push((a_root(&self.rs, i, j), q.clone()));
        Ok(())
    }

    /// row_i <- row_j, row_j <- -row_i, as three recorded operations.
    fn swap_rows(&mut self, cur: &mut Matrix, i: usize, j: usize) -> Result<(), RingError> {
        let one = cur.ring().one();
        self.add_row(cur, i, j, &one)?;
        self.add_row(cur, j, i, &one.neg())?;
        self.add_row(cur, i, j, &one)?;
        Ok(())
    }

    /// The word undoing the recorded prefix, in application order.
    fn into_word(self, ring: &RingDescriptor) -> Result<Word, RingError> {
        let mut w = Word::identity(ring);
        for (root, q) in self.applied {
            w.push(root, q.neg())?;
        }
        Ok(w)
    }
}

/// Factor a 2x2 determinant-one matrix into elementary generators of the
/// rank-one system. Over a field the word has at most four letters; over a
/// Euclidean ring the head is a gcd descent on the first column and the
/// tail spends six letters on the diagonal unit plus one on the shear.
pub fn factor_sl2(m: &Matrix) -> Result<Word, FactorError> {
    check_special(m, 2)?;
    let ring = m.ring().clone();
    let rs = RootSystem::new(SystemKind::A(1));
    let field_like = matches!(
        ring,
        RingDescriptor::Field(_) | RingDescriptor::RationalFn(_)
    );
    if field_like {
        return sl2_field_word(&rs, m);
    }
    let up = 0;

    let mut cur = m.clone();
    let mut ops = RowOps::new(rs.clone());
    loop {
        let c = cur.get(1, 0).clone();
        if c.is_zero() {
            break;
        }
        let a = cur.get(0, 0).clone();
        if a.is_zero() {
            // Bring the nonzero entry up; the next pass kills c outright.
            let one = ring.one();
            ops.add_row(&mut cur, 0, 1, &one)?;
            continue;
        }
        if a.euclid_size() > c.euclid_size() {
            let (q, _) = a.euclid_divmod(&c)?;
            ops.add_row(&mut cur, 0, 1, &q.neg())?;
        } else {
            let (q, _) = c.euclid_divmod(&a)?;
            ops.add_row(&mut cur, 1, 0, &q.neg())?;
        }
    }
    // cur = [[u, b], [0, u^-1]] with u a unit since the determinant is 1.
    let u = cur.get(0, 0).clone();
    let shear = u.inv()?.mul(cur.get(0, 1))?;
    let mut word = ops.into_word(&ring)?;
    word.extend(&h_word(&rs, up, &u)?)?;
    word.push(up, shear)?;
    Ok(word)
}

/// Closed form over a field: three letters when the lower-left entry is
/// nonzero, and one extra letter to move into that position otherwise.
fn sl2_field_word(rs: &RootSystem, m: &Matrix) -> Result<Word, FactorError> {
    let ring = m.ring().clone();
    let up = 0;
    let down = rs.negate(up);
    let one = ring.one();
    let a = m.get(0, 0).clone();
    let b = m.get(0, 1).clone();
    let c = m.get(1, 0).clone();
    let d = m.get(1, 1).clone();

    let mut word = Word::identity(&ring);
    if !c.is_zero() {
        let cinv = c.inv()?;
        word.push(up, a.sub(&one)?.mul(&cinv)?)?;
        word.push(down, c)?;
        word.push(up, d.sub(&one)?.mul(&cinv)?)?;
        return Ok(word);
    }
    if a.is_one() {
        word.push(up, b)?;
        return Ok(word);
    }
    // c = 0 and a != 1: slide the unit d into the corner, recurse once.
    // N = M x_-(1) has lower-left d != 0, and M = N x_-(-1).
    let n = Matrix::from_rows(
        &ring,
        vec![vec![a.add(&b)?, b], vec![d.clone(), d]],
    )?;
    let mut out = sl2_field_word(rs, &n)?;
    out.push(down, one.neg())?;
    word.extend(&out)?;
    Ok(word)
}

/// Factor an n x n determinant-one matrix over a Euclidean ring into
/// elementary generators of A_{n-1}. Columns are reduced left to right by
/// gcd descent (every column gcd is a unit because it divides the minor
/// chain), the strict upper part is cleared bottom-up, and the remaining
/// unit diagonal telescopes into six-letter diagonal words.
pub fn factor_sln(m: &Matrix) -> Result<Word, FactorError> {
    let n = m.size();
    if n < 2 {
        return Err(FactorError::WrongSize { expected: 2, got: n });
    }
    check_special(m, n)?;
    let ring = m.ring().clone();
    let rs = RootSystem::new(SystemKind::A(n - 1));
    if n == 2 {
        return factor_sl2(m);
    }

    let mut cur = m.clone();
    let mut ops = RowOps::new(rs.clone());

    for col in 0..n - 1 {
        if cur.get(col, col).is_zero() {
            let k = (col + 1..n)
                .find(|&k| !cur.get(k, col).is_zero())
                .expect("an invertible matrix has no zero column tail");
            ops.swap_rows(&mut cur, col, k)?;
        }
        for k in col + 1..n {
            loop {
                let entry = cur.get(k, col).clone();
                if entry.is_zero() {
                    break;
                }
                let pivot = cur.get(col, col).clone();
                let (q, r) = entry.euclid_divmod(&pivot)?;
                ops.add_row(&mut cur, k, col, &q.neg())?;
                if r.is_zero() {
                    break;
                }
                // Remainder is strictly smaller: continue the gcd with the
                // roles exchanged so the pivot keeps shrinking.
                ops.swap_rows(&mut cur, col, k)?;
            }
        }
    }

    // Clear above the diagonal, rightmost column first, so each used row
    // is already reduced to its diagonal entry.
    for j in (1..n).rev() {
        let pivot_inv = cur.get(j, j).inv()?;
        for i in 0..j {
            let e = cur.get(i, j).clone();
            if !e.is_zero() {
                ops.add_row(&mut cur, i, j, &e.mul(&pivot_inv)?.neg())?;
            }
        }
    }

    let mut word = ops.into_word(&ring)?;
    // diag(v_0 .. v_{n-1}) = prod_i h_{alpha_i}(v_0 .. v_i); the last slot
    // closes because the determinant is 1.
    let mut partial = ring.one();
    for i in 0..n - 1 {
        partial = partial.mul(cur.get(i, i))?;
        word.extend(&h_word(&rs, rs.simple(i), &partial)?)?;
    }
    Ok(word)
}

/// A random determinant-one matrix, produced by evaluating a word with
/// uniformly chosen roots and ring parameters. Used by the width studies.
pub fn random_sl_matrix<R: Rng>(
    rep: &GroupRep,
    ring: &RingDescriptor,
    rng: &mut R,
    letters: usize,
    bounds: &SampleBounds,
) -> Result<Matrix, RingError> {
    let rs = rep.system();
    let mut out = Matrix::identity(ring, rep.dim());
    for _ in 0..letters {
        let root = rng.gen_range(0..rs.num_roots());
        let param = sample::element(ring, rng, bounds);
        if param.is_zero() {
            continue;
        }
        out = out.mul(&rep.root_element(root, &param)?)?;
    }
    Ok(out)
}

/// Width bookkeeping for factorization runs.
#[derive(Debug, Clone, Default, Serialize)]
pub struct WidthHistogram {
    pub counts: BTreeMap<usize, usize>,
    pub samples: usize,
}

/// Elementary letters sufficient for one rank-one stage over an arithmetic
/// base ring; drawn as a reference line next to observed widths.
pub const RANK_ONE_WIDTH_BOUND: usize = 65;

impl WidthHistogram {
    pub fn new() -> Self {
        WidthHistogram::default()
    }

    pub fn record(&mut self, width: usize) {
        *self.counts.entry(width).or_insert(0) += 1;
        self.samples += 1;
    }

    pub fn max(&self) -> usize {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    pub fn mean(&self) -> f64 {
        if self.samples == 0 {
            return 0.0;
        }
        let total: usize = self.counts.iter().map(|(w, c)| w * c).sum();
        total as f64 / self.samples as f64
    }

    /// Text histogram, one row per observed width, with named reference
    /// widths appended so the observed spread can be read against them.
    pub fn render(&self, references: &[(&str, usize)]) -> String {
        let mut out = String::new();
        let peak = self.counts.values().copied().max().unwrap_or(1);
        for (w, c) in &self.counts {
            let bar = "#".repeat((c * 40).div_ceil(peak));
            out.push_str(&format!("{w:>4} | {c:>4} {bar}\n"));
        }
        out.push_str(&format!(
            "samples {}, mean {:.1}, max {}\n",
            self.samples,
            self.mean(),
            self.max()
        ));
        for (label, value) in references {
            let status = if self.max() <= *value { "under" } else { "over" };
            out.push_str(&format!("reference {label} = {value} ({status})\n"));
        }
        out
    }
}
