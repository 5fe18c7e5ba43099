//! Words in root unipotents: the syntactic side of the Chevalley group.
//!
//! A [`Word`] is a product of letters x_gamma(r). Words are what the
//! factorization and width machinery produces; their correctness is always
//! checked by evaluating through a concrete representation. The defining
//! relations (parameter additivity, the commutator formula, and the extra
//! rank-one conjugation rule) have verifiers here, and [`collect`]
//! implements collection from the left for words supported on a closed set
//! of roots.

use crate::groups::{GroupRep, RepKind};
use crate::liealg::commutator::CommutatorTables;
use crate::liealg::StructureConstants;
use crate::matrix::Matrix;
use crate::rings::{RingDescriptor, RingElement, RingError};
use crate::roots::SystemKind;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SteinbergError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] crate::groups::GroupError),
    #[error("collection produced a root outside the supplied order")]
    RootOutsideOrder(usize),
    #[error("collection exceeded the letter cap of {0}")]
    CollectionOverflow(usize),
}

/// One elementary factor x_root(param).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    pub root: usize,
    pub param: RingElement,
}

/// A product of elementary root unipotents, freely reduced on the fly:
/// adjacent letters with the same root merge by parameter additivity and
/// zero parameters vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    ring: RingDescriptor,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(ring: &RingDescriptor) -> Self {
        Word {
            ring: ring.clone(),
            letters: Vec::new(),
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Width of the word as a product of elementary factors.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, root: usize, param: RingElement) -> Result<(), RingError> {
        if param.is_zero() {
            return Ok(());
        }
        if let Some(last) = self.letters.last_mut() {
            if last.root == root {
                let sum = last.param.add(&param)?;
                if sum.is_zero() {
                    self.letters.pop();
                } else {
                    last.param = sum;
                }
                return Ok(());
            }
        }
        self.letters.push(Letter { root, param });
        Ok(())
    }

    pub fn extend(&mut self, other: &Word) -> Result<(), RingError> {
        for l in &other.letters {
            self.push(l.root, l.param.clone())?;
        }
        Ok(())
    }

    pub fn inverse(&self) -> Word {
        let mut out = Word::identity(&self.ring);
        for l in self.letters.iter().rev() {
            out.letters.push(Letter {
                root: l.root,
                param: l.param.neg(),
            });
        }
        out
    }

    pub fn eval(&self, rep: &GroupRep) -> Result<Matrix, RingError> {
        let mut out = Matrix::identity(&self.ring, rep.dim());
        for l in &self.letters {
            out = out.mul(&rep.root_element(l.root, &l.param)?)?;
        }
        Ok(out)
    }
}

/// The right-hand side of the commutator formula for [x_a(r), x_b(s)] as
/// a word, in the canonical product order.
pub fn commutator_word(
    tables: &mut CommutatorTables,
    alpha: usize,
    beta: usize,
    r: &RingElement,
    s: &RingElement,
) -> Result<Word, RingError> {
    let ring = r.ring().clone();
    let mut out = Word::identity(&ring);
    for term in &tables.formula(alpha, beta).terms {
        let c = ring
            .from_int(term.coeff)
            .mul(&r.pow(term.i as i64)?)?
            .mul(&s.pow(term.j as i64)?)?;
        out.push(term.root, c)?;
    }
    Ok(out)
}

/// w_gamma(u) as a three-letter word; u must be a unit.
pub fn w_word(
    system: &crate::roots::RootSystem,
    gamma: usize,
    u: &RingElement,
) -> Result<Word, RingError> {
    let mut out = Word::identity(u.ring());
    let inv = u.inv()?;
    out.push(gamma, u.clone())?;
    out.push(system.negate(gamma), inv.neg())?;
    out.push(gamma, u.clone())?;
    Ok(out)
}

/// w_gamma(u)^-1 = w_gamma(-u), spelled out as three letters.
pub fn w_word_inv(
    system: &crate::roots::RootSystem,
    gamma: usize,
    u: &RingElement,
) -> Result<Word, RingError> {
    w_word(system, gamma, &u.neg())
}

/// h_gamma(u) = w_gamma(u) w_gamma(1)^-1 as a six-letter word.
pub fn h_word(
    system: &crate::roots::RootSystem,
    gamma: usize,
    u: &RingElement,
) -> Result<Word, RingError> {
    let one = u.ring().one();
    let mut out = w_word(system, gamma, u)?;
    out.extend(&w_word_inv(system, gamma, &one)?)?;
    Ok(out)
}

/// The Steinberg symbol {u, v} at gamma as a twelve-letter word:
/// h(uv) h(u)^-1 h(v)^-1 collapses to w(uv) w(u)^-1 w(1) w(v)^-1.
pub fn symbol_word(
    system: &crate::roots::RootSystem,
    gamma: usize,
    u: &RingElement,
    v: &RingElement,
) -> Result<Word, RingError> {
    let one = u.ring().one();
    let uv = u.mul(v)?;
    let mut out = w_word(system, gamma, &uv)?;
    out.extend(&w_word_inv(system, gamma, u)?)?;
    out.extend(&w_word(system, gamma, &one)?)?;
    out.extend(&w_word_inv(system, gamma, v)?)?;
    Ok(out)
}

/// Additivity relation x(r) x(s) = x(r+s), checked in a representation.
pub fn additivity_holds(
    rep: &GroupRep,
    gamma: usize,
    r: &RingElement,
    s: &RingElement,
) -> Result<bool, RingError> {
    let lhs = rep
        .root_element(gamma, r)?
        .mul(&rep.root_element(gamma, s)?)?;
    Ok(lhs == rep.root_element(gamma, &r.add(s)?)?)
}

/// The extra rank-one relation
/// w_gamma(u) x_gamma(r) w_gamma(u)^-1 = x_{-gamma}(-u^-2 r).
pub fn a1_relation_holds(
    rep: &GroupRep,
    gamma: usize,
    u: &RingElement,
    r: &RingElement,
) -> Result<bool, RingError> {
    let rs = rep.system().clone();
    let w = rep.w_element(gamma, u)?;
    let w_inv = rep.w_element(gamma, &u.neg())?;
    let lhs = w.mul(&rep.root_element(gamma, r)?)?.mul(&w_inv)?;
    let u2 = u.mul(u)?;
    let rhs_param = u2.inv()?.mul(r)?.neg();
    Ok(lhs == rep.root_element(rs.negate(gamma), &rhs_param)?)
}

/// Collection from the left. The word must be supported on the roots of
/// `order` (a sequence of root indices, closed under the sums that the
/// commutator formula can produce). Returns the unique reordered word with
/// at most one letter per root, in the order given.
///
/// Termination: a swap replaces an out-of-order adjacent pair by the
/// ordered pair plus letters on roots i a + j b with i + j >= 2, whose
/// heights strictly exceed both inputs; heights are bounded, so the
/// process stops. The cap is a safety net.
pub fn collect(
    tables: &mut CommutatorTables,
    word: &Word,
    order: &[usize],
    cap: usize,
) -> Result<Word, SteinbergError> {
    let position: HashMap<usize, usize> =
        order.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let pos_of = |root: usize| -> Result<usize, SteinbergError> {
        position
            .get(&root)
            .copied()
            .ok_or(SteinbergError::RootOutsideOrder(root))
    };

    let ring = word.ring().clone();
    // Sorted prefix as an option per order slot, pending suffix as a queue.
    let mut slots: Vec<Option<RingElement>> = vec![None; order.len()];
    let mut pending: std::collections::VecDeque<Letter> = word.letters().iter().cloned().collect();
    let mut budget = cap;

    while let Some(letter) = pending.pop_front() {
        if budget == 0 {
            return Err(SteinbergError::CollectionOverflow(cap));
        }
        budget -= 1;
        if letter.param.is_zero() {
            continue;
        }
        let p = pos_of(letter.root)?;
        // Letters already placed to the right of slot p must hop over this
        // letter. Hopping the rightmost first, S1 S2 L becomes
        // L S1 C1 S2 C2 with each Cq = [x_bq(-sq), x_a(-r)], so the
        // replacement suffix lists the hopped letters in ascending slot
        // order, each followed by its correction. Everything re-enters the
        // queue for another pass.
        let mut corrections = Word::identity(&ring);
        for q in p + 1..order.len() {
            let Some(s) = slots[q].clone() else { continue };
            // x_b(s) x_a(r) = x_a(r) x_b(s) [x_b(-s), x_a(-r)]
            let extra = commutator_word(
                tables,
                order[q],
                letter.root,
                &s.neg(),
                &letter.param.neg(),
            )?;
            corrections.push(order[q], s)?;
            corrections.extend(&extra)?;
            slots[q] = None;
        }
        let merged = match &slots[p] {
            Some(existing) => existing.add(&letter.param)?,
            None => letter.param.clone(),
        };
        slots[p] = if merged.is_zero() { None } else { Some(merged) };
        for l in corrections.letters().iter().rev() {
            pending.push_front(l.clone());
        }
    }

    let mut out = Word::identity(&ring);
    for (i, slot) in slots.iter().enumerate() {
        if let Some(v) = slot {
            out.push(order[i], v.clone())?;
        }
    }
    Ok(out)
}

/// Verdict of the kernel membership test for a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum K2Verdict {
    /// Trivial in a faithful representation of the simply connected group.
    InK2,
    /// Nontrivial in some representation, hence nontrivial in the group.
    NotInK2,
    /// Trivial in the adjoint representation, which cannot distinguish the
    /// center of the simply connected group from the identity.
    UnknownModuloCenter,
}

/// Decides (or honestly refuses to decide) whether a word lies in the
/// kernel of the evaluation onto the simply connected group. Types A and
/// C use their faithful standard representations. G2, F4 and E8 have
/// trivial center, so adjoint is faithful there too. For the remaining
/// types the adjoint test is one-sided.
pub fn k2_witness(
    consts: &StructureConstants,
    word: &Word,
) -> Result<K2Verdict, SteinbergError> {
    let kind = consts.system().kind();
    let (rep_kind, faithful) = match kind {
        SystemKind::A(_) => (RepKind::StandardSL, true),
        SystemKind::C(_) => (RepKind::StandardSp, true),
        SystemKind::G2 | SystemKind::F4 | SystemKind::E(8) => (RepKind::Adjoint, true),
        _ => (RepKind::Adjoint, false),
    };
    let rep = GroupRep::new(consts, rep_kind)?;
    let trivial = word.eval(&rep)?.is_identity();
    Ok(match (trivial, faithful) {
        (true, true) => K2Verdict::InK2,
        (false, _) => K2Verdict::NotInK2,
        (true, false) => K2Verdict::UnknownModuloCenter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::FieldDesc;
    use crate::roots::RootSystem;

    fn field(q: u64) -> RingDescriptor {
        RingDescriptor::Field(FieldDesc::of_order(q).unwrap())
    }

    fn setup(name: &str, kind: RepKind) -> (GroupRep, CommutatorTables) {
        let rs = RootSystem::parse(name).unwrap();
        let sc = StructureConstants::new(&rs);
        (GroupRep::new(&sc, kind).unwrap(), CommutatorTables::new(&sc))
    }

    #[test]
    fn words_reduce_freely() {
        let ring = field(5);
        let mut w = Word::identity(&ring);
        w.push(0, ring.from_int(2)).unwrap();
        w.push(0, ring.from_int(3)).unwrap();
        assert!(w.is_empty());
        w.push(1, ring.from_int(1)).unwrap();
        w.push(1, ring.from_int(1)).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.letters()[0].param, ring.from_int(2));
    }

    #[test]
    fn inverse_evaluates_to_matrix_inverse() {
        let (rep, _) = setup("A2", RepKind::StandardSL);
        let ring = field(7);
        let mut w = Word::identity(&ring);
        w.push(0, ring.from_int(3)).unwrap();
        w.push(4, ring.from_int(2)).unwrap();
        w.push(1, ring.from_int(6)).unwrap();
        let m = w.eval(&rep).unwrap();
        let mi = w.inverse().eval(&rep).unwrap();
        assert!(m.mul(&mi).unwrap().is_identity());
    }

    #[test]
    fn commutator_word_matches_group_commutator() {
        for (name, kind) in [("A2", RepKind::StandardSL), ("C2", RepKind::StandardSp)] {
            let (rep, mut tables) = setup(name, kind);
            let ring = field(9);
            let els = ring.elements().unwrap();
            let rs = rep.system().clone();
            for a in 0..rs.num_roots() {
                for b in 0..rs.num_roots() {
                    if a == b || b == rs.negate(a) {
                        continue;
                    }
                    let r = els[5].clone();
                    let s = els[7].clone();
                    let w = commutator_word(&mut tables, a, b, &r, &s).unwrap();
                    let xa = rep.root_element(a, &r).unwrap();
                    let xb = rep.root_element(b, &s).unwrap();
                    let lhs = xa
                        .mul(&xb)
                        .unwrap()
                        .mul(&rep.root_element(a, &r.neg()).unwrap())
                        .unwrap()
                        .mul(&rep.root_element(b, &s.neg()).unwrap())
                        .unwrap();
                    assert_eq!(lhs, w.eval(&rep).unwrap(), "{name} ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn collection_preserves_value_and_sorts() {
        use rand::{Rng, SeedableRng};
        let (rep, mut tables) = setup("C2", RepKind::StandardSp);
        let ring = field(3);
        let els = ring.elements().unwrap();
        let rs = rep.system().clone();
        let m = rs.num_positive();
        let order: Vec<usize> = (0..m).collect();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(23);
        for _ in 0..40 {
            let mut w = Word::identity(&ring);
            for _ in 0..12 {
                let root = rng.gen_range(0..m);
                let val = els[rng.gen_range(0..3)].clone();
                w.push(root, val).unwrap();
            }
            let c = collect(&mut tables, &w, &order, 100_000).unwrap();
            assert_eq!(w.eval(&rep).unwrap(), c.eval(&rep).unwrap());
            let positions: Vec<usize> = c.letters().iter().map(|l| l.root).collect();
            let mut sorted = positions.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(positions, sorted);
        }
    }

    #[test]
    fn collection_rejects_unsupported_roots() {
        let (_, mut tables) = setup("A2", RepKind::StandardSL);
        let ring = field(5);
        let mut w = Word::identity(&ring);
        w.push(3, ring.one()).unwrap();
        let r = collect(&mut tables, &w, &[0, 1, 2], 100);
        assert!(matches!(r, Err(SteinbergError::RootOutsideOrder(3))));
    }

    #[test]
    fn symbol_words_vanish_in_the_linear_group() {
        // Steinberg symbols lie in the kernel of St -> G: over a field the
        // twelve-letter word must evaluate to the identity matrix.
        let (rep, _) = setup("A1", RepKind::StandardSL);
        for q in [3u64, 5, 7, 9] {
            let ring = field(q);
            let units: Vec<_> = ring
                .elements()
                .unwrap()
                .into_iter()
                .filter(|e| !e.is_zero())
                .collect();
            for u in &units {
                for v in &units {
                    let w = symbol_word(rep.system(), 0, u, v).unwrap();
                    assert!(w.len() <= 12);
                    assert!(w.eval(&rep).unwrap().is_identity(), "q={q}");
                }
            }
        }
    }

    #[test]
    fn rank_one_conjugation_relation() {
        let (rep, _) = setup("A1", RepKind::StandardSL);
        let ring = field(7);
        for ui in 1..7 {
            for ri in 0..7 {
                let u = ring.from_int(ui);
                let r = ring.from_int(ri);
                assert!(a1_relation_holds(&rep, 0, &u, &r).unwrap());
            }
        }
    }

    #[test]
    fn k2_witness_distinguishes_the_obvious_cases() {
        let rs = RootSystem::parse("A2").unwrap();
        let sc = StructureConstants::new(&rs);
        let ring = field(4);
        let mut w = Word::identity(&ring);
        w.push(0, ring.one()).unwrap();
        assert_eq!(k2_witness(&sc, &w).unwrap(), K2Verdict::NotInK2);
        let els = ring.elements().unwrap();
        let sym = symbol_word(&rs, 0, &els[2], &els[3]).unwrap();
        assert_eq!(k2_witness(&sc, &sym).unwrap(), K2Verdict::InK2);
    }

    #[test]
    fn d4_central_torus_word_is_undecided_by_adjoint() {
        // The product h_a(-1) h_b(-1) over two fork leaves acts trivially
        // in the adjoint representation but is a nontrivial center element
        // of the simply connected group over fields of odd order.
        let rs = RootSystem::parse("D4").unwrap();
        let sc = StructureConstants::new(&rs);
        let ring = field(5);
        let minus_one = ring.from_int(-1);
        let mut w = h_word(&rs, 2, &minus_one).unwrap();
        w.extend(&h_word(&rs, 3, &minus_one).unwrap()).unwrap();
        assert_eq!(
            k2_witness(&sc, &w).unwrap(),
            K2Verdict::UnknownModuloCenter
        );
    }
}
