//! The acceptance checklist as callable criteria.
//!
//! Each criterion runs a fixed, seeded battery and returns a report with a
//! pass flag and a detail block. The integration test and the command line
//! print the same reports, so a failure reads identically in both places.
//! Two long sweeps (the F4 commutator battery and the exhaustive rank
//! lift) only run at `Effort::Exhaustive`; the reports say so when skipped.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;
use thiserror::Error;

use crate::factor::{
    self, blocks::BlockSearcher, lift, FactorError, WidthHistogram, RANK_ONE_WIDTH_BOUND,
};
use crate::groups::{GroupError, GroupRep, RepKind};
use crate::ktheory;
use crate::liealg::commutator::CommutatorTables;
use crate::liealg::StructureConstants;
use crate::rings::{FieldDesc, RingDescriptor, RingError};
use crate::roots::{RootSystem, SystemKind};
use crate::sample::{self, SampleBounds};
use crate::steinberg::{a1_relation_holds, symbol_word, SteinbergError};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Steinberg(#[from] SteinbergError),
    #[error(transparent)]
    Factor(#[from] FactorError),
}

/// How much of the battery to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Effort {
    /// Everything except the two long sweeps.
    Standard,
    /// The full battery, including the F4 commutator sweep and the
    /// exhaustive 20160-element rank lift.
    Exhaustive,
}

pub const CRITERIA: usize = 8;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    failures: usize,
}

impl CriterionReport {
    fn new(id: usize, title: &str) -> Self {
        CriterionReport {
            id,
            title: title.to_string(),
            passed: true,
            detail: String::new(),
            failures: 0,
        }
    }

    fn note(&mut self, line: impl AsRef<str>) {
        self.detail.push_str(line.as_ref());
        self.detail.push('\n');
    }

    fn fail(&mut self, line: impl AsRef<str>) {
        self.passed = false;
        self.failures += 1;
        if self.failures <= 12 {
            self.note(format!("FAIL: {}", line.as_ref()));
        } else if self.failures == 13 {
            self.note("FAIL: (further failures elided)");
        }
    }

    pub fn failures(&self) -> usize {
        self.failures
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} [{}] {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title
        )
    }
}

fn seeded(id: u64, salt: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(0x5EED_0000 + id * 1000 + salt)
}

fn finish(
    mut report: CriterionReport,
    outcome: Result<(), SuiteError>,
) -> CriterionReport {
    if let Err(e) = outcome {
        report.fail(format!("criterion aborted: {e}"));
    }
    report
}

pub fn run_all(effort: Effort) -> Vec<CriterionReport> {
    (1..=CRITERIA).map(|id| criterion(id, effort)).collect()
}

pub fn criterion(id: usize, effort: Effort) -> CriterionReport {
    match id {
        1 => commutator_sweep(effort),
        2 => rank_one_relation(),
        3 => symbol_triviality(),
        4 => block_coverage(effort),
        5 => k2_model_laws(),
        6 => k2_ring_reports(),
        7 => width_round_trips(),
        8 => constant_magnitudes(),
        _ => {
            let mut r = CriterionReport::new(id, "unknown criterion");
            r.fail("no such criterion");
            r
        }
    }
}

// Criterion 1: the derived commutator formulas hold in faithful matrix
// groups, across systems, rings, and random parameters.
fn commutator_sweep(effort: Effort) -> CriterionReport {
    let mut r = CriterionReport::new(1, "commutator formula sweep");
    let out = (|| -> Result<(), SuiteError> {
        let mut plans: Vec<(SystemKind, RepKind)> = vec![
            (SystemKind::A(2), RepKind::StandardSL),
            (SystemKind::A(3), RepKind::StandardSL),
            (SystemKind::C(2), RepKind::StandardSp),
            (SystemKind::C(3), RepKind::StandardSp),
            (SystemKind::D(4), RepKind::Adjoint),
            (SystemKind::G2, RepKind::Adjoint),
        ];
        if effort == Effort::Exhaustive {
            plans.push((SystemKind::F4, RepKind::Adjoint));
        } else {
            r.note("skipped: F4 adjoint sweep (run at exhaustive effort)");
        }
        let rings = [
            RingDescriptor::Field(FieldDesc::prime(5)?),
            RingDescriptor::Field(FieldDesc::prime(7)?),
            RingDescriptor::Integers,
        ];
        let bounds = SampleBounds { int_abs: 3, max_degree: 0, laurent_shift: 0 };
        let mut checks = 0usize;
        for (kind, rep_kind) in plans {
            let rs = RootSystem::new(kind);
            let consts = StructureConstants::new(&rs);
            let rep = GroupRep::new(&consts, rep_kind)?;
            let mut tables = CommutatorTables::new(&consts);
            for (ri, ring) in rings.iter().enumerate() {
                let mut rng = seeded(1, kind.to_string().len() as u64 * 7 + ri as u64);
                for _ in 0..25 {
                    let alpha = rng.gen_range(0..rs.num_roots());
                    let beta = loop {
                        let b = rng.gen_range(0..rs.num_roots());
                        if b != alpha && b != rs.negate(alpha) {
                            break b;
                        }
                    };
                    let p = sample::element(ring, &mut rng, &bounds);
                    let s = sample::element(ring, &mut rng, &bounds);
                    checks += 1;
                    if !rep.commutator_holds(&mut tables, alpha, beta, &p, &s)? {
                        r.fail(format!(
                            "{kind} over {ring}: pair ({alpha}, {beta}) param ({p:?}, {s:?})"
                        ));
                    }
                }
            }
        }
        r.note(format!("{checks} random commutator pairs matched their formulas"));
        Ok(())
    })();
    finish(r, out)
}

// Criterion 2: the rank-one conjugation relation, exhausted over small
// fields.
fn rank_one_relation() -> CriterionReport {
    let mut r = CriterionReport::new(2, "rank-one conjugation relation");
    let out = (|| -> Result<(), SuiteError> {
        let rs = RootSystem::new(SystemKind::A(1));
        let rep = GroupRep::new(&StructureConstants::new(&rs), RepKind::StandardSL)?;
        let mut checks = 0usize;
        for q in [2u64, 3, 4, 5, 7, 9] {
            let ring = RingDescriptor::Field(FieldDesc::of_order(q)?);
            let els = ring.elements()?;
            for u in els.iter().filter(|u| !u.is_zero()) {
                for param in &els {
                    checks += 1;
                    if !a1_relation_holds(&rep, 0, u, param)? {
                        r.fail(format!("q={q}, u={u:?}, r={param:?}"));
                    }
                }
            }
        }
        r.note(format!(
            "{checks} (u, r) pairs over q in {{2,3,4,5,7,9}}, all conjugations match"
        ));
        Ok(())
    })();
    finish(r, out)
}

// Criterion 3: Steinberg symbol words evaluate to the identity in the
// linear and symplectic groups, for every unit pair.
fn symbol_triviality() -> CriterionReport {
    let mut r = CriterionReport::new(3, "symbol words vanish in matrix groups");
    let out = (|| -> Result<(), SuiteError> {
        let plans = [
            (SystemKind::A(1), RepKind::StandardSL),
            (SystemKind::A(2), RepKind::StandardSL),
            (SystemKind::C(2), RepKind::StandardSp),
        ];
        let mut checks = 0usize;
        for (kind, rep_kind) in plans {
            let rs = RootSystem::new(kind);
            let rep = GroupRep::new(&StructureConstants::new(&rs), rep_kind)?;
            for q in [2u64, 3, 5, 7, 9] {
                let ring = RingDescriptor::Field(FieldDesc::of_order(q)?);
                let units: Vec<_> = ring
                    .elements()?
                    .into_iter()
                    .filter(|e| !e.is_zero())
                    .collect();
                for i in 0..rs.rank() {
                    let gamma = rs.simple(i);
                    for u in &units {
                        for v in &units {
                            let w = symbol_word(&rs, gamma, u, v)?;
                            checks += 1;
                            if !w.eval(&rep)?.is_identity() {
                                r.fail(format!(
                                    "{kind} q={q} root {gamma}: {{{u:?}, {v:?}}} is nontrivial"
                                ));
                            }
                        }
                    }
                }
            }
        }
        r.note(format!("{checks} unit-pair symbols evaluated to the identity"));
        Ok(())
    })();
    finish(r, out)
}

// Criterion 4: four-block unitriangular coverage, exhaustive where the
// group is small and lifted through the rank drop where it is not.
fn block_coverage(effort: Effort) -> CriterionReport {
    let mut r = CriterionReport::new(4, "four-block unitriangular coverage");
    let out = (|| -> Result<(), SuiteError> {
        // SL_3(F_3), every element.
        let searcher = BlockSearcher::new(3, 3)?;
        let rep = GroupRep::new(
            &StructureConstants::new(searcher.system()),
            RepKind::StandardSL,
        )?;
        let els = searcher.elements();
        if els.len() != searcher.group_order() {
            r.fail(format!(
                "SL3(F3) enumeration found {} of {} elements",
                els.len(),
                searcher.group_order()
            ));
        }
        let mut max_width = 0usize;
        for m in &els {
            match searcher.decompose(m) {
                Ok(blocks) => {
                    max_width = max_width.max(blocks.width());
                    if blocks.concatenated()?.eval(&rep)? != searcher.to_matrix(m) {
                        r.fail(format!("SL3(F3) element {} rebuilt wrong", m.key()));
                    }
                }
                Err(e) => r.fail(format!("SL3(F3) element {}: {e}", m.key())),
            }
        }
        r.note(format!(
            "SL3(F3): all {} elements decomposed and re-verified, widest {} letters",
            els.len(),
            max_width
        ));

        // SL_4(F_2): independent product-set coverage first.
        let (reached, order) = lift::cone_product_coverage();
        if reached != order {
            r.fail(format!(
                "product set U+U-U+U- reaches {reached} of {order} elements"
            ));
        } else {
            r.note(format!(
                "SL4(F2): raw product set U+U-U+U- covers all {order} elements"
            ));
        }

        // Then the constructive lift, sampled or exhaustive by effort.
        let lifter = lift::RankLift::new()?;
        let rep4 = GroupRep::new(
            &StructureConstants::new(lifter.system()),
            RepKind::StandardSL,
        )?;
        let all = lifter.elements();
        let stride = if effort == Effort::Exhaustive { 1 } else { 101 };
        let mut lifted = 0usize;
        let mut max4 = 0usize;
        for m in all.iter().step_by(stride) {
            match lifter.decompose(m) {
                Ok(blocks) => {
                    lifted += 1;
                    max4 = max4.max(blocks.width());
                    if blocks.concatenated()?.eval(&rep4)? != lifter.to_matrix(m) {
                        r.fail(format!("SL4(F2) element {} rebuilt wrong", m.key()));
                    }
                }
                Err(e) => r.fail(format!("SL4(F2) element {}: {e}", m.key())),
            }
        }
        r.note(format!(
            "SL4(F2): {lifted} elements lifted through the rank drop and re-verified, widest {max4} letters"
        ));
        if effort == Effort::Exhaustive {
            if lifted != all.len() || all.len() != order {
                r.fail(format!(
                    "exhaustive lift covered {lifted} of {} elements",
                    all.len()
                ));
            }
        } else {
            r.note("skipped: exhaustive 20160-element lift (run at exhaustive effort)");
        }
        Ok(())
    })();
    finish(r, out)
}

// Criterion 5: the symbol class model satisfies the defining laws of a
// symbol on seeded rational function samples.
fn k2_model_laws() -> CriterionReport {
    let mut r = CriterionReport::new(5, "symbol class laws over function fields");
    let out = (|| -> Result<(), SuiteError> {
        let bounds = SampleBounds { int_abs: 2, max_degree: 3, laurent_shift: 1 };
        let mut checks = 0usize;
        for (q, salt) in [(2u64, 1), (3, 2), (5, 3)] {
            let base = FieldDesc::prime(q)?;
            let ring = RingDescriptor::RationalFn(base);
            let mut rng = seeded(5, salt);
            for _ in 0..80 {
                let f = sample::nonzero(&ring, &mut rng, &bounds);
                let g = sample::nonzero(&ring, &mut rng, &bounds);
                let h = sample::nonzero(&ring, &mut rng, &bounds);

                let fg_h = ktheory::K2Class::symbol(&f.mul(&g)?, &h)?;
                let split = ktheory::K2Class::symbol(&f, &h)?
                    .mul(&ktheory::K2Class::symbol(&g, &h)?)?;
                checks += 1;
                if fg_h != split {
                    r.fail(format!("q={q}: {{fg, h}} != {{f,h}}{{g,h}} at f={f:?}, g={g:?}, h={h:?}"));
                }

                let anti = ktheory::K2Class::symbol(&f, &g)?
                    .mul(&ktheory::K2Class::symbol(&g, &f)?)?;
                checks += 1;
                if !anti.is_trivial() {
                    r.fail(format!("q={q}: {{f,g}}{{g,f}} nontrivial at f={f:?}, g={g:?}"));
                }

                if !f.is_one() && !f.ring().one().sub(&f)?.is_zero() {
                    checks += 1;
                    if !ktheory::steinberg_relation_holds(&f)? {
                        r.fail(format!("q={q}: {{f, 1-f}} nontrivial at f={f:?}"));
                    }
                }

                checks += 1;
                if !ktheory::reciprocity_holds(&f, &g)? {
                    r.fail(format!("q={q}: reciprocity fails at f={f:?}, g={g:?}"));
                }
            }
        }
        r.note(format!(
            "{checks} sampled law instances over F2, F3, F5 (degrees <= 3)"
        ));
        Ok(())
    })();
    finish(r, out)
}

// Criterion 6: the K2 structure reports for polynomial and Laurent rings,
// with the Laurent splitting verified as a literal round trip.
fn k2_ring_reports() -> CriterionReport {
    let mut r = CriterionReport::new(6, "K2 of polynomial and Laurent rings");
    let out = (|| -> Result<(), SuiteError> {
        for q in [2u64, 3, 5] {
            let base = FieldDesc::prime(q)?;
            let poly = ktheory::k2_ring_structure(&RingDescriptor::PolyRing(base.clone()))?;
            if poly.order != 1 {
                r.fail(format!("polynomial ring over F{q}: order {} != 1", poly.order));
            }
            r.note(format!("F{q}[t]: order {}; {}", poly.order, poly.checked));
            let laurent =
                ktheory::k2_ring_structure(&RingDescriptor::LaurentRing(base.clone()))?;
            if laurent.order != q - 1 {
                r.fail(format!(
                    "Laurent ring over F{q}: order {} != {}",
                    laurent.order,
                    q - 1
                ));
            }
            r.note(format!(
                "F{q}[t, 1/t]: order {}; {}",
                laurent.order, laurent.checked
            ));
        }
        for q in [2u64, 3] {
            let base = FieldDesc::prime(q)?;
            if ktheory::verify_exact_sequence(&base, 2)? {
                r.note(format!(
                    "F{q}(t): boundary map surjective onto residues at places of degree <= 2"
                ));
            } else {
                r.fail(format!("F{q}(t): boundary map misses a residue"));
            }
        }
        Ok(())
    })();
    finish(r, out)
}

// Criterion 7: seeded factorization round trips with width histograms.
fn width_round_trips() -> CriterionReport {
    let mut r = CriterionReport::new(7, "factorization round trips and widths");
    let out = (|| -> Result<(), SuiteError> {
        let f2 = FieldDesc::prime(2)?;
        let f3 = FieldDesc::prime(3)?;
        let rings = [
            RingDescriptor::PolyRing(f2.clone()),
            RingDescriptor::PolyRing(f3),
            RingDescriptor::LaurentRing(f2),
        ];
        let bounds = SampleBounds { int_abs: 2, max_degree: 2, laurent_shift: 1 };
        for rank in [1usize, 2] {
            let rs = RootSystem::new(SystemKind::A(rank));
            let rep = GroupRep::new(&StructureConstants::new(&rs), RepKind::StandardSL)?;
            for (ri, ring) in rings.iter().enumerate() {
                let mut rng = seeded(7, rank as u64 * 10 + ri as u64);
                let mut hist = WidthHistogram::new();
                for _ in 0..500 {
                    let m = factor::random_sl_matrix(&rep, ring, &mut rng, 8, &bounds)?;
                    let word = if rank == 1 {
                        factor::factor_sl2(&m)
                    } else {
                        factor::factor_sln(&m)
                    }?;
                    if word.eval(&rep)? != m {
                        r.fail(format!("SL{} over {ring}: round trip broke", rank + 1));
                        continue;
                    }
                    hist.record(word.len());
                }
                let budget = RANK_ONE_WIDTH_BOUND * rs.num_positive();
                r.note(format!("SL{} over {ring}:", rank + 1));
                r.note(hist.render(&[
                    ("rank-one stage budget", RANK_ONE_WIDTH_BOUND),
                    ("budget x positive roots", budget),
                ]));
            }
        }
        Ok(())
    })();
    finish(r, out)
}

// Criterion 8: structure constant magnitudes follow the string law across
// every supported system, with the known per-type extremes.
fn constant_magnitudes() -> CriterionReport {
    let mut r = CriterionReport::new(8, "structure constant magnitudes");
    let out = {
        let kinds = [
            SystemKind::A(1),
            SystemKind::A(2),
            SystemKind::A(3),
            SystemKind::B(2),
            SystemKind::B(3),
            SystemKind::C(2),
            SystemKind::C(3),
            SystemKind::D(4),
            SystemKind::G2,
            SystemKind::F4,
            SystemKind::E(6),
            SystemKind::E(7),
            SystemKind::E(8),
        ];
        for kind in kinds {
            let rs = RootSystem::new(kind);
            let consts = StructureConstants::new(&rs);
            let mut max_abs = 0i64;
            let mut pairs = 0usize;
            for x in 0..rs.num_roots() {
                for y in 0..rs.num_roots() {
                    let sum = rs.sum(x, y);
                    match consts.n(x, y) {
                        Some(v) => {
                            pairs += 1;
                            let expect = rs.string_down(y, x) + 1;
                            if sum.is_none() {
                                r.fail(format!("{kind}: constant without a root sum"));
                            }
                            if v.abs() != expect {
                                r.fail(format!(
                                    "{kind}: |N({x},{y})| = {} but the string gives {expect}",
                                    v.abs()
                                ));
                            }
                            max_abs = max_abs.max(v.abs());
                        }
                        None => {
                            if sum.is_some() && x != rs.negate(y) {
                                r.fail(format!("{kind}: missing constant at ({x}, {y})"));
                            }
                        }
                    }
                }
            }
            let want_max = match kind {
                // Rank one has no summable pair, so no constant at all.
                SystemKind::A(1) => 0,
                SystemKind::G2 => 3,
                SystemKind::F4 | SystemKind::B(_) | SystemKind::C(_) => 2,
                _ => 1,
            };
            if max_abs != want_max {
                r.fail(format!(
                    "{kind}: largest |N| is {max_abs}, expected {want_max}"
                ));
            }
            r.note(format!(
                "{kind}: {pairs} summable pairs, every |N| = p+1, max {max_abs}"
            ));
        }
        Ok(())
    };
    finish(r, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_carry_failure_counts() {
        let mut r = CriterionReport::new(9, "probe");
        assert!(r.passed);
        r.note("context");
        r.fail("broken");
        assert!(!r.passed);
        assert_eq!(r.failures(), 1);
        assert!(r.summary_line().starts_with("FAIL [9]"));
        assert!(r.detail.contains("FAIL: broken"));
    }

    #[test]
    fn unknown_criterion_fails_cleanly() {
        let r = criterion(99, Effort::Standard);
        assert!(!r.passed);
    }

    #[test]
    fn rank_one_criterion_passes() {
        let r = rank_one_relation();
        assert!(r.passed, "{}", r.detail);
    }

    #[test]
    fn magnitude_criterion_passes() {
        let r = constant_magnitudes();
        assert!(r.passed, "{}", r.detail);
    }
}
