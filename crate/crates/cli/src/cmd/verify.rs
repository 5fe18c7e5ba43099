use super::{
    choose_rep, guard_expensive, parse_ring, parse_system, rep_name, CheckKind, CliError, Ctx,
    Outcome, RepChoice,
};
use crate::cache;
use crate::config::Format;
use crate::output;
use chevwidth_core::groups::GroupRep;
use chevwidth_core::liealg::StructureConstants;
use chevwidth_core::rings::RingDescriptor;
use chevwidth_core::sample::{self, SampleBounds};
use chevwidth_core::steinberg;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde_json::{json, Value};

/// Reports stay readable when a corrupt table fails everywhere.
const FAILURE_CAP: usize = 20;

#[derive(Default)]
struct Sweep {
    cases: usize,
    failures_total: usize,
    failures: Vec<Value>,
}

impl Sweep {
    fn fail(&mut self, detail: Value) {
        self.failures_total += 1;
        if self.failures.len() < FAILURE_CAP {
            self.failures.push(detail);
        }
    }
}

fn check_name(check: CheckKind) -> &'static str {
    match check {
        CheckKind::Commutator => "commutator",
        CheckKind::Additivity => "additivity",
        CheckKind::RankOne => "rank-one",
        CheckKind::Symbol => "symbol",
    }
}

pub fn run(
    ctx: &Ctx,
    check: CheckKind,
    system: &str,
    ring: &str,
    rep: Option<RepChoice>,
    trials: usize,
) -> Result<Outcome, CliError> {
    let rs = parse_system(system)?;
    guard_expensive(rs.kind(), ctx)?;
    let ring = parse_ring(ring)?;
    let consts = StructureConstants::new(&rs);
    let grp = GroupRep::new(&consts, choose_rep(rep, rs.kind()))?;
    let mut rng = ChaCha20Rng::seed_from_u64(ctx.seed);
    let bounds = SampleBounds {
        int_abs: 3,
        max_degree: 2,
        laurent_shift: 1,
    };

    let (invariant, sweep) = match check {
        CheckKind::Commutator => (
            "commutator formula",
            commutator(ctx, &consts, &grp, &ring, trials, &mut rng, &bounds)?,
        ),
        CheckKind::Additivity => (
            "parameter additivity",
            additivity(&grp, &ring, trials, &mut rng, &bounds)?,
        ),
        CheckKind::RankOne => ("rank-one conjugation relation", rank_one(&grp, &ring)?),
        CheckKind::Symbol => (
            "unit symbols evaluate to the identity",
            symbol(&grp, &ring)?,
        ),
    };

    let report = json!({
        "invariant": invariant,
        "check": check_name(check),
        "system": rs.kind().to_string(),
        "ring": ring.to_string(),
        "rep": rep_name(grp.kind()),
        "cases": sweep.cases,
        "failures_total": sweep.failures_total,
        "failures": sweep.failures,
    });
    if sweep.failures_total > 0 {
        return Ok(Outcome::Fail(report));
    }
    match ctx.format {
        Format::Json => output::print_json(&report),
        Format::Csv => output::print_csv(
            "check,system,ring,rep,cases,failures",
            &[format!(
                "{},{},{},{},{},0",
                check_name(check),
                rs.kind(),
                ring,
                rep_name(grp.kind()),
                sweep.cases
            )],
        ),
    }
    Ok(Outcome::Pass)
}

/// Every ordered non-opposite pair, `trials` sampled parameter pairs each.
/// Tables come from the cache when one is configured, so a corrupt cache
/// that passes its hash check fails here, naming the pair.
fn commutator(
    ctx: &Ctx,
    consts: &StructureConstants,
    grp: &GroupRep,
    ring: &RingDescriptor,
    trials: usize,
    rng: &mut ChaCha20Rng,
    bounds: &SampleBounds,
) -> Result<Sweep, CliError> {
    let mut tables = cache::tables_for(ctx, consts)?.tables;
    let mut sweep = Sweep::default();
    for (alpha, beta) in cache::all_pairs(consts.system()) {
        sweep.cases += 1;
        for _ in 0..trials {
            let r = sample::element(ring, rng, bounds);
            let s = sample::element(ring, rng, bounds);
            if !grp.commutator_holds(&mut tables, alpha, beta, &r, &s)? {
                sweep.fail(json!({
                    "alpha": alpha,
                    "beta": beta,
                    "r": output::element_str(&r),
                    "s": output::element_str(&s),
                }));
            }
        }
    }
    Ok(sweep)
}

fn additivity(
    grp: &GroupRep,
    ring: &RingDescriptor,
    trials: usize,
    rng: &mut ChaCha20Rng,
    bounds: &SampleBounds,
) -> Result<Sweep, CliError> {
    let mut sweep = Sweep::default();
    for gamma in 0..grp.system().num_roots() {
        sweep.cases += 1;
        for _ in 0..trials {
            let r = sample::element(ring, rng, bounds);
            let s = sample::element(ring, rng, bounds);
            if !steinberg::additivity_holds(grp, gamma, &r, &s)? {
                sweep.fail(json!({
                    "root": gamma,
                    "r": output::element_str(&r),
                    "s": output::element_str(&s),
                }));
            }
        }
    }
    Ok(sweep)
}

fn field_elements(ring: &RingDescriptor, check: &str) -> Result<Vec<chevwidth_core::rings::RingElement>, CliError> {
    if !matches!(ring, RingDescriptor::Field(_)) {
        return Err(CliError::Usage(format!(
            "the {check} check enumerates a finite field; pass --ring F<q>"
        )));
    }
    Ok(ring.elements()?)
}

/// Exhaustive over the field: every root, every unit u, every parameter r.
fn rank_one(grp: &GroupRep, ring: &RingDescriptor) -> Result<Sweep, CliError> {
    let els = field_elements(ring, "rank-one")?;
    let mut sweep = Sweep::default();
    for gamma in 0..grp.system().num_roots() {
        sweep.cases += 1;
        for u in els.iter().filter(|u| !u.is_zero()) {
            for r in &els {
                if !steinberg::a1_relation_holds(grp, gamma, u, r)? {
                    sweep.fail(json!({
                        "root": gamma,
                        "u": output::element_str(u),
                        "r": output::element_str(r),
                    }));
                }
            }
        }
    }
    Ok(sweep)
}

/// Exhaustive over the field: every root, every ordered unit pair.
fn symbol(grp: &GroupRep, ring: &RingDescriptor) -> Result<Sweep, CliError> {
    let els = field_elements(ring, "symbol")?;
    let rs = grp.system().clone();
    let mut sweep = Sweep::default();
    for gamma in 0..rs.num_roots() {
        sweep.cases += 1;
        for u in els.iter().filter(|u| !u.is_zero()) {
            for v in els.iter().filter(|v| !v.is_zero()) {
                let word = steinberg::symbol_word(&rs, gamma, u, v)?;
                if !word.eval(grp)?.is_identity() {
                    sweep.fail(json!({
                        "root": gamma,
                        "u": output::element_str(u),
                        "v": output::element_str(v),
                    }));
                }
            }
        }
    }
    Ok(sweep)
}
