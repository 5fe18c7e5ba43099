use super::{parse_system, CliError, Ctx, Outcome};
use crate::config::Format;
use crate::output;
use chevwidth_core::factor::blocks::BlockSearcher;
use chevwidth_core::factor::lift::{cone_product_coverage, RankLift};
use chevwidth_core::factor::FactorError;
use chevwidth_core::groups::{GroupRep, RepKind};
use chevwidth_core::liealg::StructureConstants;
use chevwidth_core::roots::SystemKind;
use serde_json::json;

/// Full enumerations stay interactive up to this group order.
const DIRECT_CAP: usize = 25_000;

/// Sampled re-evaluation stride when --exhaustive is off.
const STRIDE: usize = 101;

pub fn run(
    ctx: &Ctx,
    target: &str,
    field: u64,
    subsystems: Option<&str>,
    blocks: Option<usize>,
    exhaustive: bool,
) -> Result<Outcome, CliError> {
    if let Some(b) = blocks {
        if b != 4 {
            return Err(CliError::Usage(
                "only the four-block shape (N = 4) is implemented".into(),
            ));
        }
    }
    let rs = parse_system(target)?;
    match rs.kind() {
        SystemKind::A(rank @ (1 | 2)) => {
            if subsystems.is_some() {
                return Err(CliError::Usage(
                    "subsystem oracles apply to the rank-lift target A3".into(),
                ));
            }
            direct(ctx, rank + 1, field, exhaustive)
        }
        SystemKind::A(3) => lift(ctx, field, subsystems, exhaustive),
        other => Err(CliError::Usage(format!(
            "tavgen targets A1 or A2 (direct enumeration) or A3 (rank lift); {other} is not supported"
        ))),
    }
}

/// Enumerate the whole group and decompose every element into the four
/// unitriangular blocks; a sampled (or exhaustive) subset is re-evaluated
/// through exact matrices.
fn direct(ctx: &Ctx, n: usize, field: u64, exhaustive: bool) -> Result<Outcome, CliError> {
    let p: u8 = field
        .try_into()
        .map_err(|_| CliError::Usage(format!("field order {field} is out of range")))?;
    let searcher = BlockSearcher::new(p, n)?;
    if searcher.group_order() > DIRECT_CAP {
        return Err(CliError::Usage(format!(
            "SL{n}(F{p}) has {} elements; direct enumeration is capped at {DIRECT_CAP}",
            searcher.group_order()
        )));
    }
    let consts = StructureConstants::new(searcher.system());
    let rep = GroupRep::new(&consts, RepKind::StandardSL)?;
    let els = searcher.elements();
    let stride = if exhaustive { 1 } else { STRIDE };

    let mut max_width = 0;
    let mut eval_checked = 0usize;
    for (idx, m) in els.iter().enumerate() {
        let blocks = match searcher.decompose(m) {
            Ok(b) => b,
            Err(FactorError::CoverageGap(detail)) => {
                return Ok(Outcome::Fail(json!({
                    "invariant": "four unitriangular blocks cover the group",
                    "target": searcher.system().kind().to_string(),
                    "field": p,
                    "element": idx,
                    "detail": detail,
                })));
            }
            Err(e) => return Err(e.into()),
        };
        max_width = max_width.max(blocks.width());
        if idx % stride == 0 {
            eval_checked += 1;
            if blocks.concatenated()?.eval(&rep)? != searcher.to_matrix(m) {
                return Ok(Outcome::Fail(json!({
                    "invariant": "block factorization re-multiplies to its element",
                    "target": searcher.system().kind().to_string(),
                    "field": p,
                    "element": idx,
                })));
            }
        }
    }

    let report = json!({
        "target": searcher.system().kind().to_string(),
        "field": p,
        "group_order": searcher.group_order(),
        "covered": els.len(),
        "eval_checked": eval_checked,
        "max_width": max_width,
    });
    match ctx.format {
        Format::Json => output::print_json(&report),
        Format::Csv => output::print_csv(
            "target,field,group_order,covered,eval_checked,max_width",
            &[format!(
                "{},{p},{},{},{eval_checked},{max_width}",
                searcher.system().kind(),
                searcher.group_order(),
                els.len()
            )],
        ),
    }
    Ok(Outcome::Pass)
}

/// The rank-reduction lift: four-block forms for SL4(F2) assembled from
/// rank-2 oracles, with an independent raw product-set coverage count.
fn lift(
    ctx: &Ctx,
    field: u64,
    subsystems: Option<&str>,
    exhaustive: bool,
) -> Result<Outcome, CliError> {
    if field != 2 {
        return Err(CliError::Usage(
            "the rank lift is built over F2; pass --field 2".into(),
        ));
    }
    if let Some(s) = subsystems {
        if s != "A2,A2" {
            return Err(CliError::Usage(
                "the implemented oracle decomposition is --subsystems A2,A2".into(),
            ));
        }
    }
    let lift = RankLift::new()?;
    let (reached, total) = cone_product_coverage();
    if reached != total {
        return Ok(Outcome::Fail(json!({
            "invariant": "four unitriangular cones multiply out to the whole group",
            "target": "A3",
            "field": 2,
            "covered": reached,
            "order": total,
        })));
    }

    let consts = StructureConstants::new(lift.system());
    let rep = GroupRep::new(&consts, RepKind::StandardSL)?;
    let els = lift.elements();
    let stride = if exhaustive { 1 } else { STRIDE };
    let mut max_width = 0;
    let mut checked = 0usize;
    for (idx, m) in els.iter().enumerate() {
        if idx % stride != 0 {
            continue;
        }
        let blocks = match lift.decompose(m) {
            Ok(b) => b,
            Err(FactorError::CoverageGap(detail)) => {
                return Ok(Outcome::Fail(json!({
                    "invariant": "the rank lift reaches every group element",
                    "target": "A3",
                    "field": 2,
                    "element": idx,
                    "detail": detail,
                })));
            }
            Err(e) => return Err(e.into()),
        };
        max_width = max_width.max(blocks.width());
        checked += 1;
        if blocks.concatenated()?.eval(&rep)? != lift.to_matrix(m) {
            return Ok(Outcome::Fail(json!({
                "invariant": "lifted factorization re-multiplies to its element",
                "target": "A3",
                "field": 2,
                "element": idx,
            })));
        }
    }

    let report = json!({
        "target": "A3",
        "field": 2,
        "oracle": "A2,A2",
        "cone_products": reached,
        "group_order": total,
        "lift_checked": checked,
        "max_width": max_width,
        "exhaustive": exhaustive,
    });
    match ctx.format {
        Format::Json => output::print_json(&report),
        Format::Csv => output::print_csv(
            "target,field,cone_products,group_order,lift_checked,max_width",
            &[format!("A3,2,{reached},{total},{checked},{max_width}")],
        ),
    }
    Ok(Outcome::Pass)
}
