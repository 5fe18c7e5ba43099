use super::{parse_ring, parse_system, CliError, Ctx, Outcome};
use crate::config::Format;
use crate::output;
use chevwidth_core::groups::{GroupRep, RepKind};
use chevwidth_core::liealg::StructureConstants;
use chevwidth_core::roots::SystemKind;
use serde_json::json;

pub fn form(ctx: &Ctx, system: &str, ring: &str) -> Result<Outcome, CliError> {
    let rs = parse_system(system)?;
    if !matches!(rs.kind(), SystemKind::C(_)) {
        return Err(CliError::Usage(format!(
            "the symplectic form lives in type C; {} has none here",
            rs.kind()
        )));
    }
    let ring = parse_ring(ring)?;
    let consts = StructureConstants::new(&rs);
    let rep = GroupRep::new(&consts, RepKind::StandardSp)?;
    let j = rep
        .symplectic_form(&ring)
        .expect("symplectic representation fixes a form");

    match ctx.format {
        Format::Json => output::print_json(&json!({
            "system": rs.kind().to_string(),
            "rep": "sp",
            "dim": rep.dim(),
            "form": j.to_json(),
        })),
        Format::Csv => {
            let rows: Vec<String> = (0..j.size())
                .map(|i| {
                    (0..j.size())
                        .map(|k| output::element_str(j.get(i, k)))
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            output::print_csv("row", &rows);
        }
    }
    Ok(Outcome::Pass)
}
