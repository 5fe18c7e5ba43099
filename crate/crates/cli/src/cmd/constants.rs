use super::{guard_expensive, parse_system, CliError, Ctx, Outcome};
use crate::cache;
use crate::config::Format;
use crate::output;
use chevwidth_core::liealg::StructureConstants;
use serde_json::json;

pub fn run(ctx: &Ctx, name: &str) -> Result<Outcome, CliError> {
    let rs = parse_system(name)?;
    guard_expensive(rs.kind(), ctx)?;
    let consts = StructureConstants::new(&rs);
    let source = cache::tables_for(ctx, &consts)?;

    match ctx.format {
        Format::Json => {
            let pairs: Vec<_> = source
                .rows
                .iter()
                .map(|row| {
                    let terms: Vec<_> = row
                        .terms
                        .iter()
                        .map(|&(i, j, root, coeff)| {
                            json!({"i": i, "j": j, "root": root, "coeff": coeff})
                        })
                        .collect();
                    json!({"alpha": row.alpha, "beta": row.beta, "terms": terms})
                })
                .collect();
            output::print_json(&json!({
                "system": rs.kind().to_string(),
                "origin": source.origin,
                "pairs": pairs,
            }));
        }
        Format::Csv => {
            let rows: Vec<String> = source
                .rows
                .iter()
                .flat_map(|row| {
                    row.terms.iter().map(move |&(i, j, root, coeff)| {
                        format!("{},{},{i},{j},{root},{coeff}", row.alpha, row.beta)
                    })
                })
                .collect();
            output::print_csv("alpha,beta,i,j,root,coeff", &rows);
        }
    }
    Ok(Outcome::Pass)
}
