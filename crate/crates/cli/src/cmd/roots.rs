use super::{parse_system, CliError, Ctx, Outcome};
use crate::config::Format;
use crate::output;
use serde_json::json;

pub fn info(ctx: &Ctx, name: &str) -> Result<Outcome, CliError> {
    let rs = parse_system(name)?;
    let rank = rs.rank();
    let cartan: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| rs.pairing(rs.simple(i), j)).collect())
        .collect();
    let roots: Vec<_> = (0..rs.num_roots())
        .map(|idx| {
            let coords: Vec<i64> = rs.coords(idx).iter().map(|&c| c as i64).collect();
            let height: i64 = coords.iter().sum();
            (idx, coords, height, rs.is_long(idx))
        })
        .collect();
    let weyl = u64::try_from(rs.weyl_order()).expect("desk-scale Weyl group");

    match ctx.format {
        Format::Json => {
            let root_values: Vec<_> = roots
                .iter()
                .map(|(idx, coords, height, long)| {
                    json!({
                        "index": idx,
                        "coords": coords,
                        "height": height,
                        "long": long,
                    })
                })
                .collect();
            output::print_json(&json!({
                "system": rs.kind().to_string(),
                "rank": rank,
                "roots_total": rs.num_roots(),
                "positive": rs.num_positive(),
                "weyl_order": weyl,
                "cartan": cartan,
                "roots": root_values,
            }));
        }
        Format::Csv => {
            let rows: Vec<String> = roots
                .iter()
                .map(|(idx, coords, height, long)| {
                    let cs: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
                    format!("{idx},{height},{long},{}", cs.join(","))
                })
                .collect();
            output::print_csv("index,height,long,coords", &rows);
        }
    }
    Ok(Outcome::Pass)
}
