use super::{CliError, Ctx, Outcome};
use crate::config::Format;
use crate::output;
use chevwidth_core::suite::{self, Effort, CRITERIA};
use serde_json::json;

/// The acceptance battery. Criteria seed their own generators, so output
/// does not vary with --seed; --expensive widens the sweeps.
pub fn acceptance(ctx: &Ctx, criterion: Option<usize>) -> Result<Outcome, CliError> {
    if let Some(id) = criterion {
        if !(1..=CRITERIA).contains(&id) {
            return Err(CliError::Usage(format!(
                "criterion {id} does not exist; the battery has 1..={CRITERIA}"
            )));
        }
    }
    let effort = if ctx.expensive {
        Effort::Exhaustive
    } else {
        Effort::Standard
    };
    let reports = match criterion {
        Some(id) => vec![suite::criterion(id, effort)],
        None => suite::run_all(effort),
    };

    let failed: Vec<usize> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.id)
        .collect();
    if !failed.is_empty() {
        return Ok(Outcome::Fail(json!({
            "invariant": "acceptance criteria hold",
            "failed": failed,
            "reports": reports,
        })));
    }
    match ctx.format {
        Format::Json => output::print_json(&serde_json::to_value(&reports)?),
        Format::Csv => {
            let rows: Vec<String> = reports
                .iter()
                .map(|r| format!("{},{},{}", r.id, r.passed, r.title))
                .collect();
            output::print_csv("id,passed,title", &rows);
        }
    }
    Ok(Outcome::Pass)
}
