use super::{parse_ring, parse_system, CliError, Ctx, Outcome};
use crate::config::Format;
use crate::output;
use chevwidth_core::factor::{factor_sln, random_sl_matrix, WidthHistogram, RANK_ONE_WIDTH_BOUND};
use chevwidth_core::groups::{GroupRep, RepKind};
use chevwidth_core::liealg::StructureConstants;
use chevwidth_core::matrix::Matrix;
use chevwidth_core::roots::SystemKind;
use chevwidth_core::sample::SampleBounds;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde_json::json;
use std::path::Path;

pub fn run(
    ctx: &Ctx,
    ring: &str,
    system: &str,
    matrix: Option<&Path>,
    out: Option<&Path>,
    random: Option<usize>,
    letters: usize,
) -> Result<Outcome, CliError> {
    let rs = parse_system(system)?;
    let SystemKind::A(rank) = rs.kind() else {
        return Err(CliError::Usage(format!(
            "factoring works in type A (SL_n); {} is not supported",
            rs.kind()
        )));
    };
    let n = rank + 1;
    let ring = parse_ring(ring)?;
    let consts = StructureConstants::new(&rs);
    let rep = GroupRep::new(&consts, RepKind::StandardSL)?;

    match (matrix, random) {
        (Some(path), None) => one_matrix(ctx, &ring, n, &rep, path, out),
        (None, Some(samples)) => sampled(ctx, &ring, &rep, samples, letters),
        _ => Err(CliError::Usage(
            "pass exactly one of --matrix FILE or --random N".into(),
        )),
    }
}

fn one_matrix(
    ctx: &Ctx,
    ring: &chevwidth_core::rings::RingDescriptor,
    n: usize,
    rep: &GroupRep,
    path: &Path,
    out: Option<&Path>,
) -> Result<Outcome, CliError> {
    let text = super::read_file(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let m = Matrix::from_json(&value)?;
    if m.ring().to_string() != ring.to_string() {
        return Err(CliError::Usage(format!(
            "matrix file is over {}, but --ring says {ring}",
            m.ring()
        )));
    }
    if m.size() != n {
        return Err(CliError::Usage(format!(
            "matrix is {0}x{0}, but the system calls for {n}x{n}",
            m.size()
        )));
    }

    let word = factor_sln(&m)?;
    let product = word.eval(rep)?;
    let report = json!({
        "system": rep.system().kind().to_string(),
        "ring": ring.to_string(),
        "width": word.len(),
        "letters": output::word_json(&word),
    });
    if product != m {
        return Ok(Outcome::Fail(json!({
            "invariant": "factorization re-multiplies to its input",
            "system": rep.system().kind().to_string(),
            "ring": ring.to_string(),
            "width": word.len(),
        })));
    }
    match out {
        Some(dest) => {
            super::write_file(dest, &format!("{}\n", serde_json::to_string_pretty(&report)?))?;
            output::print_json(&json!({
                "out": dest.display().to_string(),
                "width": word.len(),
            }));
        }
        None => match ctx.format {
            Format::Json => output::print_json(&report),
            Format::Csv => {
                let rows: Vec<String> = word
                    .letters()
                    .iter()
                    .map(|l| format!("{},{}", l.root, output::element_str(&l.param)))
                    .collect();
                output::print_csv("root,param", &rows);
            }
        },
    }
    Ok(Outcome::Pass)
}

fn sampled(
    ctx: &Ctx,
    ring: &chevwidth_core::rings::RingDescriptor,
    rep: &GroupRep,
    samples: usize,
    letters: usize,
) -> Result<Outcome, CliError> {
    let bounds = SampleBounds {
        int_abs: 3,
        max_degree: 2,
        laurent_shift: 1,
    };
    let mut rng = ChaCha20Rng::seed_from_u64(ctx.seed);
    let mut hist = WidthHistogram::new();
    for i in 0..samples {
        let m = random_sl_matrix(rep, ring, &mut rng, letters, &bounds)?;
        let word = factor_sln(&m)?;
        if word.eval(rep)? != m {
            return Ok(Outcome::Fail(json!({
                "invariant": "factorization re-multiplies to its input",
                "system": rep.system().kind().to_string(),
                "ring": ring.to_string(),
                "sample": i,
            })));
        }
        hist.record(word.len());
    }

    let positive = rep.system().num_positive();
    match ctx.format {
        Format::Json => {
            let counts: Vec<_> = hist
                .counts
                .iter()
                .map(|(w, c)| json!({"width": w, "count": c}))
                .collect();
            output::print_json(&json!({
                "system": rep.system().kind().to_string(),
                "ring": ring.to_string(),
                "samples": hist.samples,
                "mean": format!("{:.3}", hist.mean()),
                "max": hist.max(),
                "counts": counts,
                "reference": [
                    {"label": "rank-one stage budget", "width": RANK_ONE_WIDTH_BOUND},
                    {"label": "stage budget times positive roots",
                     "width": RANK_ONE_WIDTH_BOUND * positive},
                ],
            }));
        }
        Format::Csv => {
            let rows: Vec<String> = hist
                .counts
                .iter()
                .map(|(w, c)| format!("{w},{c}"))
                .collect();
            output::print_csv("width,count", &rows);
        }
    }
    Ok(Outcome::Pass)
}
