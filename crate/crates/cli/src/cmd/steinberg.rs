use super::{
    choose_rep, guard_expensive, parse_ring, parse_system, rep_name, CliError, Ctx, Outcome,
    RepChoice,
};
use crate::config::Format;
use crate::output;
use chevwidth_core::groups::GroupRep;
use chevwidth_core::liealg::StructureConstants;
use chevwidth_core::rings::{grammar, json as ring_json, RingElement};
use chevwidth_core::roots::RootSystem;
use chevwidth_core::steinberg::{self, K2Verdict, Word};
use serde_json::json;
use std::path::Path;

pub fn eval(
    ctx: &Ctx,
    system: &str,
    rep: Option<RepChoice>,
    file: &Path,
    ring_override: Option<&str>,
) -> Result<Outcome, CliError> {
    let rs = parse_system(system)?;
    guard_expensive(rs.kind(), ctx)?;

    let text = super::read_file(file)?;
    let items: serde_json::Value = serde_json::from_str(&text)?;
    let arr = items
        .as_array()
        .ok_or_else(|| CliError::Usage("word file must be a JSON array of letters".into()))?;
    let mut letters: Vec<(usize, RingElement)> = Vec::with_capacity(arr.len());
    for item in arr {
        let root = item
            .get("root")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| CliError::Usage("letter is missing a \"root\" index".into()))?
            as usize;
        if root >= rs.num_roots() {
            return Err(CliError::Usage(format!(
                "root index {root} is out of range for {}",
                rs.kind()
            )));
        }
        let param = item
            .get("param")
            .ok_or_else(|| CliError::Usage("letter is missing its \"param\"".into()))?;
        letters.push((root, ring_json::element_from_json(param)?));
    }
    let ring = match ring_override {
        Some(src) => parse_ring(src)?,
        None => match letters.first() {
            Some((_, p)) => p.ring().clone(),
            None => {
                return Err(CliError::Usage(
                    "empty word: pass --ring to fix the coefficient ring".into(),
                ))
            }
        },
    };

    let mut word = Word::identity(&ring);
    for (root, param) in letters {
        word.push(root, param)?;
    }
    let consts = StructureConstants::new(&rs);
    let grp = GroupRep::new(&consts, choose_rep(rep, rs.kind()))?;
    let m = word.eval(&grp)?;

    match ctx.format {
        Format::Json => output::print_json(&json!({
            "system": rs.kind().to_string(),
            "rep": rep_name(grp.kind()),
            "ring": ring.to_string(),
            "letters": word.len(),
            "identity": m.is_identity(),
            "matrix": m.to_json(),
        })),
        Format::Csv => {
            let rows: Vec<String> = (0..m.size())
                .map(|i| {
                    (0..m.size())
                        .map(|j| output::element_str(m.get(i, j)))
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            output::print_csv("row", &rows);
        }
    }
    Ok(Outcome::Pass)
}

fn unit(ring: &chevwidth_core::rings::RingDescriptor, src: &str, name: &str) -> Result<RingElement, CliError> {
    let e = grammar::parse_element(ring, src)?;
    if e.inv().is_err() {
        return Err(CliError::Usage(format!(
            "{name} = {src} is not a unit in {ring}"
        )));
    }
    Ok(e)
}

/// Builds the 12-letter symbol of two units, evaluates it, and reports the
/// kernel verdict. Inspection only: a nontrivial symbol is exit 0 here,
/// because over non-field rings that is the expected answer.
pub fn symbol(
    ctx: &Ctx,
    system: &str,
    ring: &str,
    root: usize,
    u_src: &str,
    v_src: &str,
) -> Result<Outcome, CliError> {
    let rs: RootSystem = parse_system(system)?;
    guard_expensive(rs.kind(), ctx)?;
    if root >= rs.num_roots() {
        return Err(CliError::Usage(format!(
            "root index {root} is out of range for {}",
            rs.kind()
        )));
    }
    let ring = parse_ring(ring)?;
    let u = unit(&ring, u_src, "u")?;
    let v = unit(&ring, v_src, "v")?;

    let word = steinberg::symbol_word(&rs, root, &u, &v)?;
    let consts = StructureConstants::new(&rs);
    let verdict = match steinberg::k2_witness(&consts, &word)? {
        K2Verdict::InK2 => "in-k2",
        K2Verdict::NotInK2 => "not-in-k2",
        K2Verdict::UnknownModuloCenter => "unknown-modulo-center",
    };
    let grp = GroupRep::new(&consts, choose_rep(None, rs.kind()))?;
    let identity = word.eval(&grp)?.is_identity();

    match ctx.format {
        Format::Json => output::print_json(&json!({
            "system": rs.kind().to_string(),
            "ring": ring.to_string(),
            "root": root,
            "u": output::element_str(&u),
            "v": output::element_str(&v),
            "width": word.len(),
            "rep": rep_name(grp.kind()),
            "identity_in_rep": identity,
            "verdict": verdict,
            "letters": output::word_json(&word),
        })),
        Format::Csv => output::print_csv(
            "system,ring,root,u,v,width,identity,verdict",
            &[format!(
                "{},{ring},{root},{},{},{},{identity},{verdict}",
                rs.kind(),
                output::element_str(&u),
                output::element_str(&v),
                word.len()
            )],
        ),
    }
    Ok(Outcome::Pass)
}
