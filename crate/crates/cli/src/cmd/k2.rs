use super::{parse_ring, CliError, Ctx, Outcome};
use crate::config::Format;
use crate::output;
use chevwidth_core::ktheory::{k2_ring_structure, K2Class};
use chevwidth_core::rings::{grammar, RingDescriptor};
use serde_json::json;
use std::collections::BTreeMap;

/// Tame symbol of a pair of rational functions, reported place by place.
pub fn class(ctx: &Ctx, ring: &str, f_src: &str, g_src: &str) -> Result<Outcome, CliError> {
    let ring = parse_ring(ring)?;
    let RingDescriptor::RationalFn(base) = &ring else {
        return Err(CliError::Usage(format!(
            "symbols take valuations of rational functions; pass --ring \"F<q>(t)\", not {ring}"
        )));
    };
    let f = grammar::parse_element(&ring, f_src)?;
    let g = grammar::parse_element(&ring, g_src)?;
    if f.is_zero() || g.is_zero() {
        return Err(CliError::Usage("symbol arguments must be nonzero".into()));
    }

    let class = K2Class::symbol(&f, &g)?;
    let field = base.field();
    let mut components: BTreeMap<String, String> = BTreeMap::new();
    for res in class.components() {
        components.insert(
            res.place().label(&field),
            grammar::poly_to_string(&field, res.value(), "t"),
        );
    }

    match ctx.format {
        Format::Json => output::print_json(&json!({
            "ring": ring.to_string(),
            "f": output::element_str(&f),
            "g": output::element_str(&g),
            "trivial": class.is_trivial(),
            "components": components,
        })),
        Format::Csv => {
            let rows: Vec<String> = components
                .iter()
                .map(|(place, residue)| format!("{place},{residue}"))
                .collect();
            output::print_csv("place,residue", &rows);
        }
    }
    Ok(Outcome::Pass)
}

/// Group structure of K2 for a polynomial or Laurent coefficient ring.
pub fn ring(ctx: &Ctx, ring: &str) -> Result<Outcome, CliError> {
    let ring = parse_ring(ring)?;
    let report = k2_ring_structure(&ring)?;

    match ctx.format {
        Format::Json => output::print_json(&json!({
            "ring": report.ring.to_string(),
            "order": report.order,
            "checked": report.checked,
        })),
        Format::Csv => output::print_csv(
            "ring,order",
            &[format!("{},{}", report.ring, report.order)],
        ),
    }
    Ok(Outcome::Pass)
}
