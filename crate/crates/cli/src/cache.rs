//! Hash-guarded cache for derived commutator coefficient tables.
//!
//! A cache file holds the serialized table and a SHA-256 of those bytes.
//! Only a clean hash match is trusted; anything else (unreadable file,
//! stale hash, wrong system, wrong pair set) forces a recompute and a
//! rewrite, never a silent reuse. A file whose hash does match is loaded
//! as-is: its values are certified later by whatever verification consumes
//! them, so corrupt coefficients surface as relation failures, not here.

use crate::cmd::{write_file, CliError, Ctx};
use chevwidth_core::liealg::commutator::{CommutatorFormula, CommutatorTables, CommutatorTerm};
use chevwidth_core::liealg::StructureConstants;
use chevwidth_core::roots::RootSystem;
use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};
use std::path::Path;

#[derive(Serialize, Deserialize, Clone)]
pub struct PairRow {
    pub alpha: usize,
    pub beta: usize,
    /// (i, j, root index of i*alpha + j*beta, coefficient), product order.
    pub terms: Vec<(i32, i32, usize, i64)>,
}

#[derive(Serialize, Deserialize)]
struct Payload {
    system: String,
    pairs: Vec<PairRow>,
}

pub struct TableSource {
    pub tables: CommutatorTables,
    pub rows: Vec<PairRow>,
    /// "derived", "created", "cache", or "recomputed"; for reports.
    pub origin: &'static str,
}

/// All ordered non-opposite root pairs, the domain of the formula.
pub fn all_pairs(rs: &RootSystem) -> Vec<(usize, usize)> {
    let n = rs.num_roots();
    let mut out = Vec::with_capacity(n * (n - 2));
    for a in 0..n {
        for b in 0..n {
            if a != b && b != rs.negate(a) {
                out.push((a, b));
            }
        }
    }
    out
}

fn derive(consts: &StructureConstants) -> (CommutatorTables, Vec<PairRow>) {
    let mut tables = CommutatorTables::new(consts);
    let rows = all_pairs(consts.system())
        .into_iter()
        .map(|(alpha, beta)| PairRow {
            alpha,
            beta,
            terms: tables
                .formula(alpha, beta)
                .terms
                .iter()
                .map(|t| (t.i, t.j, t.root, t.coeff))
                .collect(),
        })
        .collect();
    (tables, rows)
}

fn hex_sha256(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Either the clean rows or the reason the file cannot be trusted.
fn try_load(path: &Path, system: &str, expected: &[(usize, usize)]) -> Result<Vec<PairRow>, &'static str> {
    let text = std::fs::read_to_string(path).map_err(|_| "unreadable")?;
    let outer: serde_json::Value = serde_json::from_str(&text).map_err(|_| "unreadable")?;
    let payload = outer
        .get("payload")
        .and_then(|v| v.as_str())
        .ok_or("unreadable")?;
    let stored = outer
        .get("sha256")
        .and_then(|v| v.as_str())
        .ok_or("unreadable")?;
    if hex_sha256(payload.as_bytes()) != stored {
        return Err("hash mismatch");
    }
    let parsed: Payload = serde_json::from_str(payload).map_err(|_| "unreadable")?;
    if parsed.system != system {
        return Err("wrong system");
    }
    let pairs_match = parsed.pairs.len() == expected.len()
        && parsed
            .pairs
            .iter()
            .zip(expected)
            .all(|(row, &(a, b))| row.alpha == a && row.beta == b);
    if !pairs_match {
        return Err("pair set mismatch");
    }
    Ok(parsed.pairs)
}

fn seed_tables(consts: &StructureConstants, rows: &[PairRow]) -> CommutatorTables {
    let mut tables = CommutatorTables::new(consts);
    for row in rows {
        let terms = row
            .terms
            .iter()
            .map(|&(i, j, root, coeff)| CommutatorTerm { i, j, root, coeff })
            .collect();
        tables.insert_formula(row.alpha, row.beta, CommutatorFormula { terms });
    }
    tables
}

fn write_cache(path: &Path, system: &str, rows: &[PairRow]) -> Result<(), CliError> {
    let payload = serde_json::to_string(&Payload {
        system: system.to_string(),
        pairs: rows.to_vec(),
    })?;
    let outer = json!({
        "sha256": hex_sha256(payload.as_bytes()),
        "payload": payload,
    });
    write_file(path, &format!("{}\n", serde_json::to_string_pretty(&outer)?))
}

/// The coefficient tables for a system, from the cache directory when one
/// is configured, deriving (and writing back) otherwise.
pub fn tables_for(ctx: &Ctx, consts: &StructureConstants) -> Result<TableSource, CliError> {
    let Some(dir) = &ctx.cache_dir else {
        let (tables, rows) = derive(consts);
        return Ok(TableSource {
            tables,
            rows,
            origin: "derived",
        });
    };
    std::fs::create_dir_all(dir).map_err(|e| CliError::Io {
        path: dir.display().to_string(),
        err: e,
    })?;
    let system = consts.system().kind().to_string();
    let path = dir.join(format!("constants-{system}.json"));
    let expected = all_pairs(consts.system());

    if !path.exists() {
        let (tables, rows) = derive(consts);
        write_cache(&path, &system, &rows)?;
        eprintln!("chevwidth: wrote constants cache for {system}");
        return Ok(TableSource {
            tables,
            rows,
            origin: "created",
        });
    }
    match try_load(&path, &system, &expected) {
        Ok(rows) => {
            eprintln!("chevwidth: loaded constants for {system} from cache");
            let tables = seed_tables(consts, &rows);
            Ok(TableSource {
                tables,
                rows,
                origin: "cache",
            })
        }
        Err(reason) => {
            eprintln!("chevwidth: constants cache for {system}: {reason}; recomputing");
            let (tables, rows) = derive(consts);
            write_cache(&path, &system, &rows)?;
            Ok(TableSource {
                tables,
                rows,
                origin: "recomputed",
            })
        }
    }
}
