//! `verify-report`: replay the eigenvalue checks recorded in an e1 report.

use std::path::Path;
use std::sync::Arc;

use eigenone::e1::{check_triple, is_witness, solve_intertwiner, IntertwinerData};
use eigenone::reps::{build_irreducible_rep, faithful_quotient, MatrixRep};
use eigenone::{Automorphism, CharacterTable, Perm};
use serde::Serialize;
use serde_json::Value;

use crate::cache::table_for;
use crate::error::{CliError, CliResult};
use crate::report::max_order;
use crate::spec::parse_group_spec;
use crate::FORMAT;

/// Data needed to replay the checks of one character: the faithful quotient,
/// its table, and a fresh representation.
pub struct PairContext {
    pub table: CharacterTable,
    pub chi: usize,
    /// Image in the quotient of each element of the original group.
    pub projection: Vec<usize>,
    pub rep: MatrixRep,
}

impl PairContext {
    /// The intertwiner for an automorphism given by generator images.
    pub fn intertwiner(&self, nu: &[&str], seed: u64) -> CliResult<IntertwinerData> {
        let qg = self.table.group();
        let perms = nu
            .iter()
            .map(|s| Perm::parse_cycles(s, Some(qg.degree())))
            .collect::<eigenone::Result<Vec<_>>>()?;
        let nu = Automorphism::from_generator_images(qg, &perms)?;
        Ok(solve_intertwiner(
            &self.rep,
            &nu,
            self.table.character(self.chi),
            seed,
        )?)
    }
}

pub fn pair_context(table: &CharacterTable, chi: usize, seed: u64) -> CliResult<PairContext> {
    let q = faithful_quotient(table, table.character(chi))?;
    let (qtable, qchi) = if q.faithful {
        (table.clone(), chi)
    } else {
        let t = CharacterTable::compute(q.group.clone())?;
        let i = t
            .irr()
            .iter()
            .position(|r| *r == q.character)
            .ok_or_else(|| CliError::Verification("quotient character not found".into()))?;
        (t, i)
    };
    let rep = build_irreducible_rep(&qtable, qchi, seed)?;
    Ok(PairContext {
        table: qtable,
        chi: qchi,
        projection: q.projection,
        rep,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub format: u32,
    pub witnesses_checked: usize,
    pub failures_rescanned: usize,
    /// Tasks settled by a certificate alone; nothing to replay.
    pub certificate_only: usize,
    pub problems: Vec<String>,
    pub ok: bool,
}

fn field<'a>(v: &'a Value, key: &str) -> CliResult<&'a Value> {
    v.get(key)
        .ok_or_else(|| CliError::Verification(format!("report is missing {key:?}")))
}

pub fn verify_report(path: &Path, cache_dir: Option<&Path>) -> CliResult<VerifySummary> {
    let report: Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    if field(&report, "format")?.as_u64() != Some(FORMAT as u64) {
        return Err(CliError::Verification("unsupported report format".into()));
    }
    let spec = field(&report, "group")?
        .as_str()
        .ok_or_else(|| CliError::Verification("group must be a string".into()))?;
    let seed = field(&report, "seed")?.as_u64().unwrap_or(0);
    let g = Arc::new(parse_group_spec(spec, max_order())?);
    if field(&report, "order")?.as_u64() != Some(g.order() as u64) {
        return Err(CliError::Verification(
            "group order does not match the report".into(),
        ));
    }
    let (table, _) = table_for(g.clone(), cache_dir)?;

    let mut summary = VerifySummary {
        format: FORMAT,
        witnesses_checked: 0,
        failures_rescanned: 0,
        certificate_only: 0,
        problems: Vec::new(),
        ok: true,
    };
    let characters = field(&report, "characters")?
        .as_array()
        .ok_or_else(|| CliError::Verification("characters must be a list".into()))?;
    for c in characters {
        let chi = field(c, "index")?.as_u64().unwrap_or(u64::MAX) as usize;
        if chi >= table.len() {
            return Err(CliError::Verification(format!("no character #{chi}")));
        }
        let mut ctx: Option<PairContext> = None;
        for task in field(c, "nu_classes")?.as_array().into_iter().flatten() {
            let nu_text: Vec<&str> = field(task, "nu")?
                .as_array()
                .into_iter()
                .flatten()
                .filter_map(|s| s.as_str())
                .collect();
            let sign = field(task, "sign")?.as_i64().unwrap_or(0) as i8;
            let status = field(task, "status")?.as_str().unwrap_or("");
            let witness = task
                .get("witness")
                .and_then(|w| w.get("element"))
                .and_then(|e| e.as_u64());
            if witness.is_none() && status != "fails" {
                summary.certificate_only += 1;
                continue;
            }
            if nu_text.is_empty() || !(sign == 1 || sign == -1) {
                summary
                    .problems
                    .push(format!("chi#{chi}: task without nu or sign"));
                continue;
            }
            if ctx.is_none() {
                ctx = Some(pair_context(&table, chi, seed)?);
            }
            let ctx = ctx.as_ref().unwrap();
            let (rep, it) = (&ctx.rep, ctx.intertwiner(&nu_text, seed)?);
            match witness {
                Some(e) => {
                    let e = e as usize;
                    summary.witnesses_checked += 1;
                    if e >= g.order() || !is_witness(rep, &it, sign, ctx.projection[e])? {
                        summary.problems.push(format!(
                            "chi#{chi} nu {nu_text:?} sign {sign}: witness {e} rejected"
                        ));
                    }
                }
                None => {
                    summary.failures_rescanned += 1;
                    if check_triple(rep, &it, sign)?.holds() {
                        summary.problems.push(format!(
                            "chi#{chi} nu {nu_text:?} sign {sign}: failure not confirmed"
                        ));
                    }
                }
            }
        }
    }
    summary.ok = summary.problems.is_empty();
    Ok(summary)
}
