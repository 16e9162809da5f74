//! Orchestration of the E1 decision for pairs and groups.

use std::sync::Arc;

use log::{debug, info};
use serde_json::json;

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::groups::{
    automorphism_group_bounded, characteristic_structure, outer_classes_fixing_char, Automorphism,
    ExtendedGroup, PermGroup, DEFAULT_AUT_BOUND,
};
use crate::reps::{build_irreducible_rep, faithful_quotient, MatrixRep};

use super::certs::{cor4_certificate, prop2_search, prop3_certificate};
use super::direct::check_triple;
use super::intertwiner::solve_intertwiner;
use super::restriction::restriction_strategy;
use super::verdict::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// First certificate in pipeline order wins.
    #[default]
    Fast,
    /// Always run the direct scan and compare every certificate with it.
    Validate,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub mode: Mode,
    pub seed: u64,
    pub aut_bound: usize,
    /// Also check real characters of even degree with indicator +1.
    pub pairs_even_ok: bool,
    /// At most this many characteristic subgroups are tried for restriction.
    pub restriction_candidates: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            mode: Mode::Fast,
            seed: 0,
            aut_bound: DEFAULT_AUT_BOUND,
            pairs_even_ok: false,
            restriction_candidates: 2,
        }
    }
}

/// Theorem-backed certificates that apply to every odd-degree character.
/// `check_factor` decides the simple factor of a characteristically simple group.
pub fn structural_fastpaths(
    g: &PermGroup,
    auts: Option<&[Automorphism]>,
    check_factor: impl Fn(Arc<PermGroup>) -> Result<Status>,
) -> Result<Option<Certificate>> {
    if g.is_solvable() {
        return Ok(Some(Certificate::new(
            Method::SolvableCor3,
            json!({ "derived_length": g.derived_series().len() - 1 }),
        )));
    }
    let cs = characteristic_structure(g, auts)?;
    if let Some((factor, k)) = cs.direct_power {
        if k >= 2 && check_factor(Arc::new(factor.clone()))? == Status::Holds {
            return Ok(Some(Certificate::new(
                Method::CharSimpleProp1,
                json!({ "factor_order": factor.order(), "power": k }),
            )));
        }
    }
    Ok(None)
}

/// Characters examined by default: nontrivial, real, indicator +1, odd degree
/// (plus even degree when `pairs_even_ok`).
pub fn default_characters(table: &CharacterTable, pairs_even_ok: bool) -> Result<Vec<usize>> {
    let mut out = table.odd_real_nontrivial()?;
    if pairs_even_ok {
        for i in 0..table.len() {
            if !table.is_trivial(i)
                && table.degree(i).is_multiple_of(2)
                && table.fs_indicator(i) == 1
            {
                out.push(i);
            }
        }
        out.sort_unstable();
    }
    Ok(out)
}

/// The group-level structural certificate relevant to `chars`, if any.
pub fn structural_certificate(
    table: &CharacterTable,
    chars: &[usize],
    opts: &Options,
    auts: Option<&[Automorphism]>,
) -> Result<Option<Certificate>> {
    if !chars.iter().any(|&c| table.degree(c) % 2 == 1) {
        return Ok(None);
    }
    let sub_opts = Options {
        mode: Mode::Fast,
        ..opts.clone()
    };
    structural_fastpaths(table.group(), auts, |factor| {
        let t = CharacterTable::compute(factor)?;
        let cs = t.odd_real_nontrivial()?;
        Ok(check_characters(&t, &cs, &sub_opts, None)?.overall)
    })
}

/// Combine per-character verdicts into a group verdict.
pub fn assemble(
    order: usize,
    structural: Option<Certificate>,
    characters: Vec<CharacterVerdict>,
) -> GroupVerdict {
    let overall = characters
        .iter()
        .fold(Status::Holds, |acc, c| acc.and(c.status));
    GroupVerdict {
        order,
        structural,
        characters,
        overall,
    }
}

/// Decide E1 for the given characters of `table.group()`.
pub fn check_characters(
    table: &CharacterTable,
    chars: &[usize],
    opts: &Options,
    auts: Option<&[Automorphism]>,
) -> Result<GroupVerdict> {
    let structural = structural_certificate(table, chars, opts, auts)?;
    let characters = chars
        .iter()
        .map(|&c| check_character(table, c, opts, auts, structural.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(table.group().order(), structural, characters))
}

/// Decide E1 for the odd-degree nontrivial real characters of `table.group()`.
pub fn check_group(table: &CharacterTable, opts: &Options) -> Result<GroupVerdict> {
    let chars = default_characters(table, opts.pairs_even_ok)?;
    check_characters(table, &chars, opts, None)
}

/// State shared by the tasks of one character.
struct PairContext {
    table: CharacterTable,
    chi: usize,
    rep: MatrixRep,
    /// Original element index for each quotient element.
    preimage: Vec<usize>,
    characteristic: Vec<Vec<usize>>,
}

/// Decide E1 for one pair `(G, chi)`; `structural` is a group-level certificate.
pub fn check_character(
    table: &CharacterTable,
    chi: usize,
    opts: &Options,
    auts: Option<&[Automorphism]>,
    structural: Option<&Certificate>,
) -> Result<CharacterVerdict> {
    let degree = table.degree(chi);
    let values = table.character(chi);
    let kernel_order = table.kernel(values).len();
    let odd = degree % 2 == 1;
    if table.is_trivial(chi) || !table.is_real(chi) {
        return Err(Error::Precondition(
            "character must be nontrivial and real".into(),
        ));
    }
    if table.fs_indicator(chi) != 1 {
        return Err(Error::Unsupported(
            "real character without an absolutely irreducible real realisation".into(),
        ));
    }
    if let (Some(cert), Mode::Fast, true) = (structural, opts.mode, odd) {
        return Ok(CharacterVerdict {
            index: chi,
            degree,
            kernel_order,
            status: Status::Holds,
            nu_classes: vec![TaskVerdict {
                nu: Vec::new(),
                sign: 0,
                status: Status::Holds,
                witness: None,
                violator: None,
                certificate: cert.clone(),
                validation: None,
            }],
        });
    }

    let q = faithful_quotient(table, values)?;
    let (qtable, qchi) = if q.faithful {
        (table.clone(), chi)
    } else {
        let t = CharacterTable::compute(q.group.clone())?;
        let idx = t
            .irr()
            .iter()
            .position(|r| *r == q.character)
            .ok_or_else(|| Error::Invariant("descended character is not irreducible".into()))?;
        (t, idx)
    };
    let qg = qtable.group().clone();
    let owned;
    let auts: &[Automorphism] = match auts {
        Some(a) if q.faithful => a,
        _ => {
            owned = automorphism_group_bounded(&qg, opts.aut_bound)?;
            &owned
        }
    };
    let nus = outer_classes_fixing_char(&qg, auts, qtable.character(qchi));
    info!(
        "character {chi} (degree {degree}): quotient of order {}, {} automorphism classes",
        qg.order(),
        nus.len()
    );
    let rep = build_irreducible_rep(&qtable, qchi, opts.seed)?;
    let mut preimage = vec![usize::MAX; qg.order()];
    for (x, &y) in q.projection.iter().enumerate() {
        if preimage[y] == usize::MAX {
            preimage[y] = x;
        }
    }
    let mut characteristic = characteristic_structure(&qg, Some(auts))?.characteristic;
    characteristic.sort_by_key(|s| std::cmp::Reverse(s.len()));
    characteristic.truncate(opts.restriction_candidates);
    let ctx = PairContext {
        table: qtable,
        chi: qchi,
        rep,
        preimage,
        characteristic,
    };

    let mut nu_classes = Vec::new();
    for nu in &nus {
        nu_classes.extend(check_nu(table.group(), &ctx, nu, opts, structural, odd)?);
    }
    let status = nu_classes
        .iter()
        .fold(Status::Holds, |acc, t| acc.and(t.status));
    Ok(CharacterVerdict {
        index: chi,
        degree,
        kernel_order,
        status,
        nu_classes,
    })
}

fn witness(g: &PermGroup, ctx: &PairContext, x: usize) -> Witness {
    let e = ctx.preimage[x];
    Witness {
        element: e,
        word: g.word_string(e),
        perm: g.element(e).to_cycle_string(),
    }
}

/// The two sign tasks for one automorphism class.
fn check_nu(
    g: &PermGroup,
    ctx: &PairContext,
    nu: &Automorphism,
    opts: &Options,
    structural: Option<&Certificate>,
    odd: bool,
) -> Result<Vec<TaskVerdict>> {
    let qg = ctx.rep.group().clone();
    let nu_text: Vec<String> = nu
        .generator_images(&qg)
        .iter()
        .map(|p| p.to_cycle_string())
        .collect();
    let it = solve_intertwiner(&ctx.rep, nu, ctx.table.character(ctx.chi), opts.seed)?;
    let eg = ExtendedGroup::new(qg.clone(), nu.clone());
    debug!("nu {:?}: k = {}, lambda = {}", nu_text, it.k, it.lambda);

    // Certificates covering both signs, in pipeline order.
    let validate = opts.mode == Mode::Validate;
    let mut both: Vec<Certificate> = Vec::new();
    if odd {
        if let Some(c) = structural {
            both.push(c.clone());
        }
    }
    if odd && (validate || both.is_empty()) {
        if let Some(c) = cor4_certificate(&eg) {
            both.push(c);
        }
    }
    if odd && (validate || both.is_empty()) {
        if let Some(c) = prop3_certificate(&eg, ctx.rep.dim()) {
            both.push(c);
        }
    }
    if validate || both.is_empty() {
        if let Some(c) = prop2_search(&ctx.rep, &it, &eg)? {
            both.push(c);
        }
    }

    let mut out = Vec::new();
    for sign in [1i8, -1] {
        let mut certs = both.clone();
        let mut restriction_witness = None;
        if validate || certs.is_empty() {
            for h in &ctx.characteristic {
                if let Some(r) =
                    restriction_strategy(&ctx.table, ctx.chi, &ctx.rep, &it, &eg, h, sign)?
                {
                    restriction_witness = Some(r.witness);
                    certs.push(r.certificate);
                    break;
                }
            }
        }
        let direct = if validate || certs.is_empty() {
            Some(check_triple(&ctx.rep, &it, sign)?)
        } else {
            None
        };
        let verdict = match (&direct, certs.first()) {
            (Some(scan), _) if validate || certs.is_empty() => {
                let status = if scan.holds() {
                    Status::Holds
                } else {
                    Status::Fails
                };
                let methods: Vec<Method> = certs.iter().map(|c| c.method).collect();
                TaskVerdict {
                    nu: nu_text.clone(),
                    sign,
                    status,
                    witness: scan.witness.map(|x| witness(g, ctx, x)),
                    violator: (!scan.holds()).then(|| Violator {
                        nu: nu_text.clone(),
                        sign,
                        scanned: scan.scanned,
                    }),
                    certificate: Certificate::new(
                        Method::Direct,
                        json!({ "scanned": scan.scanned }),
                    ),
                    validation: validate.then(|| Validation {
                        direct: status,
                        agree: methods.is_empty() || status == Status::Holds,
                        certificates: methods,
                    }),
                }
            }
            (_, Some(cert)) => TaskVerdict {
                nu: nu_text.clone(),
                sign,
                status: Status::Holds,
                witness: if cert.method == Method::RestrictionChain {
                    restriction_witness.map(|x| witness(g, ctx, x))
                } else {
                    None
                },
                violator: None,
                certificate: cert.clone(),
                validation: None,
            },
            _ => unreachable!("either a certificate or a direct scan is present"),
        };
        out.push(verdict);
    }
    Ok(out)
}
