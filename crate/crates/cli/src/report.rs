//! The `e1` and `chartab` commands and their JSON reports.

use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use eigenone::e1::{
    assemble, check_character, default_characters, structural_certificate, CharacterVerdict, Mode,
    Options, Status,
};
use eigenone::groups::DEFAULT_AUT_BOUND;
use eigenone::{Automorphism, CharacterTable, Perm, PermGroup};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cache::{default_dir, table_for};
use crate::error::{CliError, CliResult};
use crate::spec::{parse_group_spec, GroupSpec};
use crate::FORMAT;

pub const DEFAULT_MAX_ORDER: usize = 40_320;
const AUT_CLOSURE_LIMIT: usize = 50_000_000;

/// Order bound for group closure, from `EIGENONE_MAX_ORDER` if set.
pub fn max_order() -> usize {
    std::env::var("EIGENONE_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharFilter {
    /// Every examined character of this degree.
    Degree(usize),
    /// The character with this index in the sorted table.
    Index(usize),
}

impl std::str::FromStr for CharFilter {
    type Err = String;

    /// A bare integer filters by degree; `#N` selects by index.
    fn from_str(s: &str) -> Result<Self, String> {
        let (index, digits) = match s.strip_prefix('#') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let n: usize = digits
            .parse()
            .map_err(|_| format!("expected N or #N, got {s:?}"))?;
        Ok(if index {
            CharFilter::Index(n)
        } else {
            CharFilter::Degree(n)
        })
    }
}

#[derive(Debug, Clone)]
pub struct E1Args {
    pub spec: String,
    pub chars: Option<CharFilter>,
    pub pairs_even_ok: bool,
    pub mode: Mode,
    pub aut_file: Option<PathBuf>,
    pub seed: u64,
    pub jobs: usize,
    pub aut_bound: usize,
    pub cache_dir: Option<PathBuf>,
}

impl E1Args {
    pub fn new(spec: &str) -> Self {
        E1Args {
            spec: spec.to_string(),
            chars: None,
            pairs_even_ok: false,
            mode: Mode::Fast,
            aut_file: None,
            seed: 0,
            jobs: 1,
            aut_bound: DEFAULT_AUT_BOUND,
            cache_dir: Some(default_dir()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct E1Report {
    pub format: u32,
    pub group: String,
    pub spec: GroupSpec,
    pub order: usize,
    pub mode: &'static str,
    pub seed: u64,
    pub pairs_even_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structural: Option<eigenone::e1::Certificate>,
    pub characters: Vec<CharacterVerdict>,
    pub overall: Status,
}

impl E1Report {
    pub fn exit_code(&self) -> i32 {
        status_code(self.overall)
    }
}

pub fn status_code(s: Status) -> i32 {
    match s {
        Status::Holds => 0,
        Status::Fails => 1,
        Status::Unknown => 3,
    }
}

/// Automorphism file: a list of automorphisms, each given by the images of
/// the group's generators in cycle notation.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum AutFile {
    Versioned {
        format: u32,
        automorphisms: Vec<Vec<String>>,
    },
    Bare(Vec<Vec<String>>),
}

/// The group generated by the listed automorphisms and the inner ones.
pub fn load_automorphisms(g: &PermGroup, path: &Path) -> CliResult<Vec<Automorphism>> {
    let text = std::fs::read_to_string(path)?;
    let lists = match serde_json::from_str::<AutFile>(&text)? {
        AutFile::Versioned {
            format,
            automorphisms,
        } => {
            if format != FORMAT {
                return Err(CliError::Usage(format!(
                    "unsupported automorphism file format {format}"
                )));
            }
            automorphisms
        }
        AutFile::Bare(lists) => lists,
    };
    let mut gens = Vec::new();
    for images in &lists {
        let perms = images
            .iter()
            .map(|s| Perm::parse_cycles(s, Some(g.degree())))
            .collect::<eigenone::Result<Vec<_>>>()?;
        gens.push(Automorphism::from_generator_images(g, &perms)?);
    }
    gens.extend(
        g.generator_indices()
            .into_iter()
            .map(|s| Automorphism::inner(g, s)),
    );
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let id = Automorphism::identity(g);
    seen.insert(id.map().to_vec());
    let mut all = vec![id];
    let mut i = 0;
    while i < all.len() {
        for s in &gens {
            let next = all[i].then(s);
            if seen.insert(next.map().to_vec()) {
                if (all.len() + 1) * g.order() > AUT_CLOSURE_LIMIT {
                    return Err(CliError::Usage(
                        "automorphism group from file is too large".into(),
                    ));
                }
                all.push(next);
            }
        }
        i += 1;
    }
    Ok(all)
}

fn select(table: &CharacterTable, args: &E1Args) -> CliResult<Vec<usize>> {
    match args.chars {
        None => Ok(default_characters(table, args.pairs_even_ok)?),
        Some(CharFilter::Index(i)) => {
            if i >= table.len() {
                return Err(CliError::Usage(format!(
                    "character #{i} does not exist ({} characters)",
                    table.len()
                )));
            }
            Ok(vec![i])
        }
        Some(CharFilter::Degree(d)) => {
            if d % 2 == 0 && !args.pairs_even_ok {
                return Err(CliError::Usage(format!(
                    "degree {d} is even; pass --pairs-even-ok to check even-degree pairs"
                )));
            }
            Ok(default_characters(table, args.pairs_even_ok)?
                .into_iter()
                .filter(|&c| table.degree(c) == d)
                .collect())
        }
    }
}

pub fn run_e1(args: &E1Args) -> CliResult<E1Report> {
    let g = Arc::new(parse_group_spec(&args.spec, max_order())?);
    let (table, _) = table_for(g.clone(), args.cache_dir.as_deref())?;
    let auts = match &args.aut_file {
        Some(p) => Some(load_automorphisms(&g, p)?),
        None => None,
    };
    let chars = select(&table, args)?;
    let opts = Options {
        mode: args.mode,
        seed: args.seed,
        aut_bound: args.aut_bound,
        pairs_even_ok: args.pairs_even_ok,
        ..Options::default()
    };
    let auts = auts.as_deref();
    let structural = structural_certificate(&table, &chars, &opts, auts)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let characters = pool.install(|| {
        chars
            .par_iter()
            .map(|&c| check_character(&table, c, &opts, auts, structural.as_ref()))
            .collect::<eigenone::Result<Vec<_>>>()
    })?;
    let verdict = assemble(g.order(), structural, characters);
    Ok(E1Report {
        format: FORMAT,
        group: args.spec.trim().to_string(),
        spec: GroupSpec::classify(&args.spec),
        order: verdict.order,
        mode: match args.mode {
            Mode::Fast => "fast",
            Mode::Validate => "validate",
        },
        seed: args.seed,
        pairs_even_ok: args.pairs_even_ok,
        structural: verdict.structural,
        characters: verdict.characters,
        overall: verdict.overall,
    })
}

pub fn render_e1(r: &E1Report) -> String {
    let mut out = format!(
        "group {} (order {}): {}\n",
        r.group,
        r.order,
        r.overall.as_str()
    );
    if let Some(c) = &r.structural {
        out += &format!("  structural certificate: {}\n", c.method.as_str());
    }
    for c in &r.characters {
        out += &format!(
            "  chi#{} degree {} (kernel order {}): {}\n",
            c.index,
            c.degree,
            c.kernel_order,
            c.status.as_str()
        );
        for t in &c.nu_classes {
            let nu = if t.nu.is_empty() {
                "*".to_string()
            } else {
                t.nu.join(" ")
            };
            let sign = match t.sign {
                1 => "+",
                -1 => "-",
                _ => "+-",
            };
            out += &format!(
                "    nu [{nu}] sign {sign}: {} via {}",
                t.status.as_str(),
                t.certificate.method.as_str()
            );
            if let Some(w) = &t.witness {
                out += &format!(", witness {}", w.perm);
            }
            out.push('\n');
        }
    }
    out
}

pub fn chartab(spec: &str, cache_dir: Option<&Path>) -> CliResult<Value> {
    let g = Arc::new(parse_group_spec(spec, max_order())?);
    let (t, _) = table_for(g.clone(), cache_dir)?;
    let classes: Vec<Value> = g
        .conjugacy_classes()
        .iter()
        .map(|c| {
            json!({
                "representative": g.element(c.representative).to_cycle_string(),
                "size": c.size,
                "order": g.element_order(c.representative),
            })
        })
        .collect();
    let characters: Vec<Value> = (0..t.len())
        .map(|i| {
            json!({
                "index": i,
                "degree": t.degree(i),
                "indicator": t.fs_indicator(i),
                "values": t.character(i).iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let power_maps: serde_json::Map<String, Value> = t
        .power_maps()
        .iter()
        .map(|(p, m)| (p.to_string(), json!(m)))
        .collect();
    Ok(json!({
        "format": FORMAT,
        "group": spec.trim(),
        "order": g.order(),
        "classes": classes,
        "power_maps": power_maps,
        "characters": characters,
    }))
}

pub fn render_chartab(v: &Value) -> String {
    let mut out = format!(
        "{} (order {})\n",
        v["group"].as_str().unwrap_or(""),
        v["order"]
    );
    let classes = v["classes"].as_array().cloned().unwrap_or_default();
    let mut rows: Vec<Vec<String>> = vec![std::iter::once("".to_string())
        .chain(classes.iter().map(|c| {
            format!(
                "{}{}",
                c["order"],
                c["representative"].as_str().unwrap_or("")
            )
        }))
        .collect()];
    for c in v["characters"].as_array().into_iter().flatten() {
        let mut row = vec![format!("X{}", c["index"])];
        row.extend(
            c["values"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|x| x.as_str().unwrap_or("").to_string()),
        );
        rows.push(row);
    }
    let width: Vec<usize> = (0..rows[0].len())
        .map(|j| {
            rows.iter()
                .map(|r| r.get(j).map_or(0, |s| s.len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&width)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        out += cells.join("  ").trim_end();
        out.push('\n');
    }
    out
}
