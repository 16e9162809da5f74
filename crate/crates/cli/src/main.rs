use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eigenone::e1::{Mode, Prop5Case};
use eigenone::groups::DEFAULT_AUT_BOUND;
use eigenone_cli::bounds::{
    bounds_report, g2_rows, parse_power, parse_range, prop5_rows, render_bounds,
};
use eigenone_cli::cache::default_dir;
use eigenone_cli::report::{chartab, render_chartab, render_e1, CharFilter};
use eigenone_cli::verify::verify_report;
use eigenone_cli::{run_e1, CliError, CliResult, E1Args};
use serde_json::Value;

#[derive(Parser)]
#[command(
    name = "eigenone",
    version,
    about = "Decide the eigenvalue-one property of finite groups"
)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Neither read nor write the character-table cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Fast,
    Validate,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    G2,
    Prop5a,
    Prop5b,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of a group.
    Chartab { spec: String },
    /// Check the eigenvalue-one property.
    E1 {
        spec: String,
        /// Degree filter (`3`) or character index (`#3`).
        #[arg(long = "char")]
        chars: Option<CharFilter>,
        /// Also check real even-degree characters with indicator +1.
        #[arg(long)]
        pairs_even_ok: bool,
        #[arg(long, value_enum, default_value = "fast")]
        mode: ModeArg,
        /// JSON list of automorphisms as generator images.
        #[arg(long)]
        aut_file: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Largest group order for automorphism enumeration.
        #[arg(long, default_value_t = DEFAULT_AUT_BOUND)]
        aut_bound: usize,
    },
    /// Evaluate degree inequalities exactly.
    Bounds {
        #[arg(value_enum)]
        family: Family,
        /// Field exponent: `1`, `1..5` or `1,3`.
        #[arg(long, default_value = "1")]
        f: String,
        /// Rank parameter for prop5a.
        #[arg(long, default_value_t = 5)]
        d: u32,
        /// Character degree, as an integer or `b^e`.
        #[arg(long)]
        chi1: Option<String>,
    },
    /// Replay the eigenvalue checks recorded in an e1 report.
    VerifyReport { file: PathBuf },
}

/// JSON document, its pretty rendering, and the exit code.
type Output = (Value, String, u8);

fn run(cli: &Cli) -> CliResult<Output> {
    let cache = (!cli.no_cache).then(default_dir);
    match &cli.command {
        Command::Chartab { spec } => {
            let v = chartab(spec, cache.as_deref())?;
            let text = render_chartab(&v);
            Ok((v, text, 0))
        }
        Command::E1 {
            spec,
            chars,
            pairs_even_ok,
            mode,
            aut_file,
            seed,
            jobs,
            aut_bound,
        } => {
            let args = E1Args {
                chars: *chars,
                pairs_even_ok: *pairs_even_ok,
                mode: match mode {
                    ModeArg::Fast => Mode::Fast,
                    ModeArg::Validate => Mode::Validate,
                },
                aut_file: aut_file.clone(),
                seed: *seed,
                jobs: *jobs,
                aut_bound: *aut_bound,
                cache_dir: cache,
                ..E1Args::new(spec)
            };
            let r = run_e1(&args)?;
            let code = r.exit_code() as u8;
            Ok((serde_json::to_value(&r)?, render_e1(&r), code))
        }
        Command::Bounds { family, f, d, chi1 } => {
            let fs = parse_range(f)?;
            let rows = match family {
                Family::G2 => g2_rows(&fs)?,
                Family::Prop5a | Family::Prop5b => {
                    let chi1 = chi1
                        .as_deref()
                        .ok_or_else(|| CliError::Usage("--chi1 is required".into()))?;
                    let case = if matches!(family, Family::Prop5a) {
                        Prop5Case::A
                    } else {
                        Prop5Case::B
                    };
                    prop5_rows(case, *d, &fs, &parse_power(chi1)?)?
                }
            };
            let code = u8::from(!rows.iter().all(|r| r.passes));
            Ok((bounds_report(&rows), render_bounds(&rows), code))
        }
        Command::VerifyReport { file } => {
            let s = verify_report(file, cache.as_deref())?;
            let text = format!(
                "{} witnesses checked, {} failures rescanned, {} certificate-only tasks: {}\n{}",
                s.witnesses_checked,
                s.failures_rescanned,
                s.certificate_only,
                if s.ok { "ok" } else { "PROBLEMS" },
                s.problems.join("\n")
            );
            let code = u8::from(!s.ok);
            Ok((serde_json::to_value(&s)?, text, code))
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok((v, text, code)) => {
            let body = if cli.pretty {
                text.trim_end().to_string()
            } else {
                serde_json::to_string(&v).expect("serializable")
            };
            // a closed pipe is not an error for a report printer
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(code)
        }
        Err(e) => {
            let _ = writeln!(std::io::stdout().lock(), "{}", e.to_json());
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
