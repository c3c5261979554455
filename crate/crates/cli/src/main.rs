use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use overcrank::tables::build_table;
use overcrank::verify::{
    all_check_ids, check_identity, crosscheck, run_checks, TableCache, DEFAULT_IDENTITY_ORDER,
    DEFAULT_ORACLE_N_MAX, DEFAULT_SWEEP_N_MAX,
};
use overcrank::{CheckReport, Provenance, Statistic, VerifyConfig};

/// Exact crank tables and checks of their inequalities and identities.
#[derive(Debug, Parser)]
#[command(name = "overcrank", version)]
struct Cli {
    /// Worker threads (defaults to one per core).
    #[arg(long, global = true, env = "OVERCRANK_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Export a table of counts by (n, m).
    Table(TableArgs),
    /// Run inequality sweeps and identity checks.
    Verify(VerifyArgs),
    /// Check one q-series identity.
    Identity(IdentityArgs),
    /// Compare a generating-function table with enumeration.
    Crosscheck(CrosscheckArgs),
}

#[derive(Debug, Args)]
struct StatArgs {
    /// crank, ocrank, m2crank, kcrank or rank.
    #[arg(long)]
    stat: String,
    /// Number of colors for kcrank.
    #[arg(long)]
    k: Option<usize>,
}

impl StatArgs {
    fn statistic(&self) -> anyhow::Result<Statistic> {
        if self.k.is_some() && self.stat != "kcrank" {
            bail!("--k only applies to kcrank");
        }
        Ok(Statistic::parse(&self.stat, self.k)?)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Source {
    /// Generating function when there is one, enumeration otherwise.
    Auto,
    Gf,
    Oracle,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    stat: StatArgs,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Source::Auto)]
    source: Source,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ReportArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report runtime_ms as 0 so identical runs give identical bytes.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Check ids or aliases, comma separated; `all` runs everything.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    check: Vec<String>,
    /// Color counts for the k-crank sweep.
    #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 4, 5, 6])]
    k: Vec<usize>,
    /// Upper n for generating-function sweeps.
    #[arg(long, default_value_t = DEFAULT_SWEEP_N_MAX)]
    n_max: usize,
    /// Truncation order for identities.
    #[arg(long, default_value_t = DEFAULT_IDENTITY_ORDER)]
    order: usize,
    /// Upper n for enumeration crosschecks.
    #[arg(long, default_value_t = DEFAULT_ORACLE_N_MAX)]
    oracle_n_max: usize,
    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Debug, Args)]
struct IdentityArgs {
    #[arg(long)]
    id: String,
    #[arg(long, default_value_t = DEFAULT_IDENTITY_ORDER)]
    order: usize,
    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Debug, Args)]
struct CrosscheckArgs {
    #[command(flatten)]
    stat: StatArgs,
    #[arg(long, default_value_t = DEFAULT_ORACLE_N_MAX)]
    n_max: usize,
    #[command(flatten)]
    report: ReportArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` when some check failed.
fn run(cli: Cli) -> anyhow::Result<bool> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring thread pool")?;
    }
    match cli.command {
        Command::Table(args) => table(args).map(|()| true),
        Command::Verify(args) => verify(args),
        Command::Identity(args) => {
            let report = check_identity(&args.id, args.order, &TableCache::new())?;
            emit(vec![report], &args.report)
        }
        Command::Crosscheck(args) => {
            let report = crosscheck(args.stat.statistic()?, args.n_max)?;
            emit(vec![report], &args.report)
        }
    }
}

fn table(args: TableArgs) -> anyhow::Result<()> {
    let stat = args.stat.statistic()?;
    let provenance = match args.source {
        Source::Auto if stat.has_gf() => Provenance::Gf,
        Source::Auto | Source::Oracle => Provenance::Oracle,
        Source::Gf => Provenance::Gf,
    };
    let t = build_table(stat, args.n_max, provenance)?;
    let out = output(args.out.as_ref())?;
    match args.format {
        Format::Csv => t.write_csv(out)?,
        Format::Json => t.write_json(out)?,
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> anyhow::Result<bool> {
    let ids: Vec<&str> = if args.check.iter().any(|c| c == "all") {
        all_check_ids()
    } else {
        args.check.iter().map(String::as_str).collect()
    };
    let config = VerifyConfig {
        n_max: args.n_max,
        order: args.order,
        oracle_n_max: args.oracle_n_max,
        ks: args.k,
        ..VerifyConfig::default()
    };
    let reports = run_checks(&ids, &config)?;
    emit(reports, &args.report)
}

/// Writes reports as a JSON array and a one-line summary per report to
/// stderr. Returns whether all passed.
fn emit(mut reports: Vec<CheckReport>, args: &ReportArgs) -> anyhow::Result<bool> {
    if args.no_timing {
        for r in &mut reports {
            r.runtime_ms = 0;
        }
    }
    let mut out = output(args.out.as_ref())?;
    serde_json::to_writer_pretty(&mut out, &reports)?;
    writeln!(out)?;
    out.flush()?;
    for r in &reports {
        let scope = ["statistic", "k"]
            .iter()
            .find_map(|key| r.params.get(*key).map(|v| (key, v)))
            .map(|(key, v)| match v.as_str() {
                Some(s) => format!(" [{key}={s}]"),
                None => format!(" [{key}={v}]"),
            })
            .unwrap_or_default();
        eprintln!(
            "{:<4} {}{scope} ({} exceptions)",
            if r.passed() { "ok" } else { "FAIL" },
            r.check_id,
            r.exceptions.len()
        );
    }
    Ok(reports.iter().all(CheckReport::passed))
}

fn output(path: Option<&PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use overcrank::verify::{Exception, Verdict};

    use super::*;

    fn report(verdict: Verdict) -> CheckReport {
        CheckReport {
            check_id: "x".into(),
            params: BTreeMap::new(),
            verdict,
            exceptions: vec![Exception {
                claim: "x".into(),
                m: None,
                n: 3,
                lhs: "-1".into(),
                rhs: "0".into(),
            }],
            expected: Vec::new(),
            informational: Vec::new(),
            runtime_ms: 17,
        }
    }

    #[test]
    fn any_failure_fails_the_batch() {
        let dir = tempfile::tempdir().unwrap();
        let args = ReportArgs {
            out: Some(dir.path().join("r.json")),
            no_timing: true,
        };
        assert!(emit(vec![report(Verdict::Pass)], &args).unwrap());
        assert!(!emit(vec![report(Verdict::Pass), report(Verdict::Fail)], &args).unwrap());
        let written = std::fs::read_to_string(dir.path().join("r.json")).unwrap();
        assert!(written.contains("\"runtime_ms\": 0"));
        assert!(written.contains("\"verdict\": \"fail\""));
    }

    #[test]
    fn k_needs_kcrank() {
        let s = StatArgs {
            stat: "crank".into(),
            k: Some(3),
        };
        assert!(s.statistic().is_err());
    }
}
