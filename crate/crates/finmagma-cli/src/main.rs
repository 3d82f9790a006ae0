use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use finmagma::harness::checks::{lookup, render_report, run_check_with, verify_all_with, CheckResult, Overrides, ParamRange};
use finmagma::harness::report::{build_text, built_table, classify_text, props_text, scan_text, subs_text};
use finmagma::harness::{parse, Built, Library, Mutant, Mutation, Source};
use finmagma::neutro::Flavor;

#[derive(Parser)]
#[command(name = "finmagma", version, about = "Finite magmas, loops and neutrosophic structures, with a theorem harness")]
struct Cli {
    /// Also write the machine-readable report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a structure and print its serialized form.
    Build { spec: String },
    /// Print the Cayley table.
    Table { spec: String },
    /// Structural properties and identity scans.
    Props { spec: String },
    /// Closed substructures (sub-multis for U(...) specs).
    Subs {
        spec: String,
        /// plain, neutrosophic or pseudo
        #[arg(long)]
        flavor: Option<Flavor>,
        /// Allow empty parts in sub-multis.
        #[arg(long)]
        deficit: bool,
    },
    /// Lagrange, Sylow and Cauchy verdicts.
    Classify {
        spec: String,
        #[arg(long)]
        flavor: Option<Flavor>,
    },
    /// Run one registered check.
    Verify {
        id: String,
        /// a, a..b or a..=b
        #[arg(long)]
        range: Option<ParamRange>,
        /// Run against a corrupted source instead of the library.
        #[arg(long)]
        mutant: Option<Mutation>,
    },
    /// Run every registered check.
    VerifyAll {
        #[arg(long)]
        mutant: Option<Mutation>,
    },
    /// List the registered checks.
    Checks,
    /// Sweep a family: Ln, Z, Zstar, Zstarstar or Zfull.
    Scan {
        family: String,
        #[arg(long = "n-range")]
        n_range: ParamRange,
    },
}

fn built(spec: &str) -> Result<Built> {
    parse(spec).map_err(|e| anyhow::anyhow!("{e}\n  {}\n  {}^", e.spec, " ".repeat(e.pos)))
}

fn source(mutant: Option<Mutation>) -> Box<dyn Source> {
    match mutant {
        Some(m) => Box::new(Mutant(m)),
        None => Box::new(Library),
    }
}

fn emit(out: &Option<PathBuf>, human: &str, machine: &str) -> Result<()> {
    print!("{human}");
    if let Some(path) = out {
        fs::write(path, machine).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn report_checks(out: &Option<PathBuf>, results: Vec<CheckResult>) -> Result<bool> {
    let human: String = results.iter().map(|r| r.summary_line() + "\n").collect();
    emit(out, &human, &render_report(&results))?;
    Ok(results.iter().all(|r| r.passed))
}

fn run(cli: Cli) -> Result<bool> {
    let out = &cli.out;
    match cli.cmd {
        Cmd::Build { spec } => {
            let t = build_text(&built(&spec)?);
            emit(out, &t, &t)?;
        }
        Cmd::Table { spec } => {
            let b = built(&spec)?;
            emit(out, &built_table(&b), &build_text(&b))?;
        }
        Cmd::Props { spec } => {
            let t = props_text(&built(&spec)?)?;
            emit(out, &t, &t)?;
        }
        Cmd::Subs { spec, flavor, deficit } => {
            let t = subs_text(&built(&spec)?, flavor, deficit)?;
            emit(out, &t, &t)?;
        }
        Cmd::Classify { spec, flavor } => {
            let t = classify_text(&built(&spec)?, flavor)?;
            emit(out, &t, &t)?;
        }
        Cmd::Verify { id, range, mutant } => {
            lookup(&id)?;
            let src = source(mutant);
            let r = run_check_with(src.as_ref(), &id, &Overrides { range, budget: None })?;
            return report_checks(out, vec![r]);
        }
        Cmd::VerifyAll { mutant } => {
            let src = source(mutant);
            let results = verify_all_with(src.as_ref()).into_iter().collect::<Result<Vec<_>, _>>()?;
            return report_checks(out, results);
        }
        Cmd::Checks => {
            let t: String = finmagma::harness::registry()
                .iter()
                .map(|c| format!("{} [{} {}] control={}: {}\n", c.id, c.param, c.range, c.control.0, c.summary))
                .collect();
            emit(out, &t, &t)?;
        }
        Cmd::Scan { family, n_range } => {
            let t = scan_text(&family, n_range)?;
            emit(out, &t, &t)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
