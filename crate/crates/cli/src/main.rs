//! `symchar`: exact symmetric-group characters from the command line.
//!
//! Exit status: 0 on success, 1 when a check finds a violation or mismatch,
//! 2 on usage errors, budget overruns and I/O failures.

mod render;

use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use symchar::cache::{read_cache, seed, write_cache};
use symchar::extremal::staircase_spec;
use symchar::mn::DEFAULT_TABLE_BUDGET;
use symchar::verify::{verify, Stratum, DEFAULT_SWEEP_BUDGET};
use symchar::{
    enumerate_family, enumerate_rim_hooks, predicted_value, verify_key_ineq, CycleType,
    Evaluator, ExtremalSpec, PartOrder, Partition,
};

/// Default size limit for single evaluations (`char`, `extremal --check`).
const DEFAULT_EVAL_BUDGET: usize = 40;

#[derive(Parser, Debug)]
#[command(name = "symchar", version, about = "Exact symmetric-group character values and bound checks")]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for sweeps and tables: a positive integer or "auto"
    #[arg(long, global = true, env = "SYMCHAR_WORKERS", default_value = "auto", value_parser = parse_workers)]
    workers: Workers,

    /// Memo cache file, loaded before and saved after single evaluations
    #[arg(long, global = true, env = "SYMCHAR_CACHE")]
    cache: Option<PathBuf>,

    /// Largest n accepted (defaults: 12 for sweeps, 14 for tables, 40 for evaluations)
    #[arg(long, global = true, env = "SYMCHAR_BUDGET")]
    budget: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy)]
enum Workers {
    Auto,
    Fixed(usize),
}

fn parse_workers(s: &str) -> Result<Workers, String> {
    if s == "auto" {
        return Ok(Workers::Auto);
    }
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(Workers::Fixed(n)),
        _ => Err(format!("expected a positive integer or \"auto\", got {s:?}")),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate χ_λ(μ)
    Char {
        lambda: Partition,
        mu: CycleType,
        /// Order in which cycles are peeled off
        #[arg(long, default_value = "descending")]
        order: PartOrder,
        /// Print memo and recursion counters
        #[arg(long)]
        stats: bool,
    },
    /// Print the full character table of S_n
    Table {
        n: usize,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// List the rim hooks of length r
    Rimhooks {
        lambda: Partition,
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build witnesses attaining k! (or (k-1)! with --fixed-point)
    Extremal {
        /// Number of layers of the witness
        k: usize,
        /// Hook length r (odd, larger than every arm)
        #[arg(long = "r")]
        r: Option<usize>,
        /// Arms a1 > a2 > ... (k of them, or k-1 with --fixed-point)
        #[arg(long)]
        arms: Option<String>,
        #[arg(long)]
        fixed_point: bool,
        /// Every odd witness with k arms up to --nmax cells
        #[arg(long, requires = "nmax", conflicts_with_all = ["arms", "r", "fixed_point"])]
        all: bool,
        #[arg(long)]
        nmax: Option<usize>,
        /// Evaluate the witness and compare with the prediction
        #[arg(long)]
        check: bool,
    },
    /// Sweep all λ, μ ⊢ n and check the k! bound
    Verify {
        n: usize,
        /// Restrict to cycle types with a fixed point and check (k-1)!
        #[arg(long)]
        fixed: bool,
        /// Also check t_r·r ≤ n for every λ ⊢ m ≤ n
        #[arg(long)]
        keyineq: bool,
        /// Write the report as JSON
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Write the report as CSV
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    CheckFailed,
}

fn budget(global: &Global, default: usize) -> usize {
    match global.budget {
        Some(b) if b > default => {
            eprintln!("warning: budget raised to {b} (default {default}); this may take a while");
            b
        }
        Some(b) => b,
        None => default,
    }
}

fn load_cache(path: &Path, ev: &mut Evaluator) -> Result<()> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(()),
        Err(e) => return Err(e).with_context(|| format!("opening cache {}", path.display())),
    };
    let load = read_cache(BufReader::new(file))
        .with_context(|| format!("reading cache {}", path.display()))?;
    for w in &load.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    seed(ev, &load.entries);
    Ok(())
}

fn save_cache(path: &Path, ev: &Evaluator) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut out = io::BufWriter::new(
            File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?,
        );
        write_cache(&mut out, &ev.memo_entries())?;
        out.flush()?;
    }
    fs::rename(&tmp, path).with_context(|| format!("writing cache {}", path.display()))
}

fn with_cache<T>(global: &Global, f: impl FnOnce(&mut Evaluator) -> Result<T>) -> Result<T> {
    let mut ev = Evaluator::new();
    if let Some(path) = &global.cache {
        load_cache(path, &mut ev)?;
    }
    let out = f(&mut ev)?;
    if let Some(path) = &global.cache {
        save_cache(path, &ev)?;
    }
    Ok(out)
}

fn parse_arms(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .with_context(|| format!("bad arm {t:?}"))
        })
        .collect()
}

fn extremal_spec(k: usize, r: Option<usize>, arms: Option<&str>, fixed_point: bool) -> Result<ExtremalSpec> {
    let arm_count = if fixed_point { k.checked_sub(1) } else { Some(k) };
    let arm_count = match arm_count {
        Some(c) if c > 0 => c,
        _ => bail!("k must be at least {}", if fixed_point { 2 } else { 1 }),
    };
    let arms = match arms {
        Some(text) => parse_arms(text)?,
        None => staircase_spec(arm_count).arms,
    };
    if arms.len() != arm_count {
        bail!("expected {arm_count} arms, got {}", arms.len());
    }
    // smallest odd r above the largest arm
    let r = r.unwrap_or(if arms[0] % 2 == 1 { arms[0] + 2 } else { arms[0] + 1 });
    let spec = if fixed_point {
        ExtremalSpec::with_fixed_point(arms, r)
    } else {
        ExtremalSpec::symmetric(arms, r)
    };
    spec.validate()?;
    Ok(spec)
}

fn run(cli: Cli) -> Result<Status> {
    let global = &cli.global;
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Char {
            lambda,
            mu,
            order,
            stats,
        } => {
            let limit = budget(global, DEFAULT_EVAL_BUDGET);
            if mu.n() > limit {
                return Err(symchar::Error::BudgetExceeded { n: mu.n(), budget: limit }.into());
            }
            let (value, counters) = with_cache(global, |ev| {
                let v = ev.evaluate_with_order(&lambda, &mu, order)?;
                Ok((v, ev.stats()))
            })?;
            render::char_value(&mut out, global.format, &lambda, &mu, &value, stats.then_some(counters))?;
        }
        Command::Table { n, csv, json } => {
            let limit = budget(global, DEFAULT_TABLE_BUDGET);
            let table = symchar::character_table(n, limit)?;
            let format = if csv {
                Format::Csv
            } else if json {
                Format::Json
            } else {
                global.format
            };
            render::table(&mut out, format, &table)?;
        }
        Command::Rimhooks { lambda, r, json } => {
            let hooks = enumerate_rim_hooks(&lambda, r);
            let format = if json { Format::Json } else { global.format };
            render::rim_hooks(&mut out, format, &hooks)?;
        }
        Command::Extremal {
            k,
            r,
            arms,
            fixed_point,
            all,
            nmax,
            check,
        } => {
            let limit = budget(global, DEFAULT_EVAL_BUDGET);
            let witnesses: Vec<render::Witness> = if all {
                let nmax = nmax.expect("clap enforces --nmax");
                enumerate_family(k, nmax)
                    .into_iter()
                    .map(|(lambda, mu)| render::Witness::new(lambda, mu, predicted_value(k)))
                    .collect()
            } else {
                let spec = extremal_spec(k, r, arms.as_deref(), fixed_point)?;
                let prediction = spec.predicted().ok();
                let lambda = spec.partition()?;
                let mut w = render::Witness::new(lambda, spec.cycle_type(), predicted_value(spec.arms.len()));
                w.prediction = prediction;
                vec![w]
            };
            let mut witnesses = witnesses;
            let mut ok = true;
            if check {
                if let Some(w) = witnesses.iter().find(|w| w.mu.n() > limit) {
                    return Err(symchar::Error::BudgetExceeded { n: w.mu.n(), budget: limit }.into());
                }
                with_cache(global, |ev| {
                    for w in &mut witnesses {
                        let v = ev.evaluate(&w.lambda, &w.mu)?;
                        if let Some(p) = &w.prediction {
                            ok &= v == p.value();
                        }
                        w.value = Some(v);
                    }
                    Ok(())
                })?;
            }
            render::witnesses(&mut out, global.format, &witnesses)?;
            if !ok {
                eprintln!("error: evaluated value differs from the prediction");
                return Ok(Status::CheckFailed);
            }
        }
        Command::Verify {
            n,
            fixed,
            keyineq,
            json,
            csv,
        } => {
            let limit = budget(global, DEFAULT_SWEEP_BUDGET);
            let stratum = if fixed { Stratum::FixedPoint } else { Stratum::All };
            let report = verify(n, stratum, limit)?;
            let key = keyineq.then(|| verify_key_ineq(n));
            render::bound_report(&mut out, global.format, &report, key.as_ref())?;
            if let Some(path) = json {
                let mut f = io::BufWriter::new(File::create(&path).with_context(|| path.display().to_string())?);
                serde_json::to_writer_pretty(&mut f, &report)?;
                writeln!(f)?;
            }
            if let Some(path) = csv {
                let f = File::create(&path).with_context(|| path.display().to_string())?;
                render::bound_report_csv(f, &report)?;
            }
            if !report.passed() || key.is_some_and(|k| !k.passed()) {
                eprintln!("error: violation found");
                return Ok(Status::CheckFailed);
            }
        }
    }
    Ok(Status::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = match cli.global.workers {
        Workers::Auto => 0,
        Workers::Fixed(n) => n,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
