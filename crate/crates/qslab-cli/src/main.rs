//! `qslab` — exact distribution and moment analysis of Quicksort variants.
//!
//! Subcommands mirror the library surface: `pgf` computes a cost
//! distribution, `moments` sweeps a moment sequence, `fit` recovers a closed
//! form, `findrec` guesses a difference equation, `simulate` runs the seeded
//! Monte Carlo harness, `oracle` enumerates a small instance exhaustively,
//! and `reproduce` replays the whole golden suite against the published
//! values.
//!
//! Exit codes: 0 on success, 1 when a computation or check fails, 2 on
//! usage errors.

mod output;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qslab::cache::{CacheError, DiskCache};
use qslab::exact::UniPoly;
use qslab::findrec::find_recurrence;
use qslab::fit::{build_basis, fit, fit_auto};
use qslab::moments::{
    moment_sequence, scaled_moment_profile, ComputePath, MomentKind, MomentOptions,
};
use qslab::pgf::{Family, PgfEngine, VariantId};
use qslab::simulate::{exhaustive_distribution, monte_carlo};

const CACHE_ENV: &str = "QSLAB_CACHE_DIR";

#[derive(Parser)]
#[command(name = "qslab", version, about = "Exact analysis of Quicksort variants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct VariantArgs {
    /// Variant family (comp1pivot, swapv1..swapv5, compdual, swapdual,
    /// comp3pivot, kpivotlinear, kpivotbinary).
    #[arg(long)]
    variant: Family,
    /// Pivot count for the k-pivot families (ignored elsewhere).
    #[arg(long, default_value_t = 3)]
    pivots: u32,
}

impl VariantArgs {
    fn id(&self) -> Result<VariantId> {
        if self.pivots == 0 {
            bail!("--pivots must be at least 1");
        }
        Ok(VariantId::with_pivots(self.variant, self.pivots))
    }
}

#[derive(Args)]
struct CacheArgs {
    /// Cache directory (default: $QSLAB_CACHE_DIR or ./.qslab-cache).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

impl CacheArgs {
    fn open(&self) -> DiskCache {
        let root = self
            .cache_dir
            .clone()
            .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(".qslab-cache"));
        DiskCache::new(root)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PathChoice {
    Auto,
    Full,
    Truncated,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact cost distribution P_n(t) of a variant.
    Pgf {
        #[command(flatten)]
        variant: VariantArgs,
        /// List length.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        cache: CacheArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Sweep a moment statistic over list lengths 1..=N.
    Moments {
        #[command(flatten)]
        variant: VariantArgs,
        /// Moment order r.
        #[arg(long)]
        order: u32,
        /// Largest list length.
        #[arg(long)]
        upto: usize,
        /// Raw moments E[X^r] (default: mean for order 1, central
        /// otherwise).
        #[arg(long, conflicts_with = "central")]
        raw: bool,
        /// Central moments about the mean.
        #[arg(long)]
        central: bool,
        /// Emit the scaled profile m_r / m_2^(r/2) as floats instead.
        #[arg(long)]
        scaled: bool,
        /// Series truncation order floor for the fast path.
        #[arg(long)]
        truncated_order: Option<usize>,
        /// Computation path (full polynomial, truncated series, or
        /// automatic crossover).
        #[arg(long, value_enum, default_value_t = PathChoice::Auto)]
        path: PathChoice,
        /// Largest n still using the full polynomial under `auto`.
        #[arg(long, default_value_t = 60)]
        n_switch: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Fit an exact closed form in n and harmonic numbers to a moment
    /// sequence.
    Fit {
        #[command(flatten)]
        variant: VariantArgs,
        /// Moment order r.
        #[arg(long)]
        order: u32,
        /// Admit 1/n basis terms.
        #[arg(long)]
        rational_basis: bool,
        /// Disregard this many initial terms (default: escalate from r).
        #[arg(long)]
        skip: Option<usize>,
        /// Data length to fit against.
        #[arg(long, default_value_t = 90)]
        upto: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Guess a linear difference equation with polynomial coefficients.
    Findrec {
        #[command(flatten)]
        variant: VariantArgs,
        /// Moment order of the sequence to annihilate.
        #[arg(long, default_value_t = 1)]
        order: u32,
        /// Data length.
        #[arg(long)]
        upto: usize,
        /// Bound on operator order plus coefficient degree.
        #[arg(long)]
        maxc: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Seeded Monte Carlo estimate of a variant's mean cost.
    Simulate {
        #[command(flatten)]
        variant: VariantArgs,
        /// List length.
        #[arg(long)]
        n: usize,
        /// Number of trials.
        #[arg(long)]
        trials: u64,
        /// Random seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exhaustive exact distribution for small lengths (n <= 7).
    Oracle {
        #[command(flatten)]
        variant: VariantArgs,
        /// List length.
        #[arg(long)]
        n: usize,
    },
    /// Re-derive the published golden values and report pass/fail.
    Reproduce {
        /// Which battery to run; the expensive n=100 series and the
        /// 100000-trial Monte Carlo checks run only under `all`.
        #[arg(long, value_enum, default_value_t = reproduce::Scope::All)]
        scope: reproduce::Scope,
        #[command(flatten)]
        cache: CacheArgs,
        /// Write the report bundle to this file (default:
        /// qslab-report.json in the working directory).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(clean) => {
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Pgf {
            variant,
            n,
            cache,
            format,
        } => {
            let variant = variant.id()?;
            if !variant.family().has_pgf() {
                bail!(
                    "{} has no generating-function recurrence; use `simulate` or `oracle`",
                    variant
                );
            }
            let cache = cache.open();
            let poly = cached_pgf(&cache, &PgfEngine::new(), variant, n)?;
            match format {
                Format::Json => println!("{}", output::pgf_json(variant, n, &poly)),
                _ => println!("P_{n}(t) = {poly}"),
            }
            Ok(true)
        }
        Command::Moments {
            variant,
            order,
            upto,
            raw,
            central,
            scaled,
            truncated_order,
            path,
            n_switch,
            format,
        } => {
            let variant = variant.id()?;
            if order == 0 {
                bail!("--order must be at least 1");
            }
            if upto == 0 {
                bail!("--upto must be at least 1");
            }
            let opts = MomentOptions {
                path: match path {
                    PathChoice::Auto => ComputePath::Auto,
                    PathChoice::Full => ComputePath::FullPgf,
                    PathChoice::Truncated => ComputePath::Truncated,
                },
                n_switch,
                min_trunc_order: truncated_order.unwrap_or(1),
            };
            let engine = PgfEngine::new();
            if scaled {
                if order < 3 {
                    bail!("--scaled needs --order of at least 3");
                }
                let values: Vec<f64> = (1..=upto)
                    .map(|n| {
                        scaled_moment_profile(&engine, variant, n, order, &opts)
                            .map(|profile| profile[order as usize - 3])
                            .unwrap_or(f64::NAN)
                    })
                    .collect();
                println!("{}", output::scaled_json(variant, order, &values));
                return Ok(true);
            }
            let kind = if raw {
                MomentKind::Raw
            } else if central || order > 1 {
                MomentKind::Central
            } else {
                MomentKind::Mean
            };
            let seq = moment_sequence(&engine, variant, order, kind, upto, &opts);
            match format {
                Format::Json => println!("{}", output::moments_json(&seq)),
                Format::Csv => print!("{}", output::moments_csv(&seq)),
                Format::Text => {
                    for (i, v) in seq.values.iter().enumerate() {
                        println!("n={:<4} {}", i + 1, v);
                    }
                }
            }
            Ok(true)
        }
        Command::Fit {
            variant,
            order,
            rational_basis,
            skip,
            upto,
            format,
        } => {
            let variant = variant.id()?;
            if order == 0 {
                bail!("--order must be at least 1");
            }
            let engine = PgfEngine::new();
            let kind = if order == 1 {
                MomentKind::Mean
            } else {
                MomentKind::Central
            };
            let opts = MomentOptions {
                path: ComputePath::Truncated,
                min_trunc_order: order as usize,
                ..Default::default()
            };
            let seq = moment_sequence(&engine, variant, order, kind, upto, &opts);
            let (form, skip_used, min_pow) = match skip {
                Some(s) => {
                    let basis = build_basis(order, rational_basis);
                    let form = fit(&seq.values, &basis, s)
                        .with_context(|| format!("fitting {variant} order {order}"))?;
                    (form, s, if rational_basis { -1 } else { 0 })
                }
                None => {
                    let (form, report) = fit_auto(&seq.values, order, rational_basis)
                        .with_context(|| format!("fitting {variant} order {order}"))?;
                    (form, report.skip, report.min_pow_n)
                }
            };
            match format {
                Format::Json => {
                    println!(
                        "{}",
                        output::fit_json(variant, order, &form, skip_used, min_pow)
                    )
                }
                _ => println!("{form}"),
            }
            Ok(true)
        }
        Command::Findrec {
            variant,
            order,
            upto,
            maxc,
            format,
        } => {
            let variant = variant.id()?;
            let engine = PgfEngine::new();
            let kind = if order == 1 {
                MomentKind::Mean
            } else {
                MomentKind::Central
            };
            let opts = MomentOptions {
                path: ComputePath::Truncated,
                min_trunc_order: order as usize,
                ..Default::default()
            };
            let seq = moment_sequence(&engine, variant, order, kind, upto, &opts);
            let op = find_recurrence(&seq.values, maxc)
                .with_context(|| format!("searching recurrences for {variant} order {order}"))?;
            match format {
                Format::Json => println!("{}", output::findrec_json(variant, order, &op)),
                _ => println!("{op}"),
            }
            Ok(true)
        }
        Command::Simulate { variant, n, trials, seed } => {
            let variant = variant.id()?;
            if trials == 0 {
                bail!("--trials must be at least 1");
            }
            let stats = monte_carlo(variant, n, trials, seed);
            println!("{}", output::stats_json(&stats));
            Ok(true)
        }
        Command::Oracle { variant, n } => {
            let variant = variant.id()?;
            if n > 7 {
                bail!("exhaustive enumeration is limited to n <= 7");
            }
            let dist = exhaustive_distribution(variant, n);
            println!("{}", output::pgf_json(variant, n, &dist));
            Ok(true)
        }
        Command::Reproduce { scope, cache, out } => {
            let cache = cache.open();
            let bundle = reproduce::run(scope, &cache);
            let path = out.unwrap_or_else(|| PathBuf::from("qslab-report.json"));
            std::fs::write(&path, bundle.to_json())
                .with_context(|| format!("writing {}", path.display()))?;
            for line in bundle.summary_lines() {
                println!("{line}");
            }
            println!("report written to {}", path.display());
            Ok(bundle.all_passed())
        }
    }
}

/// Loads a distribution from the cache or computes and stores it. Corrupt
/// entries are recomputed and overwritten, never trusted.
fn cached_pgf(
    cache: &DiskCache,
    engine: &PgfEngine,
    variant: VariantId,
    n: usize,
) -> Result<UniPoly> {
    match cache.load(variant, n) {
        Ok(Some(poly)) => return Ok(poly),
        Ok(None) => {}
        Err(CacheError::Corrupt { path, .. }) => {
            eprintln!(
                "warning: discarding corrupt cache entry {}",
                path.display()
            );
        }
        Err(e @ CacheError::Io { .. }) => return Err(e.into()),
    }
    let poly = engine.pgf(variant, n);
    cache.store(variant, n, &poly)?;
    Ok(poly)
}
