use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use powmon::cache::{cached_census, AtomCache, CacheOutcome};
use powmon::config::{parse_format, parse_range, parse_variant, CliError, GroundArg, OutputFormat, RunConfig};
use powmon::export::{atom_table_csv, atom_table_json, factor_csv, factor_doc, factor_json, factor_text};
use powmon::parallel::with_workers;
use powmon::verify::{run_suites, summary_table, Suite, SuiteOptions};
use powmon_core::atoms::DEFAULT_CENSUS_BOUND;
use powmon_core::{length_set_truncated, minimal_factorizations, GroundMonoid, Variant};

#[derive(Parser)]
#[command(name = "powmon", version, about = "Atoms, minimal factorizations and lengths in power monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every atom of a power monoid.
    Atoms(CommonArgs),
    /// Minimal factorizations and lengths of one set.
    Factor(CommonArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Compute and cache atom tables for a range of cyclic grounds.
    CensusSweep(SweepArgs),
}

#[derive(Args, Clone)]
struct GroundArgs {
    /// Z/nZ
    #[arg(long, group = "ground")]
    cyclic: Option<usize>,
    /// The naturals {0, ..., cap} under truncated addition
    #[arg(long, group = "ground")]
    natural: Option<usize>,
    /// A multiplication-table file
    #[arg(long, group = "ground")]
    table: Option<PathBuf>,
}

impl GroundArgs {
    fn resolve(&self) -> Option<GroundArg> {
        match (self.cyclic, self.natural, &self.table) {
            (Some(n), _, _) => Some(GroundArg::Cyclic(n)),
            (_, Some(c), _) => Some(GroundArg::Natural(c)),
            (_, _, Some(p)) => Some(GroundArg::Table(p.clone())),
            _ => None,
        }
    }
}

#[derive(Args, Clone)]
struct CommonArgs {
    #[command(flatten)]
    ground: GroundArgs,
    /// Set literal such as {0,1,3}
    #[arg(long)]
    set: Option<String>,
    #[arg(long, default_value = "reduced")]
    variant: String,
    /// Also compute all factorization lengths up to this bound
    #[arg(long)]
    lmax: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CENSUS_BOUND)]
    census_bound: usize,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, default_value = "text")]
    format: String,
    /// Atom-table cache (overrides POWMON_CACHE_DIR)
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

impl CommonArgs {
    fn config(&self) -> Result<RunConfig, CliError> {
        let cfg = RunConfig {
            ground: self.ground.resolve(),
            set: self.set.clone(),
            variant: parse_variant(&self.variant)?,
            lmax: self.lmax,
            census_bound: self.census_bound,
            workers: self.workers,
            format: parse_format(&self.format)?,
            cache_dir: self.cache_dir.clone(),
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name; repeatable
    #[arg(long)]
    suite: Vec<String>,
    /// Run every suite except the exploratory scan
    #[arg(long)]
    all: bool,
    /// Modulus range such as 5..13 (inclusive)
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    lmax: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CENSUS_BOUND)]
    census_bound: usize,
    #[arg(long)]
    workers: Option<usize>,
    /// text prints the summary table, json the report array
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct SweepArgs {
    /// Modulus range such as 3..12 (inclusive)
    #[arg(long)]
    n: String,
    #[arg(long, default_value = "reduced")]
    variant: String,
    #[arg(long, default_value_t = DEFAULT_CENSUS_BOUND)]
    census_bound: usize,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

fn print(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| CliError::Io(e.to_string()))
}

fn cmd_atoms(args: &CommonArgs) -> Result<(), CliError> {
    let cfg = args.config()?;
    let g = cfg.ground()?;
    let cache = AtomCache::resolve(cfg.cache_dir.as_deref());
    let (table, _) = with_workers(cfg.workers, || cached_census(cache.as_ref(), &g, cfg.variant, cfg.census_bound))?;
    let text = match cfg.format {
        OutputFormat::Json => atom_table_json(&g, &table),
        OutputFormat::Csv => atom_table_csv(&g, &table),
        OutputFormat::Text => table.atoms.iter().map(|&a| g.format_subset(a) + "\n").collect(),
    };
    print(&text)
}

fn cmd_factor(args: &CommonArgs) -> Result<(), CliError> {
    let cfg = args.config()?;
    let g = cfg.ground()?;
    if g.size() > cfg.census_bound {
        return Err(CliError::Bound(format!(
            "ground of size {} exceeds the census bound {}",
            g.size(),
            cfg.census_bound
        )));
    }
    let (x, reduced) = cfg.subset(&g)?;
    if reduced {
        eprintln!("warning: residues reduced mod {}: {}", g.size(), g.format_subset(x));
    }
    let variant = if g.is_finite() { cfg.variant } else { Variant::Reduced };
    let (m, lengths) = with_workers(cfg.workers, || -> Result<_, CliError> {
        let m = minimal_factorizations(&g, x, variant)?;
        let l = match cfg.lmax {
            Some(b) => Some(length_set_truncated(&g, x, variant, b)?),
            None => None,
        };
        Ok((m, l))
    })?;
    let doc = factor_doc(&g, variant, &m, lengths.as_ref());
    let text = match cfg.format {
        OutputFormat::Json => factor_json(&doc),
        OutputFormat::Csv => factor_csv(&doc),
        OutputFormat::Text => factor_text(&doc),
    };
    print(&text)
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let format = parse_format(&args.format)?;
    let mut suites = Vec::new();
    for name in &args.suite {
        suites.push(Suite::parse(name).ok_or_else(|| CliError::Invalid(format!("unknown suite `{name}`")))?);
    }
    if args.all {
        suites.extend(Suite::ALL);
    }
    if suites.is_empty() {
        return Err(CliError::Invalid("name a --suite or pass --all".into()));
    }
    let opts = SuiteOptions {
        n_range: args.n.as_deref().map(parse_range).transpose()?,
        lmax: args.lmax,
        census_bound: args.census_bound,
        ..SuiteOptions::default()
    };
    let reports = with_workers(args.workers, || run_suites(&suites, &opts));
    let text = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n",
        _ => summary_table(&reports),
    };
    print(&text)?;
    match reports.iter().filter(|r| !r.passed()).count() {
        0 => Ok(()),
        n => Err(CliError::ChecksFailed(n)),
    }
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), CliError> {
    let range = parse_range(&args.n)?;
    let variant = parse_variant(&args.variant)?;
    let cache = AtomCache::resolve(args.cache_dir.as_deref()).unwrap_or_else(|| AtomCache::new("powmon-cache"));
    for n in range {
        let g = GroundMonoid::cyclic(n)?;
        let (table, outcome) = with_workers(args.workers, || cached_census(Some(&cache), &g, variant, args.census_bound))?;
        let how = match outcome {
            CacheOutcome::Hit => "cached",
            CacheOutcome::Miss | CacheOutcome::Disabled => "computed",
        };
        let path = cache.path_for(g.kind(), variant).expect("cyclic grounds are cached");
        print(&format!(
            "Z/{n} {}: {} atoms ({how}) {}\n",
            variant.name(),
            table.atoms.len(),
            path.display()
        ))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Atoms(a) => cmd_atoms(a),
        Command::Factor(a) => cmd_factor(a),
        Command::Verify(a) => cmd_verify(a),
        Command::CensusSweep(a) => cmd_sweep(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
