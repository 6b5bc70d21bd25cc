use clap::Parser;
use qtheta::report::{emit, Format};
use qtheta::suites::{run_suite, GridConfig};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Run exact identity suites over a parameter grid and report every comparison.
#[derive(Parser, Debug)]
#[command(name = "qtheta", version)]
struct Cli {
    /// volumes, alpha1, alpha2, alpha3, gamma_transfer, steinberg, appendix, conservation or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat `key = value` grid file; flags below override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n_max: Option<u32>,
    /// Comma-separated values of e = ord(2), each in 0..=2.
    #[arg(long)]
    ord2: Option<String>,
    /// Gram valuation range `MIN..MAX`, inclusive.
    #[arg(long, allow_hyphen_values = true)]
    gram_range: Option<String>,
    /// Comma-separated rationals q0 > 1 for numeric spot checks.
    #[arg(long)]
    numeric_q: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
}

fn config(cli: &Cli) -> Result<GridConfig, String> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            GridConfig::parse(&text).map_err(|e| e.to_string())?
        }
        None => GridConfig::default(),
    };
    let mut set = |k: &str, v: &str| cfg.set(k, v).map_err(|e| e.to_string());
    if let Some(n) = cli.n_max {
        set("n_max", &n.to_string())?;
    }
    if let Some(e) = &cli.ord2 {
        set("e", e)?;
    }
    if let Some(range) = &cli.gram_range {
        let (lo, hi) = range.split_once("..").ok_or_else(|| format!("--gram-range expects MIN..MAX, got {range:?}"))?;
        set("v_min", lo)?;
        set("v_max", hi)?;
    }
    if let Some(q) = &cli.numeric_q {
        set("numeric_q", q)?;
    }
    if let Some(seed) = cli.seed {
        set("seed", &seed.to_string())?;
    }
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match config(&cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let results = match run_suite(&cli.suite, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            emit(&results, cli.format, &mut w)?;
            w.flush()
        }),
        None => {
            let mut w = io::stdout().lock();
            emit(&results, cli.format, &mut w).and_then(|_| w.flush())
        }
    };
    // A closed pipe (e.g. `| head`) is the reader's choice, not a failure.
    match written {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            eprintln!("error: cannot write report: {e}");
            return ExitCode::from(2);
        }
        _ => {}
    }
    let failed = results.iter().filter(|r| !r.equal).count();
    eprintln!("{} comparisons, {failed} mismatches", results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
