//! Command-line surface: verification suites, configuration search, word
//! orders, and aggregated JSON reports.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hermlat::io;
use hermlat::reflection::{element_order, word_to_matrix, GroupWord, OrderResult, ReflectionContext};
use hermlat::ring::ComplexRing;
use hermlat::roots::{
    build_gaussian_configuration, search_extended_eisenstein, seed_y555_roots, RootConfiguration,
};
use hermlat::verify::{
    run_suite, CheckStatus, DataSource, SuiteOptions, VerificationReport, DEFAULT_ORDER_CAP,
    SUITE_NAMES,
};

#[derive(Parser)]
#[command(
    name = "hermlat",
    version,
    about = "Exact verification toolkit for Hermitian lattices over Z[ω] and Z[i]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SuiteArgs {
    /// Directory holding the committed artifact files.
    #[arg(long, default_value = "data")]
    data_dir: PathBuf,
    /// Regenerate configurations by search instead of reading files.
    #[arg(long)]
    search: bool,
    /// Write the JSON report to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Element cap for closure enumeration.
    #[arg(long, default_value_t = hermlat::verify::DEFAULT_CLOSURE_CAP)]
    cap: u64,
    /// Seed for the randomized spot checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for running independent suites (1 = sequential).
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print one line per check.
    Verify {
        /// One of: all, lattice, y555, spider, extend26, gaussian, coxeter.
        target: String,
        #[command(flatten)]
        args: SuiteArgs,
    },
    /// Search for a certified configuration and write it with its certificate.
    Search {
        /// One of: extend26, gaussian.
        target: String,
        /// Output path for the configuration file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a word in the configured reflections and print its order.
    Order {
        /// Whitespace-separated node labels, `'` suffix for inverses.
        word: String,
        /// Root-configuration file (defaults to the built-in seed roots).
        #[arg(long)]
        config: Option<PathBuf>,
        /// Iteration cap for the order computation.
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        cap: u64,
    },
    /// Run every suite and emit the aggregated JSON report.
    Report {
        #[command(flatten)]
        args: SuiteArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> hermlat::Result<ExitCode> {
    match cli.command {
        Command::Verify { target, args } => {
            if !SUITE_NAMES.contains(&target.as_str()) {
                return Err(hermlat::Error::InvalidInput(format!(
                    "unknown verify target {target}; expected one of {SUITE_NAMES:?}"
                )));
            }
            let report = run_suites(&target, &args)?;
            print_report(&report);
            if let Some(path) = &args.json {
                io::write_json(path, &report)?;
            }
            Ok(exit_for(&report))
        }
        Command::Search { target, output } => {
            let (default_name, run): (&str, fn() -> hermlat::Result<io::ConfigFile>) =
                match target.as_str() {
                    "extend26" => ("config_26.json", || {
                        let outcome = search_extended_eisenstein()?;
                        let cfg = outcome.normalized.expect("search normalizes");
                        io::config_to_file(&cfg)
                    }),
                    "gaussian" => ("config_gaussian14.json", || {
                        let cfg = build_gaussian_configuration()?;
                        io::config_to_file(&cfg)
                    }),
                    other => {
                        return Err(hermlat::Error::InvalidInput(format!(
                            "unknown search target {other}; expected extend26 or gaussian"
                        )))
                    }
                };
            let out_path = output.unwrap_or_else(|| Path::new("data").join(default_name));
            let file = run()?;
            write_config_with_certificate(&out_path, &file)?;
            println!("wrote {}", out_path.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Order { word, config, cap } => {
            let parsed = GroupWord::parse(&word)?;
            let order = match config {
                None => order_in_config(&seed_y555_roots(), &parsed, cap)?,
                Some(path) => {
                    let f: io::ConfigFile = io::read_json(&path)?;
                    match f.lattice_id.as_str() {
                        "eisenstein_l14" => {
                            order_in_config(&io::eisenstein_config_from_file(&f)?, &parsed, cap)?
                        }
                        "gaussian_d4x3h" => {
                            order_in_config(&io::gaussian_config_from_file(&f)?, &parsed, cap)?
                        }
                        other => {
                            return Err(hermlat::Error::InvalidInput(format!(
                                "unknown lattice id {other}"
                            )))
                        }
                    }
                }
            };
            match order {
                OrderResult::Finite(k) => {
                    println!("{k}");
                    Ok(ExitCode::SUCCESS)
                }
                OrderResult::ExceedsCap => {
                    eprintln!("order exceeds cap {cap}");
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Report { args } => {
            let report = run_suites("all", &args)?;
            print_report(&report);
            let text = io::to_canonical_json(&report)?;
            if let Some(path) = &args.json {
                std::fs::write(path, &text)?;
            } else {
                println!("{text}");
            }
            Ok(exit_for(&report))
        }
    }
}

fn suite_options(args: &SuiteArgs) -> SuiteOptions {
    SuiteOptions {
        data: if args.data_dir.as_os_str().is_empty() {
            DataSource::Builtin
        } else {
            DataSource::Dir(args.data_dir.clone())
        },
        search: args.search,
        closure_cap: args.cap,
        order_cap: DEFAULT_ORDER_CAP,
        seed: args.seed,
    }
}

fn run_suites(target: &str, args: &SuiteArgs) -> hermlat::Result<VerificationReport> {
    let opts = suite_options(args);
    if target != "all" || args.threads <= 1 {
        return run_suite(target, &opts);
    }
    // independent suites in waves of `threads`; merge order stays canonical
    let names = ["lattice", "y555", "spider", "extend26", "gaussian", "coxeter"];
    let mut reports: BTreeMap<&str, VerificationReport> = BTreeMap::new();
    for wave in names.chunks(args.threads.max(1)) {
        let results: Vec<(&str, hermlat::Result<VerificationReport>)> =
            std::thread::scope(|scope| {
                let handles: Vec<_> = wave
                    .iter()
                    .map(|name| {
                        let opts = opts.clone();
                        (*name, scope.spawn(move || run_suite(name, &opts)))
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|(name, h)| (name, h.join().expect("suite thread")))
                    .collect()
            });
        for (name, r) in results {
            reports.insert(name, r?);
        }
    }
    let ordered: Vec<VerificationReport> =
        names.iter().map(|n| reports.remove(n).unwrap()).collect();
    Ok(VerificationReport::merge("all", ordered))
}

fn order_in_config<R: ComplexRing>(
    cfg: &RootConfiguration<R>,
    word: &GroupWord,
    cap: u64,
) -> hermlat::Result<OrderResult> {
    let ctx = ReflectionContext::new(cfg.lattice().clone())?;
    let gens = cfg.reflections()?;
    let m = word_to_matrix(word, &gens, &ctx)?;
    element_order(&m, cap)
}

fn write_config_with_certificate(path: &Path, file: &io::ConfigFile) -> hermlat::Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    io::write_json(path, file)?;
    // certificate next to the configuration: foo.json → foo.cert.json
    let cert_path = path.with_extension("cert.json");
    let cert = match file.lattice_id.as_str() {
        "eisenstein_l14" => io::certificate_for(&io::eisenstein_config_from_file(file)?)?,
        "gaussian_d4x3h" => io::certificate_for(&io::gaussian_config_from_file(file)?)?,
        other => {
            return Err(hermlat::Error::InvalidInput(format!(
                "unknown lattice id {other}"
            )))
        }
    };
    io::write_json(&cert_path, &cert)?;
    Ok(())
}

fn print_report(report: &VerificationReport) {
    for c in &report.checks {
        let tag = match c.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "SKIP",
        };
        println!("[{tag}] {} — {}", c.id, c.description);
        if c.status == CheckStatus::Fail {
            println!("       witness: {}", c.witness);
        }
    }
    let (pass, fail, skip) = report.checks.iter().fold((0, 0, 0), |acc, c| match c.status {
        CheckStatus::Pass => (acc.0 + 1, acc.1, acc.2),
        CheckStatus::Fail => (acc.0, acc.1 + 1, acc.2),
        CheckStatus::Skip => (acc.0, acc.1, acc.2 + 1),
    });
    println!(
        "suite {}: {} passed, {} failed, {} skipped — {}",
        report.suite,
        pass,
        fail,
        skip,
        if report.passed() { "PASS" } else { "FAIL" }
    );
}

fn exit_for(report: &VerificationReport) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
