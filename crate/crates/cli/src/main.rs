//! Command-line surface for the torus-knot motive pipeline.
//!
//! Exit codes: 0 success, 1 verification failures, 2 invalid input,
//! 3 internal consistency failure.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use torus_motives::counting::{count_table, pair_count, CountMethod};
use torus_motives::ffcheck::{count_irr_pairs, count_pairs, predicted_counts};
use torus_motives::strata::{gauge_parts, m_tau_breakdown};
use torus_motives::verify::{all_suites, oracle_suite, paper_suite, Check};
use torus_motives::{EigenConfig, Error, FfParams, MotiveEngine, MotivePoly, Partition};

#[derive(Parser)]
#[command(name = "torus-motives", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a motive polynomial for the torus knot (n, m) at a given rank.
    Compute(ComputeArgs),
    /// Print per-configuration and per-type breakdown tables for a rank.
    Breakdown(BreakdownArgs),
    /// Eigenvalue-tuple counts N^pi and pair counts |M^{pi1,pi2}|.
    Count(CountArgs),
    /// Brute-force SL_2(F_q) point counts against pipeline predictions.
    Ffcount(FfcountArgs),
    /// Run the verification suites and report PASS/FAIL per item.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Variety {
    /// [M_r^irr]: moduli of irreducible representations.
    Irr,
    /// [X_r]: the full (semi-simple) character variety.
    Total,
    /// Sum over configurations of |M^{pi1,pi2}| * [R_k^irr].
    RepvarIrr,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    rank: u32,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    m: u64,
    #[arg(long, value_enum, default_value = "irr")]
    variety: Variety,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct BreakdownArgs {
    #[arg(long)]
    rank: u32,
    /// Restrict to one configuration by index (as listed without the flag).
    #[arg(long)]
    config: Option<usize>,
    /// Also print the exponents C, C_{i,j}, D_{i,j}, D behind each stratum.
    #[arg(long)]
    explain: bool,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    rank: u32,
    /// A-side multiplicity pattern, e.g. "2^1,1^2" (with --pi2: single count).
    #[arg(long, requires = "pi2")]
    pi1: Option<String>,
    /// B-side multiplicity pattern.
    #[arg(long, requires = "pi1")]
    pi2: Option<String>,
    #[arg(long, value_enum, default_value = "enumerate")]
    method: Method,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Enumerate,
    Multinomial,
}

#[derive(Args)]
struct FfcountArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    q: u64,
    /// Count only pairs without a common eigenvector.
    #[arg(long)]
    irreducible: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Paper,
    Oracle,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::NonExactDivision | Error::UnsupportedHom | Error::UnsupportedSchubert => {
            ExitCode::from(3)
        }
        _ => ExitCode::from(2),
    }
}

fn render(poly: &MotivePoly, format: Format) -> String {
    match format {
        Format::Text => poly.to_string(),
        Format::Latex => poly.to_latex(),
        Format::Json => serde_json::to_string(poly).expect("polynomial serialization"),
    }
}

fn compute(args: &ComputeArgs) -> Result<(), Error> {
    let mut engine = MotiveEngine::new();
    let poly = match args.variety {
        Variety::Irr => engine.m_irr(args.rank, args.n, args.m)?,
        Variety::Total => engine.total_motive(args.rank, args.n, args.m)?,
        Variety::RepvarIrr => engine.r_irr_total(args.rank, args.n, args.m)?,
    };
    println!("{}", render(&poly, args.format));
    Ok(())
}

fn breakdown(args: &BreakdownArgs) -> Result<(), Error> {
    let configs = EigenConfig::configs_for_rank(args.rank)?;
    let selected: Vec<(usize, &EigenConfig)> = match args.config {
        Some(i) => {
            let cfg = configs.get(i).ok_or_else(|| {
                Error::Invalid(format!(
                    "configuration index {i} out of range (0..{})",
                    configs.len()
                ))
            })?;
            vec![(i, cfg)]
        }
        None => configs.iter().enumerate().collect(),
    };
    let mut engine = MotiveEngine::new();
    for (index, cfg) in selected {
        let report = engine.config_report(cfg)?;
        println!("configuration {index}: {cfg}");
        println!("  [R_k]     = {}", report.r_kappa);
        println!("  [R_k^red] = {}", report.r_red);
        println!("  [R_k^irr] = {}", report.r_irr);
        println!("  [M_k^irr] = {}", report.m_irr);
        if report.strata.is_empty() {
            println!("  (no nonempty reducible strata)");
        }
        for stratum in &report.strata {
            let orbit = &stratum.type_orbit;
            println!(
                "  type {} (m_k = {})",
                orbit.representative, orbit.multiplicity
            );
            println!(
                "    [M_t] = {}  [G_t] = {}  irr = {}  [R(t)] = {}",
                stratum.m_tau, stratum.g_tau, stratum.irr_factor, stratum.r_tau
            );
            if args.explain {
                let mtau = m_tau_breakdown(&orbit.representative)?;
                let (_, gauge_exp) = gauge_parts(&orbit.representative);
                print!("    explain: C_distant = {}", mtau.distant);
                for t in &mtau.targets {
                    print!(
                        "; target (level {}, iso {}): C_ij = {}, D_ij = {}, mult = {}",
                        t.level, t.iso, t.c, t.d, t.mult
                    );
                }
                println!("; gauge exponent D = {gauge_exp}");
            }
        }
        println!();
    }
    Ok(())
}

fn method_of(m: Method) -> CountMethod {
    match m {
        Method::Closed => CountMethod::Closed,
        Method::Enumerate => CountMethod::Enumerate,
        Method::Multinomial => CountMethod::Multinomial,
    }
}

fn count(args: &CountArgs) -> Result<(), Error> {
    match (&args.pi1, &args.pi2) {
        (Some(p1), Some(p2)) => {
            let pi1: Partition = p1.parse()?;
            let pi2: Partition = p2.parse()?;
            let value = pair_count(
                args.n,
                args.m,
                args.rank,
                &pi1,
                &pi2,
                method_of(args.method),
            )?;
            println!(
                "|M^({pi1}),({pi2})|(n={}, m={}, r={}) = {value}",
                args.n, args.m, args.rank
            );
        }
        _ => {
            let table = count_table(args.n, args.m, args.rank)?;
            println!(
                "pair counts |M^{{pi1,pi2}}| for n = {}, m = {}, r = {}:",
                table.n, table.m, table.r
            );
            for ((pi1, pi2), value) in &table.pair_counts {
                println!("  ({pi1}) x ({pi2}) -> {value}");
            }
        }
    }
    Ok(())
}

fn ffcount(args: &FfcountArgs) -> Result<bool, Error> {
    let params = FfParams::new(args.q, args.n, args.m)?;
    let mut engine = MotiveEngine::new();
    let (predicted_total, predicted_irr) = predicted_counts(&params, &mut engine)?;
    let (measured, predicted) = if args.irreducible {
        (count_irr_pairs(&params), predicted_irr)
    } else {
        (count_pairs(&params), predicted_total)
    };
    let kind = if args.irreducible {
        "irreducible"
    } else {
        "total"
    };
    println!(
        "SL_2(F_{}) pairs with A^{} = B^{} ({kind}): measured = {measured}, predicted = {predicted}",
        args.q, args.n, args.m
    );
    let ok = predicted == measured.into();
    println!("{}", if ok { "PASS" } else { "FAIL" });
    Ok(ok)
}

fn print_checks(checks: &[Check]) -> bool {
    let mut all_passed = true;
    for check in checks {
        let verdict = if check.passed { "PASS" } else { "FAIL" };
        println!("{verdict} {}: {}", check.name, check.detail);
        all_passed &= check.passed;
    }
    all_passed
}

fn main() -> ExitCode {
    // Die quietly when stdout is closed early (e.g. piped into `head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome: Result<bool, Error> = match &cli.command {
        Command::Compute(args) => compute(args).map(|()| true),
        Command::Breakdown(args) => breakdown(args).map(|()| true),
        Command::Count(args) => count(args).map(|()| true),
        Command::Ffcount(args) => ffcount(args),
        Command::Verify(args) => {
            let checks = match args.suite {
                Suite::Paper => paper_suite(),
                Suite::Oracle => oracle_suite(),
                Suite::All => all_suites(),
            };
            Ok(print_checks(&checks))
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}
