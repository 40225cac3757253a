use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use circulant_core::golden::run_acceptance;
use circulant_core::multiplier::{identities_from_report, self_complementary};
use circulant_core::oracle::{
    appendix_a_check, brute_iso_classes, criterion_orbit_count_with_progress,
};
use circulant_core::structural::{catalog, unlabelled_genfns, verify_aut_orders_n9};
use circulant_core::{enumerate, Mode, Polynomial};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "circ",
    version,
    about = "Exact enumeration of circulant graphs of order p, p^2 and p^3"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    #[value(alias = "d")]
    Directed,
    #[value(alias = "u")]
    Undirected,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Directed => Mode::Directed,
            ModeArg::Undirected => Mode::Undirected,
        }
    }
}

#[derive(Args)]
struct OrderArgs {
    /// Odd prime.
    #[arg(long)]
    p: u64,
    /// Exponent of the order p^k, 1 to 3.
    #[arg(long, default_value_t = 3)]
    k: u32,
    #[arg(long, value_enum, default_value_t = ModeArg::Directed)]
    mode: ModeArg,
}

#[derive(Subcommand)]
enum Command {
    /// Count circulants of order p^k.
    Enumerate {
        #[command(flatten)]
        order: OrderArgs,
        /// Print the generating function by valency.
        #[arg(long)]
        by_valency: bool,
        /// Print every subproblem and derived row.
        #[arg(long)]
        detail: bool,
    },
    /// Count self-complementary circulants of order p^k.
    Selfcomp {
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Check the ten identities between subproblem enumerators for order p^3.
    Identities {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Directed)]
        mode: ModeArg,
    },
    /// Schur-ring enumeration for n = 9 or 27.
    Structural {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Undirected)]
        mode: ModeArg,
        /// Also recompute the automorphism group orders (n = 9 only).
        #[arg(long)]
        verify_groups: bool,
    },
    /// Independent verification methods.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Run the acceptance suite.
    Golden {
        /// Skip the directed order-27 orbit count.
        #[arg(long)]
        skip_long_run: bool,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Canonical-form isomorphism classes for n <= 9.
    Brute {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Directed)]
        mode: ModeArg,
    },
    /// Union-find orbit count under the layer-multiplier criterion.
    Criterion {
        #[command(flatten)]
        order: OrderArgs,
        /// Allow up to 2^26 connecting sets (about 256 MB).
        #[arg(long)]
        long_run: bool,
    },
    /// Closed forms of A_1 and A_22 for order p^2.
    AppendixA {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Directed)]
        mode: ModeArg,
    },
}

/// Command outcome: `Ok(true)` when every requested verification held.
type Outcome = Result<bool>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("CIRC_THREADS") {
        match v.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                eprintln!("error: CIRC_THREADS must be a positive integer (got {v:?})");
                return ExitCode::from(2);
            }
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Enumerate {
            order,
            by_valency,
            detail,
        } => cmd_enumerate(order, *by_valency, *detail, f),
        Command::Selfcomp { order } => cmd_selfcomp(order, f),
        Command::Identities { p, mode } => cmd_identities(*p, (*mode).into(), f),
        Command::Structural {
            n,
            mode,
            verify_groups,
        } => cmd_structural(*n, (*mode).into(), *verify_groups, f),
        Command::Oracle { which } => cmd_oracle(which, f),
        Command::Golden { skip_long_run } => cmd_golden(!skip_long_run, f),
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn print_csv(poly: &Polynomial) {
    println!("valency,count");
    for (e, c) in poly.terms() {
        println!("{e},{c}");
    }
}

fn cmd_enumerate(order: &OrderArgs, by_valency: bool, detail: bool, f: Format) -> Outcome {
    let report = enumerate(order.p, order.k, order.mode.into())?;
    match f {
        Format::Json => print_json(&report)?,
        Format::Csv => print_csv(&report.combined),
        Format::Text => {
            if detail {
                for (name, poly) in report.rows() {
                    if by_valency {
                        println!("{name}(t) = {poly}");
                    } else {
                        println!("{name} = {}", poly.evaluate_i64(1));
                    }
                }
            } else {
                println!("{}", report.total());
                if by_valency {
                    println!("A(t) = {}", report.combined);
                }
            }
        }
    }
    Ok(true)
}

fn cmd_selfcomp(order: &OrderArgs, f: Format) -> Outcome {
    let sc = self_complementary(order.p, order.k, order.mode.into())?;
    match f {
        Format::Json => print_json(&sc)?,
        Format::Csv => {
            println!("term,count");
            for (name, v) in &sc.rows {
                println!("{name},{v}");
            }
        }
        Format::Text => {
            println!("{}", sc.total());
            for (name, v) in &sc.rows {
                println!("{name} = {v}");
            }
        }
    }
    Ok(true)
}

fn cmd_identities(p: u64, mode: Mode, f: Format) -> Outcome {
    let report = enumerate(p, 3, mode)?;
    let checks = identities_from_report(&report)?;
    let held = checks.iter().filter(|c| c.holds).count();
    match f {
        Format::Json => print_json(&checks)?,
        Format::Csv => {
            println!("identity,holds");
            for c in &checks {
                println!("{},{}", c.name, c.holds);
            }
        }
        Format::Text => {
            for c in &checks {
                println!(
                    "{} {}: {}",
                    if c.holds { "PASS" } else { "FAIL" },
                    c.name,
                    c.statement
                );
            }
            println!("{held}/{} pass", checks.len());
        }
    }
    Ok(held == checks.len())
}

fn cmd_structural(n: u64, mode: Mode, verify_groups: bool, f: Format) -> Outcome {
    let lat = catalog(n)?;
    let report = unlabelled_genfns(&lat, mode)?;
    let (p, k) = circulant_core::arith::odd_prime_power(n).context("n is a prime power")?;
    let analytic = enumerate(p, k, mode)?.combined;
    let agrees = analytic == report.total;
    let groups = if verify_groups {
        if n != 9 {
            bail!("group orders can only be recomputed for n = 9");
        }
        Some(verify_aut_orders_n9()?)
    } else {
        None
    };
    let groups_ok = groups
        .as_ref()
        .is_none_or(|g| g.iter().all(|c| c.matches()));
    match f {
        Format::Json => print_json(&json!({
            "report": report,
            "matches_multiplier": agrees,
            "group_checks": groups,
        }))?,
        Format::Csv => print_csv(&report.total),
        Format::Text => {
            for r in &report.rings {
                println!("f_{}(t) = {}", r.label, r.f);
                println!("g_{}(t) = {}", r.label, r.g);
            }
            println!("g(t) = {}", report.total);
            println!("g(1) = {}", report.total.evaluate_i64(1));
            println!(
                "multiplier method: {}",
                if agrees { "matches" } else { "DIFFERS" }
            );
            if let Some(groups) = &groups {
                for c in groups {
                    println!(
                        "{} ring {}: |G| = {} (expected {}), [N:G] = {} (expected {})",
                        if c.matches() { "PASS" } else { "FAIL" },
                        c.label,
                        c.computed_aut,
                        c.expected_aut,
                        c.computed_index,
                        c.expected_index
                    );
                }
            }
        }
    }
    Ok(agrees && groups_ok)
}

fn oracle_result(poly: &Polynomial, analytic: &Polynomial, f: Format) -> Outcome {
    let agrees = poly == analytic;
    match f {
        Format::Json => print_json(&json!({
            "polynomial": poly,
            "matches_analytic": agrees,
        }))?,
        Format::Csv => print_csv(poly),
        Format::Text => {
            println!(
                "{} ({})",
                poly.evaluate_i64(1),
                if agrees {
                    "matches analytic"
                } else {
                    "DIFFERS from analytic"
                }
            );
            println!("A(t) = {poly}");
        }
    }
    Ok(agrees)
}

fn cmd_oracle(which: &OracleCommand, f: Format) -> Outcome {
    match which {
        OracleCommand::Brute { n, mode } => {
            let mode: Mode = (*mode).into();
            let poly = brute_iso_classes(*n, mode)?;
            let (p, k) = circulant_core::arith::odd_prime_power(*n)
                .with_context(|| format!("{n} is not an odd prime power"))?;
            oracle_result(&poly, &enumerate(p, k, mode)?.combined, f)
        }
        OracleCommand::Criterion { order, long_run } => {
            let mode: Mode = order.mode.into();
            let mut stderr = std::io::stderr();
            let poly = criterion_orbit_count_with_progress(
                order.p,
                order.k,
                mode,
                *long_run,
                &mut |done, total| {
                    if *long_run {
                        let _ = writeln!(stderr, "progress {done}/{total}");
                    }
                },
            )?;
            oracle_result(&poly, &enumerate(order.p, order.k, mode)?.combined, f)
        }
        OracleCommand::AppendixA { p, mode } => {
            let r = appendix_a_check(*p, (*mode).into())?;
            match f {
                Format::Json => print_json(&r)?,
                Format::Csv => print_csv(&r.a22),
                Format::Text => {
                    println!("A_1(t) = {}", r.a1);
                    println!("A_22(t) = {}", r.a22);
                    let mark = |b: bool| if b { "PASS" } else { "FAIL" };
                    println!(
                        "{} A_1(t) = A_1(t^{}) mod t^{}-1",
                        mark(r.a1_congruence),
                        p,
                        p * p - 1
                    );
                    println!(
                        "{} A_22(t) = A_22(t^{}) mod t^{}-1",
                        mark(r.a22_congruence),
                        p,
                        p * p - 1
                    );
                    println!(
                        "{} closed forms equal the multiplier engine",
                        mark(r.matches_engine)
                    );
                }
            }
            Ok(r.all_hold())
        }
    }
}

fn cmd_golden(long_run: bool, f: Format) -> Outcome {
    let results = run_acceptance(long_run);
    match f {
        Format::Json => print_json(&results)?,
        Format::Csv => {
            println!("criterion,passed,elapsed_ms");
            for r in &results {
                println!("{},{},{}", r.id, r.passed, r.elapsed_ms);
            }
        }
        Format::Text => {
            for r in &results {
                println!("{r}");
            }
        }
    }
    Ok(results.iter().all(|r| r.passed))
}
