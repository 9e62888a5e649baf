//! Command-line harness over the `lagcomb` library.
//!
//! Exit status contract: 0 = all checks pass, 1 = a mathematical check
//! failed, 2 = usage or hypothesis error.

mod sweep;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lagcomb::{
    check_chain, check_negative_claims, check_theorem_r, check_theorem_s, combination_zeros,
    laguerre_zeros, CombinationSpec, Error, Family, ParamSet, Verdict, ZeroSet,
};
use sweep::{run_sweep, OutputFormat, SweepConfig, SweepRecord, SWEEP_CSV_HEADER};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "lagcomb", version, about = "Zeros and interlacing checks for Laguerre polynomial combinations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    R,
    S,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::R => Family::R,
            FamilyArg::S => Family::S,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    /// Same-degree combination vs both component families
    R,
    /// Mixed-degree combination vs both component families
    S,
    /// Four-way zero chain across the component families
    Chain,
    /// The worked counterexamples and positive remarks
    Claims,
}

#[derive(Subcommand)]
enum Command {
    /// Zeros of a pure Laguerre polynomial L_n^alpha
    Zeros {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Zeros of a linear combination (family R or S)
    ComboZeros {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, allow_negative_numbers = true)]
        coeff: f64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Run one theorem or claim check
    Check {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        t: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        coeff: Option<f64>,
    },
    /// Recompute every published zero list and interlacing claim
    ReproPaper,
    /// Random parameter sweep driven by a key=value config file
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Serialize)]
struct ZerosOutput {
    label: String,
    effective_degree: u32,
    zeros: Vec<f64>,
    tolerance: f64,
    complete: bool,
}

fn render_zeros(label: String, effective_degree: u32, set: &ZeroSet, format: Format) {
    match format {
        Format::Human => {
            println!("{label}: {} zero(s)", set.len());
            for z in &set.values {
                println!("  {z}");
            }
            if !set.complete {
                println!("  (incomplete: expected {effective_degree} real zeros)");
            }
        }
        Format::Json => {
            let out = ZerosOutput {
                label,
                effective_degree,
                zeros: set.values.clone(),
                tolerance: set.tolerance,
                complete: set.complete,
            };
            println!("{}", serde_json::to_string(&out).unwrap());
        }
        Format::Csv => {
            let row: Vec<String> = set.values.iter().map(|z| z.to_string()).collect();
            println!("{}", row.join(","));
        }
    }
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::Hypothesis(_) | Error::Domain(_) => EXIT_USAGE,
        _ => EXIT_CHECK_FAILED,
    }
}

fn cmd_zeros(n: u32, alpha: f64, format: Format) -> Result<u8, Error> {
    let set = laguerre_zeros(n, alpha)?;
    render_zeros(format!("L_{n}^{alpha}"), n, &set, format);
    Ok(0)
}

fn cmd_combo_zeros(
    family: Family,
    n: u32,
    alpha: f64,
    t: f64,
    coeff: f64,
    format: Format,
) -> Result<u8, Error> {
    let spec = CombinationSpec::new(family, ParamSet { n, alpha, t, coeff })?;
    let degree = spec.effective_degree();
    let set = combination_zeros(&spec)?;
    if degree < n {
        if let Format::Human = format {
            println!("note: coefficient -1 cancels the leading terms; effective degree is {degree}");
        }
    }
    render_zeros(spec.to_string(), degree, &set, format);
    Ok(0)
}

fn require<T: Copy>(value: Option<T>, flag: &str) -> Result<T, Error> {
    value.ok_or_else(|| Error::Domain(format!("missing required flag --{flag} for this theorem")))
}

fn print_report(side: &str, report: &lagcomb::InterlacingReport) {
    match report.verdict {
        Verdict::Interlaces => println!("  vs {side}: interlaces (min gap {})", report.min_gap),
        Verdict::Degenerate => println!("  vs {side}: degenerate (coincident zeros)"),
        Verdict::Fails => {
            let (i, j) = report.violation.unwrap_or((0, 0));
            println!("  vs {side}: fails, first violation at index pair ({i}, {j})");
        }
    }
}

fn cmd_check(
    theorem: TheoremArg,
    n: Option<u32>,
    alpha: Option<f64>,
    t: Option<f64>,
    coeff: Option<f64>,
) -> Result<u8, Error> {
    match theorem {
        TheoremArg::R | TheoremArg::S => {
            let (n, alpha, t) = (require(n, "n")?, require(alpha, "alpha")?, require(t, "t")?);
            let coeff = require(coeff, "coeff")?;
            let (name, report) = match theorem {
                TheoremArg::R => ("R", check_theorem_r(n, alpha, t, coeff)?),
                _ => ("S", check_theorem_s(n, alpha, t, coeff)?),
            };
            println!("theorem {name}: n={n} alpha={alpha} t={t} coeff={coeff}");
            if report.reduced_degree {
                println!("  (reduced-degree mode: leading terms cancel at coeff=-1)");
            }
            print_report("unshifted component", &report.vs_base);
            print_report("shifted component", &report.vs_shifted);
            let ok = report.both_interlace();
            println!("{}", if ok { "PASS" } else { "FAIL" });
            Ok(if ok { 0 } else { EXIT_CHECK_FAILED })
        }
        TheoremArg::Chain => {
            let (n, alpha, t) = (require(n, "n")?, require(alpha, "alpha")?, require(t, "t")?);
            let outcome = check_chain(n, alpha, t)?;
            println!("chain: n={n} alpha={alpha} t={t}");
            match &outcome.violation {
                None => println!("  full four-way chain holds\nPASS"),
                Some(v) => println!(
                    "  violated at block {}: {} ({} vs {})\nFAIL",
                    v.index, v.relation, v.left, v.right
                ),
            }
            Ok(if outcome.holds { 0 } else { EXIT_CHECK_FAILED })
        }
        TheoremArg::Claims => {
            let claims = check_negative_claims()?;
            let mut ok = true;
            for c in &claims {
                ok &= c.confirmed;
                println!(
                    "{} [{}]: expected {}, got {}{}",
                    if c.confirmed { "confirmed" } else { "DISCREPANT" },
                    c.id,
                    c.expected,
                    c.actual,
                    match c.violation {
                        Some((i, j)) => format!(", first violation at ({i}, {j})"),
                        None => String::new(),
                    }
                );
            }
            println!("{}", if ok { "PASS" } else { "FAIL" });
            Ok(if ok { 0 } else { EXIT_CHECK_FAILED })
        }
    }
}

fn cmd_repro_paper() -> Result<u8, Error> {
    let (fixtures, claims, ok) = lagcomb::run_repro()?;
    println!("fixture reproduction (tolerance {:.0e} relative):", lagcomb::FIXTURE_TOL);
    for f in &fixtures {
        println!(
            "  {} {:<14} max rel dev {:.2e}  ({})",
            if f.pass { "pass" } else { "FAIL" },
            f.id,
            f.max_rel_dev,
            f.label
        );
    }
    println!("interlacing claims:");
    for c in &claims {
        println!(
            "  {} {:<22} expected {}, got {}",
            if c.confirmed { "pass" } else { "FAIL" },
            c.id,
            c.expected,
            c.actual
        );
    }
    println!("{}", if ok { "PASS" } else { "FAIL" });
    Ok(if ok { 0 } else { EXIT_CHECK_FAILED })
}

fn render_sweep(records: &[SweepRecord], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = String::from(SWEEP_CSV_HEADER);
            out.push('\n');
            for r in records {
                out.push_str(&r.to_csv_row());
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let mut out = serde_json::to_string_pretty(records).unwrap();
            out.push('\n');
            out
        }
    }
}

fn cmd_sweep(config_path: &Path) -> Result<u8, Error> {
    let config = SweepConfig::parse_file(config_path).map_err(Error::Domain)?;
    let records = run_sweep(&config)?;
    let rendered = render_sweep(&records, config.format);
    match &config.out {
        Some(path) => fs::write(path, rendered)
            .map_err(|e| Error::Domain(format!("cannot write {path}: {e}")))?,
        None => print!("{rendered}"),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Zeros { n, alpha, format } => cmd_zeros(n, alpha, format),
        Command::ComboZeros { family, n, alpha, t, coeff, format } => {
            cmd_combo_zeros(family.into(), n, alpha, t, coeff, format)
        }
        Command::Check { theorem, n, alpha, t, coeff } => cmd_check(theorem, n, alpha, t, coeff),
        Command::ReproPaper => cmd_repro_paper(),
        Command::Sweep { config } => cmd_sweep(&config),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_for(&err))
        }
    }
}
