//! `qrat`: exact q-deformed rational numbers, closure polynomials, Jones
//! polynomials, and conjecture scanners from the command line.
//!
//! Exit codes: 0 success, 2 malformed input, 3 domain error (such as ∞ where
//! a finite rational is required), 4 internal invariant breach.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qrat::contfrac::{farey_parent, negative_cf, regular_cf, Parity};
use qrat::frac::Frac;
use qrat::jones::{classify_eisenstein, classify_gaussian, jones};
use qrat::poly::LaurentPoly;
use qrat::qdeform::{q_deform, q_deform_regular, QRational};
use qrat::quiver::{
    closure_poly_bruteforce, closure_poly_dp, closure_poly_valley, Composition, QuiverA,
};
use qrat::scan::{
    composite_records, denominator_records, irreducibility_records, palindromic_records,
    scan_composite_counterexamples, scan_denominator_range, scan_irreducibility,
    scan_palindromic, write_csv, write_jsonl, ScanRecord,
};
use qrat::Error;

#[derive(Parser)]
#[command(
    name = "qrat",
    about = "Exact arithmetic on q-deformed rational numbers",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute R_α, S_α, both continued fractions, and the Farey parent.
    Compute {
        /// Fraction r/s (also -r/s or inf)
        fraction: String,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
        /// Continued-fraction construction to compute through
        #[arg(long, value_enum, default_value_t = CfKind::Negative)]
        cf: CfKind,
        /// Length parity of the printed regular continued fraction
        #[arg(long, value_enum)]
        parity: Option<ParityArg>,
    },
    /// Closure polynomial of the type-A quiver Q(a1,...,as).
    Closure {
        /// Composition, e.g. 1,3,1,1
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Dp)]
        method: MethodArg,
    },
    /// Normalized Jones polynomial of the rational link L(r/s), r/s > 1.
    Jones {
        /// Fraction r/s with r/s > 1 (or 1, inf)
        fraction: String,
        /// Evaluate at a root of unity: -1, omega, i, -omega
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
    },
    /// Batch scanners emitting deterministic CSV (default) or JSONL records.
    Scan {
        #[arg(value_enum)]
        kind: ScanKind,
        /// Largest denominator to scan
        #[arg(long)]
        max: u64,
        /// Output file; .csv or .jsonl decides the format (stdout is CSV)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CfKind {
    Regular,
    Negative,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Dp,
    Brute,
    Valley,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanKind {
    Denominator,
    Composite,
    Palindromic,
    Irreducible,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError { code, message }) => {
            eprintln!("qrat: {message}");
            ExitCode::from(code)
        }
    }
}

/// QRAT_THREADS caps scan parallelism; unset means the rayon default.
fn configure_threads() {
    if let Ok(value) = std::env::var("QRAT_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => 2,
            Error::Internal(_) => 4,
            _ => 3,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn internal(message: impl Into<String>) -> CliError {
    CliError {
        code: 4,
        message: message.into(),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute {
            fraction,
            json,
            cf,
            parity,
        } => compute(&fraction, json, cf, parity),
        Command::Closure { seq, method } => closure(&seq, method),
        Command::Jones { fraction, eval } => jones_cmd(&fraction, eval.as_deref()),
        Command::Scan { kind, max, out } => scan(kind, max, out),
    }
}

fn parse_fraction(text: &str) -> Result<Frac, CliError> {
    Ok(text.parse::<Frac>()?)
}

fn compute(
    fraction: &str,
    json: bool,
    cf: CfKind,
    parity: Option<ParityArg>,
) -> Result<(), CliError> {
    let alpha = parse_fraction(fraction)?;
    if alpha.is_infinite() {
        return Err(Error::Infinite.into());
    }
    let x: QRational = match cf {
        CfKind::Negative => q_deform(&alpha)?,
        CfKind::Regular => q_deform_regular(&alpha)?,
    };
    let parity = match parity {
        None => Parity::Any,
        Some(ParityArg::Even) => Parity::Even,
        Some(ParityArg::Odd) => Parity::Odd,
    };
    let reg = regular_cf(&alpha, parity)?;
    let neg = negative_cf(&alpha)?;
    let parent = if alpha.is_positive() {
        Some(farey_parent(&alpha)?)
    } else {
        None
    };
    let r_pal = palindromic_flag(x.r_laurent());
    let s_pal = x.s_poly().is_palindromic().ok();

    if json {
        let mut out = String::new();
        write!(out, "{{\"alpha\":\"{alpha}\",\"r\":{}", x.r_laurent().to_json()).unwrap();
        write!(out, ",\"s\":{}", x.s_poly().to_json()).unwrap();
        write!(out, ",\"regular_cf\":{:?}", terms_of(reg.terms())).unwrap();
        write!(out, ",\"negative_cf\":{:?}", terms_of(neg.terms())).unwrap();
        match &parent {
            Some(p) => {
                write!(out, ",\"farey_parent\":[\"{}\",\"{}\"]", p.left, p.right).unwrap()
            }
            None => write!(out, ",\"farey_parent\":null").unwrap(),
        }
        write!(out, ",\"r_palindromic\":{}", json_opt_bool(r_pal)).unwrap();
        write!(out, ",\"s_palindromic\":{}}}", json_opt_bool(s_pal)).unwrap();
        println!("{out}");
    } else {
        println!("alpha = {alpha}");
        println!("R = {}", x.r_laurent());
        println!("S = {}", x.s_poly());
        println!("regular_cf = {reg}");
        println!("negative_cf = {neg}");
        match &parent {
            Some(p) => println!("farey_parent = {} # {}", p.left, p.right),
            None => println!("farey_parent = n/a"),
        }
        println!("R_palindromic = {}", opt_bool(r_pal));
        println!("S_palindromic = {}", opt_bool(s_pal));
    }
    Ok(())
}

fn terms_of(terms: &[num_bigint::BigInt]) -> Vec<String> {
    terms.iter().map(|t| t.to_string()).collect()
}

fn palindromic_flag(r: &LaurentPoly) -> Option<bool> {
    r.as_poly().and_then(|p| p.is_palindromic().ok())
}

fn opt_bool(v: Option<bool>) -> String {
    match v {
        Some(b) => b.to_string(),
        None => "n/a".into(),
    }
}

fn json_opt_bool(v: Option<bool>) -> String {
    match v {
        Some(b) => b.to_string(),
        None => "null".into(),
    }
}

fn closure(seq: &str, method: MethodArg) -> Result<(), CliError> {
    let comp: Composition = seq.parse()?;
    let quiver = QuiverA::from_composition(&comp);
    let result = match method {
        MethodArg::Dp => closure_poly_dp(&quiver),
        MethodArg::Brute => closure_poly_bruteforce(&quiver)?,
        MethodArg::Valley => closure_poly_valley(&comp)?,
        MethodArg::All => {
            let brute = closure_poly_bruteforce(&quiver)?;
            let dp = closure_poly_dp(&quiver);
            let valley = closure_poly_valley(&comp)?;
            if brute != dp || dp != valley {
                return Err(internal(format!(
                    "closure methods disagree on Q({comp}): brute={brute}, dp={dp}, valley={valley}"
                )));
            }
            println!("methods agree: brute = dp = valley");
            dp
        }
    };
    println!("cl = {result}");
    Ok(())
}

fn jones_cmd(fraction: &str, eval: Option<&str>) -> Result<(), CliError> {
    let alpha = parse_fraction(fraction)?;
    let report = jones(&alpha)?;
    println!("J = {}", report.j_poly);
    if let Some(point) = eval {
        match point {
            "-1" => println!("J(-1) = {}", report.at_minus1),
            "omega" => println!(
                "J(omega) = {}  [{}]",
                report.at_omega.symbol(),
                classify_eisenstein(&report.at_omega)
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "outside guaranteed classes".into())
            ),
            "i" => println!(
                "J(i) = {}  [{}]",
                report.at_i.symbol(),
                classify_gaussian(&report.at_i)
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "outside guaranteed classes".into())
            ),
            "-omega" => println!(
                "J(-omega) = {}  [{}]",
                report.at_minus_omega.symbol(),
                classify_eisenstein(&report.at_minus_omega)
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "outside guaranteed classes".into())
            ),
            other => {
                return Err(Error::Parse(format!(
                    "unknown evaluation point {other:?} (use -1, omega, i, -omega)"
                ))
                .into())
            }
        }
    }
    Ok(())
}

fn scan(kind: ScanKind, max: u64, out: Option<PathBuf>) -> Result<(), CliError> {
    let records: Vec<ScanRecord> = match kind {
        ScanKind::Denominator => {
            let reports = scan_denominator_range(2, max)?;
            reports.iter().flat_map(denominator_records).collect()
        }
        ScanKind::Composite => composite_records(&scan_composite_counterexamples(max)?),
        ScanKind::Palindromic => palindromic_records(&scan_palindromic(max)?),
        ScanKind::Irreducible => irreducibility_records(&scan_irreducibility(max)?),
    };
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            write_csv(&mut stdout, &records).map_err(|e| internal(e.to_string()))?;
        }
        Some(path) => {
            let jsonl = path.extension().map_or(false, |e| e == "jsonl");
            let mut file = std::fs::File::create(&path)
                .map_err(|e| internal(format!("cannot create {}: {e}", path.display())))?;
            if jsonl {
                write_jsonl(&mut file, &records).map_err(|e| internal(e.to_string()))?;
            } else {
                write_csv(&mut file, &records).map_err(|e| internal(e.to_string()))?;
            }
            eprintln!("wrote {} records to {}", records.len(), path.display());
        }
    }
    Ok(())
}
