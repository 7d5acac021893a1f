//! `qmf`: expansions, verification suites, tau tables and dimension queries.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quasimodular::forms::{catalog_by_name, Group};
use quasimodular::modspace::{
    dim_cusp, dim_modular, monomial_basis, sturm_bound, verify_independence, x0p_invariants,
};
use quasimodular::tau::{bfile, congruence_scan, tau_table, CongruenceRule, TauKind, TauMethod};
use quasimodular::verify::{run_suite, Suite};
use quasimodular::{Error, QSeries};

#[derive(Parser)]
#[command(
    name = "qmf",
    version,
    about = "Quasi-modular forms of level 1, 2 and 3"
)]
struct Cli {
    /// Working precision: coefficients through q^(order-1).
    #[arg(long, global = true)]
    order: Option<i64>,

    /// Output format for expansions and tau tables.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Only print failures and summaries.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Bfile,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Eta,
    Recursion,
    Formula,
    Crosscheck,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-expansion of a named form.
    Expand { name: String },
    /// Run a verification suite.
    Verify { suite: String },
    /// Values of tau, tau2 or tau3.
    Tau {
        #[arg(long)]
        which: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "recursion")]
        method: Method,
    },
    /// Scan a built-in congruence.
    Scan {
        rule: String,
        #[arg(long)]
        upto: usize,
    },
    /// Invariants of X0(p) and dimensions of M_k, S_k.
    Dims {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u64,
    },
    /// Monomial basis of M_k and its independence check.
    Basis {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: u64,
    },
    /// Sturm bound for weight k.
    Sturm {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: u64,
    },
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownName(_)
            | Error::UnknownRule(_)
            | Error::NotPrime(_)
            | Error::DomainError(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn expand(cli: &Cli, name: &str) -> Outcome {
    let order = cli.order.unwrap_or(10);
    let form = catalog_by_name(name, order)?;
    let s = &form.series;
    let out = match cli.format {
        None => format!("{s}\n"),
        Some(Format::Json) => format!("{}\n", s.to_json()),
        Some(Format::Csv) => rows(s, ","),
        Some(Format::Bfile) => {
            if !s.is_integral() {
                return Err(Failure {
                    code: 3,
                    message: format!("{name} has non-integral coefficients; no b-file"),
                });
            }
            rows(s, " ")
        }
    };
    Ok((out, true))
}

/// One `exponent<sep>coefficient` line per stored coefficient.
fn rows(s: &QSeries, sep: &str) -> String {
    let mut out = String::new();
    if s.is_zero() {
        return out;
    }
    for n in s.valuation()..s.precision() {
        let _ = writeln!(out, "{n}{sep}{}", s.coeff(n));
    }
    out
}

fn verify(cli: &Cli, suite: &str) -> Outcome {
    let suite: Suite = suite.parse()?;
    let results = run_suite(suite, cli.order)?;
    let mut out = String::new();
    let failed = results.iter().filter(|c| !c.passed).count();
    for c in &results {
        if !cli.quiet || !c.passed {
            let _ = writeln!(out, "{c}");
        }
    }
    let _ = writeln!(out, "{}: {} checks, {failed} failed", suite, results.len());
    Ok((out, failed == 0))
}

fn tau(cli: &Cli, which: &str, n: usize, method: Method) -> Outcome {
    let which: TauKind = which.parse()?;
    if n == 0 {
        return Err(Error::DomainError("n must be at least 1".into()).into());
    }
    let single = |m| tau_table(which, m, n);
    let (table, ok, note) = match method {
        Method::Eta => (single(TauMethod::EtaProduct)?, true, String::new()),
        Method::Recursion => (single(TauMethod::LogRecursion)?, true, String::new()),
        Method::Formula => (single(TauMethod::ExplicitFormula)?, true, String::new()),
        Method::Crosscheck => {
            let tables = TauMethod::ALL
                .into_iter()
                .map(single)
                .collect::<Result<Vec<_>, _>>()?;
            let mismatch = tables[1..]
                .iter()
                .filter_map(|t| tables[0].first_disagreement(t).map(|i| (t.method, i)))
                .min_by_key(|&(_, i)| i);
            match mismatch {
                None => (
                    tables[0].clone(),
                    true,
                    "eta, recursion and formula agree".to_string(),
                ),
                Some((m, i)) => (
                    tables[0].clone(),
                    false,
                    format!("mismatch between eta and {m:?} at n = {i}"),
                ),
            }
        }
    };
    let mut out = match cli.format {
        Some(Format::Bfile) => table.to_bfile(),
        Some(Format::Csv) => bfile(1, &table.values).replace(' ', ","),
        _ => format!("{}({n}) = {}\n", which, table.get(n)),
    };
    if !note.is_empty() && !(cli.quiet && ok) {
        let _ = writeln!(out, "{note}");
    }
    Ok((out, ok))
}

fn scan(rule: &str, upto: usize) -> Outcome {
    let rule: CongruenceRule = rule.parse().map_err(|e: Error| {
        let names: Vec<&str> = CongruenceRule::ALL.iter().map(|r| r.name()).collect();
        Failure {
            code: 2,
            message: format!("{e}; known rules: {}", names.join(", ")),
        }
    })?;
    let report = congruence_scan(rule, upto)?;
    Ok((format!("{report}\n"), report.passed()))
}

fn dims(p: u64, k: u64) -> Outcome {
    let inv = x0p_invariants(p)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "X0({p}): index {}, eps2 {}, eps3 {}, genus {}, cusps {} (widths {}, {})",
        inv.index, inv.eps2, inv.eps3, inv.genus, inv.cusps, inv.widths.0, inv.widths.1
    );
    let _ = writeln!(out, "dim M_{k} = {}", dim_modular(p, k)?);
    let _ = writeln!(out, "dim S_{k} = {}", dim_cusp(p, k)?);
    Ok((out, true))
}

fn monomial_name(e: &[u32; 4], group: Group) -> String {
    let names: &[&str] = match group {
        Group::SL2Z => &["E2", "E4", "E6"],
        Group::Gamma0_2 => &["P2", "Q2", "R2"],
        Group::Gamma0_3 => &["P3", "Q3", "R3", "S3"],
    };
    let parts: Vec<String> = e
        .iter()
        .zip(names)
        .filter(|(&x, _)| x > 0)
        .map(|(&x, n)| {
            if x == 1 {
                n.to_string()
            } else {
                format!("{n}^{x}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn basis(group: &str, k: u64) -> Outcome {
    let group: Group = group.parse()?;
    let mut out = String::new();
    let monos: Vec<String> = monomial_basis(group, k)
        .iter()
        .map(|e| monomial_name(e, group))
        .collect();
    let _ = writeln!(out, "M_{k}({group}) basis: {}", monos.join(", "));
    if k == 0 {
        return Ok((out, true));
    }
    let rep = verify_independence(group, k)?;
    let _ = writeln!(
        out,
        "rank {} of dimension {} through q^{}: {}",
        rep.rank,
        rep.dimension,
        sturm_bound(group, k),
        if rep.passed() {
            "independent"
        } else {
            "DEPENDENT"
        }
    );
    Ok((out, rep.passed()))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Expand { name } => expand(cli, name),
        Command::Verify { suite } => verify(cli, suite),
        Command::Tau { which, n, method } => tau(cli, which, *n, *method),
        Command::Scan { rule, upto } => scan(rule, *upto),
        Command::Dims { p, k } => dims(*p, *k),
        Command::Basis { group, k } => basis(group, *k),
        Command::Sturm { group, k } => {
            let group: Group = group.parse()?;
            Ok((format!("{}\n", sturm_bound(group, *k)), true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
