//! `appell`: exact tables, evaluations, and identity checks for Appell
//! polynomial families.
//!
//! Every command emits a deterministic document: rationals are serialized
//! as lowest-terms `p/q` strings (never floating point), map keys are
//! sorted, and identical argument vectors produce byte-identical output.
//! All computation is delegated to `appell-core`; this layer only parses
//! arguments and formats tables.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use appell_core::families::{self, Identity, IdentityParams, IdentityReport};
use appell_core::numeric::{parse_rat, rat_int, Rat};
use appell_core::seqgroup::EgfSequence;
use appell_core::stirling::{stirling_first_triangle, stirling_second_triangle};

const SCHEMA_VERSION: &str = "appell/1";

#[derive(Parser)]
#[command(
    name = "appell",
    version,
    about = "Exact Appell polynomial toolkit: Stirling tables, Bernoulli and Apostol-Euler families, convolution identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Upper bound on any requested degree or table size.
    #[arg(long, global = true, default_value_t = 64)]
    max_order: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    First,
    Second,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::First => "first",
            Kind::Second => "second",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Bernoulli,
    ApostolEuler,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::ApostolEuler => "apostol-euler",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Lower-triangular table of Stirling numbers, rows 0..=n.
    Stirling {
        /// Which kind: signed first or second.
        #[arg(long, value_enum)]
        kind: Kind,
        /// Largest row index.
        #[arg(long)]
        n: usize,
    },
    /// Coefficients (or one exact value) of a family polynomial, together
    /// with its associated-sequence prefix.
    Family {
        /// Which family.
        #[arg(value_enum)]
        family: Family,
        /// Order parameter of the family, as a rational.
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Apostol-Euler parameter; required for (and only for) that family.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Degree.
        #[arg(long)]
        n: usize,
        /// Evaluation point; omit to get the coefficient table instead.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Associated sequence (forward-difference weights) of a family.
    Assoc {
        /// Which family.
        #[arg(value_enum)]
        family: Family,
        /// Order parameter of the family, as a rational.
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Apostol-Euler parameter; required for (and only for) that family.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Largest index.
        #[arg(long)]
        n: usize,
    },
    /// Daehee numbers of integer order m, indices 0..=n.
    Daehee {
        /// Order, at least 1.
        #[arg(long)]
        m: usize,
        /// Largest index.
        #[arg(long)]
        n: usize,
    },
    /// Verify a convolution identity against brute-force enumeration at
    /// seeded pseudo-random rational points. Exits 1 on failure.
    Verify {
        /// Identity name (e.g. norlund-corrected, bernoulli-higher,
        /// euler-higher, mixed, group-laws, stirling-inversion,
        /// multiplier-laws).
        identity: String,
        /// Number of leading factors (bernoulli-higher, euler-higher,
        /// mixed).
        #[arg(long)]
        m: Option<usize>,
        /// Number of Apostol-Euler factors (mixed).
        #[arg(long)]
        r: Option<usize>,
        /// Apostol-Euler parameter (euler-higher, mixed).
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Largest degree checked. Brute-force enumeration grows
        /// combinatorially, so keep this modest for many factors.
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        /// Random point tuples per degree.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Seed for the deterministic point generator.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// The document every subcommand emits. Field order is fixed by the struct;
/// parameters use a sorted map; all cells are strings.
#[derive(Serialize)]
struct OutputDocument {
    schema_version: &'static str,
    command: &'static str,
    parameters: BTreeMap<String, String>,
    payload: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    status: Option<&'static str>,
}

impl OutputDocument {
    fn new(command: &'static str, parameters: BTreeMap<String, String>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command,
            parameters,
            payload: Vec::new(),
            status: None,
        }
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out = serde_json::to_string_pretty(self).expect("document serializes");
                out.push('\n');
                out
            }
            Format::Csv => {
                let mut out = String::new();
                for row in &self.payload {
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
                out
            }
        }
    }
}

/// A usage problem: reported on stderr, exit code 2.
struct UsageError(String);

impl From<appell_core::Error> for UsageError {
    fn from(e: appell_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((document, failed)) => {
            print!("{}", document.render(cli.format));
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(OutputDocument, bool), UsageError> {
    match &cli.command {
        Command::Stirling { kind, n } => {
            check_order(*n, cli.max_order)?;
            Ok((cmd_stirling(*kind, *n), false))
        }
        Command::Family {
            family,
            t,
            beta,
            n,
            x,
        } => {
            check_order(*n, cli.max_order)?;
            let t = parse_rat(t)?;
            let beta = parse_beta(*family, beta.as_deref())?;
            let x = x.as_deref().map(parse_rat).transpose()?;
            Ok((
                cmd_family(*family, &t, beta.as_ref(), *n, x.as_ref()),
                false,
            ))
        }
        Command::Assoc { family, t, beta, n } => {
            check_order(*n, cli.max_order)?;
            let t = parse_rat(t)?;
            let beta = parse_beta(*family, beta.as_deref())?;
            Ok((cmd_assoc(*family, &t, beta.as_ref(), *n), false))
        }
        Command::Daehee { m, n } => {
            check_order(*n, cli.max_order)?;
            if *m == 0 {
                return Err(UsageError("--m must be at least 1".to_string()));
            }
            Ok((cmd_daehee(*m, *n), false))
        }
        Command::Verify {
            identity,
            m,
            r,
            beta,
            max_degree,
            trials,
            seed,
        } => {
            check_order(*max_degree, cli.max_order)?;
            let identity: Identity = identity.parse()?;
            let mut params = IdentityParams::default();
            if let Some(m) = m {
                if *m == 0 {
                    return Err(UsageError("--m must be at least 1".to_string()));
                }
                params.m = *m;
            }
            if let Some(r) = r {
                if *r == 0 {
                    return Err(UsageError("--r must be at least 1".to_string()));
                }
                params.r = *r;
            }
            if let Some(beta) = beta {
                params.beta = parse_rat(beta)?;
                warn_beta_range(&params.beta);
            }
            let report = families::verify_identity(identity, &params, *max_degree, *trials, *seed);
            let failed = !report.passed;
            Ok((cmd_verify(&report), failed))
        }
    }
}

fn check_order(n: usize, max_order: usize) -> Result<(), UsageError> {
    if n > max_order {
        return Err(UsageError(format!(
            "requested degree {n} exceeds --max-order {max_order}"
        )));
    }
    Ok(())
}

fn parse_beta(family: Family, beta: Option<&str>) -> Result<Option<Rat>, UsageError> {
    match (family, beta) {
        (Family::ApostolEuler, Some(beta)) => {
            let beta = parse_rat(beta)?;
            warn_beta_range(&beta);
            Ok(Some(beta))
        }
        (Family::ApostolEuler, None) => Err(UsageError(
            "--beta is required for apostol-euler".to_string(),
        )),
        (Family::Bernoulli, Some(_)) => Err(UsageError(
            "--beta only applies to apostol-euler".to_string(),
        )),
        (Family::Bernoulli, None) => Ok(None),
    }
}

/// Every formula is polynomial in beta, so out-of-range values still give
/// exact results; the usual parameter range is [0, 1], so just warn.
fn warn_beta_range(beta: &Rat) {
    if beta < &rat_int(0) || beta > &rat_int(1) {
        eprintln!("warning: beta = {beta} is outside the usual range [0, 1]");
    }
}

fn cmd_stirling(kind: Kind, n_max: usize) -> OutputDocument {
    let mut parameters = BTreeMap::new();
    parameters.insert("kind".to_string(), kind.name().to_string());
    parameters.insert("n".to_string(), n_max.to_string());
    let mut doc = OutputDocument::new("stirling", parameters);
    let triangle = match kind {
        Kind::First => stirling_first_triangle(n_max),
        Kind::Second => stirling_second_triangle(n_max),
    };
    doc.payload = triangle
        .iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect())
        .collect();
    doc
}

fn family_data(
    family: Family,
    t: &Rat,
    beta: Option<&Rat>,
    n: usize,
) -> (appell_core::AppellSeq, EgfSequence) {
    match family {
        Family::Bernoulli => (
            families::bernoulli(t, n),
            families::bernoulli_associated(t, n),
        ),
        Family::ApostolEuler => {
            let beta = beta.expect("beta checked by parse_beta");
            (
                families::apostol_euler(t, beta, n),
                families::euler_associated(t, beta, n),
            )
        }
    }
}

fn family_parameters(
    family: Family,
    t: &Rat,
    beta: Option<&Rat>,
    n: usize,
) -> BTreeMap<String, String> {
    let mut parameters = BTreeMap::new();
    parameters.insert("family".to_string(), family.name().to_string());
    parameters.insert("t".to_string(), t.to_string());
    if let Some(beta) = beta {
        parameters.insert("beta".to_string(), beta.to_string());
    }
    parameters.insert("n".to_string(), n.to_string());
    parameters
}

fn cmd_family(
    family: Family,
    t: &Rat,
    beta: Option<&Rat>,
    n: usize,
    x: Option<&Rat>,
) -> OutputDocument {
    let mut parameters = family_parameters(family, t, beta, n);
    let (seq, assoc) = family_data(family, t, beta, n);
    let mut doc_payload = Vec::new();
    match x {
        Some(x) => {
            parameters.insert("x".to_string(), x.to_string());
            let value = seq.evaluate(n, x).expect("order is n");
            doc_payload.push(labeled_row("value", std::iter::once(value.to_string())));
        }
        None => {
            let polynomial = seq.polynomial(n).expect("order is n");
            doc_payload.push(labeled_row(
                "coefficients",
                (0..=n).map(|i| polynomial.coeff(i).to_string()),
            ));
            doc_payload.push(labeled_row(
                "associated",
                assoc.terms().iter().map(|a| a.to_string()),
            ));
        }
    }
    let mut doc = OutputDocument::new("family", parameters);
    doc.payload = doc_payload;
    doc
}

fn labeled_row(label: &str, cells: impl Iterator<Item = String>) -> Vec<String> {
    std::iter::once(label.to_string()).chain(cells).collect()
}

fn cmd_assoc(family: Family, t: &Rat, beta: Option<&Rat>, n: usize) -> OutputDocument {
    let parameters = family_parameters(family, t, beta, n);
    let (_, assoc) = family_data(family, t, beta, n);
    let mut doc = OutputDocument::new("assoc", parameters);
    doc.payload = assoc.terms().iter().map(|a| vec![a.to_string()]).collect();
    doc
}

fn cmd_daehee(m: usize, n_max: usize) -> OutputDocument {
    let mut parameters = BTreeMap::new();
    parameters.insert("m".to_string(), m.to_string());
    parameters.insert("n".to_string(), n_max.to_string());
    let mut doc = OutputDocument::new("daehee", parameters);
    doc.payload = (0..=n_max)
        .map(|n| {
            vec![families::daehee_number(m, n)
                .expect("m >= 1 checked")
                .to_string()]
        })
        .collect();
    doc
}

fn cmd_verify(report: &IdentityReport) -> OutputDocument {
    let mut parameters = report.parameters.clone();
    parameters.insert("identity".to_string(), report.identity.to_string());
    parameters.insert("max_degree".to_string(), report.max_degree.to_string());
    parameters.insert("trials".to_string(), report.trials.to_string());
    parameters.insert("seed".to_string(), report.seed.to_string());
    let mut doc = OutputDocument::new("verify", parameters);
    let status = if report.passed { "pass" } else { "fail" };
    doc.payload
        .push(vec!["status".to_string(), status.to_string()]);
    if let Some(failure) = &report.first_failure {
        doc.payload.push(vec![
            "witness".to_string(),
            failure.degree.to_string(),
            failure.lhs.clone(),
            failure.rhs.clone(),
        ]);
    }
    doc.status = Some(status);
    doc
}
