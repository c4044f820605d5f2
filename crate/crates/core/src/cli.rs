//! Command-line entry point. `run` is a library function so integration
//! tests can drive the full pipeline without spawning a process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 data error (singular minor, insufficient terms, network failure).

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::io::{Read, Write};

use crate::catalog::{self, Name};
use crate::error::Error;
use crate::hankel::{self, ldl_decompose};
use crate::jfraction::{self, JFraction};
use crate::numeric::{format_rat, parse_rat, Rat};
use crate::oeis;
use crate::orthopoly::{self, CoefficientArray};
use crate::riordan::{stock, Kind, RiordanArray};
use crate::series::Sequence;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Parser)]
#[command(
    name = "hankelkit",
    about = "Exact Hankel transforms, J-fractions, orthogonal polynomials, Riordan arrays",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Hankel transform h_0..h_N of a sequence, one per line
    Hankel(SeqArgs),
    /// Print the LDL^T pivot list d_0..d_n (and optionally L)
    Ldl {
        #[command(flatten)]
        input: SeqArgs,
        /// Also print the unit-lower-triangular factor L, row-major
        #[arg(long)]
        matrix: bool,
    },
    /// J-fraction coefficients: extraction and moment reconstruction
    #[command(subcommand)]
    Jfrac(JfracCommand),
    /// Print orthogonal polynomial coefficient rows by a chosen route
    Orthopoly {
        #[command(flatten)]
        input: SeqArgs,
        /// Highest polynomial degree N
        #[arg(short = 'n', long)]
        degree: Option<usize>,
        /// Construction route
        #[arg(long, value_parser = ["rec", "det", "ldl"], default_value = "ldl")]
        route: String,
    },
    /// Riordan array operations
    #[command(subcommand)]
    Riordan(RiordanCommand),
    /// Check the displayed identity of one worked example for k = 0..K
    Verify {
        /// Example number, 1-5
        #[arg(long)]
        example: usize,
        #[arg(short = 'k', long, default_value_t = 10)]
        k: usize,
    },
    /// Full report: three Hankel routes, J-fraction, coefficient rows,
    /// agreement flags
    Analyze {
        #[command(flatten)]
        input: SeqArgs,
        /// Depth n (default: all the terms support)
        #[arg(short = 'n', long)]
        depth: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Fetch an OEIS sequence (b-file) into the local cache and print it
    Fetch {
        /// A-number, e.g. A000108
        anumber: String,
        #[arg(long, default_value_t = 50)]
        max_terms: usize,
        /// Do not touch the network; fail unless cached
        #[arg(long)]
        offline: bool,
    },
}

#[derive(Subcommand)]
enum JfracCommand {
    /// Extract (alpha, lambda) from a moment sequence
    Extract(SeqArgs),
    /// Reconstruct mu_0..mu_N from (alpha, lambda)
    Moments {
        /// Comma-separated alpha list
        #[arg(long, default_value = "")]
        alpha: String,
        /// Comma-separated lambda list (all nonzero)
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, default_value = "1")]
        mu0: String,
        #[arg(short = 'n', long)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum RiordanCommand {
    /// Materialize the entries of (g, f) or [g, f] to N rows
    Entries {
        /// Series expression for g, e.g. "1/(1-x)" or "E"
        #[arg(long)]
        g: String,
        /// Series expression for f, e.g. "x/(1-x)"
        #[arg(long)]
        f: String,
        /// Exponential kind [g, f]
        #[arg(long)]
        exp: bool,
        #[arg(short = 'n', long, default_value_t = 8)]
        rows: usize,
    },
}

/// Sequence input: positional file (`-` for stdin), inline terms, a named
/// example, or an OEIS A-number.
#[derive(Args)]
struct SeqArgs {
    /// File of terms, or `-` for stdin
    file: Option<String>,
    /// Inline terms, e.g. "1,1,2,5,14"
    #[arg(long)]
    terms: Option<String>,
    /// Named example sequence (catalan, central_binomial, schroeder,
    /// factorial, derangement)
    #[arg(long)]
    seq: Option<String>,
    /// OEIS A-number to fetch (cache-first)
    #[arg(long)]
    oeis: Option<String>,
    /// With --oeis: forbid network access
    #[arg(long)]
    offline: bool,
    /// Number of terms to take from --seq or --oeis
    #[arg(long, default_value_t = 41)]
    max_terms: usize,
}

/// An error plus the exit code it maps to.
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ParseError { .. } | Error::UnknownName(_) => EXIT_USAGE,
            _ => EXIT_DATA,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl SeqArgs {
    fn resolve(&self) -> Result<Sequence, CliError> {
        let sources = [
            self.file.is_some(),
            self.terms.is_some(),
            self.seq.is_some(),
            self.oeis.is_some(),
        ];
        if sources.iter().filter(|&&b| b).count() != 1 {
            return Err(CliError::usage(
                "provide exactly one of: a file (or -), --terms, --seq, --oeis",
            ));
        }
        if let Some(terms) = &self.terms {
            return Ok(Sequence::parse(terms)?);
        }
        if let Some(name) = &self.seq {
            let name: Name = name.parse()?;
            return Ok(catalog::generate(name, self.max_terms.saturating_sub(1)));
        }
        if let Some(anumber) = &self.oeis {
            let client = oeis::Client::new(self.offline);
            return Ok(client.fetch(anumber, self.max_terms)?);
        }
        let path = self.file.as_deref().expect("checked above");
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::usage(format!("stdin: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("{path}: {e}")))?
        };
        Ok(Sequence::parse(&text)?)
    }
}

/// Parse and run. Output goes to `out`; errors go to stderr.
pub fn run<I, S>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not usage errors
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let io = |e: std::io::Error| CliError::usage(format!("write: {e}"));
    match cli.command {
        Command::Hankel(input) => {
            let s = input.resolve()?;
            let report = hankel::is_regular(&s);
            for h in &report.determinants {
                writeln!(out, "{}", format_rat(h)).map_err(io)?;
            }
            if let Some(k) = report.first_zero {
                writeln!(out, "# not regular: h_{k} = 0").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Ldl { input, matrix } => {
            let s = input.resolve()?;
            let n = s.max_hankel_order();
            let ldl = ldl_decompose(&s, n)?;
            writeln!(out, "d: {}", join_rats(ldl.d())).map_err(io)?;
            if matrix {
                for row in ldl.l_rows() {
                    writeln!(out, "{}", join_rats(row)).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Jfrac(JfracCommand::Extract(input)) => {
            let s = input.resolve()?;
            let j = jfraction::extract_jfraction(&s)?;
            writeln!(out, "alpha: {}", join_rats(j.alpha())).map_err(io)?;
            writeln!(out, "lambda: {}", join_rats(j.lambda())).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Jfrac(JfracCommand::Moments {
            alpha,
            lambda,
            mu0,
            count,
        }) => {
            let j = JFraction::new(
                parse_rat_list(&alpha)?,
                parse_rat_list(&lambda)?,
                parse_rat(&mu0, 1)?,
            )?;
            let s = jfraction::moments_from_jfraction(&j, count)?;
            for t in s.terms() {
                writeln!(out, "{}", format_rat(t)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Orthopoly {
            input,
            degree,
            route,
        } => {
            let s = input.resolve()?;
            let n = degree.unwrap_or_else(|| s.max_hankel_order());
            let a = coefficient_array(&s, n, &route)?;
            for row in a.rows() {
                writeln!(out, "{}", join_rats(row)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Riordan(RiordanCommand::Entries { g, f, exp, rows }) => {
            // parse to a couple of extra orders so f's normalization check
            // has room
            let precision = rows.max(2);
            let g = stock::parse_series_expr(&g, precision)?;
            let f = stock::parse_series_expr(&f, precision)?;
            let kind = if exp { Kind::Exponential } else { Kind::Ordinary };
            let r = RiordanArray::new(g, f, kind)?;
            for row in r.entries(rows)? {
                writeln!(out, "{}", join_rats(&row)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { example, k } => {
            let name = Name::from_example_number(example)?;
            let mut all_pass = true;
            writeln!(out, "example {example} ({name}): identity check for k = 0..{k}")
                .map_err(io)?;
            for kk in 0..=k {
                let rec = catalog::verify_identity(name, kk);
                let status = if rec.pass { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "k={kk:<3} lhs={} expected={} {status}",
                    format_rat(&rec.lhs),
                    format_rat(&rec.expected)
                )
                .map_err(io)?;
                all_pass &= rec.pass;
            }
            Ok(if all_pass { EXIT_OK } else { EXIT_VERIFY_FAIL })
        }
        Command::Analyze { input, depth, json } => {
            let s = input.resolve()?;
            let report = analyze(&s, depth)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json()).unwrap())
                    .map_err(io)?;
            } else {
                report.write_text(out).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Fetch {
            anumber,
            max_terms,
            offline,
        } => {
            let client = oeis::Client::new(offline);
            let s = client.fetch(&anumber, max_terms)?;
            for t in s.terms() {
                writeln!(out, "{}", format_rat(t)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn coefficient_array(s: &Sequence, n: usize, route: &str) -> Result<CoefficientArray, CliError> {
    let a = match route {
        "rec" => {
            let j = jfraction::extract_jfraction(s)?;
            orthopoly::polys_from_recurrence(&j, n)?
        }
        "det" => orthopoly::polys_from_determinants(s, n)?,
        _ => orthopoly::polys_from_ldl(s, n)?,
    };
    Ok(a)
}

fn parse_rat_list(text: &str) -> Result<Vec<Rat>, CliError> {
    let mut out = Vec::new();
    for token in text.split(|c: char| c.is_whitespace() || c == ',') {
        if token.is_empty() {
            continue;
        }
        out.push(parse_rat(token, 1)?);
    }
    Ok(out)
}

fn join_rats(rats: &[Rat]) -> String {
    rats.iter().map(format_rat).collect::<Vec<_>>().join(" ")
}

/// Aggregated result of running all three Hankel routes on one sequence.
pub struct AnalysisReport {
    pub input: Vec<Rat>,
    pub depth: usize,
    pub hankel_det: Vec<Rat>,
    pub hankel_lambda_product: Vec<Rat>,
    pub hankel_coefficient_formula: Vec<Rat>,
    pub alpha: Vec<Rat>,
    pub lambda: Vec<Rat>,
    pub d: Vec<Rat>,
    pub coeff_rows: Vec<Vec<Rat>>,
    pub regular_through: Option<usize>,
}

impl AnalysisReport {
    pub fn routes_agree(&self) -> (bool, bool) {
        (
            self.hankel_det == self.hankel_lambda_product,
            self.hankel_det == self.hankel_coefficient_formula,
        )
    }

    fn to_json(&self) -> Value {
        let rats = |v: &[Rat]| -> Value { v.iter().map(format_rat).collect() };
        let (lambda_ok, coeff_ok) = self.routes_agree();
        json!({
            "input": rats(&self.input),
            "depth": self.depth,
            "regular_through": self.regular_through,
            "hankel": {
                "det": rats(&self.hankel_det),
                "lambda_product": rats(&self.hankel_lambda_product),
                "coefficient_formula": rats(&self.hankel_coefficient_formula),
            },
            "jfraction": {
                "alpha": rats(&self.alpha),
                "lambda": rats(&self.lambda),
            },
            "d": rats(&self.d),
            "coeff_rows": self.coeff_rows.iter().map(|r| rats(r)).collect::<Value>(),
            "agreement": {
                "lambda_product": lambda_ok,
                "coefficient_formula": coeff_ok,
            },
        })
    }

    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "input: {}", join_rats(&self.input))?;
        match self.regular_through {
            Some(n) if n >= self.depth => writeln!(out, "regular through n = {n}")?,
            Some(n) => writeln!(out, "regular only through n = {n}")?,
            None => writeln!(out, "not regular at n = 0")?,
        }
        writeln!(out, "hankel (determinants):        {}", join_rats(&self.hankel_det))?;
        writeln!(out, "hankel (lambda product):      {}", join_rats(&self.hankel_lambda_product))?;
        writeln!(out, "hankel (coefficient formula): {}", join_rats(&self.hankel_coefficient_formula))?;
        writeln!(out, "alpha: {}", join_rats(&self.alpha))?;
        writeln!(out, "lambda: {}", join_rats(&self.lambda))?;
        writeln!(out, "d: {}", join_rats(&self.d))?;
        writeln!(out, "coefficient rows:")?;
        for row in &self.coeff_rows {
            writeln!(out, "  {}", join_rats(row))?;
        }
        let (lambda_ok, coeff_ok) = self.routes_agree();
        writeln!(
            out,
            "agreement: lambda_product={lambda_ok} coefficient_formula={coeff_ok}"
        )
    }
}

/// Run the whole pipeline on a sequence prefix to the requested depth
/// (default: the maximum the terms support).
pub fn analyze(s: &Sequence, depth: Option<usize>) -> crate::error::Result<AnalysisReport> {
    let n = depth.unwrap_or_else(|| s.max_hankel_order());
    if s.len() < 2 * n + 1 {
        return Err(Error::InsufficientTerms {
            needed: 2 * n + 1,
            have: s.len(),
        });
    }
    let regularity = hankel::is_regular(s);
    let hankel_det = regularity.determinants[..=n].to_vec();
    let j = jfraction::extract_jfraction(s)?;
    let ldl = ldl_decompose(s, n)?;
    let a = orthopoly::polys_from_ldl(s, n)?;
    Ok(AnalysisReport {
        input: s.terms().to_vec(),
        depth: n,
        hankel_lambda_product: jfraction::hankel_from_lambdas(&j, n)?,
        hankel_coefficient_formula: orthopoly::hankel_via_coefficients(s, &a, n)?,
        hankel_det,
        alpha: j.alpha().to_vec(),
        lambda: j.lambda().to_vec(),
        d: ldl.d().to_vec(),
        coeff_rows: a.rows().to_vec(),
        regular_through: regularity.regular_through(),
    })
}
