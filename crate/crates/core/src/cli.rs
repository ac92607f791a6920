//! Command-line front end: argument parsing, rendering, and JSON formats.
//!
//! Exit codes are 0 on success, 1 when a verification check fails, and 2 for
//! usage or domain errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{BiPoly, Rat, UniPoly};
use crate::doublesum::sylvester_double_sum;
use crate::linalg::RootList;
use crate::subres::{cofactors, sres};
use crate::sylvmatrix::{ud_coeff_of, ud_det, UdContext};
use crate::verify::{verify_random, Suite, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    /// `--help` or `--version` output; not a failure.
    #[error("{0}")]
    Help(String),
    #[error("{0}")]
    Usage(String),
    #[error("missing required flag --{0}")]
    MissingFlag(&'static str),
    #[error("malformed rational {literal:?} in --{flag}")]
    MalformedRational { flag: &'static str, literal: String },
    #[error("--{flag} describes a non-monic polynomial (leading coefficient {lead})")]
    NotMonic { flag: &'static str, lead: String },
    #[error("duplicate root {root} in --{flag}")]
    DuplicateRoot { flag: &'static str, root: String },
    #[error("give exactly one of --{roots} (roots) or --{coeffs} (coefficients)")]
    ConflictingInput { roots: &'static str, coeffs: &'static str },
    #[error(transparent)]
    Compute(#[from] crate::error::Error),
}

#[derive(Parser, Debug)]
#[command(name = "sylvsum", version, about = "Exact Sylvester double sums and subresultants")]
struct Args {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(clap::Args, Debug)]
struct Flags {
    /// Roots of f, comma separated rationals
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Roots of g, comma separated rationals
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Ascending coefficients of monic f
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    /// Ascending coefficients of monic g
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Print only u_{d,p}, the coefficient of T^(m-p)
    #[arg(long)]
    coeff: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Sylv^{p,q}(A, B; x) by direct summation
    Sylv(Flags),
    /// The k-th subresultant of f and g
    Sres(Flags),
    /// The cofactors F_k, G_k with Sres_k = F_k f + G_k g
    Cof(Flags),
    /// u_d(x, T) = det U_d(x, T), or one coefficient of it
    Ud(Flags),
    /// Randomized exact verification
    Verify(Flags),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SuiteArg {
    Main,
    Matrix,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Main => Suite::Main,
            SuiteArg::Matrix => Suite::Matrix,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Sylv { a: RootList, b: RootList, p: usize, q: usize },
    Sres { f: UniPoly, g: UniPoly, k: usize },
    Cof { f: UniPoly, g: UniPoly, k: usize },
    Ud { a: RootList, b: RootList, d: usize, coeff: Option<usize> },
    Verify { m: usize, n: usize, trials: u64, seed: u64, suite: Suite },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub command: Command,
    pub output: OutputMode,
}

fn parse_rats(flag: &'static str, s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',')
        .map(|lit| {
            lit.trim().parse::<Rat>().map_err(|_| CliError::MalformedRational {
                flag,
                literal: lit.trim().to_string(),
            })
        })
        .collect()
}

fn parse_roots(flag: &'static str, s: &str) -> Result<RootList, CliError> {
    RootList::new(parse_rats(flag, s)?).map_err(|err| match err {
        crate::Error::DuplicateRoot(root) => CliError::DuplicateRoot { flag, root },
        other => CliError::Compute(other),
    })
}

fn parse_monic(flag: &'static str, s: &str) -> Result<UniPoly, CliError> {
    let poly = UniPoly::from_coeffs(parse_rats(flag, s)?);
    if !poly.is_monic() {
        return Err(CliError::NotMonic {
            flag,
            lead: poly.leading_coeff().to_string(),
        });
    }
    Ok(poly)
}

fn required<T>(value: Option<T>, flag: &'static str) -> Result<T, CliError> {
    value.ok_or(CliError::MissingFlag(flag))
}

fn roots_flag(value: &Option<String>, flag: &'static str) -> Result<RootList, CliError> {
    parse_roots(flag, required(value.as_deref(), flag)?)
}

/// A polynomial given either by its roots or by ascending monic coefficients.
fn poly_flag(
    roots: &Option<String>,
    coeffs: &Option<String>,
    roots_name: &'static str,
    coeffs_name: &'static str,
) -> Result<UniPoly, CliError> {
    match (roots, coeffs) {
        (Some(r), None) => Ok(parse_roots(roots_name, r)?.poly()),
        (None, Some(c)) => parse_monic(coeffs_name, c),
        (None, None) => Err(CliError::MissingFlag(roots_name)),
        (Some(_), Some(_)) => Err(CliError::ConflictingInput {
            roots: roots_name,
            coeffs: coeffs_name,
        }),
    }
}

type CommandBuilder = fn(&Flags) -> Result<Command, CliError>;

/// Parses and validates a full argument vector, including the program name.
pub fn parse_args<I, S>(argv: I) -> Result<CliConfig, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(|e| {
        use clap::error::ErrorKind;
        let text = e.render().to_string();
        match e.kind() {
            ErrorKind::DisplayHelp
            | ErrorKind::DisplayVersion
            | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => CliError::Help(text),
            _ => CliError::Usage(text.trim_start_matches("error: ").trim_end().to_string()),
        }
    })?;
    let (flags, build): (Flags, CommandBuilder) = match args.command {
        Cmd::Sylv(fl) => (fl, |fl| {
            Ok(Command::Sylv {
                a: roots_flag(&fl.a, "a")?,
                b: roots_flag(&fl.b, "b")?,
                p: required(fl.p, "p")?,
                q: required(fl.q, "q")?,
            })
        }),
        Cmd::Sres(fl) => (fl, |fl| {
            Ok(Command::Sres {
                f: poly_flag(&fl.a, &fl.f, "a", "f")?,
                g: poly_flag(&fl.b, &fl.g, "b", "g")?,
                k: required(fl.k, "k")?,
            })
        }),
        Cmd::Cof(fl) => (fl, |fl| {
            Ok(Command::Cof {
                f: poly_flag(&fl.a, &fl.f, "a", "f")?,
                g: poly_flag(&fl.b, &fl.g, "b", "g")?,
                k: required(fl.k, "k")?,
            })
        }),
        Cmd::Ud(fl) => (fl, |fl| {
            Ok(Command::Ud {
                a: roots_flag(&fl.a, "a")?,
                b: roots_flag(&fl.b, "b")?,
                d: required(fl.d, "d")?,
                coeff: fl.coeff,
            })
        }),
        Cmd::Verify(fl) => (fl, |fl| {
            Ok(Command::Verify {
                m: required(fl.m, "m")?,
                n: required(fl.n, "n")?,
                trials: fl.trials,
                seed: fl.seed,
                suite: fl.suite.into(),
            })
        }),
    };
    Ok(CliConfig {
        command: build(&flags)?,
        output: if flags.json { OutputMode::Json } else { OutputMode::Text },
    })
}

/// JSON form of a `UniPoly`: ascending coefficients as rational strings.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct UniPolyJson {
    pub var: String,
    pub coeffs: Vec<String>,
}

/// JSON form of a `BiPoly`: one `UniPolyJson` per power of `T`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BiPolyJson {
    pub vars: Vec<String>,
    pub t_coeffs: Vec<UniPolyJson>,
}

impl From<&UniPoly> for UniPolyJson {
    fn from(p: &UniPoly) -> Self {
        UniPolyJson {
            var: "x".to_string(),
            coeffs: p.coeffs().iter().map(ToString::to_string).collect(),
        }
    }
}

impl From<&BiPoly> for BiPolyJson {
    fn from(p: &BiPoly) -> Self {
        BiPolyJson {
            vars: vec!["x".to_string(), "T".to_string()],
            t_coeffs: p.t_coeffs().iter().map(UniPolyJson::from).collect(),
        }
    }
}

impl UniPolyJson {
    pub fn to_poly(&self) -> crate::Result<UniPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.parse())
            .collect::<crate::Result<Vec<Rat>>>()?;
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

impl BiPolyJson {
    pub fn to_poly(&self) -> crate::Result<BiPoly> {
        let t_coeffs = self
            .t_coeffs
            .iter()
            .map(UniPolyJson::to_poly)
            .collect::<crate::Result<Vec<_>>>()?;
        Ok(BiPoly::from_t_coeffs(t_coeffs))
    }
}

pub fn unipoly_to_json(p: &UniPoly) -> String {
    serde_json::to_string(&UniPolyJson::from(p)).expect("serializable")
}

pub fn bipoly_to_json(p: &BiPoly) -> String {
    serde_json::to_string(&BiPolyJson::from(p)).expect("serializable")
}

pub fn unipoly_from_json(s: &str) -> crate::Result<UniPoly> {
    let parsed: UniPolyJson =
        serde_json::from_str(s).map_err(|e| crate::Error::CorruptedInput(e.to_string()))?;
    parsed.to_poly()
}

pub fn bipoly_from_json(s: &str) -> crate::Result<BiPoly> {
    let parsed: BiPolyJson =
        serde_json::from_str(s).map_err(|e| crate::Error::CorruptedInput(e.to_string()))?;
    parsed.to_poly()
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    case: &'a str,
    pass: bool,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    m: usize,
    n: usize,
    seed: u64,
    checks: Vec<CheckJson<'a>>,
    pass: bool,
}

pub fn report_to_json(report: &VerificationReport) -> String {
    let json = ReportJson {
        m: report.m,
        n: report.n,
        seed: report.seed.unwrap_or_default(),
        checks: report
            .checks
            .iter()
            .map(|c| CheckJson {
                name: &c.name,
                case: &c.case,
                pass: c.pass,
            })
            .collect(),
        pass: report.pass(),
    };
    serde_json::to_string(&json).expect("serializable")
}

fn report_to_text(report: &VerificationReport) -> String {
    let passed = report.checks.iter().filter(|c| c.pass).count();
    let mut out = format!(
        "seed {}: m={} n={} A={:?} B={:?}: {}/{} checks passed{}\n",
        report.seed.unwrap_or_default(),
        report.m,
        report.n,
        report.a,
        report.b,
        passed,
        report.checks.len(),
        if report.pass() { "" } else { " FAIL" }
    );
    for c in report.failures() {
        out.push_str(&format!("  FAIL {} ({})\n", c.name, c.case));
        if let Some(w) = &c.witness {
            out.push_str(&format!("    expected: {}\n    actual:   {}\n", w.expected, w.actual));
        }
    }
    out
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutput {
    fn error(err: impl std::fmt::Display) -> Self {
        RunOutput {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

fn swap_notice(what: &str) -> String {
    format!("note: swapped inputs so that {what}\n")
}

fn execute(config: &CliConfig) -> Result<RunOutput, CliError> {
    let json = config.output == OutputMode::Json;
    let mut stderr = String::new();
    let stdout = match &config.command {
        Command::Sylv { a, b, p, q } => {
            let value = sylvester_double_sum(a, b, *p, *q)?;
            if json { unipoly_to_json(&value) } else { value.to_string() }
        }
        Command::Sres { f, g, k } | Command::Cof { f, g, k } => {
            let (f, g) = if f.degree() > g.degree() {
                stderr.push_str(&swap_notice("deg f <= deg g"));
                (g, f)
            } else {
                (f, g)
            };
            if matches!(config.command, Command::Sres { .. }) {
                let value = sres(f, g, *k)?;
                if json { unipoly_to_json(&value) } else { value.to_string() }
            } else {
                let cof = cofactors(f, g, *k)?;
                if json {
                    format!(
                        "{{\"F\":{},\"G\":{}}}",
                        unipoly_to_json(&cof.f_cof),
                        unipoly_to_json(&cof.g_cof)
                    )
                } else {
                    format!("F = {}\nG = {}", cof.f_cof, cof.g_cof)
                }
            }
        }
        Command::Ud { a, b, d, coeff } => {
            let (a, b) = if a.len() > b.len() {
                stderr.push_str(&swap_notice("|A| <= |B|"));
                (b, a)
            } else {
                (a, b)
            };
            let ctx = UdContext::new(a.clone(), b.clone(), *d)?;
            let ud = ud_det(&ctx)?;
            match coeff {
                Some(p) => {
                    let value = ud_coeff_of(&ud, &ctx, *p)?;
                    if json { unipoly_to_json(&value) } else { value.to_string() }
                }
                None => {
                    if json { bipoly_to_json(&ud) } else { ud.to_string() }
                }
            }
        }
        Command::Verify { m, n, trials, seed, suite } => {
            let (m, n) = if m > n {
                stderr.push_str(&swap_notice("m <= n"));
                (*n, *m)
            } else {
                (*m, *n)
            };
            let mut lines = Vec::new();
            let mut all_pass = true;
            for t in 0..*trials {
                let report = verify_random(m, n, seed.wrapping_add(t), *suite)?;
                all_pass &= report.pass();
                lines.push(if json {
                    report_to_json(&report)
                } else {
                    report_to_text(&report).trim_end().to_string()
                });
            }
            if !json {
                lines.push(format!(
                    "{}: {} trial(s), m={m} n={n}",
                    if all_pass { "PASS" } else { "FAIL" },
                    trials
                ));
            }
            let mut stdout = lines.join("\n");
            stdout.push('\n');
            return Ok(RunOutput {
                exit_code: if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED },
                stdout,
                stderr,
            });
        }
    };
    Ok(RunOutput {
        exit_code: EXIT_OK,
        stdout: format!("{stdout}\n"),
        stderr,
    })
}

/// Runs a validated configuration and captures its output.
pub fn run(config: &CliConfig) -> RunOutput {
    execute(config).unwrap_or_else(RunOutput::error)
}

/// Parses and runs; the entry point used by the binary.
pub fn main_with_args<I, S>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(config) => run(&config),
        Err(CliError::Help(text)) => RunOutput {
            exit_code: EXIT_OK,
            stdout: text,
            stderr: String::new(),
        },
        Err(err) => RunOutput::error(err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> Result<CliConfig, CliError> {
        parse_args(std::iter::once("sylvsum").chain(args.iter().copied()))
    }

    fn out(args: &[&str]) -> RunOutput {
        main_with_args(std::iter::once("sylvsum").chain(args.iter().copied()))
    }

    #[test]
    fn parses_root_lists() {
        let c = cfg(&["sylv", "--a", "1,2", "--b", "3,4", "--p", "1", "--q", "1"]).unwrap();
        assert_eq!(
            c.command,
            Command::Sylv {
                a: RootList::from_ints(&[1, 2]).unwrap(),
                b: RootList::from_ints(&[3, 4]).unwrap(),
                p: 1,
                q: 1
            }
        );
        assert_eq!(c.output, OutputMode::Text);
    }

    #[test]
    fn parses_coefficients_and_negative_values() {
        let c = cfg(&["sres", "--f", "2,-3,1", "--b", "-1/2,3", "--k", "0", "--json"]).unwrap();
        match c.command {
            Command::Sres { f, k, .. } => {
                assert_eq!(f, UniPoly::from_ints(&[2, -3, 1]));
                assert_eq!(k, 0);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(c.output, OutputMode::Json);
    }

    #[test]
    fn input_errors_are_distinct() {
        assert!(matches!(
            cfg(&["sres", "--f", "2,-3,2", "--g", "0,1", "--k", "0"]),
            Err(CliError::NotMonic { flag: "f", .. })
        ));
        assert!(matches!(
            cfg(&["sylv", "--a", "1,1", "--b", "3", "--p", "0", "--q", "0"]),
            Err(CliError::DuplicateRoot { flag: "a", .. })
        ));
        assert!(matches!(
            cfg(&["sylv", "--a", "1,x", "--b", "3", "--p", "0", "--q", "0"]),
            Err(CliError::MalformedRational { flag: "a", .. })
        ));
        assert!(matches!(
            cfg(&["sylv", "--a", "1", "--b", "3", "--p", "0"]),
            Err(CliError::MissingFlag("q"))
        ));
        assert!(matches!(
            cfg(&["sres", "--a", "1", "--f", "0,1", "--b", "3", "--k", "0"]),
            Err(CliError::ConflictingInput { .. })
        ));
        assert!(matches!(cfg(&["frobnicate"]), Err(CliError::Usage(_))));
    }

    #[test]
    fn sylv_text_output() {
        let o = out(&["sylv", "--a", "1,2", "--b", "3,4", "--p", "1", "--q", "1"]);
        assert_eq!(o.exit_code, 0);
        assert_eq!(o.stdout, "2*x^2 - 10*x + 14\n");
    }

    #[test]
    fn ud_json_output() {
        let o = out(&["ud", "--a", "2", "--b", "3", "--d", "1", "--json"]);
        assert_eq!(o.exit_code, 0);
        assert_eq!(
            o.stdout,
            "{\"vars\":[\"x\",\"T\"],\"t_coeffs\":[{\"var\":\"x\",\"coeffs\":[\"-2\",\"1\"]},{\"var\":\"x\",\"coeffs\":[\"3\",\"-1\"]}]}\n"
        );
        let o = out(&["ud", "--a", "2", "--b", "3", "--d", "1", "--coeff", "0"]);
        assert_eq!(o.stdout, "-x + 3\n");
    }

    #[test]
    fn cof_output() {
        let o = out(&["cof", "--a", "1,2", "--b", "3,4", "--k", "1"]);
        assert_eq!(o.stdout, "F = -1\nG = 1\n");
        let o = out(&["cof", "--a", "1,2", "--b", "3,4", "--k", "1", "--json"]);
        assert_eq!(
            o.stdout,
            "{\"F\":{\"var\":\"x\",\"coeffs\":[\"-1\"]},\"G\":{\"var\":\"x\",\"coeffs\":[\"1\"]}}\n"
        );
    }

    #[test]
    fn swaps_with_notice() {
        let o = out(&["sres", "--a", "1,2,3", "--b", "4", "--k", "1"]);
        assert_eq!(o.exit_code, 0);
        assert!(o.stderr.starts_with("note: swapped"));
        assert_eq!(o.stdout, "x - 4\n");
    }

    #[test]
    fn domain_errors_exit_2() {
        let o = out(&["sres", "--a", "1,2", "--b", "3,4", "--k", "2"]);
        assert_eq!(o.exit_code, EXIT_USAGE);
        assert!(o.stderr.contains("out of range"));
        let o = out(&["sylv", "--a", "1", "--b", "3", "--p", "2", "--q", "0"]);
        assert_eq!(o.exit_code, EXIT_USAGE);
        let o = out(&["sylv", "--a", "1,1", "--b", "3", "--p", "0", "--q", "0"]);
        assert_eq!(o.exit_code, EXIT_USAGE);
        assert!(o.stderr.contains("duplicate root"));
    }

    #[test]
    fn verify_json_shape() {
        let o = out(&["verify", "--m", "1", "--n", "2", "--seed", "3", "--json"]);
        assert_eq!(o.exit_code, 0, "{}", o.stdout);
        let v: serde_json::Value = serde_json::from_str(o.stdout.trim()).unwrap();
        assert!(o.stdout.starts_with("{\"m\":1,\"n\":2,\"seed\":3,\"checks\":["));
        assert!(o.stdout.trim_end().ends_with(",\"pass\":true}"));
        assert_eq!(v["seed"], 3);
        assert_eq!(v["pass"], true);
        let check = &v["checks"][0];
        assert_eq!(check.as_object().unwrap().len(), 3);
    }

    #[test]
    fn json_round_trip() {
        let p = UniPoly::from_coeffs(vec![Rat::new(-3, 4).unwrap(), Rat::from(0), Rat::from(5)]);
        assert_eq!(unipoly_from_json(&unipoly_to_json(&p)).unwrap(), p);
        let b = BiPoly::from_t_coeffs(vec![UniPoly::zero(), p.clone(), UniPoly::x()]);
        assert_eq!(bipoly_from_json(&bipoly_to_json(&b)).unwrap(), b);
        assert_eq!(unipoly_to_json(&UniPoly::zero()), "{\"var\":\"x\",\"coeffs\":[]}");
    }
}
