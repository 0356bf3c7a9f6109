//! `lrpk`: JSON in, JSON out front end to `lrpk-core`.
//!
//! Exit codes: 0 ok, 1 mathematical violation, 2 usage or input error.

use std::ffi::OsString;
use std::io::Read;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use lrpk_core::rsk::{rsk_forward, rsk_inverse};
use lrpk_core::verify::{run_suite, Bounds, Suite, SuiteReport};
use lrpk_core::{
    lr_coefficient, CorrespondenceContext, CrystalPair, Error, Limits, Partition, Picture, SkewShape, SkewTableau,
    TwoRowedArray,
};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

/// Overrides the enumeration cell bound.
pub const MAX_CELLS_ENV: &str = "LRPK_MAX_CELLS";

#[derive(Parser, Debug)]
#[command(name = "lrpk", version, about = "Pictures, Littlewood-Richardson crystals and column RSK")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate every picture κ¹ → κ².
    Pictures {
        #[arg(long)]
        kappa1: String,
        #[arg(long)]
        kappa2: String,
        /// Print only the number of pictures.
        #[arg(long)]
        count_only: bool,
    },
    /// Send a picture to its pair of crystal elements.
    ToPair {
        #[arg(long)]
        picture: String,
    },
    /// Send a pair of crystal elements back to a picture κ¹ → κ².
    ToPicture {
        #[arg(long)]
        kappa1: String,
        #[arg(long)]
        kappa2: String,
        #[arg(long)]
        pair: String,
    },
    /// Littlewood-Richardson coefficient c^ν_{λµ}.
    LrCoeff {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Also count pictures and LR skew tableaux and compare.
        #[arg(long)]
        cross_check: bool,
    },
    /// Column-type RSK of a lexicographic two-rowed array.
    Rsk {
        #[arg(long)]
        array: String,
    },
    /// Inverse RSK of a same-shaped pair (P, Q).
    Unrsk {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// Run an invariant suite (or `all`).
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    outer_cells: Option<usize>,
    #[arg(long)]
    box_rows: Option<usize>,
    #[arg(long)]
    box_cols: Option<usize>,
    #[arg(long)]
    skew_cells: Option<usize>,
    /// Random instances for the bumping suite.
    #[arg(long)]
    instances: Option<usize>,
    /// Report wall-clock time (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violation,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandReport {
    pub status: Status,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// What a run prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Runs one command. `argv[0]` is the program name; `stdin` backs any
/// argument given as `-`.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: error_report(&text), stderr: text }
            };
        }
    };
    let mut input = Input { stdin, used: false };
    let result = limits().and_then(|limits| execute(cli.command, &mut input, &limits));
    match result {
        Ok((code, value)) => Output { code, stdout: render(&value), stderr: String::new() },
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Usage(m) => (2, m),
                Failure::Core(e @ Error::Internal(_)) => (1, e.to_string()),
                Failure::Core(e) => (2, e.to_string()),
            };
            Output { code, stdout: error_report(&message), stderr: format!("lrpk: {message}\n") }
        }
    }
}

fn render(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn error_report(message: &str) -> String {
    render(&CommandReport {
        status: Status::Error,
        payload: json!({ "message": message.trim_end() }),
        elapsed_ms: None,
    })
}

fn limits() -> Result<Limits, Failure> {
    match std::env::var(MAX_CELLS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|n| Limits::default().with_max_cells(n))
            .map_err(|_| Failure::Usage(format!("{MAX_CELLS_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(Limits::default()),
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Input<'_> {
    /// Parses a flag value as JSON; `-` reads it from stdin (once).
    fn parse<T: DeserializeOwned>(&mut self, flag: &str, text: &str) -> Result<T, Failure> {
        let owned;
        let text = if text == "-" {
            if self.used {
                return Err(Failure::Usage("stdin can back only one argument".into()));
            }
            self.used = true;
            let mut buf = String::new();
            self.stdin
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Usage(format!("reading stdin for --{flag}: {e}")))?;
            owned = buf;
            owned.as_str()
        } else {
            text
        };
        serde_json::from_str(text).map_err(|e| Failure::Usage(format!("malformed --{flag}: {e}")))
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("core types serialize")
}

fn execute(command: Command, input: &mut Input, limits: &Limits) -> Result<(i32, Value), Failure> {
    let value = match command {
        Command::Pictures { kappa1, kappa2, count_only } => {
            let k1: SkewShape = input.parse("kappa1", &kappa1)?;
            let k2: SkewShape = input.parse("kappa2", &kappa2)?;
            let ctx = CorrespondenceContext::new(k1, k2)?;
            let pictures = ctx.pictures(limits)?;
            if count_only {
                json!({ "count": pictures.len() })
            } else {
                json!({ "count": pictures.len(), "pictures": to_value(&pictures) })
            }
        }
        Command::ToPair { picture } => {
            let f: Picture = input.parse("picture", &picture)?;
            let ctx = CorrespondenceContext::new(f.domain().clone(), f.codomain().clone())?;
            to_value(ctx.full_s(&f)?)
        }
        Command::ToPicture { kappa1, kappa2, pair } => {
            let k1: SkewShape = input.parse("kappa1", &kappa1)?;
            let k2: SkewShape = input.parse("kappa2", &kappa2)?;
            let pair: CrystalPair = input.parse("pair", &pair)?;
            to_value(CorrespondenceContext::new(k1, k2)?.full_c(&pair)?)
        }
        Command::LrCoeff { lambda, mu, nu, cross_check } => {
            let lambda: Partition = input.parse("lambda", &lambda)?;
            let mu: Partition = input.parse("mu", &mu)?;
            let nu: Partition = input.parse("nu", &nu)?;
            let count = lr_coefficient(&lambda, &mu, &nu, cross_check, limits)?;
            if cross_check {
                json!({ "coefficient": count.coefficient, "routes_agree": true })
            } else {
                json!({ "coefficient": count.coefficient })
            }
        }
        Command::Rsk { array } => {
            let w: TwoRowedArray = input.parse("array", &array)?;
            let (p, q) = rsk_forward(&w)?;
            json!({ "P": to_value(p), "Q": to_value(q) })
        }
        Command::Unrsk { p, q } => {
            let p: SkewTableau = input.parse("p", &p)?;
            let q: SkewTableau = input.parse("q", &q)?;
            to_value(rsk_inverse(&p, &q)?)
        }
        Command::Verify(args) => return verify(args, limits),
    };
    Ok((0, value))
}

fn verify(args: VerifyArgs, limits: &Limits) -> Result<(i32, Value), Failure> {
    let suites = Suite::parse_selection(&args.suite)?;
    let defaults = Bounds::default();
    let bounds = Bounds {
        outer_cells: args.outer_cells.unwrap_or(defaults.outer_cells),
        box_rows: args.box_rows.unwrap_or(defaults.box_rows),
        box_cols: args.box_cols.unwrap_or(defaults.box_cols),
        skew_cells: args.skew_cells.unwrap_or(defaults.skew_cells),
        random_instances: args.instances.unwrap_or(defaults.random_instances),
        ..defaults
    };
    let start = Instant::now();
    let reports = suites
        .into_iter()
        .map(|suite| run_suite(suite, &bounds, args.seed, limits))
        .collect::<Result<Vec<SuiteReport>, Error>>()?;
    let passed = reports.iter().all(SuiteReport::passed);
    let report = CommandReport {
        status: if passed { Status::Ok } else { Status::Violation },
        payload: json!({ "seed": args.seed, "bounds": to_value(bounds), "suites": to_value(&reports) }),
        elapsed_ms: args.timing.then(|| start.elapsed().as_millis() as u64),
    };
    Ok((if passed { 0 } else { 1 }, to_value(report)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Output {
        run(std::iter::once("lrpk").chain(args.iter().copied()), &mut std::io::empty())
    }

    #[test]
    fn reports_serialize_without_timing() {
        let report = CommandReport { status: Status::Violation, payload: json!({}), elapsed_ms: None };
        assert_eq!(serde_json::to_string(&report).unwrap(), r#"{"status":"violation","payload":{}}"#);
        assert_eq!(error_report("bad\n"), "{\"status\":\"error\",\"payload\":{\"message\":\"bad\"}}\n");
    }

    #[test]
    fn help_goes_to_stdout() {
        let out = run_args(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("lr-coeff"));
        assert!(out.stderr.is_empty());
    }

    #[test]
    fn missing_flag_is_a_usage_error() {
        let out = run_args(&["lr-coeff", "--lambda", "[1]"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("--mu"));
    }
}
