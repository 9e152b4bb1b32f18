//! The `radix` command line.
//!
//! Every numeric line on stdout has the form `name = value`. Exit codes:
//! 0 success, 1 verification failure, 2 argument or syntax error,
//! 3 numeric-domain error (negative radicand), 4 I/O error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;

use crate::algebra::{
    functional_identity_check, infer_degree, solve_linear_ansatz, AnsatzCandidate,
};
use crate::expr::{eval_expr, parse, print_latex, print_text, EvalError};
use crate::numeric::{
    format_rational, parse_decimal, parse_rational, BigRat, Interval, RationalParseError, Rounding,
};
use crate::radical::{
    default_bound_exponent, depth_sweep, enclose_with_bound, refine_bracket_from, truncated_eval,
    Entry4Spec, GeneralSpec, LayerSource, RadicalError, Rigor, TailPolicy,
};
use crate::report::{format_decimal, rows_from_results, to_csv, to_svg, DEFAULT_DIGITS};

pub const PRECISION_ENV: &str = "RADIX_PRECISION";
pub const DEFAULT_PRECISION: u32 = 128;
pub const MIN_PRECISION: u32 = 16;
pub const DEFAULT_DEPTH: u64 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    VerificationFailed = 1,
    Usage = 2,
    Domain = 3,
    Io = 4,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
    Io(String),
    Verification,
}

impl CliError {
    fn status(&self) -> ExitStatus {
        match self {
            Self::Usage(_) => ExitStatus::Usage,
            Self::Domain(_) => ExitStatus::Domain,
            Self::Io(_) => ExitStatus::Io,
            Self::Verification => ExitStatus::VerificationFailed,
        }
    }
}

impl From<RadicalError> for CliError {
    fn from(err: RadicalError) -> Self {
        match err {
            RadicalError::NegativeRadicand { .. } | RadicalError::Numeric(_) => {
                Self::Domain(err.to_string())
            }
            _ => Self::Usage(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        Self::Io(err.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "radix",
    version,
    about = "Generalized nested radicals with certified enclosures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enclose the order-n radical whose value is x + 1.
    Eval(EvalArgs),
    /// Check the functional identity, degree inference and linear ansatz.
    Verify(VerifyArgs),
    /// Tabulate truncations by depth as CSV and SVG.
    Sweep(SweepArgs),
    /// Evaluate the square-root family with parameters x, n' and a.
    Entry4(Entry4Args),
    /// Parse a radical expression and print it as text or LaTeX.
    Parse(ParseArgs),
    /// Solve the linear ansatz f(x) = a x + b (the ansatz part of verify).
    Ansatz(AnsatzArgs),
    /// Print the bracket exponent refinement table.
    Bracket(BracketArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TailArg {
    Zero,
    Fixed,
    Scaled,
    Enclose,
}

#[derive(Args, Debug)]
struct NumericArgs {
    /// Working precision in bits (default 128, or $RADIX_PRECISION).
    #[arg(long)]
    precision: Option<u32>,
    /// Significant decimal digits in printed endpoints.
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    digits: u32,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long, default_value_t = 3)]
    order: u32,
    /// Start value x >= 1, as an integer or p/q.
    #[arg(long, default_value = "1")]
    start: String,
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    depth: u64,
    #[arg(long, value_enum, default_value_t = TailArg::Enclose)]
    tail: TailArg,
    /// Exponent q of the upper tail 2^q (y + 1) used by `scaled` and `enclose`.
    #[arg(long, default_value = "3/2")]
    bound_exponent: String,
    #[command(flatten)]
    numeric: NumericArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 64)]
    max_order: u32,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, default_value_t = 3)]
    order: u32,
    #[arg(long, default_value = "1")]
    start: String,
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    max_depth: u64,
    #[arg(long, value_enum, default_value_t = TailArg::Zero)]
    tail: TailArg,
    #[arg(long, default_value = "3/2")]
    bound_exponent: String,
    /// CSV destination, `-` for stdout.
    #[arg(long)]
    csv: Option<String>,
    /// SVG destination.
    #[arg(long)]
    svg: Option<PathBuf>,
    #[command(flatten)]
    numeric: NumericArgs,
}

#[derive(Args, Debug)]
struct Entry4Args {
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    nprime: String,
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    depth: u64,
    #[arg(long, value_enum, default_value_t = TailArg::Fixed)]
    tail: TailArg,
    #[command(flatten)]
    numeric: NumericArgs,
}

#[derive(Args, Debug)]
struct ParseArgs {
    /// Expression text; read from --file when omitted.
    input: Option<String>,
    #[arg(long, conflicts_with = "input")]
    file: Option<PathBuf>,
    /// Print LaTeX instead of canonical text.
    #[arg(long)]
    latex: bool,
    /// Also evaluate the expression.
    #[arg(long)]
    eval: bool,
    /// Value substituted for `...` when evaluating.
    #[arg(long)]
    tail_value: Option<String>,
    #[command(flatten)]
    numeric: NumericArgs,
}

#[derive(Args, Debug)]
struct AnsatzArgs {
    #[arg(long, default_value_t = 3)]
    order: u32,
}

#[derive(Args, Debug)]
struct BracketArgs {
    #[arg(long, default_value_t = 3)]
    order: u32,
    /// Number of refinement passes to tabulate after the initial bracket.
    #[arg(long, default_value_t = 10)]
    iterations: u32,
    #[arg(long, default_value = "3/2")]
    initial: String,
    /// Optional start value x; prints the bracket around f(x).
    #[arg(long)]
    start: Option<String>,
    #[command(flatten)]
    numeric: NumericArgs,
}

/// Runs the CLI, reading the precision override from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(PRECISION_ENV).ok();
    run_with_env(args, env.as_deref(), out, err)
}

/// [`run`] with the `RADIX_PRECISION` value passed explicitly.
pub fn run_with_env<I, T>(
    args: I,
    precision_env: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                let _ = write!(err, "{e}");
                ExitStatus::Usage
            } else {
                let _ = write!(out, "{e}");
                ExitStatus::Success
            };
            return status.code();
        }
    };
    let ctx = Context { precision_env };
    let result = match &cli.command {
        Command::Eval(args) => ctx.eval(args, out),
        Command::Verify(args) => ctx.verify(args, out),
        Command::Sweep(args) => ctx.sweep(args, out),
        Command::Entry4(args) => ctx.entry4(args, out),
        Command::Parse(args) => ctx.parse(args, out, err),
        Command::Ansatz(args) => ctx.ansatz(args, out),
        Command::Bracket(args) => ctx.bracket(args, out),
    };
    match result {
        Ok(()) => ExitStatus::Success.code(),
        Err(e) => {
            match &e {
                CliError::Usage(msg) | CliError::Domain(msg) | CliError::Io(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                }
                CliError::Verification => {
                    let _ = writeln!(err, "error: verification failed");
                }
            }
            e.status().code()
        }
    }
}

struct Context<'a> {
    precision_env: Option<&'a str>,
}

fn rational_flag(flag: &str, text: &str) -> Result<BigRat, CliError> {
    parse_rational(text).map_err(|e| CliError::Usage(format!("invalid --{flag}: {e}")))
}

/// Start values must be exact rationals with x >= 1. Decimal input is
/// refused, but read exactly so an out-of-domain value gets the domain message.
fn start_flag(text: &str) -> Result<BigRat, CliError> {
    let domain = |value: &BigRat| {
        CliError::Usage(format!(
            "invalid --start: {} is outside the domain x >= 1",
            format_rational(value)
        ))
    };
    match parse_rational(text) {
        Ok(value) if value < BigRat::one() => Err(domain(&value)),
        Ok(value) => Ok(value),
        Err(RationalParseError::Decimal(literal)) => match parse_decimal(&literal) {
            Some(value) if value < BigRat::one() => Err(domain(&value)),
            _ => Err(CliError::Usage(format!(
                "invalid --start: '{literal}' is a decimal literal; write it as p/q (x >= 1)"
            ))),
        },
        Err(e) => Err(CliError::Usage(format!("invalid --start: {e}"))),
    }
}

fn depth_flag(flag: &str, depth: u64) -> Result<u64, CliError> {
    if depth < 1 {
        Err(CliError::Usage(format!("--{flag} must be at least 1")))
    } else {
        Ok(depth)
    }
}

fn order_flag(order: u32) -> Result<u32, CliError> {
    if order < 2 {
        Err(CliError::Usage(format!(
            "--order must be at least 2, got {order}"
        )))
    } else {
        Ok(order)
    }
}

fn policy(tail: TailArg, bound_exponent: &BigRat) -> Option<TailPolicy> {
    match tail {
        TailArg::Zero => Some(TailPolicy::Zero),
        TailArg::Fixed => Some(TailPolicy::ExactFixedPoint),
        TailArg::Scaled => Some(TailPolicy::ScaledBound(bound_exponent.clone())),
        TailArg::Enclose => None,
    }
}

fn write_interval(out: &mut dyn Write, value: &Interval, digits: u32) -> std::io::Result<()> {
    let lo = value.lo().to_rational();
    let hi = value.hi().to_rational();
    writeln!(
        out,
        "lower = {}",
        format_decimal(&lo, digits, Rounding::Floor)
    )?;
    writeln!(
        out,
        "upper = {}",
        format_decimal(&hi, digits, Rounding::Ceil)
    )?;
    writeln!(
        out,
        "width = {}",
        format_decimal(&(hi - lo), digits, Rounding::Ceil)
    )
}

fn conditional_note(order: u32, exponent: &BigRat) -> String {
    format!(
        "conditional enclosure: assumes f(y) <= 2^({}) * (y + 1) for order {order}",
        format_rational(exponent)
    )
}

impl Context<'_> {
    fn precision(&self, numeric: &NumericArgs) -> Result<u32, CliError> {
        let precision = match (numeric.precision, self.precision_env) {
            (Some(p), _) => p,
            (None, Some(env)) => env.trim().parse().map_err(|_| {
                CliError::Usage(format!("{PRECISION_ENV}='{env}' is not a bit count"))
            })?,
            (None, None) => DEFAULT_PRECISION,
        };
        if precision < MIN_PRECISION {
            return Err(CliError::Usage(format!(
                "precision must be at least {MIN_PRECISION} bits, got {precision}"
            )));
        }
        Ok(precision)
    }

    fn eval(&self, args: &EvalArgs, out: &mut dyn Write) -> Result<(), CliError> {
        let order = order_flag(args.order)?;
        let start = start_flag(&args.start)?;
        let depth = depth_flag("depth", args.depth)?;
        let bound = rational_flag("bound-exponent", &args.bound_exponent)?;
        let precision = self.precision(&args.numeric)?;
        let spec = GeneralSpec::new(order, start.clone())?;

        writeln!(out, "family = general")?;
        writeln!(out, "order = {order}")?;
        writeln!(out, "start = {}", format_rational(&start))?;
        writeln!(out, "depth = {depth}")?;
        writeln!(out, "precision = {precision}")?;

        let (value, note) = match policy(args.tail, &bound) {
            Some(tail) => {
                writeln!(out, "tail = {tail}")?;
                let result = truncated_eval(&spec, depth, &tail, precision)?;
                let note = match &tail {
                    TailPolicy::ScaledBound(q) if order != 3 || *q < default_bound_exponent() => {
                        Some(conditional_note(order, q))
                    }
                    _ => None,
                };
                (result.value, note)
            }
            None => {
                writeln!(out, "tail = enclose")?;
                writeln!(out, "bound_exponent = {}", format_rational(&bound))?;
                let enclosure = enclose_with_bound(&spec, depth, precision, &bound)?;
                let note = match &enclosure.rigor {
                    Rigor::Proven => {
                        writeln!(out, "enclosure = rigorous")?;
                        None
                    }
                    Rigor::Conditional { assumed_exponent } => {
                        writeln!(out, "enclosure = conditional")?;
                        Some(conditional_note(order, assumed_exponent))
                    }
                };
                (enclosure.interval, note)
            }
        };
        if let Some(note) = note {
            writeln!(out, "note = {note}")?;
        }
        write_interval(out, &value, args.numeric.digits)?;
        let limit = spec.limit();
        writeln!(out, "limit = {}", format_rational(&limit))?;
        writeln!(out, "contains_limit = {}", value.contains(&limit))?;
        Ok(())
    }

    fn verify(&self, args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
        if args.max_order < 2 {
            return Err(CliError::Usage(format!(
                "--max-order must be at least 2, got {}",
                args.max_order
            )));
        }
        let mut failures = 0usize;
        let mut checks = 0usize;
        for order in 2..=args.max_order {
            let ok = functional_identity_check(order).unwrap_or(false);
            checks += 1;
            failures += usize::from(!ok);
            writeln!(out, "identity[n={order}] = {}", verdict(ok))?;
        }
        for order in 2..=args.max_order {
            let degree = infer_degree(order);
            let ok = degree == Ok(1);
            checks += 1;
            failures += usize::from(!ok);
            match degree {
                Ok(d) => writeln!(out, "degree[order={order}] = {} d={d}", verdict(ok))?,
                Err(e) => writeln!(out, "degree[order={order}] = FAIL {e}")?,
            }
        }
        let ansatz_ok = self.write_ansatz(3, out)?;
        checks += 1;
        failures += usize::from(!ansatz_ok);
        writeln!(
            out,
            "summary = {} ({} checks, {} failed)",
            verdict(failures == 0),
            checks,
            failures
        )?;
        if failures == 0 {
            Ok(())
        } else {
            Err(CliError::Verification)
        }
    }

    /// Prints one line per ansatz candidate; returns whether exactly one
    /// candidate satisfies every relation.
    fn write_ansatz(&self, order: u32, out: &mut dyn Write) -> Result<bool, CliError> {
        let candidates = solve_linear_ansatz(order).map_err(|e| CliError::Usage(e.to_string()))?;
        for candidate in &candidates {
            writeln!(out, "{}", ansatz_line(candidate))?;
        }
        let solutions: Vec<&AnsatzCandidate> =
            candidates.iter().filter(|c| c.is_solution()).collect();
        let unique = solutions.len() == 1;
        match solutions.as_slice() {
            [only] => writeln!(
                out,
                "ansatz_solution = ({}, {})",
                format_rational(&only.a),
                format_rational(&only.b)
            )?,
            _ => writeln!(
                out,
                "ansatz_solution = none unique ({} found)",
                solutions.len()
            )?,
        }
        writeln!(out, "ansatz_unique = {}", verdict(unique))?;
        Ok(unique)
    }

    fn ansatz(&self, args: &AnsatzArgs, out: &mut dyn Write) -> Result<(), CliError> {
        let order = order_flag(args.order)?;
        let unique = self.write_ansatz(order, out)?;
        if unique {
            Ok(())
        } else {
            Err(CliError::Verification)
        }
    }

    fn sweep(&self, args: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
        let order = order_flag(args.order)?;
        let start = start_flag(&args.start)?;
        let max_depth = depth_flag("max-depth", args.max_depth)?;
        let bound = rational_flag("bound-exponent", &args.bound_exponent)?;
        let precision = self.precision(&args.numeric)?;
        let tail = policy(args.tail, &bound).ok_or_else(|| {
            CliError::Usage("sweep takes --tail zero, fixed or scaled".to_string())
        })?;
        let spec = GeneralSpec::new(order, start)?;

        let results = depth_sweep(&spec, max_depth, &tail, precision)?;
        let rows = rows_from_results(&results, args.numeric.digits);
        let csv = to_csv(&rows);
        match args.csv.as_deref() {
            Some("-") => out.write_all(csv.as_bytes())?,
            Some(path) => {
                fs::write(path, &csv).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
                writeln!(out, "csv = {path}")?;
            }
            None if args.svg.is_none() => out.write_all(csv.as_bytes())?,
            None => {}
        }
        if let Some(path) = &args.svg {
            let svg = to_svg(&rows, &spec.limit()).map_err(|e| CliError::Usage(e.to_string()))?;
            fs::write(path, svg).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            writeln!(out, "svg = {}", path.display())?;
        }
        Ok(())
    }

    fn entry4(&self, args: &Entry4Args, out: &mut dyn Write) -> Result<(), CliError> {
        let x = rational_flag("x", &args.x)?;
        let nprime = rational_flag("nprime", &args.nprime)?;
        let a = rational_flag("a", &args.a)?;
        let depth = depth_flag("depth", args.depth)?;
        let precision = self.precision(&args.numeric)?;
        let tail = match args.tail {
            TailArg::Zero => TailPolicy::Zero,
            TailArg::Fixed => TailPolicy::ExactFixedPoint,
            other => {
                return Err(CliError::Usage(format!(
                    "entry4 takes --tail zero or fixed, not {other:?}"
                )))
            }
        };
        let spec = Entry4Spec::new(x.clone(), nprime.clone(), a.clone());

        writeln!(out, "family = entry4")?;
        writeln!(out, "x = {}", format_rational(&x))?;
        writeln!(out, "nprime = {}", format_rational(&nprime))?;
        writeln!(out, "a = {}", format_rational(&a))?;
        writeln!(out, "depth = {depth}")?;
        writeln!(out, "precision = {precision}")?;
        writeln!(out, "tail = {tail}")?;
        let result = truncated_eval(&spec, depth, &tail, precision)?;
        write_interval(out, &result.value, args.numeric.digits)?;
        let limit = spec.limit();
        writeln!(out, "limit = {}", format_rational(&limit))?;
        writeln!(out, "contains_limit = {}", result.value.contains(&limit))?;
        Ok(())
    }

    fn parse(
        &self,
        args: &ParseArgs,
        out: &mut dyn Write,
        err: &mut dyn Write,
    ) -> Result<(), CliError> {
        let source = match (&args.input, &args.file) {
            (Some(text), _) => text.clone(),
            (None, Some(path)) => fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
            (None, None) => {
                return Err(CliError::Usage(
                    "parse needs an expression or --file".to_string(),
                ))
            }
        };
        let source = source.trim_end();
        let tree = match parse(source) {
            Ok(tree) => tree,
            Err(e) => {
                let _ = write!(err, "{}", e.render(source));
                return Err(CliError::Usage("could not parse expression".to_string()));
            }
        };
        if args.latex {
            writeln!(out, "{}", print_latex(&tree))?;
        } else {
            writeln!(out, "{}", print_text(&tree))?;
        }
        if args.eval {
            let precision = self.precision(&args.numeric)?;
            let tail = args
                .tail_value
                .as_deref()
                .map(|t| rational_flag("tail-value", t))
                .transpose()?;
            let value = eval_expr(&tree, tail.as_ref(), precision).map_err(|e| match e {
                EvalError::UnresolvedTail => {
                    CliError::Usage("expression has `...`; pass --tail-value".to_string())
                }
                EvalError::Numeric(n) => CliError::Domain(n.to_string()),
            })?;
            writeln!(out, "precision = {precision}")?;
            write_interval(out, &value, args.numeric.digits)?;
        }
        Ok(())
    }

    fn bracket(&self, args: &BracketArgs, out: &mut dyn Write) -> Result<(), CliError> {
        let order = order_flag(args.order)?;
        let initial = rational_flag("initial", &args.initial)?;
        let precision = self.precision(&args.numeric)?;
        let start = args.start.as_deref().map(start_flag).transpose()?;
        let rigorous = order == 3 && initial >= default_bound_exponent();

        writeln!(out, "order = {order}")?;
        writeln!(out, "initial_exponent = {}", format_rational(&initial))?;
        writeln!(
            out,
            "bracket = {}",
            if rigorous { "rigorous" } else { "conditional" }
        )?;
        if !rigorous {
            writeln!(out, "note = {}", conditional_note(order, &initial))?;
        }
        let digits = args.numeric.digits;
        for k in 0..=args.iterations {
            let b = refine_bracket_from(order, k, &initial)?;
            let (lo, hi) = b.constants(precision)?;
            writeln!(
                out,
                "bracket[k={k}].lo_exponent = {}",
                format_rational(&b.lo_exponent)
            )?;
            writeln!(
                out,
                "bracket[k={k}].hi_exponent = {}",
                format_rational(&b.hi_exponent)
            )?;
            writeln!(
                out,
                "bracket[k={k}].lo_constant = {}",
                format_decimal(&lo.lo().to_rational(), digits, Rounding::Floor)
            )?;
            writeln!(
                out,
                "bracket[k={k}].hi_constant = {}",
                format_decimal(&hi.hi().to_rational(), digits, Rounding::Ceil)
            )?;
            if let Some(x) = &start {
                let around = b.bracket_at(x, precision)?;
                writeln!(
                    out,
                    "bracket[k={k}].f_lower = {}",
                    format_decimal(&around.lo().to_rational(), digits, Rounding::Floor)
                )?;
                writeln!(
                    out,
                    "bracket[k={k}].f_upper = {}",
                    format_decimal(&around.hi().to_rational(), digits, Rounding::Ceil)
                )?;
            }
        }
        Ok(())
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn ansatz_line(candidate: &AnsatzCandidate) -> String {
    let name = format!(
        "ansatz[a={},b={}]",
        format_rational(&candidate.a),
        format_rational(&candidate.b)
    );
    if candidate.is_solution() {
        format!("{name} = accepted")
    } else {
        let violated: Vec<String> = candidate.violations().map(ToString::to_string).collect();
        format!("{name} = rejected ({})", violated.join("; "))
    }
}
