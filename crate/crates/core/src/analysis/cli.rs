use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use super::config::{config_args, parse_config};
use super::fit::exponent_fit;
use super::grid::log_grid;
use super::report::{
    delta_table, parse_delta_csv, write_output, Cell, OutputFormat, Report, Table,
};
use super::verify::{run_suite, Suite};
use crate::abscissa::Abscissa;
use crate::arith::{eval_arithmetic, FactorTable, FnSpec};
use crate::error::{Error, Result};
use crate::explicit::{
    delta_samples, evaluate_explicit_with, FormulaVariant, OverNConstant, TailSign, Target,
    TrivialDenominator, TruncationConfig, ZeroCoefficient,
};
use crate::summatory::{
    ap_divisor_predictor, ap_divisor_sum, auxiliary_sums, circle_lattice_sum, divisor_sum_exact,
    divisor_sum_from_squarefree, divisor_sum_hyperbola, fractional_part_predictor,
    fractional_part_sum, harmonic_predictor, harmonic_sum, squarefree_divisor_sum, APSpec,
    Algorithm, AuxiliaryKind, Oracle, SumTag, SumValue, SummatoryResult, DEFAULT_ORACLE_BOUND,
};
use crate::voronoi::{
    divisor_delta, sierpinski_sum, voronoi_full, voronoi_truncated, DeltaConvention,
};
use crate::zeta::{load_zero_file, ZeroTable};

pub const ZEROS_ENV: &str = "ZD_ZEROS";
const MAX_SIEVE_ROWS: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "zdlab",
    version,
    about = "Divisor summatory functions, explicit formulas and Voronoi series"
)]
#[command(args_override_self = true)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// key=value file supplying default flags
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Worker threads for parallel sections
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// csv or json
    #[arg(long, global = true)]
    pub format: Option<OutputFormat>,

    /// Output file; stdout when omitted
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Largest ⌊x⌋ summed by brute force
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_BOUND)]
    pub oracle_bound: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate an arithmetic function on a range
    #[command(args_override_self = true)]
    Sieve {
        #[arg(long = "fn", default_value = "d")]
        function: FnSpec,
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Exact summatory values
    #[command(args_override_self = true)]
    Sum {
        /// An arithmetic function (d, two_omega, sigma:1, …) or a weighted
        /// sum (d_over_n, two_big_omega, …)
        #[arg(long = "fn")]
        function: String,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<Abscissa>,
        #[arg(long)]
        algorithm: Option<String>,
    },
    /// Decomposed explicit-formula evaluation
    #[command(args_override_self = true)]
    Explicit(ExplicitArgs),
    /// Bessel-series approximations
    #[command(args_override_self = true)]
    Voronoi {
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<Abscissa>,
        #[arg(long, default_value_t = 10_000)]
        terms: usize,
        /// full, truncated or sierpinski
        #[arg(long, default_value = "full")]
        kind: String,
        /// main_term_only or with_quarter (truncated series only)
        #[arg(long, default_value = "with_quarter")]
        convention: String,
    },
    /// Error-term samples on a list or a geometric grid
    #[command(args_override_self = true)]
    Delta {
        #[arg(long, default_value = "divisor_sum")]
        target: Target,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Progression sums and their predictions
    #[command(args_override_self = true)]
    Ap {
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<Abscissa>,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a: u64,
    },
    /// Run a verification suite
    #[command(args_override_self = true)]
    Verify {
        /// identities, summatory, zeta, bessel or all
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Fit log|Δ| against log x
    #[command(args_override_self = true)]
    Fit {
        /// Delta CSV to fit; otherwise samples are computed from the grid
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "divisor_sum")]
        target: Target,
        #[command(flatten)]
        grid: GridArgs,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Explicit sample points
    #[arg(long, value_delimiter = ',')]
    pub x: Vec<Abscissa>,
    #[arg(long)]
    pub lo: Option<f64>,
    #[arg(long)]
    pub hi: Option<f64>,
    #[arg(long, default_value_t = 1.2)]
    pub ratio: f64,
}

impl GridArgs {
    fn points(&self) -> Result<Vec<Abscissa>> {
        match (self.x.is_empty(), self.lo, self.hi) {
            (false, None, None) => {
                if self.x.windows(2).any(|w| w[0].value() >= w[1].value()) {
                    return Err(Error::InvalidArgument(
                        "--x values must be ascending".into(),
                    ));
                }
                Ok(self.x.clone())
            }
            (true, Some(lo), Some(hi)) => log_grid(lo, hi, self.ratio),
            _ => Err(Error::InvalidArgument(
                "give either --x or both --lo and --hi".into(),
            )),
        }
    }
}

#[derive(Debug, Args)]
pub struct ExplicitArgs {
    #[arg(long, default_value = "two_omega_sum")]
    pub target: Target,
    #[arg(long)]
    pub x: Abscissa,
    /// Zero ordinates, one per line; defaults to $ZD_ZEROS
    #[arg(long)]
    pub zeros: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    pub pairs: usize,
    #[arg(long, default_value_t = 10)]
    pub tail: usize,
    #[arg(long, default_value_t = 0.5)]
    pub midpoint_delta: f64,
    /// Skip the |ζ(1/2 + it)| check of the zero table
    #[arg(long)]
    pub no_validate: bool,
    /// printed or residue
    #[arg(long, default_value = "printed")]
    pub zero_coefficient: String,
    /// residue or printed
    #[arg(long, default_value = "residue")]
    pub trivial_denominator: String,
    /// minus or plus
    #[arg(long, default_value = "minus")]
    pub tail_sign: String,
    /// printed or residue
    #[arg(long, default_value = "printed")]
    pub over_n_constant: String,
    /// N values listed in the CSV table; every N when omitted
    #[arg(long, value_delimiter = ',')]
    pub report_at: Vec<usize>,
}

fn choice<T: Copy>(flag: &str, value: &str, options: &[(&str, T)]) -> Result<T> {
    options
        .iter()
        .find(|(name, _)| *name == value)
        .map(|&(_, v)| v)
        .ok_or_else(|| {
            let names: Vec<&str> = options.iter().map(|(n, _)| *n).collect();
            Error::InvalidArgument(format!(
                "--{flag} must be one of {}, got {value:?}",
                names.join(", ")
            ))
        })
}

impl ExplicitArgs {
    fn variant(&self) -> Result<FormulaVariant> {
        Ok(FormulaVariant {
            zero_coefficient: choice(
                "zero-coefficient",
                &self.zero_coefficient,
                &[
                    ("printed", ZeroCoefficient::AsPrinted),
                    ("residue", ZeroCoefficient::Residue),
                ],
            )?,
            trivial_denominator: choice(
                "trivial-denominator",
                &self.trivial_denominator,
                &[
                    ("residue", TrivialDenominator::Residue),
                    ("printed", TrivialDenominator::AsPrinted),
                ],
            )?,
            tail_sign: choice(
                "tail-sign",
                &self.tail_sign,
                &[("minus", TailSign::Minus), ("plus", TailSign::Plus)],
            )?,
            over_n_constant: choice(
                "over-n-constant",
                &self.over_n_constant,
                &[
                    ("printed", OverNConstant::AsPrinted),
                    ("residue", OverNConstant::Residue),
                ],
            )?,
        })
    }
}

/// Command result plus the exit status it implies.
pub struct Outcome {
    pub report: Report,
    pub status: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Format { .. } => 3,
        Error::ResourceLimit(_) | Error::Overflow(_) => 4,
        Error::NonFinite(_) => 1,
        _ => 2,
    }
}

fn check_bound(x: Abscissa, bound: u64) -> Result<()> {
    Oracle::new(bound.min(DEFAULT_ORACLE_BOUND)).check(x.floor())
}

fn sum_one(
    function: &str,
    x: Abscissa,
    algorithm: Option<&str>,
    bound: u64,
) -> Result<SummatoryResult> {
    if let Ok(kind) = function.parse::<AuxiliaryKind>() {
        if algorithm.is_some_and(|a| a != "brute") {
            return Err(Error::InvalidArgument(format!(
                "{kind} is only summed by brute force"
            )));
        }
        check_bound(x, bound)?;
        return auxiliary_sums(kind, x);
    }
    let spec: FnSpec = function.parse()?;
    let lattice = |x: Abscissa| SummatoryResult {
        x,
        tag: SumTag::Function(FnSpec::TwoSquares),
        value: SumValue::Exact(circle_lattice_sum(x)),
        algorithm: Algorithm::Lattice,
        elapsed: Default::default(),
    };
    match (spec, algorithm) {
        (FnSpec::Divisors, None | Some("hyperbola")) => divisor_sum_hyperbola(x),
        (FnSpec::Divisors, Some("convolution_kernel")) => divisor_sum_from_squarefree(x),
        (FnSpec::TwoOmega, None | Some("moebius_kernel")) => squarefree_divisor_sum(x),
        (FnSpec::TwoSquares, None | Some("lattice")) => Ok(lattice(x)),
        (_, None | Some("brute")) => Oracle::new(bound).sum(spec, x),
        (_, Some(a)) => Err(Error::InvalidArgument(format!(
            "algorithm {a:?} does not apply to {spec}"
        ))),
    }
}

fn load_zeros(path: Option<&Path>, needed: usize, validate: bool) -> Result<ZeroTable> {
    let from_env = std::env::var_os(ZEROS_ENV).map(PathBuf::from);
    match path.map(Path::to_path_buf).or(from_env) {
        Some(p) => {
            if !p.exists() {
                return Err(Error::Io(std::io::Error::new(
                    std::io::ErrorKind::NotFound,
                    format!("zeros file not found: {}", p.display()),
                )));
            }
            load_zero_file(&p, validate)
        }
        None if needed == 0 => Ok(ZeroTable::empty()),
        None => Err(Error::Io(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("{needed} zero pairs requested but no zeros file was given (--zeros or ${ZEROS_ENV})"),
        ))),
    }
}

fn explicit(args: &ExplicitArgs, bound: u64) -> Result<Report> {
    let variant = args.variant()?;
    let cfg = TruncationConfig {
        num_zero_pairs: args.pairs,
        tail_terms: args.tail,
        midpoint_delta: args.midpoint_delta,
    };
    cfg.validate()?;
    let zeros =
        load_zeros(args.zeros.as_deref(), args.pairs, !args.no_validate)?.truncated(args.pairs);
    if zeros.len() < args.pairs {
        return Err(Error::InvalidArgument(format!(
            "{} zero pairs requested but {} has {}",
            args.pairs,
            zeros.source(),
            zeros.len()
        )));
    }
    if x_floor_exceeds(args.x, bound) {
        return Err(Error::ResourceLimit(format!(
            "x = {} exceeds the oracle bound {bound}",
            args.x
        )));
    }
    let eval = evaluate_explicit_with(args.target, args.x, &zeros, &cfg, variant)?;
    let ns: Vec<usize> = if args.report_at.is_empty() {
        (0..=eval.zero_pairs()).collect()
    } else {
        args.report_at.clone()
    };
    let mut t = Table::new(&["n", "zero_sum", "total", "exact", "residual"]);
    for n in ns {
        let total = eval.total_at(n).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "--report-at {n} exceeds the {} pairs evaluated",
                eval.zero_pairs()
            ))
        })?;
        let exact = eval.exact.map_or(Cell::Text(String::new()), Cell::Real);
        let residual = eval
            .residual_at(n)
            .map_or(Cell::Text(String::new()), Cell::Real);
        t.push(vec![
            n.into(),
            eval.zero_sum_at(n).unwrap_or(f64::NAN).into(),
            total.into(),
            exact,
            residual,
        ]);
    }
    if !zeros.validated() {
        eprintln!("warning: zero table {} is not validated", zeros.source());
    }
    Report::with_json(t, &eval)
}

fn x_floor_exceeds(x: Abscissa, bound: u64) -> bool {
    let top = if x.is_integer() {
        x.floor()
    } else {
        x.floor() + 1
    };
    top > bound
}

fn voronoi(xs: &[Abscissa], terms: usize, kind: &str, convention: &str) -> Result<Report> {
    let convention = choice(
        "convention",
        convention,
        &[
            ("main_term_only", DeltaConvention::MainTermOnly),
            ("with_quarter", DeltaConvention::WithQuarter),
        ],
    )?;
    let mut t = Table::new(&[
        "x",
        "kind",
        "terms",
        "value",
        "exact",
        "residual",
        "last_term",
    ]);
    for &x in xs {
        let (value, exact, last) = match kind {
            "full" => {
                let v = voronoi_full(x, terms)?;
                (
                    v.value,
                    divisor_sum_exact(x.floor()) as f64,
                    Cell::Real(v.last_term),
                )
            }
            "truncated" => (
                voronoi_truncated(x, terms)?,
                divisor_delta(x, convention)?,
                Cell::Text(String::new()),
            ),
            "sierpinski" => (
                sierpinski_sum(x, terms)?,
                circle_lattice_sum(x) as f64,
                Cell::Text(String::new()),
            ),
            other => {
                return Err(Error::InvalidArgument(format!(
                    "--kind must be full, truncated or sierpinski, got {other:?}"
                )))
            }
        };
        t.push(vec![
            x.value().into(),
            kind.into(),
            terms.into(),
            value.into(),
            exact.into(),
            (exact - value).into(),
            last,
        ]);
    }
    Ok(Report::from_table(t))
}

fn ap(xs: &[Abscissa], q: u64, a: u64, bound: u64) -> Result<Report> {
    let spec = APSpec::new(q, a)?;
    let mut t = Table::new(&["x", "q", "a", "kind", "value", "predicted", "residual"]);
    for &x in xs {
        check_bound(x, bound)?;
        let xv = x.value();
        let d = ap_divisor_sum(x, spec)?.exact() as f64;
        let rows = [
            ("divisor", d, ap_divisor_predictor(xv, spec)?),
            (
                "harmonic",
                harmonic_sum(x, Some(spec))?,
                harmonic_predictor(xv, Some(spec))?,
            ),
            (
                "fractional_part",
                fractional_part_sum(x, Some(spec))?,
                fractional_part_predictor(xv, Some(spec)),
            ),
        ];
        for (kind, value, predicted) in rows {
            t.push(vec![
                xv.into(),
                q.into(),
                a.into(),
                kind.into(),
                value.into(),
                predicted.into(),
                (value - predicted).into(),
            ]);
        }
    }
    Ok(Report::from_table(t))
}

fn samples_for(
    target: Target,
    grid: &GridArgs,
    bound: u64,
) -> Result<Vec<crate::explicit::DeltaSample>> {
    let points = grid.points()?;
    if let Some(top) = points.last() {
        check_bound(*top, bound)?;
    }
    delta_samples(target, &points)
}

fn execute(cfg: &RunConfig) -> Result<Outcome> {
    let bound = cfg.oracle_bound;
    let ok = |report| Ok(Outcome { report, status: 0 });
    match &cfg.command {
        Command::Sieve { function, from, to } => {
            if from > to || *from == 0 {
                return Err(Error::InvalidArgument("sieve needs 1 <= from <= to".into()));
            }
            if to - from >= MAX_SIEVE_ROWS {
                return Err(Error::ResourceLimit(format!(
                    "sieve prints at most {MAX_SIEVE_ROWS} rows"
                )));
            }
            let table = FactorTable::new(*to)?;
            let mut t = Table::new(&["n", "value"]);
            for n in *from..=*to {
                t.push(vec![
                    n.into(),
                    (eval_arithmetic(*function, n, Some(&table))? as i128).into(),
                ]);
            }
            ok(Report::from_table(t))
        }
        Command::Sum {
            function,
            x,
            algorithm,
        } => {
            let mut t = Table::new(&["x", "fn", "value", "algorithm"]);
            for &p in x {
                let r = sum_one(function, p, algorithm.as_deref(), bound)?;
                let value = match r.value {
                    SumValue::Exact(v) => Cell::Int(v),
                    SumValue::Real(v) => Cell::Real(v),
                };
                t.push(vec![
                    p.to_string().into(),
                    r.tag.to_string().into(),
                    value,
                    r.algorithm.to_string().into(),
                ]);
            }
            ok(Report::from_table(t))
        }
        Command::Explicit(args) => ok(explicit(args, bound)?),
        Command::Voronoi {
            x,
            terms,
            kind,
            convention,
        } => ok(voronoi(x, *terms, kind, convention)?),
        Command::Delta { target, grid } => ok(Report::from_table(delta_table(&samples_for(
            *target, grid, bound,
        )?))),
        Command::Ap { x, q, a } => ok(ap(x, *q, *a, bound)?),
        Command::Verify { suite } => {
            let checks = run_suite(*suite)?;
            let mut t = Table::new(&["suite", "check", "passed", "detail"]);
            for c in &checks {
                t.push(vec![
                    c.suite.clone().into(),
                    c.name.clone().into(),
                    c.passed.into(),
                    c.detail.clone().into(),
                ]);
            }
            let status = if checks.iter().all(|c| c.passed) {
                0
            } else {
                5
            };
            Ok(Outcome {
                report: Report::from_table(t),
                status,
            })
        }
        Command::Fit {
            input,
            target,
            grid,
        } => {
            let samples = match input {
                Some(p) => parse_delta_csv(&std::fs::read_to_string(p)?)?,
                None => samples_for(*target, grid, bound)?,
            };
            let fit = exponent_fit(&samples)?;
            let mut t = Table::new(&[
                "theta",
                "theta_stderr",
                "intercept",
                "samples",
                "decades",
                "rms_residual",
                "r_squared",
                "oscillating",
                "nearest_landmark",
            ]);
            t.push(vec![
                fit.theta.into(),
                fit.theta_stderr.into(),
                fit.intercept.into(),
                fit.samples.into(),
                fit.decades.into(),
                fit.rms_residual.into(),
                fit.r_squared.into(),
                fit.oscillating.into(),
                fit.nearest_landmark.clone().into(),
            ]);
            ok(Report::with_json(t, &fit)?)
        }
    }
}

fn default_format(cmd: &Command) -> OutputFormat {
    match cmd {
        Command::Explicit(_) | Command::Fit { .. } => OutputFormat::Json,
        _ => OutputFormat::Csv,
    }
}

const SUBCOMMANDS: [&str; 8] = [
    "sieve", "sum", "explicit", "voronoi", "delta", "ap", "verify", "fit",
];

/// Reads `--config` (if any) and splices its flags in right after the
/// subcommand, so flags given on the command line come later and win.
fn expand_config(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let strs: Vec<String> = args
        .iter()
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let mut path = None;
    for (i, a) in strs.iter().enumerate() {
        if a == "--config" {
            path = strs.get(i + 1).cloned();
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        }
    }
    let Some(path) = path else { return Ok(args) };
    let entries = parse_config(&std::fs::read_to_string(&path)?)?;
    let Some(pos) = strs.iter().position(|a| SUBCOMMANDS.contains(&a.as_str())) else {
        return Ok(args);
    };
    let mut out: Vec<OsString> = args[..=pos].to_vec();
    out.extend(config_args(&entries).into_iter().map(OsString::from));
    out.extend(args[pos + 1..].iter().cloned());
    Ok(out)
}

/// Full command-line entry point; returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let args = match expand_config(args) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: reading config: {e}");
            return exit_code(&e);
        }
    };
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cfg) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Executes the parsed configuration, writes the report, and returns the
/// exit status.
pub fn run(cfg: &RunConfig) -> Result<i32> {
    let outcome = match cfg.threads {
        Some(n) => {
            if n == 0 {
                return Err(Error::InvalidArgument(
                    "--threads must be at least 1".into(),
                ));
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::ResourceLimit(format!("thread pool: {e}")))?;
            pool.install(|| execute(cfg))?
        }
        None => execute(cfg)?,
    };
    let format = cfg.format.unwrap_or_else(|| default_format(&cfg.command));
    write_output(&outcome.report.render(format)?, cfg.output.as_deref())?;
    Ok(outcome.status)
}
