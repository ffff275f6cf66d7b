//! Command-line front end for `localdkw`. Every subcommand writes CSV with a
//! `#` header line that echoes the full flag set.

mod figure;

use std::ffi::OsString;
use std::fmt::{Display, Write as _};
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use localdkw::csv::fmt_sig;
use localdkw::{
    build_schedule, confidence_band_with_split, cvar_loss_bounds, cvar_reward_bounds,
    exceedance_probability, invert_radius, make_ecdf, mc_report, mc_report_csv, parse_support_arg,
    tabulate, tu_band, GFunction, McConfig, RadiusQuery, RiskSide, Scheme, TailSide,
    TimeUniformConfig, UnitInterval, DEFAULT_TOL,
};

pub use figure::{default_eps_grid, Family, Figure};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "LOCALDKW_THREADS";

#[derive(Debug)]
enum CliError {
    /// Bad flags or values; exit code 2.
    Usage(String),
    /// Reading inputs or writing outputs failed; exit code 1.
    Io(String),
}

impl From<localdkw::Error> for CliError {
    fn from(e: localdkw::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "localdkw",
    version,
    about = "Exact local DKW probabilities, radii and bounds"
)]
struct Cli {
    /// Write the CSV here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct IntervalArgs {
    /// Lower end of the CDF-level interval.
    #[arg(long, default_value_t = 0.0)]
    lo: f64,
    /// Upper end of the CDF-level interval.
    #[arg(long, default_value_t = 1.0)]
    hi: f64,
}

impl IntervalArgs {
    fn interval(&self) -> CliResult<UnitInterval> {
        Ok(UnitInterval::new(self.lo, self.hi)?)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact exceedance probability.
    Prob {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        eps: f64,
        #[command(flatten)]
        interval: IntervalArgs,
        #[arg(long, default_value = "above")]
        tail: TailSide,
    },
    /// Smallest radius whose exceedance probability is at most delta.
    Invert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: f64,
        #[command(flatten)]
        interval: IntervalArgs,
        #[arg(long, default_value = "above")]
        tail: TailSide,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Radii over a grid of sample sizes and levels.
    Tabulate {
        /// Comma-separated, strictly increasing.
        #[arg(long = "n", value_delimiter = ',', required = true)]
        n_values: Vec<usize>,
        /// Comma-separated, strictly increasing.
        #[arg(long = "delta", value_delimiter = ',', required = true)]
        delta_values: Vec<f64>,
        #[command(flatten)]
        interval: IntervalArgs,
        #[arg(long, default_value = "above")]
        tail: TailSide,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Confidence band around the empirical CDF of a sample file.
    Band {
        #[arg(long)]
        samples: PathBuf,
        #[arg(long)]
        delta: f64,
        #[command(flatten)]
        interval: IntervalArgs,
        /// Share of delta spent on the upper envelope.
        #[arg(long, default_value_t = 0.5)]
        split: f64,
        /// Support `a,b`; overrides the file's directive.
        #[arg(long)]
        support: Option<String>,
    },
    /// CVaR point estimate and confidence bounds for a sample file.
    Cvar {
        #[arg(long)]
        samples: PathBuf,
        #[arg(long, default_value = "reward")]
        side: RiskSide,
        /// Reward tail level.
        #[arg(long)]
        alpha: Option<f64>,
        /// Loss tail level.
        #[arg(long)]
        kappa: Option<f64>,
        #[arg(long)]
        delta: f64,
        /// Support `a,b`; overrides the file's directive.
        #[arg(long)]
        support: Option<String>,
    },
    /// Monte-Carlo estimate of exceedance probabilities next to the exact values.
    Mc {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        interval: IntervalArgs,
        #[arg(long, default_value = "above")]
        tail: TailSide,
        #[arg(long, default_value_t = McConfig::DEFAULT_REPS)]
        reps: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Comma-separated grid; defaults to 0.001, 0.002, ..., 1.
        #[arg(long, value_delimiter = ',')]
        eps: Vec<f64>,
    },
    /// Time-uniform radii and per-step schedules.
    Tu {
        #[command(subcommand)]
        command: TuCommand,
    },
    /// Curve data behind the standard plots.
    Figure {
        #[arg(long)]
        figure: Figure,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Family::Low)]
        family: Family,
        /// Only meaningful for epsilon0 and mcmc; delta0 and delta1 fix it.
        #[arg(long)]
        tail: Option<TailSide>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = McConfig::DEFAULT_REPS)]
        reps: usize,
    },
}

#[derive(Subcommand, Debug)]
enum TuCommand {
    /// Radius valid simultaneously over times up to the horizon.
    Band {
        #[arg(long)]
        horizon: usize,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = TimeUniformConfig::DEFAULT_ETA)]
        eta: f64,
        #[arg(long, default_value_t = TimeUniformConfig::DEFAULT_C)]
        c: f64,
        #[command(flatten)]
        interval: IntervalArgs,
        #[arg(long, default_value = "above")]
        tail: TailSide,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Comma-separated increasing times; defaults to 1..=horizon.
        #[arg(long, value_delimiter = ',')]
        times: Vec<usize>,
    },
    /// Per-step peeling ratios and confidence levels.
    Schedule {
        #[arg(long, value_enum)]
        scheme: SchemeName,
        #[arg(long)]
        t_max: usize,
        /// Exponent for the polylog scheme.
        #[arg(long, default_value_t = 0.5)]
        a: f64,
        /// Exponent for the klucb and summable schemes.
        #[arg(long, default_value_t = 3.0)]
        xi: f64,
        /// Weight function for the summable and union schemes.
        #[arg(long, default_value = "t(t+1)")]
        g: GFunction,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum SchemeName {
    Polylog,
    Klucb,
    Summable,
    Union,
}

/// `# localdkw <version> <command> key=value ...`
struct Header(String);

impl Header {
    fn new(command: &str) -> Self {
        Header(format!(
            "# localdkw {} {command}",
            env!("CARGO_PKG_VERSION")
        ))
    }

    fn kv(mut self, key: &str, value: impl Display) -> Self {
        let _ = write!(self.0, " {key}={value}");
        self
    }

    fn num(self, key: &str, value: f64) -> Self {
        self.kv(key, fmt_sig(value))
    }

    fn list<T: Display>(self, key: &str, values: &[T]) -> Self {
        let joined = values
            .iter()
            .map(T::to_string)
            .collect::<Vec<_>>()
            .join(",");
        self.kv(key, joined)
    }

    fn finish(mut self) -> String {
        self.0.push('\n');
        self.0
    }
}

fn join_nums(values: &[f64]) -> Vec<String> {
    values.iter().map(|&v| fmt_sig(v)).collect()
}

/// Parse `argv` (including the program name), execute, and return the exit
/// code. Diagnostics go to standard error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let rendered = e.to_string();
                let line = rendered.lines().next().unwrap_or("invalid arguments");
                eprintln!("{line}");
                return 2;
            }
            let _ = e.print();
            return 0;
        }
    };
    let result = thread_pool().and_then(|pool| match pool {
        Some(pool) => pool.install(|| execute(&cli)),
        None => execute(&cli),
    });
    match result {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn thread_pool() -> CliResult<Option<rayon::ThreadPool>> {
    let Some(raw) = std::env::var_os(THREADS_ENV) else {
        return Ok(None);
    };
    let threads = raw
        .to_str()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&k| k > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map(Some)
        .map_err(|e| CliError::Io(format!("cannot start thread pool: {e}")))
}

fn execute(cli: &Cli) -> CliResult<()> {
    let body = render(&cli.command)?;
    match &cli.output {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            match out.write_all(body.as_bytes()).and_then(|()| out.flush()) {
                // The reader went away (e.g. `| head`); nothing left to report.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                r => r.map_err(|e| CliError::Io(format!("cannot write to standard output: {e}"))),
            }
        }
    }
}

fn render(command: &Command) -> CliResult<String> {
    match command {
        Command::Prob {
            n,
            eps,
            interval,
            tail,
        } => {
            let iv = interval.interval()?;
            let p = exceedance_probability(*n, *eps, iv, *tail)?;
            let mut out = Header::new("prob")
                .kv("n", n)
                .num("eps", *eps)
                .num("lo", iv.lo())
                .num("hi", iv.hi())
                .kv("tail", tail)
                .finish();
            out.push_str("n,eps,lo,hi,tail,probability\n");
            let _ = writeln!(
                out,
                "{n},{},{},{},{tail},{}",
                fmt_sig(*eps),
                fmt_sig(iv.lo()),
                fmt_sig(iv.hi()),
                fmt_sig(p)
            );
            Ok(out)
        }
        Command::Invert {
            n,
            delta,
            interval,
            tail,
            tol,
        } => {
            let iv = interval.interval()?;
            let r = invert_radius(&RadiusQuery::new(*n, *delta, iv, *tail).with_tol(*tol))?;
            let mut out = Header::new("invert")
                .kv("n", n)
                .num("delta", *delta)
                .num("lo", iv.lo())
                .num("hi", iv.hi())
                .kv("tail", tail)
                .num("tol", *tol)
                .finish();
            out.push_str("n,delta,lo,hi,tail,saturated,epsilon\n");
            let _ = writeln!(
                out,
                "{n},{},{},{},{tail},{},{}",
                fmt_sig(*delta),
                fmt_sig(iv.lo()),
                fmt_sig(iv.hi()),
                r.saturated,
                fmt_sig(r.epsilon)
            );
            Ok(out)
        }
        Command::Tabulate {
            n_values,
            delta_values,
            interval,
            tail,
            tol,
        } => {
            let iv = interval.interval()?;
            let table = tabulate(n_values, delta_values, iv, *tail, *tol)?;
            let mut out = Header::new("tabulate")
                .list("n", n_values)
                .list("delta", &join_nums(delta_values))
                .num("lo", iv.lo())
                .num("hi", iv.hi())
                .kv("tail", tail)
                .num("tol", *tol)
                .finish();
            out.push_str(&table.to_csv());
            Ok(out)
        }
        Command::Band {
            samples,
            delta,
            interval,
            split,
            support,
        } => {
            let iv = interval.interval()?;
            let (values, support) = load_samples(samples, support.as_deref(), false)?;
            let ecdf = make_ecdf(&values, support)?;
            let band = confidence_band_with_split(&ecdf, *delta, iv, *split)?;
            let mut out = Header::new("band")
                .kv("samples", samples.display())
                .num("delta", *delta)
                .num("lo", iv.lo())
                .num("hi", iv.hi())
                .num("split", *split)
                .kv(
                    "support",
                    format!("{},{}", fmt_sig(support.0), fmt_sig(support.1)),
                )
                .finish();
            let _ = writeln!(
                out,
                "# n={} radius_lower={} radius_upper={}",
                ecdf.len(),
                fmt_sig(band.radius_lower),
                fmt_sig(band.radius_upper)
            );
            out.push_str(&band.to_csv());
            Ok(out)
        }
        Command::Cvar {
            samples,
            side,
            alpha,
            kappa,
            delta,
            support,
        } => {
            let level = match (side, alpha, kappa) {
                (RiskSide::Reward, Some(a), None) => *a,
                (RiskSide::Loss, None, Some(k)) => *k,
                (RiskSide::Reward, _, _) => {
                    return Err(CliError::Usage("--side reward takes --alpha only".into()))
                }
                (RiskSide::Loss, _, _) => {
                    return Err(CliError::Usage("--side loss takes --kappa only".into()))
                }
            };
            let (values, support) = load_samples(samples, support.as_deref(), true)?;
            let ecdf = make_ecdf(&values, support)?;
            let b = match side {
                RiskSide::Reward => cvar_reward_bounds(&ecdf, level, *delta)?,
                RiskSide::Loss => cvar_loss_bounds(&ecdf, level, *delta)?,
            };
            let level_key = match side {
                RiskSide::Reward => "alpha",
                RiskSide::Loss => "kappa",
            };
            let mut out = Header::new("cvar")
                .kv("samples", samples.display())
                .kv("side", side)
                .num(level_key, level)
                .num("delta", *delta)
                .kv(
                    "support",
                    format!("{},{}", fmt_sig(support.0), fmt_sig(support.1)),
                )
                .finish();
            out.push_str("level,delta,lower,point,upper,n\n");
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                fmt_sig(level),
                fmt_sig(*delta),
                fmt_sig(b.lower),
                fmt_sig(b.point),
                fmt_sig(b.upper),
                ecdf.len()
            );
            Ok(out)
        }
        Command::Mc {
            n,
            interval,
            tail,
            reps,
            seed,
            eps,
        } => {
            let cfg = McConfig {
                reps: *reps,
                seed: *seed,
                n: *n,
                interval: interval.interval()?,
                tail: *tail,
                eps_grid: if eps.is_empty() {
                    default_eps_grid()
                } else {
                    eps.clone()
                },
            };
            let rows = mc_report(&cfg)?;
            let mut out = Header::new("mc")
                .kv("n", n)
                .num("lo", cfg.interval.lo())
                .num("hi", cfg.interval.hi())
                .kv("tail", tail)
                .kv("reps", reps)
                .kv("seed", seed)
                .list("eps", &join_nums(&cfg.eps_grid))
                .finish();
            out.push_str(&mc_report_csv(&cfg, &rows));
            Ok(out)
        }
        Command::Tu { command } => render_tu(command),
        Command::Figure {
            figure,
            n,
            family,
            tail,
            seed,
            reps,
        } => {
            let spec = figure::FigureRequest {
                figure: *figure,
                n: *n,
                family: *family,
                tail: *tail,
                seed: *seed,
                reps: *reps,
            };
            let header = Header::new("figure")
                .kv("figure", figure)
                .kv("n", n)
                .kv("family", family)
                .kv("tail", spec.tail()?)
                .kv("seed", seed)
                .kv("reps", reps)
                .finish();
            Ok(header + &figure::emit(&spec)?)
        }
    }
}

fn render_tu(command: &TuCommand) -> CliResult<String> {
    match command {
        TuCommand::Band {
            horizon,
            delta,
            eta,
            c,
            interval,
            tail,
            tol,
            times,
        } => {
            let cfg = TimeUniformConfig {
                horizon: *horizon,
                delta: *delta,
                eta: *eta,
                c: *c,
                interval: interval.interval()?,
                tail: *tail,
                tol: *tol,
            };
            let times = if times.is_empty() {
                (1..=*horizon).collect()
            } else {
                times.clone()
            };
            let band = tu_band(&cfg, &times)?;
            let mut out = Header::new("tu band")
                .kv("horizon", horizon)
                .num("delta", *delta)
                .num("eta", *eta)
                .num("c", *c)
                .num("lo", cfg.interval.lo())
                .num("hi", cfg.interval.hi())
                .kv("tail", tail)
                .num("tol", *tol)
                .list("times", &times)
                .finish();
            if !band.nonmonotone.is_empty() {
                out.push_str("# fixed-sample radius increased at t=");
                let ts: Vec<String> = band.nonmonotone.iter().map(usize::to_string).collect();
                out.push_str(&ts.join(","));
                out.push('\n');
            }
            out.push_str(&band.to_csv());
            Ok(out)
        }
        TuCommand::Schedule {
            scheme,
            t_max,
            a,
            xi,
            g,
        } => {
            let (scheme, header) = match scheme {
                SchemeName::Polylog => (
                    Scheme::PolyLogA { a: *a },
                    Header::new("tu schedule")
                        .kv("scheme", "polylog")
                        .num("a", *a),
                ),
                SchemeName::Klucb => (
                    Scheme::KlUcbB { xi: *xi },
                    Header::new("tu schedule")
                        .kv("scheme", "klucb")
                        .num("xi", *xi),
                ),
                SchemeName::Summable => (
                    Scheme::SummableC { g: *g, xi: *xi },
                    Header::new("tu schedule")
                        .kv("scheme", "summable")
                        .kv("g", g)
                        .num("xi", *xi),
                ),
                SchemeName::Union => (
                    Scheme::UnionBound { g: *g },
                    Header::new("tu schedule").kv("scheme", "union").kv("g", g),
                ),
            };
            let schedule = build_schedule(scheme, *t_max)?;
            let mut out = header.kv("t_max", t_max).finish();
            out.push_str(&schedule.to_csv());
            Ok(out)
        }
    }
}

/// Read a sample file and settle its support: the flag wins over the file's
/// directive. Without either, CVaR needs an explicit support while the band
/// falls back to the whole real line.
fn load_samples(
    path: &Path,
    support_flag: Option<&str>,
    require_support: bool,
) -> CliResult<(Vec<f64>, (f64, f64))> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let file = localdkw::parse_samples(&text)?;
    let support = match (support_flag, file.support) {
        (Some(s), _) => parse_support_arg(s)?,
        (None, Some(s)) => s,
        (None, None) if require_support => {
            return Err(CliError::Usage(
                "a support is required: pass --support a,b or add `# support=a,b` to the file"
                    .into(),
            ))
        }
        (None, None) => (f64::NEG_INFINITY, f64::INFINITY),
    };
    Ok((file.samples, support))
}
