use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use superschur::rings::{self, BasisKind, PresentationKind, Report, Window};
use superschur::{alternant, dets, genfun, verify, Error, LaurentPoly, RingContext, Sector};

/// Exact computations in rings of supersymmetric Laurent polynomials.
///
/// Every invocation is a pure function of its arguments: identical runs
/// produce byte-identical output. Exit codes: 0 success, 1 verification
/// or membership failure, 2 usage or parse error.
#[derive(Parser)]
#[command(name = "superschur", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ContextArgs {
    /// Number of x-variables
    #[arg(long)]
    m: usize,
    /// Number of y-variables
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct WindowArgs {
    /// Index bound: probed indices range over [-window, window]
    #[arg(long, default_value_t = 4)]
    window: i64,
    /// Degree bound for enumerated families
    #[arg(long, default_value_t = 6)]
    degree: i64,
}

impl WindowArgs {
    fn window(&self) -> Window {
        Window::new(self.window, self.degree)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print one generator: h, hstar, hinf, H, or e
    Gen {
        #[command(flatten)]
        ctx: ContextArgs,
        /// Index of the generator
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        /// Family: h | hstar | hinf | H | e
        #[arg(long, default_value = "h")]
        kind: String,
        /// Sector for elementary polynomials: x | y
        #[arg(long, default_value = "x")]
        sector: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Euler characters: the alternant quotient (n = 0), or the weighted
    /// alternant when --mu is given
    Euler {
        #[command(flatten)]
        ctx: ContextArgs,
        /// Comma-separated integers, e.g. "2,0,-1"; empty for the empty
        /// sequence
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Kac character: the mixed-row determinant
    Kac {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        lambda: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        mu: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run a verification suite; prints a JSON report and exits nonzero
    /// on any failure
    Verify {
        /// generators | jacobi-trudi | vanishing | composite | duality |
        /// minor-sum | kac | basis | presentation | tensor
        suite: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[command(flatten)]
        window: WindowArgs,
        /// Random instances for the randomized suites
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Presentation kind: Uplus | U | Upm
        #[arg(long)]
        kind: Option<String>,
    },
    /// Expand a polynomial in the windowed basis of a ring
    Expand {
        #[command(flatten)]
        ctx: ContextArgs,
        /// Ring: plus (Laurent in x, polynomial in y) | pm (Laurent in both)
        #[arg(long, default_value = "pm")]
        ring: String,
        /// Polynomial in the canonical grammar, e.g. "x1^2 - 2*x1*y1 + y1^2"
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[command(flatten)]
        window: WindowArgs,
    },
}

#[derive(Serialize)]
struct PolyJson {
    context: ContextJson,
    terms: Vec<superschur::poly::TermJson>,
}

#[derive(Serialize)]
struct ContextJson {
    m: usize,
    n: usize,
}

#[derive(Serialize)]
struct ExpandJson {
    context: ContextJson,
    ring: String,
    window: Window,
    coefficients: Vec<CoefficientJson>,
}

#[derive(Serialize)]
struct CoefficientJson {
    i: Vec<i64>,
    j: Vec<i64>,
    coeff: String,
}

fn main() -> ExitCode {
    if let Ok(value) = std::env::var("SUPERSCHUR_BUDGET") {
        match value.parse::<u64>() {
            Ok(budget) => superschur::set_permutation_budget(budget),
            Err(_) => {
                eprintln!("error: SUPERSCHUR_BUDGET must be a nonnegative integer");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        // malformed input or indices: usage errors
        Error::Parse(_) | Error::InvalidIndex(_) | Error::ContextMismatch { .. } => 2,
        // semantic failures on well-formed input
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Gen {
            ctx,
            k,
            kind,
            sector,
            format,
        } => {
            let ring = RingContext::laurent(ctx.m, ctx.n);
            let sector = parse_sector(&sector)?;
            let poly = match kind.as_str() {
                "h" => genfun::complete_h(k, &ring),
                "hstar" => genfun::h_star(k, &ring),
                "hinf" => genfun::h_infinity(k, &ring),
                "H" => genfun::big_h(k, &ring),
                "e" => genfun::elementary_e(k, sector, &ring),
                other => {
                    return Err(Error::InvalidIndex(format!(
                        "unknown generator kind {:?} (expected h, hstar, hinf, H, e)",
                        other
                    )))
                }
            };
            print_poly(&poly, &format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Euler {
            ctx,
            lambda,
            mu,
            format,
        } => {
            let ring = RingContext::laurent(ctx.m, ctx.n);
            let lambda = parse_seq(&lambda)?;
            let poly = match mu {
                None => alternant::euler_e(&lambda, &ring)?,
                Some(mu) => {
                    let mu = parse_seq(&mu)?;
                    alternant::euler_d(&lambda, &mu, &ring)?
                }
            };
            print_poly(&poly, &format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Kac {
            ctx,
            lambda,
            mu,
            format,
        } => {
            let ring = RingContext::laurent(ctx.m, ctx.n);
            let lambda = parse_seq(&lambda)?;
            let mu = parse_seq(&mu)?;
            let poly = dets::kac_k(&lambda, &mu, &ring)?;
            print_poly(&poly, &format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            m,
            n,
            window,
            trials,
            seed,
            kind,
        } => {
            let report = run_suite(
                &suite,
                m,
                n,
                &window.window(),
                trials,
                seed,
                kind.as_deref(),
            )?;
            println!(
                "{}",
                serde_json::to_string(&report).expect("report serialization")
            );
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Expand {
            ctx,
            ring,
            input,
            window,
        } => {
            let (ring_ctx, kind) = match ring.as_str() {
                "plus" => (RingContext::partial(ctx.m, ctx.n), BasisKind::XPlus),
                "pm" => (RingContext::laurent(ctx.m, ctx.n), BasisKind::XPm),
                other => {
                    return Err(Error::InvalidIndex(format!(
                        "unknown ring {:?} (expected plus or pm)",
                        other
                    )))
                }
            };
            let poly = LaurentPoly::parse(&input, ctx.m, ctx.n)?;
            if !rings::is_supersymmetric(&poly, &ring_ctx)? {
                return Err(Error::SectorViolation(
                    "input is not supersymmetric in the requested ring".into(),
                ));
            }
            let window = window.window();
            let coefficients = rings::expand_in_basis(&poly, kind, &ring_ctx, &window)?
                .into_iter()
                .map(|(idx, coeff)| CoefficientJson {
                    i: idx.i,
                    j: idx.j,
                    coeff: coeff.to_string(),
                })
                .collect();
            let out = ExpandJson {
                context: ContextJson { m: ctx.m, n: ctx.n },
                ring,
                window,
                coefficients,
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("expand serialization")
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_suite(
    suite: &str,
    m: usize,
    n: usize,
    window: &Window,
    trials: u64,
    seed: u64,
    kind: Option<&str>,
) -> Result<Report, Error> {
    let laurent = RingContext::laurent(m, n);
    match suite {
        "generators" => verify::generators(&laurent, window),
        "jacobi-trudi" => verify::jacobi_trudi(&laurent, window, trials, seed),
        "vanishing" => verify::vanishing(&laurent, window),
        "composite" => verify::composite(&RingContext::laurent(m, 0), window),
        "duality" => verify::duality(trials, seed),
        "minor-sum" => verify::minor_sum(trials, seed),
        "kac" => verify::kac(&laurent, window),
        "basis" => verify::basis(&laurent, window, trials, seed),
        "presentation" => {
            let kind = kind.ok_or_else(|| {
                Error::InvalidIndex("presentation requires --kind Uplus | U | Upm".into())
            })?;
            let kind = PresentationKind::parse(kind).ok_or_else(|| {
                Error::InvalidIndex(format!("unknown presentation kind {:?}", kind))
            })?;
            let ctx = match kind {
                PresentationKind::U => RingContext::polynomial(m, n),
                PresentationKind::UPlus => RingContext::partial(m, n),
                PresentationKind::UPm => RingContext::laurent(m, n),
            };
            rings::verify_presentation(&ctx, kind, window)
        }
        "tensor" => rings::check_tensor_iso(m, n, window),
        other => Err(Error::InvalidIndex(format!("unknown suite {:?}", other))),
    }
}

fn parse_sector(s: &str) -> Result<Sector, Error> {
    match s {
        "x" => Ok(Sector::X),
        "y" => Ok(Sector::Y),
        other => Err(Error::InvalidIndex(format!("unknown sector {:?}", other))),
    }
}

fn parse_seq(s: &str) -> Result<Vec<i64>, Error> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {:?} in sequence", part)))
        })
        .collect()
}

fn print_poly(poly: &LaurentPoly, format: &str) -> Result<(), Error> {
    match format {
        "text" => {
            println!("{}", poly);
            Ok(())
        }
        "json" => {
            let (m, n) = poly.dims();
            let out = PolyJson {
                context: ContextJson { m, n },
                terms: poly.json_terms(),
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("poly serialization")
            );
            Ok(())
        }
        other => Err(Error::InvalidIndex(format!(
            "unknown format {:?} (expected text or json)",
            other
        ))),
    }
}
