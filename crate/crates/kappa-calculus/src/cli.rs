//! Command-line front end: verb dispatch, expression evaluation, suite
//! running, and report emission.
//!
//! The binary is a thin wrapper around [`run`], which parses arguments,
//! executes one verb, prints the result (plain text or a JSON report), and
//! returns the process exit code: 0 when everything passed, 1 when a check
//! failed, 2 on usage errors (bad flags, unparsable expressions, invalid
//! metric).
use crate::calculus::Calculus;
use crate::coaction::Coaction;
use crate::ideal_lab::IdealLab;
use crate::minkowski::{Metric, Minkowski};
use crate::parse::{
    parse_coordinate_expression, parse_form_expression, parse_symmetry_expression,
    FormValue,
};
use crate::poincare::Poincare;
use crate::report::{Check, Params, Report};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;

/// Fixed default seed (the letters "kappa" as bytes) so repeated runs are
/// reproducible without any flags.
const DEFAULT_SEED: u64 = 0x6b61_7070_61;

#[derive(Parser, Debug)]
#[command(
    name = "kappa",
    about = "Exact computations and verification suites for a noncommutative \
             coordinate algebra, its quantum symmetry group, and the covariant \
             differential calculus they carry",
    version
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgebraChoice {
    /// The noncommutative coordinate algebra (atoms x<mu>, phi).
    Coordinates,
    /// The symmetry quantum group (atoms a[mu], L[mu,nu]).
    Symmetry,
}

#[derive(Args, Clone, Debug)]
struct Opts {
    /// Number of coordinate generators (>= 2).
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Diagonal signature such as "+---"; defaults to '+' followed by n-1 '-'.
    #[arg(long, allow_hyphen_values = true)]
    metric: Option<String>,
    /// Truncation degree for word enumerations and ideal spans (>= 1).
    #[arg(long = "max-degree", default_value_t = 4)]
    max_degree: usize,
    /// Output format for results and reports.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Seed for the randomized checks inside the suites.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Normalize an expression of the chosen algebra.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = AlgebraChoice::Coordinates)]
        algebra: AlgebraChoice,
        #[command(flatten)]
        opts: Opts,
    },
    /// Commutator [a, b] = a*b - b*a of two expressions.
    Comm {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum, default_value_t = AlgebraChoice::Coordinates)]
        algebra: AlgebraChoice,
        #[command(flatten)]
        opts: Opts,
    },
    /// Differential: of a coefficient (giving a one-form) or of a one-form
    /// (giving a two-form).
    D {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Wedge product of two one-forms.
    Wedge {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Left coaction of the symmetry algebra on a coordinate expression or a
    /// one-form.
    Coact {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Hopf-algebra axioms for the coordinate and symmetry algebras.
    HopfCheck {
        #[command(flatten)]
        opts: Opts,
    },
    /// Internal consistency of the covariant differential calculus.
    CalculusCheck {
        #[command(flatten)]
        opts: Opts,
    },
    /// Right-ideal classification: coaction closures and quotient dimensions.
    Classify {
        #[command(flatten)]
        opts: Opts,
    },
    /// Every suite: Hopf axioms, coaction, covariance, calculus,
    /// classification.
    FullSuite {
        #[command(flatten)]
        opts: Opts,
    },
}

/// Parse `args` and execute one verb, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.verb {
        Verb::Normalize { expr, algebra, opts } => {
            let metric = resolve_metric(&opts)?;
            let rendered = match algebra {
                AlgebraChoice::Coordinates => {
                    let m = Minkowski::new(metric).map_err(|e| e.to_string())?;
                    parse_coordinate_expression(&m, &expr)
                        .map_err(|e| e.to_string())?
                        .to_string()
                }
                AlgebraChoice::Symmetry => {
                    let p = Poincare::new(metric).map_err(|e| e.to_string())?;
                    parse_symmetry_expression(&p, &expr)
                        .map_err(|e| e.to_string())?
                        .to_string()
                }
            };
            emit_value(&opts, "normalize", rendered)
        }
        Verb::Comm { a, b, algebra, opts } => {
            let metric = resolve_metric(&opts)?;
            let rendered = match algebra {
                AlgebraChoice::Coordinates => {
                    let m = Minkowski::new(metric).map_err(|e| e.to_string())?;
                    let x = parse_coordinate_expression(&m, &a).map_err(|e| e.to_string())?;
                    let y = parse_coordinate_expression(&m, &b).map_err(|e| e.to_string())?;
                    (&(&x * &y) - &(&y * &x)).to_string()
                }
                AlgebraChoice::Symmetry => {
                    let p = Poincare::new(metric).map_err(|e| e.to_string())?;
                    let x = parse_symmetry_expression(&p, &a).map_err(|e| e.to_string())?;
                    let y = parse_symmetry_expression(&p, &b).map_err(|e| e.to_string())?;
                    (&(&x * &y) - &(&y * &x)).to_string()
                }
            };
            emit_value(&opts, "comm", rendered)
        }
        Verb::D { expr, opts } => {
            let metric = resolve_metric(&opts)?;
            let c = Calculus::new(metric).map_err(|e| e.to_string())?;
            let rendered = match parse_form_expression(&c, &expr)
                .map_err(|e| e.to_string())?
            {
                FormValue::Zero(e) => c.d0(&e).to_string(),
                FormValue::One(f) => c.d1(&f).to_string(),
            };
            emit_value(&opts, "d", rendered)
        }
        Verb::Wedge { a, b, opts } => {
            let metric = resolve_metric(&opts)?;
            let c = Calculus::new(metric).map_err(|e| e.to_string())?;
            let f = parse_form_expression(&c, &a).map_err(|e| e.to_string())?;
            let g = parse_form_expression(&c, &b).map_err(|e| e.to_string())?;
            let (FormValue::One(f), FormValue::One(g)) = (f, g) else {
                return Err(
                    "wedge needs two one-forms; multiply coefficients directly instead"
                        .to_string(),
                );
            };
            emit_value(&opts, "wedge", c.wedge(&f, &g).to_string())
        }
        Verb::Coact { expr, opts } => {
            let metric = resolve_metric(&opts)?;
            let c = Calculus::new(metric).map_err(|e| e.to_string())?;
            let rendered = match parse_form_expression(&c, &expr)
                .map_err(|e| e.to_string())?
            {
                FormValue::Zero(e) => c.coaction().rho_l(&e).to_string(),
                FormValue::One(f) => c.coact_form(&f).to_string(),
            };
            emit_value(&opts, "coact", rendered)
        }
        Verb::HopfCheck { opts } => {
            let metric = resolve_metric(&opts)?;
            let m = Minkowski::new(metric.clone()).map_err(|e| e.to_string())?;
            let p = Poincare::new(metric.clone()).map_err(|e| e.to_string())?;
            let mut checks = prefixed("coordinates", m.hopf_suite(opts.max_degree));
            checks.extend(prefixed("symmetry", p.hopf_suite(symmetry_degree(&opts))));
            emit_report(&opts, "hopf-check", &metric, checks)
        }
        Verb::CalculusCheck { opts } => {
            let metric = resolve_metric(&opts)?;
            let c = Calculus::new(metric.clone()).map_err(|e| e.to_string())?;
            emit_report(
                &opts,
                "calculus-check",
                &metric,
                c.verify_calculus_suite(opts.max_degree),
            )
        }
        Verb::Classify { opts } => {
            let metric = resolve_metric(&opts)?;
            let lab = IdealLab::new(metric.clone()).map_err(|e| e.to_string())?;
            emit_report(
                &opts,
                "classify",
                &metric,
                lab.classification_suite(opts.max_degree),
            )
        }
        Verb::FullSuite { opts } => {
            let metric = resolve_metric(&opts)?;
            let m = Minkowski::new(metric.clone()).map_err(|e| e.to_string())?;
            let mut checks = prefixed("coordinates", m.hopf_suite(opts.max_degree));
            // The coordinate algebra stands on its own for any signature; the
            // quantum symmetry and everything built on it need a + time sign.
            if metric.sign(0) == 1 {
                let p = Poincare::new(metric.clone()).map_err(|e| e.to_string())?;
                let co = Coaction::new(metric.clone()).map_err(|e| e.to_string())?;
                let lab = IdealLab::new(metric.clone()).map_err(|e| e.to_string())?;
                let c = Calculus::new(metric.clone()).map_err(|e| e.to_string())?;
                checks.extend(prefixed("symmetry", p.hopf_suite(symmetry_degree(&opts))));
                checks.extend(prefixed(
                    "coaction",
                    co.verify_coaction_suite(opts.max_degree.min(3), 50, opts.seed),
                ));
                checks.extend(prefixed("covariance", co.verify_quadratic_covariance()));
                checks.extend(prefixed(
                    "calculus",
                    c.verify_calculus_suite(opts.max_degree),
                ));
                checks.extend(prefixed(
                    "classification",
                    lab.classification_suite(opts.max_degree),
                ));
            } else {
                for area in [
                    "symmetry",
                    "coaction",
                    "covariance",
                    "calculus",
                    "classification",
                ] {
                    checks.push(Check::skipped(
                        format!("{area}/suite"),
                        "the quantum symmetry requires time sign +1, so this area does not apply to the chosen signature",
                    ));
                }
            }
            emit_report(&opts, "full-suite", &metric, checks)
        }
    }
}

fn resolve_metric(opts: &Opts) -> Result<Metric, String> {
    if opts.n < 2 {
        return Err("the dimension n must be at least 2".to_string());
    }
    if opts.max_degree < 1 {
        return Err("max-degree must be at least 1".to_string());
    }
    match &opts.metric {
        None => Ok(Metric::mostly_minus(opts.n)),
        Some(s) => {
            let metric = Metric::parse(s).map_err(|e| e.to_string())?;
            if metric.dim() != opts.n {
                return Err(format!(
                    "metric '{s}' has {} signs but n = {}",
                    metric.dim(),
                    opts.n
                ));
            }
            Ok(metric)
        }
    }
}

/// The symmetry algebra has n^2 + n generators, so its coalgebra word
/// enumeration is capped at degree 2; its antipode and relation checks are
/// generator-level identities that do not depend on this cap.
fn symmetry_degree(opts: &Opts) -> usize {
    opts.max_degree.min(2)
}

fn prefixed(area: &str, checks: Vec<Check>) -> Vec<Check> {
    checks
        .into_iter()
        .map(|c| Check { name: format!("{area}/{}", c.name), ..c })
        .collect()
}

fn params(opts: &Opts, metric: &Metric) -> Params {
    Params {
        n: opts.n,
        metric: metric.to_string(),
        max_degree: opts.max_degree,
        seed: opts.seed,
    }
}

fn emit_value(opts: &Opts, verb: &str, rendered: String) -> Result<i32, String> {
    match opts.format {
        OutputFormat::Text => println!("{rendered}"),
        OutputFormat::Json => {
            let metric = resolve_metric(opts)?;
            let report = Report::new(
                verb,
                params(opts, &metric),
                vec![Check::info("result", rendered)],
            );
            println!("{}", report.to_json());
        }
    }
    Ok(0)
}

fn emit_report(
    opts: &Opts,
    suite: &str,
    metric: &Metric,
    checks: Vec<Check>,
) -> Result<i32, String> {
    let report = Report::new(suite, params(opts, metric), checks);
    match opts.format {
        OutputFormat::Text => print!("{}", report.render_text()),
        OutputFormat::Json => println!("{}", report.to_json()),
    }
    Ok(if report.passed() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(n: usize, max_degree: usize) -> Opts {
        Opts {
            n,
            metric: None,
            max_degree,
            format: OutputFormat::Text,
            seed: DEFAULT_SEED,
        }
    }

    #[test]
    fn metric_resolution_validates_options() {
        assert!(resolve_metric(&opts(1, 4)).is_err());
        assert!(resolve_metric(&opts(2, 0)).is_err());
        assert_eq!(resolve_metric(&opts(3, 4)).unwrap().to_string(), "+--");
        let mut with = opts(2, 4);
        with.metric = Some("+-".to_string());
        assert_eq!(resolve_metric(&with).unwrap().to_string(), "+-");
        with.metric = Some("+--".to_string());
        assert!(resolve_metric(&with).is_err(), "metric length must match n");
        with.metric = Some("+x".to_string());
        assert!(resolve_metric(&with).is_err(), "only sign characters allowed");
    }

    #[test]
    fn verbs_parse_with_defaults() {
        let cli = Cli::try_parse_from(["kappa", "full-suite"]).expect("parses");
        let Verb::FullSuite { opts } = cli.verb else { panic!("wrong verb") };
        assert_eq!(opts.n, 4);
        assert_eq!(opts.max_degree, 4);
        assert_eq!(opts.seed, DEFAULT_SEED);
        assert_eq!(opts.format, OutputFormat::Text);
        assert!(opts.metric.is_none());

        assert!(Cli::try_parse_from(["kappa", "no-such-verb"]).is_err());
        assert!(Cli::try_parse_from(["kappa", "wedge", "t0"]).is_err(), "wedge needs two");
        assert!(Cli::try_parse_from(["kappa", "d", "x0", "--format", "yaml"]).is_err());
    }

    #[test]
    fn check_prefixing_keeps_status_and_detail() {
        let checks = prefixed("area", vec![Check::pass("one", "fine")]);
        assert_eq!(checks[0].name, "area/one");
        assert_eq!(checks[0].detail, "fine");
    }
}
