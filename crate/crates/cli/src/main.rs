//! `cga`: batch front-end for the conformal-model kernel.
//!
//! Results go to stdout (JSON by default, every object carrying
//! `"schema": 1`); diagnostics go to stderr. Exit status is 0 on success,
//! 1 on a domain error and 2 on a usage error.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cga_core::invariants::{self, SelftestConfig};
use cga_core::little_groups::{
    classify, compare_little_algebras, decompose_infinity_generator, isometry_algebra,
    stabilizer_of_with_tol, LieAlgebraPresentation, StabilizerResult, DEFAULT_RANK_TOL,
};
use cga_core::so21::{self, build_rep, RepLabel};
use cga_core::{
    ConformalModel, Convention, Error, Multivector, Representation, RoundBlade, RoundKind,
    Signature, TargetPoint,
};

const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "cga", version, about = "Conformal geometric algebra toolkit")]
struct Cli {
    /// Model alias (E2, M11, E3, M21, M31) or a bare algebra R(p,q).
    #[arg(long, global = true, default_value = "E2")]
    model: String,

    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,

    /// Relative singular-value cutoff for stabilizer ranks. Defaults to
    /// $CGA_EPSILON, then 1e-9.
    #[arg(long, global = true)]
    rank_threshold: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conformal embedding of a target point.
    Embed {
        #[arg(long, allow_hyphen_values = true)]
        point: TargetPoint,
    },
    /// Target coordinates of a model vector.
    Project {
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Squared distance between two target points.
    Dist {
        #[arg(long, allow_hyphen_values = true)]
        a: TargetPoint,
        #[arg(long, allow_hyphen_values = true)]
        b: TargetPoint,
        #[arg(long, value_enum, default_value_t = ConventionArg::Standard)]
        convention: ConventionArg,
    },
    /// Direct round through three target points.
    Circle(Triple),
    /// Incidence of a point on a round through three points.
    Incidence {
        #[arg(long, allow_hyphen_values = true)]
        point: TargetPoint,
        #[command(flatten)]
        round: Triple,
    },
    /// Dual of a blade, or the dual round about a center.
    Dual {
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["center", "r2"])]
        blade: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "r2")]
        center: Option<TargetPoint>,
        #[arg(long, allow_hyphen_values = true, requires = "center")]
        r2: Option<f64>,
    },
    /// Stabilizer subalgebra of a fixed multivector.
    LittleGroup {
        #[arg(long, allow_hyphen_values = true)]
        fix: String,
    },
    /// Classify the span of a set of bivectors.
    Classify {
        #[arg(long = "basis", allow_hyphen_values = true, required = true)]
        basis: Vec<String>,
    },
    /// Compare the little algebras of two fixed multivectors.
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Split a bivector into translation, tangent and remaining parts.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        bivector: String,
    },
    /// Truncated so(2,1) representation.
    Rep(RepArgs),
    /// Run the seeded invariant suite.
    Selftest {
        #[arg(long, default_value_t = invariants::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        /// Negative control: run with a corrupted metric.
        #[arg(long, hide = true)]
        corrupt_metric: bool,
    },
}

#[derive(Args, Debug)]
struct Triple {
    #[arg(long, allow_hyphen_values = true)]
    a: TargetPoint,
    #[arg(long, allow_hyphen_values = true)]
    b: TargetPoint,
    #[arg(long, allow_hyphen_values = true)]
    c: TargetPoint,
}

#[derive(Args, Debug)]
struct RepArgs {
    #[arg(long, value_enum)]
    series: SeriesArg,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    eps: f64,
    #[arg(long)]
    k: Option<f64>,
    /// Truncation half-width.
    #[arg(long = "M", default_value_t = 10)]
    m: usize,
    /// Run the commutator and Casimir checks.
    #[arg(long)]
    check: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    Standard,
    Paper,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesArg {
    Principal,
    DiscretePlus,
    DiscreteMinus,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidSignature(_)
            | Error::InvalidLabel(_)
            | Error::InvalidTruncation(_)
            | Error::DimensionMismatch { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

enum Model {
    Conformal(ConformalModel),
    Bare(Arc<Signature>),
}

impl Model {
    fn load(spec: &str) -> CliResult<Self> {
        if Signature::target_of_alias(spec).is_some() {
            return Ok(Model::Conformal(ConformalModel::from_alias(spec)?));
        }
        Ok(Model::Bare(Arc::new(Signature::parse(spec)?)))
    }

    fn conformal(&self) -> CliResult<&ConformalModel> {
        match self {
            Model::Conformal(m) => Ok(m),
            Model::Bare(s) => Err(Failure::Usage(format!(
                "{s} has no conformal structure; use a model alias"
            ))),
        }
    }

    fn signature(&self) -> &Arc<Signature> {
        match self {
            Model::Conformal(m) => m.signature(),
            Model::Bare(s) => s,
        }
    }

    fn parse(&self, text: &str) -> CliResult<Multivector> {
        Ok(match self {
            Model::Conformal(m) => m.parse(text)?,
            Model::Bare(s) => Multivector::parse(s, text)?,
        })
    }
}

/// Keyed values kept in insertion order so JSON and text agree.
struct Report {
    fields: Vec<(&'static str, serde_json::Value)>,
}

impl Report {
    fn new() -> Self {
        Self {
            fields: vec![("schema", SCHEMA.into())],
        }
    }

    fn with(mut self, key: &'static str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).expect("plain data serializes");
        self.fields.push((key, v));
        self
    }

    fn render(&self, output: Output) -> String {
        match output {
            Output::Json => {
                let mut s = String::from("{");
                for (i, (k, v)) in self.fields.iter().enumerate() {
                    if i > 0 {
                        s.push(',');
                    }
                    s.push_str(&serde_json::to_string(k).expect("string"));
                    s.push(':');
                    s.push_str(&serde_json::to_string(v).expect("value"));
                }
                s.push('}');
                s
            }
            Output::Text => self
                .fields
                .iter()
                .map(|(k, v)| match v {
                    serde_json::Value::String(s) => format!("{k}: {s}"),
                    other => format!("{k}: {other}"),
                })
                .collect::<Vec<_>>()
                .join("\n"),
        }
    }
}

#[derive(Serialize)]
struct RoundJson {
    kind: &'static str,
    grade: usize,
    blade: String,
    representation: &'static str,
}

impl From<&RoundBlade> for RoundJson {
    fn from(r: &RoundBlade) -> Self {
        Self {
            kind: r.kind.as_str(),
            grade: r.grade(),
            blade: r.blade.to_string(),
            representation: r.representation.as_str(),
        }
    }
}

fn round_report(r: &RoundBlade) -> Report {
    let j = RoundJson::from(r);
    Report::new()
        .with("kind", j.kind)
        .with("grade", j.grade)
        .with("blade", j.blade)
        .with("representation", j.representation)
}

fn rank_threshold(flag: Option<f64>) -> CliResult<f64> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var("CGA_EPSILON") {
            Ok(v) => v
                .trim()
                .parse::<f64>()
                .map_err(|e| Failure::Usage(format!("CGA_EPSILON={v:?}: {e}")))?,
            Err(_) => DEFAULT_RANK_TOL,
        },
    };
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Failure::Usage(format!("rank threshold must be positive, got {tol}")));
    }
    Ok(tol)
}

fn stabilizer_report(st: &StabilizerResult) -> Report {
    Report::new()
        .with("fixed", st.fixed.to_string())
        .with("dim", st.dim())
        .with("label", st.label.name.as_str())
        .with("killing_rank", st.label.killing_rank)
        .with("killing_signature", signature_triple(st.label.killing_signature))
        .with("rank", st.rank)
        .with("basis", basis_text(&st.algebra))
        .with("structure_constants", st.algebra.structure_constants())
}

fn signature_triple((p, n, z): (usize, usize, usize)) -> [usize; 3] {
    [p, n, z]
}

fn basis_text(alg: &LieAlgebraPresentation) -> Vec<String> {
    alg.basis().iter().map(Multivector::to_string).collect()
}

fn rep_label(args: &RepArgs) -> CliResult<RepLabel> {
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| Failure::Usage(format!("--{name} is required for this series")))
    };
    Ok(match args.series {
        SeriesArg::Principal => RepLabel::principal(need(args.s, "s")?, args.eps)?,
        SeriesArg::DiscretePlus => RepLabel::discrete_plus(need(args.k, "k")?)?,
        SeriesArg::DiscreteMinus => RepLabel::discrete_minus(need(args.k, "k")?)?,
    })
}

fn run(cli: Cli) -> CliResult<(Report, bool)> {
    if let Command::Selftest {
        seed,
        cases,
        corrupt_metric,
    } = cli.command
    {
        let outcomes = invariants::run_selftest(&SelftestConfig {
            seed,
            cases,
            corrupt_metric,
        });
        let ok = invariants::all_passed(&outcomes);
        let props: Vec<_> = outcomes
            .iter()
            .map(|o| {
                serde_json::json!({
                    "module": o.module,
                    "name": o.name,
                    "passed": o.passed,
                    "detail": o.detail,
                })
            })
            .collect();
        if cli.output == Output::Text {
            eprint!("{}", invariants::format_report(&outcomes));
        }
        let report = Report::new().with("seed", seed).with("passed", ok).with("properties", props);
        return Ok((report, ok));
    }

    let model = Model::load(&cli.model)?;
    let report = match cli.command {
        Command::Embed { point } => {
            let m = model.conformal()?;
            let p = m.embed_point(&point)?;
            Report::new()
                .with("point", point.coords())
                .with("vector", p.to_string())
                .with("dot_infinity", m.dot_infinity(&p)?)
        }
        Command::Project { vector } => {
            let m = model.conformal()?;
            let v = model.parse(&vector)?;
            Report::new().with("point", m.project_point(&v)?.coords())
        }
        Command::Dist { a, b, convention } => {
            let m = model.conformal()?;
            let conv = match convention {
                ConventionArg::Standard => Convention::Standard,
                ConventionArg::Paper => Convention::Paper,
            };
            Report::new().with("d2", m.squared_distance(&a, &b, conv)?)
        }
        Command::Circle(t) => {
            let m = model.conformal()?;
            let r = m.circle_through(&t.a, &t.b, &t.c)?;
            if r.kind == RoundKind::Degenerate {
                return Err(Failure::Domain("degenerate round: points coincide".into()));
            }
            round_report(&r)
        }
        Command::Incidence { point, round } => {
            let m = model.conformal()?;
            let r = m.circle_through(&round.a, &round.b, &round.c)?;
            if r.kind == RoundKind::Degenerate {
                return Err(Failure::Domain("degenerate round: points coincide".into()));
            }
            let d = m.dualize(&r);
            Report::new()
                .with("kind", r.kind.as_str())
                .with("direct", m.incidence_direct(&point, &r)?)
                .with("dual", m.incidence_dual(&point, &d)?)
                .with("incident", m.is_incident(&point, &r)?)
        }
        Command::Dual { blade, center, r2 } => match (blade, center, r2) {
            (Some(text), _, _) => {
                let b = model.parse(&text)?;
                let d = b.dual();
                match &model {
                    Model::Conformal(m) if d.homogeneous_grade().is_some() => {
                        round_report(&m.round(d, Representation::Dual)?)
                    }
                    _ => Report::new().with("dual", d.to_string()),
                }
            }
            (None, Some(c), Some(r2)) => round_report(&model.conformal()?.dual_round(&c, r2)?),
            _ => return Err(Failure::Usage("give --blade or both --center and --r2".into())),
        },
        Command::LittleGroup { fix } => {
            let tol = rank_threshold(cli.rank_threshold)?;
            let alg = isometry_algebra(model.signature());
            let st = stabilizer_of_with_tol(&model.parse(&fix)?, &alg, tol)?;
            stabilizer_report(&st)
        }
        Command::Classify { basis } => {
            let elements = basis.iter().map(|b| model.parse(b)).collect::<CliResult<Vec<_>>>()?;
            let alg = LieAlgebraPresentation::from_basis(model.signature(), elements)?;
            let label = classify(&alg);
            Report::new()
                .with("dim", label.dim)
                .with("label", label.name.as_str())
                .with("killing_rank", label.killing_rank)
                .with("killing_signature", signature_triple(label.killing_signature))
        }
        Command::Compare { a, b } => {
            let tol = rank_threshold(cli.rank_threshold)?;
            let alg = isometry_algebra(model.signature());
            let sa = stabilizer_of_with_tol(&model.parse(&a)?, &alg, tol)?;
            let sb = stabilizer_of_with_tol(&model.parse(&b)?, &alg, tol)?;
            Report::new()
                .with("a", sa.label.name.as_str())
                .with("b", sb.label.name.as_str())
                .with("verdict", compare_little_algebras(&sa, &sb).as_str())
        }
        Command::Decompose { bivector } => {
            let m = model.conformal()?;
            let d = decompose_infinity_generator(m, &model.parse(&bivector)?)?;
            Report::new()
                .with("translation_part", d.translation_part.to_string())
                .with("tangent_part", d.tangent_part.to_string())
                .with("remainder", d.remainder.to_string())
                .with("translation_coeffs", &d.translation_coeffs)
                .with("tangent_coeffs", &d.tangent_coeffs)
        }
        Command::Rep(args) => {
            let label = rep_label(&args)?;
            let rep = build_rep(label, args.m)?;
            let r = rep.interior();
            let sample: Vec<f64> = r
                .clone()
                .step_by((r.len() / 5).max(1))
                .take(5)
                .map(|i| rep.casimir[(i, i)].re)
                .collect();
            let mut report = Report::new()
                .with("series", label.series_name())
                .with("q", label.casimir_q())
                .with("two_sided", so21::two_sided_spectrum_check(&label))
                .with("weights", &rep.weights)
                .with("spectrum_sample", sample);
            if args.check {
                let c = rep.check_commutators();
                let q = rep.check_casimir();
                report = report
                    .with("interior_commutator_residual", c.max_interior())
                    .with("interior_casimir_residual", q.max_interior())
                    .with("full_commutator_residual", c.max_full())
                    .with("casimir_commutator_residual", rep.casimir_commutator_residual());
            }
            report
        }
        Command::Selftest { .. } => unreachable!("handled above"),
    };
    Ok((report, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let output = cli.output;
    match run(cli) {
        Ok((report, ok)) => {
            println!("{}", report.render(output));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
