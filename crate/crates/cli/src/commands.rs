use std::io::Write;

use rhp_core::algebra::Poly;
use rhp_core::families::{construct, FamilyId, FamilyKind, Normalization};
use rhp_core::identities::{
    feldheim_rhp_sides, feldheim_sides, genfunc_rhp_sides, shifted_genfunc_sides, SeriesSides,
};
use rhp_core::numeric::{fmt_rational, ParamN, Rational};
use rhp_core::report::CheckResult;
use rhp_core::suite::{self, default_params, Suite, SuiteConfig, SuiteReport};
use rhp_core::turan::{hankel, poly_determinant, turan_closed_gegenbauer, turan_closed_rhp};
use rhp_core::Error;
use serde_json::json;

use crate::cli::{
    Cli, FamilyArgs, FamilyName, Format, NormalizationName, SeriesArgs, SeriesKind, TuranFamily,
};

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

/// A command error and the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Pole(_) | Error::DivisionByZero | Error::Series(_) => EXIT_PRECONDITION,
            Error::InvalidParameter(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = Result<i32, Failure>;

fn csv_writer() -> csv::Writer<std::io::Stdout> {
    csv::Writer::from_writer(std::io::stdout())
}

fn io_failure(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_FAILURE,
        message: e.to_string(),
    }
}

fn family_id(args: &FamilyArgs) -> Result<FamilyId, Failure> {
    let kind = match args.family {
        FamilyName::Hermite => FamilyKind::Hermite,
        FamilyName::Gegenbauer => FamilyKind::Gegenbauer,
        FamilyName::Rhp => FamilyKind::Rhp,
    };
    let normalization = match args.normalization {
        NormalizationName::Raw => Normalization::Raw,
        NormalizationName::Normalized => Normalization::PaperNormalized,
        NormalizationName::Scaled => Normalization::SqrtNScaled,
    };
    let id = FamilyId {
        kind,
        n: args.n,
        param: args.param.clone(),
        normalization,
    };
    id.validate().map_err(|e| usage(e.to_string()))?;
    Ok(id)
}

pub fn coeffs(cli: &Cli, args: &FamilyArgs) -> Outcome {
    let p = construct(&family_id(args)?)?;
    match cli.format {
        Format::Json => println!("{}", json!(p.to_strings())),
        Format::Text => println!("{p}"),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["degree", "coefficient"])
                .map_err(io_failure)?;
            for (j, c) in p.to_strings().iter().enumerate() {
                w.write_record([j.to_string(), c.clone()])
                    .map_err(io_failure)?;
            }
            w.flush().map_err(io_failure)?;
        }
    }
    Ok(0)
}

pub fn eval(cli: &Cli, args: &FamilyArgs, x: &Rational) -> Outcome {
    let v = construct(&family_id(args)?)?.eval(x);
    let v = fmt_rational(&v);
    match cli.format {
        Format::Json => println!("{}", json!(v)),
        Format::Text => println!("{v}"),
        Format::Csv => println!("x,value\n{},{v}", fmt_rational(x)),
    }
    Ok(0)
}

fn require(name: &str, v: &Option<Rational>) -> Result<Rational, Failure> {
    v.clone()
        .ok_or_else(|| usage(format!("--{name} is required for this series kind")))
}

pub fn series(cli: &Cli, args: &SeriesArgs) -> Outcome {
    let order = cli.order;
    let n = &args.param;
    let sides: SeriesSides = match args.kind {
        SeriesKind::GenfuncRhp => genfunc_rhp_sides(n, &require("x", &args.x)?, order)?,
        SeriesKind::FeldheimRhp => feldheim_rhp_sides(n, &require("x", &args.x)?, order)?,
        SeriesKind::Shifted => shifted_genfunc_sides(n, args.k, &require("x", &args.x)?, order)?,
        SeriesKind::Feldheim => feldheim_sides(
            n,
            &require("cos", &args.cos)?,
            &require("sin", &args.sin)?,
            order,
        )?,
    };
    let closed = sides.closed.to_strings();
    let family = sides.family.to_strings();
    let equal = closed == family;
    match cli.format {
        Format::Json => println!(
            "{}",
            json!({ "series": closed, "family": family, "equal": equal })
        ),
        Format::Text => {
            println!("series: {}", closed.join(", "));
            println!("family: {}", family.join(", "));
            println!("equal:  {equal}");
        }
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["k", "series", "family"])
                .map_err(io_failure)?;
            for (k, (a, b)) in closed.iter().zip(&family).enumerate() {
                w.write_record([k.to_string(), a.clone(), b.clone()])
                    .map_err(io_failure)?;
            }
            w.flush().map_err(io_failure)?;
        }
    }
    Ok(if equal { 0 } else { EXIT_FAILURE })
}

pub fn turan(cli: &Cli, family: TuranFamily, n: usize, param: &ParamN) -> Outcome {
    let (kind, closed) = match family {
        TuranFamily::Rhp => (FamilyKind::Rhp, Poly::constant(turan_closed_rhp(n, param)?)),
        TuranFamily::Gegenbauer => (FamilyKind::Gegenbauer, turan_closed_gegenbauer(n, param)?),
    };
    let det = poly_determinant(&hankel(kind, n, param)?.rows())?;
    let equal = det == closed;
    let render = |p: &Poly| {
        if p.degree().unwrap_or(0) == 0 {
            fmt_rational(&p.coeff(0))
        } else {
            p.to_string()
        }
    };
    let (d, c) = (render(&det), render(&closed));
    match cli.format {
        Format::Json => println!(
            "{}",
            json!({ "determinant": d, "closed_form": c, "equal": equal })
        ),
        Format::Text => println!("determinant: {d}\nclosed form: {c}\nequal: {equal}"),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["determinant", "closed_form", "equal"])
                .map_err(io_failure)?;
            w.write_record([d, c, equal.to_string()])
                .map_err(io_failure)?;
            w.flush().map_err(io_failure)?;
        }
    }
    Ok(if equal { 0 } else { EXIT_FAILURE })
}

pub fn verify(cli: &Cli, suites: &str) -> Outcome {
    let suites = Suite::parse_list(suites).map_err(|e| usage(e.to_string()))?;
    let config = SuiteConfig {
        n_max: cli.n_max,
        params: cli
            .params
            .as_ref()
            .map_or_else(default_params, |p| p.0.clone()),
        order: cli.order,
        suites,
        fail_fast: cli.fail_fast,
    };
    config.validate().map_err(|e| usage(e.to_string()))?;
    let report = SuiteReport::new(config.clone(), suite::run(&config));
    match cli.format {
        Format::Json => {
            let s = serde_json::to_string_pretty(&report).map_err(io_failure)?;
            println!("{s}");
        }
        Format::Csv => write_csv(&report.results)?,
        Format::Text => write_text(&report)?,
    }
    Ok(if report.all_passed() { 0 } else { EXIT_FAILURE })
}

fn flat_params(r: &CheckResult) -> String {
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={}", v.render()))
        .collect::<Vec<_>>()
        .join(";")
}

fn write_csv(results: &[CheckResult]) -> Result<(), Failure> {
    let mut w = csv_writer();
    w.write_record(["name", "params", "status", "witness", "notes"])
        .map_err(io_failure)?;
    for r in results {
        let witness = r
            .witness
            .as_ref()
            .map(|w| w.to_strings().join(";"))
            .unwrap_or_default();
        w.write_record([
            r.name.as_str(),
            &flat_params(r),
            r.status(),
            &witness,
            &r.notes,
        ])
        .map_err(io_failure)?;
    }
    w.flush().map_err(io_failure)
}

fn write_text(report: &SuiteReport) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    for r in &report.results {
        write!(out, "{:4} {:<26} {}", r.status(), r.name, flat_params(r)).map_err(io_failure)?;
        if !r.notes.is_empty() {
            write!(out, "  ({})", r.notes).map_err(io_failure)?;
        }
        writeln!(out).map_err(io_failure)?;
        if let Some(w) = &r.witness {
            writeln!(out, "     witness: [{}]", w.to_strings().join(", ")).map_err(io_failure)?;
        }
    }
    let s = report.summary;
    writeln!(
        out,
        "{} checks: {} passed, {} failed, {} skipped",
        s.total, s.passed, s.failed, s.skipped
    )
    .map_err(io_failure)
}
