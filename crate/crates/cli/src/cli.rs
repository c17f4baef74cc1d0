use clap::{Args, Parser, Subcommand, ValueEnum};
use rhp_core::numeric::{parse_rational, ParamN, Rational};

#[derive(Debug, Parser)]
#[command(
    name = "rhp",
    version,
    about = "Exact relativistic Hermite, Gegenbauer and Hermite polynomials"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Comma-separated parameter set for `verify`, e.g. `2,3,7/2`.
    #[arg(long, global = true, value_parser = parse_param_list, allow_hyphen_values = true)]
    pub params: Option<ParamList>,

    #[arg(long = "n-max", global = true, default_value_t = 8)]
    pub n_max: usize,

    /// Series truncation order.
    #[arg(long, global = true, default_value_t = 12)]
    pub order: usize,

    #[arg(long = "fail-fast", global = true)]
    pub fail_fast: bool,

    /// Test hook: `family:<kind>:<n>:<index>[:<delta>]` or
    /// `moment:<kind>:<k>[:<delta>]`.
    #[arg(long = "inject-fault", global = true, hide = true)]
    pub inject_fault: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print coefficients in ascending degree.
    Coeffs(FamilyArgs),
    /// Evaluate a family member at a rational point.
    Eval {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        x: Rational,
    },
    /// Expand a generating function next to its family-side series.
    Series(SeriesArgs),
    /// Turán determinant and its closed form.
    Turan {
        #[arg(long, value_enum)]
        family: TuranFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_param, allow_hyphen_values = true)]
        param: ParamN,
    },
    /// Run identity suites over the `(n, N)` grid.
    Verify {
        /// Comma-separated suite names, or `all`.
        #[arg(long, default_value = "all")]
        suites: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Hermite,
    Gegenbauer,
    Rhp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormalizationName {
    Raw,
    Normalized,
    Scaled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TuranFamily {
    Rhp,
    Gegenbauer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    GenfuncRhp,
    Feldheim,
    FeldheimRhp,
    Shifted,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_param, allow_hyphen_values = true)]
    pub param: Option<ParamN>,
    #[arg(long, value_enum, default_value_t = NormalizationName::Raw)]
    pub normalization: NormalizationName,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub kind: SeriesKind,
    #[arg(long, value_parser = parse_param, allow_hyphen_values = true)]
    pub param: ParamN,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub x: Option<Rational>,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub cos: Option<Rational>,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub sin: Option<Rational>,
    /// Index shift for `shifted`.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
}

#[derive(Debug, Clone)]
pub struct ParamList(pub Vec<ParamN>);

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_param(s: &str) -> Result<ParamN, String> {
    s.parse::<ParamN>().map_err(|e| e.to_string())
}

fn parse_param_list(s: &str) -> Result<ParamList, String> {
    let params = s
        .split(',')
        .map(|p| parse_param(p.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    if params.is_empty() {
        return Err("empty parameter list".into());
    }
    Ok(ParamList(params))
}
