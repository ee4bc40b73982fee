use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tenfold::models::{make_model, BlochModel, ModelError, ModelKind, ModelParams, PauliTerm};
use tenfold::symmetry::AZClass;

use crate::spec::{SpecFile, SymmetrySpec};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Sphere,
    Torus,
}

#[derive(Parser, Debug)]
#[command(name = "tenfold", version, about = "Tenfold-way classification, K-theory tables and bulk invariants")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print the periodic table with its index metadata; exits 0 iff the
    /// generated and transcribed tables agree.
    Table(OutputArgs),
    /// Evaluate a KR (or KQ) group of a sphere or torus.
    Kr(KrArgs),
    /// Determine the symmetry class of a model from its symmetry witnesses.
    Classify(ModelArgs),
    /// Compute the strong bulk invariant of a model.
    Invariant(InvariantArgs),
    /// Compute the invariant over a range of one parameter.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct KrArgs {
    #[arg(long, value_enum, default_value = "sphere")]
    space: Space,
    /// Degree `i` of KR^{-i}, taken mod 8.
    #[arg(long, allow_hyphen_values = true)]
    i: i64,
    #[arg(long)]
    d: usize,
    /// Reduced group (drop the point summand).
    #[arg(long)]
    reduced: bool,
    /// KQ instead of KR.
    #[arg(long)]
    kq: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ModelArgs {
    /// Built-in model name.
    #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
    model: Option<String>,
    /// Model spec file.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Parameter assignments `name=value,...`; may be repeated.
    #[arg(long = "set", allow_hyphen_values = true)]
    set: Vec<String>,
    /// Grid points per axis (even).
    #[arg(long, default_value_t = 32)]
    grid: usize,
    /// Relative tolerance of the symmetry checks.
    #[arg(long, default_value_t = tenfold::symmetry::DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct InvariantArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Symmetry class to compute the invariant of (default: the detected one).
    #[arg(long)]
    class: Option<AZClass>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long)]
    class: Option<AZClass>,
    /// Parameter to vary.
    #[arg(long)]
    axis: String,
    /// `start:stop:step`.
    #[arg(long, allow_hyphen_values = true)]
    range: String,
}

/// A validated command line.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub enum Command {
    Table,
    Kr { space: Space, i: i64, d: usize, reduced: bool, kq: bool },
    Classify(ModelConfig),
    Invariant { model: ModelConfig, class: Option<AZClass> },
    Sweep { model: ModelConfig, class: Option<AZClass>, axis: String, range: SweepRange },
}

#[derive(Clone, Debug)]
pub enum ModelSource {
    Builtin(ModelKind),
    Terms { name: String, dim: usize, terms: Vec<String> },
}

#[derive(Clone, Debug)]
pub struct ModelConfig {
    pub source: ModelSource,
    pub params: ModelParams<f64>,
    pub grid: usize,
    pub tol: f64,
    /// Operators from the spec file; empty means the built-in witnesses (or
    /// a Pauli sweep for models without any).
    pub symmetries: Vec<SymmetrySpec>,
}

impl ModelConfig {
    pub fn build(&self, params: &ModelParams<f64>) -> Result<BlochModel<f64>, ModelError> {
        match &self.source {
            ModelSource::Builtin(kind) => make_model(kind.name(), params),
            ModelSource::Terms { name, dim, terms } => {
                let terms = terms.iter().map(|t| PauliTerm::parse(t, params)).collect::<Result<Vec<_>, _>>()?;
                BlochModel::from_terms(name.clone(), *dim, params.clone(), terms)
            }
        }
    }

    pub fn name(&self) -> &str {
        match &self.source {
            ModelSource::Builtin(kind) => kind.name(),
            ModelSource::Terms { name, .. } => name,
        }
    }
}

/// `start:stop:step` with `step > 0` and `stop >= start`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl SweepRange {
    pub fn parse(src: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("invalid range `{src}`: expected start:stop:step"));
        let parts: Vec<f64> =
            src.split(':').map(|p| p.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|_| bad())?;
        let [start, stop, step] = parts[..] else { return Err(bad()) };
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err(bad());
        }
        if step <= 0.0 {
            return Err(CliError::Usage(format!("invalid range `{src}`: step must be positive")));
        }
        if stop < start {
            return Err(CliError::Usage(format!("invalid range `{src}`: stop is below start")));
        }
        Ok(Self { start, stop, step })
    }

    /// `floor((stop − start)/step) + 1`, with a little slack for decimal steps.
    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value(&self, i: usize) -> f64 {
        self.start + i as f64 * self.step
    }
}

/// Parses a full argument vector, program name first.
pub fn parse_args<I, S>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let (command, output, default_format) = match cli.command {
        Cmd::Table(output) => (Command::Table, output, Format::Text),
        Cmd::Kr(a) => {
            (Command::Kr { space: a.space, i: a.i, d: a.d, reduced: a.reduced, kq: a.kq }, a.output, Format::Text)
        }
        Cmd::Classify(mut m) => {
            let output = take_output(&mut m);
            (Command::Classify(model_config(m)?), output, Format::Text)
        }
        Cmd::Invariant(mut a) => {
            let output = take_output(&mut a.model);
            (Command::Invariant { model: model_config(a.model)?, class: a.class }, output, Format::Text)
        }
        Cmd::Sweep(mut a) => {
            let output = take_output(&mut a.model);
            let range = SweepRange::parse(&a.range)?;
            let model = model_config(a.model)?;
            if a.axis.trim().is_empty() {
                return Err(CliError::Usage("--axis must name a parameter".into()));
            }
            (Command::Sweep { model, class: a.class, axis: a.axis, range }, output, Format::Csv)
        }
    };
    Ok(RunConfig { command, format: output.format.unwrap_or(default_format), out: output.out })
}

fn take_output(m: &mut ModelArgs) -> OutputArgs {
    OutputArgs { format: m.output.format.take(), out: m.output.out.take() }
}

fn model_config(m: ModelArgs) -> Result<ModelConfig, CliError> {
    if m.grid < 2 || !m.grid.is_multiple_of(2) {
        return Err(CliError::Usage(format!("--grid must be a positive even number, got {}", m.grid)));
    }
    if !(m.tol > 0.0 && m.tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", m.tol)));
    }
    let mut overrides = ModelParams::new();
    for s in &m.set {
        overrides = overrides.merged(&ModelParams::parse_assignments(s)?);
    }

    let (source, params, symmetries) = match (m.model, m.spec) {
        (Some(name), _) => (ModelSource::Builtin(name.parse()?), overrides, Vec::new()),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(&path).map_err(|e| match e.kind() {
                std::io::ErrorKind::NotFound => CliError::FileNotFound(path.clone()),
                _ => CliError::Io(e),
            })?;
            let bad = |reason: String| CliError::BadSpec { path: path.display().to_string(), reason };
            let spec = SpecFile::parse(&text).map_err(bad)?;
            let symmetries = spec.symmetries().map_err(bad)?;
            let params = spec.params().merged(&overrides);
            let source = if spec.model.terms.is_empty() {
                let kind: ModelKind = spec.model.name.parse().map_err(|e: ModelError| bad(e.to_string()))?;
                if spec.model.dim.is_some_and(|d| d != kind.dim()) {
                    return Err(bad(format!("{kind} is {}-dimensional", kind.dim())));
                }
                ModelSource::Builtin(kind)
            } else {
                let dim = spec.model.dim.ok_or_else(|| bad("[model] needs `dim` when `terms` are given".into()))?;
                ModelSource::Terms { name: spec.model.name.clone(), dim, terms: spec.model.terms.clone() }
            };
            (source, params, symmetries)
        }
        (None, None) => return Err(CliError::Usage("one of --model or --spec is required".into())),
    };
    let config = ModelConfig { source, params, grid: m.grid, tol: m.tol, symmetries };
    // fail early on missing parameters or malformed terms
    config.build(&config.params)?;
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(line: &str) -> Result<RunConfig, CliError> {
        parse_args(line.split_whitespace())
    }

    #[test]
    fn table_and_kr() {
        let cfg = parse("tenfold table --format json").unwrap();
        assert!(matches!(cfg.command, Command::Table));
        assert_eq!(cfg.format, Format::Json);
        let cfg = parse("tenfold kr --space torus --i 4 --d 3 --reduced").unwrap();
        assert!(matches!(cfg.command, Command::Kr { space: Space::Torus, i: 4, d: 3, reduced: true, kq: false }));
        assert_eq!(cfg.format, Format::Text);
    }

    #[test]
    fn invariant_binds_params() {
        let cfg = parse("tenfold invariant --model kitaev_chain --set mu=0.5,t=1,delta=1 --grid 32").unwrap();
        let Command::Invariant { model, class } = cfg.command else { panic!() };
        assert_eq!(model.params.get("mu"), Some(0.5));
        assert_eq!(model.grid, 32);
        assert_eq!(class, None);
    }

    #[test]
    fn sweep_range_counts_points() {
        let cfg = parse("tenfold sweep --model kitaev_chain --set mu=0,t=1,delta=1 --axis mu --range -2:2:0.05 --grid 32 --out sweep.csv")
            .unwrap();
        let Command::Sweep { range, axis, .. } = cfg.command else { panic!() };
        assert_eq!(axis, "mu");
        assert_eq!(range.len(), 81);
        assert_eq!(cfg.format, Format::Csv);
        assert_eq!(cfg.out.as_deref(), Some(std::path::Path::new("sweep.csv")));
        assert_eq!(SweepRange::parse("0:1:0.3").unwrap().len(), 4);
        assert_eq!(SweepRange::parse("1:1:0.5").unwrap().len(), 1);
    }

    #[test]
    fn usage_errors() {
        for line in [
            "tenfold",
            "tenfold frobnicate",
            "tenfold table --format xml",
            "tenfold invariant --model kitaev_chain --set mu=0,t=1,delta=1 --grid 31",
            "tenfold invariant --model kitaev_chain --set mu=0 --grid 32",
            "tenfold invariant --model nope --grid 32",
            "tenfold sweep --model kitaev_chain --set mu=0,t=1,delta=1 --axis mu --range 0:1:0",
            "tenfold sweep --model kitaev_chain --set mu=0,t=1,delta=1 --axis mu --range 0:1",
            "tenfold classify --model kitaev_chain --spec x.toml",
        ] {
            let err = parse(line).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{line}: {err}");
        }
    }

    #[test]
    fn missing_spec_file() {
        let err = parse("tenfold classify --spec /nonexistent/model.toml").unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
