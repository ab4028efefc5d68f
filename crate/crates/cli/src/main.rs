use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use isoptica::angle::Angle;
use isoptica::render::{self, CurveSelector, Format, RenderJob, FIGURE_PANELS};
use isoptica::validate::{validate, GridConfig};
use isoptica::{CycloidKind, CycloidSpec, RationalShape, DEFAULT_TOLERANCE};

/// Isoptic curves of hypocycloids and epicycloids.
#[derive(Debug, Parser)]
#[command(name = "isoptica", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a cycloid or one of its isoptics and write SVG, CSV or JSON.
    Render(RenderArgs),
    /// Cross-check all isoptic routes against the tangent-intersection oracle.
    Validate(ValidateArgs),
    /// Write the five reference figure panels as SVG files.
    Figures(FiguresArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Hypo,
    Epi,
}

impl From<KindArg> for CycloidKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Hypo => CycloidKind::Hypocycloid,
            KindArg::Epi => CycloidKind::Epicycloid,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CurveArg {
    Base,
    Isoptic,
    Trochoid,
    CircleCheck,
}

impl From<CurveArg> for CurveSelector {
    fn from(c: CurveArg) -> Self {
        match c {
            CurveArg::Base => CurveSelector::Base,
            CurveArg::Isoptic => CurveSelector::Isoptic,
            CurveArg::Trochoid => CurveSelector::Trochoid,
            CurveArg::CircleCheck => CurveSelector::CircleCheck,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Svg,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Svg => Format::Svg,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Args)]
struct CurveArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Numerator of the rolling radius p/q.
    #[arg(long)]
    p: u32,
    /// Denominator of the rolling radius p/q.
    #[arg(long)]
    q: u32,
}

impl CurveArgs {
    fn spec(&self) -> Result<CycloidSpec> {
        let shape = RationalShape::new(self.p, self.q)?;
        let spec = CycloidSpec::new(self.kind.into(), shape)?;
        if let Some(note) = spec.caveat() {
            eprintln!("warning: {note}");
        }
        Ok(spec)
    }
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[command(flatten)]
    curve_args: CurveArgs,
    /// Tangent angle, in radians or as a multiple of pi ("pi/3", "2pi/3").
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Angle>,
    /// Curve to sample; defaults to `isoptic` when --alpha is given, else `base`.
    #[arg(long, value_enum)]
    curve: Option<CurveArg>,
    #[arg(long, default_value_t = render::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, value_enum, default_value = "svg")]
    format: FormatArg,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    /// TOML grid description (keys: hypo, epi, alphas, samples, seed).
    #[arg(long, conflicts_with_all = ["kind", "p", "q", "alpha"])]
    grid: Option<PathBuf>,
    /// Validate a single cell instead of a grid.
    #[arg(long, value_enum, requires_all = ["p", "q", "alpha"])]
    kind: Option<KindArg>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Angle>,
    #[arg(long, env = "ISOPTICA_TOLERANCE", default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Override the number of t samples per cell.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct FiguresArgs {
    #[arg(long, default_value = "figures")]
    out_dir: PathBuf,
    #[arg(long, default_value_t = render::DEFAULT_SAMPLES)]
    samples: usize,
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .context("cannot write to standard output"),
    }
}

fn run_render(args: &RenderArgs) -> Result<()> {
    let spec = args.curve_args.spec()?;
    let curve = match (args.curve, args.alpha) {
        (Some(c), _) => c.into(),
        (None, Some(_)) => CurveSelector::Isoptic,
        (None, None) => CurveSelector::Base,
    };
    let job = RenderJob {
        curve,
        spec,
        alpha: args.alpha,
        samples: args.samples,
        format: args.format.into(),
    };
    let text = render::run(&job)?;
    write_output(args.out.as_deref(), &text)
}

fn run_validate(args: &ValidateArgs) -> Result<bool> {
    let mut config = match (&args.grid, args.kind) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
            toml::from_str::<GridConfig>(&text).with_context(|| format!("invalid grid {}", path.display()))?
        }
        (None, Some(kind)) => {
            let (Some(p), Some(q), Some(alpha)) = (args.p, args.q, args.alpha) else {
                bail!("--kind needs --p, --q and --alpha");
            };
            GridConfig::single(CycloidSpec::new(kind.into(), RationalShape::new(p, q)?)?, alpha)
        }
        (None, None) => GridConfig::default(),
    };
    if let Some(samples) = args.samples {
        config.samples = samples;
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if args.tolerance.is_nan() || args.tolerance <= 0.0 {
        bail!("tolerance must be positive (got {})", args.tolerance);
    }
    let report = validate(&config, args.tolerance)?;
    print!("{report}");
    for cell in report.failures() {
        eprintln!("cell over tolerance: {} (max error {:.3e})", cell.id(), cell.max_error());
    }
    Ok(report.passed())
}

fn run_figures(args: &FiguresArgs) -> Result<()> {
    fs::create_dir_all(&args.out_dir).with_context(|| format!("cannot create {}", args.out_dir.display()))?;
    for panel in FIGURE_PANELS {
        let job = RenderJob {
            curve: CurveSelector::Isoptic,
            spec: panel.spec(),
            alpha: Some(panel.alpha()),
            samples: args.samples,
            format: Format::Svg,
        };
        let path = args.out_dir.join(format!("{}.svg", panel.name));
        write_output(Some(&path), &render::run(&job)?)?;
        println!("{}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Render(args) => run_render(args).map(|()| true),
        Command::Validate(args) => run_validate(args),
        Command::Figures(args) => run_figures(args).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
