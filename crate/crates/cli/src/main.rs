//! `pdmosc`: exact classical/quantum solutions of the asymmetric
//! position-dependent-mass oscillator, with a self-verification suite and
//! per-figure data emitters.
//!
//! Exit codes: 0 success, 1 configuration error, 2 domain error,
//! 3 verification failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pdmosc_cli::config::{
    Experiment, Options, OutputConfig, OutputFormat, ParamsConfig, RunConfig,
};
use pdmosc_cli::experiments::run_experiment;
use pdmosc_cli::figures::figure_manifest;

#[derive(Parser)]
#[command(name = "pdmosc", about = "Deformed oscillator with position-dependent mass: exact solutions, oracles, figure data")]
struct Cli {
    /// JSON run configuration; flags override its fields
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file (defaults to the config path or stdout)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// csv or json
    #[arg(long, global = true)]
    format: Option<String>,
    #[command(flatten)]
    params: ParamFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct ParamFlags {
    #[arg(long, global = true)]
    m0: Option<f64>,
    #[arg(long, global = true)]
    omega0: Option<f64>,
    #[arg(long, global = true)]
    hbar: Option<f64>,
    /// deformation gamma (inverse length)
    #[arg(long, global = true)]
    gamma: Option<f64>,
    /// dimensionless gamma*sigma0 (overrides --gamma)
    #[arg(long = "gamma-sigma0", global = true)]
    gamma_sigma0: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Bound-state energies and energy expectation table
    Spectrum,
    /// Eigenfunction samples (use --n, --gs-list, --panel correspondence)
    Eigenfunction(ExperimentFlags),
    /// Exact classical trajectories in both charts
    ClassicalOrbit(ExperimentFlags),
    /// Phase-space paths or the potential panel
    PhasePortrait(ExperimentFlags),
    /// Morse-map catalog verification table
    MorseCatalog,
    /// Coherent-state evolution (series or density snapshots)
    CoherentEvolve(ExperimentFlags),
    /// Even/odd cat-state density snapshots
    CatEvolve(ExperimentFlags),
    /// Uncertainty tables (eigen sweep, coherent time, coherent surface)
    Uncertainties(ExperimentFlags),
    /// Run the self-verification suite
    Verify {
        /// also execute every figure-manifest entry
        #[arg(long)]
        figures: bool,
    },
    /// List or run the per-figure data configurations
    Figures {
        #[command(subcommand)]
        action: FiguresAction,
    },
}

#[derive(Subcommand)]
enum FiguresAction {
    /// Print the figure ids and their configurations
    List,
    /// Emit data files for one figure id or all of them
    Run {
        #[arg(long)]
        id: Option<String>,
        #[arg(long, default_value = "figures-out")]
        out_dir: PathBuf,
    },
}

#[derive(Args, Clone, Default)]
struct ExperimentFlags {
    /// quantum numbers
    #[arg(long = "n", value_delimiter = ',')]
    n_list: Vec<usize>,
    /// gamma*A0 values
    #[arg(long = "gamma-a0", value_delimiter = ',')]
    gamma_a0_list: Vec<f64>,
    /// gamma*sigma0 curve list
    #[arg(long = "gs-list", value_delimiter = ',')]
    gamma_sigma0_list: Vec<f64>,
    #[arg(long, default_value_t = 0.0)]
    alpha_re: f64,
    #[arg(long, default_value_t = 0.0)]
    alpha_im: f64,
    /// even or odd (cat states)
    #[arg(long)]
    parity: Option<String>,
    #[arg(long, default_value_t = 0.0)]
    periods: f64,
    #[arg(long, default_value_t = 0)]
    samples: usize,
    /// snapshot times in units of 2pi/omega0
    #[arg(long = "snapshots", value_delimiter = ',')]
    snapshot_times: Vec<f64>,
    #[arg(long)]
    x_min: Option<f64>,
    #[arg(long)]
    x_max: Option<f64>,
    /// panel selector for multi-panel figures
    #[arg(long)]
    panel: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version through this path too
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(AppError::Config(msg)) => {
            eprintln!("configuration error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Domain(e)) => {
            eprintln!("domain error: {e}");
            ExitCode::from(2)
        }
    }
}

enum AppError {
    Config(String),
    Domain(pdmosc::Error),
}

impl From<pdmosc::Error> for AppError {
    fn from(e: pdmosc::Error) -> Self {
        match e {
            pdmosc::Error::InvalidParam { .. } => AppError::Config(e.to_string()),
            other => AppError::Domain(other),
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Config(format!("io: {e}"))
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, AppError> {
    match &cli.command {
        Command::Verify { figures } => run_verify(*figures),
        Command::Figures { action } => run_figures(action),
        _ => {
            let cfg = build_config(&cli)?;
            let ds = run_experiment(&cfg)?;
            let format = cfg.output.format;
            match output_path(&cli, &cfg) {
                Some(path) => {
                    ds.write_to_path(format, &path)?;
                    eprintln!("wrote {}", path.display());
                }
                None => {
                    let mut out = std::io::stdout().lock();
                    ds.emit(format, &mut out)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build_config(cli: &Cli) -> Result<RunConfig, AppError> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| AppError::Config(format!("{}: {e}", path.display())))?;
            RunConfig::from_json(&text)
                .map_err(|e| AppError::Config(format!("{}: {e}", path.display())))?
        }
        None => RunConfig {
            params: ParamsConfig::default(),
            experiment: Experiment::Spectrum,
            options: Options::default(),
            output: OutputConfig::default(),
        },
    };

    // the subcommand wins over the config's experiment field
    let (experiment, flags) = match &cli.command {
        Command::Spectrum => (Experiment::Spectrum, None),
        Command::Eigenfunction(f) => (Experiment::Eigenfunction, Some(f)),
        Command::ClassicalOrbit(f) => (Experiment::ClassicalOrbit, Some(f)),
        Command::PhasePortrait(f) => (Experiment::PhasePortrait, Some(f)),
        Command::MorseCatalog => (Experiment::MorseCatalog, None),
        Command::CoherentEvolve(f) => (Experiment::CoherentEvolve, Some(f)),
        Command::CatEvolve(f) => (Experiment::CatEvolve, Some(f)),
        Command::Uncertainties(f) => (Experiment::Uncertainties, Some(f)),
        _ => unreachable!("verify/figures handled earlier"),
    };
    cfg.experiment = experiment;

    if let Some(v) = cli.params.m0 {
        cfg.params.m0 = v;
    }
    if let Some(v) = cli.params.omega0 {
        cfg.params.omega0 = v;
    }
    if let Some(v) = cli.params.hbar {
        cfg.params.hbar = v;
    }
    if let Some(v) = cli.params.gamma {
        cfg.params.gamma = v;
    }
    if let Some(gs) = cli.params.gamma_sigma0 {
        let sigma0 = (cfg.params.hbar / (cfg.params.m0 * cfg.params.omega0)).sqrt();
        cfg.params.gamma = gs / sigma0;
    }

    if let Some(f) = flags {
        let o = &mut cfg.options;
        if !f.n_list.is_empty() {
            o.n_list = f.n_list.clone();
        }
        if !f.gamma_a0_list.is_empty() {
            o.gamma_a0_list = f.gamma_a0_list.clone();
        }
        if !f.gamma_sigma0_list.is_empty() {
            o.gamma_sigma0_list = f.gamma_sigma0_list.clone();
        }
        if f.alpha_re != 0.0 {
            o.alpha_re = f.alpha_re;
        }
        if f.alpha_im != 0.0 {
            o.alpha_im = f.alpha_im;
        }
        if f.parity.is_some() {
            o.parity = f.parity.clone();
        }
        if f.periods != 0.0 {
            o.periods = f.periods;
        }
        if f.samples != 0 {
            o.samples = f.samples;
        }
        if !f.snapshot_times.is_empty() {
            o.snapshot_times = f.snapshot_times.clone();
        }
        if f.x_min.is_some() {
            o.x_min = f.x_min;
        }
        if f.x_max.is_some() {
            o.x_max = f.x_max;
        }
        if f.panel.is_some() {
            o.panel = f.panel.clone();
        }
    }

    if let Some(fmt) = &cli.format {
        cfg.output.format = match fmt.as_str() {
            "csv" => OutputFormat::Csv,
            "json" => OutputFormat::Json,
            other => return Err(AppError::Config(format!("unknown format {other}"))),
        };
    }
    Ok(cfg)
}

// --out flag wins, then the config's path, then stdout; the PDMOSC_OUT_DIR
// environment variable redirects relative paths.
fn output_path(cli: &Cli, cfg: &RunConfig) -> Option<PathBuf> {
    let raw = cli
        .out
        .clone()
        .or_else(|| cfg.output.path.as_ref().map(PathBuf::from))?;
    Some(apply_out_dir(&raw))
}

fn apply_out_dir(path: &Path) -> PathBuf {
    match std::env::var_os("PDMOSC_OUT_DIR") {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn run_verify(figures: bool) -> Result<ExitCode, AppError> {
    let results = pdmosc::verify::run_all();
    let mut all_ok = true;
    println!("{:<4} {:<45} detail", "", "check");
    for r in &results {
        all_ok &= r.passed;
        println!("{:<4} {:<45} {}", if r.passed { "ok" } else { "FAIL" }, r.name, r.detail);
    }
    if figures {
        let dir = apply_out_dir(Path::new("figures-out"));
        std::fs::create_dir_all(&dir)?;
        for (id, cfg) in figure_manifest() {
            match run_experiment(&cfg) {
                Ok(ds) => {
                    let path = dir.join(format!("{id}.csv"));
                    ds.write_to_path(OutputFormat::Csv, &path)?;
                    println!("ok   figure {id:<8} -> {}", path.display());
                }
                Err(e) => {
                    all_ok = false;
                    println!("FAIL figure {id:<8} errored: {e}");
                }
            }
        }
    }
    if all_ok {
        println!("all checks passed");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("verification FAILED");
        Ok(ExitCode::from(3))
    }
}

fn run_figures(action: &FiguresAction) -> Result<ExitCode, AppError> {
    match action {
        FiguresAction::List => {
            for (id, cfg) in figure_manifest() {
                println!("{id}: {}", summarize(&cfg));
            }
            Ok(ExitCode::SUCCESS)
        }
        FiguresAction::Run { id, out_dir } => {
            let dir = apply_out_dir(out_dir);
            std::fs::create_dir_all(&dir)?;
            let manifest = figure_manifest();
            let selected: Vec<_> = match id {
                Some(want) => {
                    let hit: Vec<_> =
                        manifest.into_iter().filter(|(i, _)| i == want).collect();
                    if hit.is_empty() {
                        return Err(AppError::Config(format!("unknown figure id {want}")));
                    }
                    hit
                }
                None => manifest,
            };
            for (id, cfg) in selected {
                let ds = run_experiment(&cfg)?;
                let path = dir.join(format!("{id}.csv"));
                ds.write_to_path(OutputFormat::Csv, &path)?;
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn summarize(cfg: &RunConfig) -> String {
    let mut s = format!("{:?}", cfg.experiment);
    if cfg.params.gamma != 0.0 {
        s.push_str(&format!(" gamma={}", cfg.params.gamma));
    }
    if let Some(p) = &cfg.options.panel {
        s.push_str(&format!(" panel={p}"));
    }
    if !cfg.options.n_list.is_empty() {
        s.push_str(&format!(" n={:?}", cfg.options.n_list));
    }
    if !cfg.options.gamma_a0_list.is_empty() {
        s.push_str(&format!(" gamma_A0={:?}", cfg.options.gamma_a0_list));
    }
    if !cfg.options.gamma_sigma0_list.is_empty() {
        s.push_str(&format!(" gs={:?}", cfg.options.gamma_sigma0_list));
    }
    s
}
