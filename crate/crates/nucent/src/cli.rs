//! Command-line interface.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use nucent_core::kinematics::{uniform_entropy, ParticlePair};
use nucent_core::nuclide::ChainElement;
use nucent_core::{MassModel, NucleusSpec, Projectile, SolverOptions};
use serde::Serialize;

use crate::config::{parse_projectile, EnergyGrid, PotentialConfig, PotentialSource, ScanConfig, Spacing, Target};
use crate::csvio::{self, ScanRow};
use crate::error::{AppError, Result};
use crate::report::{uniform_reference, FitReport, UNIFORM_INTERCEPT_HALF_WIDTH};
use crate::scan::{run_isotope_scan, run_scan, solve_point, IsotopeChain, Parallelism, ScanMetadata};
use crate::validate;

#[derive(Debug, Parser)]
#[command(name = "nucent", version, about = "Information entropy of nucleon-nucleus scattering")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropy and cross sections of one (projectile, target, T) point.
    Entropy(EntropyArgs),
    /// Scan projectiles × targets × energies into a CSV table.
    Scan(ScanArgs),
    /// Entropy along an isotope chain at fixed energy.
    Isotopes(IsotopeArgs),
    /// Fit S = a + b ln T + c ln A to a scan table.
    Fit(FitArgs),
    /// Closed-form uniform-distribution model.
    Uniform(UniformArgs),
    /// Run the built-in oracle checks.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MassModelArg {
    MassNumber,
    Tabulated,
}

impl From<MassModelArg> for MassModel {
    fn from(m: MassModelArg) -> Self {
        match m {
            MassModelArg::MassNumber => MassModel::MassNumber,
            MassModelArg::Tabulated => MassModel::Tabulated,
        }
    }
}

#[derive(Debug, Args)]
pub struct PhysicsArgs {
    /// Potential file (TOML); the built-in global potential when omitted.
    #[arg(long)]
    pub potential: Option<PathBuf>,
    /// Switch off Coulomb distortion for protons.
    #[arg(long)]
    pub no_coulomb: bool,
    #[arg(long, value_enum)]
    pub mass_model: Option<MassModelArg>,
}

impl PhysicsArgs {
    fn source(&self) -> Result<PotentialSource> {
        Ok(match &self.potential {
            None => PotentialSource::Global,
            Some(p) => PotentialSource::Fixed(PotentialConfig::load(p)?),
        })
    }
}

#[derive(Debug, Args)]
pub struct EntropyArgs {
    #[arg(short, long, default_value = "n", value_parser = parse_projectile)]
    pub projectile: Projectile,
    /// Target, e.g. 40Ca.
    #[arg(short, long)]
    pub target: Target,
    /// Lab kinetic energy [MeV].
    #[arg(long = "T", allow_negative_numbers = true)]
    pub t: f64,
    #[command(flatten)]
    pub physics: PhysicsArgs,
    /// Print the scan-table CSV row instead of text.
    #[arg(long, conflicts_with = "json")]
    pub csv: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Scan configuration (TOML); flags below override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output CSV (default scan.csv).
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Comma-separated projectiles, e.g. n,p.
    #[arg(long, value_delimiter = ',', value_parser = parse_projectile)]
    pub projectiles: Option<Vec<Projectile>>,
    /// Comma-separated targets, e.g. 4He,40Ca,208Pb.
    #[arg(long, value_delimiter = ',')]
    pub targets: Option<Vec<Target>>,
    #[arg(long)]
    pub emin: Option<f64>,
    #[arg(long)]
    pub emax: Option<f64>,
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, value_enum)]
    pub spacing: Option<SpacingArg>,
    #[command(flatten)]
    pub physics: PhysicsArgs,
    /// Single-threaded run.
    #[arg(long, conflicts_with = "threads")]
    pub serial: bool,
    /// Worker threads (default: NUCENT_THREADS, else all cores).
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpacingArg {
    Log,
    Linear,
}

#[derive(Debug, Args)]
pub struct IsotopeArgs {
    /// Chain: O, Ca, Ni, Zr, Sn or Pb.
    #[arg(short, long, value_parser = parse_element)]
    pub element: ChainElement,
    /// Lab kinetic energy [MeV].
    #[arg(long = "T", default_value_t = 400.0, allow_negative_numbers = true)]
    pub t: f64,
    #[arg(long, value_delimiter = ',', default_value = "n", value_parser = parse_projectile)]
    pub projectiles: Vec<Projectile>,
    /// Output CSV: the scan columns plus d2S_dN2.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub physics: PhysicsArgs,
    #[arg(long)]
    pub serial: bool,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Scan CSV.
    #[arg(short, long = "in")]
    pub input: PathBuf,
    #[arg(long, default_value_t = 20.0)]
    pub emin: f64,
    #[arg(long, default_value_t = 1000.0)]
    pub emax: f64,
    /// Projectiles to fit (default: those present in the table).
    #[arg(long, value_delimiter = ',', value_parser = parse_projectile)]
    pub projectiles: Option<Vec<Projectile>>,
    /// JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct UniformArgs {
    /// Lab kinetic energy [MeV].
    #[arg(long = "T", allow_negative_numbers = true)]
    pub t: f64,
    /// Mass number.
    #[arg(long = "A")]
    pub a: u32,
    /// Proton number (default A/2, at least 1).
    #[arg(long = "Z")]
    pub z: Option<u32>,
    #[arg(short, long, default_value = "n", value_parser = parse_projectile)]
    pub projectile: Projectile,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long)]
    pub json: bool,
}

fn parse_element(s: &str) -> std::result::Result<ChainElement, String> {
    s.parse().map_err(|_| format!("'{s}' has no isotope chain (expected O, Ca, Ni, Zr, Sn or Pb)"))
}

/// Parse arguments and run; returns the process exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn io_out(e: std::io::Error) -> AppError {
    AppError::io("<stdout>", e)
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Entropy(a) => entropy(a, out).map(|()| 0),
        Command::Scan(a) => scan(a, out).map(|()| 0),
        Command::Isotopes(a) => isotopes(a, out).map(|()| 0),
        Command::Fit(a) => fit(a, out).map(|()| 0),
        Command::Uniform(a) => uniform(a, out).map(|()| 0),
        Command::Validate(a) => validate(a, out),
    }
}

#[derive(Serialize)]
struct EntropyJson {
    projectile: &'static str,
    target: String,
    t_mev: f64,
    k_invfm: f64,
    l_max: u32,
    l_grazing: u32,
    sigma_e_mb: f64,
    sigma_r_mb: f64,
    sigma_t_mb: f64,
    s_nats: f64,
    s_bound_nats: f64,
}

fn entropy(a: EntropyArgs, out: &mut dyn Write) -> Result<()> {
    let source = a.physics.source()?;
    let model = a.physics.mass_model.map_or(MassModel::MassNumber, MassModel::from);
    let p = solve_point(&source, a.projectile, a.target, a.t, !a.physics.no_coulomb, model, &SolverOptions::default())?;
    let row = ScanRow::from_record(&p.record);
    if a.csv {
        return csvio::write_rows(out, &[row]).map_err(|e| AppError::Csv { path: "<stdout>".into(), source: e });
    }
    let json = EntropyJson {
        projectile: a.projectile.tag(),
        target: a.target.to_string(),
        t_mev: a.t,
        k_invfm: row.k,
        l_max: p.record.l_max_used,
        l_grazing: p.partial_waves.l_grazing,
        sigma_e_mb: row.sigma_e_mb,
        sigma_r_mb: row.sigma_r_mb,
        sigma_t_mb: row.sigma_t_mb,
        s_nats: row.s,
        s_bound_nats: p.record.entropy_bound(),
    };
    if a.json {
        serde_json::to_writer_pretty(&mut *out, &json)?;
        return writeln!(out).map_err(io_out);
    }
    writeln!(
        out,
        "{} + {}  T = {} MeV  ({})\n  k        = {:.6} fm^-1\n  l_max    = {} (grazing {})\n  sigma_e  = {:.4} mb\n  sigma_r  = {:.4} mb\n  sigma_t  = {:.4} mb\n  S        = {:.6} nats (bound ln 2(L+1) = {:.4})",
        json.projectile,
        json.target,
        json.t_mev,
        source.id(),
        json.k_invfm,
        json.l_max,
        json.l_grazing,
        json.sigma_e_mb,
        json.sigma_r_mb,
        json.sigma_t_mb,
        json.s_nats,
        json.s_bound_nats
    )
    .map_err(io_out)
}

fn scan_config(a: &ScanArgs) -> Result<ScanConfig> {
    let mut cfg = match &a.config {
        Some(p) => ScanConfig::load(p)?,
        None => ScanConfig::default(),
    };
    if let Some(p) = &a.projectiles {
        let mut p = p.clone();
        p.sort_by_key(|x| x.tag());
        p.dedup();
        cfg.projectiles = p;
    }
    if let Some(t) = &a.targets {
        cfg.targets = t.clone();
    }
    let e = &mut cfg.energy;
    *e = EnergyGrid {
        min: a.emin.unwrap_or(e.min),
        max: a.emax.unwrap_or(e.max),
        count: a.count.unwrap_or(e.count),
        spacing: match a.spacing {
            Some(SpacingArg::Log) => Spacing::Log,
            Some(SpacingArg::Linear) => Spacing::Linear,
            None => e.spacing,
        },
    };
    cfg.energy.validate()?;
    if a.physics.potential.is_some() {
        cfg.potential = a.physics.source()?;
    }
    if a.physics.no_coulomb {
        cfg.coulomb = false;
    }
    if let Some(m) = a.physics.mass_model {
        cfg.mass_model = m.into();
    }
    if let Some(o) = &a.out {
        cfg.output = Some(o.clone());
    }
    if cfg.projectiles.is_empty() || cfg.targets.is_empty() {
        return Err(AppError::Usage("scan needs at least one projectile and one target".into()));
    }
    Ok(cfg)
}

fn parallelism(serial: bool, threads: Option<usize>) -> Parallelism {
    match (serial, threads) {
        (true, _) => Parallelism::Serial,
        (false, Some(n)) => Parallelism::Threads(n),
        (false, None) => Parallelism::Auto,
    }
}

/// `<out>.meta.json` next to the table.
pub fn metadata_path(csv: &Path) -> PathBuf {
    let mut s = csv.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

fn scan(a: ScanArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = scan_config(&a)?;
    let path = cfg.output.clone().unwrap_or_else(|| PathBuf::from("scan.csv"));
    let start = std::time::Instant::now();
    let rows = run_scan(&cfg, &SolverOptions::default(), parallelism(a.serial, a.threads))?;
    csvio::write_file(&path, &rows)?;
    let meta = ScanMetadata::new(&cfg.potential, &rows);
    let meta_path = metadata_path(&path);
    let text = serde_json::to_string_pretty(&meta)?;
    std::fs::write(&meta_path, text + "\n").map_err(|e| AppError::io(&meta_path, e))?;
    writeln!(
        out,
        "wrote {} rows ({} flagged) to {} in {:.2} s",
        meta.rows,
        meta.failed_rows,
        path.display(),
        start.elapsed().as_secs_f64()
    )
    .map_err(io_out)
}

fn write_isotopes(path: &Path, chains: &[IsotopeChain]) -> Result<()> {
    let csv_err = |e| AppError::Csv { path: path.into(), source: e };
    let mut buf = Vec::new();
    let rows: Vec<ScanRow> = chains.iter().flat_map(|c| c.points.iter().map(|p| p.row.clone())).collect();
    csvio::write_rows(&mut buf, &rows).map_err(csv_err)?;
    let text = String::from_utf8(buf).map_err(|e| AppError::Usage(e.to_string()))?;
    let d2: Vec<Option<f64>> = chains.iter().flat_map(|c| c.points.iter().map(|p| p.d2)).collect();
    let mut lines = text.lines();
    let mut result = format!("{},d2S_dN2\n", lines.next().unwrap_or_default());
    for (line, d) in lines.zip(d2) {
        let d = d.map(|v| csvio::round_sig(v).to_string()).unwrap_or_default();
        result.push_str(&format!("{line},{d}\n"));
    }
    std::fs::write(path, result).map_err(|e| AppError::io(path, e))
}

fn isotopes(a: IsotopeArgs, out: &mut dyn Write) -> Result<()> {
    let mut cfg = ScanConfig { potential: a.physics.source()?, coulomb: !a.physics.no_coulomb, ..ScanConfig::default() };
    if let Some(m) = a.physics.mass_model {
        cfg.mass_model = m.into();
    }
    let par = if a.serial { Parallelism::Serial } else { Parallelism::Auto };
    let mut projectiles = a.projectiles.clone();
    projectiles.sort_by_key(|p| p.tag());
    projectiles.dedup();
    let chains = run_isotope_scan(a.element, a.t, &projectiles, &cfg, &SolverOptions::default(), par)?;
    for c in &chains {
        writeln!(out, "{} + {} chain at T = {} MeV", c.projectile, c.element.symbol(), c.t).map_err(io_out)?;
        writeln!(out, "  {:>4} {:>4} {:>12} {:>12}  flag", "N", "A", "S [nats]", "d2S/dN2").map_err(io_out)?;
        for p in &c.points {
            let d2 = p.d2.map_or_else(|| "-".to_string(), |v| format!("{v:.4e}"));
            writeln!(out, "  {:>4} {:>4} {:>12.6} {:>12}  {}", p.row.target.n, p.row.target.a(), p.row.s, d2, p.row.flag)
                .map_err(io_out)?;
        }
        for &m in c.element.magic_neutrons() {
            let seen = if c.shell_signature(m) { "feature" } else { "no feature" };
            writeln!(out, "  N = {m}: {seen} in d2S/dN2 within ±1").map_err(io_out)?;
        }
    }
    if let Some(path) = &a.out {
        write_isotopes(path, &chains)?;
    }
    Ok(())
}

fn fit(a: FitArgs, out: &mut dyn Write) -> Result<()> {
    if !(a.emin < a.emax) {
        return Err(AppError::Usage(format!("--emin must be below --emax, got {} and {}", a.emin, a.emax)));
    }
    let rows = csvio::read_file(&a.input)?;
    let projectiles = match &a.projectiles {
        Some(p) => p.clone(),
        None => {
            let mut p: Vec<Projectile> = rows.iter().map(|r| r.projectile).collect();
            p.sort_by_key(|x| x.tag());
            p.dedup();
            p
        }
    };
    if projectiles.is_empty() {
        return Err(AppError::Usage(format!("{}: no rows to fit", a.input.display())));
    }
    let reports = projectiles
        .iter()
        .map(|&p| FitReport::build(&rows, p, a.emin, a.emax))
        .collect::<Result<Vec<_>>>()?;
    if a.json {
        serde_json::to_writer_pretty(&mut *out, &reports)?;
        return writeln!(out).map_err(io_out);
    }
    for r in &reports {
        write!(out, "{}", r.text()).map_err(io_out)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct UniformJson {
    t_mev: f64,
    a: u32,
    z: u32,
    l_max: u32,
    s_nats: f64,
    s_continuous_nats: f64,
    intercept: f64,
    slope_ln_t: f64,
    slope_ln_a: f64,
    intercept_in_reference_band: bool,
}

fn uniform(a: UniformArgs, out: &mut dyn Write) -> Result<()> {
    if a.a == 0 {
        return Err(AppError::Usage("--A must be >= 1".into()));
    }
    let z = a.z.unwrap_or((a.a / 2).max(1));
    if z == 0 || z > a.a {
        return Err(AppError::Usage(format!("--Z must lie in 1..=A, got {z}")));
    }
    let nucleus = NucleusSpec::new(z, a.a - z, MassModel::MassNumber)?;
    let u = uniform_entropy(a.t, &nucleus, ParticlePair::nucleon_on(a.projectile, &nucleus))?;
    let reference = uniform_reference();
    let json = UniformJson {
        t_mev: a.t,
        a: a.a,
        z,
        l_max: u.l_max,
        s_nats: u.entropy,
        s_continuous_nats: u.entropy_continuous,
        intercept: u.intercept,
        slope_ln_t: 0.5,
        slope_ln_a: 1.0 / 3.0,
        intercept_in_reference_band: (u.intercept - reference.a).abs() <= UNIFORM_INTERCEPT_HALF_WIDTH,
    };
    if a.json {
        serde_json::to_writer_pretty(&mut *out, &json)?;
        return writeln!(out).map_err(io_out);
    }
    writeln!(
        out,
        "uniform model, {} + A = {} (Z = {}), T = {} MeV\n  l_max = {}\n  S = ln(l_max + 1) = {:.6} nats\n  S ≈ ln(kR)        = {:.6} nats\n  a = {:.4}  (reference {:.2} ± {:.2}: {})\n  b = 1/2, c = 1/3",
        a.projectile,
        a.a,
        z,
        a.t,
        json.l_max,
        json.s_nats,
        json.s_continuous_nats,
        json.intercept,
        reference.a,
        UNIFORM_INTERCEPT_HALF_WIDTH,
        if json.intercept_in_reference_band { "inside" } else { "outside" },
    )
    .map_err(io_out)
}

fn validate(a: ValidateArgs, out: &mut dyn Write) -> Result<i32> {
    let checks = validate::run_all().into_iter().collect::<Result<Vec<_>>>()?;
    if a.json {
        serde_json::to_writer_pretty(&mut *out, &checks)?;
        writeln!(out).map_err(io_out)?;
    } else {
        for c in &checks {
            writeln!(out, "{}", c.line()).map_err(io_out)?;
        }
    }
    Ok(if checks.iter().all(|c| c.passed) { 0 } else { 2 })
}
