//! Command implementations behind the `lackwalk` binary.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use lackwalk::experiments::{
    fit_groups_vs_m, fit_scaling, run_sweep, runtime_vs_m, runtime_vs_size, summarize,
    ExperimentRecord, FitModel, FitResult, GroupSummary, RunStatus, RuntimeMeasure, SizeAxis,
    RESULTS_HEADER, SUMMARY_HEADER,
};
use lackwalk::sampling::{generate_groups, MarkedSample, ScenarioSpec};
use lackwalk::walk::{default_budget, run_walk, WalkResult};
use lackwalk::{make_coin_spec, CoinSpec, HypercubeDims, OracleSpec, VertexId, WeightScheme};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub mod config;

pub use config::{Overrides, RunConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Sim(#[from] lackwalk::Error),
    #[error("i/o: {0}")]
    Io(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0} of {1} walks failed")]
    RunsFailed(usize, usize),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Sim(lackwalk::Error::InvalidArgument(_)) => 2,
            _ => 1,
        }
    }
}

/// Writes `path` via a temporary file in the same directory and a rename,
/// so the file is either complete or absent.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| CliError::Io(e.to_string()))?;
    Ok(())
}

fn csv_bytes<I>(header: &[&str], rows: I) -> Result<Vec<u8>, CliError>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.into_inner().map_err(|e| CliError::Io(e.to_string()))
}

pub fn results_csv(records: &[ExperimentRecord]) -> Result<Vec<u8>, CliError> {
    csv_bytes(&RESULTS_HEADER, records.iter().map(|r| r.csv_row()))
}

pub fn summary_csv(summaries: &[GroupSummary]) -> Result<Vec<u8>, CliError> {
    csv_bytes(&SUMMARY_HEADER, summaries.iter().map(|s| s.csv_row()))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub version: String,
    pub config: RunConfig,
    pub groups: Vec<ScenarioSpec>,
    /// Seeds of every sample, per group.
    pub seeds: Vec<Vec<u64>>,
}

#[derive(Debug)]
pub struct RunReport {
    pub records: Vec<ExperimentRecord>,
    pub summaries: Vec<GroupSummary>,
    pub fits: Vec<FitResult>,
    pub failed: usize,
}

/// Executes a sweep and writes `results.csv`, `results.json` (full
/// precision), `summary.csv`, `fits.json` and `manifest.json` to
/// `config.out`. Output files are written even when some walks fail; the
/// failure count is then returned as an error.
pub fn run(config: &RunConfig) -> Result<RunReport, CliError> {
    config.validate()?;
    let dims = config.dims()?;
    let groups = config.groups();
    let seeds = groups
        .iter()
        .map(|g| Ok(generate_groups(g, dims)?.iter().map(|s| s.seed).collect()))
        .collect::<Result<Vec<Vec<u64>>, CliError>>()?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| CliError::Io(e.to_string()))?;
    let records = pool.install(|| {
        run_sweep(
            &groups,
            &config.schemes,
            &config.m,
            dims,
            config.s,
            config.budget(),
        )
    })?;

    let failed = records
        .iter()
        .filter(|r| r.status == RunStatus::Failed)
        .count();
    for r in records.iter().filter(|r| r.status == RunStatus::Failed) {
        eprintln!(
            "walk failed: {} {} a={} m={} sample={}: {}",
            r.scenario,
            r.scheme,
            r.a,
            r.m,
            r.sample,
            r.note.as_deref().unwrap_or("")
        );
    }
    let summaries = summarize(&records);
    let fits = fit_groups_vs_m(&records);

    fs::create_dir_all(&config.out)?;
    let manifest = Manifest {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        groups,
        seeds,
    };
    write_atomic(
        &config.out.join("manifest.json"),
        &serde_json::to_vec_pretty(&manifest)?,
    )?;
    write_atomic(&config.out.join("results.csv"), &results_csv(&records)?)?;
    write_atomic(
        &config.out.join("results.json"),
        &serde_json::to_vec_pretty(&records)?,
    )?;
    write_atomic(&config.out.join("summary.csv"), &summary_csv(&summaries)?)?;
    write_atomic(
        &config.out.join("fits.json"),
        &serde_json::to_vec_pretty(&fits)?,
    )?;

    if failed > 0 {
        return Err(CliError::RunsFailed(failed, records.len()));
    }
    Ok(RunReport {
        records,
        summaries,
        fits,
        failed,
    })
}

/// Parameters of a single walk.
#[derive(Debug, Clone)]
pub struct WalkArgs {
    pub n: u32,
    pub m: usize,
    pub s: usize,
    pub scheme: WeightScheme,
    pub marked: Vec<VertexId>,
    pub budget: Option<usize>,
    pub budget_mult: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct WalkSummary {
    pub n: u32,
    pub m: usize,
    pub s: usize,
    pub scheme: WeightScheme,
    pub marked: Vec<VertexId>,
    pub l: f64,
    pub budget: usize,
    pub p_max: f64,
    pub t_max: usize,
    pub t_peak: usize,
}

pub fn walk(args: &WalkArgs, keep_history: bool) -> Result<(WalkSummary, WalkResult), CliError> {
    let dims = HypercubeDims::new(args.n)?;
    let coin: CoinSpec = make_coin_spec(args.scheme, dims, args.marked.len().max(1), args.m)?;
    let oracle = OracleSpec::new(args.marked.clone(), args.s)?;
    let budget = args
        .budget
        .unwrap_or_else(|| default_budget(dims, &coin, oracle.k(), args.budget_mult));
    let result = run_walk(dims, &coin, &oracle, budget, keep_history)?;
    let summary = WalkSummary {
        n: args.n,
        m: args.m,
        s: args.s,
        scheme: args.scheme,
        marked: args.marked.clone(),
        l: coin.l(),
        budget,
        p_max: result.p_max,
        t_max: result.t_max,
        t_peak: result.t_peak,
    };
    Ok((summary, result))
}

/// `step,p` rows of a probability history.
pub fn trace_csv(history: &[f64]) -> Result<Vec<u8>, CliError> {
    csv_bytes(
        &["step", "p"],
        history
            .iter()
            .enumerate()
            .map(|(t, p)| vec![t.to_string(), format!("{p:.10}")]),
    )
}

pub fn sample(spec: &ScenarioSpec, n: u32) -> Result<Vec<MarkedSample>, CliError> {
    Ok(generate_groups(spec, HypercubeDims::new(n)?)?)
}

/// Loads records from a run directory or a `results.json` file.
pub fn load_records(path: &Path) -> Result<Vec<ExperimentRecord>, CliError> {
    let file: PathBuf = if path.is_dir() {
        path.join("results.json")
    } else {
        path.to_path_buf()
    };
    let text =
        fs::read_to_string(&file).map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?;
    Ok(serde_json::from_str(&text)?)
}

/// Fits runtime against `m` (LOG_M) or against hypercube size (SQRT_DIM).
pub fn fit(
    records: &[ExperimentRecord],
    model: FitModel,
    axis: SizeAxis,
    measure: RuntimeMeasure,
) -> Result<FitResult, CliError> {
    let points = match model {
        FitModel::LogM => runtime_vs_m(records, measure),
        FitModel::SqrtDim => runtime_vs_size(records, measure, axis),
    };
    let mut result = fit_scaling(&points, model)?;
    let measure_tag = match measure {
        RuntimeMeasure::Peak => "t_peak",
        RuntimeMeasure::Max => "t_max",
    };
    result.label = match model {
        FitModel::LogM => format!("m/{measure_tag}"),
        FitModel::SqrtDim => match axis {
            SizeAxis::DimTimesVertices => format!("(n+m)N/{measure_tag}"),
            SizeAxis::CoinDim => format!("(n+m)/{measure_tag}"),
        },
    };
    Ok(result)
}
