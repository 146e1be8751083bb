//! Parameter sweeps over weight schemes and self-loop counts, plus the
//! statistics computed from them.
//!
//! Walks run in parallel on the ambient rayon pool; records always come
//! back in `(scheme, group, sample, m)` order so downstream output does not
//! depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::hypercube::HypercubeDims;
use crate::sampling::{generate_groups, MarkedSample, ScenarioKind, ScenarioSpec};
use crate::walk::{default_budget, run_walk, OracleSpec};
use crate::weights::{make_coin_spec, WeightScheme};

pub const RESULTS_HEADER: [&str; 10] = [
    "scenario",
    "scheme",
    "a",
    "total_marked",
    "m",
    "sample",
    "seed",
    "p_max",
    "t_max",
    "wall_s",
];

pub const SUMMARY_HEADER: [&str; 8] = [
    "scenario",
    "scheme",
    "total_marked",
    "m",
    "mean_p",
    "cv_percent",
    "n_samples",
    "is_best",
];

/// How many steps each walk may take.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetPolicy {
    /// `⌈(π/2)·√(N·(n+m)/k)⌉ · multiplier`
    Scaled(f64),
    Fixed(usize),
}

impl Default for BudgetPolicy {
    fn default() -> Self {
        BudgetPolicy::Scaled(3.0)
    }
}

impl BudgetPolicy {
    pub fn steps(&self, dims: HypercubeDims, coin: &crate::CoinSpec, k: usize) -> usize {
        match *self {
            BudgetPolicy::Scaled(mult) => default_budget(dims, coin, k, mult),
            BudgetPolicy::Fixed(t) => t,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RunStatus {
    Ok,
    Skipped,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub scenario: ScenarioKind,
    pub scheme: WeightScheme,
    pub n: usize,
    pub a: usize,
    pub total_marked: usize,
    pub m: usize,
    pub s: usize,
    pub sample: usize,
    pub seed: u64,
    pub status: RunStatus,
    pub p_max: Option<f64>,
    pub t_max: Option<usize>,
    pub t_peak: Option<usize>,
    pub wall_s: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ExperimentRecord {
    pub fn is_ok(&self) -> bool {
        self.status == RunStatus::Ok
    }

    /// Row matching [`RESULTS_HEADER`]. Skipped and failed runs carry their
    /// status in the `p_max` column and leave `t_max` and `wall_s` empty.
    pub fn csv_row(&self) -> Vec<String> {
        let (p, t, wall) = match self.status {
            RunStatus::Ok => (
                format!("{:.6}", self.p_max.unwrap_or(f64::NAN)),
                self.t_max.map(|t| t.to_string()).unwrap_or_default(),
                self.wall_s.map(|w| format!("{w:.3}")).unwrap_or_default(),
            ),
            RunStatus::Skipped => ("skipped".into(), String::new(), String::new()),
            RunStatus::Failed => ("failed".into(), String::new(), String::new()),
        };
        vec![
            self.scenario.to_string(),
            self.scheme.to_string(),
            self.a.to_string(),
            self.total_marked.to_string(),
            self.m.to_string(),
            self.sample.to_string(),
            self.seed.to_string(),
            p,
            t,
            wall,
        ]
    }
}

struct Job<'a> {
    scheme: WeightScheme,
    spec: &'a ScenarioSpec,
    sample_index: usize,
    sample: &'a MarkedSample,
    m: usize,
}

/// Runs every `(scheme, group, sample, m)` combination.
///
/// Combinations with `s > m` produce `Skipped` records. A walk that errors
/// yields a `Failed` record; the rest of the sweep carries on. Sampling
/// failures abort the sweep since no walks could be defined.
pub fn run_sweep(
    groups: &[ScenarioSpec],
    schemes: &[WeightScheme],
    m_range: &[usize],
    dims: HypercubeDims,
    s: usize,
    budget: BudgetPolicy,
) -> Result<Vec<ExperimentRecord>> {
    if m_range.is_empty() {
        return invalid("empty self-loop range");
    }
    if schemes.is_empty() {
        return invalid("no weight schemes selected");
    }
    if let Some(&m) = m_range.iter().find(|&&m| m == 0) {
        return invalid(format!("self-loop count {m} must be at least 1"));
    }
    if s == 0 {
        return invalid("number of inverted self-loops must be at least 1");
    }
    let samples: Vec<Vec<MarkedSample>> = groups
        .iter()
        .map(|g| generate_groups(g, dims))
        .collect::<Result<_>>()?;

    let mut jobs = Vec::new();
    for &scheme in schemes {
        for (spec, group) in groups.iter().zip(&samples) {
            for (sample_index, sample) in group.iter().enumerate() {
                for &m in m_range {
                    jobs.push(Job {
                        scheme,
                        spec,
                        sample_index,
                        sample,
                        m,
                    });
                }
            }
        }
    }

    Ok(jobs
        .par_iter()
        .map(|job| execute(job, dims, s, budget))
        .collect())
}

/// Single-group convenience wrapper around [`run_sweep`].
pub fn run_scenario(
    spec: &ScenarioSpec,
    schemes: &[WeightScheme],
    m_range: &[usize],
    dims: HypercubeDims,
    s: usize,
    budget: BudgetPolicy,
) -> Result<Vec<ExperimentRecord>> {
    run_sweep(
        std::slice::from_ref(spec),
        schemes,
        m_range,
        dims,
        s,
        budget,
    )
}

fn execute(job: &Job<'_>, dims: HypercubeDims, s: usize, budget: BudgetPolicy) -> ExperimentRecord {
    let marked = job.sample.all();
    let mut rec = ExperimentRecord {
        scenario: job.spec.kind,
        scheme: job.scheme,
        n: dims.dim(),
        a: job.spec.a,
        total_marked: marked.len(),
        m: job.m,
        s,
        sample: job.sample_index,
        seed: job.sample.seed,
        status: RunStatus::Skipped,
        p_max: None,
        t_max: None,
        t_peak: None,
        wall_s: None,
        note: None,
    };
    if s > job.m {
        rec.note = Some(format!("s = {s} exceeds m = {}", job.m));
        return rec;
    }
    let start = Instant::now();
    let outcome = make_coin_spec(job.scheme, dims, marked.len(), job.m).and_then(|coin| {
        let oracle = OracleSpec::new(marked.clone(), s)?;
        let steps = budget.steps(dims, &coin, marked.len());
        run_walk(dims, &coin, &oracle, steps, false)
    });
    match outcome {
        Ok(r) => {
            rec.status = RunStatus::Ok;
            rec.p_max = Some(r.p_max);
            rec.t_max = Some(r.t_max);
            rec.t_peak = Some(r.t_peak);
            rec.wall_s = Some(start.elapsed().as_secs_f64());
        }
        Err(e) => {
            rec.status = RunStatus::Failed;
            rec.note = Some(e.to_string());
        }
    }
    rec
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub scenario: ScenarioKind,
    pub scheme: WeightScheme,
    pub total_marked: usize,
    pub m: usize,
    pub mean_p: f64,
    /// 100 · sample standard deviation / mean. Absent for single-sample
    /// groups and for a zero mean.
    pub cv_percent: Option<f64>,
    pub n_samples: usize,
    pub mean_t_peak: f64,
    pub is_best: bool,
}

impl GroupSummary {
    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.scenario.to_string(),
            self.scheme.to_string(),
            self.total_marked.to_string(),
            self.m.to_string(),
            format!("{:.6}", self.mean_p),
            self.cv_percent
                .map(|c| format!("{c:.4}"))
                .unwrap_or_default(),
            self.n_samples.to_string(),
            self.is_best.to_string(),
        ]
    }
}

/// Mean and coefficient of variation (percent) of a sample.
pub fn mean_and_cv(values: &[f64]) -> (f64, Option<f64>) {
    let n = values.len();
    if n == 0 {
        return (f64::NAN, None);
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    if n < 2 || mean <= 0.0 {
        return (mean, None);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    (mean, Some(100.0 * var.sqrt() / mean))
}

type GroupKey = (ScenarioKind, WeightScheme, usize);

/// Aggregates completed records per `(scenario, scheme, total_marked, m)`
/// and flags the best `m` of each `(scenario, scheme, total_marked)` group.
pub fn summarize(records: &[ExperimentRecord]) -> Vec<GroupSummary> {
    let mut cells: BTreeMap<(GroupKey, usize), Vec<&ExperimentRecord>> = BTreeMap::new();
    for r in records.iter().filter(|r| r.is_ok()) {
        cells
            .entry(((r.scenario, r.scheme, r.total_marked), r.m))
            .or_default()
            .push(r);
    }
    let mut out: Vec<GroupSummary> = cells
        .into_iter()
        .map(|(((scenario, scheme, total_marked), m), rs)| {
            let ps: Vec<f64> = rs.iter().filter_map(|r| r.p_max).collect();
            let (mean_p, cv_percent) = mean_and_cv(&ps);
            let peaks: Vec<f64> = rs
                .iter()
                .filter_map(|r| r.t_peak)
                .map(|t| t as f64)
                .collect();
            GroupSummary {
                scenario,
                scheme,
                total_marked,
                m,
                mean_p,
                cv_percent,
                n_samples: ps.len(),
                mean_t_peak: peaks.iter().sum::<f64>() / peaks.len().max(1) as f64,
                is_best: false,
            }
        })
        .collect();

    let mut best: BTreeMap<GroupKey, usize> = BTreeMap::new();
    for s in &out {
        let key = (s.scenario, s.scheme, s.total_marked);
        if let Some((m, _)) = best_m(&out, s.scenario, s.scheme, s.total_marked) {
            best.insert(key, m);
        }
    }
    for s in &mut out {
        s.is_best = best.get(&(s.scenario, s.scheme, s.total_marked)) == Some(&s.m);
    }
    out
}

fn round3(p: f64) -> i64 {
    (p * 1000.0).round() as i64
}

/// The `m` with the largest mean success probability. Values that agree to
/// three decimals count as tied, and ties go to the smallest `m`.
pub fn best_m(
    summaries: &[GroupSummary],
    scenario: ScenarioKind,
    scheme: WeightScheme,
    total_marked: usize,
) -> Option<(usize, f64)> {
    let group: Vec<&GroupSummary> = summaries
        .iter()
        .filter(|s| s.scenario == scenario && s.scheme == scheme && s.total_marked == total_marked)
        .collect();
    let top = group.iter().map(|s| round3(s.mean_p)).max()?;
    group
        .iter()
        .filter(|s| round3(s.mean_p) == top)
        .min_by_key(|s| s.m)
        .map(|s| (s.m, s.mean_p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FitModel {
    /// T = c·√x
    SqrtDim,
    /// T = c₁·ln x + c₀
    LogM,
}

impl FitModel {
    pub fn tag(&self) -> &'static str {
        match self {
            FitModel::SqrtDim => "sqrt_dim",
            FitModel::LogM => "log_m",
        }
    }

    fn basis(&self, x: f64) -> Vec<f64> {
        match self {
            FitModel::SqrtDim => vec![x.sqrt()],
            FitModel::LogM => vec![x.ln(), 1.0],
        }
    }

    pub fn eval(&self, coefficients: &[f64], x: f64) -> f64 {
        self.basis(x)
            .iter()
            .zip(coefficients)
            .map(|(b, c)| b * c)
            .sum()
    }
}

impl fmt::Display for FitModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FitModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sqrt_dim" => Ok(FitModel::SqrtDim),
            "log_m" => Ok(FitModel::LogM),
            _ => invalid(format!("unknown fit model '{s}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub model: FitModel,
    pub coefficients: Vec<f64>,
    pub r2: f64,
    pub points: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub label: String,
}

/// Linear least squares of `T` on the model basis, solved by SVD.
///
/// R² is `1 − SS_res/SS_tot` around the mean of T, clamped to `[0, 1]`.
pub fn fit_scaling(points: &[(f64, f64)], model: FitModel) -> Result<FitResult> {
    if points.len() < 3 {
        return Err(Error::Fit(format!(
            "need at least 3 points, got {}",
            points.len()
        )));
    }
    if let Some(&(x, _)) = points.iter().find(|(x, _)| !(x.is_finite() && *x > 0.0)) {
        return Err(Error::Fit(format!("x must be strictly positive, got {x}")));
    }
    let p = model.basis(1.0).len();
    let rows: Vec<f64> = points.iter().flat_map(|&(x, _)| model.basis(x)).collect();
    let a = DMatrix::from_row_slice(points.len(), p, &rows);
    let b = DVector::from_iterator(points.len(), points.iter().map(|&(_, t)| t));

    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    if smax.is_nan() || smax <= 0.0 || smin <= smax * 1e-10 {
        return Err(Error::Fit("degenerate design matrix".into()));
    }
    let coef = svd.solve(&b, 0.0).map_err(|e| Error::Fit(e.to_string()))?;

    let resid = &a * &coef - &b;
    let ss_res = resid.norm_squared();
    let mean = b.mean();
    let ss_tot: f64 = b.iter().map(|t| (t - mean).powi(2)).sum();
    let r2 = if ss_tot > 0.0 {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    } else if ss_res <= f64::EPSILON * b.norm_squared().max(1.0) {
        1.0
    } else {
        0.0
    };
    Ok(FitResult {
        model,
        coefficients: coef.iter().copied().collect(),
        r2,
        points: points.iter().map(|&(x, t)| [x, t]).collect(),
        label: String::new(),
    })
}

/// Which runtime a fit is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuntimeMeasure {
    /// First peak reaching 90% of the maximum.
    Peak,
    /// Earliest step of the global maximum.
    Max,
}

impl RuntimeMeasure {
    fn of(&self, r: &ExperimentRecord) -> Option<f64> {
        match self {
            RuntimeMeasure::Peak => r.t_peak.map(|t| t as f64),
            RuntimeMeasure::Max => r.t_max.map(|t| t as f64),
        }
    }
}

/// Size axis for square-root fits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SizeAxis {
    /// x = (n+m)·N
    DimTimesVertices,
    /// x = n+m
    CoinDim,
}

impl SizeAxis {
    pub fn value(&self, n: usize, m: usize) -> f64 {
        match self {
            SizeAxis::DimTimesVertices => ((n + m) as f64) * (1u64 << n) as f64,
            SizeAxis::CoinDim => (n + m) as f64,
        }
    }
}

fn mean_runtime_by<K: Ord>(
    records: &[ExperimentRecord],
    measure: RuntimeMeasure,
    key: impl Fn(&ExperimentRecord) -> K,
) -> BTreeMap<K, f64> {
    let mut acc: BTreeMap<K, (f64, usize)> = BTreeMap::new();
    for r in records.iter().filter(|r| r.is_ok()) {
        if let Some(t) = measure.of(r) {
            let e = acc.entry(key(r)).or_insert((0.0, 0));
            e.0 += t;
            e.1 += 1;
        }
    }
    acc.into_iter()
        .map(|(k, (s, c))| (k, s / c as f64))
        .collect()
}

/// `(m, mean runtime)` points, one per distinct `m`.
pub fn runtime_vs_m(records: &[ExperimentRecord], measure: RuntimeMeasure) -> Vec<(f64, f64)> {
    mean_runtime_by(records, measure, |r| r.m)
        .into_iter()
        .map(|(m, t)| (m as f64, t))
        .collect()
}

/// `(size, mean runtime)` points, one per distinct `(n, m)`.
pub fn runtime_vs_size(
    records: &[ExperimentRecord],
    measure: RuntimeMeasure,
    axis: SizeAxis,
) -> Vec<(f64, f64)> {
    mean_runtime_by(records, measure, |r| (r.n, r.m))
        .into_iter()
        .map(|((n, m), t)| (axis.value(n, m), t))
        .collect()
}

/// LOG_M fits of first-peak time against `m`, one per
/// `(scenario, scheme, total_marked)` group with at least three `m` values.
pub fn fit_groups_vs_m(records: &[ExperimentRecord]) -> Vec<FitResult> {
    let mut groups: BTreeMap<GroupKey, Vec<ExperimentRecord>> = BTreeMap::new();
    for r in records.iter().filter(|r| r.is_ok()) {
        groups
            .entry((r.scenario, r.scheme, r.total_marked))
            .or_default()
            .push(r.clone());
    }
    groups
        .into_iter()
        .filter_map(|((scenario, scheme, total), rs)| {
            let pts = runtime_vs_m(&rs, RuntimeMeasure::Peak);
            let mut fit = fit_scaling(&pts, FitModel::LogM).ok()?;
            fit.label = format!("{scenario}/{scheme}/k={total}/t_peak");
            Some(fit)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(m: usize, mean_p: f64) -> GroupSummary {
        GroupSummary {
            scenario: ScenarioKind::Adjacent,
            scheme: WeightScheme::NOver,
            total_marked: 3,
            m,
            mean_p,
            cv_percent: None,
            n_samples: 1,
            mean_t_peak: 0.0,
            is_best: false,
        }
    }

    #[test]
    fn cv_cases() {
        assert_eq!(mean_and_cv(&[0.75, 0.75, 0.75]).1, Some(0.0));
        assert!(mean_and_cv(&[0.7, 0.7, 0.7]).1.unwrap() < 1e-12);
        let (mean, cv) = mean_and_cv(&[0.98, 1.00]);
        assert!((mean - 0.99).abs() < 1e-15);
        // std = |0.02|/√2 = 0.0141421356…
        let want = 100.0 * (0.02 / 2f64.sqrt()) / 0.99;
        assert!((cv.unwrap() - want).abs() < 1e-12);
        assert!((cv.unwrap() - 1.4285).abs() < 1e-4);
        assert_eq!(mean_and_cv(&[0.5]).1, None);
        assert_eq!(mean_and_cv(&[0.0, 0.0]).1, None);
    }

    #[test]
    fn best_m_ties_and_monotone() {
        let s = vec![
            summary(1, 0.5),
            summary(2, 0.9991),
            summary(3, 0.9994),
            summary(4, 0.98),
        ];
        assert_eq!(
            best_m(&s, ScenarioKind::Adjacent, WeightScheme::NOver, 3),
            Some((2, 0.9991))
        );
        let rising: Vec<_> = (1..=30).map(|m| summary(m, m as f64 / 31.0)).collect();
        assert_eq!(
            best_m(&rising, ScenarioKind::Adjacent, WeightScheme::NOver, 3)
                .unwrap()
                .0,
            30
        );
        assert_eq!(
            best_m(&s, ScenarioKind::Mixed, WeightScheme::NOver, 3),
            None
        );
    }

    #[test]
    fn exact_sqrt_recovery() {
        let pts: Vec<(f64, f64)> = [4.0, 9.0, 50.0, 1000.0]
            .iter()
            .map(|&x: &f64| (x, 2.0 * x.sqrt()))
            .collect();
        let f = fit_scaling(&pts, FitModel::SqrtDim).unwrap();
        assert!((f.coefficients[0] - 2.0).abs() < 1e-12);
        assert!((f.r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exact_log_recovery() {
        let pts: Vec<(f64, f64)> = (1..=10)
            .map(|m| (m as f64, 3.0 * (m as f64).ln() + 1.0))
            .collect();
        let f = fit_scaling(&pts, FitModel::LogM).unwrap();
        assert!((f.coefficients[0] - 3.0).abs() < 1e-10);
        assert!((f.coefficients[1] - 1.0).abs() < 1e-10);
        assert!((f.r2 - 1.0).abs() < 1e-12);
        assert!((FitModel::LogM.eval(&f.coefficients, 5.0) - (3.0 * 5f64.ln() + 1.0)).abs() < 1e-9);
    }

    #[test]
    fn fit_errors() {
        assert!(fit_scaling(&[(1.0, 1.0), (2.0, 2.0)], FitModel::LogM).is_err());
        assert!(fit_scaling(&[(1.0, 1.0), (0.0, 2.0), (3.0, 1.0)], FitModel::SqrtDim).is_err());
        // all x equal: ln x and the intercept are collinear
        let flat = [(2.0, 1.0), (2.0, 2.0), (2.0, 3.0)];
        assert!(matches!(
            fit_scaling(&flat, FitModel::LogM),
            Err(Error::Fit(_))
        ));
    }

    #[test]
    fn r2_is_bounded() {
        // decreasing data under a through-origin √x model gives a negative raw R²
        let pts = [(1.0, 10.0), (4.0, 5.0), (9.0, 1.0), (16.0, 0.5)];
        let f = fit_scaling(&pts, FitModel::SqrtDim).unwrap();
        assert!((0.0..=1.0).contains(&f.r2));
    }

    #[test]
    fn skipped_rows_render() {
        let d = HypercubeDims::new(4).unwrap();
        let spec = ScenarioSpec {
            kind: ScenarioKind::Adjacent,
            a: 2,
            samples: 1,
            base_seed: 0,
        };
        let recs = run_scenario(
            &spec,
            &[WeightScheme::NOver],
            &[1, 2],
            d,
            2,
            BudgetPolicy::Fixed(5),
        )
        .unwrap();
        assert_eq!(recs[0].status, RunStatus::Skipped);
        assert_eq!(recs[0].csv_row()[7], "skipped");
        assert_eq!(recs[1].status, RunStatus::Ok);
        assert_eq!(recs[1].csv_row().len(), RESULTS_HEADER.len());
        let sums = summarize(&recs);
        assert_eq!(sums.len(), 1);
        assert!(sums[0].is_best);
    }

    #[test]
    fn sweep_ordering_and_errors() {
        let d = HypercubeDims::new(5).unwrap();
        let groups = [
            ScenarioSpec {
                kind: ScenarioKind::Mixed,
                a: 2,
                samples: 2,
                base_seed: 3,
            },
            ScenarioSpec {
                kind: ScenarioKind::Mixed,
                a: 3,
                samples: 2,
                base_seed: 3,
            },
        ];
        let schemes = [WeightScheme::NOver, WeightScheme::N2Over];
        let recs = run_sweep(&groups, &schemes, &[1, 2, 3], d, 1, BudgetPolicy::Fixed(10)).unwrap();
        assert_eq!(recs.len(), 2 * 2 * 2 * 3);
        let keys: Vec<_> = recs
            .iter()
            .map(|r| (r.scheme, r.a, r.sample, r.m))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(run_sweep(&groups, &schemes, &[], d, 1, BudgetPolicy::Fixed(10)).is_err());
        assert!(run_sweep(&groups, &[], &[1], d, 1, BudgetPolicy::Fixed(10)).is_err());
    }

    #[test]
    fn size_axis_values() {
        assert_eq!(SizeAxis::DimTimesVertices.value(12, 3), 15.0 * 4096.0);
        assert_eq!(SizeAxis::CoinDim.value(12, 3), 15.0);
    }
}
