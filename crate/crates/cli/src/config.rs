//! Sweep configuration: defaults, config files and flag overrides.

use std::path::{Path, PathBuf};

use lackwalk::experiments::BudgetPolicy;
use lackwalk::sampling::{ScenarioKind, ScenarioSpec};
use lackwalk::{HypercubeDims, WeightScheme};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Upper end of the default self-loop range.
pub const DEFAULT_MAX_M: usize = 30;

/// Largest group size swept by default.
const MAX_GROUP_A: usize = 13;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub scenario: ScenarioKind,
    pub n: u32,
    /// Self-loop counts to sweep, in order.
    pub m: Vec<usize>,
    /// Largest accepted self-loop count.
    #[serde(default = "default_max_m")]
    pub max_m: usize,
    pub s: usize,
    /// Adjacent-vertex counts, one group each. Empty means every group
    /// from 2 up to min(13, n+1).
    #[serde(default)]
    pub a: Vec<usize>,
    pub schemes: Vec<WeightScheme>,
    pub samples: usize,
    pub seed: u64,
    pub budget_mult: f64,
    pub out: PathBuf,
    pub jobs: usize,
}

fn default_max_m() -> usize {
    DEFAULT_MAX_M
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            scenario: ScenarioKind::Adjacent,
            n: 12,
            m: (1..=DEFAULT_MAX_M).collect(),
            max_m: DEFAULT_MAX_M,
            s: 1,
            a: Vec::new(),
            schemes: WeightScheme::ALL.to_vec(),
            samples: 10,
            seed: 0,
            budget_mult: 3.0,
            out: PathBuf::from("out"),
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// Flag values that override a config file. `None` leaves the file value.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub scenario: Option<String>,
    pub n: Option<u32>,
    pub m: Option<String>,
    pub max_m: Option<usize>,
    pub s: Option<usize>,
    pub a: Option<String>,
    pub schemes: Option<String>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub budget_mult: Option<f64>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

impl RunConfig {
    /// Builds and validates a config from an optional file, flag overrides
    /// and the `LACKWALK_OUT` value (which wins over `--out`).
    pub fn parse(
        file: Option<&Path>,
        flags: &Overrides,
        env_out: Option<PathBuf>,
    ) -> Result<Self, CliError> {
        let mut cfg = match file {
            Some(p) => Self::load(p)?,
            None => Self::default(),
        };
        if let Some(s) = &flags.scenario {
            cfg.scenario = s.parse()?;
        }
        if let Some(n) = flags.n {
            cfg.n = n;
        }
        if let Some(m) = &flags.m {
            cfg.m = parse_list(m, "m")?;
        }
        if let Some(v) = flags.max_m {
            cfg.max_m = v;
        }
        if let Some(s) = flags.s {
            cfg.s = s;
        }
        if let Some(a) = &flags.a {
            cfg.a = parse_list(a, "a")?;
        }
        if let Some(s) = &flags.schemes {
            cfg.schemes = parse_schemes(s)?;
        }
        if let Some(v) = flags.samples {
            cfg.samples = v;
        }
        if let Some(v) = flags.seed {
            cfg.seed = v;
        }
        if let Some(v) = flags.budget_mult {
            cfg.budget_mult = v;
        }
        if let Some(v) = &flags.out {
            cfg.out = v.clone();
        }
        if let Some(v) = flags.jobs {
            cfg.jobs = v;
        }
        if let Some(v) = env_out {
            cfg.out = v;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reads a TOML config, or a JSON config / run manifest.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        if path.extension().is_some_and(|e| e == "json") {
            let value: serde_json::Value = serde_json::from_str(&text)?;
            // manifests wrap the config
            let inner = match value.get("config") {
                Some(c) => c.clone(),
                None => value,
            };
            Ok(serde_json::from_value(inner)?)
        } else {
            toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
        }
    }

    pub fn to_toml(&self) -> Result<String, CliError> {
        toml::to_string(self).map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn dims(&self) -> Result<HypercubeDims, CliError> {
        Ok(HypercubeDims::new(self.n)?)
    }

    /// Group sizes this config runs.
    pub fn group_sizes(&self) -> Vec<usize> {
        if self.a.is_empty() {
            (2..=MAX_GROUP_A.min(self.n as usize + 1)).collect()
        } else {
            self.a.clone()
        }
    }

    pub fn groups(&self) -> Vec<ScenarioSpec> {
        self.group_sizes()
            .into_iter()
            .map(|a| ScenarioSpec {
                kind: self.scenario,
                a,
                samples: match self.scenario {
                    ScenarioKind::Adjacent => 1,
                    ScenarioKind::Mixed => self.samples,
                },
                base_seed: self.seed,
            })
            .collect()
    }

    pub fn budget(&self) -> BudgetPolicy {
        BudgetPolicy::Scaled(self.budget_mult)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let dims = self.dims()?;
        if self.m.is_empty() {
            return usage("empty m range");
        }
        if let Some(&m) = self.m.iter().find(|&&m| m == 0) {
            return usage(format!("m = {m}: need at least one self-loop"));
        }
        if let Some(&m) = self.m.iter().find(|&&m| m > self.max_m) {
            return usage(format!("m = {m} exceeds the limit of {}", self.max_m));
        }
        if self.s == 0 {
            return usage("s must be at least 1");
        }
        if self.schemes.is_empty() {
            return usage("no weight schemes selected");
        }
        if self.samples == 0 {
            return usage("samples must be at least 1");
        }
        if !(self.budget_mult.is_finite() && self.budget_mult > 0.0) {
            return usage(format!(
                "budget multiplier must be positive, got {}",
                self.budget_mult
            ));
        }
        if self.jobs == 0 {
            return usage("jobs must be at least 1");
        }
        for a in self.group_sizes() {
            if a > dims.dim() + 1 {
                return usage(format!("a = {a} exceeds n+1 = {}", dims.dim() + 1));
            }
            if a < 2 {
                return usage(format!("a = {a}: groups need at least 2 adjacent vertices"));
            }
        }
        Ok(())
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

/// Parses `"a..b"` (inclusive), `"a..=b"`, `"x,y,z"` or a single integer.
pub fn parse_list(s: &str, what: &str) -> Result<Vec<usize>, CliError> {
    let s = s.trim();
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("bad {what} value '{t}'")))
    };
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi) = (num(lo)?, num(hi)?);
        return Ok((lo..=hi).collect());
    }
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(num).collect()
}

pub fn parse_schemes(s: &str) -> Result<Vec<WeightScheme>, CliError> {
    if s.trim() == "all" {
        return Ok(WeightScheme::ALL.to_vec());
    }
    s.split(',')
        .map(|t| t.trim().parse::<WeightScheme>().map_err(CliError::from))
        .collect()
}
