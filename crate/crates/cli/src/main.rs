use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lackwalk::experiments::{FitModel, RuntimeMeasure, SizeAxis};
use lackwalk::sampling::ScenarioSpec;
use lackwalk::WeightScheme;
use lackwalk_cli::config::parse_list;
use lackwalk_cli::{CliError, Overrides, RunConfig, WalkArgs};

#[derive(Parser)]
#[command(
    name = "lackwalk",
    version,
    about = "Multi-self-loop lackadaisical quantum walk search on the hypercube"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep weight schemes and self-loop counts over marked-vertex groups.
    Run {
        /// TOML config, or a JSON config / manifest.json from an earlier run.
        #[arg(long)]
        config: Option<PathBuf>,
        /// adjacent | mixed
        #[arg(long)]
        scenario: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        /// Self-loop counts: "1..30" or "1,2,9"
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// Adjacent vertices per group: "2..13" or "3,5"
        #[arg(long)]
        a: Option<String>,
        /// "all" or a comma list of scheme tags
        #[arg(long)]
        schemes: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        budget_mult: Option<f64>,
        /// Output directory (LACKWALK_OUT takes precedence)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run one walk and print its result as JSON.
    Walk {
        #[arg(long, default_value_t = 12)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, default_value = "n_over_N_times_k")]
        scheme: String,
        /// Marked vertices, comma separated
        #[arg(long)]
        marked: String,
        /// Fixed step budget (overrides --budget-mult)
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = 3.0)]
        budget_mult: f64,
        /// Write per-step success probabilities as CSV ("-" for stdout)
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Fit runtime scaling models to results of earlier runs.
    Fit {
        /// Run directories or results.json files
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// log_m | sqrt_dim
        #[arg(long, default_value = "log_m")]
        model: String,
        /// Size axis for sqrt_dim: nmN for (n+m)·N, nm for n+m
        #[arg(long, default_value = "nmN")]
        axis: String,
        /// Runtime measure: peak (first peak) or max (global maximum)
        #[arg(long, default_value = "peak")]
        time: String,
        /// Write JSON here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit marked-vertex samples as JSON.
    Sample {
        #[arg(long, default_value = "mixed")]
        scenario: String,
        #[arg(long, default_value_t = 12)]
        n: u32,
        #[arg(long)]
        a: usize,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lackwalk: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Run {
            config,
            scenario,
            n,
            m,
            max_m,
            s,
            a,
            schemes,
            samples,
            seed,
            budget_mult,
            out,
            jobs,
        } => {
            let flags = Overrides {
                scenario,
                n,
                m,
                max_m,
                s,
                a,
                schemes,
                samples,
                seed,
                budget_mult,
                out,
                jobs,
            };
            let env_out = std::env::var_os("LACKWALK_OUT").map(PathBuf::from);
            let cfg = RunConfig::parse(config.as_deref(), &flags, env_out)?;
            let report = lackwalk_cli::run(&cfg)?;
            eprintln!(
                "{} walks, {} summary rows written to {}",
                report.records.len(),
                report.summaries.len(),
                cfg.out.display()
            );
            Ok(())
        }
        Command::Walk {
            n,
            m,
            s,
            scheme,
            marked,
            budget,
            budget_mult,
            trace,
        } => {
            let marked = parse_list(&marked, "marked")?
                .into_iter()
                .map(|v| v as u32)
                .collect();
            let args = WalkArgs {
                n,
                m,
                s,
                scheme: scheme.parse::<WeightScheme>()?,
                marked,
                budget,
                budget_mult,
            };
            let (summary, result) = lackwalk_cli::walk(&args, trace.is_some())?;
            if let (Some(path), Some(history)) = (trace, result.p_history.as_deref()) {
                let bytes = lackwalk_cli::trace_csv(history)?;
                if path.as_os_str() == "-" {
                    std::io::stdout().write_all(&bytes)?;
                } else {
                    lackwalk_cli::write_atomic(&path, &bytes)?;
                }
            }
            println!("{}", serde_json::to_string(&summary)?);
            Ok(())
        }
        Command::Fit {
            inputs,
            model,
            axis,
            time,
            out,
        } => {
            let model: FitModel = model.parse()?;
            let axis = match axis.as_str() {
                "nmN" => SizeAxis::DimTimesVertices,
                "nm" => SizeAxis::CoinDim,
                other => return Err(CliError::Usage(format!("unknown axis '{other}'"))),
            };
            let measure = match time.as_str() {
                "peak" => RuntimeMeasure::Peak,
                "max" => RuntimeMeasure::Max,
                other => return Err(CliError::Usage(format!("unknown time measure '{other}'"))),
            };
            let mut records = Vec::new();
            for p in &inputs {
                records.extend(lackwalk_cli::load_records(p)?);
            }
            let result = lackwalk_cli::fit(&records, model, axis, measure)?;
            let json = serde_json::to_vec_pretty(&result)?;
            match out {
                Some(p) => lackwalk_cli::write_atomic(&p, &json)?,
                None => println!("{}", String::from_utf8_lossy(&json)),
            }
            Ok(())
        }
        Command::Sample {
            scenario,
            n,
            a,
            samples,
            seed,
        } => {
            let spec = ScenarioSpec {
                kind: scenario.parse()?,
                a,
                samples,
                base_seed: seed,
            };
            let out = lackwalk_cli::sample(&spec, n)?;
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(())
        }
    }
}
