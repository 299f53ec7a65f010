use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use parsim::bounds::bound_report;
use parsim::error::Error;
use parsim::estimate::{estimate_classical_projection, estimate_parsim_bank};
use parsim::hankel::{build_hankels, build_regressor_bank};
use parsim::harness::{read_rows, run_sweep, write_matrix_csv, write_sweep, ExperimentConfig};
use parsim::model::StateSpaceModel;
use parsim::realize::{align_similarity, extract_system, svd_realize};

#[derive(Parser)]
#[command(name = "parsim", about = "PARSIM subspace identification and finite-sample experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a model against the stability/minimality assumptions.
    Validate { model: PathBuf },
    /// Simulate a trajectory and dump it as CSV (u rows, then y rows).
    Simulate {
        /// Path to a model JSON file, or the fixture name "s1".
        #[arg(long)]
        model: String,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        noiseless: bool,
        #[arg(long)]
        output: PathBuf,
    },
    /// Simulate, estimate and realize; prints metrics, optionally saves
    /// the realized model.
    Identify {
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        f: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        noiseless: bool,
        #[arg(long, value_enum, default_value_t = CliEstimator::Parsim)]
        estimator: CliEstimator,
        /// Write the realized model (same JSON schema, plus similarity
        /// metadata) to this path.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the per-row finite-sample bound report as JSON.
    Bounds {
        #[arg(long)]
        model: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        f: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.05)]
        delta: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 1.0)]
        c0: f64,
    },
    /// Run a Monte Carlo sweep from a JSON config.
    Sweep { config: PathBuf },
    /// Re-summarize an existing sweep directory from its rows.csv.
    Report { sweep_dir: PathBuf },
}

#[derive(clap::ValueEnum, Clone, Copy, PartialEq)]
enum CliEstimator {
    Parsim,
    Classical,
    Both,
}

fn load_model(spec: &str) -> parsim::Result<StateSpaceModel> {
    if spec == "s1" {
        return Ok(StateSpaceModel::s1());
    }
    let text = std::fs::read_to_string(spec)?;
    StateSpaceModel::from_json(&serde_json::from_str(&text)?)
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::ExcitationFailure { .. } | Error::SweepFailed { .. } => ExitCode::from(2),
        Error::Config(_) | Error::Dimension(_) | Error::Argument(_) => ExitCode::from(3),
        _ => ExitCode::from(1),
    }
}

fn run(cli: Cli) -> parsim::Result<()> {
    match cli.command {
        Command::Validate { model } => {
            let m = load_model(model.to_str().unwrap_or_default())?;
            let report = m.validate(false);
            println!("{}", serde_json::to_string_pretty(&report)?);
            if !report.passed() {
                return Err(Error::Config(report.failures.join("; ")));
            }
        }
        Command::Simulate {
            model,
            samples,
            seed,
            noiseless,
            output,
        } => {
            let m = load_model(&model)?;
            let t = m.simulate(samples, seed, noiseless)?;
            let mut stacked = nalgebra::DMatrix::zeros(m.nu() + m.ny(), samples);
            stacked.view_mut((0, 0), (m.nu(), samples)).copy_from(&t.u);
            stacked
                .view_mut((m.nu(), 0), (m.ny(), samples))
                .copy_from(&t.y);
            write_matrix_csv(&stacked, &output)?;
            eprintln!("wrote {} samples to {}", samples, output.display());
        }
        Command::Identify {
            model,
            n,
            p,
            f,
            seed,
            noiseless,
            estimator,
            output,
        } => {
            let m = load_model(&model)?;
            let t = m.simulate(p + f + n - 1, seed, noiseless)?;
            let h = build_hankels(&t, p, f, n)?;
            let truth_gl = m.extended_observability(f)? * m.extended_controllability(p)?;
            let mut out = serde_json::Map::new();
            if estimator != CliEstimator::Parsim {
                let est = estimate_classical_projection(&h)?;
                let err = parsim::realize::spectral_norm(&(&est - &truth_gl));
                out.insert("classical_err_gammalp".into(), err.into());
            }
            if estimator != CliEstimator::Classical {
                let bank = build_regressor_bank(&h);
                let est = estimate_parsim_bank(&bank)?;
                let err =
                    parsim::realize::spectral_norm(&(&est.stacked_gamma_lp - &truth_gl));
                out.insert("parsim_err_gammalp".into(), err.into());
                let r = svd_realize(&est.stacked_gamma_lp, m.nx())?;
                let aligned = align_similarity(&m, p, f, &r)?;
                out.insert("aligned".into(), serde_json::to_value(&aligned)?);
                if let Some(path) = output {
                    let sys = extract_system(&r, p, m.nx(), m.nu(), m.ny())?;
                    let realized = StateSpaceModel::new(
                        sys.a, sys.b, sys.c, sys.k, m.sigma_e(), m.sigma_u(),
                    )?;
                    let mut doc = realized.to_json();
                    doc.as_object_mut().expect("object").insert(
                        "similarity".into(),
                        serde_json::to_value(&aligned)?,
                    );
                    std::fs::write(&path, serde_json::to_string_pretty(&doc)?)?;
                    eprintln!("wrote realized model to {}", path.display());
                }
            }
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::Bounds {
            model,
            p,
            f,
            n,
            delta,
            c,
            c0,
        } => {
            let m = load_model(&model)?;
            let reports: Vec<_> = (1..=f)
                .map(|i| bound_report(&m, p, f, i, n, delta, c, c0, 100_000_000))
                .collect::<parsim::Result<_>>()?;
            println!("{}", serde_json::to_string_pretty(&reports)?);
        }
        Command::Sweep { config } => {
            let text = std::fs::read_to_string(&config)?;
            let cfg: ExperimentConfig = serde_json::from_str(&text)
                .map_err(|e| Error::Config(format!("bad config: {e}")))?;
            let result = run_sweep(&cfg)?;
            write_sweep(&result, &cfg.output_dir)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&result.summary)?
            );
        }
        Command::Report { sweep_dir } => {
            let rows = read_rows(&sweep_dir)?;
            let mut ns: Vec<usize> = rows.iter().map(|r| r.n).collect();
            ns.sort_unstable();
            ns.dedup();
            let mut medians = Vec::new();
            for n in ns {
                let mut errs: Vec<f64> = rows
                    .iter()
                    .filter(|r| r.n == n && r.err_theta_max.is_finite())
                    .map(|r| r.err_theta_max)
                    .collect();
                errs.sort_by(|a, b| a.partial_cmp(b).unwrap());
                let med = errs.get(errs.len().saturating_sub(1) / 2).copied();
                if let Some(med) = med {
                    medians.push((n, med));
                }
            }
            let fit = parsim::harness::fit_loglog_slope(&medians).ok();
            let report = serde_json::json!({
                "rows": rows.len(),
                "median_err_theta_max": medians
                    .iter()
                    .map(|(n, e)| serde_json::json!({"n": n, "median": e}))
                    .collect::<Vec<_>>(),
                "slope": fit,
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}
