//! Command-line front end: ingestion, estimation, the two tests,
//! critical values and the Monte Carlo verification suites.
//!
//! Every command prints a JSON report envelope on stdout. Errors go
//! to stderr as `{"error": code, "detail": ...}` with exit code 2 for
//! input/format problems and 3 for violated statistical
//! preconditions.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

use ccinfer::data::{extract_complete_cases, load_csv};
use ccinfer::error::{Error, Result};
use ccinfer::limits::{empirical_quantile, LimitLaw};
use ccinfer::linearity::{run_linearity_test, ChiFn, NullDesign};
use ccinfer::normality::run_normality_test;
use ccinfer::series::{choose_k, fit_series_ls};
use ccinfer::sim::{
    efficiency_variance_check, replicate, transfer_samples, MeanResponseFamily, RhoFn,
    ScenarioConfig,
};
use ccinfer::transfer::{
    StatisticFamily,
    binomial_index_sample, complete_case_statistic, enumerate_component_law, lemma1_mixture,
    merge_atoms, ComponentLaw, MeanFamily,
};

#[derive(Parser)]
#[command(name = "ccinfer", version, about = "Complete-case inference for partially linear regression with missing responses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum LawArg {
    /// sup |B(t)| of a Brownian motion (normality test)
    Bm,
    /// sup |B_0(t)| of a Brownian bridge (linearity test)
    Bridge,
}

impl From<LawArg> for LimitLaw {
    fn from(arg: LawArg) -> Self {
        match arg {
            LawArg::Bm => LimitLaw::SupAbsBrownianMotion,
            LawArg::Bridge => LimitLaw::SupAbsBrownianBridge,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum NullArg {
    Constant,
    Linear,
}

impl From<NullArg> for NullDesign {
    fn from(arg: NullArg) -> Self {
        match arg {
            NullArg::Constant => NullDesign::ConstantRho,
            NullArg::Linear => NullDesign::LinearRho,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AnalysisArg {
    Normal,
    Linear,
    Efficiency,
    Transfer,
}

#[derive(Subcommand)]
enum Command {
    /// Fit the partially linear model on the complete cases
    Estimate {
        #[arg(long)]
        input: PathBuf,
        /// Basis cutoff: `auto` for the N^(1/4) rule or an integer
        #[arg(long, default_value = "auto")]
        k: String,
    },
    /// Martingale-transform test of error normality
    TestNormal {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
    },
    /// Marked partial-sum test of linearity of the smooth component
    TestLinear {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        /// Weight function chi(V): cos1, cos2 or poly2
        #[arg(long, default_value = "cos1")]
        chi: String,
        #[arg(long, value_enum, default_value_t = NullArg::Constant)]
        null: NullArg,
    },
    /// Critical values of the null limit laws
    CriticalValues {
        #[arg(long, value_enum)]
        law: LawArg,
        /// Comma-separated confidence levels
        #[arg(long, default_value = "0.90,0.95,0.99")]
        levels: String,
    },
    /// Monte Carlo runs over a scenario file
    Simulate {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        reps: usize,
        #[arg(long, value_enum)]
        analysis: AnalysisArg,
        /// Directory for the per-replication CSV and JSON summary
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        /// Worker threads (default: all cores); results do not depend on it
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Exact finite-sample verification of the mixture representation
    VerifyLemma1 {
        /// Largest full sample size enumerated exhaustively
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// Monte Carlo draws for the binomial-index comparison
        #[arg(long, default_value_t = 100_000)]
        draws: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let envelope = json!({ "error": err.code(), "detail": err.to_string() });
            eprintln!("{envelope}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn envelope(command: &str, inputs: serde_json::Value, result: serde_json::Value) {
    let out = json!({
        "command": command,
        "inputs": inputs,
        "result": result,
        "version": env!("CARGO_PKG_VERSION"),
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Estimate { input, k } => cmd_estimate(&input, &k),
        Command::TestNormal { input, alpha } => cmd_test_normal(&input, alpha),
        Command::TestLinear {
            input,
            alpha,
            chi,
            null,
        } => cmd_test_linear(&input, alpha, &chi, null.into()),
        Command::CriticalValues { law, levels } => cmd_critical_values(law.into(), &levels),
        Command::Simulate {
            scenario,
            reps,
            analysis,
            out,
            alpha,
            threads,
        } => cmd_simulate(&scenario, reps, analysis, &out, alpha, threads),
        Command::VerifyLemma1 { n_max, draws, seed } => cmd_verify_lemma1(n_max, draws, seed),
    }
}

fn cmd_estimate(input: &PathBuf, k_flag: &str) -> Result<()> {
    let data = load_csv(input)?;
    let cc = extract_complete_cases(&data);
    let k = match k_flag {
        "auto" => choose_k(cc.n().max(1)),
        other => other
            .parse::<usize>()
            .map_err(|_| Error::InvalidConfig(format!("--k must be `auto` or an integer, got `{other}`")))?,
    };
    let weights = vec![1u8; cc.n()];
    let fit = fit_series_ls(&cc.pairs, &weights, k)?;
    envelope(
        "estimate",
        json!({ "input": input, "k": k_flag }),
        json!({
            "theta_hat": fit.theta_hat,
            "beta_hat": fit.beta_hat,
            "sigma_hat": fit.sigma_hat,
            "n_used": cc.n(),
            "n_total": data.len(),
            "k": k,
        }),
    );
    Ok(())
}

fn cmd_test_normal(input: &PathBuf, alpha: f64) -> Result<()> {
    let data = load_csv(input)?;
    let report = run_normality_test(&data, alpha)?;
    envelope(
        "test-normal",
        json!({ "input": input, "alpha": alpha }),
        serde_json::to_value(&report).expect("serializable"),
    );
    Ok(())
}

fn cmd_test_linear(input: &PathBuf, alpha: f64, chi: &str, null: NullDesign) -> Result<()> {
    let data = load_csv(input)?;
    let chi = ChiFn::from_name(chi)?;
    let report = run_linearity_test(&data, alpha, chi, null)?;
    envelope(
        "test-linear",
        json!({ "input": input, "alpha": alpha, "chi": chi.name(), "null": null }),
        serde_json::to_value(&report).expect("serializable"),
    );
    Ok(())
}

fn cmd_critical_values(law: LimitLaw, levels: &str) -> Result<()> {
    let levels: Vec<f64> = levels
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidConfig(format!("bad level `{s}`")))
        })
        .collect::<Result<_>>()?;
    let mut table = Vec::new();
    for &level in &levels {
        if !(level > 0.0 && level < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "levels must be in (0,1), got {level}"
            )));
        }
        table.push(json!({ "level": level, "critical_value": law.quantile(level)? }));
    }
    envelope(
        "critical-values",
        json!({ "law": law, "levels": levels }),
        json!({ "law": law, "table": table }),
    );
    Ok(())
}

fn rejection_summary(stats: &[(f64, f64, bool)], alpha: f64) -> serde_json::Value {
    let reps = stats.len();
    let rate = stats.iter().filter(|(_, _, reject)| *reject).count() as f64 / reps as f64;
    let values: Vec<f64> = stats.iter().map(|(s, _, _)| *s).collect();
    json!({
        "reps": reps,
        "alpha": alpha,
        "rejection_rate": rate,
        "statistic_quantiles": {
            "q50": empirical_quantile(&values, 0.50),
            "q90": empirical_quantile(&values, 0.90),
            "q95": empirical_quantile(&values, 0.95),
        },
    })
}

fn cmd_simulate(
    scenario: &PathBuf,
    reps: usize,
    analysis: AnalysisArg,
    out: &PathBuf,
    alpha: f64,
    threads: Option<usize>,
) -> Result<()> {
    if let Some(threads) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
    }
    let config = ScenarioConfig::from_file(scenario)?;
    std::fs::create_dir_all(out)?;
    let mut rows_csv = String::new();
    let summary = match analysis {
        AnalysisArg::Normal => {
            let stats = replicate(&config, reps, |data| {
                let r = run_normality_test(data, alpha)?;
                Ok((r.statistic, r.p_value, r.reject))
            })?;
            rows_csv.push_str("rep,statistic,p_value,reject\n");
            for (rep, (stat, p, reject)) in stats.iter().enumerate() {
                rows_csv.push_str(&format!("{rep},{stat},{p},{}\n", u8::from(*reject)));
            }
            let mut summary = rejection_summary(&stats, alpha);
            summary["analysis"] = json!("normal");
            summary
        }
        AnalysisArg::Linear => {
            let null = match config.rho {
                RhoFn::Linear { .. } => NullDesign::LinearRho,
                _ => NullDesign::ConstantRho,
            };
            let chi = ChiFn::default_for(null);
            let stats = replicate(&config, reps, |data| {
                let r = run_linearity_test(data, alpha, chi, null)?;
                Ok((r.statistic, r.p_value, r.reject))
            })?;
            rows_csv.push_str("rep,statistic,p_value,reject\n");
            for (rep, (stat, p, reject)) in stats.iter().enumerate() {
                rows_csv.push_str(&format!("{rep},{stat},{p},{}\n", u8::from(*reject)));
            }
            let mut summary = rejection_summary(&stats, alpha);
            summary["analysis"] = json!("linear");
            summary["chi"] = json!(chi.name());
            summary["null"] = json!(null);
            summary
        }
        AnalysisArg::Efficiency => {
            let check = efficiency_variance_check(&config, reps, 1_000_000)?;
            rows_csv.push_str("rep,component,scaled_error\n");
            // per-replication scaled errors are recomputed for the CSV
            let thetas = replicate(&config, reps, ccinfer::sim::complete_case_theta)?;
            let sqrt_n = (config.n as f64).sqrt();
            for (rep, th) in thetas.iter().enumerate() {
                for (i, (est, truth)) in th.iter().zip(&config.theta).enumerate() {
                    rows_csv.push_str(&format!("{rep},{i},{}\n", sqrt_n * (est - truth)));
                }
            }
            json!({
                "analysis": "efficiency",
                "reps": reps,
                "empirical_covariance": check.empirical,
                "target_covariance": check.oracle.target,
                "w_tilde": check.oracle.w_tilde,
                "e_delta": check.oracle.e_delta,
                "j_f": check.oracle.j_f,
            })
        }
        AnalysisArg::Transfer => {
            let samples = transfer_samples(&config, &MeanResponseFamily, reps)?;
            rows_csv.push_str("rep,complete_case,binomial_index\n");
            for (rep, (a, b)) in samples
                .complete_case
                .iter()
                .zip(&samples.binomial_index)
                .enumerate()
            {
                rows_csv.push_str(&format!("{rep},{a},{b}\n"));
            }
            let ks = ccinfer::sim::two_sample_ks(&samples.complete_case, &samples.binomial_index);
            json!({
                "analysis": "transfer",
                "reps": reps,
                "ks_distance": ks,
                "e_delta": samples.e_delta,
            })
        }
    };
    std::fs::write(out.join("replications.csv"), rows_csv)?;
    let summary_pretty = serde_json::to_string_pretty(&summary).expect("serializable");
    std::fs::write(out.join("summary.json"), &summary_pretty)?;
    envelope(
        "simulate",
        json!({
            "scenario": scenario,
            "reps": reps,
            "alpha": alpha,
            "out": out,
        }),
        summary,
    );
    Ok(())
}

/// Exhaustive law of the complete-case statistic: every delta pattern
/// with its probability, every observation tuple over the support.
fn enumerate_complete_case_law(n: usize, p: f64, support: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut atoms = Vec::new();
    for mask in 0u32..(1 << n) {
        let deltas: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
        let k = deltas.iter().filter(|&&d| d == 1).count();
        let pattern_prob = p.powi(k as i32) * (1.0 - p).powi((n - k) as i32);
        if pattern_prob == 0.0 {
            continue;
        }
        if k == 0 {
            atoms.push((MeanFamily.empty_value()[0], pattern_prob));
            continue;
        }
        // enumerate observation tuples at the delta = 1 positions
        let mut idx = vec![0usize; k];
        loop {
            let obs: Vec<f64> = idx.iter().map(|&i| support[i].0).collect();
            let prob: f64 = idx.iter().map(|&i| support[i].1).product();
            let value = complete_case_statistic(&MeanFamily, &deltas, &obs).expect("arity")[0];
            atoms.push((value, pattern_prob * prob));
            // odometer increment
            let mut pos = 0;
            loop {
                if pos == k {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < support.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    merge_atoms(atoms)
}

fn cmd_verify_lemma1(n_max: usize, draws: usize, seed: u64) -> Result<()> {
    if n_max == 0 || n_max > 12 {
        return Err(Error::InvalidConfig(
            "n-max must be between 1 and 12 (exhaustive enumeration)".into(),
        ));
    }
    let support = [(0.0f64, 0.5), (1.0, 0.5)];
    let mut cases = Vec::new();
    let mut max_discrepancy: f64 = 0.0;
    for n in 1..=n_max {
        for &p in &[0.3, 0.5, 1.0] {
            let mixture = lemma1_mixture(n, p, 0.0, |k| {
                enumerate_component_law(&MeanFamily, k, &support)
            })?;
            let mix_atoms = mixture.atoms().expect("all components exact");
            let direct = enumerate_complete_case_law(n, p, &support);
            let grid: Vec<f64> = direct.iter().map(|&(v, _)| v).collect();
            let mut worst: f64 = 0.0;
            for &b in &grid {
                let mix_cdf = mixture.cdf(b);
                let direct_cdf: f64 = direct
                    .iter()
                    .filter(|&&(v, _)| v <= b)
                    .map(|&(_, q)| q)
                    .sum();
                worst = worst.max((mix_cdf - direct_cdf).abs());
            }
            max_discrepancy = max_discrepancy.max(worst);
            cases.push(json!({
                "n": n,
                "p": p,
                "atoms": mix_atoms.len(),
                "max_cdf_discrepancy": worst,
            }));
        }
    }

    // Remark 3: binomial-index draws against the exact mixture CDF
    let n = n_max.min(5);
    let p = 0.3;
    let mixture = lemma1_mixture(n, p, 0.0, |k| {
        enumerate_component_law(&MeanFamily, k, &support)
    })?;
    let mut rng = ccinfer::sim::replication_rng(seed, 0);
    let mut sample = Vec::with_capacity(draws);
    for _ in 0..draws {
        let value = binomial_index_sample(
            &MeanFamily,
            n,
            p,
            |r: &mut rand_chacha::ChaCha8Rng| {
                if rand::Rng::gen_bool(r, 0.5) {
                    1.0
                } else {
                    0.0
                }
            },
            &mut rng,
        )?[0];
        sample.push(value);
    }
    let ks = mixture.ks_distance(&sample);
    let _ = ComponentLaw::Exact(vec![]); // keep the variant imported for clarity

    envelope(
        "verify-lemma1",
        json!({ "n_max": n_max, "draws": draws, "seed": seed }),
        json!({
            "cases": cases,
            "max_cdf_discrepancy": max_discrepancy,
            "exact_bound": 1e-12,
            "exact_ok": max_discrepancy < 1e-12,
            "remark3": { "n": n, "p": p, "draws": draws, "ks_distance": ks, "bound": 0.01, "ok": ks < 0.01 },
        }),
    );
    Ok(())
}
