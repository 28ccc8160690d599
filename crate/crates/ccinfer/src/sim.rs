//! Scenario generation and the Monte Carlo verification harness.
//!
//! Scenarios describe a data-generating process for the partially
//! linear MAR model: covariate law, smooth component, error law,
//! propensity and sample size. Replications derive one RNG stream per
//! replication index from the master seed, so results are
//! deterministic and independent of the thread count.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution, StandardNormal, StudentT};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::data::{extract_complete_cases, CompletePair, MarDataset, MarRow};
use crate::error::{Error, Result};
use crate::normality::martingale_statistic;
use crate::series::{choose_k, fit_series_ls, normalized_residuals};
use crate::transfer::StatisticFamily;

/// Smooth components `rho` available to scenarios; all are twice
/// continuously differentiable on `[0,1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RhoFn {
    Constant(f64),
    Linear { a: f64, b: f64 },
    Sin2Pi,
    CosPi,
}

impl RhoFn {
    pub fn eval(self, v: f64) -> f64 {
        match self {
            RhoFn::Constant(c) => c,
            RhoFn::Linear { a, b } => a + b * v,
            RhoFn::Sin2Pi => (2.0 * std::f64::consts::PI * v).sin(),
            RhoFn::CosPi => (std::f64::consts::PI * v).cos(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("const:") {
            let c = rest
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("bad rho constant `{rest}`")))?;
            return Ok(RhoFn::Constant(c));
        }
        if let Some(rest) = s.strip_prefix("linear:") {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() == 2 {
                if let (Ok(a), Ok(b)) = (parts[0].parse(), parts[1].parse()) {
                    return Ok(RhoFn::Linear { a, b });
                }
            }
            return Err(Error::InvalidConfig(format!("bad linear rho `{rest}`")));
        }
        match s {
            "sin2pi" => Ok(RhoFn::Sin2Pi),
            "cospi" => Ok(RhoFn::CosPi),
            other => Err(Error::InvalidConfig(format!(
                "unknown rho `{other}` (const:<c>, linear:<a>,<b>, sin2pi, cospi)"
            ))),
        }
    }
}

/// Error laws; all have mean zero and variance `sigma^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorLaw {
    Normal { sigma: f64 },
    /// Student t rescaled to variance `sigma^2`; requires `df > 2`.
    StudentT { df: f64, sigma: f64 },
    /// Symmetric two-component normal mixture (modes at +-1,
    /// component sd 0.5) rescaled to variance `sigma^2`.
    CenteredMixture { sigma: f64 },
}

impl ErrorLaw {
    pub fn validate(self) -> Result<()> {
        let sigma = self.sigma();
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::InvalidConfig(format!("sigma must be > 0, got {sigma}")));
        }
        if let ErrorLaw::StudentT { df, .. } = self {
            // negated form so NaN is rejected too
            #[allow(clippy::neg_cmp_op_on_partial_ord)]
            if !(df > 2.0) {
                return Err(Error::InvalidConfig(format!(
                    "student_t needs df > 2 for a finite variance, got {df}"
                )));
            }
        }
        Ok(())
    }

    pub fn sigma(self) -> f64 {
        match self {
            ErrorLaw::Normal { sigma }
            | ErrorLaw::StudentT { sigma, .. }
            | ErrorLaw::CenteredMixture { sigma } => sigma,
        }
    }

    pub fn sample<R: Rng>(self, rng: &mut R) -> f64 {
        match self {
            ErrorLaw::Normal { sigma } => {
                let z: f64 = StandardNormal.sample(rng);
                sigma * z
            }
            ErrorLaw::StudentT { df, sigma } => {
                let t: f64 = StudentT::new(df).unwrap().sample(rng);
                sigma * ((df - 2.0) / df).sqrt() * t
            }
            ErrorLaw::CenteredMixture { sigma } => {
                let z: f64 = StandardNormal.sample(rng);
                let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                let raw = sign + 0.5 * z; // variance 1.25
                sigma * raw / 1.25f64.sqrt()
            }
        }
    }
}

/// Covariate laws for `(U, V)`; `V` is always uniform on `[0,1]`, so
/// its density is bounded away from zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CovariateLaw {
    /// `U ~ N(0, I_m)` independent of `V`.
    Independent,
    /// `U_i = (V - 1/2) + N(0,1)`: conditional mean of `U` given `V`
    /// is linear in `V`, conditional variance 1.
    Correlated,
}

impl CovariateLaw {
    pub fn sample<R: Rng>(self, m: usize, rng: &mut R) -> (Vec<f64>, f64) {
        let v: f64 = rng.gen_range(0.0..1.0);
        let u = (0..m)
            .map(|_| {
                let z: f64 = StandardNormal.sample(rng);
                match self {
                    CovariateLaw::Independent => z,
                    CovariateLaw::Correlated => (v - 0.5) + z,
                }
            })
            .collect();
        (u, v)
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "independent" => Ok(CovariateLaw::Independent),
            "correlated" => Ok(CovariateLaw::Correlated),
            other => Err(Error::InvalidConfig(format!(
                "unknown covariate law `{other}` (independent, correlated)"
            ))),
        }
    }
}

/// Propensity `pi(u, v) = P(delta = 1 | U = u, V = v)`, bounded away
/// from zero by validation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Propensity {
    Constant(f64),
    /// `pi(v) = a + b v`.
    LinearV { a: f64, b: f64 },
}

impl Propensity {
    pub fn eval(self, _u: &[f64], v: f64) -> f64 {
        match self {
            Propensity::Constant(p) => p,
            Propensity::LinearV { a, b } => a + b * v,
        }
    }

    /// Infimum over the covariate support.
    pub fn min_value(self) -> f64 {
        match self {
            Propensity::Constant(p) => p,
            Propensity::LinearV { a, b } => a.min(a + b),
        }
    }

    pub fn max_value(self) -> f64 {
        match self {
            Propensity::Constant(p) => p,
            Propensity::LinearV { a, b } => a.max(a + b),
        }
    }

    /// The same propensity with all values multiplied by `factor`.
    pub fn scaled(self, factor: f64) -> Self {
        match self {
            Propensity::Constant(p) => Propensity::Constant(factor * p),
            Propensity::LinearV { a, b } => Propensity::LinearV {
                a: factor * a,
                b: factor * b,
            },
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("const:") {
            let p = rest
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("bad propensity `{rest}`")))?;
            return Ok(Propensity::Constant(p));
        }
        if let Some(rest) = s.strip_prefix("linear_v:") {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() == 2 {
                if let (Ok(a), Ok(b)) = (parts[0].parse(), parts[1].parse()) {
                    return Ok(Propensity::LinearV { a, b });
                }
            }
            return Err(Error::InvalidConfig(format!("bad propensity `{rest}`")));
        }
        Err(Error::InvalidConfig(format!(
            "unknown propensity `{s}` (const:<p>, linear_v:<a>,<b>)"
        )))
    }
}

/// Data-generating process for one Monte Carlo scenario.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioConfig {
    pub n: usize,
    pub m: usize,
    pub theta: Vec<f64>,
    pub rho: RhoFn,
    pub error: ErrorLaw,
    pub covariates: CovariateLaw,
    pub propensity: Propensity,
    pub seed: u64,
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidConfig("n must be >= 1".into()));
        }
        if self.m == 0 {
            return Err(Error::InvalidConfig("m must be >= 1".into()));
        }
        if self.theta.len() != self.m {
            return Err(Error::InvalidConfig(format!(
                "theta has {} entries, expected m = {}",
                self.theta.len(),
                self.m
            )));
        }
        self.error.validate()?;
        let pmin = self.propensity.min_value();
        let pmax = self.propensity.max_value();
        // negated form so NaN is rejected too
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(pmin > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "propensity must be bounded away from zero, min = {pmin}"
            )));
        }
        if pmax > 1.0 {
            return Err(Error::InvalidConfig(format!(
                "propensity exceeds 1, max = {pmax}"
            )));
        }
        Ok(())
    }

    /// Parses the flat `key = value` scenario file format. Keys:
    /// `n, m, theta, rho, error, sigma, df, pi, covariates, seed`.
    /// Lines starting with `#` are comments.
    pub fn from_key_values(text: &str) -> Result<Self> {
        let mut map = std::collections::HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidConfig(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            map.insert(key.trim().to_string(), value.trim().to_string());
        }
        let get = |key: &str| -> Result<&String> {
            map.get(key)
                .ok_or_else(|| Error::InvalidConfig(format!("missing key `{key}`")))
        };
        let n: usize = get("n")?
            .parse()
            .map_err(|_| Error::InvalidConfig("bad n".into()))?;
        let m: usize = get("m")?
            .parse()
            .map_err(|_| Error::InvalidConfig("bad m".into()))?;
        let theta: Vec<f64> = get("theta")?
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::InvalidConfig("bad theta".into()))?;
        let rho = RhoFn::parse(get("rho")?)?;
        let sigma: f64 = map
            .get("sigma")
            .map(|s| s.parse::<f64>())
            .transpose()
            .map_err(|_| Error::InvalidConfig("bad sigma".into()))?
            .unwrap_or(1.0);
        let error = match get("error")?.as_str() {
            "normal" => ErrorLaw::Normal { sigma },
            "student_t" => {
                let df: f64 = get("df")?
                    .parse()
                    .map_err(|_| Error::InvalidConfig("bad df".into()))?;
                ErrorLaw::StudentT { df, sigma }
            }
            "centered_mixture" => ErrorLaw::CenteredMixture { sigma },
            other => {
                return Err(Error::InvalidConfig(format!(
                    "unknown error law `{other}` (normal, student_t, centered_mixture)"
                )))
            }
        };
        let covariates = match map.get("covariates") {
            Some(s) => CovariateLaw::parse(s)?,
            None => CovariateLaw::Independent,
        };
        let propensity = Propensity::parse(get("pi")?)?;
        let seed: u64 = get("seed")?
            .parse()
            .map_err(|_| Error::InvalidConfig("bad seed".into()))?;
        let config = ScenarioConfig {
            n,
            m,
            theta,
            rho,
            error,
            covariates,
            propensity,
            seed,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn from_file<P: AsRef<Path>>(path: P) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_key_values(&text)
    }
}

/// Draws one dataset plus the underlying error vector (the errors of
/// every row, observed or not), needed by the expansion diagnostics.
pub fn generate_with_errors<R: Rng>(
    config: &ScenarioConfig,
    rng: &mut R,
) -> Result<(MarDataset, Vec<f64>)> {
    config.validate()?;
    let mut rows = Vec::with_capacity(config.n);
    let mut errors = Vec::with_capacity(config.n);
    for _ in 0..config.n {
        let (u, v) = config.covariates.sample(config.m, rng);
        let eps = config.error.sample(rng);
        let y: f64 = config
            .theta
            .iter()
            .zip(&u)
            .map(|(t, ui)| t * ui)
            .sum::<f64>()
            + config.rho.eval(v)
            + eps;
        let pi = config.propensity.eval(&u, v);
        let delta = rng.gen_bool(pi);
        rows.push(MarRow {
            u,
            v,
            y: delta.then_some(y),
        });
        errors.push(eps);
    }
    Ok((MarDataset::new(rows, config.m)?, errors))
}

/// Draws one dataset from the scenario.
pub fn generate_scenario<R: Rng>(config: &ScenarioConfig, rng: &mut R) -> Result<MarDataset> {
    generate_with_errors(config, rng).map(|(data, _)| data)
}

/// RNG for replication `index` of a scenario: one ChaCha stream per
/// index, derived from the master seed.
pub fn replication_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Runs `analysis` on `reps` independent scenario draws, in parallel,
/// collecting results in replication order. A failing replication
/// aborts with its index attached.
pub fn replicate<T: Send>(
    config: &ScenarioConfig,
    reps: usize,
    analysis: impl Fn(&MarDataset) -> Result<T> + Sync,
) -> Result<Vec<T>> {
    config.validate()?;
    if reps == 0 {
        return Err(Error::InvalidConfig("reps must be >= 1".into()));
    }
    (0..reps)
        .into_par_iter()
        .map(|rep| {
            let mut rng = replication_rng(config.seed, rep as u64);
            let data = generate_scenario(config, &mut rng)
                .and_then(|d| analysis(&d))
                .map_err(|e| Error::Replication {
                    index: rep,
                    source: Box::new(e),
                })?;
            Ok(data)
        })
        .collect()
}

/// The `delta`-weighted series least-squares slope estimate for one
/// dataset, with `K = choose_k(N)`.
pub fn complete_case_theta(data: &MarDataset) -> Result<Vec<f64>> {
    let cc = extract_complete_cases(data);
    let k = choose_k(cc.n().max(1));
    let weights = vec![1u8; cc.n()];
    let fit = fit_series_ls(&cc.pairs, &weights, k)?;
    Ok(fit.theta_hat)
}

/// Asymptotic variance target of the efficient complete-case slope
/// estimator under normal errors.
#[derive(Debug, Clone, Serialize)]
pub struct EfficiencyTarget {
    /// Fisher information for location, `1/sigma^2` for the normal.
    pub j_f: f64,
    /// `E[(U - mu(V))(U - mu(V))' | delta = 1]`.
    pub w_tilde: Vec<Vec<f64>>,
    pub e_delta: f64,
    /// `(sigma^2 / E[delta]) * w_tilde^{-1}`.
    pub target: Vec<Vec<f64>>,
}

/// Estimates the efficiency target from a large oracle sample:
/// `E[delta]` by averaging, `mu(V) = E[U | V, delta = 1]` by a
/// 200-bin conditional mean over the `delta = 1` draws.
pub fn efficiency_target(config: &ScenarioConfig, oracle_draws: usize) -> Result<EfficiencyTarget> {
    config.validate()?;
    let sigma = match config.error {
        ErrorLaw::Normal { sigma } => sigma,
        _ => {
            return Err(Error::InvalidConfig(
                "efficiency check requires normal errors".into(),
            ))
        }
    };
    let m = config.m;
    const BINS: usize = 200;
    // oracle stream far away from replication streams
    let mut rng = replication_rng(config.seed, u64::MAX);
    let mut kept: Vec<(Vec<f64>, usize)> = Vec::new();
    let mut n_delta = 0usize;
    for _ in 0..oracle_draws {
        let (u, v) = config.covariates.sample(m, &mut rng);
        let pi = config.propensity.eval(&u, v);
        if rng.gen_bool(pi) {
            n_delta += 1;
            let bin = ((v * BINS as f64) as usize).min(BINS - 1);
            kept.push((u, bin));
        }
    }
    let e_delta = n_delta as f64 / oracle_draws as f64;
    if kept.is_empty() {
        return Err(Error::InvalidConfig("no delta = 1 draws in oracle sample".into()));
    }
    let mut bin_sum = vec![vec![0.0; m]; BINS];
    let mut bin_count = vec![0usize; BINS];
    for (u, bin) in &kept {
        for (s, ui) in bin_sum[*bin].iter_mut().zip(u) {
            *s += ui;
        }
        bin_count[*bin] += 1;
    }
    let bin_mean: Vec<Vec<f64>> = bin_sum
        .iter()
        .zip(&bin_count)
        .map(|(sum, &c)| {
            if c == 0 {
                vec![0.0; m]
            } else {
                sum.iter().map(|s| s / c as f64).collect()
            }
        })
        .collect();
    let mut w = DMatrix::zeros(m, m);
    for (u, bin) in &kept {
        let centered: Vec<f64> = u.iter().zip(&bin_mean[*bin]).map(|(ui, mu)| ui - mu).collect();
        for i in 0..m {
            for j in 0..m {
                w[(i, j)] += centered[i] * centered[j];
            }
        }
    }
    w /= kept.len() as f64;
    let w_inv = w.clone().try_inverse().ok_or_else(|| {
        Error::InvalidConfig("W_tilde oracle estimate is singular".into())
    })?;
    let target = w_inv * (sigma * sigma / e_delta);
    let to_rows = |mat: &DMatrix<f64>| -> Vec<Vec<f64>> {
        (0..m).map(|i| (0..m).map(|j| mat[(i, j)]).collect()).collect()
    };
    Ok(EfficiencyTarget {
        j_f: 1.0 / (sigma * sigma),
        w_tilde: to_rows(&w),
        e_delta,
        target: to_rows(&target),
    })
}

/// Empirical vs. target covariance of `sqrt(n) (theta_hat_c - theta)`.
#[derive(Debug, Clone, Serialize)]
pub struct EfficiencyCheck {
    pub empirical: Vec<Vec<f64>>,
    pub oracle: EfficiencyTarget,
    pub reps: usize,
}

/// Monte Carlo check of the efficiency expansion: the covariance of
/// the scaled complete-case slope error should match
/// `(sigma^2 / E[delta]) W_tilde^{-1}`.
pub fn efficiency_variance_check(
    config: &ScenarioConfig,
    reps: usize,
    oracle_draws: usize,
) -> Result<EfficiencyCheck> {
    let oracle = efficiency_target(config, oracle_draws)?;
    let thetas = replicate(config, reps, complete_case_theta)?;
    let m = config.m;
    let sqrt_n = (config.n as f64).sqrt();
    let scaled: Vec<Vec<f64>> = thetas
        .iter()
        .map(|th| {
            th.iter()
                .zip(&config.theta)
                .map(|(e, t)| sqrt_n * (e - t))
                .collect()
        })
        .collect();
    let mean: Vec<f64> = (0..m)
        .map(|i| scaled.iter().map(|s| s[i]).sum::<f64>() / reps as f64)
        .collect();
    let mut cov = vec![vec![0.0; m]; m];
    for s in &scaled {
        for i in 0..m {
            for j in 0..m {
                cov[i][j] += (s[i] - mean[i]) * (s[j] - mean[j]);
            }
        }
    }
    for row in &mut cov {
        for x in row.iter_mut() {
            *x /= (reps - 1).max(1) as f64;
        }
    }
    Ok(EfficiencyCheck {
        empirical: cov,
        oracle,
        reps,
    })
}

/// Two-sample Kolmogorov distance.
pub fn two_sample_ks(a: &[f64], b: &[f64]) -> f64 {
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_by(|x, y| x.partial_cmp(y).unwrap());
    sb.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let na = sa.len() as f64;
    let nb = sb.len() as f64;
    let mut sup: f64 = 0.0;
    for &x in sa.iter().chain(sb.iter()) {
        let fa = sa.partition_point(|&v| v <= x) as f64 / na;
        let fb = sb.partition_point(|&v| v <= x) as f64 / nb;
        sup = sup.max((fa - fb).abs());
    }
    sup
}

/// Statistic families over complete pairs used by the transfer
/// verification.
pub struct MeanResponseFamily;

impl StatisticFamily<CompletePair> for MeanResponseFamily {
    fn eval(&self, sample: &[CompletePair]) -> Vec<f64> {
        vec![sample.iter().map(|p| p.y).sum::<f64>() / sample.len() as f64]
    }

    fn empty_value(&self) -> Vec<f64> {
        vec![0.0]
    }
}

/// The complete-case normality statistic viewed as a statistic family
/// over samples of complete pairs. Samples too small (or too
/// degenerate) to fit fall back to the empty value so that the family
/// is total.
pub struct NormalityStatisticFamily;

impl StatisticFamily<CompletePair> for NormalityStatisticFamily {
    fn eval(&self, sample: &[CompletePair]) -> Vec<f64> {
        let stat = (|| -> Result<f64> {
            let k = choose_k(sample.len());
            let weights = vec![1u8; sample.len()];
            let fit = fit_series_ls(sample, &weights, k)?;
            let zhat = normalized_residuals(&fit)?;
            Ok(martingale_statistic(&zhat)?.0)
        })();
        vec![stat.unwrap_or(0.0)]
    }

    fn empty_value(&self) -> Vec<f64> {
        vec![0.0]
    }
}

/// Transfer verification (the matched-law comparison): the empirical
/// law of the complete-case statistic over MAR replications against
/// the binomial-index construction with i.i.d. conditional-law draws
/// obtained by rejection sampling. Returns the two-sample Kolmogorov
/// distance; the laws are equal exactly, so the distance is pure
/// sampling noise.
pub fn verify_transfer(
    config: &ScenarioConfig,
    family: &(impl StatisticFamily<CompletePair> + Sync),
    reps: usize,
) -> Result<f64> {
    let samples = transfer_samples(config, family, reps)?;
    Ok(two_sample_ks(&samples.complete_case, &samples.binomial_index))
}

/// The raw per-replication statistic draws behind [`verify_transfer`].
pub struct TransferSamples {
    pub complete_case: Vec<f64>,
    pub binomial_index: Vec<f64>,
    pub e_delta: f64,
}

pub fn transfer_samples(
    config: &ScenarioConfig,
    family: &(impl StatisticFamily<CompletePair> + Sync),
    reps: usize,
) -> Result<TransferSamples> {
    config.validate()?;
    if reps < 100 {
        return Err(Error::InvalidConfig("transfer verification needs reps >= 100".into()));
    }
    // side A: complete-case statistic on MAR draws
    let complete_case: Vec<f64> = replicate(config, reps, |data| {
        let cc = extract_complete_cases(data);
        if cc.pairs.is_empty() {
            Ok(family.empty_value()[0])
        } else {
            Ok(family.eval(&cc.pairs)[0])
        }
    })?;

    // E[delta] from a dedicated oracle stream
    let mut rng = replication_rng(config.seed, u64::MAX - 1);
    let probe = 200_000;
    let mut acc = 0.0;
    for _ in 0..probe {
        let (u, v) = config.covariates.sample(config.m, &mut rng);
        acc += config.propensity.eval(&u, v);
    }
    let e_delta = acc / probe as f64;

    // side B: binomial index + rejection sampling from the
    // conditional law of a complete pair
    let binomial_index: Vec<f64> = (0..reps)
        .into_par_iter()
        .map(|rep| {
            let mut rng = replication_rng(config.seed ^ 0x5eed_c0de, reps as u64 + rep as u64);
            let binom = Binomial::new(config.n as u64, e_delta).expect("validated propensity");
            let k = binom.sample(&mut rng) as usize;
            if k == 0 {
                return family.empty_value()[0];
            }
            let mut pairs = Vec::with_capacity(k);
            while pairs.len() < k {
                let (u, v) = config.covariates.sample(config.m, &mut rng);
                let eps = config.error.sample(&mut rng);
                let pi = config.propensity.eval(&u, v);
                if rng.gen_bool(pi) {
                    let y: f64 = config
                        .theta
                        .iter()
                        .zip(&u)
                        .map(|(t, ui)| t * ui)
                        .sum::<f64>()
                        + config.rho.eval(v)
                        + eps;
                    pairs.push(CompletePair { u, v, y });
                }
            }
            family.eval(&pairs)[0]
        })
        .collect();

    Ok(TransferSamples {
        complete_case,
        binomial_index,
        e_delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config() -> ScenarioConfig {
        ScenarioConfig {
            n: 200,
            m: 1,
            theta: vec![1.0],
            rho: RhoFn::Constant(0.5),
            error: ErrorLaw::Normal { sigma: 1.0 },
            covariates: CovariateLaw::Independent,
            propensity: Propensity::LinearV { a: 0.6, b: 0.3 },
            seed: 11,
        }
    }

    #[test]
    fn full_observation_when_pi_is_one() {
        let config = ScenarioConfig {
            propensity: Propensity::Constant(1.0),
            ..base_config()
        };
        let mut rng = replication_rng(config.seed, 0);
        let data = generate_scenario(&config, &mut rng).unwrap();
        assert_eq!(data.n_complete(), data.len());
    }

    #[test]
    fn generation_is_deterministic() {
        let config = base_config();
        let a = generate_scenario(&config, &mut replication_rng(3, 0)).unwrap();
        let b = generate_scenario(&config, &mut replication_rng(3, 0)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn empirical_delta_rate_matches_integral() {
        let config = ScenarioConfig {
            n: 100_000,
            ..base_config()
        };
        let data = generate_scenario(&config, &mut replication_rng(5, 0)).unwrap();
        let rate = data.n_complete() as f64 / data.len() as f64;
        // integral of 0.6 + 0.3 v over [0,1] is 0.75
        assert!((rate - 0.75).abs() < 0.01, "rate = {rate}");
    }

    #[test]
    fn delta_uncorrelated_with_errors() {
        let config = ScenarioConfig {
            n: 100_000,
            ..base_config()
        };
        let (data, errors) = generate_with_errors(&config, &mut replication_rng(6, 0)).unwrap();
        let deltas: Vec<f64> = data.rows().iter().map(|r| f64::from(r.delta())).collect();
        let md = deltas.iter().sum::<f64>() / deltas.len() as f64;
        let me = errors.iter().sum::<f64>() / errors.len() as f64;
        let mut cov = 0.0;
        let mut vd = 0.0;
        let mut ve = 0.0;
        for (d, e) in deltas.iter().zip(&errors) {
            cov += (d - md) * (e - me);
            vd += (d - md) * (d - md);
            ve += (e - me) * (e - me);
        }
        let corr = cov / (vd.sqrt() * ve.sqrt());
        assert!(corr.abs() < 0.01, "corr = {corr}");
    }

    #[test]
    fn replicate_is_order_stable_and_deterministic() {
        let config = ScenarioConfig {
            n: 50,
            ..base_config()
        };
        let a = replicate(&config, 8, |d| Ok(d.n_complete())).unwrap();
        let b = replicate(&config, 8, |d| Ok(d.n_complete())).unwrap();
        assert_eq!(a, b);
        // reps = 1 equals the direct call
        let direct =
            generate_scenario(&config, &mut replication_rng(config.seed, 0)).unwrap();
        assert_eq!(a[0], direct.n_complete());
    }

    #[test]
    fn replication_errors_carry_the_index() {
        let config = ScenarioConfig {
            n: 3,
            ..base_config()
        };
        let err = replicate(&config, 2, |d| {
            crate::normality::run_normality_test(d, 0.05).map(|r| r.statistic)
        })
        .unwrap_err();
        assert!(matches!(err, Error::Replication { .. }));
    }

    #[test]
    fn scenario_file_round_trip() {
        let text = "\
# null scenario
n = 200
m = 1
theta = 1.0
rho = const:0.5
error = normal
sigma = 1.0
pi = linear_v:0.6,0.3
seed = 11
";
        let config = ScenarioConfig::from_key_values(text).unwrap();
        assert_eq!(config.n, 200);
        assert_eq!(config.rho, RhoFn::Constant(0.5));
        assert_eq!(config.propensity, Propensity::LinearV { a: 0.6, b: 0.3 });
        assert_eq!(config.covariates, CovariateLaw::Independent);
    }

    #[test]
    fn invalid_configs_rejected() {
        let mut config = base_config();
        config.propensity = Propensity::LinearV { a: 0.0, b: 0.5 };
        assert!(matches!(config.validate(), Err(Error::InvalidConfig(_))));
        let mut config = base_config();
        config.propensity = Propensity::Constant(1.2);
        assert!(config.validate().is_err());
        let mut config = base_config();
        config.theta = vec![1.0, 2.0];
        assert!(config.validate().is_err());
        let mut config = base_config();
        config.error = ErrorLaw::StudentT { df: 2.0, sigma: 1.0 };
        assert!(config.validate().is_err());
    }

    #[test]
    fn error_laws_are_centered_with_unit_variance() {
        let mut rng = replication_rng(9, 0);
        for law in [
            ErrorLaw::Normal { sigma: 1.0 },
            ErrorLaw::StudentT { df: 5.0, sigma: 1.0 },
            ErrorLaw::CenteredMixture { sigma: 1.0 },
        ] {
            let draws: Vec<f64> = (0..200_000).map(|_| law.sample(&mut rng)).collect();
            let mean = draws.iter().sum::<f64>() / draws.len() as f64;
            let var =
                draws.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / draws.len() as f64;
            assert!(mean.abs() < 0.02, "{law:?} mean {mean}");
            assert!((var - 1.0).abs() < 0.05, "{law:?} var {var}");
        }
    }

    #[test]
    fn scaled_propensity_halves_e_delta_and_doubles_target() {
        let config = ScenarioConfig {
            covariates: CovariateLaw::Correlated,
            ..base_config()
        };
        let full = efficiency_target(&config, 200_000).unwrap();
        let half_config = ScenarioConfig {
            propensity: config.propensity.scaled(0.5),
            ..config
        };
        let half = efficiency_target(&half_config, 200_000).unwrap();
        assert!((half.e_delta - 0.5 * full.e_delta).abs() < 0.01);
        let ratio = half.target[0][0] / full.target[0][0];
        assert!((ratio - 2.0).abs() < 0.1, "ratio = {ratio}");
    }

    #[test]
    fn efficiency_check_rejects_non_normal_errors() {
        let config = ScenarioConfig {
            error: ErrorLaw::StudentT { df: 5.0, sigma: 1.0 },
            ..base_config()
        };
        assert!(matches!(
            efficiency_target(&config, 1000),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn two_sample_ks_basics() {
        let a = [1.0, 2.0, 3.0];
        assert_eq!(two_sample_ks(&a, &a), 0.0);
        let b = [10.0, 11.0, 12.0];
        assert_eq!(two_sample_ks(&a, &b), 1.0);
    }
}
