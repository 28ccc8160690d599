//! Null limit laws of the two tests: the supremum of the absolute
//! value of a standard Brownian motion on `[0,1]` and of a standard
//! Brownian bridge (the Kolmogorov distribution).
//!
//! CDFs use the classical theta-series expansions, switching between
//! the two dual representations so the truncation error is below
//! 1e-14 everywhere. A random-walk path simulator serves as the
//! cross-check oracle.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitLaw {
    /// `zeta = sup |B(t)|`, B a standard Brownian motion on [0,1].
    SupAbsBrownianMotion,
    /// `zeta_0 = sup |B_0(t)|`, B_0 a standard Brownian bridge.
    SupAbsBrownianBridge,
}

impl LimitLaw {
    /// `P(sup <= x)` for `x > 0`, truncation error below 1e-14.
    pub fn cdf(self, x: f64) -> Result<f64> {
        // negated form so NaN is rejected too
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(x > 0.0) {
            return Err(Error::DomainError(format!(
                "limit-law cdf needs x > 0, got {x}"
            )));
        }
        let value = match self {
            LimitLaw::SupAbsBrownianMotion => sup_abs_bm_cdf(x),
            LimitLaw::SupAbsBrownianBridge => kolmogorov_cdf(x),
        };
        Ok(value.clamp(0.0, 1.0))
    }

    /// Inverse CDF by bisection on the monotone CDF.
    pub fn quantile(self, q: f64) -> Result<f64> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::DomainError(format!(
                "quantile level must be in (0,1), got {q}"
            )));
        }
        let mut lo = 1e-8;
        let mut hi = 10.0;
        while self.cdf(hi)? < q {
            hi *= 2.0;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if self.cdf(mid)? < q {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-12 {
                break;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// Survival function `P(sup > x)`; clamps `x <= 0` to 1.
    pub fn p_value(self, statistic: f64) -> f64 {
        if statistic <= 0.0 {
            1.0
        } else {
            1.0 - self.cdf(statistic).unwrap_or(1.0)
        }
    }

    /// Simulates `paths` discrete sups of the scaled random walk with
    /// `steps` increments. Bridge paths are pinned to end at exactly
    /// zero. Deterministic in `(seed, paths, steps)` and independent
    /// of the thread count: path `i` uses RNG stream `i`.
    pub fn simulate_sup(self, paths: usize, steps: usize, seed: u64) -> Vec<f64> {
        assert!(paths >= 1 && steps >= 100);
        let sqrt_step = (1.0 / steps as f64).sqrt();
        (0..paths)
            .into_par_iter()
            .map(|path| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(path as u64);
                match self {
                    LimitLaw::SupAbsBrownianMotion => {
                        let mut pos = 0.0f64;
                        let mut sup = 0.0f64;
                        for _ in 0..steps {
                            let z: f64 = StandardNormal.sample(&mut rng);
                            pos += z * sqrt_step;
                            sup = sup.max(pos.abs());
                        }
                        sup
                    }
                    LimitLaw::SupAbsBrownianBridge => {
                        let mut walk = Vec::with_capacity(steps);
                        let mut pos = 0.0f64;
                        for _ in 0..steps {
                            let z: f64 = StandardNormal.sample(&mut rng);
                            pos += z * sqrt_step;
                            walk.push(pos);
                        }
                        let end = pos;
                        let mut sup = 0.0f64;
                        for (i, w) in walk.iter().enumerate() {
                            let t = (i + 1) as f64 / steps as f64;
                            sup = sup.max((w - t * end).abs());
                        }
                        sup
                    }
                }
            })
            .collect()
    }
}

/// `P(sup_{[0,1]} |B| <= x)`.
///
/// For small `x` the cosine series
/// `(4/pi) sum (-1)^k/(2k+1) exp(-(2k+1)^2 pi^2 / (8 x^2))`
/// converges in a few terms; for large `x` the reflection series in
/// terms of the normal CDF does.
fn sup_abs_bm_cdf(x: f64) -> f64 {
    if x < 2.2 {
        sup_abs_bm_cosine(x)
    } else {
        sup_abs_bm_reflection(x)
    }
}

fn sup_abs_bm_cosine(x: f64) -> f64 {
    let mut sum = 0.0;
    for k in 0..200 {
        let j = (2 * k + 1) as f64;
        let term = (if k % 2 == 0 { 1.0 } else { -1.0 }) / j
            * (-j * j * PI * PI / (8.0 * x * x)).exp();
        sum += term;
        if term.abs() < 1e-16 {
            break;
        }
    }
    4.0 / PI * sum
}

// sum_{k in Z} (-1)^k [Phi((2k+1)x) - Phi((2k-1)x)]
fn sup_abs_bm_reflection(x: f64) -> f64 {
    let mut sum = normal_cdf(x) - normal_cdf(-x);
    for k in 1..100 {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let kf = k as f64;
        let upper = normal_cdf((2.0 * kf + 1.0) * x) - normal_cdf((2.0 * kf - 1.0) * x);
        let lower = normal_cdf((-2.0 * kf + 1.0) * x) - normal_cdf((-2.0 * kf - 1.0) * x);
        let term = sign * (upper + lower);
        sum += term;
        if term.abs() < 1e-16 {
            break;
        }
    }
    sum
}

/// Kolmogorov CDF `P(sup |B_0| <= x)`.
fn kolmogorov_cdf(x: f64) -> f64 {
    if x < 1.0 {
        kolmogorov_theta(x)
    } else {
        kolmogorov_alternating(x)
    }
}

// dual theta representation, accurate for small x
fn kolmogorov_theta(x: f64) -> f64 {
    let mut sum = 0.0;
    for k in 1..200 {
        let j = (2 * k - 1) as f64;
        let term = (-j * j * PI * PI / (8.0 * x * x)).exp();
        sum += term;
        if term < 1e-16 {
            break;
        }
    }
    (2.0 * PI).sqrt() / x * sum
}

fn kolmogorov_alternating(x: f64) -> f64 {
    let mut sum = 0.0;
    for k in 1..200 {
        let kf = k as f64;
        let term = (if k % 2 == 1 { 1.0 } else { -1.0 }) * (-2.0 * kf * kf * x * x).exp();
        sum += term;
        if term.abs() < 1e-16 {
            break;
        }
    }
    1.0 - 2.0 * sum
}

pub(crate) fn normal_cdf(x: f64) -> f64 {
    use statrs::distribution::ContinuousCDF;
    use statrs::distribution::Normal;
    Normal::new(0.0, 1.0).unwrap().cdf(x)
}

/// Empirical quantile of a sample (nearest-rank on a sorted copy).
pub fn empirical_quantile(sample: &[f64], q: f64) -> f64 {
    let mut sorted = sample.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let idx = ((sorted.len() as f64 * q).ceil() as usize).clamp(1, sorted.len());
    sorted[idx - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_and_huge_levels() {
        for law in [LimitLaw::SupAbsBrownianMotion, LimitLaw::SupAbsBrownianBridge] {
            assert!(law.cdf(1e-6).unwrap() < 1e-10);
            assert!((law.cdf(50.0).unwrap() - 1.0).abs() < 1e-14);
            assert!(law.cdf(0.0).is_err());
        }
    }

    #[test]
    fn cdf_monotone_on_grid() {
        for law in [LimitLaw::SupAbsBrownianMotion, LimitLaw::SupAbsBrownianBridge] {
            let mut prev = 0.0;
            for i in 1..=1000 {
                let x = i as f64 * 0.005;
                let c = law.cdf(x).unwrap();
                assert!((0.0..=1.0).contains(&c));
                assert!(c + 1e-13 >= prev, "non-monotone at x={x}");
                prev = c;
            }
        }
    }

    #[test]
    fn series_representations_agree_near_crossover() {
        // the dual series evaluated at the same points; agreement is
        // limited by the erf accuracy inside the reflection branch
        for x in [1.8, 2.0, 2.2, 2.4, 2.6] {
            let a = sup_abs_bm_cosine(x);
            let b = sup_abs_bm_reflection(x);
            assert!((a - b).abs() < 1e-10, "x={x}: {a} vs {b}");
        }
        for x in [0.8, 0.9, 1.0, 1.1, 1.2] {
            let a = kolmogorov_theta(x);
            let b = kolmogorov_alternating(x);
            assert!((a - b).abs() < 1e-12, "x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn known_kolmogorov_value() {
        // The classical 95% critical value of the Kolmogorov law.
        let q = LimitLaw::SupAbsBrownianBridge.quantile(0.95).unwrap();
        assert!((q - 1.3581).abs() < 1e-3);
    }

    #[test]
    fn quantile_round_trip() {
        for law in [LimitLaw::SupAbsBrownianMotion, LimitLaw::SupAbsBrownianBridge] {
            let c = law.cdf(1.7).unwrap();
            assert!((law.quantile(c).unwrap() - 1.7).abs() < 1e-8);
        }
    }

    #[test]
    fn bridge_quantiles_below_motion_quantiles() {
        for q in [0.5, 0.9, 0.95, 0.99] {
            let bridge = LimitLaw::SupAbsBrownianBridge.quantile(q).unwrap();
            let motion = LimitLaw::SupAbsBrownianMotion.quantile(q).unwrap();
            assert!(bridge < motion, "q={q}: {bridge} !< {motion}");
        }
    }

    #[test]
    fn simulation_is_deterministic() {
        let a = LimitLaw::SupAbsBrownianBridge.simulate_sup(64, 200, 42);
        let b = LimitLaw::SupAbsBrownianBridge.simulate_sup(64, 200, 42);
        assert_eq!(a, b);
    }

    #[test]
    fn simulated_sups_are_positive() {
        let sups = LimitLaw::SupAbsBrownianMotion.simulate_sup(32, 100, 3);
        assert!(sups.iter().all(|&s| s > 0.0));
    }
}
