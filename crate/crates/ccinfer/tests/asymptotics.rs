//! Trend checks on asymptotic claims: quantities that the theory says
//! vanish are checked to shrink as n (or the replication budget)
//! grows. These complement the fixed-tolerance acceptance gate.

use ccinfer::data::extract_complete_cases;
use ccinfer::series::{choose_k, fit_series_ls};
use ccinfer::sim::{
    generate_with_errors, replicate, replication_rng, verify_transfer,
    CovariateLaw, ErrorLaw, MeanResponseFamily, Propensity, RhoFn, ScenarioConfig,
};
use ccinfer::transfer::StatisticFamily;

fn config(n: usize, seed: u64) -> ScenarioConfig {
    ScenarioConfig {
        n,
        m: 1,
        theta: vec![1.5],
        rho: RhoFn::CosPi,
        error: ErrorLaw::Normal { sigma: 1.0 },
        covariates: CovariateLaw::Independent,
        propensity: Propensity::LinearV { a: 0.6, b: 0.3 },
        seed,
    }
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs[xs.len() / 2]
}

#[test]
fn theta_error_shrinks_with_n() {
    let abs_err = |n: usize, seed: u64| {
        let errs = replicate(&config(n, seed), 200, |data| {
            let cc = extract_complete_cases(data);
            let fit = fit_series_ls(&cc.pairs, &vec![1u8; cc.n()], choose_k(cc.n()))?;
            Ok((fit.theta_hat[0] - 1.5).abs())
        })
        .unwrap();
        median(errs)
    };
    let coarse = abs_err(200, 10);
    let fine = abs_err(2000, 11);
    assert!(
        fine < coarse,
        "median |theta error| should shrink: {coarse} at n=200 vs {fine} at n=2000"
    );
    // root-n rate: the ratio should be well below 1, not marginal
    assert!(fine < 0.6 * coarse, "ratio {} too weak", fine / coarse);
}

/// The residual-vs-error empirical process drift: under the null the
/// sup of |(1/sqrt(N)) sum delta_j (1[resid_j <= t] - 1[eps_j <= t]
/// - phi(t) eps_j)| vanishes as n grows.
#[test]
fn expansion_drift_shrinks_with_n() {
    let phi = |t: f64| (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let drift = |n: usize, seed: u64| {
        let cfg = config(n, seed);
        let sups: Vec<f64> = (0..200)
            .map(|rep| {
                let mut rng = replication_rng(cfg.seed, rep);
                let (data, errors) = generate_with_errors(&cfg, &mut rng).unwrap();
                let cc = extract_complete_cases(&data);
                let fit =
                    fit_series_ls(&cc.pairs, &vec![1u8; cc.n()], choose_k(cc.n())).unwrap();
                let eps: Vec<f64> = cc.indices.iter().map(|&i| errors[i - 1]).collect();
                let resid = &fit.residuals;
                let n_used = cc.n() as f64;

                // evaluate at every jump point of either indicator
                let mut grid: Vec<f64> = resid.iter().chain(eps.iter()).copied().collect();
                grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
                let mut sorted_resid = resid.clone();
                sorted_resid.sort_by(|a, b| a.partial_cmp(b).unwrap());
                let mut sorted_eps = eps.clone();
                sorted_eps.sort_by(|a, b| a.partial_cmp(b).unwrap());
                let eps_sum: f64 = eps.iter().sum();
                let mut sup: f64 = 0.0;
                for &t in &grid {
                    let count_r = sorted_resid.partition_point(|&x| x <= t) as f64;
                    let count_e = sorted_eps.partition_point(|&x| x <= t) as f64;
                    let value = (count_r - count_e - phi(t) * eps_sum) / n_used.sqrt();
                    sup = sup.max(value.abs());
                }
                sup
            })
            .collect();
        median(sups)
    };
    let coarse = drift(200, 20);
    let fine = drift(2000, 21);
    assert!(
        fine < coarse,
        "drift should shrink: {coarse} at n=200 vs {fine} at n=2000"
    );
}

/// Convergence transfer: the normalized complete-case mean approaches
/// its Gaussian limit, with Kolmogorov distance decreasing in n.
/// Heavy-tailed errors slow the CLT enough that the distance at small
/// n stands well above the Monte Carlo noise floor.
#[test]
fn complete_case_law_approaches_limit() {
    let heavy = |n: usize, seed: u64| ScenarioConfig {
        error: ErrorLaw::StudentT { df: 2.5, sigma: 1.0 },
        ..config(n, seed)
    };

    // conditional mean/sd of Y given delta = 1, from a large draw
    let probe_cfg = heavy(400_000, 30);
    let mut rng = replication_rng(probe_cfg.seed, u64::MAX - 3);
    let (data, _) = generate_with_errors(&probe_cfg, &mut rng).unwrap();
    let cc = extract_complete_cases(&data);
    let mean = cc.pairs.iter().map(|p| p.y).sum::<f64>() / cc.n() as f64;
    let var = cc.pairs.iter().map(|p| (p.y - mean).powi(2)).sum::<f64>() / cc.n() as f64;
    let sd = var.sqrt();

    let normal_cdf = |x: f64| {
        use statrs::distribution::{ContinuousCDF, Normal};
        Normal::new(0.0, 1.0).unwrap().cdf(x)
    };
    let one_sample_ks = |mut xs: Vec<f64>| {
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let n = xs.len() as f64;
        xs.iter()
            .enumerate()
            .map(|(i, &x)| {
                let f = normal_cdf(x);
                (f - i as f64 / n).max((i + 1) as f64 / n - f)
            })
            .fold(0.0f64, f64::max)
    };

    let ks_at = |n: usize, seed: u64| {
        let stats = replicate(&heavy(n, seed), 4000, |data| {
            let cc = extract_complete_cases(data);
            if cc.n() == 0 {
                return Ok(0.0);
            }
            let m = cc.pairs.iter().map(|p| p.y).sum::<f64>() / cc.n() as f64;
            Ok((cc.n() as f64).sqrt() * (m - mean) / sd)
        })
        .unwrap();
        one_sample_ks(stats)
    };

    let d50 = ks_at(50, 32);
    let d800 = ks_at(800, 34);
    assert!(
        d800 < d50,
        "KS to the normal limit should decrease: {d50} (n=50), {d800} (n=800)"
    );
}

/// The transfer comparison is exact in law, so its two-sample KS
/// distance is pure noise and shrinks like 1/sqrt(reps).
#[test]
fn transfer_distance_shrinks_with_reps() {
    let cfg = config(100, 40);
    let d500 = verify_transfer(&cfg, &MeanResponseFamily, 500).unwrap();
    let d8000 = verify_transfer(&cfg, &MeanResponseFamily, 8000).unwrap();
    assert!(
        d8000 < d500,
        "KS should shrink with replications: {d500} at 500 vs {d8000} at 8000"
    );
}

#[test]
fn mean_response_family_is_pure() {
    let pairs: Vec<ccinfer::data::CompletePair> = (0..5)
        .map(|i| ccinfer::data::CompletePair {
            u: vec![i as f64],
            v: 0.1 * i as f64,
            y: i as f64,
        })
        .collect();
    let a = MeanResponseFamily.eval(&pairs);
    let b = MeanResponseFamily.eval(&pairs);
    assert_eq!(a, b);
    assert_eq!(a, vec![2.0]);
}
