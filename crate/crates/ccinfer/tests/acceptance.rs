//! Acceptance gate: one test per criterion, each printing a single
//! PASS/FAIL line. Oracles are implemented here, independently of the
//! library code they check.

use nalgebra::{Matrix3, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ccinfer::data::{CompletePair, MarDataset, MarRow};
use ccinfer::limits::{empirical_quantile, LimitLaw};
use ccinfer::linearity::run_linearity_test;
use ccinfer::linearity::{ChiFn, NullDesign};
use ccinfer::normality::{gamma_matrix, h_transform, h_vec, run_normality_test, T_MIN};
use ccinfer::quad::adaptive_simpson;
use ccinfer::series::fit_series_ls;
use ccinfer::sim::{
    efficiency_variance_check, replicate, verify_transfer, CovariateLaw, ErrorLaw,
    MeanResponseFamily, NormalityStatisticFamily, Propensity, RhoFn, ScenarioConfig,
};
use ccinfer::transfer::{
    binomial_index_sample, complete_case_statistic, enumerate_component_law, lemma1_mixture,
    merge_atoms, MeanFamily, MeanOfFamily, ScaledFamily,
};

fn report(criterion: usize, label: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {criterion} ({label}): {verdict} [{detail}]");
    assert!(ok, "criterion {criterion} ({label}) failed: {detail}");
}

/// Exhaustive-enumeration oracle for the law of the complete-case
/// mean: loops over all 2^n delta patterns and all observation tuples
/// of a finite support. Implemented from the definition, not via the
/// mixture formula.
fn oracle_complete_case_law(n: usize, p: f64, support: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut atoms = Vec::new();
    for mask in 0u32..(1 << n) {
        let deltas: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
        let k = deltas.iter().filter(|&&d| d == 1).count();
        let pattern_prob = p.powi(k as i32) * (1.0 - p).powi((n - k) as i32);
        if pattern_prob == 0.0 {
            continue;
        }
        if k == 0 {
            atoms.push((0.0, pattern_prob));
            continue;
        }
        let mut idx = vec![0usize; k];
        'tuples: loop {
            let obs: Vec<f64> = idx.iter().map(|&i| support[i].0).collect();
            let prob: f64 = idx.iter().map(|&i| support[i].1).product();
            let mean = obs.iter().sum::<f64>() / obs.len() as f64;
            atoms.push((mean, pattern_prob * prob));
            let mut pos = 0;
            loop {
                if pos == k {
                    break 'tuples;
                }
                idx[pos] += 1;
                if idx[pos] < support.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }
    merge_atoms(atoms)
}

#[test]
fn c01_lemma1_exactness() {
    let support = [(0.0f64, 0.5), (1.0, 0.5)];
    let mut worst: f64 = 0.0;
    for n in 1..=5usize {
        for &p in &[0.3, 0.5, 1.0] {
            let mixture = lemma1_mixture(n, p, 0.0, |k| {
                enumerate_component_law(&MeanFamily, k, &support)
            })
            .unwrap();
            let mix_atoms = mixture.atoms().unwrap();
            let oracle = oracle_complete_case_law(n, p, &support);
            assert_eq!(mix_atoms.len(), oracle.len(), "n={n} p={p} atom counts");
            for ((va, pa), (vb, pb)) in mix_atoms.iter().zip(&oracle) {
                assert_eq!(va, vb, "n={n} p={p} atom values differ");
                worst = worst.max((pa - pb).abs());
            }
        }
    }
    report(
        1,
        "Lemma 1 exactness",
        worst < 1e-12,
        &format!("max atom probability discrepancy {worst:.2e}"),
    );
}

#[test]
fn c02_remark3_equivalence() {
    let support = [(0.0f64, 0.5), (1.0, 0.5)];
    let (n, p, draws) = (5usize, 0.3, 100_000usize);
    let mixture = lemma1_mixture(n, p, 0.0, |k| {
        enumerate_component_law(&MeanFamily, k, &support)
    })
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let sample: Vec<f64> = (0..draws)
        .map(|_| {
            binomial_index_sample(
                &MeanFamily,
                n,
                p,
                |r: &mut ChaCha8Rng| if r.gen_bool(0.5) { 1.0 } else { 0.0 },
                &mut rng,
            )
            .unwrap()[0]
        })
        .collect();
    let ks = mixture.ks_distance(&sample);
    report(
        2,
        "Remark 3 equivalence",
        ks < 0.01,
        &format!("KS distance {ks:.4} at {draws} draws"),
    );
}

#[test]
fn c03_remark2_scaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    let mut worst: f64 = 0.0;
    for case in 0..100 {
        // random quadratic psi, random delta pattern, alpha from the grid
        let (a, b, c): (f64, f64, f64) = (
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        let base = MeanOfFamily {
            psi: move |x: &f64| a + b * x + c * x * x,
            t0: 0.0,
        };
        let alpha = [-0.5, 0.5, 1.0][case % 3];
        let n = rng.gen_range(1..=12usize);
        let deltas: Vec<u8> = (0..n).map(|_| u8::from(rng.gen_bool(0.6))).collect();
        let n_obs = deltas.iter().filter(|&&d| d == 1).count();
        if n_obs == 0 {
            continue;
        }
        let obs: Vec<f64> = (0..n_obs).map(|_| rng.gen_range(-3.0..3.0)).collect();

        let scaled = ScaledFamily {
            base: base.clone(),
            alpha,
        };
        let lhs = complete_case_statistic(&scaled, &deltas, &obs).unwrap()[0];
        let rhs =
            (n_obs as f64).powf(alpha) * complete_case_statistic(&base, &deltas, &obs).unwrap()[0];
        worst = worst.max((lhs - rhs).abs());
    }
    report(
        3,
        "Remark 2 scaling identity",
        worst < 1e-12,
        &format!("max |N^a t - scaled| = {worst:.2e} over 100 cases"),
    );
}

#[test]
fn c04_gamma_h_numerics() {
    let phi = |x: f64| (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();

    // Gamma vs quadrature on a 101-point grid over [-5, 5]
    let mut worst_gamma: f64 = 0.0;
    for g in 0..=100 {
        let x = -5.0 + 0.1 * g as f64;
        let mat = gamma_matrix(x);
        for (i, j) in [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)] {
            let oracle = adaptive_simpson(&|z| h_vec(z)[i] * h_vec(z)[j] * phi(z), x, 12.0, 1e-12);
            worst_gamma = worst_gamma.max((mat[(i, j)] - oracle).abs());
        }
    }

    // independent integrand: solve Gamma w = h phi with nalgebra LU
    let integrand = |x: f64, coord: usize| -> f64 {
        let hm = h_vec(x);
        let rhs = Vector3::new(hm[0], hm[1], hm[2]) * phi(x);
        let sol = Matrix3::from(gamma_matrix(x)).lu().solve(&rhs).unwrap();
        sol[coord]
    };

    // H vs direct quadrature at 21 points; above t ~ 4 the conditioning
    // of Gamma caps what independent f64 evaluations can agree on
    let mut worst_h: f64 = 0.0;
    for g in 0..=20 {
        let t = -5.0 + 0.45 * g as f64;
        let val = h_transform(t).unwrap();
        #[allow(clippy::needless_range_loop)]
        for coord in 0..3 {
            let oracle = adaptive_simpson(&|x| integrand(x, coord), T_MIN, t, 1e-10);
            worst_h = worst_h.max((val[coord] - oracle).abs());
        }
    }

    // finite-difference derivative of H
    let mut worst_fd: f64 = 0.0;
    let h = 1e-4;
    for &t in &[-2.0, -0.5, 0.0, 0.7, 2.5] {
        let up = h_transform(t + h).unwrap();
        let dn = h_transform(t - h).unwrap();
        for coord in 0..3 {
            let fd = (up[coord] - dn[coord]) / (2.0 * h);
            worst_fd = worst_fd.max((fd - integrand(t, coord)).abs());
        }
    }

    let ok = worst_gamma < 1e-8 && worst_h < 1e-6 && worst_fd < 1e-5;
    report(
        4,
        "Gamma/H numerics",
        ok,
        &format!("gamma {worst_gamma:.2e}, H {worst_h:.2e}, H' {worst_fd:.2e}"),
    );
}

#[test]
fn c05_limit_laws() {
    let grid = [0.5, 1.0, 1.5, 2.0, 2.5];
    let mut worst_sim: f64 = 0.0;
    let mut worst_round: f64 = 0.0;
    for law in [LimitLaw::SupAbsBrownianMotion, LimitLaw::SupAbsBrownianBridge] {
        let sups = law.simulate_sup(100_000, 10_000, 55);
        let n = sups.len() as f64;
        for &x in &grid {
            let emp = sups.iter().filter(|&&s| s <= x).count() as f64 / n;
            let series = law.cdf(x).unwrap();
            worst_sim = worst_sim.max((emp - series).abs());
            if series > 1e-6 && series < 1.0 - 1e-9 {
                worst_round = worst_round.max((law.quantile(series).unwrap() - x).abs());
            }
        }
    }
    let ok = worst_sim < 0.01 && worst_round < 1e-8;
    report(
        5,
        "limit laws vs simulation",
        ok,
        &format!("max |emp - series| = {worst_sim:.4}, round trip {worst_round:.2e}"),
    );
}

fn null_normality_config(n: usize, seed: u64) -> ScenarioConfig {
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

#[test]
fn c06_normality_size_and_quantile() {
    let config = null_normality_config(200, 60);
    let results = replicate(&config, 2000, |data| {
        let r = run_normality_test(data, 0.05)?;
        Ok(r.reject)
    })
    .unwrap();
    let rate = results.iter().filter(|&&r| r).count() as f64 / results.len() as f64;

    let config_big = null_normality_config(2000, 61);
    let stats = replicate(&config_big, 2000, |data| {
        Ok(run_normality_test(data, 0.05)?.statistic)
    })
    .unwrap();
    let q95 = empirical_quantile(&stats, 0.95);
    let zeta95 = LimitLaw::SupAbsBrownianMotion.quantile(0.95).unwrap();

    let ok = (0.02..=0.09).contains(&rate) && (q95 - zeta95).abs() < 0.15;
    report(
        6,
        "normality test size",
        ok,
        &format!("rate {rate:.4} at n=200; q95 {q95:.3} vs zeta {zeta95:.3} at n=2000"),
    );
}

#[test]
fn c07_normality_power() {
    let null = ScenarioConfig {
        n: 500,
        ..null_normality_config(500, 70)
    };
    let alt = ScenarioConfig {
        error: ErrorLaw::StudentT { df: 5.0, sigma: 1.0 },
        ..null.clone()
    };
    let rate = |config: &ScenarioConfig| {
        let results = replicate(config, 1000, |data| Ok(run_normality_test(data, 0.05)?.reject))
            .unwrap();
        results.iter().filter(|&&r| r).count() as f64 / results.len() as f64
    };
    let null_rate = rate(&null);
    let alt_rate = rate(&alt);
    report(
        7,
        "normality test power",
        alt_rate > null_rate,
        &format!("t5 rate {alt_rate:.4} vs paired null rate {null_rate:.4}"),
    );
}

#[test]
fn c08_linearity_size_law_power() {
    let null_config = |n: usize, seed: u64| ScenarioConfig {
        n,
        m: 1,
        theta: vec![1.5],
        rho: RhoFn::Constant(0.5),
        error: ErrorLaw::Normal { sigma: 1.0 },
        covariates: CovariateLaw::Independent,
        propensity: Propensity::LinearV { a: 0.6, b: 0.3 },
        seed,
    };
    let run = |data: &MarDataset| {
        run_linearity_test(data, 0.05, ChiFn::Cos1, NullDesign::ConstantRho)
    };

    let results = replicate(&null_config(200, 80), 2000, |d| Ok(run(d)?.reject)).unwrap();
    let rate = results.iter().filter(|&&r| r).count() as f64 / results.len() as f64;

    let stats = replicate(&null_config(2000, 81), 2000, |d| Ok(run(d)?.statistic)).unwrap();
    let q95 = empirical_quantile(&stats, 0.95);
    let kolm95 = LimitLaw::SupAbsBrownianBridge.quantile(0.95).unwrap();

    let alt = ScenarioConfig {
        rho: RhoFn::Sin2Pi,
        ..null_config(500, 82)
    };
    let paired_null = null_config(500, 82);
    let alt_rate = {
        let r = replicate(&alt, 1000, |d| Ok(run(d)?.reject)).unwrap();
        r.iter().filter(|&&x| x).count() as f64 / r.len() as f64
    };
    let paired_rate = {
        let r = replicate(&paired_null, 1000, |d| Ok(run(d)?.reject)).unwrap();
        r.iter().filter(|&&x| x).count() as f64 / r.len() as f64
    };

    let ok = (0.02..=0.09).contains(&rate)
        && (q95 - kolm95).abs() < 0.1
        && alt_rate > paired_rate;
    report(
        8,
        "linearity test size/law/power",
        ok,
        &format!(
            "rate {rate:.4}; q95 {q95:.3} vs {kolm95:.3}; power {alt_rate:.3} > size {paired_rate:.3}"
        ),
    );
}

#[test]
fn c09_transfer_verification() {
    let mean_config = ScenarioConfig {
        n: 100,
        m: 1,
        theta: vec![1.0],
        rho: RhoFn::CosPi,
        error: ErrorLaw::Normal { sigma: 1.0 },
        covariates: CovariateLaw::Independent,
        propensity: Propensity::LinearV { a: 0.5, b: 0.4 },
        seed: 90,
    };
    let ks_mean = verify_transfer(&mean_config, &MeanResponseFamily, 5000).unwrap();

    let stat_config = ScenarioConfig {
        n: 200,
        propensity: Propensity::LinearV { a: 0.6, b: 0.3 },
        seed: 91,
        ..mean_config.clone()
    };
    let ks_stat = verify_transfer(&stat_config, &NormalityStatisticFamily, 2000).unwrap();

    let ok = ks_mean < 0.03 && ks_stat < 0.05;
    report(
        9,
        "transfer verification",
        ok,
        &format!("mean KS {ks_mean:.4} (<0.03), statistic KS {ks_stat:.4} (<0.05)"),
    );
}

#[test]
fn c10_efficiency_expansion() {
    let config = ScenarioConfig {
        n: 1000,
        m: 1,
        theta: vec![2.0],
        rho: RhoFn::CosPi,
        error: ErrorLaw::Normal { sigma: 1.0 },
        covariates: CovariateLaw::Correlated,
        propensity: Propensity::LinearV { a: 0.6, b: 0.3 },
        seed: 100,
    };
    let check = efficiency_variance_check(&config, 1000, 1_000_000).unwrap();
    let emp = check.empirical[0][0];
    let target = check.oracle.target[0][0];
    let rel = (emp / target - 1.0).abs();

    let half = ScenarioConfig {
        propensity: config.propensity.scaled(0.5),
        seed: 101,
        ..config
    };
    let check_half = efficiency_variance_check(&half, 1000, 1_000_000).unwrap();
    let emp_half = check_half.empirical[0][0];
    let target_half = check_half.oracle.target[0][0];
    let rel_half = (emp_half / target_half - 1.0).abs();
    let doubling = target_half / target;

    let ok = rel < 0.15 && rel_half < 0.20 && (doubling - 2.0).abs() < 0.1;
    report(
        10,
        "efficiency expansion",
        ok,
        &format!(
            "rel err {rel:.3} (<0.15); halved-pi rel err {rel_half:.3} (<0.20); target ratio {doubling:.3}"
        ),
    );
}

#[test]
fn c11_estimator_unit_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(110);
    let rows: Vec<CompletePair> = (0..60)
        .map(|_| {
            let u: f64 = rng.gen_range(-2.0..2.0);
            let v: f64 = rng.gen_range(0.0..1.0);
            let y: f64 = rng.gen_range(-5.0..5.0);
            CompletePair { u: vec![u], v, y }
        })
        .collect();
    let ones = vec![1u8; rows.len()];
    let k = 3;
    let fit = fit_series_ls(&rows, &ones, k).unwrap();

    // orthogonality: every design column is orthogonal to the residuals
    let column = |c: usize, row: &CompletePair| -> f64 {
        if c == 0 {
            row.u[0]
        } else if c == 1 {
            1.0
        } else {
            (std::f64::consts::PI * (c - 1) as f64 * row.v).cos()
        }
    };
    let mut worst_orth: f64 = 0.0;
    for c in 0..=(1 + k) {
        let dot: f64 = rows
            .iter()
            .zip(&fit.residuals)
            .map(|(row, e)| column(c, row) * e)
            .sum();
        worst_orth = worst_orth.max(dot.abs());
    }

    // exact recovery of an in-span truth
    let truth: Vec<CompletePair> = rows
        .iter()
        .map(|r| CompletePair {
            u: r.u.clone(),
            v: r.v,
            y: 3.0 * r.u[0] - 1.0 + 2.0 * (std::f64::consts::PI * r.v).cos(),
        })
        .collect();
    let exact = fit_series_ls(&truth, &ones, k).unwrap();
    let rec = (exact.theta_hat[0] - 3.0)
        .abs()
        .max((exact.beta_hat[0] + 1.0).abs())
        .max((exact.beta_hat[1] - 2.0).abs())
        .max(exact.sigma_hat);

    // weighted fit equals the fit on the extracted complete cases
    let mar_rows: Vec<MarRow> = rows
        .iter()
        .enumerate()
        .map(|(j, r)| MarRow {
            u: r.u.clone(),
            v: r.v,
            y: (j % 3 != 0).then_some(r.y),
        })
        .collect();
    let data = MarDataset::new(mar_rows, 1).unwrap();
    let cc = ccinfer::data::extract_complete_cases(&data);
    let weights: Vec<u8> = data.rows().iter().map(|r| r.delta()).collect();
    let all_pairs: Vec<CompletePair> = rows.clone();
    let weighted = fit_series_ls(&all_pairs, &weights, k).unwrap();
    let extracted = fit_series_ls(&cc.pairs, &vec![1u8; cc.n()], k).unwrap();
    let mut worst_weighted = (weighted.theta_hat[0] - extracted.theta_hat[0]).abs();
    for (a, b) in weighted.beta_hat.iter().zip(&extracted.beta_hat) {
        worst_weighted = worst_weighted.max((a - b).abs());
    }
    worst_weighted = worst_weighted.max((weighted.sigma_hat - extracted.sigma_hat).abs());

    let ok = worst_orth < 1e-8 && rec < 1e-10 && worst_weighted < 1e-12;
    report(
        11,
        "estimator unit properties",
        ok,
        &format!("orthogonality {worst_orth:.2e}, recovery {rec:.2e}, weighted {worst_weighted:.2e}"),
    );
}
