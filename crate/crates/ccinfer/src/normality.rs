//! Martingale-transform goodness-of-fit test for normal errors.
//!
//! The standardized residuals of a series fit are fed through the
//! transform built from `h(x) = (1, x, x^2 - 1)'`, the upper-tail
//! moment matrix `Gamma(x)` of the standard normal, and
//! `H(t) = int_{-inf}^t h'(x) Gamma(x)^{-1} phi(x) dx`. Under the
//! null the sup of the transformed residual empirical process
//! converges to `sup |B(t)|` over `[0,1]`, so a single set of
//! critical values serves every null scenario.
//!
//! `Gamma(x)` degenerates as `x -> +inf` (the tail integrals vanish),
//! so the transform integral is truncated at `T_MAX = 5` and the sup
//! is taken over `t <= T_MAX`; residuals beyond `T_MAX` enter only
//! through `t /\ Z_j`. The normal tail mass beyond 5 is below 3e-7.

use nalgebra::{Matrix3, Vector3};
use once_cell::sync::Lazy;
use serde::Serialize;

use crate::data::MarDataset;
use crate::error::{Error, Result};
use crate::limits::{normal_cdf, LimitLaw};
use crate::series::{choose_k, fit_series_ls, normalized_residuals};

/// Upper truncation point for the transform integral and the sup.
pub const T_MAX: f64 = 5.0;
/// Lower cutoff below which `H` is numerically zero.
pub const T_MIN: f64 = -8.0;

/// `h(x) = (1, x, x^2 - 1)'`.
pub fn h_vec(x: f64) -> [f64; 3] {
    [1.0, x, x * x - 1.0]
}

fn phi(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// `Gamma(x) = int_x^inf h(z) h'(z) phi(z) dz`, in closed form via
/// the normal density and survival function.
pub fn gamma_matrix(x: f64) -> Matrix3<f64> {
    let s = 1.0 - normal_cdf(x); // upper tail mass
    let p = phi(x);
    let g11 = s;
    let g12 = p;
    let g13 = x * p;
    let g22 = s + x * p;
    let g23 = (x * x + 1.0) * p;
    let g33 = 2.0 * s + (x * x * x + x) * p;
    Matrix3::new(g11, g12, g13, g12, g22, g23, g13, g23, g33)
}

/// Integrand of the transform: `Gamma(x)^{-1} h(x) phi(x)`.
fn h_integrand(x: f64) -> Result<Vector3<f64>> {
    let gamma = gamma_matrix(x);
    let h = Vector3::new(1.0, x, x * x - 1.0);
    let rhs = h * phi(x);
    match gamma.cholesky() {
        Some(chol) => Ok(chol.solve(&rhs)),
        None => gamma
            .lu()
            .solve(&rhs)
            .ok_or(Error::SingularGamma(x)),
    }
}

/// Precomputed `H` on a uniform grid over `[T_MIN, T_MAX]` with exact
/// derivatives at the knots, interpolated with cubic Hermite pieces.
pub struct HTable {
    start: f64,
    step: f64,
    values: Vec<Vector3<f64>>,
    derivs: Vec<Vector3<f64>>,
}

impl HTable {
    fn build(start: f64, end: f64, step: f64) -> Result<Self> {
        let n = ((end - start) / step).round() as usize;
        let mut values = Vec::with_capacity(n + 1);
        let mut derivs = Vec::with_capacity(n + 1);
        let mut acc = Vector3::zeros();
        let mut prev = h_integrand(start)?;
        values.push(acc);
        derivs.push(prev);
        for i in 0..n {
            let a = start + i as f64 * step;
            let mid = h_integrand(a + 0.5 * step)?;
            let next = h_integrand(a + step)?;
            // Simpson on the single interval
            acc += (prev + mid * 4.0 + next) * (step / 6.0);
            values.push(acc);
            derivs.push(next);
            prev = next;
        }
        Ok(Self {
            start,
            step,
            values,
            derivs,
        })
    }

    /// `H(t)` as a 3-vector; zero below the grid. `t` must not exceed
    /// the truncation point.
    pub fn eval(&self, t: f64) -> Vector3<f64> {
        if t <= self.start {
            return Vector3::zeros();
        }
        let end = self.start + self.step * (self.values.len() - 1) as f64;
        let t = t.min(end);
        let pos = (t - self.start) / self.step;
        let i = (pos.floor() as usize).min(self.values.len() - 2);
        let s = pos - i as f64;
        // cubic Hermite with exact endpoint derivatives
        let h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
        let h10 = s * (1.0 - s) * (1.0 - s);
        let h01 = s * s * (3.0 - 2.0 * s);
        let h11 = s * s * (s - 1.0);
        self.values[i] * h00
            + self.derivs[i] * (h10 * self.step)
            + self.values[i + 1] * h01
            + self.derivs[i + 1] * (h11 * self.step)
    }
}

static H_TABLE: Lazy<HTable> =
    Lazy::new(|| HTable::build(T_MIN, T_MAX, 1e-3).expect("Gamma singular inside [-8, 5]"));

/// `H(t) = int_{-inf}^t h'(x) Gamma(x)^{-1} phi(x) dx` for
/// `t <= T_MAX`; returns the zero vector for `t <= T_MIN`.
pub fn h_transform(t: f64) -> Result<[f64; 3]> {
    if t > T_MAX {
        return Err(Error::DomainError(format!(
            "h_transform is truncated at {T_MAX}, got t = {t}"
        )));
    }
    let v = H_TABLE.eval(t);
    Ok([v[0], v[1], v[2]])
}

/// Refinement points inserted between consecutive jump points when
/// scanning for the sup.
const REFINE: usize = 50;

/// Sup over `t <= T_MAX` of the absolute transformed residual
/// process, with `1/sqrt(n)` normalization over exactly the supplied
/// residuals. Returns `(statistic, location of the sup)`.
pub fn martingale_statistic(zhat: &[f64]) -> Result<(f64, f64)> {
    if zhat.is_empty() {
        return Err(Error::EmptyInput);
    }
    if zhat.iter().any(|z| !z.is_finite()) {
        return Err(Error::DomainError("non-finite residual".into()));
    }
    let n = zhat.len();
    let mut sorted = zhat.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // prefix sums over sorted residuals:
    //   prefix_dot[i] = sum_{j < i} H(z_j) . h(z_j)
    //   prefix_h[i]   = sum_{j < i} h(z_j)
    let mut prefix_dot = Vec::with_capacity(n + 1);
    let mut prefix_h = Vec::with_capacity(n + 1);
    prefix_dot.push(0.0);
    prefix_h.push(Vector3::zeros());
    for &z in &sorted {
        let h = Vector3::new(1.0, z, z * z - 1.0);
        let hz = H_TABLE.eval(z.min(T_MAX));
        prefix_dot.push(prefix_dot.last().unwrap() + hz.dot(&h));
        prefix_h.push(prefix_h.last().unwrap() + h);
    }
    let total_h = prefix_h[n];
    let scale = 1.0 / (n as f64).sqrt();

    // process value at t with i = #(z <= t) observed jumps counted
    let eval = |t: f64, i: usize| -> f64 {
        let ht = H_TABLE.eval(t);
        let tail = total_h - prefix_h[i];
        scale * (i as f64 - prefix_dot[i] - ht.dot(&tail))
    };

    let mut best: f64 = 0.0;
    let mut best_t = T_MIN;
    let consider = |t: f64, i: usize, best: &mut f64, best_t: &mut f64| {
        let v = eval(t, i).abs();
        if v > *best {
            *best = v;
            *best_t = t;
        }
    };

    // jump candidates: unique residual values within the sup window
    let mut jumps: Vec<f64> = sorted.iter().copied().filter(|&z| z <= T_MAX).collect();
    jumps.dedup();

    for &t in &jumps {
        let at = sorted.partition_point(|&z| z <= t);
        let before = sorted.partition_point(|&z| z < t);
        consider(t, at, &mut best, &mut best_t); // value at the jump
        consider(t, before, &mut best, &mut best_t); // left limit
    }

    // continuous refinement between jumps (H is smooth there)
    let mut boundaries = vec![T_MIN.min(jumps.first().copied().unwrap_or(T_MIN))];
    boundaries.extend(jumps.iter().copied());
    boundaries.push(T_MAX);
    for w in boundaries.windows(2) {
        let (a, b) = (w[0].max(T_MIN), w[1].min(T_MAX));
        if b - a <= 0.0 {
            continue;
        }
        let i = sorted.partition_point(|&z| z <= a);
        for r in 1..=REFINE {
            let t = a + (b - a) * r as f64 / (REFINE + 1) as f64;
            consider(t, i, &mut best, &mut best_t);
        }
    }
    // right end of the window
    let i_end = sorted.partition_point(|&z| z <= T_MAX);
    consider(T_MAX, i_end, &mut best, &mut best_t);

    Ok((best, best_t))
}

/// Result of the normality test.
#[derive(Debug, Clone, Serialize)]
pub struct NormalityReport {
    pub statistic: f64,
    pub critical_value: f64,
    pub p_value: f64,
    pub reject: bool,
    pub n_used: usize,
    pub k_used: usize,
    pub sup_location: f64,
    pub alpha: f64,
}

/// Complete-case normality test: extracts the `delta = 1` rows, fits
/// the series model with `K = choose_k(N)`, standardizes the
/// residuals, applies the martingale transform and compares the sup
/// against the `sup |B|` law.
pub fn run_normality_test(data: &MarDataset, alpha: f64) -> Result<NormalityReport> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::DomainError(format!(
            "alpha must be in (0,1), got {alpha}"
        )));
    }
    let cc = crate::data::extract_complete_cases(data);
    let n_used = cc.n();
    let m = data.dim_u();
    let k = choose_k(n_used.max(1));
    let needed = m + k + 2;
    if n_used < needed {
        return Err(Error::InsufficientData {
            needed,
            got: n_used,
        });
    }
    let weights = vec![1u8; n_used];
    let fit = fit_series_ls(&cc.pairs, &weights, k)?;
    let zhat = normalized_residuals(&fit)?;
    let (statistic, sup_location) = martingale_statistic(&zhat)?;
    let law = LimitLaw::SupAbsBrownianMotion;
    let critical_value = law.quantile(1.0 - alpha)?;
    let p_value = law.p_value(statistic);
    Ok(NormalityReport {
        statistic,
        critical_value,
        p_value,
        reject: statistic > critical_value,
        n_used,
        k_used: k,
        sup_location,
        alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::adaptive_simpson;

    #[test]
    fn h_vec_values() {
        assert_eq!(h_vec(0.0), [1.0, 0.0, -1.0]);
        assert_eq!(h_vec(1.0), [1.0, 1.0, 0.0]);
        assert_eq!(h_vec(-2.0), [1.0, -2.0, 3.0]);
    }

    #[test]
    fn gamma_at_minus_infinity_is_full_moment_matrix() {
        let g = gamma_matrix(-8.0);
        let expected = Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, 2.0));
        for i in 0..3 {
            for j in 0..3 {
                assert!(
                    (g[(i, j)] - expected[(i, j)]).abs() < 1e-10,
                    "entry ({i},{j}) = {}",
                    g[(i, j)]
                );
            }
        }
    }

    #[test]
    fn gamma_vanishes_in_the_far_tail() {
        // phi(10) ~ 7.7e-23, so every entry is below ~8e-20
        let g = gamma_matrix(10.0);
        for i in 0..3 {
            for j in 0..3 {
                assert!(g[(i, j)].abs() < 1e-19);
            }
        }
    }

    #[test]
    fn gamma_at_zero_matches_quadrature() {
        let g = gamma_matrix(0.0);
        assert!((g[(0, 0)] - 0.5).abs() < 1e-10);
        for (i, j) in [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)] {
            let hv = |z: f64| h_vec(z);
            let oracle = adaptive_simpson(
                &|z| hv(z)[i] * hv(z)[j] * phi(z),
                0.0,
                12.0,
                1e-12,
            );
            assert!(
                (g[(i, j)] - oracle).abs() < 1e-8,
                "entry ({i},{j}): {} vs {oracle}",
                g[(i, j)]
            );
        }
    }

    #[test]
    fn gamma_symmetric_and_psd_on_grid() {
        for i in -50..=50 {
            let x = i as f64 * 0.1;
            let g = gamma_matrix(x);
            assert!((g - g.transpose()).norm() < 1e-14);
            let eig = g.symmetric_eigenvalues();
            assert!(eig.min() >= -1e-12, "x={x} min eig {}", eig.min());
        }
    }

    #[test]
    fn gamma_diagonal_shrinks_in_the_tail() {
        // d/dx of the diagonal entries is -phi, -x^2 phi and
        // -(x^2 - 1)^2 phi, so each is nonincreasing everywhere;
        // off-diagonal entries are not monotone.
        let grid = [-3.0, -1.0, 0.0, 1.0, 2.0, 3.0, 4.0];
        for w in grid.windows(2) {
            let a = gamma_matrix(w[0]);
            let b = gamma_matrix(w[1]);
            for i in 0..3 {
                assert!(b[(i, i)] <= a[(i, i)] + 1e-12);
            }
        }
    }

    #[test]
    fn h_transform_vanishes_at_lower_cutoff() {
        let h = h_transform(-8.0).unwrap();
        assert!(h.iter().all(|x| x.abs() < 1e-10));
        assert!(h_transform(6.0).is_err());
    }

    #[test]
    fn h_transform_derivative_check() {
        // (H(t+h) - H(t-h)) / 2h vs h'(t) Gamma^{-1}(t) phi(t)
        let t = 0.3;
        let h = 1e-4;
        let up = h_transform(t + h).unwrap();
        let dn = h_transform(t - h).unwrap();
        let exact = h_integrand(t).unwrap();
        for i in 0..3 {
            let fd = (up[i] - dn[i]) / (2.0 * h);
            assert!((fd - exact[i]).abs() < 1e-5, "coord {i}: {fd} vs {}", exact[i]);
        }
    }

    #[test]
    fn h_transform_matches_direct_quadrature_at_zero() {
        let val = h_transform(0.0).unwrap();
        #[allow(clippy::needless_range_loop)]
        for i in 0..3 {
            let oracle = adaptive_simpson(&|x| h_integrand(x).unwrap()[i], T_MIN, 0.0, 1e-10);
            assert!((val[i] - oracle).abs() < 1e-6, "coord {i}: {} vs {oracle}", val[i]);
        }
    }

    /// Dense-grid brute force over t, O(n * grid).
    fn brute_force_statistic(zhat: &[f64], step: f64) -> f64 {
        let n = zhat.len() as f64;
        let mut sup: f64 = 0.0;
        let mut t = T_MIN;
        while t <= T_MAX {
            let mut sum = 0.0;
            for &z in zhat {
                let ind = f64::from(z <= t);
                let hz = H_TABLE.eval(t.min(z.min(T_MAX)));
                let h = Vector3::new(1.0, z, z * z - 1.0);
                sum += ind - hz.dot(&h);
            }
            sup = sup.max((sum / n.sqrt()).abs());
            t += step;
        }
        sup
    }

    #[test]
    fn single_residual_matches_dense_grid() {
        let (stat, _) = martingale_statistic(&[0.0]).unwrap();
        let brute = brute_force_statistic(&[0.0], 1e-4);
        assert!((stat - brute).abs() < 1e-6, "{stat} vs {brute}");
    }

    #[test]
    fn five_residuals_match_dense_grid() {
        let z = [-1.2, -0.3, 0.1, 0.8, 2.0];
        let (stat, _) = martingale_statistic(&z).unwrap();
        let brute = brute_force_statistic(&z, 1e-4);
        assert!((stat - brute).abs() < 1e-6, "{stat} vs {brute}");
    }

    #[test]
    fn permutation_invariance() {
        let a = [-0.7, 0.2, 1.4, -2.1, 0.9];
        let b = [0.9, -2.1, 0.2, 1.4, -0.7];
        let (sa, la) = martingale_statistic(&a).unwrap();
        let (sb, lb) = martingale_statistic(&b).unwrap();
        assert_eq!(sa, sb);
        assert_eq!(la, lb);
    }

    #[test]
    fn empty_input_rejected() {
        assert!(matches!(martingale_statistic(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn run_requires_enough_complete_cases() {
        use crate::data::{MarDataset, MarRow};
        // N = 3 complete cases, but m + K + 2 = 4 are needed
        let rows: Vec<MarRow> = (0..3)
            .map(|i| MarRow {
                u: vec![i as f64],
                v: i as f64 / 4.0,
                y: Some(i as f64),
            })
            .collect();
        let data = MarDataset::new(rows, 1).unwrap();
        assert!(matches!(
            run_normality_test(&data, 0.05),
            Err(Error::InsufficientData { .. })
        ));
    }

    #[test]
    fn scale_invariance_of_the_test() {
        use crate::data::{MarDataset, MarRow};
        use rand::{Rng, SeedableRng};
        // signal kept inside the model span so the residuals scale
        // exactly with the error scale
        let make = |c: f64| {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
            let rows: Vec<MarRow> = (0..80)
                .map(|_| {
                    let u: f64 = rng.gen_range(-1.0..1.0);
                    let v: f64 = rng.gen_range(0.0..1.0);
                    let e: f64 = rng.gen_range(-1.0..1.0);
                    MarRow {
                        u: vec![u],
                        v,
                        y: Some(2.0 * u + (std::f64::consts::PI * v).cos() + c * e),
                    }
                })
                .collect();
            MarDataset::new(rows, 1).unwrap()
        };
        let d1 = make(1.0);
        let d10 = make(10.0);
        let r1 = run_normality_test(&d1, 0.05).unwrap();
        let r10 = run_normality_test(&d10, 0.05).unwrap();
        assert!((r1.statistic - r10.statistic).abs() < 1e-10);
    }
}
