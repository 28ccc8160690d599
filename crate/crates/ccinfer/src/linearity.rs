//! Test of `H0: rho == alpha` (constant nonparametric part) via a
//! weighted residual-marked empirical process, and its extension to
//! testing a linear `rho` with an augmented null design.
//!
//! Under the null the model is `Y = beta' Z + eps` with
//! `Z = (1, U')'` (or `(1, U', V)'` for the linear-rho null). Marks
//! `W_j` are the normalized residuals of regressing `chi(V_j)` on
//! `Z_j`; the statistic is the sup of the partial-sum process of the
//! marks ordered by the null residuals. Its null limit is the sup of
//! the absolute Brownian bridge, so Kolmogorov critical values apply.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::data::{CompletePair, MarDataset};
use crate::error::{Error, Result};
use crate::limits::LimitLaw;
use crate::series::solve_least_squares;

/// Which parametric null is being tested for `rho`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NullDesign {
    /// `rho(v) = alpha`: design `Z = (1, U')'`.
    ConstantRho,
    /// `rho(v) = a + b v`: design `Z = (1, U', V)'`.
    LinearRho,
}

impl NullDesign {
    fn dim_z(self, m: usize) -> usize {
        match self {
            NullDesign::ConstantRho => m + 1,
            NullDesign::LinearRho => m + 2,
        }
    }

    fn fill_row(self, row: &CompletePair, out: &mut [f64]) {
        out[0] = 1.0;
        out[1..=row.u.len()].copy_from_slice(&row.u);
        if self == NullDesign::LinearRho {
            out[row.u.len() + 1] = row.v;
        }
    }
}

/// Named weight functions `chi` on `[0,1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiFn {
    /// `cos(pi v)` — default for the constant-rho null.
    Cos1,
    /// `cos(2 pi v)` — default for the linear-rho null.
    Cos2,
    /// `v^2` — nonlinear in every supported null design.
    Poly2,
}

impl ChiFn {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "cos1" => Ok(ChiFn::Cos1),
            "cos2" => Ok(ChiFn::Cos2),
            "poly2" => Ok(ChiFn::Poly2),
            other => Err(Error::NonConstantChiRequired(format!(
                "unknown weight function `{other}` (supported: cos1, cos2, poly2)"
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChiFn::Cos1 => "cos1",
            ChiFn::Cos2 => "cos2",
            ChiFn::Poly2 => "poly2",
        }
    }

    pub fn default_for(null_design: NullDesign) -> Self {
        match null_design {
            NullDesign::ConstantRho => ChiFn::Cos1,
            NullDesign::LinearRho => ChiFn::Cos2,
        }
    }

    pub fn eval(self, v: f64) -> f64 {
        match self {
            ChiFn::Cos1 => (std::f64::consts::PI * v).cos(),
            ChiFn::Cos2 => (2.0 * std::f64::consts::PI * v).cos(),
            ChiFn::Poly2 => v * v,
        }
    }
}

fn build_design(
    rows: &[CompletePair],
    weights: &[u8],
    null_design: NullDesign,
) -> Result<(DMatrix<f64>, Vec<usize>)> {
    assert_eq!(rows.len(), weights.len(), "rows/weights length mismatch");
    let used: Vec<usize> = (0..rows.len()).filter(|&j| weights[j] == 1).collect();
    let m = rows.first().map_or(0, |r| r.u.len());
    let dim_z = null_design.dim_z(m);
    if used.len() < dim_z + 1 {
        return Err(Error::InsufficientData {
            needed: dim_z + 1,
            got: used.len(),
        });
    }
    let mut design = DMatrix::zeros(used.len(), dim_z);
    let mut buf = vec![0.0; dim_z];
    for (r, &j) in used.iter().enumerate() {
        null_design.fill_row(&rows[j], &mut buf);
        for (c, &x) in buf.iter().enumerate() {
            design[(r, c)] = x;
        }
    }
    Ok((design, used))
}

/// Least-squares fit of the null model over the weight-1 rows.
/// Returns `(beta_hat, residuals over used rows)`.
pub fn fit_null_linear(
    rows: &[CompletePair],
    weights: &[u8],
    null_design: NullDesign,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let (design, used) = build_design(rows, weights, null_design)?;
    let response = DVector::from_iterator(used.len(), used.iter().map(|&j| rows[j].y));
    let beta = solve_least_squares(&design, &response)?;
    let fitted = &design * &beta;
    let residuals = (0..used.len()).map(|r| response[r] - fitted[r]).collect();
    Ok((beta.as_slice().to_vec(), residuals))
}

/// Regresses `chi(V_j)` on the null design over the weight-1 rows.
/// Returns `(R, W)` where `R` are the residuals and `W = R` scaled so
/// that the mean of `W^2` over used rows is 1.
pub fn chi_weights(
    rows: &[CompletePair],
    weights: &[u8],
    chi: impl Fn(f64) -> f64,
    null_design: NullDesign,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let (design, used) = build_design(rows, weights, null_design)?;
    let n = used.len();
    let chi_vals = DVector::from_iterator(n, used.iter().map(|&j| chi(rows[j].v)));
    let gamma = solve_least_squares(&design, &chi_vals)?;
    let fitted = &design * &gamma;
    let r: Vec<f64> = (0..n).map(|i| chi_vals[i] - fitted[i]).collect();
    let mean_sq = r.iter().map(|x| x * x).sum::<f64>() / n as f64;
    let chi_scale: f64 = chi_vals.iter().map(|x| x * x).sum::<f64>() / n as f64;
    if mean_sq <= 1e-20 * chi_scale.max(1.0) {
        return Err(Error::DegenerateChi);
    }
    let norm = mean_sq.sqrt();
    let w = r.iter().map(|x| x / norm).collect();
    Ok((r, w))
}

/// Sup of the marked partial-sum process: the marks `w` are summed in
/// ascending order of the null residuals (ties grouped), and the
/// statistic is `max |partial sum| / sqrt(normalizer)`. Returns the
/// statistic and the residual value where the sup is attained.
pub fn linearity_statistic(
    w: &[f64],
    residuals0: &[f64],
    normalizer: usize,
) -> Result<(f64, f64)> {
    if w.is_empty() || residuals0.is_empty() {
        return Err(Error::EmptyInput);
    }
    assert_eq!(w.len(), residuals0.len(), "marks/residuals length mismatch");
    assert!(normalizer >= 1);
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by(|&a, &b| residuals0[a].partial_cmp(&residuals0[b]).unwrap());

    let scale = 1.0 / (normalizer as f64).sqrt();
    let mut best: f64 = 0.0;
    let mut best_t = residuals0[order[0]];
    let mut partial = 0.0;
    let mut i = 0;
    while i < order.len() {
        let t = residuals0[order[i]];
        // group ties: the indicator jumps by the group total
        while i < order.len() && residuals0[order[i]] == t {
            partial += w[order[i]];
            i += 1;
        }
        let value = (partial * scale).abs();
        if value > best {
            best = value;
            best_t = t;
        }
    }
    Ok((best, best_t))
}

/// Result of the linearity test.
#[derive(Debug, Clone, Serialize)]
pub struct LinearityReport {
    pub statistic: f64,
    pub critical_value: f64,
    pub p_value: f64,
    pub reject: bool,
    pub n_used: usize,
    pub chi_name: String,
    pub null_design: NullDesign,
    pub sup_location: f64,
    pub alpha: f64,
}

/// Complete-case linearity test: null fit, chi weights and the
/// partial-sum sup over the `delta = 1` rows, compared against the
/// Kolmogorov law.
pub fn run_linearity_test(
    data: &MarDataset,
    alpha: f64,
    chi: ChiFn,
    null_design: NullDesign,
) -> Result<LinearityReport> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::DomainError(format!(
            "alpha must be in (0,1), got {alpha}"
        )));
    }
    let cc = crate::data::extract_complete_cases(data);
    let n_used = cc.n();
    let weights = vec![1u8; n_used];
    let (_beta, residuals0) = fit_null_linear(&cc.pairs, &weights, null_design)?;
    let (_r, w) = chi_weights(&cc.pairs, &weights, |v| chi.eval(v), null_design)?;
    let (statistic, sup_location) = linearity_statistic(&w, &residuals0, n_used)?;
    let law = LimitLaw::SupAbsBrownianBridge;
    let critical_value = law.quantile(1.0 - alpha)?;
    let p_value = law.p_value(statistic);
    Ok(LinearityReport {
        statistic,
        critical_value,
        p_value,
        reject: statistic > critical_value,
        n_used,
        chi_name: chi.name().to_string(),
        null_design,
        sup_location,
        alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pair(u: f64, v: f64, y: f64) -> CompletePair {
        CompletePair { u: vec![u], v, y }
    }

    fn random_rows(n: usize, seed: u64) -> Vec<CompletePair> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                let u: f64 = rng.gen_range(-2.0..2.0);
                let v: f64 = rng.gen_range(0.0..1.0);
                let y: f64 = 1.0 + 2.0 * u + rng.gen_range(-0.5..0.5);
                pair(u, v, y)
            })
            .collect()
    }

    #[test]
    fn exact_linear_recovery() {
        let rows: Vec<CompletePair> = (0..15)
            .map(|i| {
                let u = (i as f64 * 0.7).sin();
                pair(u, i as f64 / 14.0, 1.0 + 2.0 * u)
            })
            .collect();
        let w = vec![1u8; rows.len()];
        let (beta, resid) = fit_null_linear(&rows, &w, NullDesign::ConstantRho).unwrap();
        assert!((beta[0] - 1.0).abs() < 1e-10);
        assert!((beta[1] - 2.0).abs() < 1e-10);
        assert!(resid.iter().all(|e| e.abs() < 1e-10));
    }

    #[test]
    fn weighted_equals_extracted() {
        let rows = random_rows(25, 8);
        let weights: Vec<u8> = (0..rows.len()).map(|i| u8::from(i % 4 != 0)).collect();
        let (beta_w, _) = fit_null_linear(&rows, &weights, NullDesign::ConstantRho).unwrap();
        let subset: Vec<CompletePair> = rows
            .iter()
            .zip(&weights)
            .filter(|(_, &w)| w == 1)
            .map(|(r, _)| r.clone())
            .collect();
        let ones = vec![1u8; subset.len()];
        let (beta_s, _) = fit_null_linear(&subset, &ones, NullDesign::ConstantRho).unwrap();
        for (a, b) in beta_w.iter().zip(&beta_s) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn null_fit_matches_normal_equations_oracle() {
        let rows = random_rows(15, 19);
        let w = vec![1u8; rows.len()];
        let (beta, _) = fit_null_linear(&rows, &w, NullDesign::ConstantRho).unwrap();

        let mut x = DMatrix::zeros(rows.len(), 2);
        let mut y = DVector::zeros(rows.len());
        for (r, row) in rows.iter().enumerate() {
            x[(r, 0)] = 1.0;
            x[(r, 1)] = row.u[0];
            y[r] = row.y;
        }
        let oracle = (x.transpose() * &x).try_inverse().unwrap() * (x.transpose() * &y);
        assert!((beta[0] - oracle[0]).abs() < 1e-8);
        assert!((beta[1] - oracle[1]).abs() < 1e-8);
    }

    #[test]
    fn constant_chi_is_degenerate() {
        let rows = random_rows(20, 3);
        let w = vec![1u8; rows.len()];
        let err = chi_weights(&rows, &w, |_| 1.0, NullDesign::ConstantRho).unwrap_err();
        assert!(matches!(err, Error::DegenerateChi));
    }

    #[test]
    fn chi_scale_cancels_in_w() {
        let rows = random_rows(20, 5);
        let w = vec![1u8; rows.len()];
        let chi = |v: f64| (std::f64::consts::PI * v).cos();
        let (_, w1) = chi_weights(&rows, &w, chi, NullDesign::ConstantRho).unwrap();
        let (_, w2) = chi_weights(&rows, &w, |v| 2.0 * chi(v), NullDesign::ConstantRho).unwrap();
        for (a, b) in w1.iter().zip(&w2) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn chi_shift_by_span_element_is_invisible() {
        // replacing chi(V) by chi(V) + c'Z leaves R and W unchanged:
        // gamma absorbs c. The u-part of the shift is applied through
        // a per-row lookup since chi itself only sees v.
        let rows = random_rows(20, 6);
        let w = vec![1u8; rows.len()];
        let chi = |v: f64| (std::f64::consts::PI * v).cos();
        let (r1, w1) = chi_weights(&rows, &w, chi, NullDesign::ConstantRho).unwrap();
        let lookup: std::collections::HashMap<u64, f64> = rows
            .iter()
            .map(|p| (p.v.to_bits(), chi(p.v) + 0.7 + 1.3 * p.u[0]))
            .collect();
        let (r2, w2) = chi_weights(
            &rows,
            &w,
            |v| lookup[&v.to_bits()],
            NullDesign::ConstantRho,
        )
        .unwrap();
        for (a, b) in r1.iter().zip(&r2) {
            assert!((a - b).abs() < 1e-10);
        }
        for (a, b) in w1.iter().zip(&w2) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn residual_sum_of_r_is_zero() {
        let rows = random_rows(30, 7);
        let w = vec![1u8; rows.len()];
        let (r, _) = chi_weights(&rows, &w, |v| v * v, NullDesign::ConstantRho).unwrap();
        let sum: f64 = r.iter().sum();
        assert!(sum.abs() < 1e-10);
    }

    #[test]
    fn hand_checked_partial_sums() {
        // W = (1, -2, 1), residual order as given:
        // partials (1, -1, 0), sup = 1/sqrt(3), first attained at 0.1
        let w = [1.0, -2.0, 1.0];
        let resid = [0.1, 0.2, 0.3];
        let (stat, loc) = linearity_statistic(&w, &resid, 3).unwrap();
        assert!((stat - 1.0 / 3.0f64.sqrt()).abs() < 1e-14);
        assert_eq!(loc, 0.1);
    }

    #[test]
    fn ties_are_grouped() {
        // ties at 0.2: the jump is by the group total -2 + 1 = -1,
        // never exposing the intermediate partial sum -2
        let w = [1.0, -2.0, 1.0, 0.0];
        let resid = [0.1, 0.2, 0.2, 0.3];
        let (stat, _) = linearity_statistic(&w, &resid, 4).unwrap();
        assert!((stat - 1.0 / 2.0).abs() < 1e-14);
    }

    #[test]
    fn process_returns_to_zero() {
        let rows = random_rows(40, 13);
        let w = vec![1u8; rows.len()];
        let (_, marks) = chi_weights(&rows, &w, |v| v * v, NullDesign::ConstantRho).unwrap();
        let total: f64 = marks.iter().sum();
        assert!(total.abs() < 1e-9);
    }

    #[test]
    fn matches_dense_grid_brute_force() {
        let rows = random_rows(25, 17);
        let ones = vec![1u8; rows.len()];
        let (_, resid) = fit_null_linear(&rows, &ones, NullDesign::ConstantRho).unwrap();
        let (_, marks) = chi_weights(&rows, &ones, |v| (std::f64::consts::PI * v).cos(),
            NullDesign::ConstantRho).unwrap();
        let (stat, _) = linearity_statistic(&marks, &resid, rows.len()).unwrap();

        // brute force over a dense t grid
        let lo = resid.iter().cloned().fold(f64::INFINITY, f64::min) - 0.1;
        let hi = resid.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 0.1;
        let mut brute: f64 = 0.0;
        let steps = 20_000;
        for s in 0..=steps {
            let t = lo + (hi - lo) * s as f64 / steps as f64;
            let sum: f64 = marks
                .iter()
                .zip(&resid)
                .filter(|(_, &e)| e <= t)
                .map(|(w, _)| w)
                .sum();
            brute = brute.max((sum / (rows.len() as f64).sqrt()).abs());
        }
        assert!((stat - brute).abs() < 1e-12, "{stat} vs {brute}");
    }

    #[test]
    fn linear_rho_design_augments_z() {
        // Y exactly linear in (1, u, v): residuals vanish under the
        // linear-rho null but not under the constant-rho null.
        let rows: Vec<CompletePair> = (0..20)
            .map(|i| {
                let u = (i as f64 * 0.9).cos();
                let v = i as f64 / 19.0;
                pair(u, v, 0.5 + 2.0 * u + 3.0 * v)
            })
            .collect();
        let w = vec![1u8; rows.len()];
        let (_, resid_lin) = fit_null_linear(&rows, &w, NullDesign::LinearRho).unwrap();
        assert!(resid_lin.iter().all(|e| e.abs() < 1e-9));
        let (_, resid_const) = fit_null_linear(&rows, &w, NullDesign::ConstantRho).unwrap();
        assert!(resid_const.iter().any(|e| e.abs() > 0.1));
    }
}
