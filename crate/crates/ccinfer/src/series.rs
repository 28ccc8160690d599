//! Series least-squares estimation of the partially linear model
//! `Y = theta' U + rho(V) + eps`.
//!
//! The smooth component is approximated in the cosine basis
//! `phi_0 = 1, phi_k(x) = cos(pi k x)` on `[0,1]`, with the cutoff
//! growing like the fourth root of the effective sample size. The
//! complete-case fit is the same least-squares problem restricted to
//! the `delta = 1` rows.

use nalgebra::{DMatrix, DVector};

use crate::data::CompletePair;
use crate::error::{Error, Result};

/// Relative pivot tolerance below which the design is declared
/// rank deficient.
pub const RANK_TOL: f64 = 1e-10;

/// Output of a series least-squares fit.
#[derive(Debug, Clone)]
pub struct SeriesFit {
    /// Slope estimate for the linear part, length m.
    pub theta_hat: Vec<f64>,
    /// Cosine coefficients `beta_0 ..= beta_K`.
    pub beta_hat: Vec<f64>,
    /// Basis cutoff K.
    pub k_basis: usize,
    /// Residuals over the rows that entered the fit, in row order.
    pub residuals: Vec<f64>,
    /// Square root of the mean squared residual over used rows.
    pub sigma_hat: f64,
    /// Indices (into the input slice) of the rows that entered the fit.
    pub used_indices: Vec<usize>,
}

impl SeriesFit {
    /// Fitted regression function `theta_hat' u + sum beta_k phi_k(v)`.
    pub fn predict(&self, u: &[f64], v: f64) -> f64 {
        let linear: f64 = self
            .theta_hat
            .iter()
            .zip(u)
            .map(|(t, ui)| t * ui)
            .sum();
        let smooth: f64 = self
            .beta_hat
            .iter()
            .enumerate()
            .map(|(k, b)| b * cosine_basis_unchecked(k, v))
            .sum();
        linear + smooth
    }
}

fn cosine_basis_unchecked(k: usize, x: f64) -> f64 {
    if k == 0 {
        1.0
    } else {
        (std::f64::consts::PI * k as f64 * x).cos()
    }
}

/// The basis function `phi_k(x) = cos(pi k x)`; `phi_0` is exactly 1.
pub fn cosine_basis(k: usize, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::DomainError(format!(
            "cosine basis argument {x} outside [0,1]"
        )));
    }
    Ok(cosine_basis_unchecked(k, x))
}

/// Basis cutoff `K = max(1, round(n_effective^(1/4)))`.
pub fn choose_k(n_effective: usize) -> usize {
    let k = (n_effective as f64).powf(0.25).round() as usize;
    k.max(1)
}

/// Weighted series least squares: minimizes
/// `sum_j w_j (y_j - a' u_j - sum_k b_k phi_k(v_j))^2`
/// over the rows with `weights[j] = 1`.
pub fn fit_series_ls(rows: &[CompletePair], weights: &[u8], k: usize) -> Result<SeriesFit> {
    assert_eq!(rows.len(), weights.len(), "rows/weights length mismatch");
    let used_indices: Vec<usize> = (0..rows.len()).filter(|&j| weights[j] == 1).collect();
    let m = rows.first().map_or(0, |r| r.u.len());
    let ncols = m + k + 1;
    if used_indices.len() < ncols {
        return Err(Error::InsufficientData {
            needed: ncols,
            got: used_indices.len(),
        });
    }

    let nrows = used_indices.len();
    let mut design = DMatrix::zeros(nrows, ncols);
    let mut response = DVector::zeros(nrows);
    for (r, &j) in used_indices.iter().enumerate() {
        let row = &rows[j];
        if !(0.0..=1.0).contains(&row.v) {
            return Err(Error::DomainError(format!(
                "v = {} outside [0,1] at row {j}",
                row.v
            )));
        }
        for c in 0..m {
            design[(r, c)] = row.u[c];
        }
        for b in 0..=k {
            design[(r, m + b)] = cosine_basis_unchecked(b, row.v);
        }
        response[r] = row.y;
    }

    let coefs = solve_least_squares(&design, &response)?;
    let fitted = &design * &coefs;
    let residuals: Vec<f64> = (0..nrows).map(|r| response[r] - fitted[r]).collect();
    let sigma_hat = (residuals.iter().map(|e| e * e).sum::<f64>() / nrows as f64).sqrt();

    Ok(SeriesFit {
        theta_hat: coefs.as_slice()[..m].to_vec(),
        beta_hat: coefs.as_slice()[m..].to_vec(),
        k_basis: k,
        residuals,
        sigma_hat,
        used_indices,
    })
}

/// Least squares via column-pivoted QR with a relative pivot check.
pub(crate) fn solve_least_squares(
    design: &DMatrix<f64>,
    response: &DVector<f64>,
) -> Result<DVector<f64>> {
    let ncols = design.ncols();
    let qr = design.clone().col_piv_qr();
    let r = qr.r();
    let lead = r[(0, 0)].abs();
    if lead == 0.0 {
        return Err(Error::RankDeficientDesign { tol: RANK_TOL });
    }
    for i in 0..ncols {
        if r[(i, i)].abs() < RANK_TOL * lead {
            return Err(Error::RankDeficientDesign { tol: RANK_TOL });
        }
    }
    // design * P = Q R, so the minimizer is P R^{-1} Q^T response
    let c = qr.q().transpose() * response;
    let mut x = r
        .solve_upper_triangular(&c)
        .ok_or(Error::RankDeficientDesign { tol: RANK_TOL })?;
    qr.p().inv_permute_rows(&mut x);
    Ok(x)
}

/// Standardized residuals `eps_hat / sigma_hat`; their sample second
/// moment is 1 by construction.
pub fn normalized_residuals(fit: &SeriesFit) -> Result<Vec<f64>> {
    if fit.sigma_hat <= 0.0 {
        return Err(Error::DegenerateResiduals);
    }
    Ok(fit.residuals.iter().map(|e| e / fit.sigma_hat).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn pair(u: f64, v: f64, y: f64) -> CompletePair {
        CompletePair { u: vec![u], v, y }
    }

    #[test]
    fn basis_values() {
        assert_eq!(cosine_basis(0, 0.37).unwrap(), 1.0);
        assert!(cosine_basis(1, 0.5).unwrap().abs() < 1e-15);
        assert!((cosine_basis(2, 1.0).unwrap() - 1.0).abs() < 1e-12);
        assert!(cosine_basis(1, 1.5).is_err());
    }

    #[test]
    fn cutoff_rule() {
        assert_eq!(choose_k(16), 2);
        assert_eq!(choose_k(1), 1);
        assert_eq!(choose_k(10_000), 10);
    }

    #[test]
    fn recovers_linear_truth_exactly() {
        // Y = 2 + 3u, rho constant: theta = 3, beta_0 = 2, rest 0.
        let rows: Vec<CompletePair> = (0..30)
            .map(|i| {
                let u = (i as f64 * 0.37).sin();
                let v = i as f64 / 29.0;
                pair(u, v, 2.0 + 3.0 * u)
            })
            .collect();
        let w = vec![1u8; rows.len()];
        let fit = fit_series_ls(&rows, &w, 2).unwrap();
        assert!((fit.theta_hat[0] - 3.0).abs() < 1e-10);
        assert!((fit.beta_hat[0] - 2.0).abs() < 1e-10);
        assert!(fit.beta_hat[1].abs() < 1e-10);
        assert!(fit.beta_hat[2].abs() < 1e-10);
        assert!(fit.residuals.iter().all(|e| e.abs() < 1e-10));
        assert!(fit.sigma_hat < 1e-10);
    }

    #[test]
    fn recovers_basis_element_exactly() {
        // Y = cos(pi v): beta_1 = 1, residuals 0.
        let rows: Vec<CompletePair> = (0..25)
            .map(|i| {
                let u = (i as f64 * 1.1).cos();
                let v = i as f64 / 24.0;
                pair(u, v, (PI * v).cos())
            })
            .collect();
        let w = vec![1u8; rows.len()];
        let fit = fit_series_ls(&rows, &w, 3).unwrap();
        assert!(fit.theta_hat[0].abs() < 1e-10);
        assert!((fit.beta_hat[1] - 1.0).abs() < 1e-10);
        assert!(fit.sigma_hat < 1e-10);
    }

    fn random_rows(n: usize, seed: u64) -> Vec<CompletePair> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                let u: f64 = rng.gen_range(-2.0..2.0);
                let v: f64 = rng.gen_range(0.0..1.0);
                let y: f64 = 1.5 * u + (2.0 * v).sin() + rng.gen_range(-0.5..0.5);
                pair(u, v, y)
            })
            .collect()
    }

    #[test]
    fn matches_normal_equations_oracle() {
        // Independent oracle: explicit Gram matrix inversion.
        let rows = random_rows(20, 11);
        let w = vec![1u8; rows.len()];
        let k = 2;
        let fit = fit_series_ls(&rows, &w, k).unwrap();

        let ncols = 1 + k + 1;
        let mut x = DMatrix::zeros(rows.len(), ncols);
        let mut y = DVector::zeros(rows.len());
        for (r, row) in rows.iter().enumerate() {
            x[(r, 0)] = row.u[0];
            for b in 0..=k {
                x[(r, 1 + b)] = (PI * b as f64 * row.v).cos();
            }
            y[r] = row.y;
        }
        let gram = x.transpose() * &x;
        let moment = x.transpose() * &y;
        let oracle = gram.try_inverse().unwrap() * moment;

        assert!((fit.theta_hat[0] - oracle[0]).abs() < 1e-8);
        for b in 0..=k {
            assert!((fit.beta_hat[b] - oracle[1 + b]).abs() < 1e-8);
        }
    }

    #[test]
    fn residuals_orthogonal_to_design() {
        let rows = random_rows(40, 3);
        let w = vec![1u8; rows.len()];
        let fit = fit_series_ls(&rows, &w, 3).unwrap();
        // u column
        let mut dot = 0.0;
        let mut norm = 0.0;
        for (e, row) in fit.residuals.iter().zip(&rows) {
            dot += e * row.u[0];
            norm += row.u[0] * row.u[0];
        }
        assert!(dot.abs() < 1e-8 * norm.sqrt().max(1.0));
        for b in 0..=3 {
            let mut dot = 0.0;
            let mut norm = 0.0;
            for (e, row) in fit.residuals.iter().zip(&rows) {
                let c = (PI * b as f64 * row.v).cos();
                dot += e * c;
                norm += c * c;
            }
            assert!(dot.abs() < 1e-8 * norm.sqrt().max(1.0));
        }
    }

    #[test]
    fn sigma_matches_mean_square() {
        let rows = random_rows(30, 5);
        let w = vec![1u8; rows.len()];
        let fit = fit_series_ls(&rows, &w, 2).unwrap();
        let msr = fit.residuals.iter().map(|e| e * e).sum::<f64>() / fit.residuals.len() as f64;
        assert!((fit.sigma_hat * fit.sigma_hat - msr).abs() < 1e-12);
    }

    #[test]
    fn scale_equivariance() {
        let rows = random_rows(30, 9);
        let w = vec![1u8; rows.len()];
        let fit = fit_series_ls(&rows, &w, 2).unwrap();
        let scaled: Vec<CompletePair> = rows
            .iter()
            .map(|r| pair(r.u[0], r.v, 3.0 * r.y))
            .collect();
        let fit3 = fit_series_ls(&scaled, &w, 2).unwrap();
        assert!((fit3.theta_hat[0] - 3.0 * fit.theta_hat[0]).abs() < 1e-9);
        for (a, b) in fit3.beta_hat.iter().zip(&fit.beta_hat) {
            assert!((a - 3.0 * b).abs() < 1e-9);
        }
        assert!((fit3.sigma_hat - 3.0 * fit.sigma_hat).abs() < 1e-9);
    }

    #[test]
    fn weighted_fit_equals_extracted_fit() {
        let rows = random_rows(30, 21);
        let weights: Vec<u8> = (0..rows.len()).map(|i| u8::from(i % 3 != 0)).collect();
        let weighted = fit_series_ls(&rows, &weights, 2).unwrap();

        let subset: Vec<CompletePair> = rows
            .iter()
            .zip(&weights)
            .filter(|(_, &w)| w == 1)
            .map(|(r, _)| r.clone())
            .collect();
        let all_ones = vec![1u8; subset.len()];
        let extracted = fit_series_ls(&subset, &all_ones, 2).unwrap();

        for (a, b) in weighted.theta_hat.iter().zip(&extracted.theta_hat) {
            assert!((a - b).abs() < 1e-12);
        }
        for (a, b) in weighted.beta_hat.iter().zip(&extracted.beta_hat) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!((weighted.sigma_hat - extracted.sigma_hat).abs() < 1e-12);
    }

    #[test]
    fn insufficient_data_detected() {
        let rows = random_rows(4, 2);
        let w = vec![1u8; rows.len()];
        let err = fit_series_ls(&rows, &w, 3).unwrap_err();
        assert!(matches!(err, Error::InsufficientData { needed: 5, got: 4 }));
    }

    #[test]
    fn rank_deficiency_detected() {
        // v constant: phi_1(v) is collinear with phi_0.
        let rows: Vec<CompletePair> = (0..20)
            .map(|i| pair(i as f64 * 0.1, 0.5, i as f64))
            .collect();
        let w = vec![1u8; rows.len()];
        let err = fit_series_ls(&rows, &w, 2).unwrap_err();
        assert!(matches!(err, Error::RankDeficientDesign { .. }));
    }

    #[test]
    fn normalized_residuals_unit_second_moment() {
        let fit = SeriesFit {
            theta_hat: vec![],
            beta_hat: vec![],
            k_basis: 1,
            residuals: vec![2.0, -2.0],
            sigma_hat: 2.0,
            used_indices: vec![0, 1],
        };
        assert_eq!(normalized_residuals(&fit).unwrap(), vec![1.0, -1.0]);

        let degenerate = SeriesFit {
            sigma_hat: 0.0,
            residuals: vec![0.0, 0.0],
            ..fit
        };
        assert!(matches!(
            normalized_residuals(&degenerate),
            Err(Error::DegenerateResiduals)
        ));
    }
}
