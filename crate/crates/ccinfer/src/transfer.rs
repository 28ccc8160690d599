//! Exact distribution theory for complete-case statistics.
//!
//! A full-data procedure is a sequence of functions `t_k`, one per
//! sample size. Its complete-case version applies `t_N` to the
//! `delta = 1` observations, where `N` is the random number of
//! complete cases. The law of the complete-case statistic is then a
//! binomial mixture over `k` of the laws `R_k` of `t_k` applied to
//! `k` i.i.d. draws from the conditional observation law given
//! `delta = 1`. Equivalently, it is the law of `t_K` with a
//! `Binomial(n, p)` index `K`.

use rand::Rng;
use rand_distr::{Binomial, Distribution};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

/// A sequence of statistics `t_k`, one for every sample size
/// `k >= 1`, together with the constant value `t_0` for the empty
/// sample. Evaluation must be a pure function of the sample.
pub trait StatisticFamily<O> {
    /// Output dimension m.
    fn output_dim(&self) -> usize {
        1
    }

    /// Evaluates `t_k` on a sample of size `k = sample.len() >= 1`.
    fn eval(&self, sample: &[O]) -> Vec<f64>;

    /// The constant `t_0` assigned to the empty sample.
    fn empty_value(&self) -> Vec<f64>;
}

/// Sample mean of scalar observations, with `t_0 = 0`.
#[derive(Debug, Clone, Copy)]
pub struct MeanFamily;

impl StatisticFamily<f64> for MeanFamily {
    fn eval(&self, sample: &[f64]) -> Vec<f64> {
        vec![sample.iter().sum::<f64>() / sample.len() as f64]
    }

    fn empty_value(&self) -> Vec<f64> {
        vec![0.0]
    }
}

/// Sample mean of `psi(observation)` for a plug-in function `psi`.
#[derive(Debug, Clone)]
pub struct MeanOfFamily<F> {
    pub psi: F,
    pub t0: f64,
}

impl<O, F: Fn(&O) -> f64> StatisticFamily<O> for MeanOfFamily<F> {
    fn eval(&self, sample: &[O]) -> Vec<f64> {
        vec![sample.iter().map(&self.psi).sum::<f64>() / sample.len() as f64]
    }

    fn empty_value(&self) -> Vec<f64> {
        vec![self.t0]
    }
}

/// The family `k^alpha * t_k` built from a base family. Its
/// complete-case statistic is `N^alpha` times the base one.
#[derive(Debug, Clone)]
pub struct ScaledFamily<F> {
    pub base: F,
    pub alpha: f64,
}

impl<O, F: StatisticFamily<O>> StatisticFamily<O> for ScaledFamily<F> {
    fn output_dim(&self) -> usize {
        self.base.output_dim()
    }

    fn eval(&self, sample: &[O]) -> Vec<f64> {
        let scale = (sample.len() as f64).powf(self.alpha);
        self.base
            .eval(sample)
            .into_iter()
            .map(|x| scale * x)
            .collect()
    }

    fn empty_value(&self) -> Vec<f64> {
        // 0^alpha * t_0; with alpha > 0 the empty value scales to 0,
        // with alpha <= 0 the convention k^alpha at k = 0 is left to
        // the base constant (the empty sample has no size to scale by).
        self.base.empty_value()
    }
}

/// Evaluates the complete-case statistic `t_{|A|}(xi^A)` where
/// `A = {i : delta_i = 1}` and `observations` holds the values at the
/// `delta = 1` positions, in order. Returns `t_0` when `A` is empty.
pub fn complete_case_statistic<O>(
    family: &impl StatisticFamily<O>,
    deltas: &[u8],
    observations: &[O],
) -> Result<Vec<f64>> {
    let n_obs = deltas.iter().filter(|&&d| d == 1).count();
    if n_obs != observations.len() {
        return Err(Error::ArityMismatch {
            expected: n_obs,
            got: observations.len(),
        });
    }
    if observations.is_empty() {
        Ok(family.empty_value())
    } else {
        Ok(family.eval(observations))
    }
}

/// One component law `R_k` of the mixture: either an exact discrete
/// law (atoms with probabilities) or an empirical sample of `t_k`
/// under the conditional observation law.
#[derive(Debug, Clone)]
pub enum ComponentLaw {
    /// Atoms `(value, probability)`; probabilities sum to 1.
    Exact(Vec<(f64, f64)>),
    /// Monte Carlo draws of `t_k`.
    Empirical(Vec<f64>),
}

impl ComponentLaw {
    /// `R_k((-inf, b])`.
    pub fn cdf(&self, b: f64) -> f64 {
        match self {
            ComponentLaw::Exact(atoms) => atoms
                .iter()
                .filter(|(value, _)| *value <= b)
                .map(|(_, p)| p)
                .sum(),
            ComponentLaw::Empirical(draws) => {
                let count = draws.iter().filter(|&&x| x <= b).count();
                count as f64 / draws.len() as f64
            }
        }
    }
}

/// The exact law of a scalar complete-case statistic: binomial
/// weights over `k = 0..=n` and per-`k` component laws `R_k`.
#[derive(Debug, Clone)]
pub struct MixtureDistribution {
    pub n: usize,
    pub p: f64,
    pub weights: Vec<f64>,
    pub components: Vec<ComponentLaw>,
}

impl MixtureDistribution {
    /// Mixture CDF at `b`.
    pub fn cdf(&self, b: f64) -> f64 {
        self.weights
            .iter()
            .zip(&self.components)
            .map(|(w, r)| w * r.cdf(b))
            .sum()
    }

    /// The full atom list `(value, probability)` when every component
    /// is exact, merged and sorted by value. Zero-probability entries
    /// (for example the `t0` component when `p = 1`) are dropped.
    /// Returns `None` if any component is empirical.
    pub fn atoms(&self) -> Option<Vec<(f64, f64)>> {
        let mut all: Vec<(f64, f64)> = Vec::new();
        for (w, comp) in self.weights.iter().zip(&self.components) {
            match comp {
                ComponentLaw::Exact(atoms) => {
                    all.extend(atoms.iter().map(|&(value, p)| (value, w * p)));
                }
                ComponentLaw::Empirical(_) => return None,
            }
        }
        let merged = merge_atoms(all);
        Some(merged.into_iter().filter(|&(_, p)| p > 0.0).collect())
    }

    /// Kolmogorov distance between this (mixed discrete) law and an
    /// empirical sample, evaluated at every sample point and mixture
    /// jump from both sides.
    pub fn ks_distance(&self, sample: &[f64]) -> f64 {
        let mut points: Vec<f64> = sample.to_vec();
        if let Some(atoms) = self.atoms() {
            points.extend(atoms.iter().map(|&(value, _)| value));
        }
        points.sort_by(|a, b| a.partial_cmp(b).unwrap());
        points.dedup();

        let mut sorted = sample.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let n = sorted.len() as f64;
        let emp_cdf = |b: f64| sorted.partition_point(|&x| x <= b) as f64 / n;
        let emp_cdf_left = |b: f64| sorted.partition_point(|&x| x < b) as f64 / n;

        let mut sup: f64 = 0.0;
        for &pt in &points {
            sup = sup.max((emp_cdf(pt) - self.cdf(pt)).abs());
            // left limits: both CDFs may jump at pt
            let below = pt - pt.abs().max(1.0) * 1e-12;
            sup = sup.max((emp_cdf_left(pt) - self.cdf(below)).abs());
        }
        sup
    }
}

/// Merges duplicate atom values (exact f64 equality) and sorts.
pub fn merge_atoms(mut atoms: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    atoms.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(atoms.len());
    for (value, p) in atoms {
        match merged.last_mut() {
            Some((last, lp)) if *last == value => *lp += p,
            _ => merged.push((value, p)),
        }
    }
    merged
}

/// Binomial probabilities `C(n,k) p^k (1-p)^(n-k)` for `k = 0..=n`,
/// computed in log space.
pub fn binomial_weights(n: usize, p: f64) -> Result<Vec<f64>> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidProbability(p));
    }
    let nf = n as f64;
    let ln_n_fact = ln_gamma(nf + 1.0);
    let weights = (0..=n)
        .map(|k| {
            let kf = k as f64;
            if p == 1.0 {
                return if k == n { 1.0 } else { 0.0 };
            }
            let ln_w = ln_n_fact - ln_gamma(kf + 1.0) - ln_gamma(nf - kf + 1.0)
                + kf * p.ln()
                + (nf - kf) * (1.0 - p).ln();
            ln_w.exp()
        })
        .collect();
    Ok(weights)
}

/// Builds the exact mixture law `H_n = sum_k C(n,k) p^k (1-p)^(n-k) R_k`.
///
/// `component_law(k)` supplies the representation of `R_k` for
/// `k >= 1`; component 0 is the point mass at `t0`.
pub fn lemma1_mixture(
    n: usize,
    p: f64,
    t0: f64,
    mut component_law: impl FnMut(usize) -> ComponentLaw,
) -> Result<MixtureDistribution> {
    if n == 0 {
        return Err(Error::InvalidConfig("lemma1_mixture needs n >= 1".into()));
    }
    let weights = binomial_weights(n, p)?;
    let mut components = Vec::with_capacity(n + 1);
    components.push(ComponentLaw::Exact(vec![(t0, 1.0)]));
    for k in 1..=n {
        components.push(component_law(k));
    }
    Ok(MixtureDistribution {
        n,
        p,
        weights,
        components,
    })
}

/// Enumerates the exact law of `t_k` applied to `k` i.i.d. draws from
/// a finite-support observation law. Support entries are
/// `(value, probability)`.
pub fn enumerate_component_law<O: Clone>(
    family: &impl StatisticFamily<O>,
    k: usize,
    support: &[(O, f64)],
) -> ComponentLaw {
    assert!(k >= 1, "use the point mass at t0 for k = 0");
    let mut atoms = Vec::new();
    let mut sample: Vec<O> = Vec::with_capacity(k);
    enumerate_tuples(family, k, support, &mut sample, 1.0, &mut atoms);
    ComponentLaw::Exact(merge_atoms(atoms))
}

fn enumerate_tuples<O: Clone>(
    family: &impl StatisticFamily<O>,
    k: usize,
    support: &[(O, f64)],
    sample: &mut Vec<O>,
    prob: f64,
    atoms: &mut Vec<(f64, f64)>,
) {
    if sample.len() == k {
        let value = family.eval(sample);
        assert_eq!(value.len(), 1, "exact enumeration is scalar-only");
        atoms.push((value[0], prob));
        return;
    }
    for (x, q) in support {
        sample.push(x.clone());
        enumerate_tuples(family, k, support, sample, prob * q, atoms);
        sample.pop();
    }
}

/// One draw of the binomial-index representation: `K ~ Binomial(n, p)`
/// followed by `t_K` on `K` fresh draws from the conditional
/// observation law. Returns `t_0` on `K = 0`.
pub fn binomial_index_sample<O, R: Rng>(
    family: &impl StatisticFamily<O>,
    n: usize,
    p: f64,
    mut sampler: impl FnMut(&mut R) -> O,
    rng: &mut R,
) -> Result<Vec<f64>> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidProbability(p));
    }
    let binom = Binomial::new(n as u64, p).map_err(|_| Error::InvalidProbability(p))?;
    let k = binom.sample(rng) as usize;
    if k == 0 {
        return Ok(family.empty_value());
    }
    let sample: Vec<O> = (0..k).map(|_| sampler(rng)).collect();
    Ok(family.eval(&sample))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn running_mean_example() {
        // delta = (1,0,1), values (2,6) -> 4
        let out = complete_case_statistic(&MeanFamily, &[1, 0, 1], &[2.0, 6.0]).unwrap();
        assert_eq!(out, vec![4.0]);
    }

    #[test]
    fn all_observed_equals_full_eval() {
        let vals = [1.0, 2.0, 3.0, 10.0];
        let out = complete_case_statistic(&MeanFamily, &[1, 1, 1, 1], &vals).unwrap();
        assert_eq!(out, MeanFamily.eval(&vals));
    }

    #[test]
    fn scaled_family_example() {
        // alpha = 1, mean family, delta = (1,1,0), values (2,4) -> N * mean = 6
        let scaled = ScaledFamily {
            base: MeanFamily,
            alpha: 1.0,
        };
        let out = complete_case_statistic(&scaled, &[1, 1, 0], &[2.0, 4.0]).unwrap();
        assert_eq!(out, vec![6.0]);
    }

    #[test]
    fn empty_sample_returns_t0() {
        let out = complete_case_statistic(&MeanFamily, &[0, 0], &[]).unwrap();
        assert_eq!(out, vec![0.0]);
    }

    #[test]
    fn arity_mismatch_detected() {
        let err = complete_case_statistic(&MeanFamily, &[1, 0, 1], &[2.0]).unwrap_err();
        assert!(matches!(err, Error::ArityMismatch { expected: 2, got: 1 }));
    }

    fn bernoulli_support(q: f64) -> Vec<(f64, f64)> {
        vec![(0.0, 1.0 - q), (1.0, q)]
    }

    #[test]
    fn mixture_weights_sum_to_one() {
        for &(n, p) in &[(1usize, 0.5), (5, 0.3), (8, 1.0), (50, 0.01)] {
            let w = binomial_weights(n, p).unwrap();
            let total: f64 = w.iter().sum();
            assert!((total - 1.0).abs() < 1e-12, "n={n} p={p} sum={total}");
        }
    }

    #[test]
    fn invalid_probability_rejected() {
        assert!(matches!(
            binomial_weights(3, 0.0),
            Err(Error::InvalidProbability(_))
        ));
        assert!(matches!(
            binomial_weights(3, 1.5),
            Err(Error::InvalidProbability(_))
        ));
    }

    #[test]
    fn mixture_with_p_one_is_component_n() {
        let support = bernoulli_support(0.5);
        let mix = lemma1_mixture(4, 1.0, 0.0, |k| {
            enumerate_component_law(&MeanFamily, k, &support)
        })
        .unwrap();
        let rn = enumerate_component_law(&MeanFamily, 4, &support);
        for b in [-0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 2.0] {
            assert!((mix.cdf(b) - rn.cdf(b)).abs() < 1e-14);
        }
    }

    #[test]
    fn two_term_formula_for_n_one() {
        // n = 1, p = 0.5, t0 = c -> H_1(B) = 0.5 * 1[c in B] + 0.5 * R_1(B)
        let c = -3.5;
        let support = bernoulli_support(0.4);
        let mix = lemma1_mixture(1, 0.5, c, |k| {
            enumerate_component_law(&MeanFamily, k, &support)
        })
        .unwrap();
        let r1 = enumerate_component_law(&MeanFamily, 1, &support);
        for b in [-4.0, -3.5, -1.0, 0.0, 0.5, 1.0] {
            let manual = 0.5 * f64::from(c <= b) + 0.5 * r1.cdf(b);
            assert!((mix.cdf(b) - manual).abs() < 1e-14);
        }
    }

    #[test]
    fn degenerate_sampler_law() {
        // n = 2, p = 0.5, point mass at 1, mean family, t0 = 0:
        // law is {0 w.p. 0.25, 1 w.p. 0.75}
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let draws: Vec<f64> = (0..40_000)
            .map(|_| {
                binomial_index_sample(&MeanFamily, 2, 0.5, |_r: &mut ChaCha8Rng| 1.0, &mut rng)
                    .unwrap()[0]
            })
            .collect();
        let zeros = draws.iter().filter(|&&x| x == 0.0).count() as f64 / draws.len() as f64;
        let ones = draws.iter().filter(|&&x| x == 1.0).count() as f64 / draws.len() as f64;
        assert!((zeros - 0.25).abs() < 0.01);
        assert!((ones - 0.75).abs() < 0.01);
    }

    #[test]
    fn binomial_index_with_p_one_always_uses_n_draws() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut count = 0usize;
        let out = binomial_index_sample(
            &MeanFamily,
            5,
            1.0,
            |_r: &mut ChaCha8Rng| {
                count += 1;
                2.0
            },
            &mut rng,
        )
        .unwrap();
        assert_eq!(count, 5);
        assert_eq!(out, vec![2.0]);
    }
}
