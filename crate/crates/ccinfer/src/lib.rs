//! Complete-case inference for partially linear regression with
//! responses missing at random.
//!
//! The crate provides:
//!
//! - a data model and CSV wire format for samples with missing
//!   responses ([`data`]),
//! - the exact finite-sample transfer machinery linking complete-case
//!   statistics to statistics of fixed sample size ([`transfer`]),
//! - a series least-squares estimator for the partially linear model
//!   ([`series`]),
//! - a martingale-transform test of error normality ([`normality`]),
//! - a test of linearity of the smooth regression component
//!   ([`linearity`]),
//! - the null limit laws of both tests ([`limits`]),
//! - a deterministic Monte Carlo harness ([`sim`]).
//!
//! # Example: the complete-case statistic
//!
//! Only rows with an observed response enter a complete-case
//! statistic; when none is observed the statistic takes its
//! degenerate default value:
//!
//! ```
//! use ccinfer::transfer::{complete_case_statistic, MeanFamily};
//!
//! let deltas = [1u8, 0, 1];
//! let observed = [2.0, 6.0];
//! let t = complete_case_statistic(&MeanFamily, &deltas, &observed).unwrap();
//! assert_eq!(t, vec![4.0]);
//!
//! let empty = complete_case_statistic(&MeanFamily, &[0u8, 0], &[]).unwrap();
//! assert_eq!(empty, vec![0.0]);
//! ```
//!
//! # Example: running the normality test
//!
//! ```
//! use ccinfer::data::{MarDataset, MarRow};
//! use ccinfer::normality::run_normality_test;
//! use rand::{Rng, SeedableRng};
//! use rand_distr::{Distribution, StandardNormal};
//!
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
//! let rows: Vec<MarRow> = (0..300)
//!     .map(|_| {
//!         let u: f64 = StandardNormal.sample(&mut rng);
//!         let v: f64 = rng.gen_range(0.0..1.0);
//!         let e: f64 = StandardNormal.sample(&mut rng);
//!         let y = 2.0 * u + (std::f64::consts::PI * v).cos() + e;
//!         MarRow { u: vec![u], v, y: rng.gen_bool(0.8).then_some(y) }
//!     })
//!     .collect();
//! let data = MarDataset::new(rows, 1).unwrap();
//! let report = run_normality_test(&data, 0.05).unwrap();
//! assert!(report.statistic > 0.0);
//! assert!(!report.reject);
//! ```

pub mod data;
pub mod error;
pub mod limits;
pub mod linearity;
pub mod normality;
pub mod quad;
pub mod series;
pub mod sim;
pub mod transfer;

pub use data::{extract_complete_cases, load_csv, CompleteCases, CompletePair, MarDataset, MarRow};
pub use error::{Error, Result};
pub use limits::LimitLaw;
pub use linearity::{run_linearity_test, ChiFn, LinearityReport, NullDesign};
pub use normality::{run_normality_test, NormalityReport};
pub use series::{choose_k, fit_series_ls, SeriesFit};
pub use sim::ScenarioConfig;
pub use transfer::{complete_case_statistic, lemma1_mixture, MixtureDistribution, StatisticFamily};
