//! Data model for samples with responses missing at random.
//!
//! Each observation is a triple `(x, delta * y, delta)` where the
//! covariate `x = (u, v)` is always observed, `v` lives in `[0,1]`,
//! and the response `y` is present exactly when `delta = 1`.
//! Missingness is encoded in the type: `y: Option<f64>`.
//!
//! The CSV wire format has header `u1,...,um,v,y,delta`, a decimal
//! point, and an *empty* `y` field on missing rows. A `NaN` in the
//! data is rejected as a non-numeric field rather than silently
//! treated as missing.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// One observation `(u, v, delta * y, delta)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MarRow {
    pub u: Vec<f64>,
    pub v: f64,
    /// Present exactly when the response was observed (`delta = 1`).
    pub y: Option<f64>,
}

impl MarRow {
    /// The missingness indicator `delta` as 0/1.
    pub fn delta(&self) -> u8 {
        u8::from(self.y.is_some())
    }
}

/// A validated sample of MAR observations.
#[derive(Debug, Clone, PartialEq)]
pub struct MarDataset {
    rows: Vec<MarRow>,
    dim_u: usize,
}

impl MarDataset {
    /// Validates row shapes and ranges. `dim_u` must be at least 1
    /// and every row must have `u` of that length and `v` in `[0,1]`.
    pub fn new(rows: Vec<MarRow>, dim_u: usize) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyFile);
        }
        if dim_u == 0 {
            return Err(Error::InvalidConfig("dim_u must be >= 1".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            let line = i + 2; // 1-based, after the header
            if row.u.len() != dim_u {
                return Err(Error::InvalidConfig(format!(
                    "row at line {line} has {} covariates, expected {dim_u}",
                    row.u.len()
                )));
            }
            if !(0.0..=1.0).contains(&row.v) {
                return Err(Error::VOutOfRange { line, value: row.v });
            }
            if !row.u.iter().all(|x| x.is_finite()) || !row.v.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "non-finite covariate at line {line}"
                )));
            }
            if let Some(y) = row.y {
                if !y.is_finite() {
                    return Err(Error::InvalidConfig(format!(
                        "non-finite response at line {line}"
                    )));
                }
            }
        }
        Ok(Self { rows, dim_u })
    }

    pub fn rows(&self) -> &[MarRow] {
        &self.rows
    }

    pub fn dim_u(&self) -> usize {
        self.dim_u
    }

    /// Total sample size n.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of completely observed rows, `N = sum(delta)`.
    pub fn n_complete(&self) -> usize {
        self.rows.iter().filter(|r| r.y.is_some()).count()
    }
}

/// A fully observed pair `((u, v), y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompletePair {
    pub u: Vec<f64>,
    pub v: f64,
    pub y: f64,
}

/// The `delta = 1` subsample, in original row order.
#[derive(Debug, Clone, PartialEq)]
pub struct CompleteCases {
    pub pairs: Vec<CompletePair>,
    /// Original 1-based row indices `i_1 < ... < i_N`.
    pub indices: Vec<usize>,
    pub n_total: usize,
}

impl CompleteCases {
    /// N, the number of complete cases.
    pub fn n(&self) -> usize {
        self.pairs.len()
    }
}

/// Extracts the `delta = 1` rows. `N = 0` is a valid, degenerate
/// output; callers decide how to fail on it.
pub fn extract_complete_cases(data: &MarDataset) -> CompleteCases {
    let mut pairs = Vec::new();
    let mut indices = Vec::new();
    for (i, row) in data.rows().iter().enumerate() {
        if let Some(y) = row.y {
            pairs.push(CompletePair {
                u: row.u.clone(),
                v: row.v,
                y,
            });
            indices.push(i + 1);
        }
    }
    CompleteCases {
        pairs,
        indices,
        n_total: data.len(),
    }
}

fn parse_field(raw: &str, line: usize, column: &str) -> Result<f64> {
    let trimmed = raw.trim();
    match trimmed.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(Error::NonNumericField {
            line,
            column: column.to_string(),
            value: raw.to_string(),
        }),
    }
}

/// Loads a dataset from CSV with header `u1,...,um,v,y,delta`.
///
/// `y` must be the empty field exactly when `delta = 0`; `delta` must
/// be literally `0` or `1`.
pub fn load_csv<P: AsRef<Path>>(path: P) -> Result<MarDataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path.as_ref())?;

    let headers = reader.headers()?.clone();
    let ncol = headers.len();
    if ncol < 4 {
        return Err(Error::MalformedHeader(format!(
            "expected at least 4 columns `u1,v,y,delta`, found {ncol}"
        )));
    }
    let dim_u = ncol - 3;
    for (i, name) in headers.iter().enumerate() {
        let expected = match i {
            i if i < dim_u => format!("u{}", i + 1),
            i if i == dim_u => "v".to_string(),
            i if i == dim_u + 1 => "y".to_string(),
            _ => "delta".to_string(),
        };
        if name != expected {
            return Err(Error::MalformedHeader(format!(
                "column {} is `{name}`, expected `{expected}`",
                i + 1
            )));
        }
    }

    let mut rows = Vec::new();
    for (rec_idx, record) in reader.records().enumerate() {
        let record = record?;
        let line = rec_idx + 2;
        if record.len() != ncol {
            return Err(Error::MalformedHeader(format!(
                "line {line} has {} fields, expected {ncol}",
                record.len()
            )));
        }
        let mut u = Vec::with_capacity(dim_u);
        for j in 0..dim_u {
            u.push(parse_field(&record[j], line, &format!("u{}", j + 1))?);
        }
        let v = parse_field(&record[dim_u], line, "v")?;
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::VOutOfRange { line, value: v });
        }
        let y_raw = record[dim_u + 1].trim();
        let delta_raw = record[dim_u + 2].trim();
        let delta = match delta_raw {
            "0" => 0u8,
            "1" => 1u8,
            other => {
                return Err(Error::NonNumericField {
                    line,
                    column: "delta".into(),
                    value: other.to_string(),
                })
            }
        };
        let y = match (delta, y_raw.is_empty()) {
            (0, true) => None,
            (1, false) => Some(parse_field(y_raw, line, "y")?),
            (0, false) => {
                return Err(Error::InconsistentMissingness {
                    line,
                    detail: format!("delta=0 but y=`{y_raw}` is present"),
                })
            }
            (1, true) => {
                return Err(Error::InconsistentMissingness {
                    line,
                    detail: "delta=1 but y is empty".into(),
                })
            }
            _ => unreachable!(),
        };
        rows.push(MarRow { u, v, y });
    }
    MarDataset::new(rows, dim_u)
}

/// Serializes a dataset back to the CSV wire format. Uses shortest
/// round-trip float formatting, so reloading reproduces the dataset
/// bit-exactly.
pub fn to_csv_string(data: &MarDataset) -> String {
    let mut out = String::new();
    for j in 0..data.dim_u() {
        let _ = write!(out, "u{},", j + 1);
    }
    out.push_str("v,y,delta\n");
    for row in data.rows() {
        for x in &row.u {
            let _ = write!(out, "{x},");
        }
        let _ = write!(out, "{},", row.v);
        match row.y {
            Some(y) => {
                let _ = write!(out, "{y},1");
            }
            None => out.push_str(",0"),
        }
        out.push('\n');
    }
    out
}

/// Writes [`to_csv_string`] to a file.
pub fn write_csv<P: AsRef<Path>>(data: &MarDataset, path: P) -> Result<()> {
    std::fs::write(path, to_csv_string(data))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::io::Write;

    fn load_str(contents: &str) -> Result<MarDataset> {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        load_csv(f.path())
    }

    #[test]
    fn parses_mixed_missingness() {
        let data = load_str("u1,v,y,delta\n1.0,0.5,2.0,1\n0.0,0.2,,0\n").unwrap();
        assert_eq!(data.len(), 2);
        assert_eq!(data.n_complete(), 1);
        assert_eq!(data.rows()[0].y, Some(2.0));
        assert_eq!(data.rows()[1].y, None);
    }

    #[test]
    fn rejects_y_present_with_delta_zero() {
        let err = load_str("u1,v,y,delta\n1.0,0.5,3.1,0\n").unwrap_err();
        assert!(matches!(err, Error::InconsistentMissingness { line: 2, .. }));
    }

    #[test]
    fn rejects_y_missing_with_delta_one() {
        let err = load_str("u1,v,y,delta\n1.0,0.5,,1\n").unwrap_err();
        assert!(matches!(err, Error::InconsistentMissingness { .. }));
    }

    #[test]
    fn rejects_v_out_of_range() {
        let err = load_str("u1,v,y,delta\n1.0,1.5,2.0,1\n").unwrap_err();
        assert!(matches!(err, Error::VOutOfRange { line: 2, .. }));
    }

    #[test]
    fn rejects_nan_as_non_numeric() {
        let err = load_str("u1,v,y,delta\n1.0,0.5,NaN,1\n").unwrap_err();
        assert!(matches!(err, Error::NonNumericField { .. }));
    }

    #[test]
    fn rejects_empty_file() {
        let err = load_str("u1,v,y,delta\n").unwrap_err();
        assert!(matches!(err, Error::EmptyFile));
    }

    #[test]
    fn rejects_bad_header() {
        let err = load_str("a,b,c,d\n1,0.5,2,1\n").unwrap_err();
        assert!(matches!(err, Error::MalformedHeader(_)));
    }

    #[test]
    fn extraction_patterns() {
        let data = load_str(
            "u1,v,y,delta\n1.0,0.1,4.0,1\n2.0,0.2,,0\n3.0,0.3,6.0,1\n",
        )
        .unwrap();
        let cc = extract_complete_cases(&data);
        assert_eq!(cc.n(), 2);
        assert_eq!(cc.indices, vec![1, 3]);
        assert_eq!(cc.pairs[0].y, 4.0);
        assert_eq!(cc.pairs[1].y, 6.0);

        let none = load_str("u1,v,y,delta\n1.0,0.1,,0\n2.0,0.2,,0\n").unwrap();
        let cc = extract_complete_cases(&none);
        assert_eq!(cc.n(), 0);
        assert!(cc.pairs.is_empty());
    }

    #[test]
    fn extraction_is_idempotent_in_effect() {
        let data = load_str(
            "u1,v,y,delta\n1.0,0.1,4.0,1\n2.0,0.2,,0\n3.0,0.3,6.0,1\n",
        )
        .unwrap();
        let cc = extract_complete_cases(&data);
        // Rebuild a dataset from the complete cases alone (delta = 1).
        let rows: Vec<MarRow> = cc
            .pairs
            .iter()
            .map(|p| MarRow {
                u: p.u.clone(),
                v: p.v,
                y: Some(p.y),
            })
            .collect();
        let again = extract_complete_cases(&MarDataset::new(rows, 1).unwrap());
        assert_eq!(again.pairs, cc.pairs);
    }

    proptest! {
        #[test]
        fn csv_round_trip_is_bit_exact(
            raw in proptest::collection::vec(
                (any::<f64>(), 0.0f64..=1.0, proptest::option::of(any::<f64>())),
                1..40,
            )
        ) {
            let rows: Vec<MarRow> = raw
                .into_iter()
                .map(|(u, v, y)| MarRow {
                    u: vec![if u.is_finite() { u } else { 0.0 }],
                    v,
                    y: y.map(|y| if y.is_finite() { y } else { 0.0 }),
                })
                .collect();
            let data = MarDataset::new(rows, 1).unwrap();
            let reloaded = load_str(&to_csv_string(&data)).unwrap();
            prop_assert_eq!(reloaded, data);
        }
    }
}
