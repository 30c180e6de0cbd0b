//! Price ingestion and the statistical inputs of the mean-variance model:
//! per-asset expected returns and the covariance matrix of returns.

use std::path::Path;

use crate::error::{Error, Result};

/// CSV dialect used by [`load_prices`]. The first row is a header of asset
/// names; every following row is one month of strictly positive prices.
#[derive(Debug, Clone)]
pub struct CsvFormat {
    pub delimiter: u8,
}

impl Default for CsvFormat {
    fn default() -> Self {
        CsvFormat { delimiter: b',' }
    }
}

/// Monthly closing prices, rows in chronological order, one column per asset.
#[derive(Debug, Clone)]
pub struct PriceSeries {
    asset_names: Vec<String>,
    prices: Vec<Vec<f64>>,
}

impl PriceSeries {
    pub fn new(asset_names: Vec<String>, prices: Vec<Vec<f64>>) -> Result<Self> {
        if asset_names.len() < 2 {
            return Err(Error::TooFewAssets(asset_names.len()));
        }
        if prices.len() < 2 {
            return Err(Error::TooFewPriceRows);
        }
        for (r, row) in prices.iter().enumerate() {
            if row.len() != asset_names.len() {
                return Err(Error::RaggedRow {
                    row: r + 1,
                    expected: asset_names.len(),
                    got: row.len(),
                });
            }
            for (c, &p) in row.iter().enumerate() {
                if !(p.is_finite() && p > 0.0) {
                    return Err(Error::BadPrice {
                        row: r + 1,
                        column: c + 1,
                        value: p.to_string(),
                    });
                }
            }
        }
        Ok(PriceSeries {
            asset_names,
            prices,
        })
    }

    pub fn asset_names(&self) -> &[String] {
        &self.asset_names
    }

    pub fn n_assets(&self) -> usize {
        self.asset_names.len()
    }

    pub fn n_rows(&self) -> usize {
        self.prices.len()
    }

    pub fn prices(&self) -> &[Vec<f64>] {
        &self.prices
    }
}

/// Mean returns, covariance matrix and the risk-free rate: everything the
/// objective functions need to score a weight vector.
#[derive(Debug, Clone)]
pub struct AssetUniverse {
    n: usize,
    mean_returns: Vec<f64>,
    covariance: Vec<Vec<f64>>,
    risk_free_rate: f64,
}

impl AssetUniverse {
    pub fn new(
        mean_returns: Vec<f64>,
        covariance: Vec<Vec<f64>>,
        risk_free_rate: f64,
    ) -> Result<Self> {
        let n = mean_returns.len();
        if covariance.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: covariance.len(),
            });
        }
        for (i, row) in covariance.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if covariance[i][i] < 0.0 {
                return Err(Error::NegativeVariance(i));
            }
            for j in 0..i {
                if (covariance[i][j] - covariance[j][i]).abs() > 1e-12 {
                    return Err(Error::AsymmetricCovariance { i, j });
                }
            }
        }
        Ok(AssetUniverse {
            n,
            mean_returns,
            covariance,
            risk_free_rate,
        })
    }

    pub fn n_assets(&self) -> usize {
        self.n
    }

    pub fn mean_returns(&self) -> &[f64] {
        &self.mean_returns
    }

    pub fn covariance(&self) -> &[Vec<f64>] {
        &self.covariance
    }

    pub fn risk_free_rate(&self) -> f64 {
        self.risk_free_rate
    }
}

/// Load a price series from a delimited text file with a header row.
pub fn load_prices(path: &Path, format: &CsvFormat) -> Result<PriceSeries> {
    let file = std::fs::File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(format.delimiter)
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(file);

    let headers = reader.headers().map_err(|e| Error::Csv {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let asset_names: Vec<String> = headers.iter().map(|s| s.to_string()).collect();
    if asset_names.len() < 2 {
        return Err(Error::TooFewAssets(asset_names.len()));
    }

    let mut prices = Vec::new();
    for (r, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Csv {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        if record.len() != asset_names.len() {
            return Err(Error::RaggedRow {
                row: r + 1,
                expected: asset_names.len(),
                got: record.len(),
            });
        }
        let mut row = Vec::with_capacity(asset_names.len());
        for (c, field) in record.iter().enumerate() {
            let value: f64 = field.parse().map_err(|_| Error::BadPrice {
                row: r + 1,
                column: c + 1,
                value: field.to_string(),
            })?;
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::BadPrice {
                    row: r + 1,
                    column: c + 1,
                    value: field.to_string(),
                });
            }
            row.push(value);
        }
        prices.push(row);
    }
    if prices.len() < 2 {
        return Err(Error::TooFewPriceRows);
    }
    PriceSeries::new(asset_names, prices)
}

/// Simple monthly returns: r[t][i] = (p[t+1][i] - p[t][i]) / p[t][i].
pub fn to_returns(series: &PriceSeries) -> Vec<Vec<f64>> {
    let rows = series.prices();
    let n = series.n_assets();
    let mut returns = Vec::with_capacity(rows.len() - 1);
    for t in 0..rows.len() - 1 {
        let mut row = Vec::with_capacity(n);
        for i in 0..n {
            row.push((rows[t + 1][i] - rows[t][i]) / rows[t][i]);
        }
        returns.push(row);
    }
    returns
}

/// Column means and the sample covariance matrix (denominator m-1) of a
/// returns matrix. Each unordered pair is computed once, so the matrix is
/// exactly symmetric.
pub fn build_universe(returns: &[Vec<f64>], risk_free_rate: f64) -> Result<AssetUniverse> {
    let m = returns.len();
    if m < 2 {
        return Err(Error::TooFewReturnRows);
    }
    let n = returns[0].len();
    for (r, row) in returns.iter().enumerate() {
        if row.len() != n {
            return Err(Error::RaggedRow {
                row: r + 1,
                expected: n,
                got: row.len(),
            });
        }
    }

    let mut means = vec![0.0; n];
    for row in returns {
        for (mi, &value) in means.iter_mut().zip(row.iter()) {
            *mi += value;
        }
    }
    for mi in &mut means {
        *mi /= m as f64;
    }

    let mut covariance = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut acc = 0.0;
            for row in returns {
                acc += (row[i] - means[i]) * (row[j] - means[j]);
            }
            let c = acc / (m as f64 - 1.0);
            covariance[i][j] = c;
            covariance[j][i] = c;
        }
    }

    AssetUniverse::new(means, covariance, risk_free_rate)
}
