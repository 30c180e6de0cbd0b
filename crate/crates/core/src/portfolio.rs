//! Portfolio representation, the two mean-variance objectives, the Sharpe
//! index and the cardinality repair operator.

use crate::error::{Error, Result};
use crate::market::AssetUniverse;

/// Risk below this is treated as zero when computing Sharpe values.
const ZERO_RISK: f64 = 1e-12;

/// One point in objective space: (risk, return). Risk is the standard
/// deviation of the portfolio return, not the variance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectivePoint {
    pub risk: f64,
    pub ret: f64,
}

/// A weight vector on the simplex with its cached evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct Portfolio {
    weights: Vec<f64>,
    objectives: ObjectivePoint,
    sharpe: f64,
}

impl Portfolio {
    /// Repair an arbitrary nonnegative vector to at most `k` supports and
    /// evaluate it against the universe.
    pub fn build(universe: &AssetUniverse, raw_weights: &[f64], k: usize) -> Result<Portfolio> {
        let weights = repair(raw_weights, k)?;
        let objectives = evaluate(universe, &weights)?;
        let sharpe = sharpe(objectives, universe.risk_free_rate());
        Ok(Portfolio {
            weights,
            objectives,
            sharpe,
        })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn objectives(&self) -> ObjectivePoint {
        self.objectives
    }

    pub fn risk(&self) -> f64 {
        self.objectives.risk
    }

    pub fn expected_return(&self) -> f64 {
        self.objectives.ret
    }

    pub fn sharpe(&self) -> f64 {
        self.sharpe
    }

    pub fn support(&self) -> usize {
        self.weights.iter().filter(|&&w| w > 0.0).count()
    }
}

/// Score a simplex weight vector: expected return is the weighted sum of
/// mean returns, risk is the square root of the covariance quadratic form.
/// The variance is clamped at zero before the root to absorb numerical
/// noise of order -1e-12.
pub fn evaluate(universe: &AssetUniverse, weights: &[f64]) -> Result<ObjectivePoint> {
    let n = universe.n_assets();
    if weights.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: weights.len(),
        });
    }
    let means = universe.mean_returns();
    let cov = universe.covariance();

    let mut ret = 0.0;
    for i in 0..n {
        ret += weights[i] * means[i];
    }

    // Accumulate the quadratic form per unordered pair; the acceptance
    // oracle walks the full double sum instead.
    let mut variance = 0.0;
    for i in 0..n {
        let wi = weights[i];
        if wi == 0.0 {
            continue;
        }
        variance += wi * wi * cov[i][i];
        for j in 0..i {
            variance += 2.0 * wi * weights[j] * cov[i][j];
        }
    }
    Ok(ObjectivePoint {
        risk: variance.max(0.0).sqrt(),
        ret,
    })
}

/// Excess return per unit of risk. Degenerate zero-risk points map to
/// signed infinity (or 0 when the excess return is itself zero) so that
/// orderings on Sharpe stay total.
pub fn sharpe(point: ObjectivePoint, risk_free_rate: f64) -> f64 {
    let excess = point.ret - risk_free_rate;
    if point.risk < ZERO_RISK {
        if excess.abs() < 1e-12 {
            0.0
        } else if excess > 0.0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    } else {
        excess / point.risk
    }
}

/// Keep the largest `k` strictly positive entries (ties broken by lowest
/// index), zero the rest and renormalize the survivors to sum 1. Vectors
/// that already satisfy the constraint and sum to 1 within 1e-12 are
/// returned untouched, which makes the operator exactly idempotent.
pub fn repair(weights: &[f64], k: usize) -> Result<Vec<f64>> {
    if k == 0 {
        return Err(Error::InvalidConfig("cardinality k must be >= 1".into()));
    }
    if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::InvalidConfig(
            "repair input must be finite and nonnegative".into(),
        ));
    }
    let support = weights.iter().filter(|&&w| w > 0.0).count();
    if support == 0 {
        return Err(Error::AllZeroWeights);
    }
    let sum: f64 = weights.iter().sum();
    if support <= k && (sum - 1.0).abs() <= 1e-12 {
        return Ok(weights.to_vec());
    }

    let mut order: Vec<usize> = (0..weights.len()).filter(|&i| weights[i] > 0.0).collect();
    order.sort_by(|&a, &b| weights[b].total_cmp(&weights[a]).then(a.cmp(&b)));
    order.truncate(k);

    let kept_sum: f64 = order.iter().map(|&i| weights[i]).sum();
    let mut repaired = vec![0.0; weights.len()];
    for &i in &order {
        repaired[i] = weights[i] / kept_sum;
    }
    Ok(repaired)
}

/// Pareto dominance for (min risk, max return).
pub fn dominates(a: ObjectivePoint, b: ObjectivePoint) -> bool {
    a.risk <= b.risk && a.ret >= b.ret && (a.risk < b.risk || a.ret > b.ret)
}
