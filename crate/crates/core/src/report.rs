//! Result record shared by all inequality checks.

use serde::Serialize;

/// Outcome of evaluating an inequality `lhs ≥ rhs` on a concrete configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: String,
    /// Side expected to be the larger one.
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`.
    pub slack: f64,
    /// Constant fitted from the measurement, when the inequality has one.
    pub fitted_constant: Option<f64>,
    /// Residual in the normalisation natural to the check, when meaningful.
    pub normalized_residual: Option<f64>,
    /// Short `key=value` summary of the inputs.
    pub inputs: String,
}

impl BoundReport {
    pub fn new(name: &str, lhs: f64, rhs: f64, inputs: impl Into<String>) -> Self {
        BoundReport {
            name: name.to_string(),
            lhs,
            rhs,
            slack: lhs - rhs,
            fitted_constant: None,
            normalized_residual: None,
            inputs: inputs.into(),
        }
    }

    pub fn with_fitted(mut self, c: Option<f64>) -> Self {
        self.fitted_constant = c;
        self
    }

    pub fn with_residual(mut self, r: Option<f64>) -> Self {
        self.normalized_residual = r;
        self
    }

    /// `slack ≥ -1e-9 · max(|lhs|, |rhs|, 1)`.
    pub fn satisfied(&self) -> bool {
        self.slack >= -1e-9 * self.lhs.abs().max(self.rhs.abs()).max(1.0)
    }

    /// `slack > 0`, for strict inequalities.
    pub fn strictly_satisfied(&self) -> bool {
        self.slack > 0.0
    }

    /// `|slack| ≤ 1e-9 · max(|lhs|, |rhs|, 1)`.
    pub fn equality(&self) -> bool {
        self.slack.abs() <= 1e-9 * self.lhs.abs().max(self.rhs.abs()).max(1.0)
    }
}
