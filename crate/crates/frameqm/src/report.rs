//! Machine-readable check reports.

use serde::{Deserialize, Serialize};

/// Outcome of one verification check.
///
/// `residual` is the value compared against `tolerance`; aggregate checks
/// report the worst sub-residual/tolerance ratio with `tolerance = 1` and
/// itemize the raw numbers in `details`. `passed` is always
/// `residual <= tolerance`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CheckReport {
    pub id: String,
    pub description: String,
    pub inputs: serde_json::Value,
    pub residual: f64,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<f64>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    pub details: serde_json::Value,
    /// Wall time; the only non-deterministic field.
    pub wall_ms: f64,
}

impl CheckReport {
    pub fn new(
        id: &str,
        description: &str,
        inputs: serde_json::Value,
        residual: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
            inputs,
            residual,
            tolerance,
            order: None,
            passed: residual <= tolerance,
            details: serde_json::Value::Null,
            wall_ms: 0.0,
        }
    }

    pub fn with_order(mut self, order: f64) -> Self {
        self.order = Some(order);
        self
    }

    pub fn with_details(mut self, details: serde_json::Value) -> Self {
        self.details = details;
        self
    }

    pub fn with_wall_ms(mut self, wall_ms: f64) -> Self {
        self.wall_ms = wall_ms;
        self
    }

    /// One-line PASS/FAIL summary.
    pub fn summary_line(&self) -> String {
        format!(
            "{} {:<24} residual {:.3e} (tol {:.1e}){}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.residual,
            self.tolerance,
            match self.order {
                Some(o) => format!(", order {o:.2}"),
                None => String::new(),
            }
        )
    }
}

/// Aggregate a list of (name, residual, tolerance) into the worst ratio.
pub fn worst_ratio(parts: &[(&str, f64, f64)]) -> (f64, serde_json::Value) {
    let mut worst = 0.0f64;
    let mut items = Vec::new();
    for (name, residual, tol) in parts {
        worst = worst.max(residual / tol);
        items.push(serde_json::json!({
            "check": name,
            "residual": residual,
            "tolerance": tol,
        }));
    }
    (worst, serde_json::Value::Array(items))
}
