//! The cost framework: model-development cost plus error/operation cost,
//! combined into a total "complexity" score, with min-max normalization,
//! total-cost minimization over a parameter sweep, and efficiency.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Aggregates the two cost channels into a total score. Only the weighted
/// sum is supported; unit weights reproduce the plain sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostCombiner {
    pub model_weight: f64,
    pub operation_weight: f64,
}

impl Default for CostCombiner {
    fn default() -> Self {
        CostCombiner {
            model_weight: 1.0,
            operation_weight: 1.0,
        }
    }
}

impl CostCombiner {
    pub fn new(model_weight: f64, operation_weight: f64) -> Result<Self> {
        if !(model_weight.is_finite() && operation_weight.is_finite()) {
            return Err(Error::config("combiner weights must be finite"));
        }
        if model_weight < 0.0 || operation_weight < 0.0 {
            return Err(Error::config("combiner weights must be non-negative"));
        }
        if model_weight + operation_weight <= 0.0 {
            return Err(Error::config("combiner weights must not both vanish"));
        }
        Ok(CostCombiner {
            model_weight,
            operation_weight,
        })
    }
}

/// Weighted-sum total of a (modeling, operation) cost pair.
pub fn total_cost(modeling: f64, operation: f64, combiner: &CostCombiner) -> Result<f64> {
    if !(modeling.is_finite() && operation.is_finite()) {
        return Err(Error::domain("costs must be finite"));
    }
    if modeling < 0.0 || operation < 0.0 {
        return Err(Error::domain("costs must be non-negative"));
    }
    Ok(combiner.model_weight * modeling + combiner.operation_weight * operation)
}

/// Benefit per unit of total cost.
pub fn efficiency(benefit: f64, total: f64) -> Result<f64> {
    if !(total > 0.0 && total.is_finite()) {
        return Err(Error::domain("efficiency needs a positive total cost"));
    }
    Ok(benefit / total)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostPoint {
    pub parameter: f64,
    pub modeling_cost: f64,
    pub operation_cost: f64,
    pub total_cost: f64,
}

/// A cost sweep ordered by strictly increasing parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct CostCurve {
    points: Vec<CostPoint>,
    normalized: bool,
}

pub const COST_CSV_HEADER: &str = "parameter,modeling_cost,operation_cost,total_cost";

impl CostCurve {
    /// Build a raw (unnormalized) curve from (parameter, modeling, operation)
    /// triples; totals are computed with the given combiner.
    pub fn from_raw<I>(triples: I, combiner: &CostCombiner) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64, f64)>,
    {
        let mut points = Vec::new();
        for (parameter, modeling, operation) in triples {
            if !parameter.is_finite() {
                return Err(Error::config("sweep parameters must be finite"));
            }
            points.push(CostPoint {
                parameter,
                modeling_cost: modeling,
                operation_cost: operation,
                total_cost: total_cost(modeling, operation, combiner)?,
            });
        }
        Self::from_points(points)
    }

    /// Build a curve from points whose totals are taken as stored (used
    /// when re-ingesting serialized curves emitted under any combiner).
    pub fn from_stored_points(points: Vec<CostPoint>) -> Result<Self> {
        Self::from_points(points)
    }

    fn from_points(points: Vec<CostPoint>) -> Result<Self> {
        for pair in points.windows(2) {
            if pair[1].parameter <= pair[0].parameter {
                return Err(Error::config(format!(
                    "sweep parameters must be strictly increasing ({} then {})",
                    pair[0].parameter, pair[1].parameter
                )));
            }
        }
        let normalized = channels_look_normalized(&points);
        Ok(CostCurve { points, normalized })
    }

    pub fn points(&self) -> &[CostPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(COST_CSV_HEADER);
        out.push('\n');
        for p in &self.points {
            out.push_str(&format!(
                "{},{},{},{}\n",
                p.parameter, p.modeling_cost, p.operation_cost, p.total_cost
            ));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty cost curve file"))?;
        if header.trim() != COST_CSV_HEADER {
            return Err(Error::parse(1, format!("expected header {COST_CSV_HEADER:?}")));
        }
        let mut points = Vec::new();
        for (idx, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 4 {
                return Err(Error::parse(idx + 1, "expected 4 comma-separated fields"));
            }
            let mut values = [0f64; 4];
            for (slot, field) in values.iter_mut().zip(&fields) {
                *slot = field
                    .trim()
                    .parse::<f64>()
                    .map_err(|_| Error::parse(idx + 1, format!("invalid number {field:?}")))?;
            }
            points.push(CostPoint {
                parameter: values[0],
                modeling_cost: values[1],
                operation_cost: values[2],
                total_cost: values[3],
            });
        }
        Self::from_points(points)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&CurveRepr {
            normalized: self.normalized,
            points: self.points.clone(),
        })
        .expect("cost curve serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let repr: CurveRepr = serde_json::from_str(text)
            .map_err(|e| Error::parse(e.line(), e.to_string()))?;
        let curve = Self::from_points(repr.points)?;
        if curve.normalized != repr.normalized {
            return Err(Error::parse(
                1,
                "normalized flag disagrees with the channel values",
            ));
        }
        Ok(curve)
    }
}

#[derive(Serialize, Deserialize)]
struct CurveRepr {
    normalized: bool,
    points: Vec<CostPoint>,
}

/// The invariant that defines a normalized curve: every channel value lies
/// in [0, 1]; non-constant channels attain both 0 and 1; constant channels
/// sit at 0.
fn channels_look_normalized(points: &[CostPoint]) -> bool {
    if points.is_empty() {
        return false;
    }
    for channel in [
        |p: &CostPoint| p.modeling_cost,
        |p: &CostPoint| p.operation_cost,
    ] {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for p in points {
            let v = channel(p);
            min = min.min(v);
            max = max.max(v);
        }
        let spanned = if max > min {
            min == 0.0 && max == 1.0
        } else {
            min == 0.0
        };
        if !spanned {
            return false;
        }
    }
    true
}

/// Min-max scale each cost channel independently onto [0, 1] (constant
/// channels collapse to zero) and recompute totals.
pub fn normalize_curve(curve: &CostCurve, combiner: &CostCombiner) -> Result<CostCurve> {
    if curve.len() < 2 {
        return Err(Error::config("normalization needs at least 2 points"));
    }
    let scale = |values: Vec<f64>| -> Vec<f64> {
        let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if max > min {
            values.iter().map(|v| (v - min) / (max - min)).collect()
        } else {
            vec![0.0; values.len()]
        }
    };
    let modeling = scale(curve.points.iter().map(|p| p.modeling_cost).collect());
    let operation = scale(curve.points.iter().map(|p| p.operation_cost).collect());
    let mut points = Vec::with_capacity(curve.len());
    for (i, p) in curve.points.iter().enumerate() {
        points.push(CostPoint {
            parameter: p.parameter,
            modeling_cost: modeling[i],
            operation_cost: operation[i],
            total_cost: total_cost(modeling[i], operation[i], combiner)?,
        });
    }
    Ok(CostCurve {
        points,
        normalized: true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgminResult {
    pub parameter: f64,
    pub total_cost: f64,
    pub index: usize,
    /// Whether the minimum sits strictly inside the sweep.
    pub interior: bool,
}

/// Point of smallest total cost; ties break toward the smaller parameter.
pub fn argmin_total(curve: &CostCurve) -> Result<ArgminResult> {
    if curve.is_empty() {
        return Err(Error::config("argmin of an empty curve"));
    }
    let mut best = 0;
    for (i, p) in curve.points.iter().enumerate() {
        if p.total_cost < curve.points[best].total_cost {
            best = i;
        }
    }
    Ok(ArgminResult {
        parameter: curve.points[best].parameter,
        total_cost: curve.points[best].total_cost,
        index: best,
        interior: best != 0 && best != curve.len() - 1,
    })
}
