//! Machine-readable reports. All rationals serialize as exact `p/q` strings
//! (bare integers when the denominator is one), never as floats.

use serde::Serialize;

use kway_core::analysis::FactReport;
use kway_core::rational::Rational;
use kway_core::GreedyTrace;

#[derive(Debug, Clone, Serialize)]
pub struct RoundSummary {
    pub h: usize,
    pub weight: String,
    pub cut_edge_ids: Vec<usize>,
    pub components_after: usize,
}

/// The single JSON document emitted by `solve`, `exact` and `verify`.
#[derive(Debug, Clone, Serialize)]
pub struct RatioReport {
    pub algorithm: String,
    pub k: usize,
    pub sequence: Vec<usize>,
    pub achieved_weight: String,
    pub optimal_weight: Option<String>,
    pub theoretical_bound: String,
    pub achieved_ratio: Option<String>,
    pub cut_edge_ids: Vec<usize>,
    pub trace: Vec<RoundSummary>,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationJson {
    pub parameters: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactReportJson {
    pub fact_name: String,
    pub grid: String,
    pub checked: u64,
    pub violations: Vec<ViolationJson>,
}

pub fn fact_report_json(report: &FactReport) -> FactReportJson {
    FactReportJson {
        fact_name: report.fact_name.clone(),
        grid: report.grid.clone(),
        checked: report.checked,
        violations: report
            .violations
            .iter()
            .map(|v| ViolationJson {
                parameters: v.parameters.clone(),
                lhs: v.lhs.to_string(),
                rhs: v.rhs.to_string(),
            })
            .collect(),
    }
}

pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

pub fn trace_summaries(trace: &GreedyTrace) -> Vec<RoundSummary> {
    trace
        .steps
        .iter()
        .map(|step| RoundSummary {
            h: step.h,
            weight: rational_string(&step.split.weight),
            cut_edge_ids: step.split.edge_ids.iter().copied().collect(),
            components_after: step.component_count_after,
        })
        .collect()
}
