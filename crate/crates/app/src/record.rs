use flexi_core::{Algorithm, EbaOutcome, FlexiResult, Graph, PruneStats, Tau};
use serde::{Deserialize, Serialize};

/// One solver run, as reported by the CLI and the benchmark harness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub dataset: String,
    pub n: usize,
    pub m: usize,
    /// `p/q`.
    pub tau: String,
    pub algorithm: Algorithm,
    /// Rule mask of the exact solver (see `SolverConfig::rulemask`), `-` for
    /// the other algorithms.
    pub rulemask: String,
    pub size: usize,
    /// External node ids.
    pub members: Vec<String>,
    pub runtime_ms: f64,
    pub stats: Option<PruneStats>,
    pub optimal: bool,
    /// Set when the run failed; the other result fields are then empty.
    pub error: Option<String>,
}

/// CSV column order.
pub const CSV_HEADER: [&str; 17] = [
    "dataset",
    "n",
    "m",
    "tau",
    "algorithm",
    "rulemask",
    "size",
    "runtime_ms",
    "explored",
    "prunes_r1",
    "prunes_r2",
    "prunes_r3",
    "prunes_r4",
    "prunes_r5",
    "prunes_r6",
    "optimal",
    "error",
];

impl RunRecord {
    fn base(dataset: &str, g: &Graph, tau: Tau, algorithm: Algorithm) -> Self {
        RunRecord {
            dataset: dataset.to_string(),
            n: g.n(),
            m: g.m(),
            tau: tau.to_string(),
            algorithm,
            rulemask: "-".to_string(),
            size: 0,
            members: Vec::new(),
            runtime_ms: 0.0,
            stats: None,
            optimal: false,
            error: None,
        }
    }

    /// Record of a heuristic or oracle result. Oracle results are optimal.
    pub fn from_result(dataset: &str, g: &Graph, tau: Tau, result: &FlexiResult) -> Self {
        RunRecord {
            size: result.size(),
            members: result.members.iter().map(|&v| g.label(v).to_string()).collect(),
            runtime_ms: result.runtime.as_secs_f64() * 1e3,
            optimal: result.algorithm == Algorithm::Oracle,
            ..RunRecord::base(dataset, g, tau, result.algorithm)
        }
    }

    pub fn from_eba(dataset: &str, g: &Graph, tau: Tau, rulemask: &str, outcome: &EbaOutcome) -> Self {
        RunRecord {
            rulemask: rulemask.to_string(),
            stats: Some(outcome.stats.clone()),
            optimal: outcome.optimal,
            ..RunRecord::from_result(dataset, g, tau, &outcome.result)
        }
    }

    pub fn failed(dataset: &str, g: &Graph, tau: Tau, algorithm: Algorithm, error: String) -> Self {
        RunRecord {
            error: Some(error),
            ..RunRecord::base(dataset, g, tau, algorithm)
        }
    }

    /// Fields in [`CSV_HEADER`] order.
    pub fn csv_row(&self) -> Vec<String> {
        let stats = self.stats.clone().unwrap_or_default();
        let mut row = vec![
            self.dataset.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.tau.clone(),
            self.algorithm.to_string(),
            self.rulemask.clone(),
            self.size.to_string(),
            format!("{:.3}", self.runtime_ms),
            stats.explored_nodes.to_string(),
        ];
        row.extend(stats.rule_prunes().iter().map(u64::to_string));
        row.push(self.optimal.to_string());
        row.push(self.error.clone().unwrap_or_default());
        row
    }
}
