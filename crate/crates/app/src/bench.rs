//! Benchmark and ablation harness.

use std::io::Write;

use flexi_core::{brute_force_max_flexi, run_eba, run_fpa, Algorithm, Graph, SolverConfig, Tau};
use log::warn;

use crate::record::{RunRecord, CSV_HEADER};

pub struct Dataset {
    pub name: String,
    pub graph: Graph,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub taus: Vec<Tau>,
    /// Configuration of the main exact run.
    pub solver: SolverConfig,
    /// Also run the exact solver with each rule disabled in turn and with
    /// unsorted branching.
    pub ablation: bool,
    /// Also run the brute-force oracle (small graphs only).
    pub oracle: bool,
    pub oracle_cap: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            taus: vec![Tau::new(9, 10).expect("valid tau")],
            solver: SolverConfig::default(),
            ablation: false,
            oracle: false,
            oracle_cap: flexi_core::oracle::DEFAULT_NODE_CAP,
        }
    }
}

/// Exact-solver configurations for one cell: the main one, then the ablations.
pub fn ablation_configs(main: &SolverConfig, ablation: bool) -> Vec<SolverConfig> {
    let mut out = vec![main.clone()];
    if ablation {
        out.extend((1..=6).filter(|&r| main.rule(r)).map(|r| main.clone().without_rule(r)));
        if main.sort_candidates {
            out.push(SolverConfig {
                sort_candidates: false,
                ..main.clone()
            });
        }
    }
    out
}

/// Runs every (dataset, τ, algorithm, rule mask) cell in order. Timing covers
/// the solver only. A failing cell becomes a record with its error set.
pub fn run_bench(datasets: &[Dataset], cfg: &BenchConfig) -> Vec<RunRecord> {
    let mut records = Vec::new();
    for ds in datasets {
        let g = &ds.graph;
        for &tau in &cfg.taus {
            records.push(RunRecord::from_result(&ds.name, g, tau, &run_fpa(g, tau)));
            for solver in ablation_configs(&cfg.solver, cfg.ablation) {
                let outcome = run_eba(g, tau, &solver);
                records.push(RunRecord::from_eba(&ds.name, g, tau, &solver.rulemask(), &outcome));
            }
            if cfg.oracle {
                records.push(match brute_force_max_flexi(g, tau, cfg.oracle_cap) {
                    Ok(r) => RunRecord::from_result(&ds.name, g, tau, &r),
                    Err(e) => {
                        warn!("{}: {e}", ds.name);
                        RunRecord::failed(&ds.name, g, tau, Algorithm::Oracle, e.to_string())
                    }
                });
            }
        }
    }
    records
}

pub fn write_csv<W: Write>(records: &[RunRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(r.csv_row())?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(records: &[RunRecord], out: W) -> serde_json::Result<()> {
    serde_json::to_writer_pretty(out, records)
}
