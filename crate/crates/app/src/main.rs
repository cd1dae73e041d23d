use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flexi_app::bench::{run_bench, write_csv, write_json, BenchConfig, Dataset};
use flexi_app::{gen_er, gen_planted, load_edge_list, write_edge_list, RunRecord};
use flexi_core::oracle::DEFAULT_NODE_CAP;
use flexi_core::{brute_force_max_flexi, run_eba, run_fpa, Algorithm, Graph, SolverConfig, Tau};
use log::{error, info};

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "flexiclique", version, about = "Maximum Flexi-clique search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact maximum Flexi-clique (branch and bound)
    Solve {
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        solver: SolverArgs,
        /// Print pruning statistics
        #[arg(long)]
        stats: bool,
    },
    /// Core-seeded peeling heuristic
    Heuristic {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Brute force over all subsets (at most 20 nodes)
    Oracle {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run heuristic and exact solver over several datasets and taus
    Bench {
        /// Edge list files; repeat for several
        #[arg(long = "input")]
        inputs: Vec<PathBuf>,
        /// Exponents; repeat for several
        #[arg(long = "tau", value_parser = parse_tau, default_value = "0.9")]
        taus: Vec<Tau>,
        #[command(flatten)]
        solver: SolverArgs,
        /// Also run with each rule disabled and with unsorted branching
        #[arg(long)]
        ablation: bool,
        /// Also run the brute-force oracle
        #[arg(long)]
        oracle: bool,
        /// JSON instead of CSV
        #[arg(long)]
        json: bool,
        /// Output file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random graph as an edge list
    Gen {
        #[arg(long, value_enum, default_value = "er")]
        model: Model,
        #[arg(long)]
        n: usize,
        /// Number of (background) edges
        #[arg(long, default_value_t = 0)]
        m: usize,
        /// Planted clique size
        #[arg(long, default_value_t = 0)]
        clique_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Er,
    Planted,
}

#[derive(Args)]
struct RunArgs {
    /// Whitespace-separated edge list
    #[arg(long)]
    input: PathBuf,
    /// Exponent in [0, 1), as a decimal or a fraction such as 3/4
    #[arg(long, value_parser = parse_tau, default_value = "0.9")]
    tau: Tau,
    /// Print the run record as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SolverArgs {
    /// Wall-clock budget in seconds; the best solution so far is reported
    #[arg(long)]
    timeout_s: Option<f64>,
    /// Disable a pruning rule (1-6); repeatable
    #[arg(long = "disable-rule", value_parser = clap::value_parser!(u8).range(1..=6))]
    disable_rule: Vec<u8>,
    /// Branch on candidates in id order
    #[arg(long)]
    no_sort: bool,
    /// Start from an empty incumbent instead of the heuristic's result
    #[arg(long)]
    no_heuristic_seed: bool,
}

impl SolverArgs {
    fn config(&self) -> Result<SolverConfig, String> {
        let time_budget = match self.timeout_s {
            Some(s) if !(s.is_finite() && s >= 0.0) => {
                return Err(format!("invalid --timeout-s {s}"))
            }
            Some(s) => Some(Duration::from_secs_f64(s)),
            None => None,
        };
        let mut cfg = SolverConfig {
            sort_candidates: !self.no_sort,
            heuristic_seed: !self.no_heuristic_seed,
            time_budget,
            ..SolverConfig::default()
        };
        for &r in &self.disable_rule {
            cfg = cfg.without_rule(r.into());
        }
        Ok(cfg)
    }
}

fn parse_tau(s: &str) -> Result<Tau, String> {
    s.parse().map_err(|e: flexi_core::TauError| e.to_string())
}

fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load(path: &Path) -> Result<Graph, ExitCode> {
    load_edge_list(path).map_err(|e| {
        error!("{e}");
        ExitCode::from(EXIT_INPUT)
    })
}

fn print_record(record: &RunRecord, json: bool, stats: bool) -> io::Result<()> {
    let mut out = io::stdout().lock();
    if json {
        serde_json::to_writer_pretty(&mut out, record)?;
        return writeln!(out);
    }
    writeln!(out, "dataset    {} (n={}, m={})", record.dataset, record.n, record.m)?;
    writeln!(out, "tau        {}", record.tau)?;
    writeln!(out, "algorithm  {}", record.algorithm)?;
    writeln!(out, "size       {}", record.size)?;
    writeln!(out, "members    {}", record.members.join(" "))?;
    writeln!(out, "runtime_ms {:.3}", record.runtime_ms)?;
    writeln!(out, "optimal    {}", record.optimal)?;
    if let (true, Some(s)) = (stats, &record.stats) {
        writeln!(out, "explored   {}", s.explored_nodes)?;
        for (i, c) in s.rule_prunes().iter().enumerate() {
            writeln!(out, "rule{}      {c}", i + 1)?;
        }
        writeln!(out, "scopebound {}", s.prunes_scope_bound)?;
        writeln!(out, "updates    {}", s.incumbent_updates)?;
    }
    Ok(())
}

fn open_out(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn execute(command: Command) -> Result<ExitCode, ExitCode> {
    let io_fail = |e: &dyn std::fmt::Display| {
        error!("{e}");
        ExitCode::from(EXIT_INPUT)
    };
    match command {
        Command::Solve { run, solver, stats } => {
            let cfg = solver.config().map_err(|e| {
                error!("{e}");
                ExitCode::from(EXIT_USAGE)
            })?;
            let g = load(&run.input)?;
            let outcome = run_eba(&g, run.tau, &cfg);
            let record = RunRecord::from_eba(&dataset_name(&run.input), &g, run.tau, &cfg.rulemask(), &outcome);
            print_record(&record, run.json, stats).map_err(|e| io_fail(&e))?;
            if !outcome.optimal {
                info!("time budget exhausted; result may not be optimal");
                return Ok(ExitCode::from(EXIT_TIMEOUT));
            }
        }
        Command::Heuristic { run } => {
            let g = load(&run.input)?;
            let result = run_fpa(&g, run.tau);
            let record = RunRecord::from_result(&dataset_name(&run.input), &g, run.tau, &result);
            print_record(&record, run.json, false).map_err(|e| io_fail(&e))?;
        }
        Command::Oracle { run } => {
            let g = load(&run.input)?;
            let result = brute_force_max_flexi(&g, run.tau, DEFAULT_NODE_CAP).map_err(|e| io_fail(&e))?;
            let record = RunRecord::from_result(&dataset_name(&run.input), &g, run.tau, &result);
            print_record(&record, run.json, false).map_err(|e| io_fail(&e))?;
        }
        Command::Bench { inputs, taus, solver, ablation, oracle, json, out } => {
            let cfg = BenchConfig {
                taus,
                solver: solver.config().map_err(|e| {
                    error!("{e}");
                    ExitCode::from(EXIT_USAGE)
                })?,
                ablation,
                oracle,
                ..BenchConfig::default()
            };
            let mut records = Vec::new();
            for path in &inputs {
                let name = dataset_name(path);
                match load_edge_list(path) {
                    Ok(graph) => records.extend(run_bench(&[Dataset { name, graph }], &cfg)),
                    Err(e) => {
                        error!("{e}");
                        let empty = Graph::from_edges(0, []).expect("empty graph");
                        for &tau in &cfg.taus {
                            records.push(RunRecord::failed(&name, &empty, tau, Algorithm::Eba, e.to_string()));
                        }
                    }
                }
            }
            let w = open_out(&out).map_err(|e| io_fail(&e))?;
            if json {
                write_json(&records, w).map_err(|e| io_fail(&e))?;
                if out.is_none() {
                    println!();
                }
            } else {
                write_csv(&records, w).map_err(|e| io_fail(&e))?;
            }
        }
        Command::Gen { model, n, m, clique_size, seed, out } => {
            let g = match model {
                Model::Er => gen_er(n, m, seed),
                Model::Planted => gen_planted(n, m, clique_size, seed).map(|(g, planted)| {
                    info!("planted nodes: {:?}", planted.as_slice());
                    g
                }),
            }
            .map_err(|e| {
                error!("{e}");
                ExitCode::from(EXIT_USAGE)
            })?;
            let w = open_out(&out).map_err(|e| io_fail(&e))?;
            write_edge_list(&g, w).map_err(|e| io_fail(&e))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli.command) {
        Ok(code) | Err(code) => code,
    }
}
