//! Dataset ingestion, synthetic generators, benchmark harness and result
//! records for the `flexiclique` command line tool.

pub mod bench;
pub mod generate;
pub mod io;
pub mod record;

pub use bench::{run_bench, write_csv, write_json, BenchConfig, Dataset};
pub use generate::{gen_er, gen_planted, GenError};
pub use io::{load_edge_list, parse_edge_list, write_edge_list, InputError};
pub use record::RunRecord;
