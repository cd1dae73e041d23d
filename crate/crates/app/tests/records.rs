use flexi_app::bench::{ablation_configs, run_bench, write_csv, BenchConfig, Dataset};
use flexi_app::{load_edge_list, RunRecord};
use flexi_core::{Algorithm, PruneStats, SolverConfig, Tau};
use proptest::prelude::*;

fn arb_stats() -> impl Strategy<Value = PruneStats> {
    proptest::collection::vec(any::<u64>(), 10).prop_map(|v| PruneStats {
        explored_nodes: v[0],
        prunes_rule1: v[1],
        prunes_rule2: v[2],
        prunes_rule3: v[3],
        prunes_rule4: v[4],
        prunes_rule5: v[5],
        prunes_rule6: v[6],
        prunes_scope_bound: v[7],
        incumbent_updates: v[8],
        invariant_violations: v[9],
    })
}

fn arb_record() -> impl Strategy<Value = RunRecord> {
    (
        ".{0,12}",
        any::<u32>(),
        any::<u32>(),
        prop::sample::select(vec![Algorithm::Fpa, Algorithm::Eba, Algorithm::Oracle]),
        proptest::collection::vec("[a-z0-9]{1,5}", 0..8),
        any::<f64>().prop_filter("finite", |x| x.is_finite()),
        proptest::option::of(arb_stats()),
        any::<bool>(),
        proptest::option::of(".{0,20}"),
    )
        .prop_map(|(dataset, n, m, algorithm, members, runtime_ms, stats, optimal, error)| RunRecord {
            dataset,
            n: n as usize,
            m: m as usize,
            tau: "9/10".into(),
            algorithm,
            rulemask: "110111u".into(),
            size: members.len(),
            members,
            runtime_ms,
            stats,
            optimal,
            error,
        })
}

proptest! {
    #[test]
    fn json_round_trip(record in arb_record()) {
        let text = serde_json::to_string(&record).unwrap();
        let back: RunRecord = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, record);
    }
}

fn karate() -> Dataset {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../datasets/karate.txt");
    Dataset {
        name: "karate".into(),
        graph: load_edge_list(&path).unwrap(),
    }
}

#[test]
fn karate_bench_rows() {
    let records = run_bench(&[karate()], &BenchConfig::default());
    assert_eq!(records.len(), 2);
    let (fpa, eba) = (&records[0], &records[1]);
    assert_eq!((fpa.algorithm, eba.algorithm), (Algorithm::Fpa, Algorithm::Eba));
    assert!(eba.size >= fpa.size);
    assert!(eba.optimal);
    assert_eq!(eba.rulemask, "111111s");
    assert_eq!(fpa.rulemask, "-");
    // members are external ids
    let g = &karate().graph;
    assert!(eba.members.iter().all(|m| g.labels().contains(m)));
}

#[test]
fn ablation_rows_agree() {
    let cfg = BenchConfig {
        ablation: true,
        ..BenchConfig::default()
    };
    let records = run_bench(&[karate()], &cfg);
    assert_eq!(records.len(), 1 + 8);
    let sizes: Vec<_> = records[1..].iter().map(|r| r.size).collect();
    assert!(sizes.iter().all(|&s| s == sizes[0]));
    let no6 = records.iter().find(|r| r.rulemask == "111110s").unwrap();
    assert_eq!(no6.size, records[1].size);
}

#[test]
fn ablation_masks() {
    let masks: Vec<_> = ablation_configs(&SolverConfig::default(), true)
        .iter()
        .map(SolverConfig::rulemask)
        .collect();
    assert_eq!(
        masks,
        ["111111s", "011111s", "101111s", "110111s", "111011s", "111101s", "111110s", "111111u"]
    );
}

#[test]
fn empty_bench_writes_only_a_header() {
    let records = run_bench(&[], &BenchConfig::default());
    assert!(records.is_empty());
    let mut out = Vec::new();
    write_csv(&records, &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    assert_eq!(
        text.trim(),
        "dataset,n,m,tau,algorithm,rulemask,size,runtime_ms,explored,prunes_r1,prunes_r2,prunes_r3,prunes_r4,prunes_r5,prunes_r6,optimal,error"
    );
}

#[test]
fn oracle_rows_refuse_large_graphs() {
    let cfg = BenchConfig {
        oracle: true,
        taus: vec![Tau::new(1, 2).unwrap()],
        ..BenchConfig::default()
    };
    let records = run_bench(&[karate()], &cfg);
    let oracle = records.last().unwrap();
    assert_eq!(oracle.algorithm, Algorithm::Oracle);
    assert!(oracle.error.as_deref().unwrap().contains("limited to 20"));
}
